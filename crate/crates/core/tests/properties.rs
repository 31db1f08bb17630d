use std::sync::Arc;

use proptest::prelude::*;

use ffc_core::covers::{census_to_counts, PlaceCensus};
use ffc_core::gfarith::{make_field, FieldSpec};
use ffc_core::polyring::{
    enumerate_monic_irreducibles, irreducible_count, moebius_transport, Moebius, RationalPlace,
    UniPoly,
};
use ffc_core::varieties::{rational_points, MultiPoly, ProjectiveCurveModel};
use ffc_core::zetafn::{census_from_slice, extend_counts, l_polynomial, LPoly};
use ffc_core::Error;

fn field(p: u32, k: u32) -> Arc<FieldSpec> {
    make_field(p, k).unwrap()
}

#[test]
fn irreducible_counts_match_formula() {
    for (p, k) in [(2, 1), (3, 1), (2, 2)] {
        let f = field(p, k);
        for d in 1..=8 {
            let found = enumerate_monic_irreducibles(&f, d).len() as u64;
            assert_eq!(
                found,
                irreducible_count(f.size(), d as u64),
                "q = {} d = {d}",
                f.size()
            );
        }
    }
}

fn small_field() -> impl Strategy<Value = Arc<FieldSpec>> {
    prop::sample::select(vec![(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)])
        .prop_map(|(p, k)| field(p, k))
}

fn field_and_elements(n: usize) -> impl Strategy<Value = (Arc<FieldSpec>, Vec<u32>)> {
    small_field().prop_flat_map(move |f| {
        let q = f.size() as u32;
        (Just(f), prop::collection::vec(0..q, n))
    })
}

/// Product of g Weil factors 1 - t_i T + q T^2 with t_i^2 <= 4q.
fn weil_polynomial() -> impl Strategy<Value = (u64, u32, Vec<i128>)> {
    (prop::sample::select(vec![2u64, 3, 4]), 1u32..=4).prop_flat_map(|(q, g)| {
        let bound = (4.0 * q as f64).sqrt().floor() as i128;
        (
            Just(q),
            Just(g),
            prop::collection::vec(-bound..=bound, g as usize),
        )
            .prop_map(|(q, g, traces)| {
                let mut coeffs = vec![1i128];
                for t in traces {
                    let factor = [1, -t, q as i128];
                    let mut next = vec![0i128; coeffs.len() + 2];
                    for (i, &a) in coeffs.iter().enumerate() {
                        for (j, &b) in factor.iter().enumerate() {
                            next[i + j] += a * b;
                        }
                    }
                    coeffs = next;
                }
                (q, g, coeffs)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms((f, v) in field_and_elements(3)) {
        let (a, b, c) = (v[0], v[1], v[2]);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        prop_assert_eq!(f.pow(a, f.size()), a);
        prop_assert!(f.trace(a) < f.characteristic());
    }

    #[test]
    fn division_identity((f, v) in field_and_elements(12)) {
        let a = UniPoly::new(&f, v[..7].to_vec());
        let b = UniPoly::new(&f, v[7..].to_vec());
        prop_assume!(!b.is_zero());
        let (quo, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(quo.mul(&b).unwrap().add(&r).unwrap(), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn transport_keeps_degree_and_inverts(
        (f, v) in field_and_elements(4),
        d in 1usize..=4,
        pick in any::<prop::sample::Index>(),
    ) {
        let Ok(map) = Moebius::new(&f, v[0], v[1], v[2], v[3]) else { return Ok(()) };
        let places = enumerate_monic_irreducibles(&f, d);
        let place = RationalPlace::Finite(places[pick.index(places.len())].clone());
        let image = moebius_transport(&place, &map).unwrap();
        prop_assert_eq!(image.degree(), d);
        prop_assert_eq!(moebius_transport(&image, &map.inverse()).unwrap(), place);
    }

    #[test]
    fn weil_polynomials_round_trip((q, g, coeffs) in weil_polynomial()) {
        let l = LPoly::new(q, g, coeffs).unwrap();
        prop_assert_eq!(l.coeffs()[0], 1);
        prop_assert!(l.class_number().unwrap() >= 1);
        match extend_counts(&l, 2 * g + 2) {
            Ok(counts) => {
                let head = ffc_core::zetafn::PointCounts::new(q, g, counts.counts()[..g as usize].to_vec()).unwrap();
                prop_assert_eq!(&l_polynomial(&head).unwrap(), &l);
            }
            // Too many inverse roots near +sqrt(q) for the curve to exist.
            Err(Error::NegativeCount(_)) => {}
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn census_counts_round_trip(b in prop::collection::vec(0u64..200, 1..10)) {
        let census = PlaceCensus::from_vec(b.clone());
        let n = b.len() as u32;
        let counts = census_to_counts(&census, n).unwrap();
        prop_assert_eq!(census_from_slice(&counts).unwrap(), census);
    }
}

#[test]
fn parallel_enumeration_matches_serial() {
    let f = field(2, 1);
    let model = ProjectiveCurveModel::space_curve(
        MultiPoly::parse("x2^3+x1x3^2+x4^3+x1^2x3+x3x4^2", &f, 4).unwrap(),
        MultiPoly::parse("x1x2+x3x4+x4^2", &f, 4).unwrap(),
    )
    .unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| rational_points(&model, 4).unwrap())
    };
    assert_eq!(run(1), run(4));
}
