//! Degree-two covers of the projective line: Artin-Schreier curves
//! y^2 + y = f(x) in characteristic 2 and Kummer curves y^2 = f(x) in odd
//! characteristic.
//!
//! Ramification is read off the standard form of f. Every other base place
//! splits or stays inert according to a residue test: the absolute trace of
//! f(P) for Artin-Schreier, the quadratic character of the normalized residue
//! for Kummer.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfarith::{make_field, Embedding, FieldSpec, QuadraticCharacter};
use crate::polyring::{
    cmp_polys, place_valuation, places_of_degree, residue_field_with, RationalFunction,
    RationalPlace, UniPoly,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverKind {
    ArtinSchreier,
    Kummer,
}

impl fmt::Display for CoverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverKind::ArtinSchreier => "artin-schreier",
            CoverKind::Kummer => "kummer",
        })
    }
}

/// y^2 + y = f or y^2 = f over GF(q)(x).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverModel {
    kind: CoverKind,
    f: RationalFunction,
}

impl CoverModel {
    pub fn new(kind: CoverKind, f: RationalFunction) -> Self {
        CoverModel { kind, f }
    }

    pub fn kind(&self) -> CoverKind {
        self.kind
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        self.f.field()
    }

    pub fn function(&self) -> &RationalFunction {
        &self.f
    }
}

impl fmt::Display for CoverModel {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CoverKind::ArtinSchreier => write!(fm, "y^2+y = {}", self.f),
            CoverKind::Kummer => write!(fm, "y^2 = {}", self.f),
        }
    }
}

/// A cover whose equation has passed [`validate_standard_form`].
#[derive(Debug, Clone)]
pub struct ValidatedCover {
    model: CoverModel,
    /// Ramified base places with v_P(f), in place order.
    ramified: Vec<(RationalPlace, i64)>,
}

impl ValidatedCover {
    pub fn model(&self) -> &CoverModel {
        &self.model
    }

    pub fn ramified_places(&self) -> impl Iterator<Item = &RationalPlace> {
        self.ramified.iter().map(|(p, _)| p)
    }

    fn ramified_valuation(&self, place: &RationalPlace) -> Option<i64> {
        self.ramified
            .iter()
            .find(|(p, _)| p == place)
            .map(|&(_, v)| v)
    }
}

fn place_order(a: &RationalPlace, b: &RationalPlace) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| match (a, b) {
        (RationalPlace::Finite(u), RationalPlace::Finite(w)) => cmp_polys(u, w),
        (RationalPlace::Finite(_), RationalPlace::Infinite) => std::cmp::Ordering::Less,
        (RationalPlace::Infinite, RationalPlace::Finite(_)) => std::cmp::Ordering::Greater,
        _ => std::cmp::Ordering::Equal,
    })
}

/// Places where f has a zero or pole, with v_P(f).
fn support(f: &RationalFunction) -> Result<Vec<(RationalPlace, i64)>> {
    let mut out = Vec::new();
    for (u, m) in f.numerator().irreducible_factors()? {
        out.push((RationalPlace::Finite(u), m as i64));
    }
    for (u, m) in f.denominator().irreducible_factors()? {
        out.push((RationalPlace::Finite(u), -(m as i64)));
    }
    let v_inf = place_valuation(f, &RationalPlace::Infinite)?;
    if v_inf != 0 {
        out.push((RationalPlace::Infinite, v_inf));
    }
    out.sort_by(|a, b| place_order(&a.0, &b.0));
    Ok(out)
}

/// Checks that the equation is in standard form and records the ramified places.
///
/// Artin-Schreier: characteristic 2, every pole of f has odd order, and f has
/// at least one pole. Kummer: odd characteristic and f is not a constant times
/// a square, so at least one place has odd valuation.
pub fn validate_standard_form(model: &CoverModel) -> Result<ValidatedCover> {
    let f = &model.f;
    if f.is_zero() {
        return Err(Error::NotStandardForm("f = 0".into()));
    }
    let p = model.base().characteristic();
    let support = support(f)?;
    let ramified: Vec<(RationalPlace, i64)> = match model.kind {
        CoverKind::ArtinSchreier => {
            if p != 2 {
                return Err(Error::NotStandardForm(format!(
                    "Artin-Schreier covers need characteristic 2, got {p}"
                )));
            }
            let poles: Vec<_> = support.into_iter().filter(|&(_, v)| v < 0).collect();
            if let Some((place, v)) = poles.iter().find(|(_, v)| v % 2 == 0) {
                return Err(Error::NotStandardForm(format!(
                    "pole of even order {} at {place}",
                    -v
                )));
            }
            if poles.is_empty() {
                return Err(Error::NotStandardForm(format!("{f} has no poles")));
            }
            poles
        }
        CoverKind::Kummer => {
            if p == 2 {
                return Err(Error::EvenCharacteristic);
            }
            let odd: Vec<_> = support.into_iter().filter(|&(_, v)| v % 2 != 0).collect();
            if odd.is_empty() {
                return Err(Error::NotStandardForm(format!(
                    "{f} is a constant times a square"
                )));
            }
            odd
        }
    };
    Ok(ValidatedCover {
        model: model.clone(),
        ramified,
    })
}

/// Ramification at one base place of a degree-two cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamificationDatum {
    #[serde(serialize_with = "serialize_display")]
    pub place: RationalPlace,
    pub degree: u32,
    pub e: u32,
    /// Different exponent d_P.
    pub different_exponent: u32,
}

fn serialize_display<S: serde::Serializer, T: fmt::Display>(
    v: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// e = 2 everywhere; d_P = m_P + 1 at a pole of order m_P (wild), d_P = 1 (tame).
pub fn ramification_data(cover: &ValidatedCover) -> Vec<RamificationDatum> {
    cover
        .ramified
        .iter()
        .map(|(place, v)| RamificationDatum {
            place: place.clone(),
            degree: place.degree() as u32,
            e: 2,
            different_exponent: match cover.model.kind {
                CoverKind::ArtinSchreier => (-v + 1) as u32,
                CoverKind::Kummer => 1,
            },
        })
        .collect()
}

/// Genus from Riemann-Hurwitz over the genus-0 base: 2g - 2 = -4 + deg Diff.
pub fn cover_genus(cover: &ValidatedCover) -> u32 {
    let diff: u32 = ramification_data(cover)
        .iter()
        .map(|r| r.different_exponent * r.degree)
        .sum();
    (diff - 2) / 2
}

/// How a base place behaves in the cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    Ramified,
    Split,
    Inert,
}

impl Splitting {
    /// (e, f) for each place above; sum of e f is always 2.
    pub fn places_above(self) -> Vec<(u32, u32)> {
        match self {
            Splitting::Ramified => vec![(2, 1)],
            Splitting::Split => vec![(1, 1), (1, 1)],
            Splitting::Inert => vec![(1, 2)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaceDecomposition {
    #[serde(serialize_with = "serialize_display")]
    pub place: RationalPlace,
    pub degree: u32,
    pub splitting: Splitting,
}

fn decompose_with(
    cover: &ValidatedCover,
    place: &RationalPlace,
    embedding: &Embedding,
) -> Result<Splitting> {
    if cover.ramified_valuation(place).is_some() {
        return Ok(Splitting::Ramified);
    }
    let residue = residue_field_with(place, embedding)?;
    let k = residue.field();
    let f = &cover.model.f;
    match cover.model.kind {
        CoverKind::ArtinSchreier => {
            let c = residue.eval(f)?;
            Ok(if k.trace(c) == 0 {
                Splitting::Split
            } else {
                Splitting::Inert
            })
        }
        CoverKind::Kummer => {
            let v = place_valuation(f, place)?;
            let unit = match place {
                RationalPlace::Finite(u) => f.mul_power(u, -v)?,
                RationalPlace::Infinite => f.mul_power(&UniPoly::x(f.field()), v)?,
            };
            Ok(match k.quadratic_character(residue.eval(&unit)?)? {
                QuadraticCharacter::Square => Splitting::Split,
                QuadraticCharacter::NonSquare => Splitting::Inert,
                QuadraticCharacter::Zero => {
                    return Err(Error::Internal(format!("unit at {place} has zero residue")))
                }
            })
        }
    }
}

/// Decomposition of one base place.
pub fn decompose_place(cover: &ValidatedCover, place: &RationalPlace) -> Result<Splitting> {
    let base = cover.model.base();
    let target = make_field(base.characteristic(), base.degree() * place.degree() as u32)?;
    decompose_with(cover, place, &Embedding::new(base, &target)?)
}

/// Decompositions of all base places of degree `d`, in place order.
pub fn place_decompositions(cover: &ValidatedCover, d: u32) -> Result<Vec<PlaceDecomposition>> {
    let base = cover.model.base();
    let target = make_field(base.characteristic(), base.degree() * d)?;
    let embedding = Embedding::new(base, &target)?;
    places_of_degree(base, d as usize)
        .into_par_iter()
        .map(|place| {
            let splitting = decompose_with(cover, &place, &embedding)?;
            Ok(PlaceDecomposition {
                place,
                degree: d,
                splitting,
            })
        })
        .collect()
}

/// B_1..B_n: numbers of places of each degree, complete through n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlaceCensus {
    counts: Vec<u64>,
}

impl PlaceCensus {
    pub fn from_vec(counts: Vec<u64>) -> Self {
        PlaceCensus { counts }
    }

    /// Highest degree for which the count is known.
    pub fn complete_through(&self) -> u32 {
        self.counts.len() as u32
    }

    /// B_d, or None beyond the complete range.
    pub fn get(&self, d: u32) -> Option<u64> {
        if d == 0 {
            return None;
        }
        self.counts.get(d as usize - 1).copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.counts
    }

    pub fn truncate(&self, n: u32) -> PlaceCensus {
        PlaceCensus {
            counts: self.counts[..self.counts.len().min(n as usize)].to_vec(),
        }
    }

    /// Nonzero entries as degree -> count.
    pub fn nonzero(&self) -> std::collections::BTreeMap<u32, u64> {
        (1..=self.complete_through())
            .filter_map(|d| Some((d, self.get(d)?)))
            .filter(|&(_, b)| b > 0)
            .collect()
    }
}

impl fmt::Display for PlaceCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero()
            .iter()
            .map(|(d, b)| format!("{d}:{b}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Counts the places of the cover of each degree up to `d_max`.
///
/// Above a base place of degree d: one place of degree d if ramified, two if
/// split, one of degree 2d if inert (kept only when 2d <= d_max).
pub fn place_census(cover: &ValidatedCover, d_max: u32) -> Result<PlaceCensus> {
    let mut counts = vec![0u64; d_max as usize];
    for d in 1..=d_max {
        for pd in place_decompositions(cover, d)? {
            let i = d as usize - 1;
            match pd.splitting {
                Splitting::Ramified => counts[i] += 1,
                Splitting::Split => counts[i] += 2,
                Splitting::Inert => {
                    if 2 * d <= d_max {
                        counts[2 * i + 1] += 1;
                    }
                }
            }
        }
    }
    Ok(PlaceCensus::from_vec(counts))
}

/// N_n = sum_{d | n} d B_d for n = 1..up_to.
pub fn census_to_counts(census: &PlaceCensus, up_to: u32) -> Result<Vec<u64>> {
    if up_to > census.complete_through() {
        return Err(Error::Insufficient(format!(
            "census is complete through degree {}, asked for {up_to}",
            census.complete_through()
        )));
    }
    Ok((1..=up_to as u64)
        .map(|n| {
            crate::polyring::divisors(n)
                .into_iter()
                .map(|d| d * census.counts[d as usize - 1])
                .sum()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zetafn::{census_from_counts, l_polynomial, PointCounts};

    fn cover(kind: CoverKind, p: u32, k: u32, num: &str, den: &str) -> ValidatedCover {
        let field = make_field(p, k).unwrap();
        let f = RationalFunction::parse(num, den, &field).unwrap();
        validate_standard_form(&CoverModel::new(kind, f)).unwrap()
    }

    #[test]
    fn elliptic_artin_schreier() {
        let c = cover(CoverKind::ArtinSchreier, 2, 1, "x^3+x+1", "1");
        let data = ramification_data(&c);
        assert_eq!(data.len(), 1);
        assert_eq!(data[0].place, RationalPlace::Infinite);
        assert_eq!(data[0].different_exponent, 4);
        assert_eq!(cover_genus(&c), 1);
        let census = place_census(&c, 4).unwrap();
        let counts = census_to_counts(&census, 4).unwrap();
        assert_eq!(counts[0], 1);
        let l = l_polynomial(&PointCounts::new(2, 1, counts[..1].to_vec()).unwrap()).unwrap();
        assert_eq!(l.coeffs(), &[1, -2, 2]);
        assert_eq!(l.class_number().unwrap(), 1);
    }

    #[test]
    fn genus_two_artin_schreier() {
        let c = cover(CoverKind::ArtinSchreier, 2, 1, "x^5+x^3+1", "1");
        assert_eq!(ramification_data(&c)[0].different_exponent, 6);
        assert_eq!(cover_genus(&c), 2);
        let c = cover(CoverKind::ArtinSchreier, 2, 1, "x^3+x^2+1", "x^3+x+1");
        assert_eq!(cover_genus(&c), 2);
    }

    #[test]
    fn kummer_over_gf3() {
        let c = cover(CoverKind::Kummer, 3, 1, "x^3+2x+2", "1");
        let data = ramification_data(&c);
        assert_eq!(data.len(), 2);
        assert_eq!(data[0].place, RationalPlace::Infinite);
        assert_eq!(data[1].degree, 3);
        assert!(data.iter().all(|r| r.different_exponent == 1));
        assert_eq!(cover_genus(&c), 1);
    }

    #[test]
    fn splitting_sums_to_two() {
        let c = cover(CoverKind::ArtinSchreier, 2, 2, "x^3+a", "1");
        for d in 1..=3 {
            for pd in place_decompositions(&c, d).unwrap() {
                let s: u32 = pd.splitting.places_above().iter().map(|(e, f)| e * f).sum();
                assert_eq!(s, 2);
            }
        }
        assert_eq!(cover_genus(&c), 1);
    }

    #[test]
    fn rejects_non_standard_forms() {
        let f2 = make_field(2, 1).unwrap();
        let f3 = make_field(3, 1).unwrap();
        let model = |kind, n: &str, field| {
            CoverModel::new(kind, RationalFunction::parse(n, "1", field).unwrap())
        };
        for (m, why) in [
            (model(CoverKind::ArtinSchreier, "x^4+x", &f2), "even pole"),
            (model(CoverKind::ArtinSchreier, "1", &f2), "constant"),
            (
                model(CoverKind::ArtinSchreier, "x^3", &f3),
                "characteristic",
            ),
            (model(CoverKind::Kummer, "x^3+x", &f2), "characteristic"),
            (model(CoverKind::Kummer, "2x^2+x+2", &f3), "square"),
        ] {
            assert!(validate_standard_form(&m).is_err(), "{why}");
        }
    }

    #[test]
    fn census_round_trip() {
        let census = PlaceCensus::from_vec(vec![0, 0, 0, 1, 3]);
        let counts = census_to_counts(&census, 5).unwrap();
        assert_eq!(counts, vec![0, 0, 0, 4, 15]);
        let back = census_from_counts(&PointCounts::new(2, 4, counts).unwrap()).unwrap();
        assert_eq!(back, census);
        assert!(census_to_counts(&census, 6).is_err());
        assert_eq!(census.to_string(), "{4:1, 5:3}");
    }
}
