//! Invariant checks run by `ffc selftest`.

use std::sync::Arc;

use serde::Serialize;

use ffc_core::gfarith::{make_field, FieldSpec};
use ffc_core::polyring::{enumerate_monic_irreducibles, irreducible_count, UniPoly};
use ffc_core::zetafn::{census_from_slice, extend_counts, l_polynomial, PointCounts};

use crate::report::Format;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

fn check(name: impl Into<String>, result: Result<(), String>) -> Check {
    let (passed, detail) = match result {
        Ok(()) => (true, String::new()),
        Err(d) => (false, d),
    };
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

fn field_checks(f: &Arc<FieldSpec>) -> Vec<Check> {
    let mut out = Vec::new();
    let modulus = UniPoly::new(
        &make_field(f.characteristic(), 1).unwrap(),
        f.modulus().to_vec(),
    );
    out.push(check(
        format!("{f}: modulus is the least monic irreducible"),
        {
            let least = if f.degree() == 1 {
                None
            } else {
                enumerate_monic_irreducibles(modulus.field(), f.degree() as usize)
                    .into_iter()
                    .next()
            };
            match least {
                Some(m) if m != modulus => Err(format!("modulus {modulus}, least irreducible {m}")),
                _ => Ok(()),
            }
        },
    ));
    out.push(check(format!("{f}: field axioms"), {
        let mut err = Ok(());
        'outer: for a in f.elements() {
            if f.pow(a, f.size()) != a {
                err = Err(format!("{a}^q != {a}"));
                break;
            }
            if a != 0 && f.mul(a, f.inv(a).unwrap_or(0)) != 1 {
                err = Err(format!("{a} has no inverse"));
                break;
            }
            for b in f.elements().take(32) {
                for c in f.elements().take(8) {
                    if f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)) {
                        err = Err(format!("distributivity fails at ({a}, {b}, {c})"));
                        break 'outer;
                    }
                }
                if f.mul(a, b) != f.mul(b, a) {
                    err = Err(format!("{a}*{b} != {b}*{a}"));
                    break 'outer;
                }
            }
        }
        err
    }));
    out
}

fn counting_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (p, k) in [(2, 1), (3, 1), (2, 2)] {
        let f = make_field(p, k).unwrap();
        out.push(check(
            format!("irreducible counts over {f}, degree <= 6"),
            {
                (1..=6).try_for_each(|d| {
                    let n = enumerate_monic_irreducibles(&f, d).len() as u64;
                    let expected = irreducible_count(f.size(), d as u64);
                    if n == expected {
                        Ok(())
                    } else {
                        Err(format!("degree {d}: {n} found, {expected} expected"))
                    }
                })
            },
        ));
    }
    out.push(check("zeta round trip on N_1 = 1, q = 2, g = 1", {
        (|| {
            let l = l_polynomial(&PointCounts::new(2, 1, vec![1]).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let ext = extend_counts(&l, 4).map_err(|e| e.to_string())?;
            let census = census_from_slice(ext.counts()).map_err(|e| e.to_string())?;
            if l.coeffs() != [1, -2, 2] || l.class_number() != Ok(1) {
                return Err(format!("L = {:?}", l.coeffs()));
            }
            let back = ffc_core::covers::census_to_counts(&census, 4).map_err(|e| e.to_string())?;
            if back != ext.counts() {
                return Err(format!("{back:?} != {:?}", ext.counts()));
            }
            Ok(())
        })()
    }));
    out
}

/// Checks for the given fields plus the field-independent ones.
pub fn run(fields: &[Arc<FieldSpec>]) -> Vec<Check> {
    let mut out: Vec<Check> = fields.iter().flat_map(field_checks).collect();
    out.extend(counting_checks());
    out
}

pub fn run_default() -> Vec<Check> {
    let fields: Vec<_> = [
        (2, 1),
        (2, 2),
        (2, 3),
        (2, 4),
        (2, 5),
        (2, 6),
        (3, 1),
        (3, 2),
        (3, 3),
    ]
    .into_iter()
    .map(|(p, k)| make_field(p, k).expect("supported field"))
    .collect();
    run(&fields)
}

pub fn render(checks: &[Check], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(checks).expect("checks serialize");
            s.push('\n');
            s
        }
        Format::Csv | Format::Text => {
            let mut s = String::new();
            for c in checks {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                s.push_str(&format!("{mark} {}", c.name));
                if !c.detail.is_empty() {
                    s.push_str(&format!(": {}", c.detail));
                }
                s.push('\n');
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            s.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
            s
        }
    }
}
