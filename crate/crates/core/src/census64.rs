//! The 64 cubic-quadric pairs (C_i, Q_i + L(k)^2) over GF(2) that cut out
//! candidate genus-4 curves in P^3, where L(k) = k1 x1 + k2 x2 + k3 x3 + k4 x4.
//! In characteristic 2, L(k)^2 = k1 x1^2 + ... + k4 x4^2.
//!
//! Each row is checked against a reference table giving a point of low degree
//! on the curve. The one row without such a point is run through the full
//! zeta pipeline.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::covers::PlaceCensus;
use crate::error::{Error, Result};
use crate::gfarith::{make_field, FieldSpec};
use crate::text::parse_element;
use crate::varieties::{
    count_points, min_point_degree, point_degree, smoothness_probe, MultiPoly,
    ProjectiveCurveModel, ProjectivePoint,
};
use crate::zetafn::{
    census_from_counts, cyclic_extension_count, extend_counts, hurwitz_different_degree,
    l_polynomial, LPoly, PointCounts,
};

pub const CUBICS: [&str; 4] = [
    "x2^3+x1x3^2+x4^3+x1^2x3+x3x4^2",
    "x2^3+x1x3^2+x2^2x3+x2^2x4+x1^3+x3^2x4+x1^2x2+x2x4^2",
    "x2^2x3+x1x4^2+x3^3+x3^2x4+x1^2x2+x4^3+x1^2x3+x3x4^2",
    "x1^3+x1^2x3+x1x4^2+x2^2x4+x2x4^2+x3^3+x3x4^2+x4^3",
];

pub const QUADRICS: [&str; 4] = [
    "x1x2+x3x4",
    "x1x2+x1x3+x1x4+x2x4",
    "x1x3+x2x3+x2x4+x3x4",
    "x1x4+x2x3+x3x4",
];

/// Published rows: family, mask bits, expanded quadric, low-degree point.
const TABLE: &str = include_str!("../data/table64.txt");

/// (k1, k2, k3, k4) with k1 as the most significant bit of the row index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Mask(pub [u8; 4]);

impl Mask {
    pub fn from_index(i: u8) -> Self {
        Mask([(i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1])
    }

    pub fn index(self) -> u8 {
        self.0.iter().fold(0, |acc, &b| acc << 1 | b)
    }

    /// Compact form such as `1011`.
    pub fn bits(self) -> String {
        self.0.iter().map(|b| b.to_string()).collect()
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a},{b},{c},{d})")
    }
}

/// A point from the reference table, realized over GF(2), GF(4) or GF(8).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableWitness {
    pub text: String,
    pub point: ProjectivePoint,
    /// Degree of the field the coordinates are written in.
    pub claimed_degree: u32,
}

/// Parses `(1:0:a:1)` with `a` a root of t^2+t+1, or `(b:0:b^3:1)` with `b` a
/// root of t^3+t+1. Both polynomials are the canonical moduli, so the symbols
/// are the field generators.
pub fn parse_witness(text: &str) -> Result<TableWitness> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("witness {text:?} is not parenthesized")))?;
    let (k, symbol) = if inner.contains('b') {
        (3, 'b')
    } else if inner.contains('a') {
        (2, 'a')
    } else {
        (1, 'a')
    };
    let field = make_field(2, k)?;
    let coords = inner
        .split(':')
        .map(|c| parse_element(c.trim(), &field, symbol))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: coords.len(),
        });
    }
    Ok(TableWitness {
        text: text.trim().to_string(),
        point: ProjectivePoint::new(&field, coords)?,
        claimed_degree: k,
    })
}

fn symbol_for(field: &FieldSpec) -> char {
    if field.degree() == 3 {
        'b'
    } else {
        'a'
    }
}

/// One of the 64 pairs, with the tabulated data for it.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub family: u8,
    pub mask: Mask,
    pub cubic: MultiPoly,
    /// Q_i + L(k)^2.
    pub quadric: MultiPoly,
    /// The quadric as printed in the table.
    pub table_quadric: MultiPoly,
    /// None where the table reports only a point of degree 4.
    pub table_witness: Option<TableWitness>,
}

impl TableRow {
    pub fn model(&self) -> Result<ProjectiveCurveModel> {
        ProjectiveCurveModel::space_curve(self.cubic.clone(), self.quadric.clone())
    }
}

fn gf2() -> Arc<FieldSpec> {
    make_field(2, 1).expect("GF(2) is supported")
}

fn expanded_quadric(family: u8, mask: Mask) -> Result<MultiPoly> {
    let f = gf2();
    let mut q = MultiPoly::parse(QUADRICS[family as usize - 1], &f, 4)?;
    for (j, &k) in mask.0.iter().enumerate() {
        if k == 1 {
            let x = MultiPoly::variable(&f, 4, j);
            q = q.add(&x.mul(&x)?)?;
        }
    }
    Ok(q)
}

fn parse_table() -> Result<Vec<TableRow>> {
    let f = gf2();
    let mut rows = Vec::with_capacity(64);
    for line in TABLE
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [fam, bits, quadric, witness] = fields[..] else {
            return Err(Error::Parse(format!("bad table line {line:?}")));
        };
        let family: u8 = fam
            .parse()
            .map_err(|_| Error::Parse(format!("family in {line:?}")))?;
        let index =
            u8::from_str_radix(bits, 2).map_err(|_| Error::Parse(format!("mask in {line:?}")))?;
        let mask = Mask::from_index(index);
        rows.push(TableRow {
            family,
            mask,
            cubic: MultiPoly::parse(CUBICS[family as usize - 1], &f, 4)?,
            quadric: expanded_quadric(family, mask)?,
            table_quadric: MultiPoly::parse(quadric, &f, 4)?,
            table_witness: if witness == "-" {
                None
            } else {
                Some(parse_witness(witness)?)
            },
        });
    }
    rows.sort_by_key(|r| (r.family, r.mask.index()));
    Ok(rows)
}

/// All 64 rows, ordered by family and then by mask as a 4-bit integer.
pub fn build_family() -> Vec<TableRow> {
    static ROWS: OnceLock<Vec<TableRow>> = OnceLock::new();
    ROWS.get_or_init(|| parse_table().expect("embedded table is well formed"))
        .clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Pass,
    Mismatch,
    /// The search bound is too small to settle the row.
    Undetermined,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "pass",
            RowStatus::Mismatch => "mismatch",
            RowStatus::Undetermined => "undetermined",
        })
    }
}

/// Outcome of checking one row against the reference table.
#[derive(Debug, Clone)]
pub struct RowVerification {
    pub family: u8,
    pub mask: Mask,
    pub quadric: String,
    pub quadric_matches: bool,
    pub paper_witness: Option<String>,
    pub paper_degree: Option<u32>,
    pub witness_on_curve: Option<bool>,
    pub witness_degree: Option<u32>,
    /// Least degree of a point found with degree <= d_max, and the smallest
    /// such point.
    pub computed_min: Option<(u32, ProjectivePoint)>,
    pub d_max: u32,
    pub status: RowStatus,
    pub issues: Vec<String>,
}

impl RowVerification {
    pub fn computed_witness(&self) -> Option<String> {
        self.computed_min
            .as_ref()
            .map(|(_, p)| p.format_with(symbol_for(p.field())))
    }

    /// No point of degree <= 3, provided the search reached degree 3.
    pub fn is_survivor(&self) -> Option<bool> {
        match &self.computed_min {
            Some((d, _)) => Some(*d > 3),
            None if self.d_max >= 3 => Some(true),
            None => None,
        }
    }
}

/// Checks the quadric expansion, the witness and the minimal point degree
/// (searched through `d_max`). Discrepancies are listed in `issues`.
pub fn verify_row(row: &TableRow, d_max: u32) -> Result<RowVerification> {
    let model = row.model()?;
    let mut issues = Vec::new();
    let quadric_matches = row.quadric.monomials() == row.table_quadric.monomials();
    if !quadric_matches {
        issues.push(format!(
            "quadric {} differs from table {}",
            row.quadric, row.table_quadric
        ));
    }
    let computed_min = min_point_degree(&model, d_max)?;
    let mut witness_on_curve = None;
    let mut witness_degree = None;
    let mut status_ok = quadric_matches;
    let mut settled = true;
    match &row.table_witness {
        Some(w) => {
            let on = model.contains(&w.point)?;
            let deg = point_degree(&w.point, &gf2());
            witness_on_curve = Some(on);
            witness_degree = Some(deg);
            if !on {
                issues.push(format!("witness {} is not on the curve", w.text));
                status_ok = false;
            }
            if deg != w.claimed_degree {
                issues.push(format!(
                    "witness {} has degree {deg}, not {}",
                    w.text, w.claimed_degree
                ));
                status_ok = false;
            }
            match &computed_min {
                Some((d, _)) if *d > w.claimed_degree => {
                    issues.push(format!("minimal degree {d} exceeds witness degree"));
                    status_ok = false;
                }
                Some(_) => {}
                None if d_max >= w.claimed_degree => {
                    issues.push(format!("no point of degree <= {d_max} despite the witness"));
                    status_ok = false;
                }
                None => settled = false,
            }
        }
        None => match &computed_min {
            Some((d, p)) if *d <= 3 => {
                issues.push(format!("point {p} of degree {d} where the table has none"));
                status_ok = false;
            }
            Some((4, _)) => {}
            Some((d, _)) => {
                issues.push(format!("minimal degree {d}, table reports 4"));
                status_ok = false;
            }
            None if d_max >= 4 => {
                issues.push(format!("no point of degree <= {d_max}, table reports 4"));
                status_ok = false;
            }
            None => settled = false,
        },
    }
    let status = match (status_ok, settled) {
        (false, _) => RowStatus::Mismatch,
        (true, true) => RowStatus::Pass,
        (true, false) => RowStatus::Undetermined,
    };
    Ok(RowVerification {
        family: row.family,
        mask: row.mask,
        quadric: row.quadric.to_string(),
        quadric_matches,
        paper_witness: row.table_witness.as_ref().map(|w| w.text.clone()),
        paper_degree: row.table_witness.as_ref().map(|w| w.claimed_degree),
        witness_on_curve,
        witness_degree,
        computed_min,
        d_max,
        status,
        issues,
    })
}

/// Verifies every row; results are in row order.
pub fn verify_table(rows: &[TableRow], d_max: u32) -> Result<Vec<RowVerification>> {
    rows.par_iter().map(|r| verify_row(r, d_max)).collect()
}

/// Rows whose curve has no point of degree <= 3.
pub fn find_survivors(rows: &[TableRow]) -> Result<Vec<TableRow>> {
    let keep: Vec<bool> = rows
        .par_iter()
        .map(|r| Ok(min_point_degree(&r.model()?, 3)?.is_none()))
        .collect::<Result<_>>()?;
    Ok(rows
        .iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(r, _)| r.clone())
        .collect())
}

/// Zeta data for the surviving row.
#[derive(Debug, Clone, Serialize)]
pub struct SurvivorReport {
    pub family: u8,
    pub mask: Mask,
    pub cubic: String,
    pub quadric: String,
    pub probe_depth: u32,
    /// N_1..N_5 by direct enumeration.
    pub counts: Vec<u64>,
    pub n5_extended: u64,
    pub l_coeffs: Vec<i128>,
    pub class_number: u64,
    pub census: PlaceCensus,
    /// deg Diff for a degree-5 cover of the rational field by a genus-4 field.
    pub hurwitz_degree: i64,
    /// Cyclic degree-5 extensions with conductor the degree-4 place.
    pub cyclic_extensions: u64,
}

/// Probes smoothness, counts points through GF(32), derives L(t), h and the
/// place census through degree 5, and cross-checks N_5.
pub fn survivor_analysis(row: &TableRow, probe_depth: u32) -> Result<SurvivorReport> {
    let model = row.model()?;
    let singular = smoothness_probe(&model, probe_depth)?;
    if !singular.is_empty() {
        return Err(Error::Singular(singular));
    }
    let counts: Vec<u64> = (1..=5)
        .map(|m| count_points(&model, m))
        .collect::<Result<_>>()?;
    let g = model.smooth_genus();
    let l: LPoly = l_polynomial(&PointCounts::new(2, g, counts[..4].to_vec())?)?;
    let extended = extend_counts(&l, 5)?;
    let n5_extended = extended.counts()[4];
    if n5_extended != counts[4] {
        return Err(Error::Mismatch(format!(
            "N_5 = {} by enumeration but {n5_extended} from L(t)",
            counts[4]
        )));
    }
    let census = census_from_counts(&PointCounts::new(2, g, counts.clone())?)?;
    Ok(SurvivorReport {
        family: row.family,
        mask: row.mask,
        cubic: row.cubic.to_string(),
        quadric: row.quadric.to_string(),
        probe_depth,
        counts,
        n5_extended,
        l_coeffs: l.coeffs().to_vec(),
        class_number: l.class_number()?,
        census,
        hurwitz_degree: hurwitz_different_degree(g, 0, 5),
        cyclic_extensions: cyclic_extension_count(1, 2, 4, 5),
    })
}
