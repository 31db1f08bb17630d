//! Per-curve computation: genus, point counts, L-polynomial, class number and
//! place census, routed by model kind.

use rayon::prelude::*;
use serde::Serialize;

use ffc_core::covers::{
    census_to_counts, cover_genus, place_census, ramification_data, PlaceCensus, RamificationDatum,
};
use ffc_core::gfarith::make_field;
use ffc_core::polyring::{moebius_transport, Moebius, RationalPlace, UniPoly};
use ffc_core::varieties::{count_points, smoothness_probe, ProjectivePoint};
use ffc_core::zetafn::{census_from_slice, extend_counts, l_polynomial, LPoly, PointCounts};
use ffc_core::Error;

use crate::catalog::{CatalogEntry, Model};
use crate::error::{is_input_error, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PipelineConfig {
    pub max_place_degree: u32,
    pub probe_depth: u32,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            max_place_degree: 5,
            probe_depth: 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZetaData {
    pub q: u64,
    pub genus: u32,
    /// N_1, N_2, ...
    pub counts: Vec<u64>,
    pub l_coeffs: Vec<i128>,
    pub class_number: u64,
    pub census: PlaceCensus,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ramification: Vec<RamificationDatum>,
}

/// Counts through max(g, `up_to`), with every count beyond g checked against
/// the extension of L(t).
pub fn zeta_data(model: &Model, up_to: u32, probe_depth: u32) -> Result<ZetaData, Error> {
    let (q, genus, counts, ramification) = match model {
        Model::Cover(cover) => {
            let g = cover_genus(cover);
            let top = up_to.max(g);
            let census = place_census(cover, top)?;
            let base = cover.model().base().size();
            (
                base,
                g,
                census_to_counts(&census, top)?,
                ramification_data(cover),
            )
        }
        Model::Projective(m) => {
            let singular = smoothness_probe(m, probe_depth)?;
            if !singular.is_empty() {
                return Err(Error::Singular(singular));
            }
            let g = m.smooth_genus();
            let counts = (1..=up_to.max(g))
                .map(|k| count_points(m, k))
                .collect::<Result<_, _>>()?;
            (m.base_field().size(), g, counts, Vec::new())
        }
        Model::Line(f) => {
            let l = LPoly::new(f.size(), 0, vec![1])?;
            (
                f.size(),
                0,
                extend_counts(&l, up_to)?.counts().to_vec(),
                Vec::new(),
            )
        }
    };
    let l = l_polynomial(&PointCounts::new(
        q,
        genus,
        counts[..genus as usize].to_vec(),
    )?)?;
    let predicted = extend_counts(&l, counts.len() as u32)?;
    for (i, (a, b)) in counts
        .iter()
        .zip(predicted.counts())
        .enumerate()
        .skip(genus as usize)
    {
        if a != b {
            return Err(Error::Mismatch(format!(
                "N_{} = {a} but L(t) predicts {b}",
                i + 1
            )));
        }
    }
    Ok(ZetaData {
        q,
        genus,
        census: census_from_slice(&counts)?,
        class_number: l.class_number()?,
        l_coeffs: l.coeffs().to_vec(),
        counts,
        ramification,
    })
}

/// One-line probe diagnostic naming the first few singular points.
pub fn describe_singular(points: &[ProjectivePoint]) -> String {
    const SHOWN: usize = 4;
    let list: Vec<String> = points
        .iter()
        .take(SHOWN)
        .map(|p| format!("{p} over {}", p.field()))
        .collect();
    let more = points.len().saturating_sub(SHOWN);
    let tail = if more > 0 {
        format!(" and {more} more")
    } else {
        String::new()
    };
    format!("smoothness probe failed at {}{tail}", list.join(", "))
}

/// A claimed image of a degree-4 place under a change of variable over GF(2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransportCheck {
    pub place: String,
    pub maps: Vec<String>,
    pub claimed: String,
    pub computed: String,
    pub agrees: bool,
}

/// Moves the two degree-4 places onto the conductor x^4+x+1. The second
/// claim fails for x -> 1/(x+1) alone, so the composite with x -> 1/x is
/// listed as well.
pub fn transport_checks() -> Result<Vec<TransportCheck>, Error> {
    let f = make_field(2, 1)?;
    let place =
        |t: &str| -> Result<RationalPlace, Error> { RationalPlace::finite(UniPoly::parse(t, &f)?) };
    let inv = Moebius::new(&f, 0, 1, 1, 0)?;
    let inv_shift = Moebius::new(&f, 0, 1, 1, 1)?;
    let target = place("x^4+x+1")?;
    let cases = [
        ("x^4+x^3+1", vec![&inv]),
        ("x^4+x^3+x^2+x+1", vec![&inv_shift]),
        ("x^4+x^3+x^2+x+1", vec![&inv_shift, &inv]),
    ];
    cases
        .into_iter()
        .map(|(start, maps)| {
            let mut image = place(start)?;
            for m in &maps {
                image = moebius_transport(&image, m)?;
            }
            Ok(TransportCheck {
                place: place(start)?.to_string(),
                maps: maps.iter().map(|m| m.to_string()).collect(),
                claimed: target.to_string(),
                computed: image.to_string(),
                agrees: image == target,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveRecord {
    pub id: String,
    pub q: u64,
    pub kind: String,
    pub display: String,
    pub genus_expected: u32,
    pub class_number_expected: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census_expected: Option<Vec<u64>>,
    #[serde(flatten)]
    pub zeta: Option<ZetaData>,
    pub status: Status,
    pub issues: Vec<String>,
}

/// Runs one catalog entry. Malformed input is an error; a failed computation
/// or a disagreement with the entry's claims gives a mismatch record.
pub fn run_entry(entry: &CatalogEntry, cfg: &PipelineConfig) -> Result<CurveRecord, CliError> {
    let model = entry.model.build(entry.q)?;
    let mut issues = Vec::new();
    let zeta = match zeta_data(&model, cfg.max_place_degree, cfg.probe_depth) {
        Ok(z) => Some(z),
        Err(e) if is_input_error(&e) => return Err(e.into()),
        Err(Error::Singular(points)) => {
            issues.push(describe_singular(&points));
            None
        }
        Err(e) => {
            issues.push(e.to_string());
            None
        }
    };
    if let Some(z) = &zeta {
        if z.genus != entry.expected_genus {
            issues.push(format!(
                "genus {} but expected {}",
                z.genus, entry.expected_genus
            ));
        }
        if z.class_number != entry.expected_class_number {
            issues.push(format!(
                "class number {} but expected {}",
                z.class_number, entry.expected_class_number
            ));
        }
        if let Some(expected) = &entry.expected_census {
            let got = z.census.as_slice();
            let n = got.len().min(expected.len());
            if got[..n] != expected[..n] {
                issues.push(format!(
                    "census {:?} but expected {:?}",
                    &got[..n],
                    &expected[..n]
                ));
            }
        }
    }
    Ok(CurveRecord {
        id: entry.id.clone(),
        q: entry.q,
        kind: entry.model.kind_name().into(),
        display: entry.display.clone(),
        genus_expected: entry.expected_genus,
        class_number_expected: entry.expected_class_number,
        census_expected: entry.expected_census.clone(),
        status: if issues.is_empty() {
            Status::Pass
        } else {
            Status::Mismatch
        },
        zeta,
        issues,
    })
}

/// Runs the entries in parallel; records come back in catalog order.
pub fn run_entries(
    entries: &[&CatalogEntry],
    cfg: &PipelineConfig,
) -> Result<Vec<CurveRecord>, CliError> {
    entries.par_iter().map(|e| run_entry(e, cfg)).collect()
}
