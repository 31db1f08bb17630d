//! Report structures and their JSON, CSV and text renderings. Nothing here
//! depends on timing or thread count, so reruns produce identical bytes.

use std::fmt::Write as _;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

use ffc_core::census64::{RowStatus, RowVerification, SurvivorReport};

use crate::error::CliError;
use crate::pipeline::{CurveRecord, Status, TransportCheck, ZetaData};

pub const TOOL: &str = "ffc";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Command line settings echoed into every report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub command: String,
    pub catalog: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<String>,
    pub max_place_degree: u32,
    pub probe_depth: u32,
    pub dmax: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowRecord {
    pub family: u8,
    pub mask: String,
    pub quadric: String,
    pub paper_witness: Option<String>,
    pub paper_degree: Option<u32>,
    pub witness_on_curve: Option<bool>,
    pub computed_min_degree: Option<u32>,
    pub computed_witness: Option<String>,
    pub status: String,
    #[serde(skip_serializing)]
    pub issues: Vec<String>,
}

impl From<&RowVerification> for RowRecord {
    fn from(v: &RowVerification) -> Self {
        RowRecord {
            family: v.family,
            mask: v.mask.bits(),
            quadric: v.quadric.clone(),
            paper_witness: v.paper_witness.clone(),
            paper_degree: v.paper_degree,
            witness_on_curve: v.witness_on_curve,
            computed_min_degree: v.computed_min.as_ref().map(|(d, _)| *d),
            computed_witness: v.computed_witness(),
            status: v.status.to_string(),
            issues: v.issues.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table64Summary {
    pub rows: usize,
    pub passed: usize,
    pub mismatched: usize,
    pub undetermined: usize,
    /// `family:mask` of each row without a point of degree <= 3; None when
    /// the search bound is below 3.
    pub survivors: Option<Vec<String>>,
    pub survivor_undetermined: bool,
}

impl Table64Summary {
    pub fn from_rows(rows: &[RowVerification]) -> Self {
        let count = |s| rows.iter().filter(|r| r.status == s).count();
        let flags: Option<Vec<bool>> = rows.iter().map(|r| r.is_survivor()).collect();
        let survivors = flags.map(|f| {
            rows.iter()
                .zip(f)
                .filter(|(_, s)| *s)
                .map(|(r, _)| format!("{}:{}", r.family, r.mask.bits()))
                .collect::<Vec<_>>()
        });
        Table64Summary {
            rows: rows.len(),
            passed: count(RowStatus::Pass),
            mismatched: count(RowStatus::Mismatch),
            undetermined: count(RowStatus::Undetermined),
            survivor_undetermined: survivors.is_none(),
            survivors,
        }
    }

    /// All rows pass and the single survivor is family 2, mask 1011.
    pub fn verified(&self) -> bool {
        self.passed == self.rows && self.survivors.as_deref() == Some(&["2:1011".to_string()][..])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: ConfigEcho,
    pub records: Vec<CurveRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table64: Option<Table64Summary>,
    /// Reported, not enforced: a disagreement here leaves the status alone.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub transport: Vec<TransportCheck>,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table64Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: ConfigEcho,
    pub summary: Table64Summary,
    pub rows: Vec<RowRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub survivor: Option<SurvivorReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub issues: Vec<String>,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZetaReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub model: String,
    pub kind: String,
    #[serde(flatten)]
    pub zeta: ZetaData,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSummary {
    pub degree: u32,
    pub ramified: u64,
    pub split: u64,
    pub inert: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlacesRecord {
    pub id: String,
    pub q: u64,
    pub census: Vec<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub base_places: Vec<DegreeSummary>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlacesReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: ConfigEcho,
    pub records: Vec<PlacesRecord>,
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    write(&mut w).expect("in-memory CSV");
    String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("UTF-8")
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Mismatch => "mismatch",
    }
}

pub fn render_verify(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => csv_string(|w| {
            w.write_record([
                "id",
                "q",
                "kind",
                "genus_expected",
                "genus",
                "class_number",
                "counts",
                "l_coeffs",
                "census",
                "status",
            ])?;
            for rec in &r.records {
                let z = rec.zeta.as_ref();
                w.write_record([
                    rec.id.clone(),
                    rec.q.to_string(),
                    rec.kind.clone(),
                    rec.genus_expected.to_string(),
                    z.map(|z| z.genus.to_string()).unwrap_or_default(),
                    z.map(|z| z.class_number.to_string()).unwrap_or_default(),
                    z.map(|z| join(&z.counts)).unwrap_or_default(),
                    z.map(|z| join(&z.l_coeffs)).unwrap_or_default(),
                    z.map(|z| join(z.census.as_slice())).unwrap_or_default(),
                    status_word(rec.status).into(),
                ])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut s = format!("{TOOL} {VERSION} verify\n");
            for rec in &r.records {
                let _ = write!(s, "curve {:<5} q={} {:<15}", rec.id, rec.q, rec.kind);
                match &rec.zeta {
                    Some(z) => {
                        let _ = write!(
                            s,
                            " g={} h={} N=[{}] L=[{}] census={}",
                            z.genus,
                            z.class_number,
                            join(&z.counts),
                            join(&z.l_coeffs),
                            z.census
                        );
                    }
                    None => s.push_str(" (no zeta data)"),
                }
                let _ = writeln!(s, " {}", status_word(rec.status));
                for issue in &rec.issues {
                    let _ = writeln!(s, "  - {issue}");
                }
            }
            if let Some(t) = &r.table64 {
                let _ = writeln!(
                    s,
                    "table64: {}/{} rows pass, survivors {}",
                    t.passed,
                    t.rows,
                    t.survivors
                        .as_ref()
                        .map(|v| v.join(" "))
                        .unwrap_or_else(|| "undetermined".into())
                );
            }
            for t in &r.transport {
                let _ = writeln!(
                    s,
                    "transport: {} under {} gives {}, claimed {}: {}",
                    t.place,
                    t.maps.join(" then "),
                    t.computed,
                    t.claimed,
                    if t.agrees { "agrees" } else { "DISAGREES" }
                );
            }
            let _ = writeln!(s, "status: {}", status_word(r.status));
            s
        }
    }
}

pub fn render_table64(r: &Table64Report, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => csv_string(|w| {
            for row in &r.rows {
                w.serialize(row)?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut s = format!("{TOOL} {VERSION} table64 (dmax {})\n", r.config.dmax);
            for row in &r.rows {
                let _ = writeln!(
                    s,
                    "C{} mask {} {:<52} table {:<14} min {:<2} {:<20} {}",
                    row.family,
                    row.mask,
                    row.quadric,
                    row.paper_witness.as_deref().unwrap_or("-"),
                    row.computed_min_degree
                        .map(|d| d.to_string())
                        .unwrap_or_else(|| "-".into()),
                    row.computed_witness.as_deref().unwrap_or("-"),
                    row.status
                );
                for issue in &row.issues {
                    let _ = writeln!(s, "  - {issue}");
                }
            }
            let t = &r.summary;
            let _ = writeln!(
                s,
                "rows: {} pass, {} mismatch, {} undetermined",
                t.passed, t.mismatched, t.undetermined
            );
            match &t.survivors {
                Some(v) => {
                    let _ = writeln!(s, "survivors: {}", v.join(" "));
                }
                None => s.push_str("survivors: undetermined (dmax < 3)\n"),
            }
            if let Some(sv) = &r.survivor {
                let _ = writeln!(
                    s,
                    "survivor C{} mask {}: N=[{}] N5(L)={} L=[{}] h={} census={} hurwitz={} cyclic={}",
                    sv.family,
                    sv.mask.bits(),
                    join(&sv.counts),
                    sv.n5_extended,
                    join(&sv.l_coeffs),
                    sv.class_number,
                    sv.census,
                    sv.hurwitz_degree,
                    sv.cyclic_extensions
                );
            }
            for issue in &r.issues {
                let _ = writeln!(s, "  - {issue}");
            }
            let _ = writeln!(s, "status: {}", status_word(r.status));
            s
        }
    }
}

pub fn render_zeta(r: &ZetaReport, format: Format) -> String {
    let z = &r.zeta;
    match format {
        Format::Json => json(r),
        Format::Csv => csv_string(|w| {
            w.write_record(["n", "N_n", "B_n"])?;
            for (i, n) in z.counts.iter().enumerate() {
                let b = z
                    .census
                    .get(i as u32 + 1)
                    .map(|b| b.to_string())
                    .unwrap_or_default();
                w.write_record([(i + 1).to_string(), n.to_string(), b])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "model: {} ({})", r.model, r.kind);
            let _ = writeln!(s, "q: {}", z.q);
            let _ = writeln!(s, "genus: {}", z.genus);
            let _ = writeln!(s, "N: [{}]", join(&z.counts));
            let _ = writeln!(s, "L: [{}]", join(&z.l_coeffs));
            let _ = writeln!(s, "h: {}", z.class_number);
            let _ = writeln!(s, "census: [{}]", join(z.census.as_slice()));
            for d in &z.ramification {
                let _ = writeln!(
                    s,
                    "ramified: {} degree {} e={} d={}",
                    d.place, d.degree, d.e, d.different_exponent
                );
            }
            s
        }
    }
}

pub fn render_places(r: &PlacesReport, format: Format) -> String {
    match format {
        Format::Json => json(r),
        Format::Csv => csv_string(|w| {
            w.write_record(["id", "degree", "places", "ramified", "split", "inert"])?;
            for rec in &r.records {
                for (i, b) in rec.census.iter().enumerate() {
                    let base = rec.base_places.get(i);
                    let field = |f: fn(&DegreeSummary) -> u64| {
                        base.map(|d| f(d).to_string()).unwrap_or_default()
                    };
                    w.write_record([
                        rec.id.clone(),
                        (i + 1).to_string(),
                        b.to_string(),
                        field(|d| d.ramified),
                        field(|d| d.split),
                        field(|d| d.inert),
                    ])?;
                }
            }
            Ok(())
        }),
        Format::Text => {
            let mut s = String::new();
            for rec in &r.records {
                let _ = writeln!(s, "curve {} (q = {})", rec.id, rec.q);
                for (i, b) in rec.census.iter().enumerate() {
                    let _ = write!(s, "  B_{} = {b}", i + 1);
                    if let Some(d) = rec.base_places.get(i) {
                        let _ = write!(
                            s,
                            "   base places: {} ramified, {} split, {} inert",
                            d.ramified, d.split, d.inert
                        );
                    }
                    s.push('\n');
                }
            }
            s
        }
    }
}

/// Writes to `out`, or to stdout when no path is given.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Output {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
