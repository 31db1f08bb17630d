use std::path::{Path, PathBuf};

use ffc_core::census64::{build_family, survivor_analysis, verify_table, TableRow};
use ffc_core::covers::{place_decompositions, Splitting};

use crate::catalog::{CurveCatalog, Model, ModelFile, ModelSpec};
use crate::error::{CliError, Outcome};
use crate::pipeline::{
    describe_singular, run_entries, transport_checks, zeta_data, PipelineConfig, Status,
};
use crate::report::{
    emit, render_places, render_table64, render_verify, render_zeta, ConfigEcho, DegreeSummary,
    Format, PlacesRecord, PlacesReport, RowRecord, Table64Report, Table64Summary,
    VerificationReport, ZetaReport, TOOL, VERSION,
};
use crate::selftest;

/// Options shared by every command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub catalog: Option<PathBuf>,
    pub curve: Option<String>,
    pub max_place_degree: u32,
    pub dmax: u32,
    pub probe_depth: u32,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            catalog: None,
            curve: None,
            max_place_degree: 5,
            dmax: 4,
            probe_depth: 6,
            out: None,
            format: None,
        }
    }
}

impl Options {
    fn catalog(&self) -> Result<CurveCatalog, CliError> {
        match &self.catalog {
            Some(p) => CurveCatalog::load(p),
            None => Ok(CurveCatalog::builtin()),
        }
    }

    fn echo(&self, command: &str) -> ConfigEcho {
        ConfigEcho {
            command: command.into(),
            catalog: self
                .catalog
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_else(|| "builtin".into()),
            curve: self.curve.clone(),
            max_place_degree: self.max_place_degree,
            probe_depth: self.probe_depth,
            dmax: self.dmax,
        }
    }

    fn pipeline(&self) -> PipelineConfig {
        PipelineConfig {
            max_place_degree: self.max_place_degree,
            probe_depth: self.probe_depth,
        }
    }

    fn check_bounds(&self) -> Result<(), CliError> {
        if self.max_place_degree == 0 || self.max_place_degree > 10 {
            return Err(CliError::Input(
                "--max-place-degree must be in 1..=10".into(),
            ));
        }
        if self.dmax == 0 || self.dmax > 6 {
            return Err(CliError::Input("--dmax must be in 1..=6".into()));
        }
        if self.probe_depth == 0 || self.probe_depth > 8 {
            return Err(CliError::Input("--probe-depth must be in 1..=8".into()));
        }
        Ok(())
    }
}

fn table_model_matches(row: &TableRow, spec: &ModelSpec) -> bool {
    match spec {
        ModelSpec::SpaceCurve { cubic, quadric } => {
            let f = row.cubic.field();
            let parse = |t: &str| ffc_core::varieties::MultiPoly::parse(t, f, 4).ok();
            parse(cubic).as_ref() == Some(&row.cubic)
                && parse(quadric).as_ref() == Some(&row.quadric)
        }
        _ => false,
    }
}

/// Runs the per-curve pipeline over the selected catalog entries.
pub fn verify(opts: &Options) -> Result<Outcome, CliError> {
    opts.check_bounds()?;
    let catalog = opts.catalog()?;
    let entries = catalog.select(opts.curve.as_deref())?;
    let records = run_entries(&entries, &opts.pipeline())?;
    let mut status = if records.iter().all(|r| r.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Mismatch
    };

    // Space-curve entries are tied to the unique survivor of the 64-row table.
    let mut table64 = None;
    let mut transport = Vec::new();
    let space: Vec<_> = entries
        .iter()
        .filter(|e| matches!(e.model, ModelSpec::SpaceCurve { .. }))
        .collect();
    if !space.is_empty() {
        let rows = build_family();
        let verified = verify_table(&rows, opts.dmax)?;
        let summary = Table64Summary::from_rows(&verified);
        let survivor_ok = summary.verified()
            && rows
                .iter()
                .zip(&verified)
                .filter(|(_, v)| v.is_survivor() == Some(true))
                .all(|(r, _)| space.iter().any(|e| table_model_matches(r, &e.model)));
        if !survivor_ok {
            status = Status::Mismatch;
        }
        table64 = Some(summary);
        transport = transport_checks()?;
    }

    let report = VerificationReport {
        tool: TOOL,
        version: VERSION,
        config: opts.echo("verify"),
        records,
        table64,
        transport,
        status,
    };
    emit(
        &render_verify(&report, opts.format.unwrap_or(Format::Json)),
        opts.out.as_deref(),
    )?;
    Ok(if status == Status::Pass {
        Outcome::Verified
    } else {
        Outcome::Mismatch
    })
}

/// Checks all 64 rows against the reference table and analyzes the survivor.
pub fn table64(opts: &Options) -> Result<Outcome, CliError> {
    opts.check_bounds()?;
    let rows = build_family();
    let verified = verify_table(&rows, opts.dmax)?;
    let summary = Table64Summary::from_rows(&verified);
    let mut issues = Vec::new();
    let mut survivor = None;
    if let Some(ids) = &summary.survivors {
        if summary.verified() {
            let row = rows
                .iter()
                .zip(&verified)
                .find(|(_, v)| v.is_survivor() == Some(true))
                .map(|(r, _)| r)
                .expect("one survivor");
            match survivor_analysis(row, opts.probe_depth) {
                Ok(s) => {
                    if s.class_number != 1 || s.census.as_slice() != [0, 0, 0, 1, 3] {
                        issues.push(format!(
                            "survivor has h = {} and census {}",
                            s.class_number, s.census
                        ));
                    }
                    survivor = Some(s);
                }
                Err(e) => issues.push(format!("survivor analysis failed: {e}")),
            }
        } else {
            issues.push(format!(
                "expected the single survivor 2:1011, found {ids:?}"
            ));
        }
    } else {
        issues.push(format!("survivor undetermined: dmax {} < 3", opts.dmax));
    }
    let status = if summary.verified() && issues.is_empty() {
        Status::Pass
    } else {
        Status::Mismatch
    };
    let report = Table64Report {
        tool: TOOL,
        version: VERSION,
        config: opts.echo("table64"),
        rows: verified.iter().map(RowRecord::from).collect(),
        summary,
        survivor,
        issues,
        status,
    };
    emit(
        &render_table64(&report, opts.format.unwrap_or(Format::Csv)),
        opts.out.as_deref(),
    )?;
    Ok(if status == Status::Pass {
        Outcome::Verified
    } else {
        Outcome::Mismatch
    })
}

/// Zeta data for a model file, or for a catalog curve when no file is given.
/// `counts` is the number of point counts to report (at least the genus).
pub fn zeta(
    opts: &Options,
    model_path: Option<&Path>,
    counts: Option<u32>,
) -> Result<Outcome, CliError> {
    opts.check_bounds()?;
    let (name, q, spec) = match model_path {
        Some(p) => {
            let m = ModelFile::load(p)?;
            (p.display().to_string(), m.q, m.model)
        }
        None => {
            let catalog = opts.catalog()?;
            let id = opts
                .curve
                .as_deref()
                .ok_or_else(|| CliError::Input("zeta needs a model file or --curve".into()))?;
            let entry = catalog.select(Some(id))?[0];
            (format!("curve {id}"), entry.q, entry.model.clone())
        }
    };
    let model = spec.build(q)?;
    let z = match zeta_data(&model, counts.unwrap_or(1), opts.probe_depth) {
        Ok(z) => z,
        Err(ffc_core::Error::Singular(points)) => {
            eprintln!("{}", describe_singular(&points));
            return Ok(Outcome::Mismatch);
        }
        Err(e) => return Err(e.into()),
    };
    if let Some(m) = counts {
        if m < z.genus {
            return Err(CliError::Input(format!(
                "--counts {m} is below the genus {}",
                z.genus
            )));
        }
    }
    let report = ZetaReport {
        tool: TOOL,
        version: VERSION,
        model: name,
        kind: spec.kind_name().into(),
        zeta: z,
    };
    emit(
        &render_zeta(&report, opts.format.unwrap_or(Format::Text)),
        opts.out.as_deref(),
    )?;
    Ok(Outcome::Verified)
}

/// Place census through --max-place-degree for each selected curve.
pub fn places(opts: &Options) -> Result<Outcome, CliError> {
    opts.check_bounds()?;
    let catalog = opts.catalog()?;
    let d = opts.max_place_degree;
    let mut records = Vec::new();
    let mut outcome = Outcome::Verified;
    for entry in catalog.select(opts.curve.as_deref())? {
        let model = entry.model.build(entry.q)?;
        let z = match zeta_data(&model, d, opts.probe_depth) {
            Ok(z) => z,
            Err(e) if crate::error::is_input_error(&e) => return Err(e.into()),
            Err(e) => {
                eprintln!("curve {}: {e}", entry.id);
                outcome = Outcome::Mismatch;
                continue;
            }
        };
        let mut base_places = Vec::new();
        if let Model::Cover(cover) = &model {
            for deg in 1..=d {
                let mut s = DegreeSummary {
                    degree: deg,
                    ramified: 0,
                    split: 0,
                    inert: 0,
                };
                for pd in place_decompositions(cover, deg)? {
                    match pd.splitting {
                        Splitting::Ramified => s.ramified += 1,
                        Splitting::Split => s.split += 1,
                        Splitting::Inert => s.inert += 1,
                    }
                }
                base_places.push(s);
            }
        }
        records.push(PlacesRecord {
            id: entry.id.clone(),
            q: entry.q,
            census: z.census.as_slice()[..d as usize].to_vec(),
            base_places,
        });
    }
    let report = PlacesReport {
        tool: TOOL,
        version: VERSION,
        config: opts.echo("places"),
        records,
    };
    emit(
        &render_places(&report, opts.format.unwrap_or(Format::Text)),
        opts.out.as_deref(),
    )?;
    Ok(outcome)
}

/// Runs the embedded invariant checks.
pub fn selftest(opts: &Options) -> Result<Outcome, CliError> {
    let checks = selftest::run_default();
    let text = selftest::render(&checks, opts.format.unwrap_or(Format::Text));
    emit(&text, opts.out.as_deref())?;
    Ok(if checks.iter().all(|c| c.passed) {
        Outcome::Verified
    } else {
        Outcome::Mismatch
    })
}
