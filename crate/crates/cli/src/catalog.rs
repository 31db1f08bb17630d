//! Curve catalog: TOML entries pairing a computable model with the expected
//! genus and class number.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use ffc_core::covers::{validate_standard_form, CoverKind, CoverModel, ValidatedCover};
use ffc_core::gfarith::{make_field, FieldSpec};
use ffc_core::polyring::RationalFunction;
use ffc_core::varieties::{MultiPoly, ProjectiveCurveModel};

use crate::error::CliError;

const DEFAULT_CATALOG: &str = include_str!("../data/curves.toml");

fn one() -> u64 {
    1
}

fn unit() -> String {
    "1".into()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ModelSpec {
    ArtinSchreier {
        numerator: String,
        #[serde(default = "unit")]
        denominator: String,
    },
    Kummer {
        numerator: String,
        #[serde(default = "unit")]
        denominator: String,
    },
    PlaneQuartic {
        equation: String,
    },
    SpaceCurve {
        cubic: String,
        quadric: String,
    },
    /// The rational function field itself (genus 0).
    ProjectiveLine,
}

impl ModelSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ModelSpec::ArtinSchreier { .. } => "artin-schreier",
            ModelSpec::Kummer { .. } => "kummer",
            ModelSpec::PlaneQuartic { .. } => "plane-quartic",
            ModelSpec::SpaceCurve { .. } => "space-curve",
            ModelSpec::ProjectiveLine => "projective-line",
        }
    }
}

/// A model bound to its base field, ready for computation.
#[derive(Debug, Clone)]
pub enum Model {
    Cover(ValidatedCover),
    Projective(ProjectiveCurveModel),
    Line(Arc<FieldSpec>),
}

/// GF(q) for q a power of 2 or 3.
pub fn field_of_size(q: u64) -> Result<Arc<FieldSpec>, CliError> {
    for p in [2u64, 3] {
        let mut k = 0;
        let mut n = q;
        while n > 1 && n.is_multiple_of(p) {
            n /= p;
            k += 1;
        }
        if n == 1 && k > 0 {
            return Ok(make_field(p as u32, k)?);
        }
    }
    Err(CliError::Input(format!("q = {q} is not a power of 2 or 3")))
}

impl ModelSpec {
    /// Parses the equations over GF(q). Projective models are checked for
    /// degree only; smoothness is probed by the pipeline.
    pub fn build(&self, q: u64) -> Result<Model, CliError> {
        let field = field_of_size(q)?;
        let cover = |kind, num: &str, den: &str| -> Result<Model, CliError> {
            let f = RationalFunction::parse(num, den, &field)?;
            Ok(Model::Cover(validate_standard_form(&CoverModel::new(
                kind, f,
            ))?))
        };
        match self {
            ModelSpec::ArtinSchreier {
                numerator,
                denominator,
            } => cover(CoverKind::ArtinSchreier, numerator, denominator),
            ModelSpec::Kummer {
                numerator,
                denominator,
            } => cover(CoverKind::Kummer, numerator, denominator),
            ModelSpec::PlaneQuartic { equation } => Ok(Model::Projective(
                ProjectiveCurveModel::plane_quartic(MultiPoly::parse(equation, &field, 3)?)?,
            )),
            ModelSpec::SpaceCurve { cubic, quadric } => {
                Ok(Model::Projective(ProjectiveCurveModel::space_curve(
                    MultiPoly::parse(cubic, &field, 4)?,
                    MultiPoly::parse(quadric, &field, 4)?,
                )?))
            }
            ModelSpec::ProjectiveLine => Ok(Model::Line(field)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub id: String,
    pub q: u64,
    pub expected_genus: u32,
    #[serde(default = "one")]
    pub expected_class_number: u64,
    /// Equation as usually written; not used for computation.
    #[serde(default)]
    pub display: String,
    /// B_1, B_2, ... if the place census is part of the claim.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_census: Option<Vec<u64>>,
    pub model: ModelSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveCatalog {
    #[serde(rename = "curve", default)]
    pub curves: Vec<CatalogEntry>,
}

impl CurveCatalog {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let catalog: CurveCatalog =
            toml::from_str(text).map_err(|e| CliError::Input(format!("catalog: {e}")))?;
        let mut seen = BTreeSet::new();
        for c in &catalog.curves {
            if !seen.insert(c.id.as_str()) {
                return Err(CliError::Input(format!("duplicate curve id {:?}", c.id)));
            }
            field_of_size(c.q)?;
        }
        Ok(catalog)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The eight curves shipped with the tool.
    pub fn builtin() -> Self {
        Self::parse(DEFAULT_CATALOG).expect("built-in catalog parses")
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("catalog serializes")
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.curves.iter().find(|c| c.id == id)
    }

    /// All entries, or just `id`.
    pub fn select(&self, id: Option<&str>) -> Result<Vec<&CatalogEntry>, CliError> {
        match id {
            None => Ok(self.curves.iter().collect()),
            Some(id) => self
                .get(id)
                .map(|c| vec![c])
                .ok_or_else(|| CliError::Input(format!("no curve {id:?} in catalog"))),
        }
    }
}

/// Standalone model file for the `zeta` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub q: u64,
    pub model: ModelSpec,
}

impl ModelFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Input(format!("model file: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog() {
        let c = CurveCatalog::builtin();
        let ids: Vec<_> = c.curves.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(ids, ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"]);
        let genera: Vec<_> = c.curves.iter().map(|e| e.expected_genus).collect();
        assert_eq!(genera, [1, 2, 2, 3, 3, 1, 1, 4]);
        for e in &c.curves {
            e.model.build(e.q).unwrap();
        }
    }

    #[test]
    fn round_trips() {
        let c = CurveCatalog::builtin();
        assert_eq!(CurveCatalog::parse(&c.to_toml()).unwrap(), c);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(CurveCatalog::parse("[[curve]]\nid = 1").is_err());
        let dup = r#"
            [[curve]]
            id = "a"
            q = 2
            expected_genus = 0
            model = { kind = "projective-line" }
            [[curve]]
            id = "a"
            q = 2
            expected_genus = 0
            model = { kind = "projective-line" }
        "#;
        assert!(CurveCatalog::parse(dup).is_err());
        assert!(field_of_size(6).is_err());
        assert!(field_of_size(1).is_err());
        assert_eq!(field_of_size(9).unwrap().degree(), 2);
    }
}
