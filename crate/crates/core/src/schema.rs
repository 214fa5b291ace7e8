//! JSON shapes for algebras, modules, split extensions and scenarios.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactlin::Field;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(deserialize_with = "scalar_string")]
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(default = "rationals")]
    pub field: Field,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<TermJson>>,
}

fn rationals() -> Field {
    Field::Rationals
}

/// A scalar written either as a JSON integer or as a string like `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Int(i64),
    Str(String),
}

impl std::fmt::Display for ScalarJson {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScalarJson::Int(n) => write!(f, "{n}"),
            ScalarJson::Str(s) => f.write_str(s),
        }
    }
}

fn scalar_string<'de, D: serde::Deserializer<'de>>(d: D) -> Result<String, D::Error> {
    Ok(ScalarJson::deserialize(d)?.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StandardKind {
    Simple,
    Projective,
    Injective,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardJson {
    pub kind: StandardKind,
    pub vertex: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleBody {
    Interval { interval: String },
    Standard { standard: StandardJson },
    Sum { sum: Vec<ModuleJson> },
    Explicit {
        dims: BTreeMap<String, usize>,
        #[serde(default)]
        matrices: BTreeMap<String, Vec<Vec<ScalarJson>>>,
    },
}

/// Module specification. `algebra` is an optional path or id naming the
/// algebra the module lives over; callers usually supply the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(flatten)]
    pub body: ModuleBody,
}

impl ModuleJson {
    pub fn interval(s: &str) -> Self {
        ModuleJson { algebra: None, body: ModuleBody::Interval { interval: s.to_string() } }
    }

    pub fn sum(parts: Vec<ModuleJson>) -> Self {
        ModuleJson { algebra: None, body: ModuleBody::Sum { sum: parts } }
    }
}

/// An algebra given inline or as a path relative to the referring file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Path(String),
    Inline(AlgebraJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitJson {
    #[serde(rename = "B")]
    pub b: AlgebraRef,
    #[serde(rename = "C")]
    pub c: AlgebraRef,
    #[serde(rename = "vertexMap", default)]
    pub vertex_map: BTreeMap<String, String>,
    #[serde(rename = "arrowEmbed", default)]
    pub arrow_embed: BTreeMap<String, String>,
    #[serde(rename = "extensionArrows", default)]
    pub extension_arrows: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitsJson {
    #[serde(rename = "maxDim", default = "default_max_dim")]
    pub max_dim: usize,
    #[serde(rename = "maxCount", default = "default_max_count")]
    pub max_count: usize,
}

fn default_max_dim() -> usize {
    crate::tautilt::DEFAULT_MAX_DIM
}

fn default_max_count() -> usize {
    crate::tautilt::DEFAULT_MAX_COUNT
}

impl Default for LimitsJson {
    fn default() -> Self {
        LimitsJson { max_dim: default_max_dim(), max_count: default_max_count() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplementJson {
    Auto(AutoTag),
    Module(ModuleJson),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AutoTag {
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioJson {
    pub split: String,
    pub statement: String,
    #[serde(rename = "M")]
    pub m: ModuleJson,
    #[serde(rename = "U", default, skip_serializing_if = "Option::is_none")]
    pub u: Option<ComplementJson>,
    /// Completion for PROP-ALMOST.
    #[serde(rename = "Y", default, skip_serializing_if = "Option::is_none")]
    pub y: Option<ModuleJson>,
    #[serde(default)]
    pub catalogue: LimitsJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot: Option<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_shorthands_parse() {
        let m: ModuleJson = serde_json::from_str(r#"{"interval":"2/3/4/5"}"#).unwrap();
        assert_eq!(m, ModuleJson::interval("2/3/4/5"));
        let p: ModuleJson =
            serde_json::from_str(r#"{"algebra":"C.json","standard":{"kind":"projective","vertex":"3"}}"#).unwrap();
        assert!(matches!(p.body, ModuleBody::Standard { .. }));
        let e: ModuleJson =
            serde_json::from_str(r#"{"dims":{"1":1,"2":1},"matrices":{"a":[[1]]}}"#).unwrap();
        assert!(matches!(e.body, ModuleBody::Explicit { .. }));
        let s: ModuleJson = serde_json::from_str(r#"{"sum":[{"interval":"3"},{"interval":"4"}]}"#).unwrap();
        assert!(matches!(s.body, ModuleBody::Sum { ref sum } if sum.len() == 2));
    }

    #[test]
    fn scenario_auto_complement() {
        let s: ScenarioJson = serde_json::from_str(
            r#"{"split":"split.json","statement":"THM-MAIN","M":{"interval":"3"},"U":"auto"}"#,
        )
        .unwrap();
        assert_eq!(s.u, Some(ComplementJson::Auto(AutoTag::Auto)));
        assert_eq!(s.catalogue, LimitsJson::default());
    }

    #[test]
    fn numeric_coefficients_accepted() {
        let t: TermJson = serde_json::from_str(r#"{"coeff":-1,"path":["a","b"]}"#).unwrap();
        assert_eq!(t.coeff, "-1");
    }
}
