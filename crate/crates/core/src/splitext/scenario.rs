//! Scenario files: a split extension, a statement and its modules.

use std::path::{Path, PathBuf};

use crate::exactlin::Field;
use crate::repmod::Module;
use crate::schema::{ComplementJson, LimitsJson, ScenarioJson};

use super::{read_json, resolve, CheckInputs, SplitError, SplitExtension, Statement};

pub struct Scenario {
    pub split_path: PathBuf,
    pub split: SplitExtension,
    pub statement: Statement,
    pub inputs: CheckInputs,
    pub limits: LimitsJson,
    pub dot: bool,
}

pub fn load_scenario(path: &Path, field: Option<Field>) -> Result<Scenario, SplitError> {
    let spec: ScenarioJson = read_json(path)?;
    let statement: Statement = spec.statement.parse()?;
    let split_path = resolve(path.parent(), &spec.split);
    let split = SplitExtension::from_file(&split_path, field)?;
    let c = split.c().clone();
    let m = Module::from_json(&c, &spec.m)?;
    let u = match &spec.u {
        None | Some(ComplementJson::Auto(_)) => None,
        Some(ComplementJson::Module(u)) => Some(Module::from_json(&c, u)?),
    };
    let y = spec.y.as_ref().map(|y| Module::from_json(&c, y)).transpose()?;
    Ok(Scenario {
        split_path,
        split,
        statement,
        inputs: CheckInputs { m, u, y },
        limits: spec.catalogue,
        dot: spec.dot.unwrap_or(false),
    })
}
