//! Reading algebras, modules and catalogues, with an on-disk catalogue
//! cache keyed by the algebra fingerprint.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use taukit::algebra::{Algebra, DEFAULT_MAX_LEN};
use taukit::exactlin::Field;
use taukit::repmod::Module;
use taukit::schema::{AlgebraJson, ModuleJson};
use taukit::tautilt::{Catalogue, CatalogueJson};

use crate::error::CliError;

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("malformed JSON in {}: {e}", path.display())))
}

pub fn algebra(path: &Path, field: Option<Field>) -> Result<Arc<Algebra>, CliError> {
    let spec: AlgebraJson = read_json(path)?;
    Ok(Algebra::from_json_with(&spec, field, DEFAULT_MAX_LEN)?)
}

/// A module argument: a JSON file, an inline JSON object, or an interval
/// such as `2/3/4`.
pub struct ModuleArg {
    pub spec: ModuleJson,
    pub base: Option<PathBuf>,
}

pub fn module_arg(arg: &str) -> Result<ModuleArg, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(ModuleArg { spec: read_json(path)?, base: path.parent().map(Path::to_path_buf) });
    }
    if arg.trim_start().starts_with('{') {
        let spec = serde_json::from_str(arg).map_err(|e| CliError::Input(format!("malformed module JSON: {e}")))?;
        return Ok(ModuleArg { spec, base: None });
    }
    if arg.ends_with(".json") {
        return Err(CliError::Input(format!("cannot read {arg}")));
    }
    Ok(ModuleArg { spec: ModuleJson::interval(arg), base: None })
}

impl ModuleArg {
    /// The algebra named inside the module file, if any.
    pub fn algebra_path(&self) -> Option<PathBuf> {
        let name = self.spec.algebra.as_ref()?;
        Some(match &self.base {
            Some(dir) if Path::new(name).is_relative() => dir.join(name),
            _ => PathBuf::from(name),
        })
    }

    pub fn build(&self, alg: &Arc<Algebra>) -> Result<Module, CliError> {
        Ok(Module::from_json(alg, &self.spec)?)
    }
}

pub struct CatalogueSource {
    pub cache_dir: Option<PathBuf>,
    pub max_dim: usize,
    pub max_count: usize,
}

impl CatalogueSource {
    fn cache_path(&self, alg: &Algebra) -> Option<PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        Some(dir.join(format!("catalogue-{}-{}-{}.json", alg.fingerprint(), self.max_dim, self.max_count)))
    }

    /// Loads from the cache when a matching entry exists, otherwise knits
    /// and stores the result. Cache failures are never fatal.
    pub fn get(&self, alg: &Arc<Algebra>) -> Result<Catalogue, CliError> {
        let path = self.cache_path(alg);
        if let Some(p) = &path {
            if let Ok(text) = fs::read_to_string(p) {
                if let Ok(json) = serde_json::from_str::<CatalogueJson>(&text) {
                    if let Ok(cat) = Catalogue::from_json(alg, &json) {
                        return Ok(cat);
                    }
                }
            }
        }
        let cat = Catalogue::build(alg, self.max_dim, self.max_count)?;
        if let Some(p) = &path {
            let _ = store(p, &cat);
        }
        Ok(cat)
    }
}

fn store(path: &Path, cat: &Catalogue) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let text = serde_json::to_string(&cat.to_json())?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

pub fn default_cache_dir() -> PathBuf {
    std::env::temp_dir().join("taucli-cache")
}
