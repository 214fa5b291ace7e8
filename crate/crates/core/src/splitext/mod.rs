//! Split extensions `B = C ⋉ E` with `σ: C -> B` given by an arrow
//! embedding and `π: B -> C` killing the remaining arrows, together with
//! induction, coinduction, restriction and `- ⊗_C E`.

mod check;
mod scenario;

use std::collections::BTreeSet;
use std::path::Path as FsPath;
use std::sync::{Arc, OnceLock};

use crate::algebra::{Algebra, AlgebraError, Element, Path, DEFAULT_MAX_LEN};
use crate::exactlin::{Field, Matrix, Scalar};
use crate::homological::{map_from_generators, min_presentation, projective_cover, projective_map, tau};
use crate::repmod::{hom_basis, hom_dim, kernel, quotient_with_section, Module, ModuleError, ModuleMap};
use crate::schema::{AlgebraJson, AlgebraRef, SplitJson};
use crate::tautilt::TauError;

pub use check::{
    adjunction_dim_check, check_statement, CheckInputs, CheckReport, Form, Hypothesis, Statement, SubVerdict,
    SummandRow, Verdict,
};
pub use scenario::{load_scenario, Scenario};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SplitError {
    #[error("invalid split data: {0}")]
    Invalid(String),
    #[error("not an algebra morphism: {0}")]
    NotAMorphism(String),
    #[error("π∘σ is not the identity: {0}")]
    NotSplit(String),
    #[error("module lives over the wrong algebra (expected {0})")]
    WrongAlgebra(&'static str),
    #[error("unknown statement {0}")]
    UnknownStatement(String),
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("malformed JSON in {path}: {reason}")]
    Json { path: String, reason: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Tau(#[from] TauError),
}

/// A validated split extension.
pub struct SplitExtension {
    b: Arc<Algebra>,
    c: Arc<Algebra>,
    // C vertex -> B vertex, and back
    vmap: Vec<usize>,
    vinv: Vec<usize>,
    // C arrow -> B arrow
    embed: Vec<usize>,
    // B arrow -> C arrow, None on extension arrows
    project: Vec<Option<usize>>,
    extension: Vec<usize>,
    e_dim: usize,
    opposite: OnceLock<Box<SplitExtension>>,
}

impl std::fmt::Debug for SplitExtension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SplitExtension")
            .field("dim_b", &self.b.dim())
            .field("dim_c", &self.c.dim())
            .field("extension", &self.extension)
            .finish()
    }
}

/// `induce(M)` together with the canonical surjection onto `M` viewed over
/// `B`, whose kernel is `M ⊗_C E`.
#[derive(Clone, Debug)]
pub struct TensorE {
    pub induced: Module,
    pub surjection: ModuleMap,
    /// The kernel as a `B`-module.
    pub kernel_b: Module,
    /// The kernel restricted to `C`.
    pub e_part: Module,
}

impl SplitExtension {
    /// Builds and validates. Vertex and arrow maps are given by index.
    pub fn new(
        b: Arc<Algebra>,
        c: Arc<Algebra>,
        vmap: Vec<usize>,
        embed: Vec<usize>,
        declared_extension: Option<Vec<usize>>,
    ) -> Result<SplitExtension, SplitError> {
        if b.field() != c.field() {
            return Err(SplitError::Invalid("B and C are over different fields".into()));
        }
        let n = c.vertex_count();
        if vmap.len() != n || b.vertex_count() != n {
            return Err(SplitError::Invalid("the vertex map must be a bijection".into()));
        }
        let mut vinv = vec![usize::MAX; n];
        for (v, &w) in vmap.iter().enumerate() {
            if w >= n || vinv[w] != usize::MAX {
                return Err(SplitError::Invalid("the vertex map must be a bijection".into()));
            }
            vinv[w] = v;
        }
        if embed.len() != c.arrow_count() {
            return Err(SplitError::Invalid("every arrow of C needs an image".into()));
        }
        let mut project = vec![None; b.arrow_count()];
        for (a, &ba) in embed.iter().enumerate() {
            let (ca, arrow) = (c.quiver().arrow(a), b.quiver().arrow(ba));
            if project[ba].is_some() {
                return Err(SplitError::Invalid(format!("arrow {} is hit twice", arrow.name)));
            }
            if vmap[ca.source] != arrow.source || vmap[ca.target] != arrow.target {
                return Err(SplitError::Invalid(format!("{} and {} have different endpoints", ca.name, arrow.name)));
            }
            project[ba] = Some(a);
        }
        let extension: Vec<usize> = (0..b.arrow_count()).filter(|&a| project[a].is_none()).collect();
        if let Some(declared) = declared_extension {
            let declared: BTreeSet<usize> = declared.into_iter().collect();
            if declared != extension.iter().copied().collect() {
                return Err(SplitError::Invalid(
                    "extension arrows must be exactly the arrows of B outside the embedding".into(),
                ));
            }
        }
        let mut s = SplitExtension {
            b,
            c,
            vmap,
            vinv,
            embed,
            project,
            extension,
            e_dim: 0,
            opposite: OnceLock::new(),
        };
        s.validate()?;
        Ok(s)
    }

    /// Loads the JSON form; algebra paths resolve against `base`, and
    /// `field` overrides the field named in the algebra files.
    pub fn from_json(
        spec: &SplitJson,
        base: Option<&FsPath>,
        field: Option<Field>,
    ) -> Result<SplitExtension, SplitError> {
        let b = load_algebra(&spec.b, base, field)?;
        let c = load_algebra(&spec.c, base, field)?;
        let (bq, cq) = (b.quiver(), c.quiver());
        let vertex_b = |name: &str| {
            bq.vertex_index(name).ok_or_else(|| SplitError::Invalid(format!("unknown vertex {name} of B")))
        };
        let arrow_b = |name: &str| {
            bq.arrow_index(name).ok_or_else(|| SplitError::Invalid(format!("unknown arrow {name} of B")))
        };
        let vmap = cq
            .vertices()
            .iter()
            .map(|v| vertex_b(spec.vertex_map.get(v).map(String::as_str).unwrap_or(v)))
            .collect::<Result<Vec<_>, _>>()?;
        for k in spec.vertex_map.keys() {
            if cq.vertex_index(k).is_none() {
                return Err(SplitError::Invalid(format!("unknown vertex {k} of C")));
            }
        }
        let embed = cq
            .arrows()
            .iter()
            .map(|a| arrow_b(spec.arrow_embed.get(&a.name).map(String::as_str).unwrap_or(&a.name)))
            .collect::<Result<Vec<_>, _>>()?;
        for k in spec.arrow_embed.keys() {
            if cq.arrow_index(k).is_none() {
                return Err(SplitError::Invalid(format!("unknown arrow {k} of C")));
            }
        }
        let declared = if spec.extension_arrows.is_empty() {
            None
        } else {
            Some(spec.extension_arrows.iter().map(|a| arrow_b(a)).collect::<Result<Vec<_>, _>>()?)
        };
        SplitExtension::new(b, c, vmap, embed, declared)
    }

    pub fn from_file(path: &FsPath, field: Option<Field>) -> Result<SplitExtension, SplitError> {
        let spec: SplitJson = read_json(path)?;
        SplitExtension::from_json(&spec, path.parent(), field)
    }

    fn validate(&mut self) -> Result<(), SplitError> {
        let (b, c) = (&self.b, &self.c);
        for r in c.relations() {
            let terms: Vec<(Scalar, Path)> = r.terms.iter().map(|(k, p)| (k.clone(), self.sigma_path(p))).collect();
            if b.from_terms(&terms).iter().any(|x| !x.is_zero()) {
                return Err(SplitError::NotAMorphism(format!(
                    "σ sends the relation {} of C to a nonzero element of B",
                    relation_name(c, &r.terms)
                )));
            }
        }
        for r in b.relations() {
            let terms: Vec<(Scalar, Path)> =
                r.terms.iter().filter_map(|(k, p)| Some((k.clone(), self.pi_path(p)?))).collect();
            if c.from_terms(&terms).iter().any(|x| !x.is_zero()) {
                return Err(SplitError::NotAMorphism(format!(
                    "π sends the relation {} of B to a nonzero element of C",
                    relation_name(b, &r.terms)
                )));
            }
        }
        for i in 0..c.dim() {
            let x = c.basis_element(i);
            if self.pi(&self.sigma(&x)) != x {
                return Err(SplitError::NotSplit(format!("at the basis path {}", c.path_name(i))));
            }
        }
        // π is onto because π∘σ = 1, so E = ker π has the complementary dimension
        let rows: Vec<Vec<Scalar>> = (0..b.dim()).map(|i| self.pi(&b.basis_element(i))).collect();
        let rank = Matrix::from_rows(b.field(), c.dim(), rows).map_err(AlgebraError::from)?.rank();
        if rank != c.dim() {
            return Err(SplitError::NotSplit("π is not surjective".into()));
        }
        self.e_dim = b.dim() - c.dim();
        Ok(())
    }

    pub fn b(&self) -> &Arc<Algebra> {
        &self.b
    }

    pub fn c(&self) -> &Arc<Algebra> {
        &self.c
    }

    pub fn e_dim(&self) -> usize {
        self.e_dim
    }

    pub fn extension_arrows(&self) -> &[usize] {
        &self.extension
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vmap
    }

    pub fn sigma_path(&self, p: &Path) -> Path {
        if p.is_trivial() {
            return Path::trivial(self.vmap[p.source]);
        }
        let arrows: Vec<usize> = p.arrows.iter().map(|&a| self.embed[a]).collect();
        self.b.quiver().path_from_arrows(&arrows).expect("embedding preserves endpoints")
    }

    /// `None` when the path runs through an extension arrow.
    pub fn pi_path(&self, p: &Path) -> Option<Path> {
        if p.is_trivial() {
            return Some(Path::trivial(self.vinv[p.source]));
        }
        let arrows = p.arrows.iter().map(|&a| self.project[a]).collect::<Option<Vec<usize>>>()?;
        self.c.quiver().path_from_arrows(&arrows)
    }

    pub fn sigma(&self, x: &[Scalar]) -> Element {
        let terms: Vec<(Scalar, Path)> = nonzero_terms(&self.c, x, |p| Some(self.sigma_path(p)));
        self.b.from_terms(&terms)
    }

    pub fn pi(&self, x: &[Scalar]) -> Element {
        let terms = nonzero_terms(&self.b, x, |p| self.pi_path(p));
        self.c.from_terms(&terms)
    }

    /// The extension between the opposite algebras, with the same maps.
    pub fn opposite(&self) -> &SplitExtension {
        self.opposite.get_or_init(|| {
            Box::new(SplitExtension {
                b: self.b.opposite(),
                c: self.c.opposite(),
                vmap: self.vmap.clone(),
                vinv: self.vinv.clone(),
                embed: self.embed.clone(),
                project: self.project.clone(),
                extension: self.extension.clone(),
                e_dim: self.e_dim,
                opposite: OnceLock::new(),
            })
        })
    }

    fn require_c(&self, m: &Module) -> Result<(), SplitError> {
        if self.c.same_presentation(m.algebra()) {
            Ok(())
        } else {
            Err(SplitError::WrongAlgebra("C"))
        }
    }

    fn require_b(&self, x: &Module) -> Result<(), SplitError> {
        if self.b.same_presentation(x.algebra()) {
            Ok(())
        } else {
            Err(SplitError::WrongAlgebra("B"))
        }
    }

    /// `M` as a `B`-module through `π`: extension arrows act as zero.
    pub fn view_as_b(&self, m: &Module) -> Result<Module, SplitError> {
        self.require_c(m)?;
        let mut dims = vec![0; self.b.vertex_count()];
        for (v, &w) in self.vmap.iter().enumerate() {
            dims[w] = m.dim_at(v);
        }
        let f = self.b.field();
        let mats = self
            .b
            .quiver()
            .arrows()
            .iter()
            .zip(&self.project)
            .map(|(arrow, ca)| match ca {
                Some(ca) => m.arrow_matrix(*ca).clone(),
                None => Matrix::zeros(f, dims[arrow.source], dims[arrow.target]),
            })
            .collect();
        Ok(Module::new(self.b.clone(), dims, mats)?)
    }

    /// Restriction of scalars along `σ`.
    pub fn restrict(&self, x: &Module) -> Result<Module, SplitError> {
        self.require_b(x)?;
        let dims = self.vmap.iter().map(|&w| x.dim_at(w)).collect();
        let mats = self.embed.iter().map(|&ba| x.arrow_matrix(ba).clone()).collect();
        Ok(Module::new(self.c.clone(), dims, mats)?)
    }

    /// `M ⊗_C B`, by lifting a minimal presentation along `σ`.
    pub fn induce(&self, m: &Module) -> Result<Module, SplitError> {
        Ok(self.tensor_with_e(m)?.induced)
    }

    /// `0 -> M ⊗_C E -> M ⊗_C B -> M -> 0`.
    pub fn tensor_with_e(&self, m: &Module) -> Result<TensorE, SplitError> {
        self.require_c(m)?;
        let b = &self.b;
        let pres = min_presentation(m);
        let p1: Vec<usize> = pres.p1_tops.iter().map(|&v| self.vmap[v]).collect();
        let p0: Vec<usize> = pres.p0_tops.iter().map(|&v| self.vmap[v]).collect();
        let entries: Vec<Vec<Element>> =
            pres.entries.iter().map(|row| row.iter().map(|x| self.sigma(x)).collect()).collect();
        let (_, p0_module, d) = projective_map(b, &p1, &p0, &entries);
        let rows: Vec<Matrix> = d.components.iter().map(Matrix::row_space).collect();
        let (induced, _, section) = quotient_with_section(&p0_module, &rows);

        let viewed = self.view_as_b(m)?;
        let cover = projective_cover(m);
        debug_assert_eq!(cover.tops, pres.p0_tops);
        let generators: Vec<Vec<Scalar>> = cover.generators.clone();
        let (_, g) = map_from_generators(&viewed, &p0, &generators);
        let surjection = ModuleMap { components: section.iter().zip(&g.components).map(|(s, c)| s.mul(c)).collect() };
        if !surjection.is_homomorphism(&induced, &viewed) || !surjection.is_surjective() {
            return Err(TauError::InternalInconsistency("canonical map M ⊗ B -> M is not onto".into()).into());
        }
        let (kernel_b, _) = kernel(&induced, &surjection);
        let e_part = self.restrict(&kernel_b)?;
        Ok(TensorE { induced, surjection, kernel_b, e_part })
    }

    /// `D(B ⊗_C DM)`, computed by inducing over the opposite extension.
    pub fn coinduce(&self, m: &Module) -> Result<Module, SplitError> {
        self.require_c(m)?;
        let op = self.opposite();
        let dm = m.dual_into(op.c());
        Ok(op.induce(&dm)?.dual_into(&self.b))
    }

    /// `D(E ⊗_C DM)`, the cokernel in `0 -> M -> coinduce(M) -> D(E ⊗ DM) -> 0`.
    pub fn coinduce_e_part(&self, m: &Module) -> Result<Module, SplitError> {
        self.require_c(m)?;
        let op = self.opposite();
        let dm = m.dual_into(op.c());
        Ok(op.tensor_with_e(&dm)?.e_part.dual_into(&self.c))
    }

    /// `E` as a right `C`-module.
    pub fn e_right(&self) -> Result<Module, SplitError> {
        Ok(self.tensor_with_e(&Module::regular(&self.c))?.e_part)
    }

    /// `D(E)` as a right `C`-module; its action comes from the left
    /// `C`-structure of `E`.
    pub fn dual_e(&self) -> Result<Module, SplitError> {
        let op = self.opposite();
        Ok(op.e_right()?.dual_into(&self.c))
    }

    /// Whether `τ_B(induce M)` embeds in `τ_B(view M)`; an injective map is
    /// searched for in the Hom space.
    pub fn tau_induced_embeds(&self, m: &Module) -> Result<bool, SplitError> {
        let small = tau(&self.induce(m)?);
        let big = tau(&self.view_as_b(m)?);
        Ok(find_injective(&small, &big).is_some())
    }

    /// Both adjunction dimensions for `(M, X)`, as `(lhs, rhs)` pairs:
    /// `Hom_B(X, τ_B(M⊗B))` against `Hom_C(X_C, τ_C M)`, and `Hom_B(M⊗B, X)`
    /// against `Hom_C(M, X_C)`.
    pub fn adjunction_dims(&self, m: &Module, x: &Module) -> Result<[(usize, usize); 2], SplitError> {
        let induced = self.induce(m)?;
        let xc = self.restrict(x)?;
        Ok([
            (hom_dim(x, &tau(&induced)), hom_dim(&xc, &tau(m))),
            (hom_dim(&induced, x), hom_dim(m, &xc)),
        ])
    }
}

/// An injective homomorphism `X -> Y`, if a basis element or a sampled
/// combination is one.
pub fn find_injective(x: &Module, y: &Module) -> Option<ModuleMap> {
    if x.is_zero() {
        return Some(ModuleMap::zero(x, y));
    }
    if x.dims().iter().zip(y.dims()).any(|(a, b)| a > b) {
        return None;
    }
    let basis = hom_basis(x, y);
    if let Some(f) = basis.iter().find(|f| f.is_injective()) {
        return Some(f.clone());
    }
    let field = x.field();
    let mut state: u64 = 0x9e3779b97f4a7c15;
    for k in 0..96 {
        let coeffs: Vec<Scalar> = (0..basis.len())
            .map(|i| {
                if k < 16 {
                    field.pow(&field.from_int(k as i64 + 2), i as u32)
                } else {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    field.from_int(((state >> 33) % 11) as i64 - 5)
                }
            })
            .collect();
        let f = ModuleMap::combination(&basis, &coeffs);
        if f.is_injective() {
            return Some(f);
        }
    }
    None
}

fn nonzero_terms(
    alg: &Algebra,
    x: &[Scalar],
    map: impl Fn(&Path) -> Option<Path>,
) -> Vec<(Scalar, Path)> {
    x.iter()
        .enumerate()
        .filter(|(_, k)| !k.is_zero())
        .filter_map(|(i, k)| Some((k.clone(), map(&alg.basis()[i])?)))
        .collect()
}

fn relation_name(alg: &Algebra, terms: &[(Scalar, Path)]) -> String {
    terms
        .iter()
        .map(|(k, p)| {
            let name = alg.quiver().path_name(p);
            if k.is_one() {
                name
            } else {
                format!("{k}·{name}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub(crate) fn read_json<T: serde::de::DeserializeOwned>(path: &FsPath) -> Result<T, SplitError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| SplitError::Io { path: path.display().to_string(), reason: e.to_string() })?;
    serde_json::from_str(&text).map_err(|e| SplitError::Json { path: path.display().to_string(), reason: e.to_string() })
}

pub(crate) fn load_algebra(
    r: &AlgebraRef,
    base: Option<&FsPath>,
    field: Option<Field>,
) -> Result<Arc<Algebra>, SplitError> {
    let spec: AlgebraJson = match r {
        AlgebraRef::Inline(spec) => spec.clone(),
        AlgebraRef::Path(p) => read_json(&resolve(base, p))?,
    };
    Ok(Algebra::from_json_with(&spec, field, DEFAULT_MAX_LEN)?)
}

pub(crate) fn resolve(base: Option<&FsPath>, p: &str) -> std::path::PathBuf {
    match base {
        Some(dir) if FsPath::new(p).is_relative() => dir.join(p),
        _ => FsPath::new(p).to_path_buf(),
    }
}
