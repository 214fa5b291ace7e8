//! Right modules as quiver representations.
//!
//! A module assigns a space `k^{d_v}` to each vertex and to each arrow
//! `a: s -> t` a `d_s x d_t` matrix acting on row vectors, so a path
//! `ab` acts by the product `M(a) M(b)`.

mod hom;
mod map;

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraError, Element, Path};
use crate::exactlin::{Field, LinalgError, Matrix, Scalar, Span};
use crate::schema::{ModuleBody, ModuleJson, StandardKind};

pub use hom::{
    cogen_membership, cokernel, gen_membership, hom_basis, hom_dim, image, kernel, quotient,
    quotient_with_section, submodule, trace_dims, Factorization,
};
pub use map::ModuleMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("invalid interval {0}")]
    InvalidInterval(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("relation violated: {0}")]
    RelationViolation(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("bad scalar {0}")]
    Scalar(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone)]
pub struct Module {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.dims)
    }
}

/// Equal data over the same presentation; not isomorphism.
impl PartialEq for Module {
    fn eq(&self, other: &Module) -> bool {
        self.same_algebra(other) && self.dims == other.dims && self.mats == other.mats
    }
}

impl Module {
    /// Validates shapes and checks that every relation acts as zero.
    pub fn new(alg: Arc<Algebra>, dims: Vec<usize>, mats: Vec<Matrix>) -> Result<Self, ModuleError> {
        if dims.len() != alg.vertex_count() || mats.len() != alg.arrow_count() {
            return Err(ModuleError::Shape("wrong number of vertices or arrows".into()));
        }
        for (a, m) in mats.iter().enumerate() {
            let arrow = alg.quiver().arrow(a);
            if m.rows() != dims[arrow.source] || m.cols() != dims[arrow.target] {
                return Err(ModuleError::Shape(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    arrow.name,
                    dims[arrow.source],
                    dims[arrow.target],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != alg.field() {
                return Err(ModuleError::Shape(format!("arrow {} has entries in the wrong field", arrow.name)));
            }
        }
        let m = Module { alg, dims, mats };
        m.check_relations()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(alg: Arc<Algebra>, dims: Vec<usize>, mats: Vec<Matrix>) -> Self {
        let m = Module { alg, dims, mats };
        debug_assert!(m.check_relations().is_ok());
        m
    }

    fn check_relations(&self) -> Result<(), ModuleError> {
        let f = self.field();
        for rel in self.alg.relations() {
            let (s, t) = (rel.terms[0].1.source, rel.terms[0].1.target);
            let mut acc = Matrix::zeros(f, self.dims[s], self.dims[t]);
            for (c, p) in &rel.terms {
                acc = acc.add(&self.path_matrix(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(ModuleError::RelationViolation(self.alg.quiver().path_name(&rel.terms[0].1)));
            }
        }
        Ok(())
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        let dims = vec![0; alg.vertex_count()];
        let mats = vec![Matrix::zeros(alg.field(), 0, 0); alg.arrow_count()];
        Module { alg: alg.clone(), dims, mats }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_sincere(&self) -> bool {
        self.dims.iter().all(|&d| d > 0)
    }

    pub fn arrow_matrix(&self, a: usize) -> &Matrix {
        &self.mats[a]
    }

    pub fn arrow_matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || self.alg.same_presentation(&other.alg)
    }

    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            acc = acc.mul(&self.mats[a]);
        }
        acc
    }

    /// Action of the component of `x` in `e_u A e_w`, as a `d_u x d_w` matrix.
    pub fn element_matrix(&self, u: usize, w: usize, x: &[Scalar]) -> Matrix {
        let f = self.field();
        let mut acc = Matrix::zeros(f, self.dims[u], self.dims[w]);
        for i in self.alg.paths_between(u, w) {
            if !x[i].is_zero() {
                acc = acc.add(&self.path_matrix(&self.alg.basis()[i]).scale(&x[i]));
            }
        }
        acc
    }

    pub fn simple(alg: &Arc<Algebra>, v: usize) -> Self {
        let mut dims = vec![0; alg.vertex_count()];
        dims[v] = 1;
        Self::with_zero_arrows(alg, dims)
    }

    fn with_zero_arrows(alg: &Arc<Algebra>, dims: Vec<usize>) -> Self {
        let f = alg.field();
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.source], dims[a.target]))
            .collect();
        Module { alg: alg.clone(), dims, mats }
    }

    /// `P(v) = e_v A`, with the basis paths starting at `v` as basis.
    pub fn projective(alg: &Arc<Algebra>, v: usize) -> Self {
        let f = alg.field();
        let n = alg.vertex_count();
        let paths: Vec<Vec<usize>> = (0..n).map(|w| alg.paths_between(v, w)).collect();
        let dims: Vec<usize> = paths.iter().map(Vec::len).collect();
        let mats = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let ai = alg.arrow_basis_index(a);
                let mut m = Matrix::zeros(f, dims[arrow.source], dims[arrow.target]);
                for (r, &p) in paths[arrow.source].iter().enumerate() {
                    for (k, c) in alg.basis_product(p, ai) {
                        let col = paths[arrow.target].iter().position(|q| q == k).expect("path from v");
                        m.set(r, col, c.clone());
                    }
                }
                m
            })
            .collect();
        Module::new_unchecked(alg.clone(), dims, mats)
    }

    /// `I(v) = D(e_v A^op)`.
    pub fn injective(alg: &Arc<Algebra>, v: usize) -> Self {
        let op = alg.opposite();
        Module::projective(&op, v).dual_into(alg)
    }

    pub fn projectives(alg: &Arc<Algebra>) -> Vec<Module> {
        (0..alg.vertex_count()).map(|v| Module::projective(alg, v)).collect()
    }

    pub fn injectives(alg: &Arc<Algebra>) -> Vec<Module> {
        (0..alg.vertex_count()).map(|v| Module::injective(alg, v)).collect()
    }

    pub fn regular(alg: &Arc<Algebra>) -> Self {
        Module::direct_sum(alg, &Module::projectives(alg))
    }

    /// Uniserial module along a chain of vertices, written top first:
    /// `"2/3/4/5"`.
    pub fn from_interval(alg: &Arc<Algebra>, spec: &str) -> Result<Self, ModuleError> {
        let q = alg.quiver();
        let word: Vec<usize> = spec
            .split('/')
            .map(|t| {
                let t = t.trim();
                q.vertex_index(t).ok_or_else(|| ModuleError::UnknownVertex(t.to_string()))
            })
            .collect::<Result<_, _>>()?;
        if word.is_empty() {
            return Err(ModuleError::InvalidInterval(spec.into()));
        }
        let mut seen = vec![false; q.vertex_count()];
        for &v in &word {
            if std::mem::replace(&mut seen[v], true) {
                return Err(ModuleError::InvalidInterval(format!("{spec}: repeated vertex")));
            }
        }
        let mut arrows = Vec::new();
        for w in word.windows(2) {
            match q.arrows_between(w[0], w[1]).as_slice() {
                [a] => arrows.push(*a),
                [] => return Err(ModuleError::InvalidInterval(format!("{spec}: no arrow between consecutive vertices"))),
                _ => return Err(ModuleError::InvalidInterval(format!("{spec}: parallel arrows are ambiguous"))),
            }
        }
        if !arrows.is_empty() {
            let p = q.path_from_arrows(&arrows).expect("consecutive arrows compose");
            if alg.path_element(&p).iter().all(Scalar::is_zero) {
                return Err(ModuleError::InvalidInterval(format!("{spec}: path is zero in the algebra")));
            }
        }
        let mut dims = vec![0; q.vertex_count()];
        for &v in &word {
            dims[v] = 1;
        }
        let mut m = Self::with_zero_arrows(alg, dims);
        for a in arrows {
            m.mats[a] = Matrix::identity(alg.field(), 1);
        }
        m.check_relations().map_err(|_| ModuleError::InvalidInterval(spec.into()))?;
        Ok(m)
    }

    pub fn direct_sum(alg: &Arc<Algebra>, parts: &[Module]) -> Self {
        let f = alg.field();
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|m| m.dims[v]).sum()).collect();
        let mats = (0..alg.arrow_count())
            .map(|a| {
                let blocks: Vec<Matrix> = parts.iter().map(|m| m.mats[a].clone()).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Module { alg: alg.clone(), dims, mats }
    }

    pub fn oplus(&self, other: &Module) -> Module {
        Module::direct_sum(&self.alg, &[self.clone(), other.clone()])
    }

    /// Same data over another copy of the same presentation.
    pub fn over(&self, alg: &Arc<Algebra>) -> Module {
        assert!(self.alg.same_presentation(alg), "module moved to a different algebra");
        Module { alg: alg.clone(), dims: self.dims.clone(), mats: self.mats.clone() }
    }

    /// `D M = Hom_k(M, k)`, a right module over the opposite algebra.
    pub fn dual(&self) -> Module {
        let op = self.alg.opposite();
        self.dual_into(&op)
    }

    /// The dual, placed over `target`, which must present the opposite of
    /// this module's algebra.
    pub fn dual_into(&self, target: &Arc<Algebra>) -> Module {
        debug_assert!(target.same_presentation(&self.alg.opposite()));
        let mats = self.mats.iter().map(Matrix::transpose).collect();
        Module { alg: target.clone(), dims: self.dims.clone(), mats }
    }

    pub fn with_field(&self, alg: &Arc<Algebra>) -> Result<Module, ModuleError> {
        let f = alg.field();
        let mats = self
            .mats
            .iter()
            .map(|m| Matrix::new(f, m.rows(), m.cols(), m.entries().to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        Module::new(alg.clone(), self.dims.clone(), mats)
    }

    pub fn from_json(alg: &Arc<Algebra>, spec: &ModuleJson) -> Result<Module, ModuleError> {
        let q = alg.quiver();
        let vertex = |name: &str| q.vertex_index(name).ok_or_else(|| ModuleError::UnknownVertex(name.to_string()));
        match &spec.body {
            ModuleBody::Interval { interval } => Module::from_interval(alg, interval),
            ModuleBody::Standard { standard } => {
                let v = vertex(&standard.vertex)?;
                Ok(match standard.kind {
                    StandardKind::Simple => Module::simple(alg, v),
                    StandardKind::Projective => Module::projective(alg, v),
                    StandardKind::Injective => Module::injective(alg, v),
                })
            }
            ModuleBody::Sum { sum } => {
                let parts = sum.iter().map(|p| Module::from_json(alg, p)).collect::<Result<Vec<_>, _>>()?;
                Ok(Module::direct_sum(alg, &parts))
            }
            ModuleBody::Explicit { dims, matrices } => {
                let mut d = vec![0; q.vertex_count()];
                for (name, &k) in dims {
                    d[vertex(name)?] = k;
                }
                let f = alg.field();
                let mut mats: Vec<Matrix> = q
                    .arrows()
                    .iter()
                    .map(|a| Matrix::zeros(f, d[a.source], d[a.target]))
                    .collect();
                for (name, rows) in matrices {
                    let a = q.arrow_index(name).ok_or_else(|| ModuleError::UnknownArrow(name.clone()))?;
                    let (r, c) = (d[q.arrow(a).source], d[q.arrow(a).target]);
                    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                        return Err(ModuleError::Shape(format!("arrow {name} needs a {r}x{c} matrix")));
                    }
                    let entries = rows
                        .iter()
                        .flatten()
                        .map(|x| x.to_string().parse::<Scalar>().map_err(|_| ModuleError::Scalar(x.to_string())))
                        .collect::<Result<Vec<_>, _>>()?;
                    mats[a] = Matrix::new(f, r, c, entries)?;
                }
                Module::new(alg.clone(), d, mats)
            }
        }
    }

    pub fn to_json(&self) -> ModuleJson {
        let q = self.alg.quiver();
        let dims = (0..q.vertex_count()).map(|v| (q.vertex_name(v).to_string(), self.dims[v])).collect();
        let matrices = self
            .mats
            .iter()
            .enumerate()
            .filter(|(_, m)| m.rows() > 0 && m.cols() > 0)
            .map(|(a, m)| {
                let rows = (0..m.rows())
                    .map(|i| m.row(i).iter().map(|x| crate::schema::ScalarJson::Str(x.to_string())).collect())
                    .collect();
                (q.arrow(a).name.clone(), rows)
            })
            .collect();
        ModuleJson { algebra: None, body: ModuleBody::Explicit { dims, matrices } }
    }

    /// Radical submodule, as row bases per vertex.
    pub fn radical_rows(&self) -> Vec<Matrix> {
        let full: Vec<Matrix> = self.dims.iter().map(|&d| Matrix::identity(self.field(), d)).collect();
        self.radical_of(&full)
    }

    /// `rad S` for a submodule given by per-vertex row bases.
    pub fn radical_of(&self, rows: &[Matrix]) -> Vec<Matrix> {
        let f = self.field();
        let mut spans: Vec<Span> = self.dims.iter().map(|&d| Span::new(f, d)).collect();
        for (a, arrow) in self.alg.quiver().arrows().iter().enumerate() {
            let img = rows[arrow.source].mul(&self.mats[a]);
            for r in img.row_vecs() {
                spans[arrow.target].insert(r);
            }
        }
        spans.iter().map(Span::basis).collect()
    }

    pub fn socle_rows(&self) -> Vec<Matrix> {
        let f = self.field();
        (0..self.dims.len())
            .map(|v| {
                let out: Vec<usize> = (0..self.mats.len())
                    .filter(|&a| self.alg.quiver().arrow(a).source == v)
                    .collect();
                let mut big = Matrix::zeros(f, self.dims[v], 0);
                for a in out {
                    big = big.hstack(&self.mats[a]);
                }
                big.left_kernel()
            })
            .collect()
    }

    /// Dimension vectors of the radical layers `rad^i M / rad^{i+1} M`.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let f = self.field();
        let mut current: Vec<Matrix> = self.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        let mut layers = Vec::new();
        while current.iter().any(|m| m.rows() > 0) {
            let next = self.radical_of(&current);
            layers.push(current.iter().zip(&next).map(|(a, b)| a.rows() - b.rows()).collect());
            current = next;
        }
        layers
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_rows().iter().zip(&self.dims).map(|(r, d)| d - r.rows()).collect()
    }

    /// Loewy-layer label, e.g. `"4/1 5/2"`; `"0"` for the zero module.
    pub fn layer_label(&self) -> String {
        let layers = self.radical_layers();
        if layers.is_empty() {
            return "0".into();
        }
        let q = self.alg.quiver();
        layers
            .iter()
            .map(|layer| {
                let mut names = Vec::new();
                for (v, &k) in layer.iter().enumerate() {
                    for _ in 0..k {
                        names.push(q.vertex_name(v));
                    }
                }
                names.join(" ")
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    pub fn is_projective(&self) -> bool {
        // projective iff dim equals that of its projective cover
        let top = self.top_dims();
        let cover: usize = top
            .iter()
            .enumerate()
            .map(|(v, k)| k * self.alg.paths_from(v))
            .sum();
        cover == self.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.dual().is_projective()
    }

    /// Submodule generated by the given vectors (`(vertex, vector)` pairs),
    /// as per-vertex row bases.
    pub fn generated(&self, gens: &[(usize, Vec<Scalar>)]) -> Vec<Matrix> {
        let f = self.field();
        let mut spans: Vec<Span> = self.dims.iter().map(|&d| Span::new(f, d)).collect();
        let mut queue: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for (v, x) in gens {
            if spans[*v].insert(x.clone()) {
                queue.push((*v, x.clone()));
            }
        }
        while let Some((v, x)) = queue.pop() {
            for (a, arrow) in self.alg.quiver().arrows().iter().enumerate() {
                if arrow.source == v {
                    let y = self.mats[a].left_apply(&x);
                    if spans[arrow.target].insert(y.clone()) {
                        queue.push((arrow.target, y));
                    }
                }
            }
        }
        spans.iter().map(Span::basis).collect()
    }

    /// Image of `x in M_v` under right multiplication by an element.
    pub fn act(&self, v: usize, x: &[Scalar], w: usize, a: &Element) -> Vec<Scalar> {
        self.element_matrix(v, w, a).left_apply(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cluster_tilted_b, tilted_c};

    #[test]
    fn projective_dimension_vectors() {
        let c = tilted_c();
        let b = cluster_tilted_b();
        assert_eq!(Module::projective(&c, 2).dims(), &[0, 0, 1, 1, 1]);
        assert_eq!(Module::projective(&b, 3).dims(), &[1, 1, 0, 1, 1]);
        assert_eq!(Module::projective(&b, 3).layer_label(), "4/1 5/2");
        assert_eq!(Module::regular(&c).dim(), c.dim());
        assert_eq!(Module::regular(&b).dim(), b.dim());
        let s1 = Module::simple(&c, 0);
        assert_eq!(s1.dims(), &[1, 0, 0, 0, 0]);
        assert!(s1.arrow_matrices().iter().all(Matrix::is_zero));
    }

    #[test]
    fn intervals() {
        let c = tilted_c();
        let m = Module::from_interval(&c, "2/3/4/5").unwrap();
        assert_eq!(m.dims(), &[0, 1, 1, 1, 1]);
        assert_eq!(m.layer_label(), "2/3/4/5");
        assert!(matches!(Module::from_interval(&c, "1/2/3/4"), Err(ModuleError::InvalidInterval(_))));
        assert!(matches!(Module::from_interval(&c, "1/3"), Err(ModuleError::InvalidInterval(_))));
        assert!(matches!(Module::from_interval(&c, "9"), Err(ModuleError::UnknownVertex(_))));
    }

    #[test]
    fn injectives_of_c() {
        let c = tilted_c();
        // I(4) = 2/3/4 since 1/2/3/4 vanishes
        assert_eq!(Module::injective(&c, 3).layer_label(), "2/3/4");
        assert_eq!(Module::injective(&c, 4).layer_label(), "2/3/4/5");
        assert!(Module::injective(&c, 3).is_injective());
        assert!(!Module::injective(&c, 3).is_projective());
        assert!(Module::projective(&c, 1).is_injective());
    }

    #[test]
    fn radical_and_socle() {
        let c = tilted_c();
        let m = Module::from_interval(&c, "1/2/3").unwrap();
        let soc: Vec<usize> = m.socle_rows().iter().map(Matrix::rows).collect();
        assert_eq!(soc, vec![0, 0, 1, 0, 0]);
        let rad: Vec<usize> = m.radical_rows().iter().map(Matrix::rows).collect();
        assert_eq!(rad, vec![0, 1, 1, 0, 0]);
    }

    #[test]
    fn relation_checked_on_construction() {
        let c = tilted_c();
        let one = Matrix::identity(c.field(), 1);
        let bad = Module::new(c.clone(), vec![1, 1, 1, 1, 0], vec![one.clone(), one.clone(), one, Matrix::zeros(c.field(), 1, 0)]);
        assert!(matches!(bad, Err(ModuleError::RelationViolation(_))));
    }

    #[test]
    fn json_round_trip() {
        let b = cluster_tilted_b();
        let p = Module::projective(&b, 3);
        let back = Module::from_json(&b, &p.to_json()).unwrap();
        assert_eq!(back.dims(), p.dims());
        assert_eq!(back.arrow_matrices(), p.arrow_matrices());
    }
}
