//! Quivers, admissible relations and the normal-form path basis of a
//! bound quiver algebra.
//!
//! Paths compose left to right, so the relation `abc = 0` kills the path
//! that runs along `a`, then `b`, then `c`. Basis paths are ordered by
//! length and then lexicographically by arrow names; trivial paths come
//! first, in vertex order.

mod quiver;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

use crate::exactlin::{Field, LinalgError, Scalar, Span};
use crate::schema::{AlgebraJson, ArrowJson, TermJson};

pub use quiver::{Arrow, Path, Quiver, Relation};

pub const DEFAULT_MAX_LEN: usize = 20;
const MAX_PATH_SPACE: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("invalid quiver: {0}")]
    Quiver(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("ideal is not admissible within path length {0}")]
    NotAdmissible(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An element in basis coordinates.
pub type Element = Vec<Scalar>;

/// A finite-dimensional algebra `kQ/I` with a normal-form path basis.
pub struct Algebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    field: Field,
    max_len: usize,
    nilpotency: usize,
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    // all paths of length <= nilpotency, ordered by key
    monomials: Vec<Path>,
    monomial_index: HashMap<Path, usize>,
    // echelon basis of the truncated ideal; columns are monomials in
    // descending order so pivots land on the largest monomials
    ideal: Span,
    products: Vec<Vec<Vec<(usize, Scalar)>>>,
    fingerprint: String,
    opposite: OnceLock<Arc<Algebra>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("vertices", &self.quiver.vertices())
            .field("dim", &self.dim())
            .field("field", &self.field)
            .finish()
    }
}

fn path_key<'a>(q: &'a Quiver, p: &Path) -> (usize, Vec<&'a str>, usize) {
    (
        p.len(),
        p.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect(),
        p.source,
    )
}

fn all_paths(q: &Quiver, max_len: usize) -> Option<Vec<Path>> {
    let mut out: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for (a, arrow) in q.arrows().iter().enumerate() {
                if arrow.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path { source: p.source, target: arrow.target, arrows });
                }
            }
        }
        out.extend(next.iter().cloned());
        if out.len() > MAX_PATH_SPACE {
            return None;
        }
        frontier = next;
    }
    out.sort_by(|a, b| path_key(q, a).cmp(&path_key(q, b)));
    Some(out)
}

struct Truncation {
    monomials: Vec<Path>,
    index: HashMap<Path, usize>,
    len: usize,
}

impl Truncation {
    fn new(q: &Quiver, len: usize) -> Option<Self> {
        let monomials = all_paths(q, len)?;
        let index = monomials.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Some(Truncation { monomials, index, len })
    }

    fn column(&self, i: usize) -> usize {
        self.monomials.len() - 1 - i
    }

    fn monomial_at(&self, col: usize) -> &Path {
        &self.monomials[self.monomials.len() - 1 - col]
    }

    fn vector(&self, field: Field, terms: &[(Scalar, Path)]) -> Vec<Scalar> {
        let mut v = vec![Scalar::ZERO; self.monomials.len()];
        for (c, p) in terms {
            if p.len() > self.len {
                continue;
            }
            let col = self.column(self.index[p]);
            v[col] = field.add(&v[col], c);
        }
        v
    }

    fn terms(&self, v: &[Scalar]) -> Vec<(Scalar, Path)> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(col, c)| (c.clone(), self.monomial_at(col).clone()))
            .collect()
    }
}

fn multiply_terms(
    terms: &[(Scalar, Path)],
    left: Option<&Path>,
    right: Option<&Path>,
) -> Vec<(Scalar, Path)> {
    terms
        .iter()
        .filter_map(|(c, p)| {
            let p = match left {
                Some(l) => l.concat(p)?,
                None => p.clone(),
            };
            let p = match right {
                Some(r) => p.concat(r)?,
                None => p,
            };
            Some((c.clone(), p))
        })
        .collect()
}

impl Algebra {
    /// Builds `kQ/I`: the ideal is closed degree by degree under left and
    /// right multiplication by arrows, inside paths of length at most `N`,
    /// for the least `N <= max_len` at which every path of length `N`
    /// lies in the ideal.
    pub fn build(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: Field,
        max_len: usize,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        let relations: Vec<Relation> = relations
            .into_iter()
            .map(|r| {
                let terms = r
                    .terms
                    .into_iter()
                    .map(|(c, p)| Ok((field.embed(&c)?, p)))
                    .collect::<Result<Vec<_>, LinalgError>>()?;
                Relation::new(terms)
            })
            .collect::<Result<_, _>>()?;
        let arrow_paths: Vec<Path> = (0..quiver.arrow_count())
            .map(|a| quiver.path_from_arrows(&[a]).expect("single arrow"))
            .collect();

        for n in 1..=max_len {
            let trunc = Truncation::new(&quiver, n).ok_or(AlgebraError::NotAdmissible(max_len))?;
            let mut ideal = Span::new(field, trunc.monomials.len());
            let mut queue = Vec::new();
            for r in &relations {
                let v = trunc.vector(field, &r.terms);
                if ideal.insert(v.clone()) {
                    queue.push(v);
                }
            }
            while let Some(v) = queue.pop() {
                let terms = trunc.terms(&v);
                for a in &arrow_paths {
                    for (l, r) in [(Some(a), None), (None, Some(a))] {
                        let prod = multiply_terms(&terms, l, r);
                        let w = trunc.vector(field, &prod);
                        if ideal.insert(w.clone()) {
                            queue.push(w);
                        }
                    }
                }
            }
            let saturated = trunc.monomials.iter().enumerate().all(|(i, p)| {
                if p.len() < n {
                    return true;
                }
                let mut v = vec![Scalar::ZERO; trunc.monomials.len()];
                v[trunc.column(i)] = Scalar::ONE;
                ideal.contains(&v)
            });
            if !saturated {
                continue;
            }
            return Ok(Arc::new(Self::finish(quiver, relations, field, max_len, n, trunc, ideal)));
        }
        Err(AlgebraError::NotAdmissible(max_len))
    }

    fn finish(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: Field,
        max_len: usize,
        nilpotency: usize,
        trunc: Truncation,
        ideal: Span,
    ) -> Algebra {
        let pivot_cols: std::collections::HashSet<usize> = ideal.pivots().iter().copied().collect();
        let basis: Vec<Path> = trunc
            .monomials
            .iter()
            .enumerate()
            .filter(|(i, _)| !pivot_cols.contains(&trunc.column(*i)))
            .map(|(_, p)| p.clone())
            .collect();
        let basis_index = basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let fingerprint = fingerprint_of(&quiver, &relations, field);
        let mut alg = Algebra {
            quiver,
            relations,
            field,
            max_len,
            nilpotency,
            basis,
            basis_index,
            monomials: trunc.monomials,
            monomial_index: trunc.index,
            ideal,
            products: Vec::new(),
            fingerprint,
            opposite: OnceLock::new(),
        };
        let n = alg.basis.len();
        let mut products = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if let Some(p) = alg.basis[i].concat(&alg.basis[j]) {
                    products[i][j] = alg.reduce_terms(&[(Scalar::ONE, p)]);
                }
            }
        }
        alg.products = products;
        alg
    }

    /// Normal form of a linear combination of arbitrary paths, as sparse
    /// basis coordinates.
    fn reduce_terms(&self, terms: &[(Scalar, Path)]) -> Vec<(usize, Scalar)> {
        let m = self.monomials.len();
        let mut v = vec![Scalar::ZERO; m];
        for (c, p) in terms {
            if p.len() >= self.nilpotency && !p.is_trivial() {
                continue;
            }
            if let Some(&i) = self.monomial_index.get(p) {
                let col = m - 1 - i;
                v[col] = self.field.add(&v[col], c);
            }
        }
        let v = self.ideal.reduce(v);
        let mut out: Vec<(usize, Scalar)> = v
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(col, c)| (self.basis_index[&self.monomials[m - 1 - col]], c))
            .collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrow_count()
    }

    /// Least `N` such that every path of length `N` vanishes.
    pub fn nilpotency_bound(&self) -> usize {
        self.nilpotency
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    pub fn trivial_index(&self, v: usize) -> usize {
        self.basis_index[&Path::trivial(v)]
    }

    pub fn arrow_basis_index(&self, a: usize) -> usize {
        let p = Path { source: self.quiver.arrow(a).source, target: self.quiver.arrow(a).target, arrows: vec![a] };
        self.basis_index[&p]
    }

    /// Content hash of the presentation (field, quiver and relations).
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn same_presentation(&self, other: &Algebra) -> bool {
        self.fingerprint == other.fingerprint
    }

    pub fn zero_element(&self) -> Element {
        vec![Scalar::ZERO; self.dim()]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = self.zero_element();
        e[i] = Scalar::ONE;
        e
    }

    /// The normal form of a path given by arrow indices.
    pub fn path_element(&self, p: &Path) -> Element {
        self.from_terms(&[(Scalar::ONE, p.clone())])
    }

    pub fn from_terms(&self, terms: &[(Scalar, Path)]) -> Element {
        let mut e = self.zero_element();
        for (i, c) in self.reduce_terms(terms) {
            e[i] = c;
        }
        e
    }

    /// Normal form of the path spelled by arrow names.
    pub fn element_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Element, AlgebraError> {
        let p = self.quiver.path_from_names(names)?;
        Ok(self.path_element(&p))
    }

    /// Sparse product of two basis paths.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i][j]
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        let f = self.field;
        let mut out = self.zero_element();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in &self.products[i][j] {
                    out[*k] = f.add(&out[*k], &f.mul(&ab, c));
                }
            }
        }
        out
    }

    /// Basis indices of paths from `u` to `v`, in basis order.
    pub fn paths_between(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source == u && self.basis[i].target == v)
            .collect()
    }

    /// `dim e_v A`.
    pub fn paths_from(&self, v: usize) -> usize {
        self.basis.iter().filter(|p| p.source == v).count()
    }

    pub fn path_name(&self, i: usize) -> String {
        self.quiver.path_name(&self.basis[i])
    }

    pub fn format_element(&self, x: &[Scalar]) -> String {
        let parts: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if c.is_one() {
                    self.path_name(i)
                } else {
                    format!("{}*{}", c, self.path_name(i))
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// The opposite algebra: arrows and relation paths reversed.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.opposite
            .get_or_init(|| {
                let rels = self.relations.iter().map(Relation::reversed).collect();
                Algebra::build(self.quiver.opposite(), rels, self.field, self.max_len)
                    .expect("opposite of an admissible presentation is admissible")
            })
            .clone()
    }

    /// Transports an element to the opposite algebra `op` (reverse every
    /// path, then reduce there).
    pub fn element_to_opposite(&self, op: &Algebra, x: &[Scalar]) -> Element {
        debug_assert_eq!(op.vertex_count(), self.vertex_count());
        let terms: Vec<(Scalar, Path)> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), self.basis[i].reversed()))
            .collect();
        op.from_terms(&terms)
    }

    /// The same presentation over another field.
    pub fn with_field(&self, field: Field) -> Result<Arc<Algebra>, AlgebraError> {
        Algebra::build(self.quiver.clone(), self.relations.clone(), field, self.max_len)
    }

    pub fn from_json(spec: &AlgebraJson) -> Result<Arc<Algebra>, AlgebraError> {
        Self::from_json_with(spec, None, DEFAULT_MAX_LEN)
    }

    pub fn from_json_with(
        spec: &AlgebraJson,
        field: Option<Field>,
        max_len: usize,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        let arrows: Vec<(&str, &str, &str)> = spec
            .arrows
            .iter()
            .map(|a| (a.name.as_str(), a.from.as_str(), a.to.as_str()))
            .collect();
        let quiver = Quiver::new(&spec.vertices, &arrows)?;
        let mut relations = Vec::new();
        for rel in &spec.relations {
            let mut terms = Vec::new();
            for t in rel {
                let coeff: Scalar = t
                    .coeff
                    .parse()
                    .map_err(|_| AlgebraError::MalformedRelation(format!("bad coefficient {}", t.coeff)))?;
                terms.push((coeff, quiver.path_from_names(&t.path)?));
            }
            relations.push(Relation::new(terms)?);
        }
        Algebra::build(quiver, relations, field.unwrap_or(spec.field), max_len)
    }

    pub fn to_json(&self) -> AlgebraJson {
        to_json_parts(&self.quiver, &self.relations, self.field)
    }
}

fn to_json_parts(q: &Quiver, relations: &[Relation], field: Field) -> AlgebraJson {
    AlgebraJson {
        field,
        vertices: q.vertices().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowJson {
                name: a.name.clone(),
                from: q.vertex_name(a.source).to_string(),
                to: q.vertex_name(a.target).to_string(),
            })
            .collect(),
        relations: relations
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(c, p)| TermJson {
                        coeff: c.to_string(),
                        path: p.arrows.iter().map(|&a| q.arrow(a).name.clone()).collect(),
                    })
                    .collect()
            })
            .collect(),
    }
}

fn fingerprint_of(q: &Quiver, relations: &[Relation], field: Field) -> String {
    let json = serde_json::to_string(&to_json_parts(q, relations, field)).expect("serializable");
    hex::encode(Sha256::digest(json.as_bytes()))
}
