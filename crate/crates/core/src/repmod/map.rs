use crate::exactlin::{Field, Matrix, Scalar};

use super::Module;

/// A module homomorphism, stored as one `d_src(v) x d_tgt(v)` matrix per
/// vertex. Source and target are tracked by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub components: Vec<Matrix>,
}

impl ModuleMap {
    pub fn zero(src: &Module, tgt: &Module) -> Self {
        let f = src.field();
        ModuleMap {
            components: src.dims().iter().zip(tgt.dims()).map(|(&a, &b)| Matrix::zeros(f, a, b)).collect(),
        }
    }

    pub fn identity(m: &Module) -> Self {
        ModuleMap { components: m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect() }
    }

    pub fn field(&self) -> Option<Field> {
        self.components.first().map(Matrix::field)
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.components[v]
    }

    /// Checks the commuting squares `F_s N(a) = M(a) F_t`.
    pub fn is_homomorphism(&self, src: &Module, tgt: &Module) -> bool {
        let q = src.algebra().quiver();
        self.components.len() == src.dims().len()
            && self
                .components
                .iter()
                .enumerate()
                .all(|(v, c)| c.rows() == src.dim_at(v) && c.cols() == tgt.dim_at(v))
            && q.arrows().iter().enumerate().all(|(a, arrow)| {
                self.components[arrow.source].mul(tgt.arrow_matrix(a))
                    == src.arrow_matrix(a).mul(&self.components[arrow.target])
            })
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { components: self.components.iter().zip(&g.components).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { components: self.components.iter().zip(&g.components).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, g: &ModuleMap) -> ModuleMap {
        ModuleMap { components: self.components.iter().zip(&g.components).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap { components: self.components.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(|c| c.is_square() && c.rank() == c.rows())
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let components = self.components.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(ModuleMap { components })
    }

    /// `D f: D N -> D M`.
    pub fn dual(&self) -> ModuleMap {
        ModuleMap { components: self.components.iter().map(Matrix::transpose).collect() }
    }

    /// Linear combination `sum c_i f_i`; `maps` must be nonempty.
    pub fn combination(maps: &[ModuleMap], coeffs: &[Scalar]) -> ModuleMap {
        let mut acc = maps[0].scale(&coeffs[0]);
        for (m, c) in maps.iter().zip(coeffs).skip(1) {
            if !c.is_zero() {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    /// Block map `M1 ⊕ ... -> N1 ⊕ ...` from a grid of maps `M_i -> N_j`.
    pub fn block(
        field: Field,
        rows: &[&Module],
        cols: &[&Module],
        entry: impl Fn(usize, usize) -> Option<ModuleMap>,
    ) -> ModuleMap {
        let n = rows.first().or(cols.first()).map(|m| m.dims().len()).unwrap_or(0);
        let components = (0..n)
            .map(|v| {
                let mut whole = Matrix::zeros(field, 0, cols.iter().map(|m| m.dim_at(v)).sum());
                for (i, r) in rows.iter().enumerate() {
                    let mut strip = Matrix::zeros(field, r.dim_at(v), 0);
                    for (j, c) in cols.iter().enumerate() {
                        let blk = match entry(i, j) {
                            Some(f) => f.components[v].clone(),
                            None => Matrix::zeros(field, r.dim_at(v), c.dim_at(v)),
                        };
                        strip = strip.hstack(&blk);
                    }
                    whole = whole.vstack(&strip);
                }
                whole
            })
            .collect();
        ModuleMap { components }
    }
}
