use crate::exactlin::{Matrix, Scalar, Span};

use super::{Module, ModuleMap};

/// Basis of `Hom(M, N)`: the solution space of the commuting squares
/// `F_s N(a) = M(a) F_t`, unknowns ordered vertex by vertex, row-major.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<ModuleMap> {
    assert!(m.same_algebra(n), "Hom between modules over different algebras");
    let f = m.field();
    let nv = m.dims().len();
    let mut offset = Vec::with_capacity(nv + 1);
    offset.push(0);
    for v in 0..nv {
        offset.push(offset[v] + m.dim_at(v) * n.dim_at(v));
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let col = |v: usize, i: usize, j: usize| offset[v] + i * n.dim_at(v) + j;
    let mut eqs = Span::new(f, unknowns);
    for (a, arrow) in m.algebra().quiver().arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let (ma, na) = (m.arrow_matrix(a), n.arrow_matrix(a));
        for i in 0..m.dim_at(s) {
            for j in 0..n.dim_at(t) {
                let mut row = vec![Scalar::ZERO; unknowns];
                let mut any = false;
                for k in 0..n.dim_at(s) {
                    let c = na.get(k, j);
                    if !c.is_zero() {
                        let idx = col(s, i, k);
                        row[idx] = f.add(&row[idx], c);
                        any = true;
                    }
                }
                for k in 0..m.dim_at(t) {
                    let c = ma.get(i, k);
                    if !c.is_zero() {
                        let idx = col(t, k, j);
                        row[idx] = f.sub(&row[idx], c);
                        any = true;
                    }
                }
                if any {
                    eqs.insert(row);
                }
            }
        }
    }
    let pivots = eqs.pivots();
    let mut is_pivot = vec![false; unknowns];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..unknowns)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![Scalar::ZERO; unknowns];
            x[free] = Scalar::ONE;
            for (row, &p) in eqs.rows().iter().zip(pivots) {
                if !row[free].is_zero() {
                    x[p] = f.neg(&row[free]);
                }
            }
            let components = (0..nv)
                .map(|v| {
                    let data = x[offset[v]..offset[v + 1]].to_vec();
                    Matrix::new(f, m.dim_at(v), n.dim_at(v), data).expect("canonical entries")
                })
                .collect();
            ModuleMap { components }
        })
        .collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    if m.dims().iter().zip(n.dims()).all(|(a, b)| a * b == 0) {
        return 0;
    }
    hom_basis(m, n).len()
}

/// Submodule spanned by per-vertex row bases, which must be closed under
/// the arrows; returns it with its inclusion.
pub fn submodule(m: &Module, rows: &[Matrix]) -> (Module, ModuleMap) {
    let dims: Vec<usize> = rows.iter().map(Matrix::rows).collect();
    let mats = m
        .algebra()
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let img = rows[arrow.source].mul(m.arrow_matrix(a));
            rows[arrow.target].solve_left(&img).expect("rows span a submodule")
        })
        .collect();
    let sub = Module::new_unchecked(m.algebra().clone(), dims, mats);
    (sub, ModuleMap { components: rows.to_vec() })
}

/// `M / S` for a submodule `S` given by row bases, with the projection and
/// a vertexwise linear section of it.
pub fn quotient_with_section(m: &Module, rows: &[Matrix]) -> (Module, ModuleMap, Vec<Matrix>) {
    let mut proj = Vec::with_capacity(rows.len());
    let mut section = Vec::with_capacity(rows.len());
    for (v, w) in rows.iter().enumerate() {
        let d = m.dim_at(v);
        let c = w.complement_rows();
        let inv = w.vstack(&c).inverse().expect("complement completes a basis");
        let cols: Vec<usize> = (w.rows()..d).collect();
        proj.push(inv.select_cols(&cols));
        section.push(c);
    }
    let dims: Vec<usize> = section.iter().map(Matrix::rows).collect();
    let mats = m
        .algebra()
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| section[arrow.source].mul(m.arrow_matrix(a)).mul(&proj[arrow.target]))
        .collect();
    let q = Module::new_unchecked(m.algebra().clone(), dims, mats);
    (q, ModuleMap { components: proj }, section)
}

pub fn quotient(m: &Module, rows: &[Matrix]) -> (Module, ModuleMap) {
    let (q, p, _) = quotient_with_section(m, rows);
    (q, p)
}

pub fn kernel(m: &Module, f: &ModuleMap) -> (Module, ModuleMap) {
    let rows: Vec<Matrix> = f.components.iter().map(Matrix::left_kernel).collect();
    submodule(m, &rows)
}

pub fn image(n: &Module, f: &ModuleMap) -> (Module, ModuleMap) {
    let rows: Vec<Matrix> = f.components.iter().map(Matrix::row_space).collect();
    submodule(n, &rows)
}

pub fn cokernel(n: &Module, f: &ModuleMap) -> (Module, ModuleMap) {
    let rows: Vec<Matrix> = f.components.iter().map(Matrix::row_space).collect();
    quotient(n, &rows)
}

/// Kernel, image and cokernel of one map.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub kernel: Module,
    pub kernel_inclusion: ModuleMap,
    pub image: Module,
    pub image_inclusion: ModuleMap,
    pub cokernel: Module,
    pub cokernel_projection: ModuleMap,
}

impl Factorization {
    pub fn of(m: &Module, n: &Module, f: &ModuleMap) -> Self {
        let (kernel, kernel_inclusion) = kernel(m, f);
        let (image, image_inclusion) = image(n, f);
        let (cokernel, cokernel_projection) = cokernel(n, f);
        Factorization { kernel, kernel_inclusion, image, image_inclusion, cokernel, cokernel_projection }
    }
}

/// Per-vertex dimensions of the trace of `M` in `X`.
pub fn trace_dims(x: &Module, m: &Module) -> Vec<usize> {
    let f = x.field();
    let mut spans: Vec<Span> = x.dims().iter().map(|&d| Span::new(f, d)).collect();
    for g in hom_basis(m, x) {
        for (v, c) in g.components.iter().enumerate() {
            for r in c.row_vecs() {
                spans[v].insert(r);
            }
        }
    }
    spans.iter().map(Span::rank).collect()
}

/// `X ∈ Gen M`: the images of all maps `M -> X` span `X`.
pub fn gen_membership(x: &Module, m: &Module) -> bool {
    trace_dims(x, m) == x.dims()
}

/// `X ∈ Cogen M`: no nonzero vector of `X` is killed by every map `X -> M`.
pub fn cogen_membership(x: &Module, m: &Module) -> bool {
    let f = x.field();
    let basis = hom_basis(x, m);
    (0..x.dims().len()).all(|v| {
        let mut big = Matrix::zeros(f, x.dim_at(v), 0);
        for g in &basis {
            big = big.hstack(&g.components[v]);
        }
        big.rank() == x.dim_at(v)
    })
}
