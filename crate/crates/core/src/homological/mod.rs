//! Projective presentations, the transpose, the Auslander-Reiten
//! translate `τ = D Tr`, `Ext^1` and almost split sequences.

use std::sync::Arc;

use crate::algebra::{Algebra, Element};
use crate::exactlin::{Matrix, Scalar, Span};
use crate::repmod::{cokernel, hom_basis, hom_dim, kernel, Module, ModuleMap};
use crate::tautilt::decompose::local_radical;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologicalError {
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("module is projective")]
    IsProjective,
}

/// The map `⊕ P(s_i) -> ⊕ P(t_j)` sending the generator of `P(s_i)` to
/// `Σ_j x_ij`, with `x_ij ∈ e_{t_j} A e_{s_i}`.
pub fn projective_map(
    alg: &Arc<Algebra>,
    src: &[usize],
    tgt: &[usize],
    entries: &[Vec<Element>],
) -> (Module, Module, ModuleMap) {
    let f = alg.field();
    let p_src = Module::direct_sum(alg, &src.iter().map(|&v| Module::projective(alg, v)).collect::<Vec<_>>());
    let p_tgt = Module::direct_sum(alg, &tgt.iter().map(|&v| Module::projective(alg, v)).collect::<Vec<_>>());
    let components = (0..alg.vertex_count())
        .map(|w| {
            let mut rows = Vec::new();
            for (i, &s) in src.iter().enumerate() {
                for p in alg.paths_between(s, w) {
                    let path = alg.basis_element(p);
                    let mut row = Vec::new();
                    for (j, &t) in tgt.iter().enumerate() {
                        let prod = alg.multiply(&entries[i][j], &path);
                        row.extend(alg.paths_between(t, w).into_iter().map(|q| prod[q].clone()));
                    }
                    rows.push(row);
                }
            }
            Matrix::from_rows(f, p_tgt.dim_at(w), rows).expect("well-shaped block rows")
        })
        .collect();
    (p_src, p_tgt, ModuleMap { components })
}

/// Projective cover `P0 -> M` with `P0 = ⊕ P(v_j)`, one summand per basis
/// vector of a complement of the radical.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub tops: Vec<usize>,
    pub generators: Vec<Vec<Scalar>>,
    pub module: Module,
    pub map: ModuleMap,
}

pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let rad = m.radical_rows();
    let mut tops = Vec::new();
    let mut generators = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        for g in r.complement_rows().row_vecs() {
            tops.push(v);
            generators.push(g);
        }
    }
    let (module, map) = map_from_generators(m, &tops, &generators);
    ProjectiveCover { tops, generators, module, map }
}

/// The map `⊕ P(v_j) -> M` sending the generator of `P(v_j)` to
/// `generators[j] ∈ M(v_j)`.
pub fn map_from_generators(m: &Module, tops: &[usize], generators: &[Vec<Scalar>]) -> (Module, ModuleMap) {
    let alg = m.algebra();
    let module = Module::direct_sum(alg, &tops.iter().map(|&v| Module::projective(alg, v)).collect::<Vec<_>>());
    let components = (0..alg.vertex_count())
        .map(|w| {
            let mut rows = Vec::new();
            for (&v, g) in tops.iter().zip(generators) {
                for p in alg.paths_between(v, w) {
                    rows.push(m.path_matrix(&alg.basis()[p]).left_apply(g));
                }
            }
            Matrix::from_rows(m.field(), m.dim_at(w), rows).expect("well-shaped rows")
        })
        .collect();
    (module, ModuleMap { components })
}

/// Minimal presentation `P1 -d-> P0 -> M -> 0`. The entry `a_ij` of `d`
/// lies in `e_{v_j} A e_{u_i}` where `P1 = ⊕ P(u_i)`, `P0 = ⊕ P(v_j)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p1_tops: Vec<usize>,
    pub p0_tops: Vec<usize>,
    pub entries: Vec<Vec<Element>>,
    pub p1: Module,
    pub p0: Module,
    pub d: ModuleMap,
    pub cover: ModuleMap,
    pub syzygy: Module,
    pub syzygy_inclusion: ModuleMap,
}

pub fn min_presentation(m: &Module) -> Presentation {
    let alg = m.algebra();
    let cover = projective_cover(m);
    let (omega, incl) = kernel(&cover.module, &cover.map);
    let cover2 = projective_cover(&omega);
    let p0_paths: Vec<Vec<usize>> = (0..alg.vertex_count())
        .map(|u| cover.tops.iter().flat_map(|&v| alg.paths_between(v, u)).collect())
        .collect();
    let entries: Vec<Vec<Element>> = cover2
        .tops
        .iter()
        .zip(&cover2.generators)
        .map(|(&u, g)| {
            let x = incl.components[u].left_apply(g);
            let mut offset = 0;
            cover
                .tops
                .iter()
                .map(|&v| {
                    let mut e = alg.zero_element();
                    for p in alg.paths_between(v, u) {
                        e[p] = x[offset].clone();
                        offset += 1;
                    }
                    e
                })
                .collect()
        })
        .collect();
    debug_assert!(cover2.tops.iter().zip(&entries).all(|(&u, row)| row.len() == cover.tops.len()
        && p0_paths[u].len() == cover.module.dim_at(u)));
    let (p1, _, d) = projective_map(alg, &cover2.tops, &cover.tops, &entries);
    Presentation {
        p1_tops: cover2.tops,
        p0_tops: cover.tops,
        entries,
        p1,
        p0: cover.module,
        d,
        cover: cover.map,
        syzygy: omega,
        syzygy_inclusion: incl,
    }
}

/// `Tr M`, a module over the opposite algebra.
pub fn transpose(m: &Module) -> Module {
    let alg = m.algebra();
    let op = alg.opposite();
    let pres = min_presentation(m);
    // Hom(-, A) turns a_ij into right multiplication P^op(v_j) -> P^op(u_i)
    let entries: Vec<Vec<Element>> = (0..pres.p0_tops.len())
        .map(|j| {
            (0..pres.p1_tops.len())
                .map(|i| alg.element_to_opposite(&op, &pres.entries[i][j]))
                .collect()
        })
        .collect();
    let (_, tgt, map) = projective_map(&op, &pres.p0_tops, &pres.p1_tops, &entries);
    cokernel(&tgt, &map).0
}

pub fn tau(m: &Module) -> Module {
    transpose(m).dual_into(m.algebra())
}

pub fn tau_inv(m: &Module) -> Module {
    transpose(&m.dual()).over(m.algebra())
}

/// `dim Ext^1(M, N)` from `0 -> Hom(M,N) -> Hom(P0,N) -> Hom(ΩM,N) -> Ext^1(M,N) -> 0`.
pub fn ext1_dim(m: &Module, n: &Module) -> usize {
    let pres = min_presentation(m);
    let hom_p0: usize = pres.p0_tops.iter().map(|&v| n.dim_at(v)).sum();
    hom_dim(&pres.syzygy, n) + hom_dim(m, n) - hom_p0
}

pub fn is_tau_rigid(m: &Module) -> bool {
    hom_dim(m, &tau(m)) == 0
}

pub fn proj_dim_le_one(m: &Module) -> bool {
    min_presentation(m).syzygy.is_projective()
}

/// `0 -> τM -> E -> M -> 0`.
#[derive(Clone, Debug)]
pub struct AlmostSplit {
    pub left: Module,
    pub middle: Module,
    pub right: Module,
    pub inclusion: ModuleMap,
    pub surjection: ModuleMap,
}

fn flatten(f: &ModuleMap) -> Vec<Scalar> {
    f.components.iter().flat_map(|c| c.entries().to_vec()).collect()
}

pub fn almost_split_sequence(m: &Module) -> Result<AlmostSplit, HomologicalError> {
    let alg = m.algebra();
    let field = m.field();
    let end = hom_basis(m, m);
    if m.is_zero() {
        return Err(HomologicalError::NotIndecomposable);
    }
    let radical = local_radical(m, &end).ok_or(HomologicalError::NotIndecomposable)?;
    let pres = min_presentation(m);
    if pres.syzygy.is_zero() {
        return Err(HomologicalError::IsProjective);
    }
    let n = tau(m);
    let omega = &pres.syzygy;
    let iota = &pres.syzygy_inclusion;

    // Ext^1(M, N) = Hom(Ω, N) / restrictions of Hom(P0, N)
    let hom_on = hom_basis(omega, &n);
    let width = flatten(&ModuleMap::zero(omega, &n)).len();
    let mut restricted = Span::new(field, width);
    for g in hom_basis(&pres.p0, &n) {
        restricted.insert(flatten(&iota.then(&g)));
    }

    // lift r to P0 and restrict to Ω
    let restrict_lift = |r: &ModuleMap| -> ModuleMap {
        let entries: Vec<Vec<Element>> = pres
            .p0_tops
            .iter()
            .enumerate()
            .map(|(j, &v)| {
                let gen_index: usize = pres.p0_tops[..j].iter().map(|&w| alg.paths_between(w, v).len()).sum::<usize>()
                    + alg.paths_between(v, v).iter().position(|&p| p == alg.trivial_index(v)).expect("e_v");
                let target = r.components[v].left_apply(pres.cover.components[v].row(gen_index));
                let rhs = Matrix::from_rows(field, target.len(), vec![target]).expect("one row");
                let x = pres.cover.components[v].solve_left(&rhs).expect("cover is surjective");
                let mut offset = 0;
                pres.p0_tops
                    .iter()
                    .map(|&w| {
                        let mut e = alg.zero_element();
                        for p in alg.paths_between(w, v) {
                            e[p] = x.get(0, offset).clone();
                            offset += 1;
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        let (_, _, lift) = projective_map(alg, &pres.p0_tops, &pres.p0_tops, &entries);
        let components = iota
            .components
            .iter()
            .zip(&lift.components)
            .map(|(w, l)| w.solve_left(&w.mul(l)).expect("lift preserves the syzygy"))
            .collect();
        ModuleMap { components }
    };
    let restricted_lifts: Vec<ModuleMap> = radical.iter().map(restrict_lift).collect();

    // socle of Ext^1 under the radical: classes killed by every r
    let k = hom_on.len();
    let mut system: Vec<Vec<Scalar>> = Vec::new();
    for rl in &restricted_lifts {
        let cols: Vec<Vec<Scalar>> = hom_on.iter().map(|phi| restricted.reduce(flatten(&rl.then(phi)))).collect();
        for row in 0..width {
            system.push((0..k).map(|c| cols[c][row].clone()).collect());
        }
    }
    let sys = Matrix::from_rows(field, k, system).expect("rows of length k");
    let solutions = if sys.rows() == 0 { Matrix::identity(field, k) } else { sys.nullspace_basis() };
    let phi = solutions
        .row_vecs()
        .into_iter()
        .map(|c| ModuleMap::combination(&hom_on, &c))
        .find(|phi| !restricted.contains(&flatten(phi)))
        .expect("a non-projective indecomposable has a nonzero Ext socle");

    // pushout of 0 -> Ω -> P0 -> M -> 0 along φ
    let sum = n.oplus(&pres.p0);
    let h = ModuleMap {
        components: phi
            .components
            .iter()
            .zip(&iota.components)
            .map(|(p, i)| p.scale(&field.from_int(-1)).hstack(i))
            .collect(),
    };
    let rows: Vec<Matrix> = h.components.iter().map(Matrix::row_space).collect();
    let (middle, proj, section) = crate::repmod::quotient_with_section(&sum, &rows);
    let inclusion = ModuleMap {
        components: (0..n.dims().len())
            .map(|v| {
                Matrix::identity(field, n.dim_at(v))
                    .hstack(&Matrix::zeros(field, n.dim_at(v), pres.p0.dim_at(v)))
                    .mul(&proj.components[v])
            })
            .collect(),
    };
    let surjection = ModuleMap {
        components: (0..n.dims().len())
            .map(|v| {
                let zero_then_cover = Matrix::zeros(field, n.dim_at(v), m.dim_at(v)).vstack(&pres.cover.components[v]);
                section[v].mul(&zero_then_cover)
            })
            .collect(),
    };
    Ok(AlmostSplit { left: n, middle, right: m.clone(), inclusion, surjection })
}
