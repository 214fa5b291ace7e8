//! Independent oracles shared by the integration tests. None of them goes
//! through the presentation, τ or catalogue machinery of the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use serde_json::Value;
use taukit::exactlin::{Field, Matrix, Scalar};
use taukit::repmod::{hom_dim, Module};
use taukit::tautilt::{Catalogue, RigidityTable};

/// Raw quiver data read straight from a fixture file.
pub struct RawQuiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, usize, usize)>,
    /// Monomial zero relations as arrow-index words.
    pub zero_relations: Vec<Vec<usize>>,
}

pub fn raw_quiver(src: &str) -> RawQuiver {
    let v: Value = serde_json::from_str(src).unwrap();
    let vertices: Vec<String> = v["vertices"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
    let pos = |name: &str| vertices.iter().position(|x| x == name).unwrap();
    let arrows: Vec<(String, usize, usize)> = v["arrows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| {
            (a["name"].as_str().unwrap().to_string(), pos(a["from"].as_str().unwrap()), pos(a["to"].as_str().unwrap()))
        })
        .collect();
    let arrow_pos = |name: &str| arrows.iter().position(|a| a.0 == name).unwrap();
    let zero_relations = v["relations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let terms = r.as_array().unwrap();
            assert_eq!(terms.len(), 1, "oracle handles monomial relations only");
            terms[0]["path"].as_array().unwrap().iter().map(|a| arrow_pos(a.as_str().unwrap())).collect()
        })
        .collect();
    RawQuiver { vertices, arrows, zero_relations }
}

fn contains_word(path: &[usize], word: &[usize]) -> bool {
    path.windows(word.len()).any(|w| w == word)
}

/// Every nonzero path (trivial ones included) by depth-first search.
pub fn nonzero_paths(q: &RawQuiver) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    for v in 0..q.vertices.len() {
        let mut stack = vec![(v, Vec::<usize>::new())];
        while let Some((at, path)) = stack.pop() {
            out.push((v, path.clone()));
            for (a, (_, s, t)) in q.arrows.iter().enumerate() {
                if *s != at {
                    continue;
                }
                let mut next = path.clone();
                next.push(a);
                if q.zero_relations.iter().any(|r| contains_word(&next, r)) {
                    continue;
                }
                assert!(next.len() < 64, "oracle expects a finite-dimensional algebra");
                stack.push((*t, next));
            }
        }
    }
    out
}

/// Interval modules of a monomial algebra: one per nonzero path, with
/// one-dimensional spaces along the path and identity maps on its arrows.
/// Only valid when the path visits each vertex at most once.
pub fn interval_modules(alg: &std::sync::Arc<taukit::algebra::Algebra>, q: &RawQuiver) -> Vec<Module> {
    let f = alg.field();
    nonzero_paths(q)
        .into_iter()
        .map(|(start, path)| {
            let mut dims = vec![0; q.vertices.len()];
            dims[start] = 1;
            for &a in &path {
                dims[q.arrows[a].2] += 1;
            }
            assert!(dims.iter().all(|&d| d <= 1), "interval revisits a vertex");
            let mats = q
                .arrows
                .iter()
                .enumerate()
                .map(|(a, (_, s, t))| {
                    if path.contains(&a) {
                        Matrix::identity(f, 1)
                    } else {
                        Matrix::zeros(f, dims[*s], dims[*t])
                    }
                })
                .collect();
            Module::new(alg.clone(), dims, mats).unwrap()
        })
        .collect()
}

fn unit(f: Field, rows: usize, cols: usize, k: usize) -> Matrix {
    let mut m = Matrix::zeros(f, rows, cols);
    m.set(k / cols, k % cols, Scalar::ONE);
    m
}

fn arrow_product(f: Field, m: &Module, start: usize, word: &[usize]) -> Matrix {
    let mut acc = Matrix::identity(f, m.dim_at(start));
    for &a in word {
        acc = acc.mul(m.arrow_matrix(a));
    }
    acc
}

/// `dim Ext^1(M, N)` as cocycles modulo coboundaries of block-triangular
/// representations `[[M_a, Z_a], [0, N_a]]` satisfying the relations.
pub fn ext1_oracle(m: &Module, n: &Module) -> usize {
    let alg = m.algebra();
    let f = alg.field();
    let q = alg.quiver();
    let arrows = q.arrows();
    let offsets: Vec<usize> = arrows
        .iter()
        .scan(0, |acc, a| {
            let o = *acc;
            *acc += m.dim_at(a.source) * n.dim_at(a.target);
            Some(o)
        })
        .collect();
    let z_dim: usize = arrows.iter().map(|a| m.dim_at(a.source) * n.dim_at(a.target)).sum();
    if z_dim == 0 {
        return 0;
    }
    // the relation map Z -> ⊕ Hom(M_s(p), N_t(p))
    let mut relation_rows = Vec::new();
    for (a, arrow) in arrows.iter().enumerate() {
        let (r, c) = (m.dim_at(arrow.source), n.dim_at(arrow.target));
        for k in 0..r * c {
            let z = unit(f, r, c, k);
            let mut image = Vec::new();
            for rel in alg.relations() {
                let (s, t) = (rel.terms[0].1.source, rel.terms[0].1.target);
                let mut total = Matrix::zeros(f, m.dim_at(s), n.dim_at(t));
                for (coeff, p) in &rel.terms {
                    for (i, &b) in p.arrows.iter().enumerate() {
                        if b != a {
                            continue;
                        }
                        let left = arrow_product(f, m, s, &p.arrows[..i]);
                        let right = arrow_product(f, n, arrow.target, &p.arrows[i + 1..]);
                        total = total.add(&left.mul(&z).mul(&right).scale(coeff));
                    }
                }
                image.extend(total.entries().iter().cloned());
            }
            relation_rows.push(image);
        }
    }
    let width = relation_rows.first().map_or(0, Vec::len);
    let rel_rank = Matrix::from_rows(f, width, relation_rows).unwrap().rank();
    // coboundaries H -> (H_s N_a - M_a H_t)
    let mut cob_rows = Vec::new();
    for v in 0..q.vertex_count() {
        let (r, c) = (m.dim_at(v), n.dim_at(v));
        for k in 0..r * c {
            let h = unit(f, r, c, k);
            let mut row = vec![Scalar::ZERO; z_dim];
            for (a, arrow) in arrows.iter().enumerate() {
                let mut d = Matrix::zeros(f, m.dim_at(arrow.source), n.dim_at(arrow.target));
                if arrow.source == v {
                    d = d.add(&h.mul(n.arrow_matrix(a)));
                }
                if arrow.target == v {
                    d = d.sub(&m.arrow_matrix(a).mul(&h));
                }
                for (i, x) in d.entries().iter().enumerate() {
                    row[offsets[a] + i] = x.clone();
                }
            }
            cob_rows.push(row);
        }
    }
    let cob_rank = Matrix::from_rows(f, z_dim, cob_rows).unwrap().rank();
    z_dim - rel_rank - cob_rank
}

/// Bongartz complement by exhaustive search: among all basic τ-tilting
/// modules containing `M`, the one whose torsion class contains all the
/// others. Returns catalogue indices of the complement.
pub fn bongartz_oracle(cat: &Catalogue, m_items: &[usize]) -> Option<Vec<usize>> {
    let table = RigidityTable::new(cat);
    let n = cat.algebra().vertex_count();
    let mine: BTreeSet<usize> = m_items.iter().copied().collect();
    let completions: Vec<Vec<usize>> =
        table.rigid_sets().into_iter().filter(|s| s.len() == n && mine.iter().all(|i| s.contains(i))).collect();
    let torsion = |set: &[usize]| -> BTreeSet<usize> {
        let taus: Vec<Module> = set.iter().map(|&i| cat.tau_module(i)).collect();
        (0..cat.len()).filter(|&x| taus.iter().all(|t| hom_dim(cat.module(x), t) == 0)).collect()
    };
    let classes: Vec<BTreeSet<usize>> = completions.iter().map(|s| torsion(s)).collect();
    let best = (0..completions.len()).find(|&i| classes.iter().all(|c| c.is_subset(&classes[i])))?;
    Some(completions[best].iter().copied().filter(|i| !mine.contains(i)).collect())
}
