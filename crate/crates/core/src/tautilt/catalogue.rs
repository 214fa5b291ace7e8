//! Knitting the Auslander-Reiten quiver of a representation-finite algebra.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::homological::{almost_split_sequence, tau, tau_inv};
use crate::repmod::{submodule, Module};
use crate::schema::ModuleJson;

use super::decompose::{decompose, iso_indecomposable};
use super::TauError;

pub const DEFAULT_MAX_DIM: usize = 40;
pub const DEFAULT_MAX_COUNT: usize = 2000;

#[derive(Clone, Debug)]
pub struct CatalogueItem {
    pub module: Module,
    pub label: String,
    pub projective: bool,
    pub injective: bool,
    pub tau: Option<usize>,
    pub tau_inv: Option<usize>,
}

/// All indecomposables up to isomorphism, with the translation and the
/// irreducible maps `(from, to, multiplicity)`.
#[derive(Clone, Debug)]
pub struct Catalogue {
    alg: Arc<Algebra>,
    items: Vec<CatalogueItem>,
    irreducible: Vec<(usize, usize, usize)>,
    complete: bool,
}

struct Knitter {
    max_dim: usize,
    max_count: usize,
    modules: Vec<Module>,
    queue: Vec<usize>,
}

impl Knitter {
    fn insert(&mut self, m: Module) -> Result<usize, TauError> {
        if let Some(i) = self.modules.iter().position(|x| iso_indecomposable(x, &m)) {
            return Ok(i);
        }
        if m.dim() > self.max_dim {
            return Err(TauError::LimitExceeded { what: "maxDim", limit: self.max_dim });
        }
        if self.modules.len() >= self.max_count {
            return Err(TauError::LimitExceeded { what: "maxCount", limit: self.max_count });
        }
        self.modules.push(m);
        self.queue.push(self.modules.len() - 1);
        Ok(self.modules.len() - 1)
    }
}

impl Catalogue {
    /// Seeds with every `P(v)` and `I(v)` and closes under `τ`, `τ⁻` and
    /// the middle terms of almost split sequences.
    pub fn build(alg: &Arc<Algebra>, max_dim: usize, max_count: usize) -> Result<Catalogue, TauError> {
        let mut k = Knitter { max_dim, max_count, modules: Vec::new(), queue: Vec::new() };
        for v in 0..alg.vertex_count() {
            k.insert(Module::projective(alg, v))?;
        }
        for v in 0..alg.vertex_count() {
            k.insert(Module::injective(alg, v))?;
        }
        let mut tau_link: BTreeMap<usize, usize> = BTreeMap::new();
        let mut tau_inv_link: BTreeMap<usize, usize> = BTreeMap::new();
        let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut head = 0;
        while head < k.queue.len() {
            let i = k.queue[head];
            head += 1;
            let x = k.modules[i].clone();
            if x.is_projective() {
                let (rad, _) = submodule(&x, &x.radical_rows());
                for part in decompose(&rad)? {
                    let j = k.insert(part)?;
                    *edges.entry((j, i)).or_default() += 1;
                }
            } else {
                let seq = almost_split_sequence(&x)?;
                let t = k.insert(seq.left)?;
                tau_link.insert(i, t);
                tau_inv_link.insert(t, i);
                for part in decompose(&seq.middle)? {
                    let j = k.insert(part)?;
                    *edges.entry((j, i)).or_default() += 1;
                }
            }
            if !x.is_injective() && !tau_inv_link.contains_key(&i) {
                let j = k.insert(tau_inv(&x))?;
                tau_inv_link.insert(i, j);
                tau_link.insert(j, i);
            }
        }
        // deterministic order: total dimension, dimension vector, insertion
        let mut order: Vec<usize> = (0..k.modules.len()).collect();
        order.sort_by(|&a, &b| {
            let (x, y) = (&k.modules[a], &k.modules[b]);
            x.dim().cmp(&y.dim()).then_with(|| x.dims().cmp(y.dims())).then(a.cmp(&b))
        });
        let mut rank = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let items = order
            .iter()
            .map(|&old| {
                let m = k.modules[old].clone();
                CatalogueItem {
                    label: m.layer_label(),
                    projective: m.is_projective(),
                    injective: m.is_injective(),
                    tau: tau_link.get(&old).map(|&t| rank[t]),
                    tau_inv: tau_inv_link.get(&old).map(|&t| rank[t]),
                    module: m,
                }
            })
            .collect();
        let mut irreducible: Vec<(usize, usize, usize)> =
            edges.into_iter().map(|((a, b), m)| (rank[a], rank[b], m)).collect();
        irreducible.sort();
        Ok(Catalogue { alg: alg.clone(), items, irreducible, complete: true })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn items(&self) -> &[CatalogueItem] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn module(&self, i: usize) -> &Module {
        &self.items[i].module
    }

    pub fn modules(&self) -> impl Iterator<Item = &Module> {
        self.items.iter().map(|it| &it.module)
    }

    pub fn irreducible_maps(&self) -> &[(usize, usize, usize)] {
        &self.irreducible
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub(crate) fn require_complete(&self) -> Result<(), TauError> {
        if self.complete {
            Ok(())
        } else {
            Err(TauError::IncompleteCatalogue)
        }
    }

    /// Index of the item isomorphic to an indecomposable `m`.
    pub fn find(&self, m: &Module) -> Option<usize> {
        self.items.iter().position(|it| iso_indecomposable(&it.module, m))
    }

    /// `τ` of item `i` as a module (zero for projectives).
    pub fn tau_module(&self, i: usize) -> Module {
        match self.items[i].tau {
            Some(t) => self.items[t].module.clone(),
            None => tau(&self.items[i].module),
        }
    }

    pub fn to_json(&self) -> CatalogueJson {
        CatalogueJson {
            algebra: self.alg.fingerprint().to_string(),
            items: self
                .items
                .iter()
                .map(|it| ItemJson {
                    label: it.label.clone(),
                    dims: it.module.dims().to_vec(),
                    projective: it.projective,
                    injective: it.injective,
                    tau: it.tau,
                    tau_inv: it.tau_inv,
                    module: it.module.to_json(),
                })
                .collect(),
            irreducible: self.irreducible.iter().map(|&(a, b, m)| [a, b, m]).collect(),
            complete: self.complete,
        }
    }

    /// Rebuilds from an export; fails if the export belongs to another
    /// algebra.
    pub fn from_json(alg: &Arc<Algebra>, json: &CatalogueJson) -> Result<Catalogue, TauError> {
        if json.algebra != alg.fingerprint() {
            return Err(TauError::PreconditionFailed("catalogue was built for a different algebra".into()));
        }
        let items = json
            .items
            .iter()
            .map(|it| {
                let module = Module::from_json(alg, &it.module).map_err(|e| TauError::PreconditionFailed(e.to_string()))?;
                Ok(CatalogueItem {
                    label: it.label.clone(),
                    projective: it.projective,
                    injective: it.injective,
                    tau: it.tau,
                    tau_inv: it.tau_inv,
                    module,
                })
            })
            .collect::<Result<Vec<_>, TauError>>()?;
        let n = items.len();
        let bad_link = items.iter().any(|it| it.tau.is_some_and(|t| t >= n) || it.tau_inv.is_some_and(|t| t >= n));
        if bad_link || json.irreducible.iter().any(|e| e[0] >= n || e[1] >= n) {
            return Err(TauError::PreconditionFailed("catalogue links out of range".into()));
        }
        Ok(Catalogue {
            alg: alg.clone(),
            items,
            irreducible: json.irreducible.iter().map(|e| (e[0], e[1], e[2])).collect(),
            complete: json.complete,
        })
    }

    /// Graphviz rendering: solid edges are irreducible maps, dashed edges
    /// point from a module to its translate.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ar_quiver {\n  rankdir=LR;\n");
        for (i, it) in self.items.iter().enumerate() {
            let dims: Vec<String> = it.module.dims().iter().map(usize::to_string).collect();
            let _ = writeln!(s, "  n{i} [label=\"({})\", tooltip=\"{}\"];", dims.join(","), it.label);
        }
        for &(a, b, m) in &self.irreducible {
            for _ in 0..m {
                let _ = writeln!(s, "  n{a} -> n{b};");
            }
        }
        for (i, it) in self.items.iter().enumerate() {
            if let Some(t) = it.tau {
                let _ = writeln!(s, "  n{i} -> n{t} [style=dashed, constraint=false];");
            }
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItemJson {
    pub label: String,
    pub dims: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
    pub tau: Option<usize>,
    #[serde(rename = "tauInv")]
    pub tau_inv: Option<usize>,
    pub module: ModuleJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueJson {
    pub algebra: String,
    pub items: Vec<ItemJson>,
    pub irreducible: Vec<[usize; 3]>,
    pub complete: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::fixtures::tilted_c;

    #[test]
    fn catalogue_of_c() {
        let c = tilted_c();
        let cat = Catalogue::build(&c, DEFAULT_MAX_DIM, DEFAULT_MAX_COUNT).unwrap();
        assert_eq!(cat.len(), 13);
        let labels: Vec<&str> = cat.items().iter().map(|it| it.label.as_str()).collect();
        assert!(labels.contains(&"2/3/4/5") && labels.contains(&"1/2/3") && !labels.contains(&"1/2/3/4"));
        let s4 = cat.find(&Module::simple(&c, 3)).unwrap();
        let s5 = cat.find(&Module::simple(&c, 4)).unwrap();
        assert_eq!(cat.items()[s4].tau, Some(s5));
        assert_eq!(cat.items()[s5].tau_inv, Some(s4));
        let back = Catalogue::from_json(&c, &cat.to_json()).unwrap();
        assert_eq!(back.len(), 13);
        assert_eq!(cat.to_dot().matches("[label=").count(), 13);
    }

    #[test]
    fn catalogue_of_b() {
        let b = crate::fixtures::cluster_tilted_b();
        let cat = Catalogue::build(&b, DEFAULT_MAX_DIM, DEFAULT_MAX_COUNT).unwrap();
        assert_eq!(cat.len(), 20);
        for label in ["4/1 5/2", "3/4/1 5", "4/1", "1/2/3", "5", "2/3/4/5"] {
            assert!(cat.items().iter().any(|it| it.label == label), "{label}");
        }
        assert_eq!(cat.to_dot().matches("[label=").count(), 20);
    }

    #[test]
    fn semisimple_and_limits() {
        let q = crate::algebra::Quiver::new(&["1", "2"], &[] as &[(&str, &str, &str)]).unwrap();
        let alg = Algebra::build(q, vec![], Field::Rationals, 4).unwrap();
        assert_eq!(Catalogue::build(&alg, 40, 2000).unwrap().len(), 2);
        let c = tilted_c();
        assert!(matches!(Catalogue::build(&c, 40, 5), Err(TauError::LimitExceeded { what: "maxCount", .. })));
        assert!(matches!(Catalogue::build(&c, 2, 2000), Err(TauError::LimitExceeded { what: "maxDim", .. })));
    }

    #[test]
    fn kronecker_is_flagged_as_infinite() {
        let q = crate::algebra::Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        let alg = Algebra::build(q, vec![], Field::Rationals, 4).unwrap();
        assert!(matches!(Catalogue::build(&alg, 12, 2000), Err(TauError::LimitExceeded { .. })));
    }
}
