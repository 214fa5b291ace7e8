//! Torsion classes `⊥(τM)`, Ext-projectives and Bongartz complements,
//! evaluated extensionally over a complete catalogue.

use crate::homological::{ext1_dim, is_tau_rigid, tau};
use crate::repmod::{cogen_membership, gen_membership, hom_dim, Module};

use super::catalogue::Catalogue;
use super::decompose::{decompose, decompose_grouped, iso_indecomposable};
use super::TauError;

/// Membership flags of every catalogue item in `T = ⊥(τM)` and
/// `F = Cogen(τM)`.
#[derive(Clone, Debug)]
pub struct TorsionView {
    pub tau_m: Module,
    pub torsion: Vec<bool>,
    pub torsionfree: Vec<bool>,
}

impl TorsionView {
    pub fn torsion_items(&self) -> Vec<usize> {
        (0..self.torsion.len()).filter(|&i| self.torsion[i]).collect()
    }

    pub fn torsionfree_items(&self) -> Vec<usize> {
        (0..self.torsionfree.len()).filter(|&i| self.torsionfree[i]).collect()
    }
}

/// Builds the view and checks the torsion-pair axioms on the catalogue,
/// plus sincerity of `T`.
pub fn torsion_view(m: &Module, cat: &Catalogue) -> Result<TorsionView, TauError> {
    cat.require_complete()?;
    let tau_m = tau(m);
    let n = cat.len();
    let torsion: Vec<bool> = cat.modules().map(|x| hom_dim(x, &tau_m) == 0).collect();
    let torsionfree: Vec<bool> = cat.modules().map(|x| cogen_membership(x, &tau_m)).collect();
    let hom: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| hom_dim(cat.module(i), cat.module(j))).collect())
        .collect();
    for i in 0..n {
        if torsion[i] && torsionfree[i] {
            return Err(TauError::InternalInconsistency(format!("{} lies in both classes", cat.items()[i].label)));
        }
        let orth_to_f = (0..n).all(|j| !torsionfree[j] || hom[i][j] == 0);
        let orth_from_t = (0..n).all(|j| !torsion[j] || hom[j][i] == 0);
        if torsion[i] != orth_to_f || torsionfree[i] != orth_from_t {
            return Err(TauError::InternalInconsistency(format!(
                "torsion pair axioms fail at {}",
                cat.items()[i].label
            )));
        }
    }
    let support: Vec<usize> = (0..m.dims().len())
        .map(|v| (0..n).filter(|&i| torsion[i]).map(|i| cat.module(i).dim_at(v)).sum())
        .collect();
    if support.contains(&0) {
        return Err(TauError::InternalInconsistency("torsion class is not sincere".into()));
    }
    Ok(TorsionView { tau_m, torsion, torsionfree })
}

/// Whether an indecomposable `X ∈ ⊥(τM)` is Ext-projective there, i.e.
/// `τX ∈ Cogen(τM)`; cross-checked against `Ext^1(X, T) = 0`.
pub fn is_ext_projective_in_perp(x: &Module, m: &Module, cat: &Catalogue) -> Result<bool, TauError> {
    cat.require_complete()?;
    let tau_m = tau(m);
    if hom_dim(x, &tau_m) != 0 {
        return Err(TauError::NotInTorsionClass);
    }
    let answer = cogen_membership(&tau(x), &tau_m);
    let extensional = cat
        .modules()
        .filter(|y| hom_dim(y, &tau_m) == 0)
        .all(|y| ext1_dim(x, y) == 0);
    if answer != extensional {
        return Err(TauError::InternalInconsistency("Ext-projectivity criteria disagree".into()));
    }
    Ok(answer)
}

/// Bongartz complement of a τ-rigid `M`, with the catalogue indices of its
/// summands.
pub fn bongartz_complement(m: &Module, cat: &Catalogue) -> Result<(Module, Vec<usize>), TauError> {
    cat.require_complete()?;
    if !is_tau_rigid(m) {
        return Err(TauError::NotTauRigid);
    }
    let tau_m = tau(m);
    let summands = decompose(m)?;
    let picked: Vec<usize> = (0..cat.len())
        .filter(|&i| {
            let x = cat.module(i);
            hom_dim(x, &tau_m) == 0
                && cogen_membership(&cat.tau_module(i), &tau_m)
                && !summands.iter().any(|s| iso_indecomposable(s, x))
        })
        .collect();
    let parts: Vec<Module> = picked.iter().map(|&i| cat.module(i).clone()).collect();
    let u = Module::direct_sum(m.algebra(), &parts);
    let whole = m.oplus(&u);
    let count = decompose_grouped(m)?.len() + picked.len();
    if !is_tau_rigid(&whole) || count != m.algebra().vertex_count() {
        return Err(TauError::InternalInconsistency(format!(
            "M ⊕ U is not τ-tilting ({count} summands)"
        )));
    }
    Ok((u, picked))
}

/// τ-rigid with as many non-isomorphic summands as vertices. With a
/// catalogue, also confirms `⊥(τM) = Gen M` item by item.
pub fn is_tau_tilting(m: &Module, cat: Option<&Catalogue>) -> Result<bool, TauError> {
    let answer = is_tau_rigid(m) && decompose_grouped(m)?.len() == m.algebra().vertex_count();
    if let (true, Some(cat)) = (answer, cat) {
        cat.require_complete()?;
        let tau_m = tau(m);
        for (i, x) in cat.modules().enumerate() {
            if (hom_dim(x, &tau_m) == 0) != gen_membership(x, m) {
                return Err(TauError::InternalInconsistency(format!(
                    "⊥(τM) and Gen M differ at {}",
                    cat.items()[i].label
                )));
            }
        }
    }
    Ok(answer)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alternative {
    /// `⊥(τU) ⊆ ⊥(τX)`
    Containment,
    /// `X ∈ Gen U`
    Generated,
}

/// For `X ⊕ U` basic τ-tilting with `X` indecomposable, exactly one of
/// the two alternatives holds.
pub fn prop222_check(x: &Module, u: &Module, cat: &Catalogue) -> Result<Alternative, TauError> {
    cat.require_complete()?;
    let whole = x.oplus(u);
    let grouped = decompose_grouped(&whole)?;
    if decompose(x)?.len() != 1
        || grouped.iter().any(|(_, k)| *k > 1)
        || !is_tau_tilting(&whole, None)?
    {
        return Err(TauError::PreconditionFailed("X ⊕ U must be basic τ-tilting with X indecomposable".into()));
    }
    let (tau_u, tau_x) = (tau(u), tau(x));
    let containment = cat.modules().all(|y| hom_dim(y, &tau_u) != 0 || hom_dim(y, &tau_x) == 0);
    let generated = gen_membership(x, u);
    match (containment, generated) {
        (true, false) => Ok(Alternative::Containment),
        (false, true) => Ok(Alternative::Generated),
        _ => Err(TauError::InternalInconsistency(format!(
            "containment={containment}, generated={generated}"
        ))),
    }
}

/// Pairwise data for enumerating τ-rigid modules built from catalogue
/// items: `compatible[i][j]` iff `Hom(X_i, τX_j) = 0 = Hom(X_j, τX_i)`.
#[derive(Clone, Debug)]
pub struct RigidityTable {
    pub rigid: Vec<bool>,
    pub compatible: Vec<Vec<bool>>,
}

impl RigidityTable {
    pub fn new(cat: &Catalogue) -> Self {
        let n = cat.len();
        let taus: Vec<Module> = (0..n).map(|i| cat.tau_module(i)).collect();
        let h: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| hom_dim(cat.module(i), &taus[j])).collect()).collect();
        RigidityTable {
            rigid: (0..n).map(|i| h[i][i] == 0).collect(),
            compatible: (0..n).map(|i| (0..n).map(|j| h[i][j] == 0 && h[j][i] == 0).collect()).collect(),
        }
    }

    /// Every basic τ-rigid module, as sorted index sets (the empty set
    /// included).
    pub fn rigid_sets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.extend(0, &mut current, &mut out);
        out
    }

    fn extend(&self, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for i in start..self.rigid.len() {
            if self.rigid[i] && current.iter().all(|&j| self.compatible[i][j]) {
                current.push(i);
                self.extend(i + 1, current, out);
                current.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::tilted_c;
    use crate::tautilt::catalogue::{DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM};
    use crate::tautilt::decompose::{describe, is_isomorphic};
    use std::sync::OnceLock;

    fn cat() -> &'static Catalogue {
        static CAT: OnceLock<Catalogue> = OnceLock::new();
        CAT.get_or_init(|| Catalogue::build(&tilted_c(), DEFAULT_MAX_DIM, DEFAULT_MAX_COUNT).unwrap())
    }

    fn iv(s: &str) -> Module {
        Module::from_interval(&tilted_c(), s).unwrap()
    }

    fn m1() -> Module {
        iv("2/3/4/5").oplus(&iv("2/3/4")).oplus(&iv("3"))
    }

    #[test]
    fn bongartz_examples() {
        let (u, _) = bongartz_complement(&m1(), cat()).unwrap();
        assert!(is_isomorphic(&u, &iv("1/2/3").oplus(&iv("3/4"))).unwrap());
        assert_eq!(describe(&u), "1/2/3 ⊕ 3/4");
        let (u, _) = bongartz_complement(&iv("3/4/5"), cat()).unwrap();
        let expected = iv("5").oplus(&iv("4/5")).oplus(&iv("2/3/4/5")).oplus(&iv("1/2/3"));
        assert!(is_isomorphic(&u, &expected).unwrap());
        let (u, _) = bongartz_complement(&Module::regular(&tilted_c()), cat()).unwrap();
        assert!(u.is_zero());
        assert_eq!(
            bongartz_complement(&iv("2/3").oplus(&iv("3/4")), cat()).unwrap_err(),
            TauError::NotTauRigid
        );
    }

    #[test]
    fn tilting_and_torsion() {
        let c = tilted_c();
        assert!(is_tau_tilting(&Module::regular(&c), Some(cat())).unwrap());
        let (u, _) = bongartz_complement(&m1(), cat()).unwrap();
        assert!(is_tau_tilting(&m1().oplus(&u), Some(cat())).unwrap());
        assert!(!is_tau_tilting(&m1(), Some(cat())).unwrap());
        let view = torsion_view(&m1(), cat()).unwrap();
        let i345 = cat().find(&iv("3/4/5")).unwrap();
        let i123 = cat().find(&iv("1/2/3")).unwrap();
        assert!(view.torsionfree[i345] && view.torsion[i123]);
        let all = torsion_view(&Module::regular(&c), cat()).unwrap();
        assert!(all.torsion.iter().all(|&t| t));
    }

    #[test]
    fn ext_projectives() {
        for s in ["2/3/4/5", "2/3/4", "3", "1/2/3"] {
            assert!(is_ext_projective_in_perp(&iv(s), &m1(), cat()).unwrap(), "{s}");
        }
        assert!(!is_ext_projective_in_perp(&iv("1/2"), &m1(), cat()).unwrap());
        assert_eq!(is_ext_projective_in_perp(&iv("4"), &m1(), cat()).unwrap_err(), TauError::NotInTorsionClass);
    }

    #[test]
    fn exactly_one_alternative() {
        let u = m1().oplus(&iv("3/4"));
        assert_eq!(prop222_check(&iv("1/2/3"), &u, cat()).unwrap(), Alternative::Containment);
        let rest = iv("2/3/4/5").oplus(&iv("2/3/4")).oplus(&iv("1/2/3")).oplus(&iv("3/4"));
        let alt = prop222_check(&iv("3"), &rest, cat()).unwrap();
        assert_eq!(alt, Alternative::Generated);
    }

    #[test]
    fn rigid_count_bound() {
        let t = RigidityTable::new(cat());
        let sets = t.rigid_sets();
        assert!(sets.iter().all(|s| s.len() <= 5));
        // S(2) ⊕ 1/2 is τ-rigid: τ S(2) = 3 and τ(1/2) = 2/3
        let s2 = cat().find(&iv("2")).unwrap();
        let i12 = cat().find(&iv("1/2")).unwrap();
        assert!(t.rigid[s2] && t.rigid[i12] && t.compatible[s2][i12]);
    }
}
