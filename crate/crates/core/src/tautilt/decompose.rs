//! Krull-Schmidt decomposition by Fitting's lemma, and isomorphism tests
//! built on it.

use crate::exactlin::{poly, Field, Scalar, Span};
use crate::repmod::{hom_basis, image, kernel, Module, ModuleMap};

use super::TauError;

fn power(f: &ModuleMap, e: usize) -> ModuleMap {
    let mut acc = f.clone();
    for _ in 1..e {
        acc = acc.then(f);
    }
    acc
}

enum Kind {
    Nilpotent,
    Invertible,
    Splits(Module, Module),
}

fn classify(m: &Module, f: &ModuleMap) -> Kind {
    if f.is_isomorphism() {
        return Kind::Invertible;
    }
    let n = m.dims().iter().copied().max().unwrap_or(1).max(1);
    let fnth = power(f, n);
    if fnth.is_zero() {
        return Kind::Nilpotent;
    }
    let (k, _) = kernel(m, &fnth);
    let (i, _) = image(m, &fnth);
    Kind::Splits(k, i)
}

// A tiny deterministic generator for coefficient vectors.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }
}

fn eigen_shifts(m: &Module, f: &ModuleMap) -> Vec<ModuleMap> {
    let field = m.field();
    let mut roots: Vec<Scalar> = Vec::new();
    for (v, c) in f.components.iter().enumerate() {
        if m.dim_at(v) == 0 {
            continue;
        }
        for r in poly::roots(field, &poly::minimal_polynomial(c)) {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    let id = ModuleMap::identity(m);
    roots.iter().map(|r| f.sub(&id.scale(r))).collect()
}

fn candidates(m: &Module, basis: &[ModuleMap]) -> impl Iterator<Item = ModuleMap> {
    let field = m.field();
    let singles = basis.to_vec();
    let shifted: Vec<ModuleMap> = basis.iter().flat_map(|f| eigen_shifts(m, f)).collect();
    let n = basis.len();
    let pairs = {
        let basis = basis.to_vec();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j))).flat_map(move |(i, j)| {
            vec![basis[i].add(&basis[j]), basis[i].then(&basis[j]), basis[j].then(&basis[i])]
        })
    };
    let combos = {
        let basis = basis.to_vec();
        let mut rng = Lcg(0x5eed);
        let rounds = if field == Field::Rationals { 64 } else { 256 };
        (0..rounds).map(move |_| {
            let coeffs: Vec<Scalar> = (0..n).map(|_| field.from_int((rng.next() % 7) as i64 - 3)).collect();
            ModuleMap::combination(&basis, &coeffs)
        })
    };
    singles.into_iter().chain(shifted).chain(pairs).chain(combos)
}

/// If `End(M)` is local, a spanning set of its radical: each basis
/// element shifted by a scalar to become nilpotent. Locality is certified
/// by checking that the shifted elements span a nilpotent ideal of
/// codimension one.
pub fn local_radical(m: &Module, basis: &[ModuleMap]) -> Option<Vec<ModuleMap>> {
    let field = m.field();
    let mut radical = Vec::new();
    for f in basis {
        let g = eigen_shifts(m, f).into_iter().find(|g| matches!(classify(m, g), Kind::Nilpotent))?;
        radical.push(g);
    }
    let flat = |g: &ModuleMap| -> Vec<Scalar> { g.components.iter().flat_map(|c| c.entries().to_vec()).collect() };
    let width: usize = m.dims().iter().map(|d| d * d).sum();
    let mut span = Span::new(field, width);
    let mut gens = Vec::new();
    for g in radical {
        if span.insert(flat(&g)) {
            gens.push(g);
        }
    }
    if span.rank() >= basis.len() {
        return None;
    }
    // powers of the candidate radical must vanish
    let mut layer = gens.clone();
    for _ in 0..=m.dim() {
        let mut next_span = Span::new(field, width);
        let mut next = Vec::new();
        for x in &layer {
            for y in &gens {
                let p = x.then(y);
                if next_span.insert(flat(&p)) {
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            return Some(gens);
        }
        layer = next;
    }
    None
}

pub fn has_local_endomorphisms(m: &Module, basis: &[ModuleMap]) -> bool {
    local_radical(m, basis).is_some()
}

/// Indecomposable summands (with repetition), largest first.
pub fn decompose(m: &Module) -> Result<Vec<Module>, TauError> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        let basis = hom_basis(&x, &x);
        if basis.len() == 1 {
            out.push(x);
            continue;
        }
        let mut split = None;
        for f in candidates(&x, &basis) {
            if let Kind::Splits(k, i) = classify(&x, &f) {
                split = Some((k, i));
                break;
            }
        }
        match split {
            Some((k, i)) => {
                stack.push(k);
                stack.push(i);
            }
            None if has_local_endomorphisms(&x, &basis) => out.push(x),
            None => {
                return Err(TauError::Undecided(format!(
                    "no splitting endomorphism found for a module with dimension vector {:?}",
                    x.dims()
                )))
            }
        }
    }
    sort_summands(&mut out);
    Ok(out)
}

pub(crate) fn sort_summands(v: &mut [Module]) {
    v.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| b.dims().cmp(a.dims())));
}

/// Groups indecomposables into isomorphism classes with multiplicities.
pub fn decompose_grouped(m: &Module) -> Result<Vec<(Module, usize)>, TauError> {
    let mut out: Vec<(Module, usize)> = Vec::new();
    for x in decompose(m)? {
        match out.iter_mut().find(|(y, _)| iso_indecomposable(&x, y)) {
            Some((_, k)) => *k += 1,
            None => out.push((x, 1)),
        }
    }
    Ok(out)
}

/// Isomorphism of indecomposables: some composite `X -> Y -> X` of basis
/// maps is invertible.
pub fn iso_indecomposable(x: &Module, y: &Module) -> bool {
    if x.dims() != y.dims() {
        return false;
    }
    if x.is_zero() {
        return true;
    }
    let xy = hom_basis(x, y);
    if xy.is_empty() {
        return false;
    }
    if xy.iter().any(ModuleMap::is_isomorphism) {
        return true;
    }
    let yx = hom_basis(y, x);
    xy.iter().any(|f| yx.iter().any(|g| f.then(g).is_isomorphism()))
}

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool, TauError> {
    if !m.same_algebra(n) || m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    let basis = hom_basis(m, n);
    if basis.is_empty() {
        return Ok(false);
    }
    let field = m.field();
    // structured attempts: each basis map, then sums weighted by powers
    if basis.iter().any(ModuleMap::is_isomorphism) {
        return Ok(true);
    }
    for k in 0..=basis.len() {
        let coeffs: Vec<Scalar> = (0..basis.len()).map(|i| field.pow(&field.from_int(i as i64 + 1), k as u32)).collect();
        if ModuleMap::combination(&basis, &coeffs).is_isomorphism() {
            return Ok(true);
        }
    }
    let a = decompose(m)?;
    let mut b = decompose(n)?;
    for x in &a {
        let Some(pos) = b.iter().position(|y| iso_indecomposable(x, y)) else {
            return Ok(false);
        };
        b.swap_remove(pos);
    }
    Ok(b.is_empty())
}

/// Multiplicity of each of `items` as a summand of `m`; the second value
/// counts summands matching none of them.
pub fn summand_matching(m: &Module, items: &[Module]) -> Result<(Vec<usize>, usize), TauError> {
    let mut counts = vec![0; items.len()];
    let mut unmatched = 0;
    for x in decompose(m)? {
        match items.iter().position(|y| iso_indecomposable(&x, y)) {
            Some(i) => counts[i] += 1,
            None => unmatched += 1,
        }
    }
    Ok((counts, unmatched))
}

/// Human-readable decomposition, e.g. `"3/4/5 ⊕ 4"`.
pub fn describe(m: &Module) -> String {
    match decompose(m) {
        Ok(parts) if parts.is_empty() => "0".into(),
        Ok(parts) => parts.iter().map(Module::layer_label).collect::<Vec<_>>().join(" ⊕ "),
        Err(_) => m.layer_label(),
    }
}

/// Number of pairwise non-isomorphic indecomposable summands.
pub fn basic_count(m: &Module) -> Result<usize, TauError> {
    Ok(decompose_grouped(m)?.len())
}
