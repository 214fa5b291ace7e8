use proptest::prelude::*;
use taukit::exactlin::{Field, Matrix};
use taukit::fixtures::{catalogue_b, catalogue_c};
use taukit::homological::{ext1_dim, is_tau_rigid, tau, tau_inv};
use taukit::repmod::{hom_dim, Module};
use taukit::tautilt::{decompose_grouped, is_isomorphic, Catalogue};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::Prime(2)), Just(Field::Prime(3)), Just(Field::Prime(7))]
}

fn shaped(f: Field, r: usize, c: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-4i64..5, r * c).prop_map(move |xs| {
        let rows: Vec<Vec<i64>> = xs.chunks(c).map(<[i64]>::to_vec).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        Matrix::from_ints(f, &refs)
    })
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..6, 1usize..6).prop_flat_map(|(f, r, c)| shaped(f, r, c))
}

fn product_pair() -> impl Strategy<Value = (Matrix, Matrix)> {
    (field(), 1usize..6, 1usize..6, 1usize..6).prop_flat_map(|(f, r, k, c)| (shaped(f, r, k), shaped(f, k, c)))
}

fn square() -> impl Strategy<Value = Matrix> {
    (field(), 1usize..6).prop_flat_map(|(f, n)| shaped(f, n, n))
}

fn item(cat: &'static Catalogue) -> impl Strategy<Value = &'static Module> {
    (0..cat.len()).prop_map(move |i| cat.module(i))
}

fn either_catalogue() -> impl Strategy<Value = &'static Catalogue> {
    prop_oneof![Just(catalogue_c()), Just(catalogue_b())]
}

proptest! {
    #[test]
    fn rank_is_transpose_invariant(a in matrix()) {
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn rank_nullity(a in matrix()) {
        let null = a.nullspace_basis();
        prop_assert_eq!(a.rank() + null.rows(), a.cols());
        if null.rows() > 0 {
            prop_assert!(a.mul(&null.transpose()).is_zero());
        }
    }

    #[test]
    fn rref_is_idempotent(a in matrix()) {
        let once = a.rref();
        let twice = once.reduced.rref();
        prop_assert_eq!(&once.reduced, &twice.reduced);
        prop_assert_eq!(once.pivots, twice.pivots);
    }

    #[test]
    fn product_rank_is_bounded((a, b) in product_pair()) {
        prop_assert!(a.mul(&b).rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn inverse_when_full_rank(a in square()) {
        match a.inverse() {
            Some(inv) => prop_assert_eq!(a.mul(&inv), Matrix::identity(a.field(), a.rows())),
            None => prop_assert!(a.rank() < a.rows()),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_is_additive((cat, i, j, k) in either_catalogue().prop_flat_map(|c| (Just(c), 0..c.len(), 0..c.len(), 0..c.len()))) {
        let (x, y, z) = (cat.module(i), cat.module(j), cat.module(k));
        prop_assert_eq!(hom_dim(&x.oplus(y), z), hom_dim(x, z) + hom_dim(y, z));
        prop_assert_eq!(hom_dim(z, &x.oplus(y)), hom_dim(z, x) + hom_dim(z, y));
    }

    #[test]
    fn duality_reverses_hom((cat, i, j) in either_catalogue().prop_flat_map(|c| (Just(c), 0..c.len(), 0..c.len()))) {
        let op = cat.algebra().opposite();
        let (m, n) = (cat.module(i), cat.module(j));
        prop_assert_eq!(hom_dim(m, n), hom_dim(&n.dual_into(&op), &m.dual_into(&op)));
    }

    #[test]
    fn tau_inverts_on_non_projectives(m in item(catalogue_b())) {
        prop_assume!(!m.is_projective());
        prop_assert!(is_isomorphic(&tau_inv(&tau(m)), m).unwrap());
    }

    #[test]
    fn ext_vanishes_against_injectives(m in item(catalogue_c()), v in 0usize..5) {
        let inj = Module::injective(catalogue_c().algebra(), v);
        prop_assert_eq!(ext1_dim(m, &inj), 0);
        let proj = Module::projective(catalogue_c().algebra(), v);
        prop_assert_eq!(ext1_dim(&proj, m), 0);
    }

    #[test]
    fn sums_decompose_into_their_parts(m in item(catalogue_c()), n in item(catalogue_c())) {
        let parts = decompose_grouped(&m.oplus(n)).unwrap();
        let total: usize = parts.iter().map(|(_, k)| k).sum();
        prop_assert_eq!(total, 2);
        prop_assert_eq!(parts.len(), if is_isomorphic(m, n).unwrap() { 1 } else { 2 });
    }

    #[test]
    fn rigidity_of_sums_is_pairwise(m in item(catalogue_c()), n in item(catalogue_c())) {
        let pairwise = is_tau_rigid(m) && is_tau_rigid(n)
            && hom_dim(m, &tau(n)) == 0 && hom_dim(n, &tau(m)) == 0;
        prop_assert_eq!(is_tau_rigid(&m.oplus(n)), pairwise);
    }
}
