//! The two example algebras shipped under `fixtures/`, parsed once.

use std::sync::{Arc, OnceLock};

use crate::algebra::Algebra;
use crate::schema::AlgebraJson;
use crate::splitext::SplitExtension;
use crate::tautilt::{Catalogue, DEFAULT_MAX_COUNT, DEFAULT_MAX_DIM};

pub const C_JSON: &str = include_str!("../../../fixtures/C.json");
pub const B_JSON: &str = include_str!("../../../fixtures/B.json");

fn load(src: &str) -> Arc<Algebra> {
    let spec: AlgebraJson = serde_json::from_str(src).expect("fixture parses");
    Algebra::from_json(&spec).expect("fixture builds")
}

/// `1 -> 2 -> 3 -> 4 -> 5` with `alpha beta gamma = 0`.
pub fn tilted_c() -> Arc<Algebra> {
    static C: OnceLock<Arc<Algebra>> = OnceLock::new();
    C.get_or_init(|| load(C_JSON)).clone()
}

/// `tilted_c` plus `delta: 4 -> 1` and the four cyclic zero relations.
pub fn cluster_tilted_b() -> Arc<Algebra> {
    static B: OnceLock<Arc<Algebra>> = OnceLock::new();
    B.get_or_init(|| load(B_JSON)).clone()
}

/// The split extension `B = C ⋉ E`, with `E` generated by `delta`.
pub fn cluster_split() -> &'static SplitExtension {
    static S: OnceLock<SplitExtension> = OnceLock::new();
    S.get_or_init(|| {
        let (b, c) = (cluster_tilted_b(), tilted_c());
        let vmap = (0..c.vertex_count()).collect();
        let embed = c
            .quiver()
            .arrows()
            .iter()
            .map(|a| b.quiver().arrow_index(&a.name).expect("arrow of C in B"))
            .collect();
        SplitExtension::new(b, c, vmap, embed, None).expect("fixture split extension is valid")
    })
}

/// Complete catalogue of indecomposables over `tilted_c`.
pub fn catalogue_c() -> &'static Catalogue {
    static CAT: OnceLock<Catalogue> = OnceLock::new();
    CAT.get_or_init(|| Catalogue::build(&tilted_c(), DEFAULT_MAX_DIM, DEFAULT_MAX_COUNT).expect("C knits"))
}

/// Complete catalogue of indecomposables over `cluster_tilted_b`.
pub fn catalogue_b() -> &'static Catalogue {
    static CAT: OnceLock<Catalogue> = OnceLock::new();
    CAT.get_or_init(|| {
        Catalogue::build(&cluster_tilted_b(), DEFAULT_MAX_DIM, DEFAULT_MAX_COUNT).expect("B knits")
    })
}
