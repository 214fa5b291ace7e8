//! Exact computations with modules over bound quiver algebras:
//! Auslander-Reiten translates, tau-tilting modules, Bongartz complements
//! and induction along split-by-nilpotent extensions.

pub mod algebra;
pub mod exactlin;
pub mod fixtures;
pub mod homological;
pub mod repmod;
pub mod schema;
pub mod splitext;
pub mod tautilt;
