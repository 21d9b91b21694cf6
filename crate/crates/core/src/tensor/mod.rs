//! Desk-scale Schur–Weyl duality: tableaux, Young symmetrizers, isotypic
//! projectors and the decomposition of `V^{⊗k}`.
//!
//! Place permutations follow the convention that `sigma` moves the vector in
//! slot `sigma^-1(p)` to slot `p`, so `s(T) = c(T) r(T)`.

pub mod characters;
pub mod group_algebra;
pub mod partition;
pub mod perm;
pub mod space;

pub use characters::{character, dimension};
pub use group_algebra::{
    column_antisymmetrizer, isotypic_projector, left_ideal_dimension, row_symmetrizer,
    young_symmetrizer, GroupAlgebraElement,
};
pub use partition::{partitions, semistandard_count, standard_tableaux, Partition, Tableau};
pub use perm::Perm;
pub use space::{
    act_on_tensor, highest_weight_vector, schur_weyl_decompose, tableau_vector, weight_multiset,
    IsotypicComponent, TensorAction, TensorVector,
};
