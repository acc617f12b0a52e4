//! Finite p-groups materialized from generators, and the subgroup,
//! centralizer, commutator and quotient primitives built on them.

mod action;
mod lattice;
mod ops;
mod quotient;
mod subgroup;
mod table;

pub use action::Action;
pub use lattice::{conjugacy_classes, enumerate_normal_subgroups, normal_subgroups, NormalLattice};
pub use ops::{
    canonical_generators, center, centralizer_of_element, centralizer_of_subgroup,
    commutator_set, commutator_subgroup, commutator_subgroup_exhaustive, generated_subgroup,
    index_log, is_normal, is_normal_exhaustive, join, join_normals, normal_closure,
    power_subgroup, product_of_normals,
};
pub(crate) use ops::extend_normal;
pub use quotient::{quotient, Projection};
pub use subgroup::Subgroup;
pub use table::{
    is_odd_prime, log_exact, Elem, ElementRepr, GroupTable, DEFAULT_ORDER_CAP, TABLE_THRESHOLD,
};
