//! Computational engine for the class-breadth inequality `cl(G) <= b(G) + 1`
//! on finite p-groups with `p > 2`.
//!
//! Groups are materialized from permutation or unitriangular-matrix
//! generators ([`group`]). On top of that sit breadth and lower-central
//! statistics ([`breadth`]), the index-`p` subgroup constructions
//! ([`constructions`]), and the recursive normal-subgroup construction with
//! replayable certificates ([`theorems`]). [`corpus`] holds the group
//! families, the group file parser and the JSON/CSV emitters.

pub mod breadth;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod group;
pub mod theorems;

pub use error::{Error, Result};
pub use group::{Elem, GroupTable, Subgroup};
