//! Finite group theory over explicit Cayley tables.
//!
//! Groups are stored as operation tables with elements referenced by index
//! (index 0 is the identity). On top of that the crate provides subgroups,
//! cosets and quotients, permutation groups, group actions, constructive
//! Sylow subgroups, and simplicity tests with explicit proper normal
//! subgroups for every composite order below 60.

pub mod action;
pub mod arith;
pub mod corpus;
pub mod error;
pub mod generators;
pub mod group;
pub mod homomorphism;
pub mod io;
pub mod perm;
pub mod simple;
pub mod subgroup;
pub mod sylow;

pub use action::GroupAction;
pub use error::{Error, Result};
pub use group::{Group, Limits};
pub use homomorphism::{Codomain, GroupMap, Symmetric};
pub use perm::{Perm, SymGroup};
pub use simple::{Method, SimplicityVerdict};
pub use subgroup::{Coset, Subgroup};
pub use sylow::SylowReport;
