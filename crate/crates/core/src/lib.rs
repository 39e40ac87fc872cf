//! Finite ordered semigroups: deciders for ideal, regularity, Green's-relation
//! and decomposition properties, exhaustive enumeration, and a harness that
//! checks characterization theorems structure by structure.

pub mod analysis;
pub mod decomposition;
pub mod enumeration;
pub mod error;
pub mod expr;
pub mod ideals;
pub mod regularity;
pub mod relations;
pub mod semigroup;
pub mod subset;
pub mod theorems;

pub use error::{Error, Result, Violation};
pub use semigroup::{fixtures, MonoidExtension, OrderedSemigroup, PowerProfile};
pub use subset::ElementSubset;
