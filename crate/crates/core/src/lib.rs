//! Finite groups as multiplication tables, S-rings over them, enumeration of central
//! S-rings, and schurity testing through automorphisms of coloured Cayley digraphs.

pub mod error;
pub mod group;
pub mod perm;
pub mod enumerate;
pub mod sring;
pub mod schurity;
pub mod harness;

pub use error::{Error, Result};
pub use group::{build_group, Group, Section, Subgroup};
pub use perm::{Perm, PermGroup};
pub use sring::SRing;
