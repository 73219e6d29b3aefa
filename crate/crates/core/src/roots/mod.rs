//! Root systems, finite Weyl groups and the extended affine Weyl group.

pub mod affine;
pub mod system;
pub mod weyl;

pub use affine::{AffineRoot, AffineWeylElement};
pub use system::{CartanType, RootSystem, Vector};
pub use weyl::{TieBreak, WeylElement};
