//! Exact computations on simplicial affine semigroups: toric ideals,
//! standard bases under the local degree order, Cohen–Macaulayness of the
//! tangent cone, Betti numbers and nice extensions.

pub mod betti;
pub mod error;
pub mod extension;
pub mod ideal;
pub mod limits;
pub mod linalg;
pub mod local;
pub mod report;
pub mod semigroup;

pub use error::{Error, Result};
pub use limits::Limits;
pub use semigroup::{AffineSemigroup, Point};
