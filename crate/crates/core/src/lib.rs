//! Exact root systems, rotor groups and the Clifford spinor induction from
//! rank-3 root systems to rank-4 root systems.
//!
//! All arithmetic is exact over real number fields ([`Field`]); nothing in the
//! pipeline compares floats.

pub mod classify;
pub mod clifford;
pub mod error;
pub mod field;
pub mod io;
pub mod presets;
pub mod rational;
pub mod roots;
pub mod scalar;
pub mod spinor;
pub mod survey;
pub mod vector;

pub use error::{Error, Result};
pub use field::Field;
pub use rational::Rational;
pub use roots::{AxiomReport, Provenance, RootSystem};
pub use scalar::Scalar;
pub use vector::VecE;
