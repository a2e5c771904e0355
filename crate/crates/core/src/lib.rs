//! Exact computations around S-duality of Hamiltonian spaces.

pub mod brane;
pub mod coulomb;
pub mod error;
pub mod exactalg;
pub mod partitions;
pub mod spaces;

pub use error::{Error, Result};
