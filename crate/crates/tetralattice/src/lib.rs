//! Exact evaluation of operator-valued vertex models on triangular lattices.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod fock;
pub mod harness;
pub mod pfunc;
pub mod schubert;
pub mod symfun;
pub mod tasep;
pub mod vertexmodel;

pub use error::{Error, Result};
