//! Octonion loop birepresentations, Malcev algebras of their tangent spaces,
//! and the fermionic charge algebra they induce.

pub mod acceptance;
pub mod birep;
pub mod charge;
pub mod commands;
pub mod config;
pub mod error;
pub mod finite_loop;
pub mod fock;
pub mod malcev;
pub mod numdiff;
pub mod octonion;
pub mod report;
pub mod sampling;

pub use error::{Error, Result};
pub use octonion::{ChartPoint, MulTable, Octonion};
