//! Orbit functions of even Weyl groups ("E-functions") for the compact
//! semisimple, non-simple Lie groups of rank at most three:
//! A1×A1, A1×A2, A1×C2, A1×G2 and A1×A1×A1.

pub mod efunc;
pub mod error;
pub mod exec;
pub mod formats;
pub mod grids;
pub mod lie_data;
pub mod linalg;
pub mod transform;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use exec::Execution;

/// Exact rational arithmetic used for all lattice computations.
pub type Rational = num_rational::Ratio<i64>;
