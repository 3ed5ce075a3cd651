//! Exact computations around subspace profiles of diagonal operators over
//! finite fields: the polynomials `b_mu,nu(q)`, q-Whittaker coefficients,
//! Touchard-Riordan polynomials, q-Stirling numbers and q-rook numbers,
//! each available through several independent routes.

pub mod bpoly;
pub mod cli;
pub mod error;
pub mod profiles;
pub mod qarith;
pub mod setpart;
pub mod shapes;
pub mod stirlrook;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use qarith::QPoly;
pub use setpart::SetPartition;
pub use shapes::{Composition, Partition, Stat, Word};
pub use tableaux::Tableau;
