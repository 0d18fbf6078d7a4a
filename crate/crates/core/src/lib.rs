//! Li-Keiper coefficients from the Taylor expansion of the completed Riemann
//! xi function about `s = 1`.
//!
//! The crate is layered bottom-up:
//!
//! - [`mpseries`]: arbitrary-precision reals and truncated power series.
//! - [`xifactory`]: Stieltjes constants, zeta values and the Taylor
//!   coefficients `a_n` of `xi(s) = sum a_n (s - 1)^n`.
//! - [`cluster`]: the partial partition functions `phi_n`, the cluster
//!   (partition) expansion of `lambda_n`, equilibrium residuals, the one- and
//!   two-cluster bounds and the Koebe-function background.
//! - [`constants`]: the constant `c = (pi/3) xi'(2)/xi(2)` by several
//!   independent routes.

pub mod cluster;
pub mod constants;
pub mod error;
pub mod mpseries;
pub mod xifactory;

pub use error::{Error, Result};
pub use mpseries::{BigReal, PowerSeries};
