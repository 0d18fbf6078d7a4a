//! Arbitrary-precision scalars, exact combinatorics and truncated power
//! series: the numerical kernel the rest of the crate builds on.

mod combin;
mod real;
mod series;

pub use combin::{binomial, factorial};
pub use real::{bits_for_digits, BigReal, GUARD_BITS, MIN_DIGITS};
pub use series::{series_exp, series_log, series_mul, PowerSeries};

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 60;

/// Default series truncation order.
pub const DEFAULT_ORDER: usize = 40;
