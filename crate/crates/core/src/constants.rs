//! The constant `c = (pi/3) xi'(2)/xi(2)` by several independent routes.
//!
//! * exact: `c = (pi/3) ((gamma + log(4 pi) + 3)/2 - 12 log A)`;
//! * lambda series: `c = (pi/3) sum_n lambda_n 2^{-n-1}`;
//! * binary series:
//!   `c = (pi/3) (1 + (3/2) log 2 + 12 zeta'(-1) + sum_n N_0(n)/((2n)(2n+1)(2n+2)))`
//!   with `N_0(n)` the number of zero bits of `n`;
//! * factor split: the log-derivatives at `s = 2` of the archimedean factor
//!   `(1/2) s pi^{-s/2} Gamma(s/2)` and of `(s - 1) zeta(s)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::mpseries::BigReal;
use crate::xifactory::{ConstantCache, XiTaylor, MIN_CONSTANT_DIGITS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Exact,
    LambdaSeries,
    BinarySeries,
    TrendTiny,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Exact => "exact",
            Route::LambdaSeries => "lambda",
            Route::BinarySeries => "binary",
            Route::TrendTiny => "split",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ConstantReport {
    pub route: Route,
    pub value: BigReal,
    pub terms_used: u64,
    /// Bound on `|value - c|`.
    pub est_error: BigReal,
    pub digits: u32,
}

fn require_digits(what: &str, digits: u32) -> Result<()> {
    if digits < MIN_CONSTANT_DIGITS {
        return Err(Error::Precision {
            what: what.to_string(),
            required: MIN_CONSTANT_DIGITS,
            available: digits,
        });
    }
    Ok(())
}

fn guarded_cache(digits: u32) -> Result<ConstantCache> {
    ConstantCache::compute(2, digits + 10)
}

fn pi_over_3(digits: u32) -> BigReal {
    BigReal::pi(digits).div_i64(3)
}

pub fn c_exact(digits: u32) -> Result<ConstantReport> {
    require_digits("c_exact", digits)?;
    let cache = guarded_cache(digits)?;
    let d = cache.digits;
    let four_pi = BigReal::pi(d).mul_i64(4);
    let bracket = (cache.euler_gamma() + &four_pi.ln()? + BigReal::from_i64(3, d)).div_i64(2)
        - cache.log_a.mul_i64(12);
    let value = (pi_over_3(d) * bracket).with_digits(digits);
    Ok(ConstantReport {
        route: Route::Exact,
        value,
        terms_used: 0,
        est_error: BigReal::pow10(-(digits as i32), digits),
        digits,
    })
}

/// `(pi/3) xi'(2)/xi(2)` from the Taylor coefficients about `s = 1`.
pub fn c_from_xi_series(xi: &XiTaylor) -> BigReal {
    let one = BigReal::one(xi.digits);
    pi_over_3(xi.digits) * xi.eval_derivative(&one) / xi.eval(&one)
}

/// Partial sum `(pi/3) sum_{n<=K} lambda_n 2^{-n-1}`; `lambdas[n] = lambda_n`.
///
/// The tail bound assumes `lambda_n / n^2` does not increase past `K`, so
/// `sum_{n>K} lambda_n 2^{-n-1} <= lambda_K 2^{-K-1} (K^2 + 4K + 6) / K^2`,
/// and doubles it.
pub fn c_from_lambda(lambdas: &[BigReal], terms: usize) -> Result<ConstantReport> {
    if terms == 0 || lambdas.len() <= terms {
        return Err(Error::usage(format!("c_from_lambda with {terms} terms needs lambda_1..lambda_{terms}")));
    }
    let d = lambdas[1..=terms].iter().map(BigReal::digits).min().unwrap_or(lambdas[1].digits());
    let mut sum = BigReal::zero(d);
    let mut weight = BigReal::from_ratio(1, 4, d);
    for lambda in &lambdas[1..=terms] {
        sum += lambda * &weight;
        weight = weight.div_i64(2);
    }
    let k = terms as i64;
    let tail = (&lambdas[terms] * &weight.mul_i64(2)).mul_i64(k * k + 4 * k + 6).div_i64(k * k);
    let pi3 = pi_over_3(d);
    Ok(ConstantReport {
        route: Route::LambdaSeries,
        value: &pi3 * &sum,
        terms_used: terms as u64,
        est_error: (pi3 * tail.abs()).mul_i64(2),
        digits: d,
    })
}

/// Zero bits in the binary representation of `n` (no leading zeros).
pub fn n_zero_count(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::usage("n_zero_count needs n >= 1"));
    }
    Ok(64 - n.leading_zeros() - n.count_ones())
}

pub fn n_one_count(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::usage("n_one_count needs n >= 1"));
    }
    Ok(n.count_ones())
}

/// `sum_{n<=cutoff} N_0(n) / ((2n)(2n+1)(2n+2))`, accumulated in order.
pub fn binary_digit_sum(cutoff: u64, digits: u32) -> BigReal {
    let mut sum = BigReal::zero(digits);
    for n in 2..=cutoff {
        let zeros = 64 - n.leading_zeros() - n.count_ones();
        if zeros == 0 {
            continue;
        }
        let m = u128::from(n);
        let denom = BigReal::from_u128((2 * m) * (2 * m + 1) * (2 * m + 2), digits);
        sum += BigReal::from_i64(i64::from(zeros), digits) / denom;
    }
    sum
}

/// The binary-digit series truncated at `cutoff`.
///
/// Tail: `N_0(n) <= log2 n` and `(2n)(2n+1)(2n+2) > 8 n^3`, and the integral
/// of `log2(x) / (8 x^3)` from `cutoff` gives
/// `(log N / (2 N^2) + 1 / (4 N^2)) / (8 log 2)`.
pub fn c_from_binary(cutoff: u64, digits: u32) -> Result<ConstantReport> {
    require_digits("c_from_binary", digits)?;
    if cutoff < 2 {
        return Err(Error::usage(format!("c_from_binary needs a cutoff >= 2, got {cutoff}")));
    }
    let cache = guarded_cache(digits)?;
    let d = cache.digits;
    let zeta_prime_minus_1 = BigReal::from_ratio(1, 12, d) - &cache.log_a;
    let ln2 = BigReal::ln2(d);
    let bracket = BigReal::one(d)
        + ln2.mul_i64(3).div_i64(2)
        + zeta_prime_minus_1.mul_i64(12)
        + binary_digit_sum(cutoff, d);
    let nr = BigReal::from_u128(u128::from(cutoff), d);
    let n2 = &nr * &nr;
    let tail = (nr.ln()? / n2.mul_i64(2) + n2.mul_i64(4).recip()) / ln2.mul_i64(8);
    let pi3 = pi_over_3(d);
    Ok(ConstantReport {
        route: Route::BinarySeries,
        value: (&pi3 * &bracket).with_digits(digits),
        terms_used: cutoff,
        est_error: (pi3 * tail).with_digits(digits),
        digits,
    })
}

/// The two addends of `c` from the factorisation `xi = trend * tiny`.
#[derive(Clone, Debug)]
pub struct FactorSplit {
    /// `(pi/3) d/ds log((1/2) s pi^{-s/2} Gamma(s/2))` at `s = 2`,
    /// `= (pi/6)(1 - gamma - log pi)`.
    pub archimedean: BigReal,
    /// `(pi/3) d/ds log((s - 1) zeta(s))` at `s = 2`,
    /// `= (pi/3)(1 + zeta'(2)/zeta(2))`.
    pub zeta: BigReal,
}

impl FactorSplit {
    pub fn sum(&self) -> BigReal {
        &self.archimedean + &self.zeta
    }

    pub fn report(&self) -> ConstantReport {
        let digits = self.archimedean.digits().min(self.zeta.digits());
        ConstantReport {
            route: Route::TrendTiny,
            value: self.sum(),
            terms_used: 0,
            est_error: BigReal::pow10(-(digits as i32), digits),
            digits,
        }
    }
}

pub fn trend_tiny_split(digits: u32) -> Result<FactorSplit> {
    require_digits("trend_tiny_split", digits)?;
    let cache = guarded_cache(digits)?;
    let d = cache.digits;
    let pi = BigReal::pi(d);
    let one = BigReal::one(d);
    let archimedean = pi.div_i64(6) * (&one - cache.euler_gamma() - pi.ln()?);
    let zeta2 = cache.zeta(2).expect("cache holds zeta(2)");
    let zeta = pi_over_3(d) * (one + &cache.zeta_prime_2 / zeta2);
    Ok(FactorSplit { archimedean: archimedean.with_digits(digits), zeta: zeta.with_digits(digits) })
}
