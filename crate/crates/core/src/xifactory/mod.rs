//! Taylor data of the completed xi function about `s = 1`.
//!
//! `xi(s) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s)` is expanded in
//! `x = s - 1` as the product of four series:
//!
//! 1. the polynomial `(1 + x)/2`,
//! 2. `pi^{-1/2} exp(-(x/2) log pi)`,
//! 3. `Gamma((1 + x)/2) = exp(log Gamma(1/2 + x/2))` with
//!    `log Gamma(1/2 + t) = (1/2) log pi - (gamma + 2 log 2) t
//!      + sum_{k>=2} (-1)^k (2^k - 1) zeta(k) t^k / k`,
//! 4. the entire function `(s - 1) zeta(s)`, whose coefficients are the
//!    Stieltjes constants.
//!
//! The first three make up the archimedean ("trend") factor and the last
//! one the zeta ("tiny") factor.

mod bernoulli;
pub mod cache;
mod zeta;

use rug::Rational;

use crate::error::{Error, Result};
use crate::mpseries::{factorial, BigReal, PowerSeries};

pub use bernoulli::bernoulli_even;

/// Largest Stieltjes index served by [`stieltjes_constants`].
pub const MAX_STIELTJES: usize = 60;

/// Smallest precision accepted by the constant routines.
pub const MIN_CONSTANT_DIGITS: u32 = 30;

/// Extra series order carried while multiplying the four factors.
pub const ORDER_GUARD: usize = 10;

/// High-precision constants shared by every xi expansion of a given size.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantCache {
    /// Precision of every stored value.
    pub digits: u32,
    /// `gamma_0 ..= gamma_M`.
    pub stieltjes: Vec<BigReal>,
    /// `zeta(2) ..= zeta(K)`; see [`ConstantCache::zeta`].
    pub zeta_values: Vec<BigReal>,
    pub zeta_prime_2: BigReal,
    /// `log A`, `A` the Glaisher–Kinkelin constant.
    pub log_a: BigReal,
}

impl ConstantCache {
    /// Computes everything needed for series of the given order: the
    /// Stieltjes constants `gamma_0 .. gamma_{order-1}` and `zeta(2..=order)`.
    pub fn compute(order: usize, digits: u32) -> Result<Self> {
        let order = order.max(2);
        let bern = bernoulli_even(zeta::bernoulli_budget(digits));
        let tiny = zeta::shifted_zeta_series(1, order, digits, &bern)?;
        let stieltjes = stieltjes_from_tiny(&tiny, order - 1);

        let zeta_values = (2..=order as u32)
            .map(|k| zeta::zeta_at(k, digits, &bern))
            .collect::<Result<Vec<_>>>()?;

        // zeta(2 + x) = F(x) / (1 + x) with F = (s - 1) zeta(s) about s = 2.
        let f2 = zeta::shifted_zeta_series(2, 1, digits, &bern)?;
        let zeta_prime_2 = f2.coeff(1) - f2.coeff(0);

        let log_a = glaisher_log(&stieltjes[0], &zeta_values[0], &zeta_prime_2)?;
        Ok(ConstantCache { digits, stieltjes, zeta_values, zeta_prime_2, log_a })
    }

    /// Largest series order this cache can serve.
    pub fn order(&self) -> usize {
        (self.stieltjes.len()).min(self.zeta_values.len() + 1)
    }

    pub fn zeta(&self, k: usize) -> Option<&BigReal> {
        k.checked_sub(2).and_then(|i| self.zeta_values.get(i))
    }

    pub fn euler_gamma(&self) -> &BigReal {
        &self.stieltjes[0]
    }

    /// `(s - 1) zeta(s) = 1 + sum_n (-1)^n gamma_n x^{n+1} / n!` to `order`.
    pub fn tiny_series(&self, order: usize) -> Result<PowerSeries> {
        if order > self.stieltjes.len() {
            return Err(Error::usage(format!(
                "constant cache holds {} Stieltjes constants, order {order} needs {order}",
                self.stieltjes.len()
            )));
        }
        let d = self.digits;
        Ok(PowerSeries::from_fn(order, |k| {
            if k == 0 {
                BigReal::one(d)
            } else {
                let n = k - 1;
                let g = &self.stieltjes[n] / &BigReal::from_integer(&factorial(n as u64), d);
                if n % 2 == 1 {
                    -g
                } else {
                    g
                }
            }
        }))
    }
}

fn stieltjes_from_tiny(tiny: &PowerSeries, max_index: usize) -> Vec<BigReal> {
    (0..=max_index)
        .map(|n| {
            let g = tiny.coeff(n + 1).mul_integer(&factorial(n as u64));
            if n % 2 == 1 {
                -g
            } else {
                g
            }
        })
        .collect()
}

/// `12 log A = gamma + log(2 pi) - zeta'(2)/zeta(2)`.
fn glaisher_log(gamma: &BigReal, zeta2: &BigReal, zeta_prime_2: &BigReal) -> Result<BigReal> {
    let d = gamma.digits();
    let log_two_pi = BigReal::pi(d).mul_i64(2).ln()?;
    Ok((gamma + &log_two_pi - zeta_prime_2 / zeta2).div_i64(12))
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

/// Decimal digits lost when scaling by `n!`.
fn log10_factorial(n: usize) -> u32 {
    (1..=n).map(|k| (k as f64).log10()).sum::<f64>().ceil() as u32
}

/// Stieltjes constants `gamma_0 ..= gamma_m` from the Euler–Maclaurin
/// expansion of `(s - 1) zeta(s)` about `s = 1`.
pub fn stieltjes_constants(m: usize, digits: u32) -> Result<Vec<BigReal>> {
    require_digits("stieltjes_constants", digits)?;
    if m > MAX_STIELTJES {
        return Err(Error::usage(format!(
            "stieltjes_constants supports indices up to {MAX_STIELTJES}, got {m}"
        )));
    }
    let internal = digits + log10_factorial(m) + 10;
    let bern = bernoulli_even(zeta::bernoulli_budget(internal));
    let tiny = zeta::shifted_zeta_series(1, m + 1, internal, &bern)?;
    Ok(stieltjes_from_tiny(&tiny, m).iter().map(|g| g.with_digits(digits)).collect())
}

/// Order and precision the constant cache needs for an xi expansion of
/// order `order` reported at `digits`.
///
/// The coefficients `a_n` fall off roughly like `10^{-1.6 n}`, so the
/// absolute precision must exceed the nominal one by about two digits per
/// order for the top coefficients to keep full relative accuracy.
pub fn internal_plan(order: usize, digits: u32) -> (usize, u32) {
    let internal_order = order + ORDER_GUARD;
    let internal_digits = digits + 2 * internal_order as u32 + 20;
    (internal_order, internal_digits)
}

/// Taylor coefficients `a_0 ..= a_N` of `xi(s)` about `s = 1`.
#[derive(Clone, Debug)]
pub struct XiTaylor {
    pub coeffs: Vec<BigReal>,
    pub order: usize,
    pub digits: u32,
}

impl XiTaylor {
    pub fn coeff(&self, n: usize) -> &BigReal {
        &self.coeffs[n]
    }

    pub fn as_series(&self) -> PowerSeries {
        PowerSeries::new(self.coeffs.clone()).expect("non-empty")
    }

    /// `xi(1 + x)` from the truncated series.
    pub fn eval(&self, x: &BigReal) -> BigReal {
        self.as_series().eval(x)
    }

    /// `xi'(1 + x)` from the truncated series.
    pub fn eval_derivative(&self, x: &BigReal) -> BigReal {
        self.as_series().derivative().eval(x)
    }
}

/// The archimedean factor `(1/2) s pi^{-s/2} Gamma(s/2)` and the zeta factor
/// `(s - 1) zeta(s)` about `s = 1`, at the cache's order and precision.
fn factor_series(cache: &ConstantCache, order: usize) -> Result<(PowerSeries, PowerSeries)> {
    let d = cache.digits;
    let pi = BigReal::pi(d);
    let log_pi = pi.ln()?;
    let half = BigReal::from_ratio(1, 2, d);

    let linear = PowerSeries::from_fn(order, |k| match k {
        0 | 1 => half.clone(),
        _ => BigReal::zero(d),
    });

    let inv_sqrt_pi = pi.sqrt()?.recip();
    let half_log_pi = log_pi.div_i64(2);
    let mut term = inv_sqrt_pi.clone();
    let mut power_of_pi = Vec::with_capacity(order + 1);
    for m in 0..=order {
        power_of_pi.push(term.clone());
        term = (-(&term * &half_log_pi)).div_i64(m as i64 + 1);
    }
    let power_of_pi = PowerSeries::new(power_of_pi)?;

    // log Gamma(1/2 + x/2) without its constant (1/2) log pi.
    let ln2 = BigReal::ln2(d);
    let mut log_gamma = PowerSeries::zeros(order, d);
    if order >= 1 {
        log_gamma.set_coeff(1, -(cache.euler_gamma() + &ln2.mul_i64(2)).div_i64(2));
    }
    for k in 2..=order {
        let zk = cache.zeta(k).ok_or_else(|| {
            Error::usage(format!("constant cache lacks zeta({k}) for order {order}"))
        })?;
        let two_k = rug::Integer::from(1) << k as u32;
        let weight = Rational::from((two_k.clone() - 1u32, two_k * k as u32));
        let c = zk.mul_rational(&weight);
        log_gamma.set_coeff(k, if k % 2 == 0 { c } else { -c });
    }
    let gamma_factor = log_gamma.exp()?.scale(&pi.sqrt()?);

    let trend = linear.mul(&power_of_pi)?.mul(&gamma_factor)?;
    let tiny = cache.tiny_series(order)?;
    Ok((trend, tiny))
}

fn round_series(s: &PowerSeries, order: usize, digits: u32) -> PowerSeries {
    PowerSeries::from_fn(order, |k| s.coeff(k).with_digits(digits))
}

fn check_cache(cache: &ConstantCache, order: usize, digits: u32) -> Result<usize> {
    let (internal_order, internal_digits) = internal_plan(order, digits);
    if cache.digits < internal_digits || cache.order() < internal_order {
        return Err(Error::usage(format!(
            "constant cache (order {}, {} digits) too small for order {order} at {digits} digits",
            cache.order(),
            cache.digits
        )));
    }
    Ok(internal_order)
}

/// xi Taylor coefficients to `order` from a precomputed constant cache.
pub fn xi_taylor_with(cache: &ConstantCache, order: usize, digits: u32) -> Result<XiTaylor> {
    if order < 1 {
        return Err(Error::usage("xi_taylor needs order >= 1"));
    }
    let internal_order = check_cache(cache, order, digits)?;
    let (trend, tiny) = factor_series(cache, internal_order)?;
    let xi = trend.mul(&tiny)?;
    Ok(XiTaylor {
        coeffs: round_series(&xi, order, digits).into_coeffs(),
        order,
        digits,
    })
}

/// Computes the constants and the xi Taylor coefficients `a_0 ..= a_order`.
pub fn xi_taylor(order: usize, digits: u32) -> Result<XiTaylor> {
    let (internal_order, internal_digits) = internal_plan(order.max(1), digits);
    let cache = ConstantCache::compute(internal_order, internal_digits)?;
    xi_taylor_with(&cache, order, digits)
}

/// `(trend, tiny)` factor series about `s = 1`; `xi = trend * tiny`.
pub fn trend_tiny_factors_with(
    cache: &ConstantCache,
    order: usize,
    digits: u32,
) -> Result<(PowerSeries, PowerSeries)> {
    if order < 1 {
        return Err(Error::usage("trend_tiny_factors needs order >= 1"));
    }
    let internal_order = check_cache(cache, order, digits)?;
    let (trend, tiny) = factor_series(cache, internal_order)?;
    Ok((round_series(&trend, order, digits), round_series(&tiny, order, digits)))
}

pub fn trend_tiny_factors(order: usize, digits: u32) -> Result<(PowerSeries, PowerSeries)> {
    let (internal_order, internal_digits) = internal_plan(order.max(1), digits);
    let cache = ConstantCache::compute(internal_order, internal_digits)?;
    trend_tiny_factors_with(&cache, order, digits)
}

/// `zeta'(2)`, `zeta'(-1)` and `log A`.
#[derive(Clone, Debug)]
pub struct ZetaPrimeValues {
    pub zeta_prime_2: BigReal,
    pub zeta_prime_minus_1: BigReal,
    pub log_a: BigReal,
}

impl ZetaPrimeValues {
    pub fn from_cache(cache: &ConstantCache, digits: u32) -> Self {
        let log_a = cache.log_a.with_digits(digits);
        let twelfth = BigReal::from_ratio(1, 12, cache.digits);
        ZetaPrimeValues {
            zeta_prime_2: cache.zeta_prime_2.with_digits(digits),
            zeta_prime_minus_1: (twelfth - &cache.log_a).with_digits(digits),
            log_a,
        }
    }
}

/// `zeta'(2)` by Euler–Maclaurin on `-sum log n / n^2`, then
/// `12 log A = gamma + log(2 pi) - zeta'(2)/zeta(2)` and
/// `zeta'(-1) = 1/12 - log A`.
pub fn zeta_prime_values(digits: u32) -> Result<ZetaPrimeValues> {
    require_digits("zeta_prime_values", digits)?;
    let cache = ConstantCache::compute(2, digits + 10)?;
    Ok(ZetaPrimeValues::from_cache(&cache, digits))
}
