//! Euler–Maclaurin expansion of `(s - 1) zeta(s)` about an integer point.

use rug::Rational;

use crate::error::{Error, Result};
use crate::mpseries::{factorial, BigReal, PowerSeries};

/// Number of directly summed terms for an expansion about `s0` to `order`
/// at `digits` of precision.
pub(crate) fn direct_terms(digits: u32, s0: u32, order: usize) -> u64 {
    u64::from(digits) + order as u64 + 2 * u64::from(s0) + 20
}

/// How many even Bernoulli numbers an expansion at `digits` may consume.
pub(crate) fn bernoulli_budget(digits: u32) -> usize {
    digits as usize / 2 + 20
}

/// Taylor coefficients in `x = s - s0` of `(s - 1) zeta(s)`, `s0 >= 1`.
///
/// With `N` directly summed terms,
///
/// ```text
/// (s-1) zeta(s) = (s-1) sum_{j<N} j^{-s} + N^{1-s}
///               + (s-1) [ N^{-s}/2 + sum_k B_2k/(2k)! (s)_{2k-1} N^{1-s-2k} ]
/// ```
///
/// where every `j^{-s} = j^{-s0} exp(-x log j)` is expanded as a series in
/// `x`. Bernoulli terms are added until the next one falls below the
/// working precision.
pub(crate) fn shifted_zeta_series(
    s0: u32,
    order: usize,
    digits: u32,
    bernoulli: &[Rational],
) -> Result<PowerSeries> {
    if s0 == 0 {
        return Err(Error::usage("expansion point must be a positive integer"));
    }
    let n_terms = direct_terms(digits, s0, order);
    let s0_minus_1 = BigReal::from_i64(i64::from(s0) - 1, digits);
    let one = BigReal::one(digits);
    let neg_s0 = -(s0 as i32);

    // sum_{j<N} j^{-s0} exp(-x log j)
    let mut direct = PowerSeries::zeros(order, digits);
    for j in 1..n_terms {
        let jr = BigReal::from_i64(j as i64, digits);
        let mut term = jr.powi(neg_s0);
        let neg_log = if order > 0 { -jr.ln()? } else { BigReal::zero(digits) };
        for m in 0..=order {
            let acc = direct.coeff(m) + &term;
            direct.set_coeff(m, acc);
            if m < order {
                term = (term * &neg_log).div_i64(m as i64 + 1);
            }
        }
    }
    let direct = direct.mul_linear(&s0_minus_1, &one);

    let nr = BigReal::from_i64(n_terms as i64, digits);
    let log_n = nr.ln()?;

    // Q(x) = N^{-s0}/2 + sum_k B_2k/(2k)! (s0 + x)_{2k-1} N^{1-s0-2k}
    let mut inner = PowerSeries::zeros(order, digits);
    inner.set_coeff(0, nr.powi(neg_s0).div_i64(2));
    let threshold = BigReal::pow10(-(digits as i32) - 5, digits);
    let envelope = f64::from(s0) * n_terms as f64;
    // Rising factorial (s0 + x)(s0 + 1 + x)...(s0 + 2k - 2 + x), truncated.
    let mut rising = PowerSeries::zeros(order, digits);
    rising.set_coeff(0, BigReal::from_i64(i64::from(s0), digits));
    if order > 0 {
        rising.set_coeff(1, one.clone());
    }
    let mut converged = false;
    for k in 1..bernoulli.len() {
        if k > 1 {
            for shift in [2 * k as i64 - 3, 2 * k as i64 - 2] {
                let c0 = BigReal::from_i64(i64::from(s0) + shift, digits);
                rising = rising.mul_linear(&c0, &one);
            }
        }
        let two_k = 2 * k as u64;
        let weight = bernoulli[k].clone() / factorial(two_k);
        let scale = BigReal::from_rational(&weight, digits) * nr.powi(1 - s0 as i32 - two_k as i32);
        let term = rising.scale(&scale);
        let magnitude: BigReal = term.coeffs().iter().map(BigReal::abs).sum();
        inner = inner.add(&term)?;
        if magnitude.mul_i64(envelope.ceil() as i64) < threshold {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Precision {
            what: format!("Euler-Maclaurin tail about s = {s0} to order {order}"),
            required: digits,
            available: (2 * bernoulli.len()) as u32,
        });
    }

    let head = BigReal::from_i64(n_terms as i64, digits).powi(1 - s0 as i32);
    let mut tail = inner.mul_linear(&s0_minus_1, &one);
    tail.set_coeff(0, tail.coeff(0) + &head);
    let decay = PowerSeries::from_fn(order, |m| {
        let mut t = one.clone();
        for i in 1..=m {
            t = (t * &log_n).div_i64(-(i as i64));
        }
        t
    });
    direct.add(&tail.mul(&decay)?)
}

/// `zeta(k)` for an integer `k >= 2`.
pub(crate) fn zeta_at(k: u32, digits: u32, bernoulli: &[Rational]) -> Result<BigReal> {
    if k < 2 {
        return Err(Error::usage("zeta_at needs k >= 2"));
    }
    let f = shifted_zeta_series(k, 0, digits, bernoulli)?;
    Ok(f.coeff(0).div_i64(i64::from(k) - 1))
}

#[cfg(test)]
/// `zeta(2k) = (-1)^{k+1} B_2k (2 pi)^{2k} / (2 (2k)!)`.
pub(crate) fn zeta_even_closed_form(two_k: u32, digits: u32, bernoulli: &[Rational]) -> BigReal {
    let k = (two_k / 2) as usize;
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let two_pi = BigReal::pi(digits).mul_i64(2);
    let coeff = bernoulli[k].clone() * sign / (rug::Integer::from(2) * factorial(u64::from(two_k)));
    two_pi.powi(two_k as i32).mul_rational(&coeff)
}
