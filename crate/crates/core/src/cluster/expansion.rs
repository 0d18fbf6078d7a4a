//! Conversions between the `phi_n` (coefficients of `2 xi` in
//! `z = 1 - 1/s`) and the Li-Keiper coefficients `lambda_n`, where
//! `sum phi_n z^n = exp(sum lambda_n z^n / n)`.
//!
//! Sequences are indexed by `n`: `phis[n] = phi_n` with `phis[0] = 1`, and
//! `lambdas[n] = lambda_n` with `lambdas[0]` unused.

use rug::{Integer, Rational};

use super::partition::{partitions, Partition};
use crate::error::{Error, Result};
use crate::mpseries::{binomial, factorial, BigReal, PowerSeries};
use crate::xifactory::XiTaylor;

/// Largest `n` for which [`lambda_by_partitions`] enumerates partitions.
pub const MAX_PARTITION_LAMBDA: usize = 40;

fn check_len(values: &[BigReal], n: usize, what: &str) -> Result<()> {
    if values.len() <= n {
        return Err(Error::usage(format!(
            "{what} needs entries 1..={n}, got {}",
            values.len().saturating_sub(1)
        )));
    }
    Ok(())
}

fn digits_of(values: &[BigReal], n: usize) -> u32 {
    values[1..=n].iter().map(BigReal::digits).min().unwrap_or(values[0].digits())
}

/// `phi_n = sum_{k<n} C(n-1, k) 2 a_{k+1}`.
pub fn phi_from_xi(xi: &XiTaylor, n: usize) -> Result<BigReal> {
    if n == 0 {
        return Err(Error::usage("phi_from_xi needs n >= 1"));
    }
    if xi.order < n {
        return Err(Error::usage(format!(
            "phi_{n} needs xi coefficients to order {n}, have order {}",
            xi.order
        )));
    }
    let mut acc = BigReal::zero(xi.digits);
    for k in 0..n {
        let c = binomial(n as u64 - 1, k as u64)?;
        acc += xi.coeff(k + 1).mul_integer(&c);
    }
    Ok(acc.mul_i64(2))
}

/// `[phi_0, phi_1, ..., phi_max_n]` with `phi_0 = 1`.
pub fn phi_sequence(xi: &XiTaylor, max_n: usize) -> Result<Vec<BigReal>> {
    let mut out = vec![BigReal::one(xi.digits)];
    for n in 1..=max_n {
        out.push(phi_from_xi(xi, n)?);
    }
    Ok(out)
}

/// `[phi_0, ..., phi_order]` from `exp(sum_n lambda_n z^n / n)`.
pub fn phi_from_lambda(lambdas: &[BigReal], order: usize) -> Result<Vec<BigReal>> {
    check_len(lambdas, order, "phi_from_lambda")?;
    if order == 0 {
        return Ok(vec![BigReal::one(lambdas[0].digits())]);
    }
    let d = digits_of(lambdas, order);
    let exponent = PowerSeries::from_fn(order, |n| {
        if n == 0 {
            BigReal::zero(d)
        } else {
            lambdas[n].div_i64(n as i64)
        }
    });
    Ok(exponent.exp()?.into_coeffs())
}

fn log_phi_series(phis: &[BigReal], n: usize) -> Result<PowerSeries> {
    check_len(phis, n, "lambda_from_phi")?;
    let d = digits_of(phis, n.max(1));
    PowerSeries::from_fn(n, |k| if k == 0 { BigReal::one(d) } else { phis[k].clone() }).log()
}

/// `lambda_n = n [z^n] log(1 + sum_k phi_k z^k)`.
pub fn lambda_from_phi(phis: &[BigReal], n: usize) -> Result<BigReal> {
    if n == 0 {
        return Err(Error::usage("lambda_from_phi needs n >= 1"));
    }
    Ok(log_phi_series(phis, n)?.coeff(n).mul_i64(n as i64))
}

/// `[0, lambda_1, ..., lambda_max_n]`.
pub fn lambda_sequence(phis: &[BigReal], max_n: usize) -> Result<Vec<BigReal>> {
    let log = log_phi_series(phis, max_n)?;
    Ok((0..=max_n).map(|n| log.coeff(n).mul_i64(n as i64)).collect())
}

/// Unsigned weight `n (k-1)! / prod_j m_j!` of a partition's product of
/// `phi`s in `lambda_n`; the signed contribution carries `(-1)^{k-1}`.
pub fn cluster_weight(p: &Partition) -> Result<Rational> {
    if !p.is_valid() {
        return Err(Error::usage(format!("invalid partition {:?}", p.parts)));
    }
    let mut denom = Integer::from(1);
    for &m in p.multiplicities.values() {
        denom *= factorial(u64::from(m));
    }
    let numer = factorial(u64::from(p.k) - 1) * Integer::from(p.n);
    Ok(Rational::from((numer, denom)))
}

/// Sum of [`cluster_weight`] over all partitions of `n` into exactly `k`
/// parts; equals `C(n, k)`.
pub fn weight_sum_check(n: u32, k: u32) -> Result<Integer> {
    if k == 0 || k > n {
        return Err(Error::usage(format!("weight_sum_check needs 1 <= k <= n, got n={n}, k={k}")));
    }
    let mut total = Rational::new();
    for p in partitions(n)?.iter().filter(|p| p.k == k) {
        total += cluster_weight(p)?;
    }
    let (numer, denom) = total.into_numer_denom();
    if denom != 1 {
        return Err(Error::domain(format!("weight sum for n={n}, k={k} is not an integer")));
    }
    Ok(numer)
}

/// `lambda_n` as the signed sum over all partitions of `n` of the weighted
/// products of `phi`s.
pub fn lambda_by_partitions(phis: &[BigReal], n: usize) -> Result<BigReal> {
    if n == 0 || n > MAX_PARTITION_LAMBDA {
        return Err(Error::usage(format!(
            "lambda_by_partitions supports 1 <= n <= {MAX_PARTITION_LAMBDA}, got {n}"
        )));
    }
    check_len(phis, n, "lambda_by_partitions")?;
    let d = digits_of(phis, n);
    let mut acc = BigReal::zero(d);
    for p in partitions(n as u32)? {
        let mut term = BigReal::from_rational(&cluster_weight(&p)?, d);
        for &part in &p.parts {
            term = term * &phis[part as usize];
        }
        if p.k % 2 == 0 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    Ok(acc)
}

/// The `m`-block contributions `n (-1)^{m-1} / m [z^n] (sum_k phi_k z^k)^m`
/// for `m = 1..=max_m`; they sum to `lambda_n` when `max_m >= n`.
pub fn cluster_terms(phis: &[BigReal], n: usize, max_m: usize) -> Result<Vec<BigReal>> {
    if n == 0 {
        return Err(Error::usage("cluster_terms needs n >= 1"));
    }
    check_len(phis, n, "cluster_terms")?;
    let d = digits_of(phis, n);
    let base = PowerSeries::from_fn(n, |k| if k == 0 { BigReal::zero(d) } else { phis[k].clone() });
    let mut power = PowerSeries::one(n, d);
    let mut out = Vec::with_capacity(max_m);
    for m in 1..=max_m.min(n) {
        power = power.mul(&base)?;
        let t = power.coeff(n).mul_i64(n as i64).div_i64(m as i64);
        out.push(if m % 2 == 0 { -t } else { t });
    }
    Ok(out)
}
