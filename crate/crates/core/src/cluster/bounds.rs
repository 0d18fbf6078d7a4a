use rug::Integer;

use crate::error::{Error, Result};
use crate::mpseries::{binomial, BigReal, PowerSeries};

/// Largest `n` served by [`bell_phi`].
pub const MAX_BELL: usize = 12;

/// One- and two-cluster truncations of `lambda_n`:
/// `upper = n phi_n` and
/// `lower = upper - n sum_{p <= n/2} w_p phi_p phi_{n-p}` with `w_p = 1/2`
/// for the middle term of even `n` and `1` otherwise.
pub fn bounds(n: usize, phis: &[BigReal]) -> Result<(BigReal, BigReal)> {
    if n == 0 || phis.len() <= n {
        return Err(Error::usage(format!("bounds for n={n} need phi_1..phi_{n}")));
    }
    let upper = phis[n].mul_i64(n as i64);
    let mut pairs = BigReal::zero(phis[n].digits());
    for p in 1..=n / 2 {
        let prod = &phis[p] * &phis[n - p];
        pairs += if 2 * p == n { prod.div_i64(2) } else { prod };
    }
    let lower = &upper - &pairs.mul_i64(n as i64);
    Ok((lower, upper))
}

fn koebe_log(order: usize, lambda1: &BigReal) -> Result<PowerSeries> {
    let d = lambda1.digits();
    PowerSeries::from_fn(order, |k| {
        if k == 0 {
            BigReal::one(d)
        } else {
            lambda1.mul_i64(k as i64)
        }
    })
    .log()
}

/// `n [z^n] log(1 + lambda_1 K(z))` with the Koebe function `K(z) = z/(1-z)^2`.
pub fn rwb_lower(n: usize, lambda1: &BigReal) -> Result<BigReal> {
    if n == 0 {
        return Err(Error::usage("rwb_lower needs n >= 1"));
    }
    Ok(koebe_log(n, lambda1)?.coeff(n).mul_i64(n as i64))
}

/// `[0, rwb_1, ..., rwb_max_n]`.
pub fn rwb_sequence(max_n: usize, lambda1: &BigReal) -> Result<Vec<BigReal>> {
    let log = koebe_log(max_n, lambda1)?;
    Ok((0..=max_n).map(|n| log.coeff(n).mul_i64(n as i64)).collect())
}

/// `phi_n = B_n(x_1, ..., x_n) / n!` with `x_j = (j-1)! lambda_j`, the
/// complete Bell polynomial evaluated as the determinant of the upper
/// Hessenberg matrix `M_ij = C(n-i, j-i) x_{j-i+1}` (`j >= i`) with `-1`
/// on the subdiagonal.
pub fn bell_phi(n: usize, lambdas: &[BigReal]) -> Result<BigReal> {
    if n == 0 || n > MAX_BELL {
        return Err(Error::usage(format!("bell_phi supports 1 <= n <= {MAX_BELL}, got {n}")));
    }
    if lambdas.len() <= n {
        return Err(Error::usage(format!("bell_phi for n={n} needs lambda_1..lambda_{n}")));
    }
    let d = lambdas[1..=n].iter().map(BigReal::digits).min().unwrap_or(lambdas[1].digits());
    let mut x = vec![BigReal::zero(d)];
    let mut fact = Integer::from(1);
    for j in 1..=n {
        if j > 1 {
            fact *= j - 1;
        }
        x.push(lambdas[j].mul_integer(&fact));
    }
    let entry = |i: usize, j: usize| -> Result<BigReal> {
        Ok(x[j - i + 1].mul_integer(&binomial((n - i) as u64, (j - i) as u64)?))
    };
    // Leading principal minors f_k of a Hessenberg matrix with subdiagonal
    // -1 satisfy f_k = sum_{i<=k} M_{i,k} f_{i-1}.
    let mut minors = vec![BigReal::one(d)];
    for k in 1..=n {
        let mut acc = BigReal::zero(d);
        for i in 1..=k {
            acc += entry(i, k)? * &minors[i - 1];
        }
        minors.push(acc);
    }
    let mut n_fact = Integer::from(1);
    for j in 2..=n {
        n_fact *= j;
    }
    Ok(&minors[n] / &BigReal::from_integer(&n_fact, d))
}
