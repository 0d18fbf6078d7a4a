use crate::error::{Error, Result};
use crate::mpseries::{binomial, BigReal};
use crate::xifactory::XiTaylor;

/// Both sides of `sum_{k<n} (-1)^k C(n-1, k) phi_{n-k} = 2 a_n`.
#[derive(Clone, Debug)]
pub struct EquilibriumSides {
    pub lhs: BigReal,
    pub rhs: BigReal,
    pub residual: BigReal,
}

/// Alternating binomial sum `sum_{k<n} (-1)^k C(n-1, k) phi_{n-k}`.
pub fn equilibrium_lhs(n: usize, phis: &[BigReal]) -> Result<BigReal> {
    if n == 0 || phis.len() <= n {
        return Err(Error::usage(format!("equilibrium sum for n={n} needs phi_1..phi_{n}")));
    }
    let mut acc = BigReal::zero(phis[n].digits());
    for k in 0..n {
        let t = phis[n - k].mul_integer(&binomial(n as u64 - 1, k as u64)?);
        if k % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    Ok(acc)
}

pub fn equilibrium_residual(n: usize, xi: &XiTaylor, phis: &[BigReal]) -> Result<EquilibriumSides> {
    if n > xi.order {
        return Err(Error::usage(format!(
            "equilibrium equation {n} needs xi coefficients to order {n}, have {}",
            xi.order
        )));
    }
    let lhs = equilibrium_lhs(n, phis)?;
    let rhs = xi.coeff(n).mul_i64(2);
    let residual = &lhs - &rhs;
    Ok(EquilibriumSides { lhs, rhs, residual })
}

/// `delta_n` and `epsilon_n = phi_n - n lambda_1 = sum_{k=1}^{n-1} C(n-1, k) delta_{k+1}`,
/// with `delta_2 = 2 a_2 - phi_1` and `delta_n = 2 a_n` otherwise.
pub fn delta_epsilon(n: usize, xi: &XiTaylor) -> Result<(BigReal, BigReal)> {
    if n < 2 {
        return Err(Error::usage(format!("delta_epsilon needs n >= 2, got {n}")));
    }
    if n > xi.order {
        return Err(Error::usage(format!(
            "delta_{n} needs xi coefficients to order {n}, have {}",
            xi.order
        )));
    }
    let delta = |m: usize| {
        let two_a = xi.coeff(m).mul_i64(2);
        if m == 2 {
            two_a - xi.coeff(1).mul_i64(2)
        } else {
            two_a
        }
    };
    let mut epsilon = BigReal::zero(xi.digits);
    for k in 1..n {
        epsilon += delta(k + 1).mul_integer(&binomial(n as u64 - 1, k as u64)?);
    }
    Ok((delta(n), epsilon))
}
