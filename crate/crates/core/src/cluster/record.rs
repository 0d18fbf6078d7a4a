use super::bounds::{bounds, rwb_sequence};
use super::equilibrium::{delta_epsilon, equilibrium_residual};
use super::expansion::{lambda_sequence, phi_sequence};
use crate::error::{Error, Result};
use crate::mpseries::BigReal;
use crate::xifactory::XiTaylor;

/// Everything tabulated for one index `n`.
#[derive(Clone, Debug)]
pub struct LiRecord {
    pub n: usize,
    pub phi: BigReal,
    pub lambda: BigReal,
    pub upper: BigReal,
    pub lower: BigReal,
    pub rwb_lower: BigReal,
    /// Left minus right side of the n-th equilibrium equation.
    pub residual: BigReal,
    pub delta: BigReal,
    pub epsilon: BigReal,
}

/// Records for `n = 1..=max_n`. For `n = 1`, `delta = 2 a_1` and
/// `epsilon = 0`.
pub fn li_records(xi: &XiTaylor, max_n: usize) -> Result<Vec<LiRecord>> {
    if max_n == 0 || max_n > xi.order {
        return Err(Error::usage(format!(
            "records for 1..={max_n} need xi coefficients to order {max_n}, have {}",
            xi.order
        )));
    }
    let phis = phi_sequence(xi, max_n)?;
    let lambdas = lambda_sequence(&phis, max_n)?;
    let rwb = rwb_sequence(max_n, &lambdas[1])?;
    (1..=max_n)
        .map(|n| {
            let (lower, upper) = bounds(n, &phis)?;
            let residual = equilibrium_residual(n, xi, &phis)?.residual;
            let (delta, epsilon) = if n == 1 {
                (xi.coeff(1).mul_i64(2), BigReal::zero(xi.digits))
            } else {
                delta_epsilon(n, xi)?
            };
            Ok(LiRecord {
                n,
                phi: phis[n].clone(),
                lambda: lambdas[n].clone(),
                upper,
                lower,
                rwb_lower: rwb[n].clone(),
                residual,
                delta,
                epsilon,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xifactory::xi_taylor;

    #[test]
    fn record_invariants_through_forty() {
        let xi = xi_taylor(40, 60).unwrap();
        let records = li_records(&xi, 40).unwrap();
        let l1 = records[0].lambda.clone();
        assert_eq!(records[0].lower, records[0].upper);
        for r in &records {
            if r.n >= 2 {
                assert!(r.phi > l1.mul_i64(r.n as i64), "phi_{} above n lambda_1", r.n);
                assert!(r.epsilon.is_positive());
            }
            if r.n == 2 {
                // The two-cluster truncation is exact at n = 2.
                let gap = (&r.lambda - &r.lower).abs();
                assert!(gap < BigReal::pow10(-55, 60) && r.lambda < r.upper);
            }
            if (3..=15).contains(&r.n) {
                assert!(r.lower < r.lambda && r.lambda < r.upper, "sandwich at {}", r.n);
            }
            if (2..=15).contains(&r.n) {
                assert!(r.rwb_lower <= r.lambda, "background at {}", r.n);
            }
        }
        for w in records[1..].windows(2) {
            assert!(w[0].epsilon < w[1].epsilon);
        }
    }

    #[test]
    fn order_shortfall() {
        let xi = xi_taylor(5, 40).unwrap();
        assert!(matches!(li_records(&xi, 6), Err(Error::Usage(_))));
    }
}
