use crate::error::{Error, Result};

use super::real::BigReal;

/// A formal power series `sum_{k=0}^{order} c_k z^k` truncated at an
/// inclusive order. Every operation works strictly inside the truncation.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<BigReal>,
}

impl PowerSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigReal>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::usage("a power series needs at least a constant term"));
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn zeros(order: usize, digits: u32) -> Self {
        PowerSeries { coeffs: vec![BigReal::zero(digits); order + 1] }
    }

    pub fn one(order: usize, digits: u32) -> Self {
        let mut s = Self::zeros(order, digits);
        s.coeffs[0] = BigReal::one(digits);
        s
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> BigReal) -> Self {
        PowerSeries { coeffs: (0..=order).map(&mut f).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigReal] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigReal> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigReal {
        &self.coeffs[k]
    }

    pub fn set_coeff(&mut self, k: usize, value: BigReal) {
        self.coeffs[k] = value;
    }

    /// Working precision: the smallest coefficient precision.
    pub fn digits(&self) -> u32 {
        self.coeffs.iter().map(BigReal::digits).min().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        PowerSeries { coeffs: self.coeffs[..=keep].to_vec() }
    }

    /// Pads with zeros or truncates to exactly `order`.
    pub fn resize(&self, order: usize) -> Self {
        let digits = self.digits();
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigReal::zero(digits));
        coeffs.truncate(order + 1);
        PowerSeries { coeffs }
    }

    pub fn scale(&self, factor: &BigReal) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    fn check_orders(&self, other: &PowerSeries, op: &str) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::usage(format!(
                "{op}: truncation orders differ ({} vs {})",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &PowerSeries) -> Result<Self> {
        self.check_orders(other, "series_add")?;
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<Self> {
        self.check_orders(other, "series_sub")?;
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &PowerSeries) -> Result<Self> {
        self.check_orders(other, "series_mul")?;
        let order = self.order();
        let coeffs = (0..=order)
            .map(|n| (0..=n).map(|i| &self.coeffs[i] * &other.coeffs[n - i]).sum())
            .collect();
        Ok(PowerSeries { coeffs })
    }

    /// Multiplies by the linear polynomial `c0 + c1 z`.
    pub fn mul_linear(&self, c0: &BigReal, c1: &BigReal) -> Self {
        let coeffs = (0..=self.order())
            .map(|n| {
                let head = &self.coeffs[n] * c0;
                if n == 0 {
                    head
                } else {
                    head + &self.coeffs[n - 1] * c1
                }
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// Divides by `c0 + c1 z` (requires `c0 != 0`).
    pub fn div_linear(&self, c0: &BigReal, c1: &BigReal) -> Result<Self> {
        if c0.is_zero() {
            return Err(Error::domain("division by a linear factor vanishing at z = 0"));
        }
        let mut out: Vec<BigReal> = Vec::with_capacity(self.coeffs.len());
        for n in 0..=self.order() {
            let mut num = self.coeffs[n].clone();
            if n > 0 {
                num -= &out[n - 1] * c1;
            }
            out.push(num / c0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `exp(self)` via the recurrence `n e_n = sum_{k=1}^n k a_k e_{n-k}`,
    /// which follows from `(exp a)' = a' exp a`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain("series_exp needs a vanishing constant term"));
        }
        let digits = self.digits();
        let order = self.order();
        let mut out: Vec<BigReal> = Vec::with_capacity(order + 1);
        out.push(BigReal::one(digits));
        for n in 1..=order {
            let acc: BigReal = (1..=n)
                .map(|k| self.coeffs[k].mul_i64(k as i64) * &out[n - k])
                .sum();
            out.push(acc.div_i64(n as i64));
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `log(self)` for a series with constant term exactly one, via
    /// `n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        let digits = self.digits();
        if self.coeffs[0] != BigReal::one(digits) {
            return Err(Error::domain("series_log needs constant term 1"));
        }
        let order = self.order();
        let mut out: Vec<BigReal> = Vec::with_capacity(order + 1);
        out.push(BigReal::zero(digits));
        for n in 1..=order {
            let mut acc = self.coeffs[n].mul_i64(n as i64);
            for k in 1..n {
                acc -= out[k].mul_i64(k as i64) * &self.coeffs[n - k];
            }
            out.push(acc.div_i64(n as i64));
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, x: &BigReal) -> BigReal {
        let mut acc = self.coeffs[self.order()].clone();
        for c in self.coeffs[..self.order()].iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative; the order drops by one (an order-0 series gives 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zeros(0, self.digits());
        }
        PowerSeries {
            coeffs: (1..=self.order()).map(|k| self.coeffs[k].mul_i64(k as i64)).collect(),
        }
    }
}

pub fn series_mul(a: &PowerSeries, b: &PowerSeries) -> Result<PowerSeries> {
    a.mul(b)
}

pub fn series_exp(a: &PowerSeries) -> Result<PowerSeries> {
    a.exp()
}

pub fn series_log(a: &PowerSeries) -> Result<PowerSeries> {
    a.log()
}
