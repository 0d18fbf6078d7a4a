use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

/// Smallest working precision a [`BigReal`] may carry.
pub const MIN_DIGITS: u32 = 20;

/// Extra binary digits carried beneath the nominal decimal precision.
pub const GUARD_BITS: u32 = 64;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Binary precision used for a nominal decimal precision.
pub fn bits_for_digits(digits: u32) -> u32 {
    (f64::from(digits.max(MIN_DIGITS)) * LOG2_10).ceil() as u32 + GUARD_BITS
}

/// An arbitrary-precision real that carries its working precision in
/// decimal digits.
///
/// Binary operations run at the smaller of the two operand precisions and
/// the result records that precision. MPFR rounding is correct to the last
/// bit, so identical inputs always render identically.
#[derive(Clone)]
pub struct BigReal {
    value: Float,
    digits: u32,
}

impl BigReal {
    fn wrap(value: Float, digits: u32) -> Self {
        BigReal { value, digits }
    }

    fn prec(digits: u32) -> u32 {
        bits_for_digits(digits)
    }

    pub fn zero(digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(Float::new(Self::prec(digits)), digits)
    }

    pub fn one(digits: u32) -> Self {
        Self::from_i64(1, digits)
    }

    pub fn from_i64(v: i64, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(Float::with_val(Self::prec(digits), v), digits)
    }

    pub fn from_u128(v: u128, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(Float::with_val(Self::prec(digits), v), digits)
    }

    /// `num / den` rounded once.
    pub fn from_ratio(num: i64, den: i64, digits: u32) -> Self {
        Self::from_rational(&Rational::from((num, den)), digits)
    }

    pub fn from_integer(v: &Integer, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(Float::with_val(Self::prec(digits), v), digits)
    }

    pub fn from_rational(v: &Rational, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(Float::with_val(Self::prec(digits), v), digits)
    }

    /// Lossy conversion, for tolerances and printed constants only.
    /// Wraps an MPFR value, rounding it to the precision of `digits`.
    pub fn from_float(v: &Float, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(Float::with_val(Self::prec(digits), v), digits)
    }

    pub fn from_f64(v: f64, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(Float::with_val(Self::prec(digits), v), digits)
    }

    /// Parses a decimal literal such as `0.0230957089` or `-2.84528115941e-7`.
    pub fn parse(text: &str, digits: u32) -> Result<Self> {
        let digits = digits.max(MIN_DIGITS);
        let parsed = Float::parse(text.trim())
            .map_err(|e| Error::usage(format!("cannot parse {text:?} as a real: {e}")))?;
        Ok(Self::wrap(Float::with_val(Self::prec(digits), parsed), digits))
    }

    /// `10^exp`.
    pub fn pow10(exp: i32, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        let ten = Float::with_val(Self::prec(digits), 10);
        Self::wrap(ten.pow(exp), digits)
    }

    pub fn pi(digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(Float::with_val(Self::prec(digits), Constant::Pi), digits)
    }

    pub fn ln2(digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(Float::with_val(Self::prec(digits), Constant::Log2), digits)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn as_float(&self) -> &Float {
        &self.value
    }

    /// Re-rounds to another nominal precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        let digits = digits.max(MIN_DIGITS);
        Self::wrap(Float::with_val(Self::prec(digits), &self.value), digits)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.value.cmp0() == Some(Ordering::Greater)
    }

    pub fn is_negative(&self) -> bool {
        self.value.cmp0() == Some(Ordering::Less)
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.clone().abs(), self.digits)
    }

    pub fn ln(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::domain("logarithm of a non-positive real"));
        }
        Ok(Self::wrap(self.value.clone().ln(), self.digits))
    }

    pub fn exp(&self) -> Self {
        Self::wrap(self.value.clone().exp(), self.digits)
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::domain("square root of a negative real"));
        }
        Ok(Self::wrap(self.value.clone().sqrt(), self.digits))
    }

    pub fn powi(&self, exp: i32) -> Self {
        Self::wrap(self.value.clone().pow(exp), self.digits)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.value.clone().recip(), self.digits)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Self::wrap(Float::with_val(self.value.prec(), &self.value * k), self.digits)
    }

    pub fn div_i64(&self, k: i64) -> Self {
        Self::wrap(Float::with_val(self.value.prec(), &self.value / k), self.digits)
    }

    pub fn mul_integer(&self, k: &Integer) -> Self {
        Self::wrap(Float::with_val(self.value.prec(), &self.value * k), self.digits)
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        Self::wrap(Float::with_val(self.value.prec(), &self.value * q), self.digits)
    }

    /// Number of leading decimal digits on which `self` and `other` agree,
    /// capped at the smaller working precision.
    pub fn agreeing_digits(&self, other: &BigReal) -> u32 {
        let cap = self.digits.min(other.digits);
        let diff = (self - other).abs();
        if diff.is_zero() {
            return cap;
        }
        let scale = if self.abs() > other.abs() { self.abs() } else { other.abs() };
        if scale.is_zero() {
            return 0;
        }
        let rel = Float::with_val(64, diff.value.log10_ref()) - Float::with_val(64, scale.value.log10_ref());
        let d = -rel.to_f64();
        if d <= 0.0 {
            0
        } else {
            (d.floor() as u32).min(cap)
        }
    }

    /// Decimal mantissa and exponent rounded to `sig` significant digits,
    /// meaning `value = ±0.DIGITS × 10^exp`.
    fn decimal_parts(&self, sig: usize) -> (bool, String, i32) {
        let (neg, digits, exp) = self
            .value
            .to_sign_string_exp_round(10, Some(sig), Round::Nearest);
        (neg, digits, exp.unwrap_or(0))
    }

    /// Renders with exactly `sig` significant digits, locale independent.
    ///
    /// Plain positional notation is used for moderate magnitudes and
    /// `d.ddde±x` scientific notation otherwise.
    pub fn to_sig_string(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.value.is_zero() {
            return if sig == 1 { "0".into() } else { format!("0.{}", "0".repeat(sig - 1)) };
        }
        let (neg, mantissa, exp) = self.decimal_parts(sig);
        let sign = if neg { "-" } else { "" };
        let body = if exp > -6 && exp <= 0 {
            format!("0.{}{}", "0".repeat((-exp) as usize), mantissa)
        } else if exp > 0 && (exp as usize) < mantissa.len() {
            let (int, frac) = mantissa.split_at(exp as usize);
            format!("{int}.{frac}")
        } else if exp > 0 && exp as usize == mantissa.len() {
            mantissa
        } else {
            let (lead, rest) = mantissa.split_at(1);
            let e = exp - 1;
            if rest.is_empty() {
                format!("{lead}e{e}")
            } else {
                format!("{lead}.{rest}e{e}")
            }
        };
        format!("{sign}{body}")
    }

    /// Scientific rendering carrying every stored digit plus a few spares;
    /// parsing it back at the same precision restores the value.
    pub fn to_exact_string(&self) -> String {
        let (neg, mantissa, exp) = self.decimal_parts(self.digits as usize + 25);
        if self.value.is_zero() {
            return "0".into();
        }
        let (lead, rest) = mantissa.split_at(1);
        format!("{}{}.{}e{}", if neg { "-" } else { "" }, lead, rest, exp - 1)
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({}, {} digits)", self.to_sig_string(self.digits as usize), self.digits)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(self.digits as usize);
        f.write_str(&self.to_sig_string(sig))
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign:ident) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let digits = self.digits.min(rhs.digits);
                BigReal::wrap(
                    Float::with_val(BigReal::prec(digits), (&self.value).$method(&rhs.value)),
                    digits,
                )
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }
        impl $assign_trait<&BigReal> for BigReal {
            fn $assign(&mut self, rhs: &BigReal) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_trait<BigReal> for BigReal {
            fn $assign(&mut self, rhs: BigReal) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

impl Div<&BigReal> for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        let digits = self.digits.min(rhs.digits);
        BigReal::wrap(Float::with_val(BigReal::prec(digits), &self.value / &rhs.value), digits)
    }
}

impl Div<BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: BigReal) -> BigReal {
        &self / &rhs
    }
}

impl Div<&BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        &self / rhs
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap(-self.value, self.digits)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap(-self.value.clone(), self.digits)
    }
}

impl std::iter::Sum for BigReal {
    fn sum<I: Iterator<Item = BigReal>>(iter: I) -> BigReal {
        let mut acc: Option<BigReal> = None;
        for x in iter {
            acc = Some(match acc {
                None => x,
                Some(a) => a + x,
            });
        }
        acc.unwrap_or_else(|| BigReal::zero(MIN_DIGITS))
    }
}
