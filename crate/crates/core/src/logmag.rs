//! Signed magnitudes stored as base-2 logarithms.
//!
//! Counterexample quantities such as `M_{2α}^{1/p-1}` overflow `f64` long
//! before they become interesting. A [`LogMagnitude`] keeps a sign and
//! `log2 |v|`; products add logs and sums use a log-sum-exp step whose
//! relative error is a few ulps of the larger operand.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::harmonic::log2_big;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogMagnitude {
    sign: i8,
    log2: f64,
}

impl LogMagnitude {
    pub const ZERO: LogMagnitude = LogMagnitude { sign: 0, log2: f64::NEG_INFINITY };
    pub const ONE: LogMagnitude = LogMagnitude { sign: 1, log2: 0.0 };

    /// Positive value `2^log2`.
    pub fn from_log2(log2: f64) -> Self {
        assert!(!log2.is_nan(), "NaN log-magnitude");
        if log2 == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        LogMagnitude { sign: 1, log2 }
    }

    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "non-finite value {v}");
        if v == 0.0 {
            return Self::ZERO;
        }
        LogMagnitude { sign: if v > 0.0 { 1 } else { -1 }, log2: v.abs().log2() }
    }

    pub fn from_big(n: &BigUint) -> Self {
        if n.is_zero() {
            Self::ZERO
        } else {
            LogMagnitude { sign: 1, log2: log2_big(n) }
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn log2(&self) -> f64 {
        self.log2
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }

    pub fn abs(self) -> Self {
        if self.is_zero() {
            self
        } else {
            LogMagnitude { sign: 1, ..self }
        }
    }

    /// `|v|^p` for real `p > 0`.
    pub fn powf(self, p: f64) -> Self {
        assert!(p > 0.0, "powf needs p > 0");
        if self.is_zero() {
            return self;
        }
        LogMagnitude { sign: 1, log2: self.log2 * p }
    }

    pub fn sqrt(self) -> Self {
        assert!(self.sign >= 0, "sqrt of negative log-magnitude");
        self.powf(0.5)
    }

    pub fn recip(self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        LogMagnitude { sign: self.sign, log2: -self.log2 }
    }

    /// Plain `f64`; `±inf` when out of range.
    pub fn to_f64(self) -> f64 {
        f64::from(self.sign) * self.log2.exp2()
    }

    /// Finite `f64` or `None` on overflow.
    pub fn to_f64_checked(self) -> Option<f64> {
        let v = self.to_f64();
        v.is_finite().then_some(v)
    }

    /// Scientific notation with 12 fractional mantissa digits, valid at
    /// any magnitude.
    pub fn to_sci_string(self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let log10 = self.log2 * std::f64::consts::LOG10_2;
        let mut exp = log10.floor();
        let mut mant = 10f64.powf(log10 - exp);
        if format!("{mant:.12}").starts_with("10") {
            mant /= 10.0;
            exp += 1.0;
        }
        let sign = if self.sign < 0 { "-" } else { "" };
        format!("{sign}{mant:.12}e{}", exp as i64)
    }
}

impl fmt::Display for LogMagnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sci_string())
    }
}

impl From<f64> for LogMagnitude {
    fn from(v: f64) -> Self {
        LogMagnitude::from_f64(v)
    }
}

impl Neg for LogMagnitude {
    type Output = LogMagnitude;

    fn neg(self) -> Self {
        LogMagnitude { sign: -self.sign, ..self }
    }
}

impl Mul for LogMagnitude {
    type Output = LogMagnitude;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::ZERO;
        }
        LogMagnitude { sign: self.sign * rhs.sign, log2: self.log2 + rhs.log2 }
    }
}

impl Div for LogMagnitude {
    type Output = LogMagnitude;

    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl Add for LogMagnitude {
    type Output = LogMagnitude;

    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.log2 >= rhs.log2 { (self, rhs) } else { (rhs, self) };
        let t = (small.log2 - big.log2).exp2();
        if big.sign == small.sign {
            LogMagnitude { sign: big.sign, log2: big.log2 + t.ln_1p() / std::f64::consts::LN_2 }
        } else if t >= 1.0 {
            Self::ZERO
        } else {
            LogMagnitude { sign: big.sign, log2: big.log2 + (-t).ln_1p() / std::f64::consts::LN_2 }
        }
    }
}

impl Sub for LogMagnitude {
    type Output = LogMagnitude;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl PartialOrd for LogMagnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let key = |v: &Self| match v.sign {
            0 => (0i8, 0.0),
            s => (s, f64::from(s) * v.log2),
        };
        let (sa, la) = key(self);
        let (sb, lb) = key(other);
        match sa.cmp(&sb) {
            Ordering::Equal if sa == 0 => Some(Ordering::Equal),
            Ordering::Equal => la.partial_cmp(&lb),
            o => Some(o),
        }
    }
}

impl std::iter::Sum for LogMagnitude {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |a, b| a + b)
    }
}
