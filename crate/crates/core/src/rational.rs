//! Overflow-checked rationals over 64-bit integers.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A reduced fraction `num / den` with `den > 0`.
///
/// Every arithmetic operation is checked: intermediate products are formed
/// in 128 bits, reduced, and rejected with [`Error::Overflow`] if either
/// component no longer fits in 64 bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_i128(num as i128, den as i128)
    }

    pub fn int(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    fn from_i128(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = gcd128(num, den).max(1);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Rational {
            num: i64::try_from(num).map_err(|_| Error::Overflow)?,
            den: i64::try_from(den).map_err(|_| Error::Overflow)?,
        })
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn signum(&self) -> i32 {
        self.num.signum() as i32
    }

    pub fn add(&self, rhs: &Rational) -> Result<Rational> {
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (rhs.num as i128, rhs.den as i128);
        Self::from_i128(a * d + c * b, b * d)
    }

    pub fn sub(&self, rhs: &Rational) -> Result<Rational> {
        self.add(&rhs.neg()?)
    }

    pub fn mul(&self, rhs: &Rational) -> Result<Rational> {
        Self::from_i128(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    pub fn neg(&self) -> Result<Rational> {
        Ok(Rational {
            num: self.num.checked_neg().ok_or(Error::Overflow)?,
            den: self.den,
        })
    }

    pub fn recip(&self) -> Result<Rational> {
        Self::from_i128(self.den as i128, self.num as i128)
    }

    pub fn div(&self, rhs: &Rational) -> Result<Rational> {
        self.mul(&rhs.recip()?)
    }

    pub fn abs(&self) -> Result<Rational> {
        if self.num < 0 {
            self.neg()
        } else {
            Ok(*self)
        }
    }

    /// The non-negative rational square root, if one exists.
    pub fn sqrt(&self) -> Option<Rational> {
        if self.num < 0 {
            return None;
        }
        let n = isqrt_exact(self.num as u64)?;
        let d = isqrt_exact(self.den as u64)?;
        Some(Rational {
            num: n as i64,
            den: d as i64,
        })
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn isqrt_exact(n: u64) -> Option<u64> {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= n) {
        r += 1;
    }
    (r * r == n).then_some(r)
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
