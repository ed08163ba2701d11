//! Field descriptors for exact real scalars.
//!
//! Two families are supported, both presented by a power basis of a single
//! real algebraic integer `g` with a monic integer minimal polynomial:
//!
//! * `Quadratic(d)`: `g = √d` for square-free `d`, minimal polynomial
//!   `x² − d`. `d = 1` is the field of rationals (degree 1).
//! * `RealCyclotomic(m)`: `g = 2cos(2π/m)`, the maximal real subfield of the
//!   `m`-th cyclotomic field. Needed for dihedral systems `I2(n)` whose
//!   coordinates leave every quadratic field (`n = 5, 7, 8, ...`).
//!
//! Descriptors are canonical: a cyclotomic field that happens to be quadratic
//! (`m = 8, 10, 12`) or rational is always built as the matching
//! `Quadratic` variant, so equal fields compare equal.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Field {
    Quadratic(u32),
    RealCyclotomic(u32),
}

impl Field {
    pub const RATIONAL: Field = Field::Quadratic(1);

    pub fn quadratic(d: u32) -> Result<Field> {
        if d == 0 || !is_square_free(d) {
            return Err(Error::InvalidField(format!("disc {d} is not a square-free positive integer")));
        }
        Ok(Field::Quadratic(d))
    }

    /// `ℚ(2cos(2π/m))`, in canonical form.
    pub fn real_cyclotomic(m: u32) -> Result<Field> {
        if m == 0 || m > 1000 {
            return Err(Error::InvalidField(format!("cyclotomic modulus {m} out of range")));
        }
        let m = if m % 2 == 1 { 2 * m } else { m };
        Ok(match m {
            2 | 4 | 6 => Field::RATIONAL,
            8 => Field::Quadratic(2),
            10 => Field::Quadratic(5),
            12 => Field::Quadratic(3),
            _ => Field::RealCyclotomic(m),
        })
    }

    pub fn is_rational(&self) -> bool {
        *self == Field::RATIONAL
    }

    pub fn degree(&self) -> usize {
        match *self {
            Field::Quadratic(1) => 1,
            Field::Quadratic(_) => 2,
            Field::RealCyclotomic(m) => euler_phi(m) as usize / 2,
        }
    }

    /// Monic minimal polynomial of the generator, lowest coefficient first.
    pub fn min_poly(&self) -> &'static [i64] {
        static CACHE: OnceLock<Mutex<HashMap<Field, &'static [i64]>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let mut map = cache.lock().unwrap();
        map.entry(*self).or_insert_with(|| {
            let poly = match *self {
                Field::Quadratic(1) => vec![-1, 1],
                Field::Quadratic(d) => vec![-(d as i64), 0, 1],
                Field::RealCyclotomic(m) => real_cyclotomic_poly(m),
            };
            Box::leak(poly.into_boxed_slice())
        })
    }

    pub fn generator_f64(&self) -> f64 {
        match *self {
            Field::Quadratic(d) => (d as f64).sqrt(),
            Field::RealCyclotomic(m) => 2.0 * (2.0 * std::f64::consts::PI / m as f64).cos(),
        }
    }

    /// The `m` for which this field is `ℚ(2cos(2π/m))`, when known.
    pub fn modulus(&self) -> Option<u32> {
        match *self {
            Field::Quadratic(1) => Some(1),
            Field::Quadratic(2) => Some(8),
            Field::Quadratic(3) => Some(12),
            Field::Quadratic(5) => Some(10),
            Field::Quadratic(_) => None,
            Field::RealCyclotomic(m) => Some(m),
        }
    }

    /// Smallest supported field containing both `self` and `other`.
    pub fn join(&self, other: &Field) -> Result<Field> {
        if self == other || other.is_rational() {
            return Ok(*self);
        }
        if self.is_rational() {
            return Ok(*other);
        }
        match (self.modulus(), other.modulus()) {
            (Some(a), Some(b)) => Field::real_cyclotomic(lcm(a, b)),
            _ => Err(Error::FieldMismatch(*self, *other)),
        }
    }

    pub fn contains(&self, other: &Field) -> bool {
        self.join(other).is_ok_and(|j| j == *self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Field::Quadratic(1) => write!(f, "Q"),
            Field::Quadratic(d) => write!(f, "Q(sqrt{d})"),
            Field::RealCyclotomic(m) => write!(f, "Q(2cos(2pi/{m}))"),
        }
    }
}

fn is_square_free(d: u32) -> bool {
    (2..).take_while(|p| p * p <= d).all(|p| !d.is_multiple_of(p * p))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

pub(crate) fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u32
}

/// Φ_n, lowest coefficient first.
fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = poly_div_exact(&p, &cyclotomic_poly(d));
    }
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd] / den[dd];
        quot[i] = c;
        for (j, &b) in den.iter().enumerate() {
            rem[i + j] -= c * b;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Minimal polynomial of `2cos(2π/m)` for `m > 2`.
///
/// Φ_m is palindromic of even degree `2k`, and `z^{-k} Φ_m(z)` is a
/// polynomial in `x = z + 1/z`. Uses `z^j + z^{-j} = C_j(x)` with
/// `C_0 = 2, C_1 = x, C_{j+1} = x C_j − C_{j−1}`.
fn real_cyclotomic_poly(m: u32) -> Vec<i64> {
    let phi = cyclotomic_poly(m);
    let k = (phi.len() - 1) / 2;
    let mut chebyshev: Vec<Vec<i64>> = vec![vec![2], vec![0, 1]];
    for j in 2..=k {
        let mut next = vec![0i64; j + 1];
        for (i, &c) in chebyshev[j - 1].iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, &c) in chebyshev[j - 2].iter().enumerate() {
            next[i] -= c;
        }
        chebyshev.push(next);
    }
    let mut out = vec![0i64; k + 1];
    out[0] = phi[k];
    for j in 1..=k {
        for (i, &c) in chebyshev[j].iter().enumerate() {
            out[i] += phi[k + j] * c;
        }
    }
    out
}
