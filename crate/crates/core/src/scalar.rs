//! Exact real scalars in a number field.
//!
//! A [`Scalar`] is `Σ cₖ gᵏ` with rational `cₖ` and `g` the generator of its
//! [`Field`]. For `Quadratic(d)` this is the familiar `a + b√d`. The
//! coefficient vector always has exactly `field.degree()` entries and every
//! operation reduces eagerly, so equal values have identical representations
//! and the derived `Hash`/`Eq` are value equality.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::rational::Rational;

type Coeffs = SmallVec<[Rational; 2]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    field: Field,
    coeffs: Coeffs,
}

impl Scalar {
    pub fn zero(field: Field) -> Scalar {
        Scalar {
            field,
            coeffs: smallvec![Rational::ZERO; field.degree()],
        }
    }

    pub fn one(field: Field) -> Scalar {
        Scalar::from_rational(Rational::ONE, field)
    }

    pub fn int(n: i64, field: Field) -> Scalar {
        Scalar::from_rational(Rational::int(n), field)
    }

    pub fn ratio(num: i64, den: i64, field: Field) -> Result<Scalar> {
        Ok(Scalar::from_rational(Rational::new(num, den)?, field))
    }

    pub fn from_rational(r: Rational, field: Field) -> Scalar {
        let mut s = Scalar::zero(field);
        s.coeffs[0] = r;
        s
    }

    /// `a + b√d` in `Quadratic(d)`; for `d = 1` the surd part is absorbed.
    pub fn quadratic(a: Rational, b: Rational, d: u32) -> Result<Scalar> {
        let field = Field::quadratic(d)?;
        if d == 1 {
            return Ok(Scalar::from_rational(a.add(&b)?, field));
        }
        Ok(Scalar {
            field,
            coeffs: smallvec![a, b],
        })
    }

    /// Build from power-basis coefficients. Missing high coefficients are zero.
    pub fn from_coeffs(field: Field, coeffs: &[Rational]) -> Result<Scalar> {
        let deg = field.degree();
        if coeffs.len() > deg {
            return Err(Error::Format(format!(
                "{} coefficients for a degree-{deg} field",
                coeffs.len()
            )));
        }
        let mut s = Scalar::zero(field);
        s.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        Ok(s)
    }

    /// The field generator `g` (`√d`, or `2cos(2π/m)`).
    pub fn generator(field: Field) -> Scalar {
        let mut s = Scalar::zero(field);
        if field.degree() > 1 {
            s.coeffs[1] = Rational::ONE;
        } else {
            s.coeffs[0] = Rational::ONE;
        }
        s
    }

    /// `2cos(2πk/m)` expressed in `field`.
    pub fn two_cos(k: i64, m: u32, field: Field) -> Result<Scalar> {
        if m == 0 {
            return Err(Error::DivisionByZero);
        }
        let k = k.rem_euclid(m as i64) as u32;
        let g = gcd(k, m);
        let (k, m) = (k / g, m / g);
        let rational = match m {
            1 => Some(2),
            2 => Some(-2),
            3 => Some(-1),
            4 => Some(0),
            6 => Some(1),
            _ => None,
        };
        if let Some(v) = rational {
            return Ok(Scalar::int(v, field));
        }
        let not_here = || Error::NotRepresentable(format!("2cos(2pi*{k}/{m}) in {field}"));
        let big_m = field.modulus().ok_or_else(not_here)?;
        if big_m % m != 0 {
            return Err(not_here());
        }
        // base = 2cos(2π/M) in this field
        let base = match field {
            Field::Quadratic(5) => {
                // φ = (1 + √5)/2
                Scalar::quadratic(Rational::new(1, 2)?, Rational::new(1, 2)?, 5)?
            }
            _ => Scalar::generator(field),
        };
        let mut j = k * (big_m / m) % big_m;
        if j > big_m / 2 {
            j = big_m - j;
        }
        chebyshev(&base, j)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == Rational::ONE && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// `Some(r)` when the value is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Rational::is_zero)
            .then_some(self.coeffs[0])
    }

    fn check_field(&self, rhs: &Scalar) -> Result<()> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field, rhs.field));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_field(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Coeffs>>()?;
        Ok(Scalar {
            field: self.field,
            coeffs,
        })
    }

    pub fn sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.add(&rhs.neg()?)
    }

    pub fn neg(&self) -> Result<Scalar> {
        let coeffs = self.coeffs.iter().map(Rational::neg).collect::<Result<Coeffs>>()?;
        Ok(Scalar {
            field: self.field,
            coeffs,
        })
    }

    pub fn mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.check_field(rhs)?;
        let deg = self.coeffs.len();
        if deg == 1 {
            return Ok(Scalar {
                field: self.field,
                coeffs: smallvec![self.coeffs[0].mul(&rhs.coeffs[0])?],
            });
        }
        let mut prod: SmallVec<[Rational; 4]> = smallvec![Rational::ZERO; 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                prod[i + j] = prod[i + j].add(&a.mul(b)?)?;
            }
        }
        // reduce modulo the monic minimal polynomial
        let poly = self.field.min_poly();
        for top in (deg..prod.len()).rev() {
            let c = prod[top];
            if c.is_zero() {
                continue;
            }
            for (k, &p) in poly[..deg].iter().enumerate() {
                if p != 0 {
                    let idx = top - deg + k;
                    prod[idx] = prod[idx].sub(&c.mul(&Rational::int(p))?)?;
                }
            }
        }
        Ok(Scalar {
            field: self.field,
            coeffs: prod[..deg].iter().copied().collect(),
        })
    }

    pub fn mul_rational(&self, r: &Rational) -> Result<Scalar> {
        let coeffs = self.coeffs.iter().map(|c| c.mul(r)).collect::<Result<Coeffs>>()?;
        Ok(Scalar {
            field: self.field,
            coeffs,
        })
    }

    pub fn square(&self) -> Result<Scalar> {
        self.mul(self)
    }

    /// Multiplicative inverse. Quadratic fields use the conjugate,
    /// `(a − b√d)/(a² − b²d)`; larger fields solve `x·y = 1` by elimination.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self.field {
            Field::Quadratic(1) => Ok(Scalar {
                field: self.field,
                coeffs: smallvec![self.coeffs[0].recip()?],
            }),
            Field::Quadratic(d) => {
                let (a, b) = (self.coeffs[0], self.coeffs[1]);
                let norm = a.mul(&a)?.sub(&b.mul(&b)?.mul(&Rational::int(d as i64))?)?;
                let inv = norm.recip()?;
                Ok(Scalar {
                    field: self.field,
                    coeffs: smallvec![a.mul(&inv)?, b.neg()?.mul(&inv)?],
                })
            }
            Field::RealCyclotomic(_) => self.inverse_by_elimination(),
        }
    }

    fn inverse_by_elimination(&self) -> Result<Scalar> {
        let deg = self.coeffs.len();
        // column j of the multiplication matrix is self * g^j
        let mut columns = Vec::with_capacity(deg);
        let g = Scalar::generator(self.field);
        let mut col = self.clone();
        for _ in 0..deg {
            columns.push(col.coeffs.to_vec());
            col = col.mul(&g)?;
        }
        // augmented rows: [M | e0]
        let mut rows: Vec<Vec<Rational>> = (0..deg)
            .map(|i| {
                let mut row: Vec<Rational> = columns.iter().map(|c| c[i]).collect();
                row.push(if i == 0 { Rational::ONE } else { Rational::ZERO });
                row
            })
            .collect();
        for pivot in 0..deg {
            let r = (pivot..deg)
                .find(|&r| !rows[r][pivot].is_zero())
                .ok_or(Error::DivisionByZero)?;
            rows.swap(pivot, r);
            let inv = rows[pivot][pivot].recip()?;
            for c in pivot..=deg {
                rows[pivot][c] = rows[pivot][c].mul(&inv)?;
            }
            for r in 0..deg {
                if r == pivot || rows[r][pivot].is_zero() {
                    continue;
                }
                let factor = rows[r][pivot];
                for c in pivot..=deg {
                    let v = rows[r][c].sub(&factor.mul(&rows[pivot][c])?)?;
                    rows[r][c] = v;
                }
            }
        }
        let coeffs = rows.iter().map(|row| row[deg]).collect();
        Ok(Scalar {
            field: self.field,
            coeffs,
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.mul(&rhs.inverse()?)
    }

    /// Exact sign of the real value.
    pub fn sign(&self) -> i32 {
        match self.field {
            Field::Quadratic(1) => self.coeffs[0].signum(),
            Field::Quadratic(d) => quadratic_sign(&self.coeffs[0], &self.coeffs[1], d),
            Field::RealCyclotomic(_) => cyclotomic_sign(&self.coeffs, self.field),
        }
    }

    /// Non-negative square root within the field.
    pub fn sqrt(&self) -> Result<Scalar> {
        if self.sign() < 0 {
            return Err(Error::Domain);
        }
        let not_repr = || Error::NotRepresentable(self.to_string());
        if let Some(r) = self.as_rational() {
            if let Some(root) = r.sqrt() {
                return Ok(Scalar::from_rational(root, self.field));
            }
        }
        let d = match self.field {
            Field::Quadratic(d) if d > 1 => d,
            _ => return Err(not_repr()),
        };
        let (a, b) = (self.coeffs[0], self.coeffs[1]);
        let dq = Rational::int(d as i64);
        let candidate = if b.is_zero() {
            // a = q²d, root q√d
            let q = a.div(&dq)?.sqrt().ok_or_else(not_repr)?;
            Scalar::quadratic(Rational::ZERO, q, d)?
        } else {
            // (p + q√d)² = a + b√d  ⇔  p² + q²d = a, 2pq = b,
            // so p² = (a ± s)/2 with s² = a² − b²d.
            let s = a
                .mul(&a)?
                .sub(&b.mul(&b)?.mul(&dq)?)?
                .sqrt()
                .ok_or_else(not_repr)?;
            let half = Rational::new(1, 2)?;
            let mut found = None;
            for p_sq in [a.add(&s)?.mul(&half)?, a.sub(&s)?.mul(&half)?] {
                if let Some(p) = p_sq.sqrt().filter(|p| !p.is_zero()) {
                    let q = b.div(&p.mul(&Rational::int(2))?)?;
                    found = Some(Scalar::quadratic(p, q, d)?);
                    break;
                }
            }
            found.ok_or_else(not_repr)?
        };
        let root = if candidate.sign() < 0 {
            candidate.neg()?
        } else {
            candidate
        };
        debug_assert_eq!(root.square().as_ref(), Ok(self));
        Ok(root)
    }

    /// Nearest binary64 value (within a few ulps for non-quadratic fields).
    pub fn to_f64(&self) -> f64 {
        match self.field {
            Field::Quadratic(1) => self.coeffs[0].to_f64(),
            Field::Quadratic(d) => {
                // avoid cancellation for a + b√d when the terms nearly cancel
                let big = to_big(&self.coeffs);
                let a = &big[0];
                let b = &big[1];
                let sd = (d as f64).sqrt();
                let plain = ratio_to_f64(a) + ratio_to_f64(b) * sd;
                if plain.abs() > 1e-6 * (ratio_to_f64(a).abs() + 1.0) {
                    return plain;
                }
                // a + b√d = (a² − b²d)/(a − b√d)
                let num = a * a - b * b * BigRational::from_integer(BigInt::from(d));
                let den = ratio_to_f64(a) - ratio_to_f64(b) * sd;
                if den == 0.0 {
                    plain
                } else {
                    ratio_to_f64(&num) / den
                }
            }
            Field::RealCyclotomic(_) => {
                let g = self.field.generator_f64();
                self.coeffs.iter().rev().fold(0.0, |acc, c| acc * g + c.to_f64())
            }
        }
    }

    /// Re-express this value in a field that contains its own.
    pub fn embed(&self, target: Field) -> Result<Scalar> {
        if self.field == target {
            return Ok(self.clone());
        }
        if !target.contains(&self.field) {
            return Err(Error::FieldMismatch(self.field, target));
        }
        if let Some(r) = self.as_rational() {
            return Ok(Scalar::from_rational(r, target));
        }
        let g = match self.field {
            Field::Quadratic(2) => Scalar::two_cos(1, 8, target)?,
            Field::Quadratic(3) => Scalar::two_cos(1, 12, target)?,
            // √5 = 2φ − 1 with φ = 2cos(2π/10)
            Field::Quadratic(5) => Scalar::two_cos(1, 10, target)?
                .mul_rational(&Rational::int(2))?
                .sub(&Scalar::one(target))?,
            Field::RealCyclotomic(m) => Scalar::two_cos(1, m, target)?,
            Field::Quadratic(_) => return Err(Error::FieldMismatch(self.field, target)),
        };
        let mut acc = Scalar::zero(target);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&g)?.add(&Scalar::from_rational(*c, target))?;
        }
        Ok(acc)
    }

    /// Value equality across (possibly different) fields.
    pub fn same_value(&self, other: &Scalar) -> Result<bool> {
        if self.field == other.field {
            return Ok(self == other);
        }
        match (self.as_rational(), other.as_rational()) {
            (Some(a), Some(b)) => return Ok(a == b),
            (Some(_), None) | (None, Some(_)) => return Ok(false),
            _ => {}
        }
        if (self.to_f64() - other.to_f64()).abs() > 1e-9 {
            return Ok(false);
        }
        let join = self.field.join(&other.field)?;
        Ok(self.embed(join)? == other.embed(join)?)
    }

    /// Flattened `[c0_num, c0_den, c1_num, c1_den, ...]`. Rationals are
    /// written as `[a_num, a_den, 0, 1]` so quadratic files keep a fixed shape.
    pub fn to_flat(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.coeffs.iter().flat_map(|c| [c.numer(), c.denom()]).collect();
        if self.field.is_rational() {
            out.extend([0, 1]);
        }
        out
    }

    pub fn from_flat(field: Field, flat: &[i64]) -> Result<Scalar> {
        let expected = if field.is_rational() { 4 } else { 2 * field.degree() };
        if flat.len() != expected {
            return Err(Error::Format(format!(
                "scalar has {} integers, expected {expected}",
                flat.len()
            )));
        }
        let coeffs = flat
            .chunks(2)
            .map(|c| {
                if c[1] <= 0 {
                    return Err(Error::Format("denominators must be positive".into()));
                }
                Rational::new(c[0], c[1])
            })
            .collect::<Result<Vec<_>>>()?;
        if field.is_rational() {
            return Ok(Scalar::from_rational(coeffs[0].add(&coeffs[1])?, field));
        }
        Scalar::from_coeffs(field, &coeffs)
    }
}

/// `C_j(x)` with `C_0 = 2`, `C_1 = x`, `C_{j+1} = x C_j − C_{j−1}`, so that
/// `C_j(2cos θ) = 2cos(jθ)`.
fn chebyshev(x: &Scalar, j: u32) -> Result<Scalar> {
    let field = x.field();
    let mut prev = Scalar::int(2, field);
    let mut cur = x.clone();
    if j == 0 {
        return Ok(prev);
    }
    for _ in 1..j {
        let next = x.mul(&cur)?.sub(&prev)?;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn quadratic_sign(a: &Rational, b: &Rational, d: u32) -> i32 {
    let (sa, sb) = (a.signum(), b.signum());
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // mixed signs: compare a² with b²d
    let lhs = BigInt::from(a.numer()).pow(2) * BigInt::from(b.denom()).pow(2);
    let rhs = BigInt::from(b.numer()).pow(2) * BigInt::from(a.denom()).pow(2) * BigInt::from(d);
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

fn to_big(coeffs: &[Rational]) -> Vec<BigRational> {
    coeffs
        .iter()
        .map(|c| BigRational::new(BigInt::from(c.numer()), BigInt::from(c.denom())))
        .collect()
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn big_sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn horner_big(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Sign of `Σ cₖ gᵏ`, `g = 2cos(2π/m)`.
///
/// A binary64 evaluation with a rigorous error bound settles almost every
/// case. Otherwise `g` is isolated between the next conjugate and 2 and the
/// interval is bisected in exact arithmetic until the polynomial's range on
/// it excludes zero.
fn cyclotomic_sign(coeffs: &[Rational], field: Field) -> i32 {
    if coeffs.iter().all(Rational::is_zero) {
        return 0;
    }
    let g = field.generator_f64();
    let value = coeffs.iter().rev().fold(0.0, |acc, c| acc * g + c.to_f64());
    let magnitude: f64 = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| c.to_f64().abs() * 2f64.powi(k as i32))
        .sum();
    let tolerance = magnitude * (coeffs.len() as f64 + 4.0) * 16.0 * f64::EPSILON;
    if value.abs() > tolerance {
        return if value > 0.0 { 1 } else { -1 };
    }
    exact_cyclotomic_sign(to_big(coeffs), field)
}

/// `p` must be nonzero.
fn exact_cyclotomic_sign(p: Vec<BigRational>, field: Field) -> i32 {
    let Field::RealCyclotomic(m) = field else {
        unreachable!("only real cyclotomic fields take this path");
    };
    let min_poly: Vec<BigRational> = field
        .min_poly()
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect();
    let next = (2..m).find(|&k| gcd(k, m) == 1).unwrap_or(1);
    let g = field.generator_f64();
    let g_next = 2.0 * (2.0 * std::f64::consts::PI * next as f64 / m as f64).cos();
    let mut lo = BigRational::from_float((g + g_next) / 2.0).expect("finite");
    let mut hi = BigRational::from_integer(BigInt::from(2));
    let hi_sign = big_sign(&horner_big(&min_poly, &hi));
    // Lipschitz bound of p on [-2, 2]
    let lipschitz: BigRational = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.abs() * BigRational::from_integer(BigInt::from(k as u64) << (k - 1)))
        .fold(BigRational::zero(), |acc, t| acc + t);
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        let mid = (&lo + &hi) / &two;
        let half = (&hi - &lo) / &two;
        let at_mid = horner_big(&p, &mid);
        if at_mid.abs() > &lipschitz * &half {
            return big_sign(&at_mid);
        }
        let s = big_sign(&horner_big(&min_poly, &mid));
        if s == 0 {
            return big_sign(&at_mid);
        }
        if s == hi_sign {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

impl Ord for Scalar {
    /// Total order: by field first (never mixed in practice), then by value.
    fn cmp(&self, other: &Self) -> Ordering {
        if self.field != other.field {
            return self.field.cmp(&other.field);
        }
        let s = match self.sub(other) {
            Ok(diff) => diff.sign(),
            Err(_) => big_difference_sign(self, other),
        };
        s.cmp(&0)
    }
}

fn big_difference_sign(a: &Scalar, b: &Scalar) -> i32 {
    let diff: Vec<BigRational> = to_big(&a.coeffs)
        .into_iter()
        .zip(to_big(&b.coeffs))
        .map(|(x, y)| x - y)
        .collect();
    match a.field {
        Field::Quadratic(1) => big_sign(&diff[0]),
        Field::Quadratic(d) => {
            let (sa, sb) = (big_sign(&diff[0]), big_sign(&diff[1]));
            if sb == 0 {
                return sa;
            }
            if sa == 0 || sa == sb {
                return sb;
            }
            let lhs = &diff[0] * &diff[0];
            let rhs = &diff[1] * &diff[1] * BigRational::from_integer(BigInt::from(d));
            match lhs.cmp(&rhs) {
                Ordering::Greater => sa,
                Ordering::Less => sb,
                Ordering::Equal => 0,
            }
        }
        Field::RealCyclotomic(_) => {
            if diff.iter().all(Zero::is_zero) {
                0
            } else {
                exact_cyclotomic_sign(diff, a.field)
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let symbol = match self.field {
            Field::Quadratic(d) => format!("√{d}"),
            Field::RealCyclotomic(_) => "g".to_string(),
        };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let neg = c.signum() < 0;
            if !first {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            } else if neg {
                write!(f, "-")?;
            }
            first = false;
            let mag = Rational::new(c.numer().unsigned_abs() as i64, c.denom()).unwrap_or(*c);
            let power = match k {
                0 => String::new(),
                1 => symbol.clone(),
                _ => format!("{symbol}^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag == Rational::ONE {
                write!(f, "{power}")?;
            } else if mag.denom() == 1 {
                write!(f, "{mag}{power}")?;
            } else if mag.numer() == 1 {
                write!(f, "{power}/{}", mag.denom())?;
            } else {
                write!(f, "{}{power}/{}", mag.numer(), mag.denom())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn phi() -> Scalar {
        Scalar::quadratic(q(1, 2), q(1, 2), 5).unwrap()
    }

    fn sqrt2() -> Scalar {
        Scalar::quadratic(q(0, 1), q(1, 1), 2).unwrap()
    }

    #[test]
    fn golden_ratio_squares_to_itself_plus_one() {
        let p = phi();
        let expected = p.add(&Scalar::one(p.field())).unwrap();
        assert_eq!(p.mul(&p).unwrap(), expected);
        assert_eq!(expected, Scalar::quadratic(q(3, 2), q(1, 2), 5).unwrap());
    }

    #[test]
    fn ring_examples() {
        assert_eq!(sqrt2().mul(&sqrt2()).unwrap(), Scalar::int(2, Field::Quadratic(2)));
        let conj = Scalar::quadratic(q(1, 2), q(-1, 2), 5).unwrap();
        assert!(phi().add(&conj).unwrap().is_one());
    }

    #[test]
    fn field_mismatch_is_rejected() {
        assert_eq!(
            phi().add(&sqrt2()),
            Err(Error::FieldMismatch(Field::Quadratic(5), Field::Quadratic(2)))
        );
    }

    #[test]
    fn overflow_is_reported() {
        let big = Scalar::int(i64::MAX, Field::RATIONAL);
        assert_eq!(big.add(&Scalar::one(Field::RATIONAL)), Err(Error::Overflow));
        let huge = Scalar::quadratic(q(0, 1), q(i64::MAX / 2, 1), 5).unwrap();
        assert_eq!(huge.mul(&huge), Err(Error::Overflow));
    }

    #[test]
    fn inverses() {
        let one = Scalar::one(Field::Quadratic(5));
        assert_eq!(phi().inverse().unwrap(), phi().sub(&one).unwrap());
        assert_eq!(Scalar::int(2, Field::RATIONAL).inverse().unwrap(), Scalar::ratio(1, 2, Field::RATIONAL).unwrap());
        assert_eq!(
            sqrt2().inverse().unwrap(),
            Scalar::quadratic(q(0, 1), q(1, 2), 2).unwrap()
        );
        assert_eq!(Scalar::zero(Field::RATIONAL).inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn signs() {
        let one_minus_sqrt2 = Scalar::quadratic(q(1, 1), q(-1, 1), 2).unwrap();
        assert_eq!(one_minus_sqrt2.sign(), -1);
        assert_eq!(Scalar::zero(Field::Quadratic(2)).sign(), 0);
        let phi_minus_one = phi().sub(&Scalar::one(Field::Quadratic(5))).unwrap();
        assert_eq!(phi_minus_one.sign(), 1);
    }

    #[test]
    fn square_roots() {
        assert_eq!(Scalar::int(2, Field::Quadratic(2)).sqrt().unwrap(), sqrt2());
        assert_eq!(
            Scalar::ratio(9, 4, Field::RATIONAL).unwrap().sqrt().unwrap(),
            Scalar::ratio(3, 2, Field::RATIONAL).unwrap()
        );
        assert_eq!(Scalar::int(-1, Field::RATIONAL).sqrt(), Err(Error::Domain));
        assert!(matches!(
            Scalar::int(2, Field::RATIONAL).sqrt(),
            Err(Error::NotRepresentable(_))
        ));
    }

    #[test]
    fn sqrt_of_phi_plus_one_is_phi() {
        let x = phi().add(&Scalar::one(Field::Quadratic(5))).unwrap();
        let root = x.sqrt().unwrap();
        assert_eq!(root, phi());
        // independent check: (p + q√5)² = p² + 5q² + 2pq√5 over big rationals
        let c = to_big(root.coeffs());
        let five = BigRational::from_integer(BigInt::from(5));
        let a = &c[0] * &c[0] + &c[1] * &c[1] * five;
        let b = BigRational::from_integer(BigInt::from(2)) * &c[0] * &c[1];
        assert_eq!(to_big(x.coeffs()), vec![a, b]);
    }

    #[test]
    fn floats() {
        assert!((phi().to_f64() - 1.618033988749895).abs() <= f64::EPSILON * 2.0);
        assert_eq!(Scalar::ratio(1, 2, Field::RATIONAL).unwrap().to_f64(), 0.5);
        assert!((sqrt2().to_f64() - std::f64::consts::SQRT_2).abs() <= f64::EPSILON * 2.0);
    }

    #[test]
    fn two_cos_values() {
        let f = Field::real_cyclotomic(28).unwrap();
        for k in 0..28 {
            let v = Scalar::two_cos(k, 28, f).unwrap();
            let expected = 2.0 * (2.0 * std::f64::consts::PI * k as f64 / 28.0).cos();
            assert!((v.to_f64() - expected).abs() < 1e-12, "k = {k}");
        }
        let phi_again = Scalar::two_cos(1, 10, Field::Quadratic(5)).unwrap();
        assert_eq!(phi_again, phi());
        assert!(Scalar::two_cos(1, 5, Field::Quadratic(2)).is_err());
    }

    #[test]
    fn cyclotomic_inverse_and_sign() {
        let f = Field::real_cyclotomic(28).unwrap();
        let x = Scalar::two_cos(3, 28, f).unwrap().add(&Scalar::ratio(1, 3, f).unwrap()).unwrap();
        let inv = x.inverse().unwrap();
        assert!(x.mul(&inv).unwrap().is_one());
        assert_eq!(x.sign(), if x.to_f64() > 0.0 { 1 } else { -1 });
    }

    #[test]
    fn exact_bisection_agrees_with_float_sign() {
        let f = Field::real_cyclotomic(20).unwrap();
        for k in 1..10 {
            let c = Scalar::two_cos(k, 20, f).unwrap();
            let shifted = c.sub(&Scalar::ratio(1, 7, f).unwrap()).unwrap();
            let expected = if shifted.to_f64() > 0.0 { 1 } else { -1 };
            assert_eq!(exact_cyclotomic_sign(to_big(shifted.coeffs()), f), expected, "k = {k}");
        }
    }

    #[test]
    fn embedding_preserves_value() {
        let target = Field::real_cyclotomic(40).unwrap();
        for x in [phi(), sqrt2()] {
            let e = x.embed(target).unwrap();
            assert!((e.to_f64() - x.to_f64()).abs() < 1e-12);
            assert!(x.same_value(&e).unwrap());
        }
        assert!(phi().embed(Field::Quadratic(2)).is_err());
        let half = Scalar::two_cos(1, 20, Field::real_cyclotomic(20).unwrap()).unwrap();
        assert!(!half.same_value(&phi()).unwrap());
    }

    #[test]
    fn flat_round_trip() {
        let x = Scalar::quadratic(q(-3, 4), q(1, 2), 5).unwrap();
        assert_eq!(x.to_flat(), vec![-3, 4, 1, 2]);
        assert_eq!(Scalar::from_flat(Field::Quadratic(5), &x.to_flat()).unwrap(), x);
        let r = Scalar::ratio(1, 2, Field::RATIONAL).unwrap();
        assert_eq!(r.to_flat(), vec![1, 2, 0, 1]);
        assert_eq!(Scalar::from_flat(Field::RATIONAL, &[1, 2, 0, 1]).unwrap(), r);
        assert!(Scalar::from_flat(Field::RATIONAL, &[1, 0, 0, 1]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(phi().to_string(), "1/2+√5/2");
        assert_eq!(Scalar::quadratic(q(0, 1), q(-1, 1), 2).unwrap().to_string(), "-√2");
        assert_eq!(Scalar::ratio(-3, 4, Field::RATIONAL).unwrap().to_string(), "-3/4");
    }
}
