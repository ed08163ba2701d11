//! Euclidean geometric algebra in two and three dimensions.
//!
//! Multivectors store one coefficient per basis blade, indexed by bitmask:
//! bit `i` set means `e_{i+1}` is a factor. In Cl(3) the order is
//!
//! ```text
//! 0: 1   1: e1   2: e2   3: e1e2   4: e3   5: e1e3   6: e2e3   7: e1e2e3 = I
//! ```
//!
//! Quaternion-style spinor coordinates use `Ie1 = e2e3`, `Ie2 = e3e1 = −e1e3`
//! and `Ie3 = e1e2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::scalar::Scalar;
use crate::vector::VecE;

const E1E2: usize = 0b011;
const E1E3: usize = 0b101;
const E2E3: usize = 0b110;

/// Sign of the product of two basis blades: the parity of the
/// transpositions needed to sort the concatenated factors.
const fn blade_sign(a: usize, b: usize) -> i64 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

const fn sign_table() -> [[i64; 8]; 8] {
    let mut table = [[0; 8]; 8];
    let mut a = 0;
    while a < 8 {
        let mut b = 0;
        while b < 8 {
            table[a][b] = blade_sign(a, b);
            b += 1;
        }
        a += 1;
    }
    table
}

static SIGNS: [[i64; 8]; 8] = sign_table();

fn grade(blade: usize) -> u32 {
    blade.count_ones()
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Multivector {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl Multivector {
    pub fn zero(dim: usize, field: Field) -> Result<Multivector> {
        if !(2..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        Ok(Multivector {
            dim,
            coeffs: vec![Scalar::zero(field); 1 << dim],
        })
    }

    pub fn scalar(s: Scalar, dim: usize) -> Result<Multivector> {
        let mut mv = Multivector::zero(dim, s.field())?;
        mv.coeffs[0] = s;
        Ok(mv)
    }

    /// A single basis blade with coefficient 1.
    pub fn blade(mask: usize, dim: usize, field: Field) -> Result<Multivector> {
        let mut mv = Multivector::zero(dim, field)?;
        if mask >= mv.coeffs.len() {
            return Err(Error::UnsupportedDimension(dim));
        }
        mv.coeffs[mask] = Scalar::one(field);
        Ok(mv)
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<Scalar>) -> Result<Multivector> {
        if !(2..=3).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        if coeffs.len() != 1 << dim {
            return Err(Error::DimensionMismatch(coeffs.len(), 1 << dim));
        }
        let field = coeffs[0].field();
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Multivector { dim, coeffs })
    }

    /// Embed a Euclidean vector as a grade-1 multivector.
    pub fn vector(v: &VecE) -> Result<Multivector> {
        let mut mv = Multivector::zero(v.dim(), v.field())?;
        for (i, c) in v.coords().iter().enumerate() {
            mv.coeffs[1 << i] = c.clone();
        }
        Ok(mv)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.coeffs[0].field()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> &Scalar {
        &self.coeffs[mask]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn has_grade(&self, pred: impl Fn(u32) -> bool) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .any(|(mask, c)| pred(grade(mask)) && !c.is_zero())
    }

    pub fn is_vector(&self) -> bool {
        !self.has_grade(|g| g != 1)
    }

    pub fn is_even(&self) -> bool {
        !self.has_grade(|g| g % 2 == 1)
    }

    pub fn is_scalar(&self) -> bool {
        !self.has_grade(|g| g != 0)
    }

    /// Grade-1 part as a Euclidean vector.
    pub fn to_vector(&self) -> Result<VecE> {
        if !self.is_vector() {
            return Err(Error::NotAVector);
        }
        VecE::new((0..self.dim).map(|i| self.coeffs[1 << i].clone()).collect())
    }

    fn check(&self, other: &Multivector) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Multivector { dim: self.dim, coeffs })
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<Multivector> {
        let coeffs = self.coeffs.iter().map(Scalar::neg).collect::<Result<_>>()?;
        Ok(Multivector { dim: self.dim, coeffs })
    }

    pub fn scale(&self, s: &Scalar) -> Result<Multivector> {
        let coeffs = self.coeffs.iter().map(|c| c.mul(s)).collect::<Result<_>>()?;
        Ok(Multivector { dim: self.dim, coeffs })
    }

    /// The Clifford product under `eᵢeᵢ = 1`, `eᵢeⱼ = −eⱼeᵢ`.
    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector> {
        self.check(other)?;
        let mut out = Multivector::zero(self.dim, self.field())?;
        for (a, x) in self.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, y) in other.coeffs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let term = x.mul(y)?;
                let slot = &mut out.coeffs[a ^ b];
                *slot = if SIGNS[a][b] > 0 {
                    slot.add(&term)?
                } else {
                    slot.sub(&term)?
                };
            }
        }
        Ok(out)
    }

    /// Reversion: grade `k` picks up `(−1)^{k(k−1)/2}`.
    pub fn reverse(&self) -> Result<Multivector> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(mask, c)| {
                let k = grade(mask);
                if (k * (k.saturating_sub(1)) / 2) % 2 == 1 {
                    c.neg()
                } else {
                    Ok(c.clone())
                }
            })
            .collect::<Result<_>>()?;
        Ok(Multivector { dim: self.dim, coeffs })
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if mask == 0 {
                write!(f, "{c}")?;
            } else {
                let name: String = (0..self.dim)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| format!("e{}", i + 1))
                    .collect();
                write!(f, "({c}){name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Reflect vector `a` in the hyperplane orthogonal to the unit vector `n`:
/// `a ↦ −n a n`.
pub fn reflect(a: &Multivector, n: &Multivector) -> Result<Multivector> {
    if !a.is_vector() || !n.is_vector() {
        return Err(Error::NotAVector);
    }
    let nn = n.geometric_product(n)?;
    if !(nn.is_scalar() && nn.coeffs[0].is_one()) {
        return Err(Error::NonUnitMirror);
    }
    n.geometric_product(a)?.geometric_product(n)?.neg()
}

/// Normalized even multivector: `R R̃ = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Rotor(Multivector);

impl Rotor {
    pub fn new(mv: Multivector) -> Result<Rotor> {
        if !mv.is_even() {
            return Err(Error::OddGradePresent);
        }
        let norm = mv.geometric_product(&mv.reverse()?)?;
        if !(norm.is_scalar() && norm.coeffs[0].is_one()) {
            return Err(Error::NotARotor);
        }
        Ok(Rotor(mv))
    }

    pub fn identity(dim: usize, field: Field) -> Result<Rotor> {
        Ok(Rotor(Multivector::scalar(Scalar::one(field), dim)?))
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.0
    }

    pub fn into_multivector(self) -> Multivector {
        self.0
    }

    pub fn reverse(&self) -> Result<Rotor> {
        Ok(Rotor(self.0.reverse()?))
    }

    pub fn neg(&self) -> Result<Rotor> {
        Ok(Rotor(self.0.neg()?))
    }

    /// Rotor composition; the product of rotors is again a rotor.
    pub fn compose(&self, other: &Rotor) -> Result<Rotor> {
        Ok(Rotor(self.0.geometric_product(&other.0)?))
    }
}

impl fmt::Display for Rotor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_unit_vector(v: &Multivector) -> Result<bool> {
    let sq = v.geometric_product(v)?;
    Ok(v.is_vector() && sq.is_scalar() && sq.coeffs[0].is_one())
}

/// `R = m n`, which rotates by reflecting in `n` and then in `m`.
pub fn rotor_from_vectors(m: &Multivector, n: &Multivector) -> Result<Rotor> {
    if !is_unit_vector(m)? || !is_unit_vector(n)? {
        return Err(Error::NonUnitVector);
    }
    Rotor::new(m.geometric_product(n)?)
}

/// `a ↦ R a R̃`.
pub fn rotate(a: &Multivector, r: &Rotor) -> Result<Multivector> {
    if !a.is_vector() {
        return Err(Error::NotAVector);
    }
    r.0.geometric_product(a)?.geometric_product(&r.0.reverse()?)
}

/// Read an even Cl(3) element `a0 + a1 Ie1 + a2 Ie2 + a3 Ie3` as `(a0, a1, a2, a3)`.
pub fn spinor_to_vec4(psi: &Multivector) -> Result<VecE> {
    if psi.dim != 3 {
        return Err(Error::DimensionMismatch(psi.dim, 3));
    }
    if !psi.is_even() {
        return Err(Error::OddGradePresent);
    }
    VecE::new(vec![
        psi.coeffs[0].clone(),
        psi.coeffs[E2E3].clone(),
        psi.coeffs[E1E3].neg()?,
        psi.coeffs[E1E2].clone(),
    ])
}

/// Inverse of [`spinor_to_vec4`].
pub fn vec4_to_spinor(v: &VecE) -> Result<Multivector> {
    if v.dim() != 4 {
        return Err(Error::DimensionMismatch(v.dim(), 4));
    }
    let c = v.coords();
    let mut mv = Multivector::zero(3, v.field())?;
    mv.coeffs[0] = c[0].clone();
    mv.coeffs[E2E3] = c[1].clone();
    mv.coeffs[E1E3] = c[2].neg()?;
    mv.coeffs[E1E2] = c[3].clone();
    Ok(mv)
}

/// Read an even Cl(2) element `a + b e1e2` as `(a, b)`.
pub fn spinor_to_vec2(psi: &Multivector) -> Result<VecE> {
    if psi.dim != 2 {
        return Err(Error::DimensionMismatch(psi.dim, 2));
    }
    if !psi.is_even() {
        return Err(Error::OddGradePresent);
    }
    VecE::new(vec![psi.coeffs[0].clone(), psi.coeffs[E1E2].clone()])
}
