use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::scalar::Scalar;

/// Exact Euclidean vector of dimension 1 to 4.
///
/// Ordering is lexicographic on exact coordinate values, which is the
/// canonical order of root sets.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct VecE {
    coords: Vec<Scalar>,
}

impl VecE {
    pub fn new(coords: Vec<Scalar>) -> Result<VecE> {
        if coords.is_empty() || coords.len() > 4 {
            return Err(Error::UnsupportedDimension(coords.len()));
        }
        let field = coords[0].field();
        if let Some(bad) = coords.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(VecE { coords })
    }

    pub fn from_ints(values: &[i64], field: Field) -> Result<VecE> {
        VecE::new(values.iter().map(|&v| Scalar::int(v, field)).collect())
    }

    pub fn zero(dim: usize, field: Field) -> Result<VecE> {
        VecE::new(vec![Scalar::zero(field); dim])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(i: usize, dim: usize, field: Field) -> Result<VecE> {
        let mut v = VecE::zero(dim, field)?;
        v.coords[i] = Scalar::one(field);
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    fn check(&self, other: &VecE) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }

    pub fn dot(&self, other: &VecE) -> Result<Scalar> {
        self.check(other)?;
        let mut acc = Scalar::zero(self.field());
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if !a.is_zero() && !b.is_zero() {
                acc = acc.add(&a.mul(b)?)?;
            }
        }
        Ok(acc)
    }

    pub fn norm_sq(&self) -> Result<Scalar> {
        self.dot(self)
    }

    pub fn add(&self, other: &VecE) -> Result<VecE> {
        self.check(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(VecE { coords })
    }

    pub fn sub(&self, other: &VecE) -> Result<VecE> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<VecE> {
        let coords = self.coords.iter().map(Scalar::neg).collect::<Result<_>>()?;
        Ok(VecE { coords })
    }

    pub fn scale(&self, s: &Scalar) -> Result<VecE> {
        let coords = self.coords.iter().map(|c| c.mul(s)).collect::<Result<_>>()?;
        Ok(VecE { coords })
    }

    /// Move every coordinate into a larger field.
    pub fn embed(&self, target: Field) -> Result<VecE> {
        let coords = self.coords.iter().map(|c| c.embed(target)).collect::<Result<_>>()?;
        Ok(VecE { coords })
    }

    /// Concatenate coordinates (direct sum placement).
    pub fn concat(&self, other: &VecE) -> Result<VecE> {
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        VecE::new(coords)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(Scalar::to_f64).collect()
    }
}

impl fmt::Display for VecE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_mixed_fields_and_bad_dims() {
        let a = Scalar::one(Field::RATIONAL);
        let b = Scalar::one(Field::Quadratic(2));
        assert!(matches!(VecE::new(vec![a.clone(), b]), Err(Error::FieldMismatch(..))));
        assert!(VecE::new(vec![]).is_err());
        assert!(VecE::new(vec![a; 5]).is_err());
    }

    #[test]
    fn dot_and_display() {
        let u = VecE::from_ints(&[1, -1, 0], Field::RATIONAL).unwrap();
        let v = VecE::from_ints(&[0, 1, -1], Field::RATIONAL).unwrap();
        assert_eq!(u.dot(&v).unwrap(), Scalar::int(-1, Field::RATIONAL));
        assert_eq!(u.to_string(), "(1, -1, 0)");
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let f = Field::RATIONAL;
        let mut vs = vec![
            VecE::from_ints(&[0, 1], f).unwrap(),
            VecE::from_ints(&[-1, 0], f).unwrap(),
            VecE::from_ints(&[0, -1], f).unwrap(),
        ];
        vs.sort();
        assert_eq!(vs[0], VecE::from_ints(&[-1, 0], f).unwrap());
        assert_eq!(vs[1], VecE::from_ints(&[0, -1], f).unwrap());
    }
}
