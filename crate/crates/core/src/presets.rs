//! Built-in root systems given by explicit simple roots.
//!
//! Only the `A1xA1xA1` simple roots are the textbook choice `{e1, e2, e3}`;
//! the others are standard realizations checked in the tests by closure
//! count and by the angles between simple roots.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::rational::Rational;
use crate::roots::{close_under_reflections, Provenance, RootSystem};
use crate::scalar::Scalar;
use crate::vector::VecE;

/// Largest dihedral order accepted for `I2-<n>`.
pub const MAX_DIHEDRAL: u32 = 60;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preset {
    name: String,
    simple: Vec<VecE>,
}

impl Preset {
    /// Look up a preset by case-insensitive name: `A1xA1xA1`, `A3`, `B3`,
    /// `H3`, `I2-<n>`, `A1xI2-<n>`, and the rank-4 `D4`, `F4`, `H4`.
    pub fn by_name(name: &str) -> Result<Preset> {
        // I2(n) and A1xI2(n) are accepted as spellings of I2-n and A1xI2-n
        let lower = name.trim().to_ascii_lowercase().replace('×', "x");
        let lower = match lower.strip_suffix(')') {
            Some(head) => head.replacen("i2(", "i2-", 1),
            None => lower,
        };
        let unknown = || Error::UnknownPreset(name.to_string());
        match lower.as_str() {
            "a1" => return a1(),
            "a1xa1xa1" => return a1_cubed(),
            "a3" => return a3(),
            "b3" => return b3(),
            "h3" => return h3(),
            "d4" => return d4(),
            "f4" => return f4(),
            "h4" => return h4(),
            _ => {}
        }
        if let Some(n) = lower.strip_prefix("a1xi2-") {
            return a1_plus_dihedral(n.parse().map_err(|_| unknown())?);
        }
        if let Some(n) = lower.strip_prefix("i2-") {
            return dihedral(n.parse().map_err(|_| unknown())?);
        }
        Err(unknown())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn simple_roots(&self) -> &[VecE] {
        &self.simple
    }

    pub fn field(&self) -> Field {
        self.simple[0].field()
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn root_system(&self, cap: usize) -> Result<RootSystem> {
        let roots = close_under_reflections(&self.simple, cap)?;
        RootSystem::new(roots, Some(self.name.clone()), Provenance::Preset(self.name.clone()))
    }
}

/// The rank-3 inputs of the survey, in table order.
pub fn rank3_catalog() -> Result<Vec<Preset>> {
    let mut out = vec![a1_cubed()?];
    for n in 3..=6 {
        out.push(a1_plus_dihedral(n)?);
    }
    out.extend([a3()?, b3()?, h3()?]);
    Ok(out)
}

fn preset(name: impl Into<String>, simple: Vec<VecE>) -> Result<Preset> {
    Ok(Preset {
        name: name.into(),
        simple,
    })
}

fn ints(rows: &[&[i64]], field: Field) -> Result<Vec<VecE>> {
    rows.iter().map(|r| VecE::from_ints(r, field)).collect()
}

fn half(x: i64) -> Rational {
    Rational::new(x, 2).expect("nonzero denominator")
}

fn quarter(x: i64) -> Rational {
    Rational::new(x, 4).expect("nonzero denominator")
}

pub fn a1() -> Result<Preset> {
    preset("A1", ints(&[&[1]], Field::RATIONAL)?)
}

pub fn a1_cubed() -> Result<Preset> {
    preset("A1xA1xA1", ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], Field::RATIONAL)?)
}

/// A3 realized as D3. Unit normalization needs √2.
pub fn a3() -> Result<Preset> {
    preset("A3", ints(&[&[1, -1, 0], &[0, 1, -1], &[0, 1, 1]], Field::Quadratic(2))?)
}

pub fn b3() -> Result<Preset> {
    preset("B3", ints(&[&[1, -1, 0], &[0, 1, -1], &[0, 0, 1]], Field::Quadratic(2))?)
}

/// `φ/2`, `(φ−1)/2` and `1/2` in ℚ(√5), signed.
fn h_entry(kind: char, sign: i64) -> Result<Scalar> {
    let (a, b) = match kind {
        // φ/2 = 1/4 + √5/4
        'p' => (quarter(sign), quarter(sign)),
        // (φ−1)/2 = −1/4 + √5/4
        'q' => (quarter(-sign), quarter(sign)),
        'h' => (half(sign), Rational::ZERO),
        '0' => (Rational::ZERO, Rational::ZERO),
        _ => unreachable!(),
    };
    Scalar::quadratic(a, b, 5)
}

fn h_vec(entries: &[(char, i64)]) -> Result<VecE> {
    VecE::new(entries.iter().map(|&(k, s)| h_entry(k, s)).collect::<Result<_>>()?)
}

/// Icosahedral simple roots; consecutive labels 5 and 3.
pub fn h3() -> Result<Preset> {
    preset(
        "H3",
        vec![
            h_vec(&[('p', -1), ('q', -1), ('h', -1)])?,
            h_vec(&[('q', 1), ('h', 1), ('p', 1)])?,
            h_vec(&[('h', 1), ('p', -1), ('q', -1)])?,
        ],
    )
}

pub fn d4() -> Result<Preset> {
    preset(
        "D4",
        ints(&[&[1, -1, 0, 0], &[0, 1, -1, 0], &[0, 0, 1, -1], &[0, 0, 1, 1]], Field::Quadratic(2))?,
    )
}

pub fn f4() -> Result<Preset> {
    let f = Field::Quadratic(2);
    let h = |x| Scalar::from_rational(half(x), f);
    let mut simple = ints(&[&[0, 1, -1, 0], &[0, 0, 1, -1], &[0, 0, 0, 1]], f)?;
    simple.push(VecE::new(vec![h(1), h(-1), h(-1), h(-1)])?);
    preset("F4", simple)
}

/// 600-cell simple roots; labels 5, 3, 3 along the chain.
pub fn h4() -> Result<Preset> {
    let minus_e1 = VecE::new(vec![
        Scalar::int(-1, Field::Quadratic(5)),
        h_entry('0', 1)?,
        h_entry('0', 1)?,
        h_entry('0', 1)?,
    ])?;
    preset(
        "H4",
        vec![
            minus_e1,
            h_vec(&[('p', 1), ('h', -1), ('q', -1), ('0', 1)])?,
            h_vec(&[('0', 1), ('h', 1), ('p', 1), ('q', -1)])?,
            h_vec(&[('0', 1), ('q', 1), ('h', -1), ('p', 1)])?,
        ],
    )
}

/// Smallest field holding `cos(π/n)` and `sin(π/n)`.
pub fn dihedral_field(n: u32) -> Result<Field> {
    match n {
        2 => Ok(Field::RATIONAL),
        3 | 6 => Ok(Field::Quadratic(3)),
        4 => Ok(Field::Quadratic(2)),
        _ => Field::real_cyclotomic(4 * n),
    }
}

/// Unit simple roots `(1, 0)` and `(−cos(π/n), sin(π/n))`.
fn dihedral_simple(n: u32) -> Result<Vec<VecE>> {
    if !(2..=MAX_DIHEDRAL).contains(&n) {
        return Err(Error::UnknownPreset(format!("I2-{n}")));
    }
    let field = dihedral_field(n)?;
    let half = Rational::new(1, 2)?;
    let cos = Scalar::two_cos(1, 2 * n, field)?.mul_rational(&half)?;
    // sin(π/n) = cos(2π(n−2)/(4n))
    let sin = Scalar::two_cos(n as i64 - 2, 4 * n, field)?.mul_rational(&half)?;
    Ok(vec![
        VecE::from_ints(&[1, 0], field)?,
        VecE::new(vec![cos.neg()?, sin])?,
    ])
}

pub fn dihedral(n: u32) -> Result<Preset> {
    preset(format!("I2({n})"), dihedral_simple(n)?)
}

/// `A1 ⊕ I2(n)`: the dihedral roots in the e1e2-plane plus `e3`.
pub fn a1_plus_dihedral(n: u32) -> Result<Preset> {
    let planar = dihedral_simple(n)?;
    let field = planar[0].field();
    let zero = VecE::zero(1, field)?;
    let mut simple = planar.iter().map(|v| v.concat(&zero)).collect::<Result<Vec<_>>>()?;
    simple.push(VecE::unit(2, 3, field)?);
    preset(format!("A1xI2({n})"), simple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{verify_root_axioms, DEFAULT_ROOT_CAP};

    fn cos_between(a: &VecE, b: &VecE) -> f64 {
        let ip = a.dot(b).unwrap().to_f64();
        ip / (a.norm_sq().unwrap().to_f64() * b.norm_sq().unwrap().to_f64()).sqrt()
    }

    #[test]
    fn names_are_case_insensitive() {
        assert_eq!(Preset::by_name("a1xa1xa1").unwrap().name(), "A1xA1xA1");
        assert_eq!(Preset::by_name("i2-5").unwrap().name(), "I2(5)");
        assert_eq!(Preset::by_name("A1xI2-4").unwrap().name(), "A1xI2(4)");
        assert!(Preset::by_name("E8").is_err());
        assert!(Preset::by_name("I2-1").is_err());
        assert!(Preset::by_name("I2-x").is_err());
    }

    #[test]
    fn closure_counts() {
        let expected = [
            ("A1xA1xA1", 6),
            ("A3", 12),
            ("B3", 18),
            ("H3", 30),
            ("D4", 24),
            ("F4", 48),
            ("H4", 120),
        ];
        for (name, count) in expected {
            let phi = Preset::by_name(name).unwrap().root_system(DEFAULT_ROOT_CAP).unwrap();
            assert_eq!(phi.len(), count, "{name}");
            assert!(verify_root_axioms(&phi).unwrap().passes(), "{name}");
        }
        for n in 2..=12 {
            let phi = dihedral(n).unwrap().root_system(DEFAULT_ROOT_CAP).unwrap();
            assert_eq!(phi.len(), 2 * n as usize, "I2({n})");
            assert!(verify_root_axioms(&phi).unwrap().passes(), "I2({n})");
        }
    }

    #[test]
    fn a3_roots_are_the_cuboctahedron() {
        let phi = a3().unwrap().root_system(DEFAULT_ROOT_CAP).unwrap();
        for r in phi.roots() {
            let zeros = r.coords().iter().filter(|c| c.is_zero()).count();
            assert_eq!(zeros, 1);
            assert!(r.coords().iter().all(|c| c.is_zero() || c.as_rational().unwrap().abs().unwrap() == Rational::ONE));
        }
    }

    #[test]
    fn simple_root_angles() {
        let phi_half = (1.0 + 5f64.sqrt()) / 4.0;
        let cases: [(&str, &[(usize, usize, f64)]); 5] = [
            // D3 form: e1 - e2 is the middle node
            ("A3", &[(0, 1, -0.5), (0, 2, -0.5), (1, 2, 0.0)]),
            ("B3", &[(0, 1, -0.5), (1, 2, -(0.5f64).sqrt()), (0, 2, 0.0)]),
            ("H3", &[(0, 1, -phi_half), (1, 2, -0.5), (0, 2, 0.0)]),
            ("H4", &[(0, 1, -phi_half), (1, 2, -0.5), (2, 3, -0.5), (0, 2, 0.0), (0, 3, 0.0), (1, 3, 0.0)]),
            ("F4", &[(0, 1, -0.5), (1, 2, -(0.5f64).sqrt()), (2, 3, -0.5), (0, 2, 0.0), (0, 3, 0.0), (1, 3, 0.0)]),
        ];
        for (name, pairs) in cases {
            let p = Preset::by_name(name).unwrap();
            for &(i, j, c) in pairs {
                let got = cos_between(&p.simple_roots()[i], &p.simple_roots()[j]);
                assert!((got - c).abs() < 1e-12, "{name} ({i},{j}): {got}");
            }
        }
    }

    #[test]
    fn h3_pi_over_five_pair_is_exact() {
        let p = h3().unwrap();
        let ip = p.simple_roots()[0].dot(&p.simple_roots()[1]).unwrap();
        // −φ/2 with unit roots
        let expected = Scalar::quadratic(quarter(-1), quarter(-1), 5).unwrap();
        assert_eq!(ip, expected);
        assert!(p.simple_roots().iter().all(|r| r.norm_sq().unwrap().is_one()));
    }

    #[test]
    fn dihedral_roots_are_unit() {
        for n in 2..=12 {
            for r in dihedral(n).unwrap().simple_roots() {
                assert!(r.norm_sq().unwrap().is_one(), "I2({n})");
            }
        }
    }

    #[test]
    fn survey_catalog_order() {
        let names: Vec<_> = rank3_catalog().unwrap().iter().map(|p| p.name().to_string()).collect();
        assert_eq!(
            names,
            ["A1xA1xA1", "A1xI2(3)", "A1xI2(4)", "A1xI2(5)", "A1xI2(6)", "A3", "B3", "H3"]
        );
    }
}
