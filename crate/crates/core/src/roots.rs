//! Root systems: reflection closure, axiom checks and unit normalization.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::scalar::Scalar;
use crate::vector::VecE;

/// Default cap on the number of roots produced by a closure.
pub const DEFAULT_ROOT_CAP: usize = 10_000;

/// Where a root system came from.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Preset(String),
    File(String),
    InducedFrom(String),
}

/// A finite set of exact vectors in canonical (sorted, duplicate-free) order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSystem {
    dim: usize,
    field: Field,
    roots: Vec<VecE>,
    label: Option<String>,
    provenance: Provenance,
}

impl RootSystem {
    pub fn new(roots: Vec<VecE>, label: Option<String>, provenance: Provenance) -> Result<RootSystem> {
        let first = roots
            .first()
            .ok_or_else(|| Error::NotARootSystem("empty root set".into()))?;
        let (dim, field) = (first.dim(), first.field());
        for r in &roots {
            if r.dim() != dim {
                return Err(Error::DimensionMismatch(dim, r.dim()));
            }
            if r.field() != field {
                return Err(Error::FieldMismatch(field, r.field()));
            }
        }
        let mut roots = roots;
        roots.sort();
        roots.dedup();
        Ok(RootSystem {
            dim,
            field,
            roots,
            label,
            provenance,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn roots(&self) -> &[VecE] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn name(&self) -> &str {
        self.label.as_deref().unwrap_or("unnamed")
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_label(mut self, label: impl Into<String>) -> RootSystem {
        self.label = Some(label.into());
        self
    }

    pub fn contains(&self, v: &VecE) -> bool {
        self.roots.binary_search(v).is_ok()
    }

    /// Re-express every coordinate in a larger field.
    pub fn embed(&self, target: Field) -> Result<RootSystem> {
        let roots = self.roots.iter().map(|r| r.embed(target)).collect::<Result<_>>()?;
        RootSystem::new(roots, self.label.clone(), self.provenance.clone())
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {} ({} roots, dim {}, field {})", self.name(), self.len(), self.dim, self.field)?;
        for r in &self.roots {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// A reflection `λ ↦ λ − c(λ|α)α` with `c = 2/(α|α)` precomputed.
#[derive(Clone, Debug)]
pub struct Mirror {
    root: VecE,
    factor: Scalar,
}

impl Mirror {
    pub fn new(root: &VecE) -> Result<Mirror> {
        if root.is_zero() {
            return Err(Error::ZeroRoot);
        }
        let factor = Scalar::int(2, root.field()).div(&root.norm_sq()?)?;
        Ok(Mirror {
            root: root.clone(),
            factor,
        })
    }

    pub fn root(&self) -> &VecE {
        &self.root
    }

    pub fn apply(&self, v: &VecE) -> Result<VecE> {
        let ip = v.dot(&self.root)?;
        if ip.is_zero() {
            return Ok(v.clone());
        }
        v.sub(&self.root.scale(&ip.mul(&self.factor)?)?)
    }
}

/// `λ − 2(λ|α)/(α|α) α`.
pub fn reflect_euclid(lambda: &VecE, alpha: &VecE) -> Result<VecE> {
    Mirror::new(alpha)?.apply(lambda)
}

/// Rank of the span of `vectors`, by exact elimination.
pub fn rank(vectors: &[VecE]) -> Result<usize> {
    let mut rows: Vec<Vec<Scalar>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let Some(width) = rows.first().map(Vec::len) else {
        return Ok(0);
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse()?;
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].mul(&inv)?;
            for c in col..width {
                let v = rows[r][c].sub(&factor.mul(&rows[rank][c])?)?;
                rows[r][c] = v;
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Smallest set containing `±simple` that is closed under reflection in
/// each of its members. Fails with [`Error::ClosureCapExceeded`] once more
/// than `cap` roots have been generated.
pub fn close_under_reflections(simple: &[VecE], cap: usize) -> Result<Vec<VecE>> {
    if simple.iter().any(VecE::is_zero) {
        return Err(Error::ZeroRoot);
    }
    if rank(simple)? != simple.len() {
        return Err(Error::LinearlyDependent);
    }
    let mut seen: HashSet<VecE> = HashSet::new();
    let mut roots: Vec<VecE> = Vec::new();
    let mut mirrors: Vec<Mirror> = Vec::new();
    let mut push = |v: VecE, roots: &mut Vec<VecE>, mirrors: &mut Vec<Mirror>| -> Result<()> {
        if seen.insert(v.clone()) {
            if roots.len() >= cap {
                return Err(Error::ClosureCapExceeded(cap));
            }
            mirrors.push(Mirror::new(&v)?);
            roots.push(v);
        }
        Ok(())
    };
    for s in simple {
        push(s.clone(), &mut roots, &mut mirrors)?;
        push(s.neg()?, &mut roots, &mut mirrors)?;
    }
    // every pair (i, j) with j <= i is handled when i is reached
    let mut i = 0;
    while i < roots.len() {
        for j in 0..=i {
            let a = mirrors[i].apply(&roots[j])?;
            let b = mirrors[j].apply(&roots[i])?;
            push(a, &mut roots, &mut mirrors)?;
            push(b, &mut roots, &mut mirrors)?;
        }
        i += 1;
    }
    roots.sort();
    Ok(roots)
}

/// Why a set fails to be a root system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AxiomFailure {
    ZeroVector,
    ScalarMultiple { root: VecE, multiple: VecE },
    MissingNegative { root: VecE },
    NotClosed { mirror: VecE, root: VecE, image: VecE },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::ZeroVector => write!(f, "contains the zero vector"),
            AxiomFailure::ScalarMultiple { root, multiple } => {
                write!(f, "{multiple} is a scalar multiple of {root} other than ±1")
            }
            AxiomFailure::MissingNegative { root } => write!(f, "{root} present but its negative is not"),
            AxiomFailure::NotClosed { mirror, root, image } => {
                write!(f, "reflecting {root} in {mirror} gives {image}, not in the set")
            }
        }
    }
}

/// Outcome of checking both root-system axioms. Failures are data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    /// `Φ ∩ ℝα = {±α}` for every root.
    pub axiom1: Option<AxiomFailure>,
    /// `s_α Φ = Φ` for every root.
    pub axiom2: Option<AxiomFailure>,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.axiom1.is_none() && self.axiom2.is_none()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.axiom1 {
            None => writeln!(f, "axiom 1 (only ±α parallel): pass")?,
            Some(w) => writeln!(f, "axiom 1 (only ±α parallel): FAIL: {w}")?,
        }
        match &self.axiom2 {
            None => write!(f, "axiom 2 (closed under reflections): pass"),
            Some(w) => write!(f, "axiom 2 (closed under reflections): FAIL: {w}"),
        }
    }
}

/// `Some(c)` with `b = c·a`, if `b` is parallel to the nonzero `a`.
fn multiple_of(b: &VecE, a: &VecE) -> Result<Option<Scalar>> {
    let Some(i) = a.coords().iter().position(|c| !c.is_zero()) else {
        return Ok(None);
    };
    let c = b.coords()[i].div(&a.coords()[i])?;
    Ok((a.scale(&c)? == *b).then_some(c))
}

fn is_positive(v: &VecE) -> bool {
    v.coords().iter().find(|c| !c.is_zero()).is_some_and(|c| c.sign() > 0)
}

pub fn verify_root_axioms(phi: &RootSystem) -> Result<AxiomReport> {
    let roots = phi.roots();
    let field = phi.field();
    let one = Scalar::one(field);
    let minus_one = one.neg()?;

    let axiom1 = if roots.iter().any(VecE::is_zero) {
        Some(AxiomFailure::ZeroVector)
    } else {
        // prefer the most readable witness: positive root, multiple > 1
        let mut best: Option<(u8, AxiomFailure)> = None;
        'outer: for a in roots {
            for b in roots {
                let Some(c) = multiple_of(b, a)? else { continue };
                if c == one || c == minus_one {
                    continue;
                }
                let score = match (is_positive(a), c.sub(&one)?.sign() > 0) {
                    (true, true) => 0,
                    (_, true) => 1,
                    _ => 2,
                };
                if best.as_ref().is_none_or(|(s, _)| score < *s) {
                    best = Some((score, AxiomFailure::ScalarMultiple { root: a.clone(), multiple: b.clone() }));
                }
                if score == 0 {
                    break 'outer;
                }
            }
        }
        match best {
            Some((_, w)) => Some(w),
            None => {
                let mut missing = None;
                for a in roots {
                    if !phi.contains(&a.neg()?) {
                        missing = Some(AxiomFailure::MissingNegative { root: a.clone() });
                        break;
                    }
                }
                missing
            }
        }
    };

    let mut axiom2 = None;
    'mirrors: for a in roots.iter().filter(|a| !a.is_zero()) {
        let mirror = Mirror::new(a)?;
        for b in roots {
            let image = mirror.apply(b)?;
            if !phi.contains(&image) {
                axiom2 = Some(AxiomFailure::NotClosed {
                    mirror: a.clone(),
                    root: b.clone(),
                    image,
                });
                break 'mirrors;
            }
        }
    }
    Ok(AxiomReport { axiom1, axiom2 })
}

/// Scale every root to exact unit length.
pub fn normalize_roots(phi: &RootSystem) -> Result<Vec<VecE>> {
    let mut out = Vec::with_capacity(phi.len());
    for r in phi.roots() {
        let norm_sq = r.norm_sq()?;
        if norm_sq.is_zero() {
            return Err(Error::ZeroRoot);
        }
        if norm_sq.is_one() {
            out.push(r.clone());
            continue;
        }
        let norm = norm_sq.sqrt().map_err(|_| Error::NormNotInField {
            root: r.to_string(),
            norm: norm_sq.to_string(),
        })?;
        out.push(r.scale(&norm.inverse()?)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}
