//! Rotor groups generated by root systems, and the spinor induction maps.
//!
//! Pairs of unit roots multiply to rotors `R = αᵢαⱼ`; closing these under the
//! geometric product gives a finite rotor group that double covers the
//! rotation subgroup of the reflection group. Read in the basis
//! `(1, Ie1, Ie2, Ie3)` a rank-3 rotor group is a set of unit vectors in four
//! dimensions, which is again a root system. In two dimensions the same map
//! `αᵢ ↦ α₁αᵢ` sends a dihedral root system to a congruent copy of itself.

use std::collections::HashSet;
use std::fmt;

use crate::classify::{gram_spectrum, Spectrum};
use crate::clifford::{spinor_to_vec2, spinor_to_vec4, Multivector, Rotor};
use crate::error::{Error, Result};
use crate::roots::{normalize_roots, verify_root_axioms, AxiomReport, Provenance, RootSystem};
use crate::vector::VecE;

/// Default cap on the order of a generated rotor group.
pub const DEFAULT_ROTOR_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotorGroup {
    dim: usize,
    elements: Vec<Rotor>,
    generators: Vec<Rotor>,
}

impl RotorGroup {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in canonical order.
    pub fn elements(&self) -> &[Rotor] {
        &self.elements
    }

    /// Distinct seed rotors the group was generated from.
    pub fn generators(&self) -> &[Rotor] {
        &self.generators
    }

    pub fn contains(&self, r: &Rotor) -> bool {
        self.elements.binary_search(r).is_ok()
    }
}

/// Close the rotors `αᵢαⱼ` (all ordered pairs of `unit_roots`) under the
/// geometric product.
pub fn generate_rotor_group(unit_roots: &[VecE], cap: usize) -> Result<RotorGroup> {
    let first = unit_roots.first().ok_or(Error::ZeroRoot)?;
    let dim = first.dim();
    let vectors = unit_roots
        .iter()
        .map(|r| {
            if !r.norm_sq()?.is_one() {
                return Err(Error::NonUnitRoot(r.to_string()));
            }
            Multivector::vector(r)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut seeds: Vec<Rotor> = Vec::new();
    let mut seen: HashSet<Rotor> = HashSet::new();
    for a in &vectors {
        for b in &vectors {
            let r = Rotor::new(a.geometric_product(b)?)?;
            if seen.insert(r.clone()) {
                seeds.push(r);
            }
        }
    }
    seeds.sort();

    // breadth-first right multiplication by the seeds
    let mut elements: Vec<Rotor> = seeds.clone();
    if elements.len() > cap {
        return Err(Error::ClosureCapExceeded(cap));
    }
    let mut frontier = elements.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in &seeds {
                let p = g.compose(s)?;
                if seen.insert(p.clone()) {
                    if elements.len() >= cap {
                        return Err(Error::ClosureCapExceeded(cap));
                    }
                    elements.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    elements.sort();
    Ok(RotorGroup {
        dim,
        elements,
        generators: seeds,
    })
}

/// Everything produced by one run of the rank-3 induction.
#[derive(Clone, Debug)]
pub struct Induced {
    pub group: RotorGroup,
    pub system: RootSystem,
    pub report: AxiomReport,
}

fn require_root_system(phi: &RootSystem) -> Result<()> {
    let report = verify_root_axioms(phi)?;
    if !report.passes() {
        return Err(Error::NotARootSystem(report.to_string().replace('\n', "; ")));
    }
    Ok(())
}

fn induced_label(phi: &RootSystem) -> String {
    format!("spin({})", phi.name())
}

/// Rank 3 to rank 4, keeping the rotor group and the re-verification.
pub fn induce_4d_with_group(phi: &RootSystem, cap: usize) -> Result<Induced> {
    if phi.dim() != 3 {
        return Err(Error::DimensionMismatch(phi.dim(), 3));
    }
    require_root_system(phi)?;
    let unit = normalize_roots(phi)?;
    let group = generate_rotor_group(&unit, cap)?;
    let vectors = group
        .elements()
        .iter()
        .map(|r| spinor_to_vec4(r.as_multivector()))
        .collect::<Result<Vec<_>>>()?;
    let system = RootSystem::new(
        vectors,
        Some(induced_label(phi)),
        Provenance::InducedFrom(phi.name().to_string()),
    )?;
    let report = verify_root_axioms(&system)?;
    if !report.passes() {
        return Err(Error::InductionFailed(report.to_string().replace('\n', "; ")));
    }
    Ok(Induced { group, system, report })
}

/// The rank-4 root system read off the rotor group of `phi`.
pub fn induce_4d(phi: &RootSystem, cap: usize) -> Result<RootSystem> {
    Ok(induce_4d_with_group(phi, cap)?.system)
}

/// Rank 2 to rank 2: `αᵢ ↦ α₁αᵢ` with `α₁` the first unit root in
/// canonical order.
pub fn induce_2d(phi: &RootSystem) -> Result<RootSystem> {
    if phi.dim() != 2 {
        return Err(Error::DimensionMismatch(phi.dim(), 2));
    }
    require_root_system(phi)?;
    let unit = normalize_roots(phi)?;
    let anchor = Multivector::vector(&unit[0])?;
    let vectors = unit
        .iter()
        .map(|a| spinor_to_vec2(&anchor.geometric_product(&Multivector::vector(a)?)?))
        .collect::<Result<Vec<_>>>()?;
    RootSystem::new(
        vectors,
        Some(induced_label(phi)),
        Provenance::InducedFrom(phi.name().to_string()),
    )
}

/// Dispatch on dimension: rank 3 goes to four dimensions, rank 2 stays.
pub fn induce(phi: &RootSystem, cap: usize) -> Result<RootSystem> {
    match phi.dim() {
        3 => induce_4d(phi, cap),
        2 => induce_2d(phi),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

#[derive(Clone, Debug)]
pub struct SelfDualityReport {
    pub name: String,
    pub roots: usize,
    pub spinors: usize,
    pub input_spectrum: Spectrum,
    pub induced_spectrum: Spectrum,
    pub self_dual: bool,
}

impl fmt::Display for SelfDualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.self_dual { "self-dual" } else { "NOT self-dual" };
        write!(
            f,
            "{}: {verdict} ({} roots ↔ {} spinors)",
            self.name, self.roots, self.spinors
        )
    }
}

/// Compare `phi` with its rank-2 induction by cardinality and Gram spectrum,
/// both of which are invariant under rotation of either set.
pub fn check_self_dual(phi: &RootSystem) -> Result<SelfDualityReport> {
    let induced = induce_2d(phi)?;
    let input_spectrum = gram_spectrum(&normalize_roots(phi)?)?;
    let induced_spectrum = gram_spectrum(&normalize_roots(&induced)?)?;
    let self_dual = phi.len() == induced.len() && input_spectrum.same_as(&induced_spectrum)?;
    Ok(SelfDualityReport {
        name: phi.name().to_string(),
        roots: phi.len(),
        spinors: induced.len(),
        input_spectrum,
        induced_spectrum,
        self_dual,
    })
}
