//! Invariants, catalog lookup and Coxeter data of root systems.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::presets;
use crate::rational::Rational;
use crate::roots::{normalize_roots, Mirror, Provenance, RootSystem, DEFAULT_ROOT_CAP};
use crate::scalar::Scalar;
use crate::vector::VecE;

/// Multiset of exact values with multiplicities. Values may live in
/// different fields; equality is by value.
#[derive(Clone, Debug, Default)]
pub struct Spectrum {
    entries: Vec<(Scalar, usize)>,
}

// Presentation order only; equality of entries is decided exactly.
fn cmp_values(a: &Scalar, b: &Scalar) -> Ordering {
    if a.field() == b.field() {
        return a.cmp(b);
    }
    a.to_f64().total_cmp(&b.to_f64())
}

impl Spectrum {
    pub fn entries(&self) -> &[(Scalar, usize)] {
        &self.entries
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, c)| c).sum()
    }

    pub fn add(&mut self, value: Scalar, count: usize) -> Result<()> {
        if count == 0 {
            return Ok(());
        }
        for (v, c) in &mut self.entries {
            if v.same_value(&value)? {
                *c += count;
                return Ok(());
            }
        }
        self.entries.push((value, count));
        self.entries.sort_by(|a, b| cmp_values(&a.0, &b.0));
        Ok(())
    }

    pub fn merge(&mut self, other: &Spectrum) -> Result<()> {
        for (v, c) in &other.entries {
            self.add(v.clone(), *c)?;
        }
        Ok(())
    }

    /// Multiplicity of a value, zero if absent.
    pub fn count_of(&self, value: &Scalar) -> Result<usize> {
        for (v, c) in &self.entries {
            if v.same_value(value)? {
                return Ok(*c);
            }
        }
        Ok(0)
    }

    pub fn same_as(&self, other: &Spectrum) -> Result<bool> {
        if self.entries.len() != other.entries.len() {
            return Ok(false);
        }
        for (v, c) in &self.entries {
            if other.count_of(v)? != *c {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v} ×{c}")?;
        }
        write!(f, "}}")
    }
}

/// Inner products over all ordered pairs of distinct vectors.
pub fn gram_spectrum(vectors: &[VecE]) -> Result<Spectrum> {
    let mut counts: HashMap<Scalar, usize> = HashMap::new();
    for (i, a) in vectors.iter().enumerate() {
        for b in &vectors[i + 1..] {
            *counts.entry(a.dot(b)?).or_default() += 2;
        }
    }
    let mut spectrum = Spectrum::default();
    let mut entries: Vec<_> = counts.into_iter().collect();
    entries.sort();
    for (v, c) in entries {
        spectrum.add(v, c)?;
    }
    Ok(spectrum)
}

/// Coarse isomorphism invariant of a root system.
#[derive(Clone, Debug)]
pub struct Signature {
    pub dim: usize,
    pub count: usize,
    pub spectrum: Spectrum,
    /// Sizes of the non-orthogonality components, largest first.
    pub components: Vec<usize>,
}

impl Signature {
    pub fn matches(&self, other: &Signature) -> Result<bool> {
        if self.dim != other.dim || self.count != other.count || self.components != other.components {
            return Ok(false);
        }
        self.spectrum.same_as(&other.spectrum)
    }

    /// Signature of an orthogonal direct sum.
    pub fn direct_sum(&self, other: &Signature) -> Result<Signature> {
        let mut spectrum = self.spectrum.clone();
        spectrum.merge(&other.spectrum)?;
        spectrum.add(Scalar::zero(Field::RATIONAL), 2 * self.count * other.count)?;
        let mut components = self.components.clone();
        components.extend(&other.components);
        components.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Signature {
            dim: self.dim + other.dim,
            count: self.count + other.count,
            spectrum,
            components,
        })
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim {} | {} roots | components {:?} | gram {}",
            self.dim, self.count, self.components, self.spectrum
        )
    }
}

fn component_sizes(unit: &[VecE]) -> Result<Vec<usize>> {
    let n = unit.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if !unit[i].dot(&unit[j])?.is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for i in 0..n {
        *sizes.entry(find(&mut parent, i)).or_default() += 1;
    }
    let mut out: Vec<usize> = sizes.into_values().collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

pub fn signature(phi: &RootSystem) -> Result<Signature> {
    let unit = normalize_roots(phi)?;
    Ok(Signature {
        dim: phi.dim(),
        count: phi.len(),
        spectrum: gram_spectrum(&unit)?,
        components: component_sizes(&unit)?,
    })
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub signature: Signature,
}

/// Highest dihedral order in the catalog.
pub const CATALOG_MAX_DIHEDRAL: u32 = 12;

fn irreducibles() -> Result<Vec<(String, usize, Signature)>> {
    let mut list = vec![presets::a1()?];
    for n in 3..=CATALOG_MAX_DIHEDRAL {
        list.push(presets::dihedral(n)?);
    }
    list.extend([
        presets::a3()?,
        presets::b3()?,
        presets::h3()?,
        presets::d4()?,
        presets::f4()?,
        presets::h4()?,
    ]);
    list.into_iter()
        .map(|p| {
            let phi = p.root_system(DEFAULT_ROOT_CAP)?;
            Ok((p.name().to_string(), p.rank(), signature(&phi)?))
        })
        .collect()
}

fn build_catalog() -> Result<Vec<CatalogEntry>> {
    let irr = irreducibles()?;
    let mut out = Vec::new();
    // multisets of irreducibles, as non-increasing index sequences, total rank <= 4
    let mut stack: Vec<(Vec<usize>, usize)> = (0..irr.len()).map(|i| (vec![i], irr[i].1)).collect();
    while let Some((parts, rank)) = stack.pop() {
        let last = *parts.last().expect("non-empty");
        for i in 0..=last {
            if rank + irr[i].1 <= 4 {
                let mut more = parts.clone();
                more.push(i);
                stack.push((more, rank + irr[i].1));
            }
        }
        let mut ordered = parts.clone();
        // higher rank first, catalog order within a rank
        ordered.sort_by(|a, b| irr[*b].1.cmp(&irr[*a].1).then(a.cmp(b)));
        let mut sig = irr[ordered[0]].2.clone();
        for &i in &ordered[1..] {
            sig = sig.direct_sum(&irr[i].2)?;
        }
        let name = ordered.iter().map(|&i| irr[i].0.as_str()).collect::<Vec<_>>().join("×");
        out.push(CatalogEntry { name, signature: sig });
    }
    out.sort_by(|a, b| a.signature.dim.cmp(&b.signature.dim).then(a.name.cmp(&b.name)));
    Ok(out)
}

/// Known root systems and their direct sums up to rank 4.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| build_catalog().expect("catalog presets are valid root systems"))
}

/// Catalog name for a signature, or `"unrecognized"`.
pub fn identify(sig: &Signature) -> Result<String> {
    for entry in catalog() {
        if entry.signature.matches(sig)? {
            return Ok(entry.name.clone());
        }
    }
    Ok("unrecognized".to_string())
}

/// Place root systems in mutually orthogonal coordinate blocks.
pub fn direct_sum(parts: &[RootSystem]) -> Result<RootSystem> {
    let (first, rest) = parts.split_first().ok_or(Error::ZeroRoot)?;
    let mut field = first.field();
    for p in rest {
        field = field.join(&p.field())?;
    }
    let blocks = parts.iter().map(|p| p.embed(field)).collect::<Result<Vec<_>>>()?;
    let dim: usize = blocks.iter().map(RootSystem::dim).sum();
    if dim > 4 {
        return Err(Error::UnsupportedDimension(dim));
    }
    let mut roots = Vec::new();
    let mut offset = 0;
    for b in &blocks {
        for r in b.roots() {
            let mut coords = vec![Scalar::zero(field); dim];
            coords[offset..offset + b.dim()].clone_from_slice(r.coords());
            roots.push(VecE::new(coords)?);
        }
        offset += b.dim();
    }
    let name = parts.iter().map(RootSystem::name).collect::<Vec<_>>().join("⊕");
    RootSystem::new(roots, Some(name.clone()), Provenance::Preset(name))
}

/// Order of the group generated by the reflections of `phi`, computed by
/// closing root permutations.
pub fn coxeter_order(phi: &RootSystem, cap: usize) -> Result<usize> {
    let roots = phi.roots();
    let index = |v: &VecE| roots.binary_search(v).ok();
    let mut gens: Vec<Vec<u16>> = Vec::new();
    for (i, a) in roots.iter().enumerate() {
        let neg = index(&a.neg()?).ok_or_else(|| Error::NotARootSystem(format!("-{a} missing")))?;
        if neg < i {
            continue;
        }
        let m = Mirror::new(a)?;
        let perm = roots
            .iter()
            .map(|b| {
                let img = m.apply(b)?;
                index(&img)
                    .map(|k| k as u16)
                    .ok_or_else(|| Error::NotARootSystem(format!("s_{a}({b}) = {img} missing")))
            })
            .collect::<Result<Vec<_>>>()?;
        gens.push(perm);
    }
    let identity: Vec<u16> = (0..roots.len() as u16).collect();
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for g in &gens {
                let q: Vec<u16> = p.iter().map(|&k| g[k as usize]).collect();
                if !seen.contains(&q) {
                    if seen.len() >= cap {
                        return Err(Error::ClosureCapExceeded(cap));
                    }
                    seen.insert(q.clone());
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len())
}

/// Attempts at a generic linear functional before giving up.
pub const FUNCTIONAL_ATTEMPTS: usize = 16;

fn functional(v: &VecE, t: Rational) -> Result<Scalar> {
    let mut acc = Scalar::zero(v.field());
    let mut w = Rational::ONE;
    for c in v.coords() {
        acc = acc.add(&c.mul_rational(&w)?)?;
        w = w.mul(&t)?;
    }
    Ok(acc)
}

/// Simple roots for the positive system cut out by a generic functional
/// `(1, t, t², ...)`: those positive roots whose reflection permutes the
/// other positive roots.
pub fn simple_roots_of(phi: &RootSystem) -> Result<Vec<VecE>> {
    for attempt in 0..FUNCTIONAL_ATTEMPTS {
        let t = Rational::new(1, 7 + 2 * attempt as i64)?;
        let values = phi
            .roots()
            .iter()
            .map(|r| functional(r, t).map(|s| s.sign()))
            .collect::<Result<Vec<_>>>()?;
        if values.contains(&0) {
            continue;
        }
        let positive: Vec<&VecE> = phi
            .roots()
            .iter()
            .zip(&values)
            .filter(|(_, &s)| s > 0)
            .map(|(r, _)| r)
            .collect();
        let mut simple = Vec::new();
        'candidates: for a in &positive {
            let m = Mirror::new(a)?;
            for b in &positive {
                if a == b {
                    continue;
                }
                if functional(&m.apply(b)?, t)?.sign() <= 0 {
                    continue 'candidates;
                }
            }
            simple.push((*a).clone());
        }
        return Ok(simple);
    }
    Err(Error::DegenerateFunctional(FUNCTIONAL_ATTEMPTS))
}

/// Largest `m` tried when reading angles `π/m`.
pub const MAX_COXETER_LABEL: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    entries: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.entries
    }

    /// Off-diagonal labels `m > 2` (the Coxeter graph edges), sorted.
    pub fn edge_labels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for i in 0..self.rank() {
            for j in i + 1..self.rank() {
                if self.entries[i][j] > 2 {
                    out.push(self.entries[i][j]);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|m| format!("{m:>2}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `cos²(π/m) = (2 + 2cos(2π/m)) / 4`
fn cos_sq_pi_over(m: u32) -> Result<Scalar> {
    let field = Field::real_cyclotomic(m)?;
    Scalar::two_cos(1, m, field)?
        .add(&Scalar::int(2, field))?
        .mul_rational(&Rational::new(1, 4)?)
}

/// Coxeter matrix of a list of simple roots, read from the angles between
/// them.
pub fn coxeter_matrix(simple: &[VecE]) -> Result<CoxeterMatrix> {
    let n = simple.len();
    let mut entries = vec![vec![1u32; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (&simple[i], &simple[j]);
            let ip = a.dot(b)?;
            let label = if ip.is_zero() {
                2
            } else {
                let c = ip.square()?.div(&a.norm_sq()?.mul(&b.norm_sq()?)?)?;
                let mut found = None;
                if ip.sign() < 0 {
                    for m in 3..=MAX_COXETER_LABEL {
                        if c.same_value(&cos_sq_pi_over(m)?)? {
                            found = Some(m);
                            break;
                        }
                    }
                }
                found.ok_or_else(|| Error::UnknownAngle(format!("{a} and {b}: cos² = {c}")))?
            };
            entries[i][j] = label;
            entries[j][i] = label;
        }
    }
    Ok(CoxeterMatrix { entries })
}
