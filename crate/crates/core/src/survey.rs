//! Induction of every rank-3 catalog input, with the check that none of the
//! induced systems has the signature of `I2(4) ⊕ A1 ⊕ A1`.

use std::fmt;

use crate::classify::{direct_sum, identify, signature, Signature};
use crate::error::Result;
use crate::presets;
use crate::roots::DEFAULT_ROOT_CAP;
use crate::spinor::{induce_4d_with_group, DEFAULT_ROTOR_CAP};

#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub input: String,
    pub dim: usize,
    pub root_count: usize,
    pub spinor_order: usize,
    pub induced_name: String,
    pub axioms_ok: bool,
    pub induced_signature: Signature,
}

#[derive(Clone, Debug)]
pub struct SurveyTable {
    pub rows: Vec<SurveyRow>,
    pub counterexample: Signature,
    /// Inputs whose induced signature equals the counterexample's.
    pub counterexample_hits: Vec<String>,
}

impl SurveyTable {
    pub fn counterexample_absent(&self) -> bool {
        self.counterexample_hits.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("input,dim,root_count,spinor_order,induced_name,axioms_ok\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.input, r.dim, r.root_count, r.spinor_order, r.induced_name, r.axioms_ok
            ));
        }
        out
    }
}

impl fmt::Display for SurveyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header = ["input", "dim", "root_count", "spinor_order", "induced_name", "axioms_ok"];
        let cells: Vec<[String; 6]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.input.clone(),
                    r.dim.to_string(),
                    r.root_count.to_string(),
                    r.spinor_order.to_string(),
                    r.induced_name.clone(),
                    if r.axioms_ok { "pass" } else { "FAIL" }.to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(|h| h.chars().count());
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |f: &mut fmt::Formatter<'_>, row: &[&str]| -> fmt::Result {
            let padded: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            writeln!(f, "{}", padded.join("  ").trim_end())
        };
        line(f, &header)?;
        for row in &cells {
            line(f, &row.iter().map(String::as_str).collect::<Vec<_>>())?;
        }
        if self.counterexample_absent() {
            write!(f, "I2(4)×A1×A1 signature: absent from all induced systems")
        } else {
            write!(f, "I2(4)×A1×A1 signature: FOUND for {}", self.counterexample_hits.join(", "))
        }
    }
}

/// Signature of `I2(4) ⊕ A1 ⊕ A1`, built from the actual direct sum.
pub fn counterexample_signature() -> Result<Signature> {
    let a1 = presets::a1()?.root_system(DEFAULT_ROOT_CAP)?;
    let b2 = presets::dihedral(4)?.root_system(DEFAULT_ROOT_CAP)?;
    signature(&direct_sum(&[b2, a1.clone(), a1])?)
}

pub fn survey() -> Result<SurveyTable> {
    survey_with_caps(DEFAULT_ROOT_CAP, DEFAULT_ROTOR_CAP)
}

pub fn survey_with_caps(root_cap: usize, rotor_cap: usize) -> Result<SurveyTable> {
    let counterexample = counterexample_signature()?;
    let mut rows = Vec::new();
    let mut hits = Vec::new();
    for preset in presets::rank3_catalog()? {
        let phi = preset.root_system(root_cap)?;
        let induced = induce_4d_with_group(&phi, rotor_cap)?;
        let sig = signature(&induced.system)?;
        if sig.matches(&counterexample)? {
            hits.push(preset.name().to_string());
        }
        rows.push(SurveyRow {
            input: preset.name().to_string(),
            dim: phi.dim(),
            root_count: phi.len(),
            spinor_order: induced.group.order(),
            induced_name: identify(&sig)?,
            axioms_ok: induced.report.passes(),
            induced_signature: sig,
        });
    }
    Ok(SurveyTable {
        rows,
        counterexample,
        counterexample_hits: hits,
    })
}
