//! Reading and writing root systems.
//!
//! JSON is the only exact format. A file looks like
//!
//! ```text
//! {"version":1,"dim":3,"disc":2,"roots":[[[1,1,0,1],[-1,1,0,1],[0,1,0,1]], ...]}
//! ```
//!
//! where each coordinate is the flat coefficient list of [`Scalar::to_flat`].
//! Fields other than ℚ(√d) use `"cyclotomic": m` for ℚ(2cos(2π/m)) instead
//! of `"disc"`. OFF and CSV are float renderings for viewers and plotting.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::roots::{Provenance, RootSystem};
use crate::scalar::Scalar;
use crate::vector::VecE;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Off,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "off" => Ok(Format::Off),
            "text" | "txt" => Ok(Format::Text),
            other => Err(Error::Format(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootFile {
    version: u32,
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    disc: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cyclotomic: Option<u32>,
    roots: Vec<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Provenance>,
}

pub fn to_json(phi: &RootSystem) -> Result<String> {
    let (disc, cyclotomic) = match phi.field() {
        Field::Quadratic(d) => (Some(d), None),
        Field::RealCyclotomic(m) => (None, Some(m)),
    };
    let file = RootFile {
        version: FORMAT_VERSION,
        dim: phi.dim(),
        disc,
        cyclotomic,
        roots: phi
            .roots()
            .iter()
            .map(|r| r.coords().iter().map(Scalar::to_flat).collect())
            .collect(),
        label: phi.label().map(str::to_string),
        provenance: Some(phi.provenance().clone()),
    };
    let mut s = serde_json::to_string(&file)?;
    s.push('\n');
    Ok(s)
}

/// Parse a JSON root file. `source` names the file when it carries no
/// provenance of its own.
pub fn from_json(text: &str, source: &str) -> Result<RootSystem> {
    let file: RootFile = serde_json::from_str(text)?;
    if file.version != FORMAT_VERSION {
        return Err(Error::Format(format!("unsupported version {}", file.version)));
    }
    let field = match (file.disc, file.cyclotomic) {
        (Some(d), None) => Field::quadratic(d)?,
        (None, Some(m)) => {
            let f = Field::real_cyclotomic(m)?;
            if f != Field::RealCyclotomic(m) {
                return Err(Error::InvalidField(format!(
                    "cyclotomic {m} is not canonical, write it as {f}"
                )));
            }
            f
        }
        _ => return Err(Error::Format("exactly one of \"disc\" and \"cyclotomic\" is required".into())),
    };
    let mut roots = Vec::with_capacity(file.roots.len());
    for (i, r) in file.roots.iter().enumerate() {
        if r.len() != file.dim {
            return Err(Error::Format(format!("root {i} has {} coordinates, expected {}", r.len(), file.dim)));
        }
        let coords = r.iter().map(|c| Scalar::from_flat(field, c)).collect::<Result<Vec<_>>>()?;
        roots.push(VecE::new(coords)?);
    }
    let provenance = file.provenance.unwrap_or_else(|| Provenance::File(source.to_string()));
    RootSystem::new(roots, file.label, provenance)
}

/// `{:.16e}` gives 17 significant digits, enough to round-trip binary64.
pub fn to_csv(phi: &RootSystem) -> String {
    let mut out = String::new();
    let header: Vec<String> = (1..=phi.dim()).map(|i| format!("x{i}")).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for r in phi.roots() {
        let cells: Vec<String> = r.to_f64().iter().map(|x| format!("{x:.16e}")).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Vertex-only OFF: one line per root, `dim` coordinates each.
pub fn to_off(phi: &RootSystem) -> String {
    let mut out = format!("OFF\n{} 0 0\n", phi.len());
    for r in phi.roots() {
        let cells: Vec<String> = r.to_f64().iter().map(|x| format!("{x:.16e}")).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn to_text(phi: &RootSystem) -> String {
    phi.to_string()
}

pub fn render(phi: &RootSystem, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(phi)?,
        Format::Csv => to_csv(phi),
        Format::Off => to_off(phi),
        Format::Text => to_text(phi),
    })
}

pub fn load(path: &std::path::Path) -> Result<RootSystem> {
    let text = std::fs::read_to_string(path)?;
    from_json(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::Preset;
    use crate::roots::DEFAULT_ROOT_CAP;

    fn sys(name: &str) -> RootSystem {
        Preset::by_name(name).unwrap().root_system(DEFAULT_ROOT_CAP).unwrap()
    }

    #[test]
    fn json_round_trip_is_bit_identical() {
        for name in ["a1xa1xa1", "a3", "b3", "h3", "i2-5", "i2-7", "f4"] {
            let phi = sys(name);
            let text = to_json(&phi).unwrap();
            let back = from_json(&text, "mem").unwrap();
            assert_eq!(back, phi, "{name}");
            assert_eq!(to_json(&back).unwrap(), text, "{name}");
        }
    }

    #[test]
    fn json_shape() {
        let text = to_json(&sys("a1")).unwrap();
        assert_eq!(
            text,
            "{\"version\":1,\"dim\":1,\"disc\":1,\"roots\":[[[-1,1,0,1]],[[1,1,0,1]]],\
             \"label\":\"A1\",\"provenance\":{\"preset\":\"A1\"}}\n"
        );
    }

    #[test]
    fn minimal_file_loads_with_file_provenance() {
        let phi = from_json(r#"{"version":1,"dim":2,"disc":2,"roots":[[[1,1,0,1],[0,1,0,1]]]}"#, "x.json").unwrap();
        assert_eq!(phi.provenance(), &Provenance::File("x.json".into()));
        assert_eq!(phi.field(), Field::Quadratic(2));
    }

    #[test]
    fn rejects_malformed_files() {
        for bad in [
            r#"{"version":2,"dim":1,"disc":1,"roots":[[[1,1,0,1]]]}"#,
            r#"{"version":1,"dim":2,"disc":1,"roots":[[[1,1,0,1]]]}"#,
            r#"{"version":1,"dim":1,"roots":[[[1,1,0,1]]]}"#,
            r#"{"version":1,"dim":1,"disc":4,"roots":[[[1,1,0,1]]]}"#,
            r#"{"version":1,"dim":1,"disc":1,"roots":[[[1,0,0,1]]]}"#,
            r#"{"version":1,"dim":1,"cyclotomic":8,"roots":[[[1,1,0,1]]]}"#,
            r#"{"version":1,"dim":1,"disc":1,"roots":[]}"#,
            "not json",
        ] {
            assert!(from_json(bad, "bad").is_err(), "{bad}");
        }
    }

    #[test]
    fn off_and_csv() {
        let phi = sys("h3");
        let off = to_off(&phi);
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("30 0 0"));
        assert_eq!(lines.count(), 30);
        let csv = to_csv(&sys("a1xa1xa1"));
        assert!(csv.starts_with("x1,x2,x3\n-1.0000000000000000e0,0.0000000000000000e0,"));
        for line in csv.lines().skip(1) {
            for cell in line.split(',') {
                let x: f64 = cell.parse().unwrap();
                assert_eq!(format!("{x:.16e}"), cell);
            }
        }
    }

    #[test]
    fn format_names() {
        assert_eq!("JSON".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
    }
}
