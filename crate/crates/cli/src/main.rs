use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

use rootspin_core::classify::{coxeter_matrix, coxeter_order, identify, signature, simple_roots_of};
use rootspin_core::io::{self, Format};
use rootspin_core::presets::{self, Preset};
use rootspin_core::roots::{close_under_reflections, rank, verify_root_axioms, DEFAULT_ROOT_CAP};
use rootspin_core::spinor::{check_self_dual, induce_2d, induce_4d_with_group, DEFAULT_ROTOR_CAP};
use rootspin_core::survey::survey_with_caps;
use rootspin_core::{Error, Provenance, RootSystem};

/// Exact root systems and their Clifford spinor inductions.
#[derive(Parser)]
#[command(name = "rootspin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<Format>,

    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Cap on closure sizes (overrides ROOTSPIN_CAP)
    #[arg(long, global = true)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Close a set of simple roots under reflections
    Roots(Source),
    /// Induce the spinor root system (rank 3 to 4, or rank 2 to 2)
    Induce(Source),
    /// Check the root system axioms
    Verify(Source),
    /// Signature, catalog name, Coxeter order and Coxeter matrix
    Classify(Source),
    /// Self-duality of the dihedral root system I2(n)
    Selfdual { n: u32 },
    /// Induce every rank-3 catalog input and check the non-existence claim
    Survey,
    /// Convert a source to another format without closing it
    Export(Source),
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["preset", "input"])))]
struct Source {
    /// Preset name, e.g. A3, H3, I2-5, A1xI2-4
    #[arg(long)]
    preset: Option<String>,

    /// JSON root system file
    #[arg(long)]
    input: Option<PathBuf>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Caps {
    roots: usize,
    rotors: usize,
    group: usize,
}

impl Caps {
    fn resolve(flag: Option<usize>) -> Result<Caps, String> {
        let env = match std::env::var("ROOTSPIN_CAP") {
            Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| format!("ROOTSPIN_CAP={v:?} is not a count"))?),
            Err(_) => None,
        };
        Ok(match flag.or(env) {
            Some(c) => Caps { roots: c, rotors: c, group: c },
            None => Caps {
                roots: DEFAULT_ROOT_CAP,
                rotors: DEFAULT_ROTOR_CAP,
                group: DEFAULT_ROTOR_CAP,
            },
        })
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

/// Load without closing: presets give their simple roots.
fn load_raw(src: &Source) -> Result<RootSystem, Failure> {
    match (&src.preset, &src.input) {
        (Some(name), None) => {
            let p = Preset::by_name(name)?;
            Ok(RootSystem::new(
                p.simple_roots().to_vec(),
                Some(p.name().to_string()),
                Provenance::Preset(p.name().to_string()),
            )?)
        }
        (None, Some(path)) => Ok(io::load(path)?),
        _ => Err(Failure::Usage("give exactly one of --preset and --input".into())),
    }
}

/// Presets are closed; files are taken as the full root set.
fn load_system(src: &Source, caps: &Caps) -> Result<RootSystem, Failure> {
    match &src.preset {
        Some(name) => Ok(Preset::by_name(name)?.root_system(caps.roots)?),
        None => load_raw(src),
    }
}

fn roots(src: &Source, caps: &Caps) -> Result<RootSystem, Failure> {
    let raw = load_raw(src)?;
    // an independent file is read as simple roots; a dependent one is
    // assumed to be a root set already
    if src.input.is_some() && rank(raw.roots())? < raw.len() {
        return Ok(raw);
    }
    let closed = close_under_reflections(raw.roots(), caps.roots)?;
    Ok(RootSystem::new(closed, raw.label().map(str::to_string), raw.provenance().clone())?)
}

fn classify_report(phi: &RootSystem, caps: &Caps) -> Result<String, Failure> {
    let sig = signature(phi)?;
    let mut out = format!("# {}\n", phi.name());
    out.push_str(&format!("signature: {sig}\n"));
    out.push_str(&format!("identified: {}\n", identify(&sig)?));
    out.push_str(&format!("coxeter order: {}\n", coxeter_order(phi, caps.group)?));
    let simple = simple_roots_of(phi)?;
    out.push_str("simple roots:\n");
    for r in &simple {
        out.push_str(&format!("  {r}\n"));
    }
    out.push_str("coxeter matrix:\n");
    for line in coxeter_matrix(&simple)?.to_string().lines() {
        out.push_str(&format!("  {line}\n"));
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let caps = Caps::resolve(cli.cap).map_err(Failure::Usage)?;
    let format = cli.format.unwrap_or(Format::Text);
    match &cli.command {
        Command::Roots(src) => Ok(io::render(&roots(src, &caps)?, format)?),
        Command::Induce(src) => {
            let phi = load_system(src, &caps)?;
            let induced = match phi.dim() {
                3 => induce_4d_with_group(&phi, caps.rotors)?.system,
                2 => induce_2d(&phi)?,
                d => return Err(Error::UnsupportedDimension(d).into()),
            };
            Ok(io::render(&induced, format)?)
        }
        Command::Verify(src) => {
            let phi = load_system(src, &caps)?;
            let report = verify_root_axioms(&phi)?;
            Ok(format!("# {} ({} vectors)\n{report}\n", phi.name(), phi.len()))
        }
        Command::Classify(src) => classify_report(&load_system(src, &caps)?, &caps),
        Command::Selfdual { n } => {
            let phi = presets::dihedral(*n)?.root_system(caps.roots)?;
            Ok(format!("{}\n", check_self_dual(&phi)?))
        }
        Command::Survey => {
            let table = survey_with_caps(caps.roots, caps.rotors)?;
            Ok(match format {
                Format::Csv => table.to_csv(),
                Format::Text => format!("{table}\n"),
                other => return Err(Failure::Usage(format!("survey supports text and csv, not {other:?}"))),
            })
        }
        Command::Export(src) => Ok(io::render(&load_raw(src)?, format)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let text = match run(&cli) {
        Ok(text) => text,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
