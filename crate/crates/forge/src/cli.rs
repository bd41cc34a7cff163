//! Argument parsing and the subcommands.  Every successful command prints
//! one JSON document carrying `"schema": 1` on standard output and exits
//! with 0.  Domain errors print `{"schema": 1, "error": {kind, message}}`
//! on standard error and exit with 1; usage errors exit with 2.
//! `verify-hss` and `sweep` print their report and exit with 1 when a
//! check fails.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use origami_forge_core::freegroup::IntMatrix2;
use origami_forge_core::homology::{
    f2_independent, twist_membership_certificate, twist_membership_certificate_direction, H1Model, TwistCertificate,
};
use origami_forge_core::hss::{find_hss, HssRound};
use origami_forge_core::moebius::{Classification, FixedPointData, MoebiusMap, TOLERANCE};
use origami_forge_core::origami::{Origami, OrigamiCurve};
use origami_forge_core::subgroup::CosetAction;
use serde::Serialize;
use serde_json::{json, Value};

use crate::fixtures::{fixture_dir, lookup, registry, resolve};
use crate::io::{format_origami, read_origami};
use crate::sweep::{run_sweep, SweepConfig};
use crate::ForgeError;

/// Version of all JSON outputs.
pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "origami-forge",
    version,
    about = "Cut systems, Veech group membership and homology certificates for origamis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cylinders, vertex orbits and genus of an origami.
    Analyze {
        /// Origami file, or the name of a built-in fixture.
        file: PathBuf,
    },
    /// A horizontal Schottky cut system.
    Hss {
        file: PathBuf,
        /// Write each round of the list machine to standard error as JSON lines.
        #[arg(long)]
        trace: bool,
    },
    /// Checks the cut system: closed, conjugate-horizontal, independent mod 2.
    VerifyHss { file: PathBuf },
    /// Veech group membership of a matrix in SL(2, Z).
    VeechCheck {
        file: PathBuf,
        /// Entries `a,b,c,d` of the matrix (a b; c d).
        #[arg(long, value_parser = parse_matrix, allow_hyphen_values = true)]
        matrix: IntMatrix2,
    },
    /// Shears the origami so that direction (p, q) becomes vertical.
    Shear {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// First homology, intersection form and twist certificates.
    Homology {
        file: PathBuf,
        /// Include the certificate of the horizontal multi-twist.
        #[arg(long)]
        twist: bool,
        /// Certify a parabolic element with eigenvector `p,q` instead.
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        direction: Option<(i64, i64)>,
    },
    /// Classification and fixed-point data of a Möbius map; entries as `re,im`.
    Moebius {
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        a: Complex64,
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        b: Complex64,
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        c: Complex64,
        #[arg(value_parser = parse_complex, allow_hyphen_values = true)]
        d: Complex64,
    },
    /// Lists the built-in fixtures.
    Fixtures,
    /// Runs the randomized property suite.
    Sweep {
        #[arg(long, default_value_t = 12)]
        max_d: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_ints(text: &str, n: usize) -> Result<Vec<i64>, String> {
    let v: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let v = v.map_err(|e| format!("{text:?}: {e}"))?;
    if v.len() != n {
        return Err(format!("{text:?}: expected {n} comma-separated integers"));
    }
    Ok(v)
}

fn parse_matrix(text: &str) -> Result<IntMatrix2, String> {
    let v = parse_ints(text, 4)?;
    Ok(IntMatrix2::new(v[0], v[1], v[2], v[3]))
}

fn parse_pair(text: &str) -> Result<(i64, i64), String> {
    let v = parse_ints(text, 2)?;
    Ok((v[0], v[1]))
}

fn parse_complex(text: &str) -> Result<Complex64, String> {
    let (re, im) = text.split_once(',').ok_or_else(|| format!("{text:?}: expected `re,im`"))?;
    let re: f64 = re.trim().parse().map_err(|e| format!("{text:?}: {e}"))?;
    let im: f64 = im.trim().parse().map_err(|e| format!("{text:?}: {e}"))?;
    Ok(Complex64::new(re, im))
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok((value, ok)) => {
            let text = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            let _ = writeln!(out, "{text}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let value = json!({"schema": SCHEMA, "error": {"kind": e.kind(), "message": e.to_string()}});
            let _ = writeln!(err, "{value}");
            1
        }
    }
}

/// Loads an origami file (resolved against the fixture directory) or a
/// built-in fixture by name.
pub fn load_origami(path: &Path) -> Result<Origami, ForgeError> {
    let resolved = resolve(path);
    if !resolved.exists() {
        if let Some(o) = path.to_str().and_then(lookup) {
            return Ok(o);
        }
    }
    read_origami(&resolved)
}

fn curve_json(c: &OrigamiCurve) -> Value {
    json!({"start": c.start, "word": c.word.to_string()})
}

/// Executes a command; the flag is false when a verification failed.
fn execute(command: Command, err: &mut dyn Write) -> Result<(Value, bool), ForgeError> {
    match command {
        Command::Analyze { file } => Ok((analyze(&load_origami(&file)?)?, true)),
        Command::Hss { file, trace } => {
            let o = load_origami(&file)?;
            let r = find_hss(&o)?;
            if trace {
                for (k, round) in r.rounds.iter().enumerate() {
                    let _ = writeln!(err, "{}", trace_line(k, round));
                }
            }
            let cuts: Vec<usize> = r.step1_cuts.iter().map(|c| c + 1).collect();
            let curves: Vec<Value> = r.curves.iter().map(curve_json).collect();
            Ok((json!({"schema": SCHEMA, "genus": r.genus, "step1_cuts": cuts, "curves": curves}), true))
        }
        Command::VerifyHss { file } => {
            let o = load_origami(&file)?;
            let v = verify_hss(&o)?;
            let ok = v["passed"].as_bool().unwrap_or(false);
            Ok((v, ok))
        }
        Command::VeechCheck { file, matrix } => {
            let o = load_origami(&file)?;
            let witness = CosetAction::new(&o).veech_witness(matrix)?;
            Ok((
                json!({"schema": SCHEMA, "matrix": matrix.entries(), "member": witness.is_some(), "witness_square": witness}),
                true,
            ))
        }
        Command::Shear { file, p, q } => {
            let o = load_origami(&file)?;
            let (s, change) = o.shear(p, q)?;
            let entries: Vec<String> = change.entries.iter().map(|r| r.to_string()).collect();
            Ok((
                json!({
                    "schema": SCHEMA,
                    "direction": [p, q],
                    "d": s.d(),
                    "p1": s.p1().to_string(),
                    "p2": s.p2().to_string(),
                    "genus": s.genus()?,
                    "change": entries,
                    "origami": format_origami(&s),
                }),
                true,
            ))
        }
        Command::Homology { file, twist, direction } => {
            let o = load_origami(&file)?;
            let model = H1Model::new(&o)?;
            let certificate: Option<TwistCertificate> = match direction {
                Some((p, q)) => Some(twist_membership_certificate_direction(&o, p, q)?),
                None if twist => Some(twist_membership_certificate(&o)?),
                None => None,
            };
            let ok = certificate.as_ref().is_none_or(|c| c.passed);
            Ok((
                json!({
                    "schema": SCHEMA,
                    "genus": model.genus,
                    "rank": model.rank(),
                    "intersection": model.intersection.to_rows(),
                    "certificate": certificate,
                }),
                ok,
            ))
        }
        Command::Moebius { a, b, c, d } => Ok((moebius(a, b, c, d)?, true)),
        Command::Fixtures => Ok((fixtures_listing()?, true)),
        Command::Sweep { max_d, count, seed } => {
            if max_d == 0 {
                return Err(ForgeError::Argument("--max-d must be at least 1".into()));
            }
            let report = run_sweep(&SweepConfig { max_d, count, seed });
            let ok = report.failed == 0;
            Ok((to_value(&report), ok))
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// The analysis document of an origami.
pub fn analyze(o: &Origami) -> Result<Value, ForgeError> {
    let cylinders: Vec<Vec<usize>> = o.cylinders().into_iter().map(|c| c.squares).collect();
    Ok(json!({
        "schema": SCHEMA,
        "d": o.d(),
        "p1": o.p1().to_string(),
        "p2": o.p2().to_string(),
        "cylinders": cylinders,
        "vertex_orbits": o.vertex_orbits(),
        "genus": o.genus()?,
        "horizontal_multiplier": o.horizontal_multiplier().0,
    }))
}

/// The verification document of the cut system of an origami.
pub fn verify_hss(o: &Origami) -> Result<Value, ForgeError> {
    let r = find_hss(o)?;
    let model = H1Model::new(o)?;
    let classes: Vec<Vec<i64>> = r.curves.iter().map(|c| model.class_of_curve(o, c)).collect::<Result<_, _>>()?;
    let curves: Vec<Value> = r
        .curves
        .iter()
        .map(|c| {
            json!({
                "start": c.start,
                "word": c.word.to_string(),
                "closed": o.is_closed(c),
                "conjugate_horizontal": c.word.is_conjugate_horizontal(),
            })
        })
        .collect();
    let independent = f2_independent(&classes);
    let passed = r.curves.len() == r.genus
        && r.curves.iter().all(|c| o.is_closed(c) && c.word.is_conjugate_horizontal())
        && independent;
    Ok(json!({
        "schema": SCHEMA,
        "genus": r.genus,
        "curves": curves,
        "classes": classes,
        "z2_independent": independent,
        "passed": passed,
    }))
}

fn trace_line(k: usize, round: &HssRound) -> Value {
    let pool: Vec<String> = round.pool.materialized().iter().map(|l| l.to_string()).collect();
    let events: Vec<Value> = round
        .history
        .events
        .iter()
        .map(|e| {
            let cancelled: Vec<String> = e.cancelled.iter().map(|l| l.to_string()).collect();
            json!({
                "accumulator": e.accumulator,
                "partner": e.partner,
                "label": e.label.to_string(),
                "cancelled": cancelled,
                "result": e.result,
                "list": e.result_list.to_string(),
            })
        })
        .collect();
    let chain: Vec<Value> = round
        .chain
        .pairs
        .iter()
        .map(|p| {
            json!({
                "from": p.from.to_string(),
                "to": p.to.to_string(),
                "half": p.half,
                "cylinder": p.cylinder + 1,
                "cyclic": p.cyclic,
            })
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "round": k,
        "pool": pool,
        "events": events,
        "merged": round.history.result.to_string(),
        "alpha": round.alpha.to_string(),
        "beta": round.beta.to_string(),
        "chain": chain,
        "curve": curve_json(&round.curve),
    })
}

fn complex_json(z: Complex64) -> Value {
    // Adding 0.0 turns a negative zero into a positive one.
    json!([z.re + 0.0, z.im + 0.0])
}

fn fixed_json(f: &FixedPointData) -> Value {
    json!({"z": complex_json(f.z), "w": complex_json(f.w), "lambda": complex_json(f.lambda)})
}

/// The Möbius document: normalized entries, classification and, for
/// loxodromic maps, fixed-point data (of the conjugated map when `c = 0`).
pub fn moebius(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Value, ForgeError> {
    let m = MoebiusMap::new(a, b, c, d)?;
    let class = m.classify();
    let mut doc = json!({
        "schema": SCHEMA,
        "map": [complex_json(m.a), complex_json(m.b), complex_json(m.c), complex_json(m.d)],
        "classification": class,
        "fixed_data": null,
    });
    if class == Classification::Loxodromic {
        let (work, h) = m.normalize_placement();
        let f = work.fixed_data()?;
        let back = MoebiusMap::from_fixed_data(&f)?;
        doc["fixed_data"] = fixed_json(&f);
        doc["conjugated"] = json!(!h.approx_eq(&MoebiusMap::identity(), TOLERANCE));
        doc["roundtrip"] = json!(back.approx_eq(&work, TOLERANCE));
    }
    Ok(doc)
}

/// The fixture listing.
pub fn fixtures_listing() -> Result<Value, ForgeError> {
    let dir = fixture_dir();
    let mut list = Vec::new();
    for f in registry() {
        let file = dir.join(format!("{}.ori", f.name));
        let lengths: Vec<usize> = f.origami.cylinders().iter().map(|c| c.len()).collect();
        list.push(json!({
            "name": f.name,
            "d": f.origami.d(),
            "genus": f.origami.genus()?,
            "cylinder_lengths": lengths,
            "file": file.exists().then(|| file.display().to_string()),
        }));
    }
    Ok(json!({"schema": SCHEMA, "fixtures": list}))
}
