//! Command-line front end: a thin dispatcher over the library.
//!
//! Commands: `check`, `generate`, `enumerate`, `scan`, `bounds`,
//! `census`, `spectrum`, `certify`, `verify-theorems`.
//!
//! Exit codes: 0 = ran, 1 = usage or input error, 2 = a theorem-violation
//! detector fired. Reports never embed timestamps, so identical configs
//! produce byte-identical output. The `OPSPECTRA_CONFIG` environment
//! variable may name a JSON file overriding the numeric tolerances.

use crate::constructions::{Family, FamilySpec};
use crate::enumeration::{self, EnumFamily, EnumSpec, Objective};
use crate::graph::Graph;
use crate::io;
use crate::recognition;
use crate::report::{self, SuiteParams};
use crate::spectra::{self, BoundCertificate, BoundKind};
use crate::tol::Tolerances;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

/// A parsed invocation.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub command: String,
    pub positional: Vec<String>,
    pub flags: BTreeMap<String, String>,
    pub tolerances: Tolerances,
}

pub const USAGE: &str = "\
opspectra — structure and spectra of bipartite outerplanar graphs

USAGE:
  opspectra check FILE                          recognizer verdicts for a graph (json or .g6)
  opspectra generate --family F [--n N] [--s S] [--attach V --eps E]
                     [--emit json|dot|graph6] [--unchecked]
  opspectra enumerate --family F --n N [--iso|--labeled] [--cap K] [--override-caps]
  opspectra scan --family F --n N --objective max-rho|min-lambda [--ranked]
  opspectra census --family F --n A..B
  opspectra bounds --kind K --n N [--eps E]     closed-form bound value
  opspectra spectrum FILE                       eigenvalues of a graph file
  opspectra certify --poly C,C,... --r R [--y V,V,...] FILE
  opspectra verify-theorems --suite NAME [--n A..B] [--samples K] [--seed S]
                            [--format json|table] [--out FILE]

FAMILIES (generate): star cycle path quad-book g1 g2 h-case q ladder
FAMILIES (enumerate/scan/census): all-outerplanar bip-outerplanar maximal maximal2conn all-connected
BOUND KINDS: edge-most-even edge-most-odd max-two-connected pendant pendant-heavy star
SUITES: rowsum edgecount g1g2 hcases rotation floor star-extremal

Defaults: enumerate reduces to isomorphism classes (--labeled keeps the
full labeled census); order caps are 10 (augmentation families), 20
(dissection census), 8 (all-connected), overridable with --override-caps;
verify-theorems suite ranges default to the documented sweeps; --samples
defaults to 500 and --seed to 0x5eed. Tolerances come from the optional
JSON config named by OPSPECTRA_CONFIG (fields: residual, compare,
strict_margin, cert_slack).
";

/// Flags each command accepts; anything else is a usage error.
fn allowed_flags(command: &str) -> &'static [&'static str] {
    match command {
        "check" => &[],
        "generate" => &[
            "family",
            "n",
            "s",
            "attach",
            "eps",
            "emit",
            "unchecked",
            "out",
        ],
        "enumerate" => &[
            "family",
            "n",
            "iso",
            "labeled",
            "cap",
            "override-caps",
            "out",
        ],
        "scan" => &["family", "n", "objective", "ranked", "override-caps"],
        "census" => &["family", "n"],
        "bounds" => &["kind", "n", "eps"],
        "spectrum" => &[],
        "certify" => &["poly", "r", "y"],
        "verify-theorems" => &["suite", "n", "samples", "seed", "format", "out"],
        _ => &[],
    }
}

/// Parses argv (without the program name).
pub fn parse(args: &[String]) -> Result<ExperimentConfig> {
    if args.is_empty() {
        return Err(Error::BadInput("missing command".into()));
    }
    let command = args[0].clone();
    let known = [
        "check",
        "generate",
        "enumerate",
        "scan",
        "census",
        "bounds",
        "spectrum",
        "certify",
        "verify-theorems",
    ];
    if !known.contains(&command.as_str()) {
        return Err(Error::BadInput(format!("unknown command {command}")));
    }
    let mut positional = Vec::new();
    let mut flags = BTreeMap::new();
    let boolean_flags = ["unchecked", "iso", "labeled", "override-caps", "ranked"];
    let mut i = 1;
    while i < args.len() {
        let a = &args[i];
        if let Some(name) = a.strip_prefix("--") {
            if !allowed_flags(&command).contains(&name) {
                return Err(Error::BadInput(format!(
                    "unknown flag --{name} for {command}"
                )));
            }
            if boolean_flags.contains(&name) {
                flags.insert(name.to_string(), "true".to_string());
            } else {
                i += 1;
                let value = args
                    .get(i)
                    .ok_or_else(|| Error::BadInput(format!("--{name} needs a value")))?;
                flags.insert(name.to_string(), value.clone());
            }
        } else {
            positional.push(a.clone());
        }
        i += 1;
    }
    let tolerances = match std::env::var("OPSPECTRA_CONFIG") {
        Ok(path) => {
            let body = std::fs::read_to_string(&path)
                .map_err(|e| Error::BadInput(format!("config {path}: {e}")))?;
            Tolerances::from_config_str(&body)?
        }
        Err(_) => Tolerances::default(),
    };
    Ok(ExperimentConfig {
        command,
        positional,
        flags,
        tolerances,
    })
}

/// Executes a parsed config, printing its report to stdout.
pub fn run(config: &ExperimentConfig) -> Result<()> {
    match config.command.as_str() {
        "check" => check_cmd(config),
        "generate" => generate_cmd(config),
        "enumerate" => enumerate_cmd(config),
        "scan" => scan_cmd(config),
        "census" => census_cmd(config),
        "bounds" => bounds_cmd(config),
        "spectrum" => spectrum_cmd(config),
        "certify" => certify_cmd(config),
        "verify-theorems" => verify_cmd(config),
        _ => unreachable!("parse validated the command"),
    }
}

fn load_graph(path: &str) -> Result<Graph> {
    let body =
        std::fs::read_to_string(path).map_err(|e| Error::BadInput(format!("{path}: {e}")))?;
    if path.ends_with(".g6") || !body.trim_start().starts_with('{') {
        io::from_graph6(&body)
    } else {
        io::from_json(&body)
    }
}

fn flag_usize(config: &ExperimentConfig, name: &str) -> Result<Option<usize>> {
    match config.flags.get(name) {
        None => Ok(None),
        Some(raw) => raw
            .parse()
            .map(Some)
            .map_err(|_| Error::BadInput(format!("--{name} expects an integer, got {raw}"))),
    }
}

fn need_flag<'a>(config: &'a ExperimentConfig, name: &str) -> Result<&'a str> {
    config
        .flags
        .get(name)
        .map(String::as_str)
        .ok_or_else(|| Error::BadInput(format!("missing --{name}")))
}

fn parse_range(raw: &str) -> Result<(usize, usize)> {
    if let Some((a, b)) = raw.split_once("..") {
        let lo = a
            .parse()
            .map_err(|_| Error::BadInput(format!("bad range {raw}")))?;
        let hi = b
            .trim_start_matches('=')
            .parse()
            .map_err(|_| Error::BadInput(format!("bad range {raw}")))?;
        Ok((lo, hi))
    } else {
        let n = raw
            .parse()
            .map_err(|_| Error::BadInput(format!("bad range {raw}")))?;
        Ok((n, n))
    }
}

fn enum_family(raw: &str) -> Result<EnumFamily> {
    Ok(match raw {
        "all-outerplanar" => EnumFamily::AllConnectedOuterplanar,
        "bip-outerplanar" => EnumFamily::BipartiteOuterplanar,
        "maximal" => EnumFamily::MaximalBipOuterplanar,
        "maximal2conn" => EnumFamily::Maximal2ConnBipOuterplanar,
        "all-connected" => EnumFamily::AllConnected,
        other => {
            return Err(Error::BadInput(format!(
                "unknown enumeration family {other}"
            )))
        }
    })
}

#[derive(Serialize)]
struct CheckReport {
    outerplanar: bool,
    bipartite: bool,
    maximal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    structure: Option<StructureReport>,
}

#[derive(Serialize)]
struct StructureReport {
    kind: recognition::StructureKind,
    blocks: Vec<io::GraphJson>,
    block_vertices: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    pendant_roots: BTreeMap<usize, usize>,
    ebo_pairs: Vec<(usize, usize)>,
}

fn check_cmd(config: &ExperimentConfig) -> Result<()> {
    let path = config
        .positional
        .first()
        .ok_or_else(|| Error::BadInput("check needs a graph file".into()))?;
    let g = load_graph(path)?;
    let outerplanar = recognition::is_outerplanar_checked(&g).or_else(|e| match e {
        // beyond the minor-search cap only the structural route runs
        Error::CapExceeded { .. } => Ok(recognition::is_outerplanar(&g)),
        other => Err(other),
    })?;
    let bipartite = g.bipartition().is_some();
    let maximal = if outerplanar && bipartite {
        recognition::is_maximal_bip_outerplanar(&g)?
    } else {
        false
    };
    let structure = if maximal {
        let s = recognition::structural_decompose(&g)?;
        Some(StructureReport {
            kind: s.kind,
            blocks: s.blocks.iter().map(io::GraphJson::from_graph).collect(),
            block_vertices: s.block_vertices,
            cut_vertices: s.cut_vertices,
            pendant_roots: s.pendant_roots,
            ebo_pairs: s.ebo_pairs.into_iter().collect(),
        })
    } else {
        None
    };
    let report = CheckReport {
        outerplanar,
        bipartite,
        maximal,
        structure,
    };
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serializes")
    );
    Ok(())
}

fn generate_cmd(config: &ExperimentConfig) -> Result<()> {
    let family = match need_flag(config, "family")? {
        "star" => Family::Star,
        "cycle" => Family::Cycle,
        "path" => Family::Path,
        "quad-book" => Family::QuadBook,
        "g1" => Family::G1,
        "g2" => Family::G2,
        "h-case" => Family::HCase,
        "q" => Family::Q,
        "ladder" => Family::Ladder,
        other => return Err(Error::BadInput(format!("unknown family {other}"))),
    };
    let spec = FamilySpec {
        family,
        n: flag_usize(config, "n")?,
        s: flag_usize(config, "s")?,
        attach: flag_usize(config, "attach")?,
        eps: flag_usize(config, "eps")?,
        unchecked: config.flags.contains_key("unchecked"),
    };
    let g = spec.build()?;
    let emitted = match config
        .flags
        .get("emit")
        .map(String::as_str)
        .unwrap_or("json")
    {
        "json" => io::to_json(&g),
        "dot" => match crate::embedding::embed(&g) {
            Ok(e) => io::embedding_to_dot(&e),
            Err(_) => io::to_dot(&g),
        },
        "graph6" => io::to_graph6(&g)?,
        other => return Err(Error::BadInput(format!("unknown emit format {other}"))),
    };
    match config.flags.get("out") {
        Some(path) => std::fs::write(path, emitted.as_bytes())
            .map_err(|e| Error::BadInput(format!("{path}: {e}")))?,
        None => println!("{emitted}"),
    }
    Ok(())
}

fn enumerate_cmd(config: &ExperimentConfig) -> Result<()> {
    let family = enum_family(need_flag(config, "family")?)?;
    let n = flag_usize(config, "n")?.ok_or_else(|| Error::BadInput("missing --n".into()))?;
    if config.flags.contains_key("iso") && config.flags.contains_key("labeled") {
        return Err(Error::BadInput(
            "--iso and --labeled are mutually exclusive".into(),
        ));
    }
    let mut spec = EnumSpec::new(family, n);
    // isomorphism reduction is the default; --iso spells it out,
    // --labeled keeps the full labeled census
    spec.iso_reduce = !config.flags.contains_key("labeled");
    if let Some(cap) = flag_usize(config, "cap")? {
        spec.cap = cap;
    }
    spec.allow_over_limit = config.flags.contains_key("override-caps");
    let result = enumeration::enumerate(&spec)?;
    // JSON lines, one graph per line, so partial output survives interrupts
    let mut lines = String::new();
    for g in &result.graphs {
        lines.push_str(&io::to_json(g));
        lines.push('\n');
    }
    if result.truncated {
        lines.push_str("{\"truncated\":true}\n");
    }
    match config.flags.get("out") {
        Some(path) => std::fs::write(path, lines.as_bytes())
            .map_err(|e| Error::BadInput(format!("{path}: {e}")))?,
        None => print!("{lines}"),
    }
    Ok(())
}

fn scan_cmd(config: &ExperimentConfig) -> Result<()> {
    let family = enum_family(need_flag(config, "family")?)?;
    let n = flag_usize(config, "n")?.ok_or_else(|| Error::BadInput("missing --n".into()))?;
    let objective = match need_flag(config, "objective")? {
        "max-rho" => Objective::MaxRho,
        "min-lambda" => Objective::MinLambda,
        other => return Err(Error::BadInput(format!("unknown objective {other}"))),
    };
    let mut spec = EnumSpec::new(family, n);
    spec.allow_over_limit = config.flags.contains_key("override-caps");
    let report = enumeration::extremal_scan(&spec, objective, config.flags.contains_key("ranked"))?;
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serializes")
    );
    Ok(())
}

fn census_cmd(config: &ExperimentConfig) -> Result<()> {
    let family = enum_family(need_flag(config, "family")?)?;
    let (lo, hi) = parse_range(need_flag(config, "n")?)?;
    let mut rows = Vec::new();
    for n in lo..=hi {
        if family == EnumFamily::Maximal2ConnBipOuterplanar && n % 2 == 1 {
            continue;
        }
        rows.push(enumeration::census_edge_counts(&EnumSpec::new(family, n))?);
    }
    println!(
        "{}",
        serde_json::to_string(&rows).expect("report serializes")
    );
    Ok(())
}

fn bounds_cmd(config: &ExperimentConfig) -> Result<()> {
    let kind = match need_flag(config, "kind")? {
        "edge-most-even" => BoundKind::EdgeMostEven,
        "edge-most-odd" => BoundKind::EdgeMostOdd,
        "max-two-connected" => BoundKind::MaxTwoConnected,
        "pendant" => BoundKind::PendantAttached,
        "pendant-heavy" => BoundKind::PendantHeavy,
        "star" => BoundKind::Star,
        other => return Err(Error::BadInput(format!("unknown bound kind {other}"))),
    };
    let n = flag_usize(config, "n")?.ok_or_else(|| Error::BadInput("missing --n".into()))?;
    let eps = flag_usize(config, "eps")?.unwrap_or(0);
    let value = spectra::closed_form_bound(kind, n, eps)?;
    #[derive(Serialize)]
    struct BoundReport {
        kind: BoundKind,
        n: usize,
        eps: usize,
        value: f64,
    }
    println!(
        "{}",
        serde_json::to_string(&BoundReport {
            kind,
            n,
            eps,
            value
        })
        .expect("report serializes")
    );
    Ok(())
}

fn spectrum_cmd(config: &ExperimentConfig) -> Result<()> {
    let path = config
        .positional
        .first()
        .ok_or_else(|| Error::BadInput("spectrum needs a graph file".into()))?;
    let g = load_graph(path)?;
    let eigenvalues = spectra::all_eigenvalues(&g)?;
    let rho = spectra::spectral_radius(&g)?;
    let lambda = spectra::least_eigenvalue(&g)?;
    #[derive(Serialize)]
    struct SpectrumReport {
        rho: f64,
        lambda: f64,
        eigenvalues: Vec<f64>,
        residual: f64,
        disconnected: bool,
    }
    let report = SpectrumReport {
        rho: rho.value,
        lambda: lambda.value,
        eigenvalues,
        residual: rho.residual.max(lambda.residual),
        disconnected: rho.disconnected,
    };
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serializes")
    );
    Ok(())
}

fn certify_cmd(config: &ExperimentConfig) -> Result<()> {
    let path = config
        .positional
        .first()
        .ok_or_else(|| Error::BadInput("certify needs a graph file".into()))?;
    let g = load_graph(path)?;
    let poly: Vec<f64> = need_flag(config, "poly")?
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::BadInput(format!("bad coefficient {t}")))
        })
        .collect::<Result<_>>()?;
    let r: f64 = need_flag(config, "r")?
        .parse()
        .map_err(|_| Error::BadInput("--r expects a number".into()))?;
    let y: Vec<f64> = match config.flags.get("y") {
        Some(raw) => raw
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::BadInput(format!("bad test-vector entry {t}")))
            })
            .collect::<Result<_>>()?,
        None => vec![1.0; g.n()],
    };
    let cert = spectra::certify_bound(&g, BoundCertificate::new(poly, y, r))?;
    println!(
        "{}",
        serde_json::to_string(&cert).expect("report serializes")
    );
    Ok(())
}

fn verify_cmd(config: &ExperimentConfig) -> Result<()> {
    let suite = need_flag(config, "suite")?;
    let mut params = SuiteParams {
        tol: config.tolerances,
        ..SuiteParams::default()
    };
    if let Some(raw) = config.flags.get("n") {
        let (lo, hi) = parse_range(raw)?;
        params.n_lo = lo;
        params.n_hi = hi;
    }
    if let Some(samples) = flag_usize(config, "samples")? {
        params.samples = samples;
    }
    if let Some(seed) = config.flags.get("seed") {
        params.seed = seed
            .parse()
            .map_err(|_| Error::BadInput("--seed expects an integer".into()))?;
    }
    let suites: Vec<&str> = if suite == "all" {
        report::SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut all = Vec::new();
    for name in suites {
        all.push(report::run_suite(name, &params)?);
    }
    let rendered = match config
        .flags
        .get("format")
        .map(String::as_str)
        .unwrap_or("json")
    {
        "json" => {
            let mut s = serde_json::to_string(&all).expect("report serializes");
            s.push('\n');
            s
        }
        "table" => {
            let mut s = String::new();
            for rep in &all {
                s.push_str(&format!(
                    "suite {}: {}\n",
                    rep.suite,
                    if rep.pass { "PASS" } else { "FAIL" }
                ));
                for check in &rep.checks {
                    s.push_str(&format!(
                        "  [{}] {} — {}\n",
                        if check.pass { "ok" } else { "XX" },
                        check.name,
                        check.detail
                    ));
                }
            }
            s
        }
        other => return Err(Error::BadInput(format!("unknown format {other}"))),
    };
    match config.flags.get("out") {
        Some(path) => std::fs::write(path, rendered.as_bytes())
            .map_err(|e| Error::BadInput(format!("{path}: {e}")))?,
        None => print!("{rendered}"),
    }
    if all.iter().any(|r| !r.pass) {
        return Err(Error::TheoremViolation(
            "a verification suite failed".into(),
        ));
    }
    Ok(())
}
