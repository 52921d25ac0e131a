//! Command-line front end: single-point evaluations, grid scans, heatmaps
//! and the invariant suites. All numerics live in the library; this binary
//! parses flags, routes calls and formats output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 degenerate-state error (point mode).

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use spinent::scan::{Preset, ScanConfig, ScanMode};
use spinent::verify::{run_suite, Suite};
use spinent::{
    bounds, classify_case, complex_concurrence, concurrence_pure, density_matrix,
    direct_concurrence_sq, embedding, is_bell, mixture_quantities, oracle_concurrence,
    simplified_concurrence_sq, spectral_rank2, to_two_qubit, wootters_concurrence,
    EntangledScsParams, Error, RankTwoMixture, SpinJ,
};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "spinent",
    version,
    about = "Entangled spin coherent states: concurrence points, scans, heatmaps, invariant suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one parameter point and print everything as JSON.
    Point(PointArgs),
    /// Sweep the coherent amplitudes over a grid and emit CSV.
    Scan(ScanArgs),
    /// Render the concurrence column of a scan CSV as a binary PGM image.
    Heatmap(HeatmapArgs),
    /// Run the invariant suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Pure,
    Mixed,
}

#[derive(Args)]
struct PointArgs {
    #[arg(long, value_enum, default_value = "pure")]
    mode: Mode,
    /// Spin of subsystem 1 as a decimal half-integer (0.5, 1, 1.5, ...).
    #[arg(long, value_parser = parse_spin, default_value = "0.5")]
    j1: SpinJ,
    #[arg(long, value_parser = parse_spin, default_value = "0.5")]
    j2: SpinJ,
    /// Amplitude Z1, real ("0.5") or complex ("0.5+0.3i").
    #[arg(long, value_parser = parse_complex_arg, default_value = "1")]
    z1: Complex64,
    #[arg(long, value_parser = parse_complex_arg, default_value = "1")]
    z2: Complex64,
    /// Relative phase of the first (or only) component.
    #[arg(long, default_value_t = 0.0)]
    phi: f64,
    /// Relative phase of the second component (mixed mode).
    #[arg(long, default_value_t = 0.0)]
    phi2: f64,
    /// Weight of the first component (mixed mode).
    #[arg(long, default_value_t = 0.5)]
    p1: f64,
    /// Second-component amplitude Z1 (mixed mode).
    #[arg(long, value_parser = parse_complex_arg, default_value = "1")]
    z1b: Complex64,
    #[arg(long, value_parser = parse_complex_arg, default_value = "1")]
    z2b: Complex64,
}

#[derive(Args)]
struct ScanArgs {
    /// Start from a named reconstruction of the published scans.
    #[arg(long, value_parser = parse_preset)]
    preset: Option<Preset>,
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    #[arg(long, value_parser = parse_spin)]
    j1: Option<SpinJ>,
    #[arg(long, value_parser = parse_spin)]
    j2: Option<SpinJ>,
    #[arg(long)]
    phi: Option<f64>,
    #[arg(long)]
    phi2: Option<f64>,
    #[arg(long)]
    p1: Option<f64>,
    /// Fixed second-component amplitudes (mixed mode), real.
    #[arg(long)]
    z1b: Option<f64>,
    #[arg(long)]
    z2b: Option<f64>,
    #[arg(long)]
    zmin: Option<f64>,
    #[arg(long)]
    zmax: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    /// Output path; standard output when omitted.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Accepted for interface symmetry; scans are deterministic regardless.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct HeatmapArgs {
    /// Scan CSV to render.
    #[arg(long)]
    csv: std::path::PathBuf,
    /// Output PGM path.
    #[arg(long)]
    out: std::path::PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_suite, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

fn parse_spin(s: &str) -> Result<SpinJ, String> {
    let j: f64 = s.parse().map_err(|_| format!("invalid spin {s:?}"))?;
    SpinJ::from_f64(j).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| format!("unknown suite {s:?} (su2|pure|mixed|oracle|all)"))
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    Preset::from_name(s).ok_or_else(|| {
        format!(
            "unknown preset {s:?} (expected one of {})",
            Preset::ALL_NAMES.join("|")
        )
    })
}

/// Parse "re", "re+imi", "re-imi" or "imi"; exponent notation is allowed in
/// both parts ("1e-3+2e-4i").
fn parse_complex_arg(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    let bad = |s: &str| format!("invalid complex literal {s:?}");
    if let Some(body) = t.strip_suffix(['i', 'I']) {
        // Split at the last +/- that is not a leading sign or an exponent sign.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let b = bytes[k];
            if (b == b'+' || b == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = body[..k].parse().map_err(|_| bad(s))?;
                let im_str = &body[k..];
                let im: f64 = match im_str {
                    "+" => 1.0,
                    "-" => -1.0,
                    _ => im_str.parse().map_err(|_| bad(s))?,
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = match body {
                    "" => 1.0,
                    "-" => -1.0,
                    "+" => 1.0,
                    _ => body.parse().map_err(|_| bad(s))?,
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = t.parse().map_err(|_| bad(s))?;
        Ok(Complex64::new(re, 0.0))
    }
}

fn json_complex(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn json_f64(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn component_json(params: &EntangledScsParams) -> Result<Value, Error> {
    let emb = embedding(params)?;
    let s = to_two_qubit(params)?;
    let mut map = Map::new();
    map.insert("P1".into(), json!(emb.p1));
    map.insert("P2".into(), json!(emb.p2));
    map.insert("N".into(), json!(emb.n));
    map.insert("N1".into(), json!(emb.n1));
    map.insert("N2".into(), json!(emb.n2));
    map.insert(
        "amplitudes".into(),
        json!({
            "a": json_complex(s.a),
            "b": json_complex(s.b),
            "c": json_complex(s.c),
            "d": json_complex(s.d),
        }),
    );
    map.insert("concurrence".into(), json!(concurrence_pure(params)?));
    Ok(Value::Object(map))
}

fn cmd_point(args: &PointArgs) -> Result<Value, Error> {
    let comp1 = EntangledScsParams {
        j1: args.j1,
        j2: args.j2,
        z1: args.z1,
        z2: args.z2,
        phi: args.phi,
    };
    let mut map = Map::new();
    map.insert("j1".into(), json!(args.j1.j()));
    map.insert("j2".into(), json!(args.j2.j()));
    map.insert("z1".into(), json_complex(args.z1));
    map.insert("z2".into(), json_complex(args.z2));
    map.insert("phi".into(), json!(args.phi));

    match args.mode {
        Mode::Pure => {
            map.insert("mode".into(), json!("pure"));
            let emb = embedding(&comp1)?;
            let s = to_two_qubit(&comp1)?;
            map.insert("P1".into(), json!(emb.p1));
            map.insert("P2".into(), json!(emb.p2));
            map.insert("N".into(), json!(emb.n));
            map.insert("N1".into(), json!(emb.n1));
            map.insert("N2".into(), json!(emb.n2));
            map.insert(
                "amplitudes".into(),
                json!({
                    "a": json_complex(s.a),
                    "b": json_complex(s.b),
                    "c": json_complex(s.c),
                    "d": json_complex(s.d),
                }),
            );
            map.insert("concurrence".into(), json!(concurrence_pure(&comp1)?));
            map.insert(
                "oracle_concurrence".into(),
                json!(oracle_concurrence(&comp1)?),
            );
            map.insert(
                "is_bell".into(),
                json!(is_bell(&comp1, spinent::pure::DEFAULT_BELL_TOL)),
            );
        }
        Mode::Mixed => {
            map.insert("mode".into(), json!("mixed"));
            map.insert("phi2".into(), json!(args.phi2));
            map.insert("prob1".into(), json!(args.p1));
            map.insert("prob2".into(), json!(1.0 - args.p1));
            map.insert("z1b".into(), json_complex(args.z1b));
            map.insert("z2b".into(), json_complex(args.z2b));

            let comp2 = EntangledScsParams {
                j1: args.j1,
                j2: args.j2,
                z1: args.z1b,
                z2: args.z2b,
                phi: args.phi2,
            };
            let mixture = RankTwoMixture::new(comp1, comp2, args.p1, 1.0 - args.p1)
                .map_err(|e| match e {
                    Error::InvalidMixture { reason } => Error::InvalidConfig { reason },
                    other => other,
                })?;

            map.insert("comp1".into(), component_json(&comp1)?);
            map.insert("comp2".into(), component_json(&comp2)?);

            let rho = density_matrix(&mixture)?;
            let wootters = wootters_concurrence(&rho);
            let spectral = spectral_rank2(&rho)?;
            let spectral_sq = simplified_concurrence_sq(&spectral);
            let direct_sq = direct_concurrence_sq(&mixture)?;
            let b = bounds(&mixture)?;
            let q = mixture_quantities(&mixture)?;
            let (label, value) = classify_case(&mixture)?;

            map.insert("wootters".into(), json!(wootters));
            map.insert("concurrence_sq_spectral".into(), json!(spectral_sq));
            map.insert("concurrence_sq_direct".into(), json!(direct_sq));
            map.insert(
                "concurrence".into(),
                json!(direct_sq.max(0.0).sqrt().clamp(0.0, 1.0)),
            );
            map.insert("mu".into(), json!([spectral.mu1, spectral.mu2]));
            map.insert(
                "bounds".into(),
                json!({ "lower": b.lower, "upper": b.upper }),
            );
            map.insert(
                "case".into(),
                json!({ "label": label.as_str(), "value": json_f64(value) }),
            );
            map.insert("C1".into(), json!(q.c1));
            map.insert("C2".into(), json!(q.c2));
            map.insert("cplus".into(), json_complex(q.cplus));
            map.insert("cminus".into(), json_complex(q.cminus));
            let s1 = to_two_qubit(&comp1)?;
            let s2 = to_two_qubit(&comp2)?;
            map.insert("c1_complex".into(), json_complex(complex_concurrence(&s1)));
            map.insert("c2_complex".into(), json_complex(complex_concurrence(&s2)));
        }
    }
    Ok(Value::Object(map))
}

fn build_scan_config(args: &ScanArgs) -> Result<ScanConfig, String> {
    let mut cfg = match args.preset {
        Some(preset) => preset.config(),
        None => Preset::Fig1a.config(),
    };
    if let Some(mode) = args.mode {
        cfg.mode = match mode {
            Mode::Pure => ScanMode::Pure,
            Mode::Mixed => ScanMode::Mixed,
        };
    }
    if let Some(j1) = args.j1 {
        cfg.two_j1 = j1.two_j();
    }
    if let Some(j2) = args.j2 {
        cfg.two_j2 = j2.two_j();
    }
    if let Some(phi) = args.phi {
        cfg.phi = phi;
    }
    if let Some(phi2) = args.phi2 {
        cfg.phi2 = phi2;
    }
    if let Some(p1) = args.p1 {
        cfg.p1 = p1;
    }
    if let Some(z1b) = args.z1b {
        cfg.z1b = z1b;
    }
    if let Some(z2b) = args.z2b {
        cfg.z2b = z2b;
    }
    if let Some(zmin) = args.zmin {
        cfg.zmin = zmin;
    }
    if let Some(zmax) = args.zmax {
        cfg.zmax = zmax;
    }
    if let Some(steps) = args.steps {
        cfg.steps = steps;
    }
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn cmd_scan(args: &ScanArgs) -> Result<u8, String> {
    let cfg = build_scan_config(args)?;
    let (csv, degenerate) =
        spinent::scan::scan_csv(&cfg).map_err(|e| e.to_string())?;
    if degenerate > 0 {
        eprintln!("{degenerate} degenerate grid points left empty");
    }
    match &args.out {
        Some(path) => std::fs::write(path, csv)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => {
            print!("{csv}");
            std::io::stdout().flush().map_err(|e| e.to_string())?;
        }
    }
    Ok(0)
}

fn cmd_heatmap(args: &HeatmapArgs) -> Result<(), String> {
    let csv = std::fs::read_to_string(&args.csv)
        .map_err(|e| format!("cannot read {}: {e}", args.csv.display()))?;
    let pgm = spinent::scan::heatmap_from_csv(&csv).map_err(|e| e.to_string())?;
    std::fs::write(&args.out, pgm)
        .map_err(|e| format!("cannot write {}: {e}", args.out.display()))
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let reports = run_suite(args.suite, args.seed);
    let mut all_passed = true;
    for r in &reports {
        let verdict = if r.passed { "PASS" } else { "FAIL" };
        all_passed &= r.passed;
        let note = if r.note.is_empty() {
            String::new()
        } else {
            format!("  [{}]", r.note)
        };
        println!(
            "{verdict}  {:<38} cases={:<6} max_residual={:.3e}{note}",
            r.id, r.cases, r.max_residual
        );
    }
    println!(
        "{} checks, {} failed (seed {})",
        reports.len(),
        reports.iter().filter(|r| !r.passed).count(),
        args.seed
    );
    if all_passed {
        0
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Point(args) => match cmd_point(args) {
            Ok(value) => {
                println!("{}", serde_json::to_string_pretty(&value).expect("finite JSON"));
                0
            }
            Err(Error::DegenerateState { denom }) => {
                eprintln!("degenerate state: 1 + cos(phi) P1 P2 = {denom:.3e}");
                EXIT_DEGENERATE
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_USAGE
            }
        },
        Command::Scan(args) => match cmd_scan(args) {
            Ok(code) => code,
            Err(msg) => {
                eprintln!("error: {msg}");
                EXIT_USAGE
            }
        },
        Command::Heatmap(args) => match cmd_heatmap(args) {
            Ok(()) => 0,
            Err(msg) => {
                eprintln!("error: {msg}");
                EXIT_USAGE
            }
        },
        Command::Verify(args) => cmd_verify(args),
    };
    ExitCode::from(code)
}
