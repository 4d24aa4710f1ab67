//! Command-line front end: solve `Δf = g` on the unit disk from boundary
//! data, measure geometric functionals of the reference mappings, and verify
//! the quantitative inequalities they satisfy.
//!
//! Exit codes: 0 when everything requested succeeded (for `verify`: every
//! checked bound held), 1 when a verified bound failed, 2 for configuration
//! or usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use disk_poisson::analysis::report::{self, sort_reports, VerificationReport};
use disk_poisson::analysis::spaces;
use disk_poisson::analysis::{run_suite, unit_source_reference, Suite, VerifyOptions};
use disk_poisson::geometry;
use disk_poisson::majorant::Majorant;
use disk_poisson::{
    BoundaryData, CatalogMap, DiskMap, DiskPoint, PoissonSolution, QuadratureConfig, SourceField,
};

#[derive(Parser)]
#[command(
    name = "disk-poisson-cli",
    version,
    about = "Disk mappings from boundary data and a source term: solve, measure, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate f = P[ψ] - G[g] and its first derivatives at a point
    Solve(SolveArgs),
    /// Measure a geometric functional of a reference mapping
    Measure(MeasureArgs),
    /// Check quantitative bounds on reference mappings and report margins
    Verify(VerifyArgs),
    /// List the reference mappings
    Catalog,
}

#[derive(Args)]
struct SolveArgs {
    /// Boundary data: zero | circle | circle-conj | affine:A,B (ψ = A e^{iθ} + B e^{-iθ})
    #[arg(long, default_value = "circle")]
    psi: String,
    /// Source term: zero | const:RE[,IM] | linear:C (g(w) = C·w)
    #[arg(long, default_value = "zero")]
    g: String,
    /// Evaluation point "x,y" inside the unit disk
    #[arg(long, default_value = "0,0")]
    at: String,
    /// Boundary samples (power of two)
    #[arg(long = "boundary-nodes", default_value_t = 2048)]
    boundary_nodes: usize,
    /// Step for the five-point Laplacian consistency check
    #[arg(long, default_value_t = 1e-3)]
    stencil: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Functional {
    Perimeter,
    RadialLength,
    Area,
    Qc,
    Bloch,
    Profile,
}

#[derive(Args)]
struct MeasureArgs {
    /// Reference mapping label, e.g. identity, scale:2, shear:0.5
    #[arg(long)]
    map: String,
    /// Quantity to measure
    #[arg(long, value_enum)]
    functional: Functional,
    /// Radius of the circle |z| = r (defaults to the map's evaluation cap)
    #[arg(long)]
    r: Option<f64>,
    /// Ray angle in radians, for radial-length
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    /// Angular/arc quadrature nodes
    #[arg(long, default_value_t = 2048)]
    nodes: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// Reference mapping label, or "all" for the default set
    #[arg(long)]
    map: Option<String>,
    /// thm1 | thm2 | thm3 | thm4 | lem21 | lem22 | isoperimetric | schwarz | all
    #[arg(long)]
    suite: Option<String>,
    /// Seed for the pair sampler
    #[arg(long)]
    seed: Option<u64>,
    /// Write the full report list to this file
    #[arg(long)]
    out: Option<PathBuf>,
    /// Serialization format for --out
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Margin slack before a bound counts as failed
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long = "boundary-nodes")]
    boundary_nodes: Option<usize>,
    #[arg(long = "radial-nodes")]
    radial_nodes: Option<usize>,
    /// TOML file with the same keys; command-line flags win
    #[arg(long)]
    config: Option<PathBuf>,
}

/// File form of the verify options. Keys mirror the long flags.
#[derive(Default, serde::Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct VerifyConfigFile {
    map: Option<String>,
    suite: Option<String>,
    seed: Option<u64>,
    out: Option<PathBuf>,
    format: Option<String>,
    tolerance: Option<f64>,
    boundary_nodes: Option<usize>,
    radial_nodes: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(args) => run_solve(args).map(|()| true),
        Command::Measure(args) => run_measure(args).map(|()| true),
        Command::Verify(args) => run_verify(args),
        Command::Catalog => run_catalog().map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn parse_point(s: &str) -> Result<Complex64> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        bail!("expected a point as \"x,y\", got {s:?}");
    }
    let x: f64 = parts[0].trim().parse().with_context(|| format!("bad x coordinate {:?}", parts[0]))?;
    let y: f64 = parts[1].trim().parse().with_context(|| format!("bad y coordinate {:?}", parts[1]))?;
    Ok(Complex64::new(x, y))
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.len() {
        1 => Ok(Complex64::new(parts[0].trim().parse()?, 0.0)),
        2 => Ok(Complex64::new(parts[0].trim().parse()?, parts[1].trim().parse()?)),
        _ => bail!("expected RE or RE,IM, got {s:?}"),
    }
}

fn boundary_preset(spec: &str, n: usize) -> Result<BoundaryData> {
    let data = match spec {
        "zero" => BoundaryData::zero(n)?,
        "circle" => BoundaryData::from_fn(n, |t| Complex64::from_polar(1.0, t))?,
        "circle-conj" => BoundaryData::from_fn(n, |t| Complex64::from_polar(1.0, -t))?,
        other => {
            let Some(rest) = other.strip_prefix("affine:") else {
                bail!("unknown boundary preset {other:?}; expected zero, circle, circle-conj, or affine:A,B");
            };
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 2 {
                bail!("affine preset needs two real coefficients, got {rest:?}");
            }
            let a: f64 = parts[0].trim().parse()?;
            let b: f64 = parts[1].trim().parse()?;
            BoundaryData::from_fn(n, move |t| {
                a * Complex64::from_polar(1.0, t) + b * Complex64::from_polar(1.0, -t)
            })?
        }
    };
    Ok(data)
}

fn source_preset(spec: &str) -> Result<SourceField> {
    if spec == "zero" {
        return Ok(SourceField::zero());
    }
    if let Some(rest) = spec.strip_prefix("const:") {
        return Ok(SourceField::constant(parse_complex(rest)?));
    }
    if let Some(rest) = spec.strip_prefix("linear:") {
        let c: f64 = rest.trim().parse().with_context(|| format!("bad linear coefficient {rest:?}"))?;
        return Ok(SourceField::new(format!("{c}*w"), move |w| c * w));
    }
    bail!("unknown source preset {spec:?}; expected zero, const:RE[,IM], or linear:C");
}

fn run_solve(args: SolveArgs) -> Result<()> {
    let boundary = boundary_preset(&args.psi, args.boundary_nodes)?;
    let source = source_preset(&args.g)?;
    let cfg = QuadratureConfig {
        boundary_nodes: args.boundary_nodes,
        ..QuadratureConfig::default()
    };
    let solution = PoissonSolution::new(boundary, source, cfg)?;
    let z = DiskPoint::interior(parse_point(&args.at)?)?;

    let jet = solution.wirtinger_jet(z);
    let residual = if z.modulus() + args.stencil < 1.0 {
        Some(solution.laplacian_residual(z, args.stencil)?)
    } else {
        None
    };
    let norms = jet.norms();
    let out = serde_json::json!({
        "psi": args.psi,
        "g": args.g,
        "at": { "re": z.z().re, "im": z.z().im },
        "boundary_nodes": args.boundary_nodes,
        "resolution_ok": solution.resolution_ok(z),
        "value": { "re": jet.value.re, "im": jet.value.im },
        "fz": { "re": jet.fz.re, "im": jet.fz.im },
        "fzbar": { "re": jet.fzbar.re, "im": jet.fzbar.im },
        "op_norm": norms.op_norm,
        "min_stretch": norms.min_stretch,
        "jacobian": norms.jacobian,
        "laplacian_residual": residual,
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(())
}

fn run_measure(args: MeasureArgs) -> Result<()> {
    let map = CatalogMap::parse(&args.map)?;
    let r = args.r.unwrap_or_else(|| map.radius_cap());
    let nodes = args.nodes;
    let body = match args.functional {
        Functional::Perimeter => {
            let value = geometry::perimeter(&map, r, nodes)?;
            serde_json::json!({ "map": map.label(), "functional": "perimeter", "radius": r, "value": value })
        }
        Functional::RadialLength => {
            let value = geometry::radial_length(&map, r, args.theta, nodes.min(512))?;
            serde_json::json!({
                "map": map.label(), "functional": "radial-length",
                "radius": r, "theta": args.theta, "value": value
            })
        }
        Functional::Area => {
            let value = geometry::image_area(&map, r, 64, nodes)?;
            serde_json::json!({ "map": map.label(), "functional": "area", "radius": r, "value": value })
        }
        Functional::Qc => {
            let (value, exact) = match map.exact_k() {
                Some(k) => (k, true),
                None => (geometry::distortion_constant(&map, 24, 48)?, false),
            };
            serde_json::json!({ "map": map.label(), "functional": "qc", "value": value, "exact": exact })
        }
        Functional::Bloch => {
            let omega = Majorant::linear();
            let value = spaces::bloch_norm(&map, &omega, 1.0, 16, 32)?;
            serde_json::json!({
                "map": map.label(), "functional": "bloch",
                "weight": omega.label(), "alpha": 1.0, "value": value
            })
        }
        Functional::Profile => {
            let profile = geometry::length_profile(&map, nodes)?;
            serde_json::json!({
                "map": map.label(), "functional": "profile",
                "radii": profile.radii, "lengths": profile.lengths,
                "sup": profile.sup(), "still_increasing": profile.still_increasing()
            })
        }
    };
    println!("{}", serde_json::to_string_pretty(&body)?);
    Ok(())
}

fn run_catalog() -> Result<()> {
    for (label, description) in CatalogMap::listing() {
        println!("{label:<24} {description}");
    }
    Ok(())
}

fn load_config(path: Option<&PathBuf>) -> Result<VerifyConfigFile> {
    match path {
        None => Ok(VerifyConfigFile::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("cannot read config file {}", p.display()))?;
            toml::from_str(&text).with_context(|| format!("invalid config file {}", p.display()))
        }
    }
}


fn run_verify(args: VerifyArgs) -> Result<bool> {
    let file = load_config(args.config.as_ref())?;

    let map_spec = args.map.or(file.map).unwrap_or_else(|| "all".to_string());
    let suite: Suite = args
        .suite
        .or(file.suite)
        .unwrap_or_else(|| "all".to_string())
        .parse()?;
    let out_path = args.out.or(file.out);
    let format = match args.format {
        Some(f) => f,
        None => match file.format.as_deref() {
            None | Some("json") => Format::Json,
            Some("csv") => Format::Csv,
            Some(other) => bail!("unknown format {other:?} in config file; expected json or csv"),
        },
    };

    let mut cfg = QuadratureConfig::default();
    if let Some(n) = args.boundary_nodes.or(file.boundary_nodes) {
        cfg.boundary_nodes = n;
    }
    if let Some(n) = args.radial_nodes.or(file.radial_nodes) {
        cfg.radial_nodes = n;
    }
    let opts = VerifyOptions {
        cfg,
        seed: args.seed.or(file.seed).unwrap_or(7),
        tolerance: args.tolerance.or(file.tolerance),
        ..VerifyOptions::default()
    };

    let maps: Vec<CatalogMap> = if map_spec == "all" {
        CatalogMap::default_set()
    } else {
        vec![CatalogMap::parse(&map_spec)?]
    };

    let mut reports: Vec<VerificationReport> = Vec::new();
    for map in &maps {
        let mut piece = run_suite(map, suite, &opts)
            .map_err(|e| anyhow!("{e}").context(format!("verifying {}", map.label())))?;
        reports.append(&mut piece);
    }
    if suite.parts().contains(&Suite::Lem21) {
        reports.push(unit_source_reference(&opts)?);
    }
    sort_reports(&mut reports);

    let mut failed = 0usize;
    let mut sharp = 0usize;
    for r in &reports {
        let status = if r.holds { "PASS" } else { "FAIL" };
        let tag = if r.sharp { " (sharp)" } else { "" };
        if !r.holds {
            failed += 1;
        }
        if r.sharp {
            sharp += 1;
        }
        println!(
            "{status} {:<28} [{}] lhs={:.9e} rhs={:.9e} margin={:+.3e}{tag}",
            r.theorem_id, r.case, r.lhs, r.rhs, r.margin
        );
    }
    println!(
        "checked {} bounds across {} mapping(s): {} passed, {} failed, {} sharp",
        reports.len(),
        maps.len(),
        reports.len() - failed,
        failed,
        sharp
    );

    if let Some(path) = out_path {
        let payload = match format {
            Format::Json => report::to_json(&reports),
            Format::Csv => report::to_csv(&reports),
        };
        std::fs::write(&path, payload)
            .with_context(|| format!("cannot write report file {}", path.display()))?;
        println!("wrote {} report(s) to {}", reports.len(), path.display());
    }

    Ok(failed == 0)
}
