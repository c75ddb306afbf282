use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ideal4_core::catalog::{FamilyParams, FamilyTag, Polynomial};
use ideal4_core::elliptic::{jacobi_minor, JacobiFunction};
use ideal4_core::geom::ChartPoint;
use ideal4_core::grid::{parse_counts, parse_range, GridSpec};
use ideal4_core::report::{ReportDocument, Status};
use ideal4_core::verify::{chen_check, scan, ScanOptions};
use ideal4_core::Error;

const THREADS_VAR: &str = "IDEAL4_THREADS";

#[derive(Parser)]
#[command(name = "ideal4", version, about = "Chen's delta(2) invariant for hypersurfaces of E^4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a family over a grid and write a JSON report.
    Verify(VerifyArgs),
    /// Print delta, tau, inf K, H^2, the bound and the slack at one chart point.
    Delta(DeltaArgs),
    /// Evaluate a Jacobi elliptic function.
    Elliptic(EllipticArgs),
    /// Export grid positions (and optionally delta and slack) as CSV.
    Mesh(MeshArgs),
    /// List the available families.
    CatalogList,
}

#[derive(Args)]
struct FamilyArgs {
    /// a, b, c, L1, L2, hyperplane, or graph.
    #[arg(long)]
    family: String,
    /// Family parameter (a, b, c only).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Graph polynomial: `c1,c2,c3` or `coeff:i,j,k;...`.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

impl FamilyArgs {
    fn params(&self) -> Result<FamilyParams, Error> {
        let tag: FamilyTag = self.family.parse()?;
        let coeffs = match (&self.coeffs, tag) {
            (Some(c), _) => Some(c.parse::<Polynomial>()?),
            (None, FamilyTag::Graph) => Some(Polynomial::zero()),
            (None, _) => None,
        };
        FamilyParams::new(tag, self.a, coeffs)
    }
}

#[derive(Args)]
struct GridArgs {
    /// Node counts `NtxNuxNv`.
    #[arg(long, default_value = "8x8x8")]
    grid: String,
    #[arg(long, allow_hyphen_values = true)]
    t_range: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    u_range: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    v_range: Option<String>,
}

impl GridArgs {
    fn grid(&self, params: &FamilyParams) -> Result<GridSpec, Error> {
        let mut grid = GridSpec::over(parse_counts(&self.grid)?, &params.default_grid_box())?;
        for (axis, r) in [&self.t_range, &self.u_range, &self.v_range].into_iter().enumerate() {
            if let Some(r) = r {
                grid = grid.with_range(axis, parse_range(r)?)?;
            }
        }
        grid.check_inside(&params.safe_domain)?;
        Ok(grid)
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Report path; standard output when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Include per-point rows in the report.
    #[arg(long)]
    points: bool,
}

#[derive(Args)]
struct DeltaArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Chart point `t,u,v`.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
}

#[derive(Args)]
struct EllipticArgs {
    /// One of sn, cn, dn, ns, nc, nd, sc, sd, cd, cs, ds, dc.
    function: String,
    #[arg(allow_hyphen_values = true)]
    u: f64,
    /// Modulus in (0, 1).
    k: f64,
}

#[derive(Args)]
struct MeshArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// CSV path; standard output when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Append `delta,slack` columns.
    #[arg(long)]
    with_delta: bool,
}

/// Failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: 2,
        message: e.to_string(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::Parameter(_) | Error::Configuration(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn threads() -> Result<usize, Failure> {
    match std::env::var(THREADS_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| usage(format!("{THREADS_VAR} must be a non-negative integer, got '{s}'"))),
        Err(_) => Ok(0),
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("cannot write to standard output: {e}"))),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let params = args.family.params()?;
    let grid = args.grid.grid(&params)?;
    let imm = params.build()?;
    let opts = ScanOptions {
        tol: args.tol,
        threads: threads()?,
        ..Default::default()
    };
    let report = scan(imm.as_ref(), &grid, &opts)?;
    let doc = ReportDocument::new(&params, &report, args.tol, args.points);
    let mut json = doc.to_json()?;
    json.push('\n');
    emit(&args.output, &json)?;
    eprintln!(
        "{} family {} on {}: {} ({:.3} s)",
        if doc.status == Status::Pass { "PASS" } else { "FAIL" },
        params.family,
        grid.shape_string(),
        format_args!(
            "max rel slack {:e}, max pattern residual {:e}, failed nodes {}",
            doc.summary.max_rel_slack, doc.summary.max_pattern_residual, doc.summary.failed
        ),
        report.wall_time.as_secs_f64()
    );
    Ok(if doc.status == Status::Pass { 0 } else { 1 })
}

fn parse_point(s: &str) -> Result<ChartPoint, Failure> {
    let v: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("point '{s}' is not of the form t,u,v")))?;
    let [t, u, w]: [f64; 3] = v
        .try_into()
        .map_err(|_| usage(format!("point '{s}' needs three coordinates")))?;
    Ok(ChartPoint::new(t, u, w))
}

fn cmd_delta(args: &DeltaArgs) -> Result<u8, Failure> {
    let params = args.family.params()?;
    let p = parse_point(&args.point)?;
    let imm = params.build()?;
    let v = chen_check(imm.as_ref(), &p, 1e-6)?;
    let out = serde_json::json!({
        "family": params.family.name(),
        "point": p.0,
        "delta": v.delta,
        "tau": v.tau,
        "inf_k": v.inf_k,
        "mean_sq": v.mean_sq,
        "bound": v.bound,
        "slack": v.slack,
        "eigen_triple": v.eigen_triple,
    });
    println!("{out}");
    Ok(0)
}

/// Fifteen significant digits, trailing zeros trimmed.
fn sig15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let s = format!("{:.*}", (14 - exp).max(0) as usize, x);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.14e}")
    }
}

fn cmd_elliptic(args: &EllipticArgs) -> Result<u8, Failure> {
    let f: JacobiFunction = args.function.parse()?;
    if !(args.k > 0.0 && args.k < 1.0) {
        return Err(usage(format!("modulus must lie in (0, 1), got {}", args.k)));
    }
    if !args.u.is_finite() {
        return Err(usage(format!("argument must be finite, got {}", args.u)));
    }
    let value = jacobi_minor(f, args.u, args.k)?;
    println!("{}", sig15(value));
    Ok(0)
}

fn cmd_mesh(args: &MeshArgs) -> Result<u8, Failure> {
    let params = args.family.params()?;
    let grid = args.grid.grid(&params)?;
    let imm = params.build()?;
    let mut csv = String::from("t,u,v,x1,x2,x3,x4");
    if args.with_delta {
        csv.push_str(",delta,slack");
    }
    csv.push('\n');
    for p in grid.nodes() {
        let x = imm.position(&p)?;
        let [t, u, v] = p.0;
        csv.push_str(&format!("{t},{u},{v},{},{},{},{}", x[0], x[1], x[2], x[3]));
        if args.with_delta {
            let verdict = chen_check(imm.as_ref(), &p, 1e-6)?;
            csv.push_str(&format!(",{},{}", verdict.delta, verdict.slack));
        }
        csv.push('\n');
    }
    emit(&args.output, &csv)?;
    Ok(0)
}

fn cmd_catalog_list() -> Result<u8, Failure> {
    for tag in FamilyTag::ALL {
        let param = if tag.needs_a() {
            "--a <A>"
        } else if tag == FamilyTag::Graph {
            "--coeffs <P>"
        } else {
            "-"
        };
        println!("{:<11} {:<13} {}", tag.name(), param, tag.description());
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Delta(a) => cmd_delta(a),
        Command::Elliptic(a) => cmd_elliptic(a),
        Command::Mesh(a) => cmd_mesh(a),
        Command::CatalogList => cmd_catalog_list(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("ideal4: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
