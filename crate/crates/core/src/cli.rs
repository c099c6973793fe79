//! Command-line front end for the `fka` binary.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::geometry::{DeformationParams, RadialProfile};
use crate::harness::{run_check, run_suite, CheckId, CheckOptions, Exponents, Mode, SuiteConfig, DEFAULT_TOLERANCE};
use crate::par;
use crate::specfun::LAGUERRE_MAX_DEGREE;
use crate::spectral::spectral_transform;
use crate::transform::{calibrate_c, fka_1d_via_kernel, fka_radial, Fn1d, QuadratureSpec, TransformResult};
use crate::{FkaError, C64};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONSTRAINT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fka", version, about = "Numerics for the (k,a)-generalized Fourier transform")]
#[command(args_conflicts_with_subcommands = true, allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Tabulate the radial factor of F f as CSV (r,re,im)
    Transform(TransformArgs),
    /// Evaluate one catalog inequality and print its report as JSON
    Check(CheckArgs),
    /// Run a suite configuration and write the report file
    Suite(SuiteArgs),
}

#[derive(Args, Debug, Clone, Copy)]
struct ParamArgs {
    /// dimension
    #[arg(long = "N", default_value_t = 1)]
    dim: usize,
    /// multiplicity index <k>
    #[arg(long, default_value_t = 0.0)]
    k: f64,
    #[arg(long, default_value_t = 2.0)]
    a: f64,
}

impl ParamArgs {
    fn build(&self) -> crate::Result<DeformationParams> {
        DeformationParams::new(self.dim, self.k, self.a)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum PathArg {
    Hankel,
    Kernel,
    Spectral,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct TransformArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// profile descriptor, e.g. gaussian:t=0.5, exppow:c=1, mode:l=2
    #[arg(long, default_value = "exppow:c=0.5")]
    profile: String,
    /// harmonic degree (overrides m= in the descriptor)
    #[arg(long)]
    m: Option<u32>,
    /// lo:hi:n
    #[arg(long, default_value = "0:5:51")]
    grid: String,
    #[arg(long, value_enum, default_value_t = PathArg::Hankel)]
    path: PathArg,
    /// output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
struct CheckArgs {
    /// check name, e.g. hpw-sharp
    check: String,
    #[command(flatten)]
    params: ParamArgs,
    /// profile descriptor; defaults to the ground state exppow:c=1/a
    #[arg(long)]
    profile: Option<String>,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    #[command(flatten)]
    exps: ExponentArgs,
}

#[derive(Args, Debug, Default)]
struct ExponentArgs {
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    l: Option<f64>,
    #[arg(long)]
    u: Option<f64>,
    #[arg(long)]
    v: Option<f64>,
    #[arg(long)]
    s: Option<f64>,
    #[arg(long)]
    t: Option<f64>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    tau: Option<f64>,
    /// family size for hy-fail-probe
    #[arg(long)]
    n: Option<f64>,
    #[arg(long)]
    s_radius: Option<f64>,
    #[arg(long)]
    v_radius: Option<f64>,
}

impl ExponentArgs {
    fn collect(&self) -> Exponents {
        let all = [
            ("p", self.p),
            ("q", self.q),
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("l", self.l),
            ("u", self.u),
            ("v", self.v),
            ("s", self.s),
            ("t", self.t),
            ("c", self.c),
            ("tau", self.tau),
            ("n", self.n),
            ("s_radius", self.s_radius),
            ("v_radius", self.v_radius),
        ];
        all.into_iter().filter_map(|(k, v)| v.map(|v| (k.to_string(), v))).collect()
    }
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// JSON suite configuration
    config: PathBuf,
    /// report path; overrides the configuration's output field
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit code for a library error.
pub fn exit_code(e: &FkaError) -> i32 {
    match e {
        FkaError::Constraint(_)
        | FkaError::Inadmissible(_)
        | FkaError::Divergent(_)
        | FkaError::Unsupported(_)
        | FkaError::UnsupportedA(_) => EXIT_CONSTRAINT,
        FkaError::Config(_) | FkaError::NonPositiveD(_) | FkaError::Domain(_) | FkaError::FamilyTooSmall { .. } => {
            EXIT_USAGE
        }
        FkaError::Tail(_) | FkaError::Oscillation { .. } | FkaError::Calibration(_) | FkaError::Pole => EXIT_FAIL,
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let threads = match std::env::var("FKA_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Some(n),
            _ => {
                let _ = writeln!(err, "error: FKA_THREADS must be a positive integer, got '{v}'");
                return EXIT_USAGE;
            }
        },
        Err(_) => None,
    };
    let go = move |out: &mut dyn Write, err: &mut dyn Write| match dispatch(&cli.cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    };
    match threads {
        Some(n) => {
            let mut o = Vec::new();
            let mut e = Vec::new();
            let code = par::with_workers(n, || go(&mut o, &mut e));
            let _ = out.write_all(&o);
            let _ = err.write_all(&e);
            code
        }
        None => go(out, err),
    }
}

fn dispatch(cmd: &Cmd, out: &mut dyn Write) -> crate::Result<i32> {
    match cmd {
        Cmd::Transform(a) => cmd_transform(a, out),
        Cmd::Check(a) => cmd_check(a, out),
        Cmd::Suite(a) => cmd_suite(a, out),
    }
}

fn io_err(e: std::io::Error) -> FkaError {
    FkaError::Config(format!("i/o: {e}"))
}

/// "lo:hi:n" to n equispaced radii.
pub fn parse_grid(s: &str) -> crate::Result<Vec<f64>> {
    let bad = || FkaError::Config(format!("grid must be lo:hi:n with 0 <= lo <= hi and n >= 1, got '{s}'"));
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if !(lo >= 0.0 && hi >= lo && hi.is_finite()) || n == 0 {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect())
}

fn cmd_transform(a: &TransformArgs, out: &mut dyn Write) -> crate::Result<i32> {
    let params = a.params.build()?;
    let mut profile = RadialProfile::parse(&a.profile)?;
    if let Some(m) = a.m {
        profile = profile.with_m(m);
    }
    let grid = parse_grid(&a.grid)?;
    let spec = QuadratureSpec::default();
    let res = match a.path {
        PathArg::Hankel => fka_radial(&params, &profile, &grid, &spec)?,
        PathArg::Spectral => {
            spectral_transform(&params, &profile, &grid, LAGUERRE_MAX_DEGREE.min(profile_l_max(&profile)))?
        }
        PathArg::Kernel => kernel_radial(&params, &profile, &grid, &spec)?,
    };
    let mut csv = String::from("r,re,im\n");
    for (r, v) in res.grid.iter().zip(&res.values) {
        csv.push_str(&format!("{r},{:e},{:e}\n", v.re, v.im));
    }
    match &a.out {
        Some(p) => fs::write(p, csv).map_err(io_err)?,
        None => out.write_all(csv.as_bytes()).map_err(io_err)?,
    }
    Ok(EXIT_PASS)
}

/// Degree cap for projection: the mixture length for mode inputs, the full basis otherwise.
fn profile_l_max(profile: &RadialProfile) -> usize {
    use crate::geometry::Shape;
    match &profile.shape {
        Shape::LaguerreMode { ell } if profile.scale == 1.0 => (*ell).max(8),
        Shape::Mixture { coeffs } if profile.scale == 1.0 => coeffs.len().max(8),
        _ => LAGUERRE_MAX_DEGREE,
    }
}

/// Radial factor through the one-dimensional kernel integral.
fn kernel_radial(
    params: &DeformationParams,
    profile: &RadialProfile,
    grid: &[f64],
    spec: &QuadratureSpec,
) -> crate::Result<TransformResult> {
    if params.n() != 1 {
        return Err(FkaError::Unsupported("the kernel path needs N = 1".into()));
    }
    let f = match profile.m {
        0 => Fn1d { even: Some(profile.clone()), odd: None },
        1 => {
            if grid.contains(&0.0) {
                return Err(FkaError::Domain("the kernel path with m = 1 needs r > 0".into()));
            }
            Fn1d { even: None, odd: Some(profile.clone()) }
        }
        m => return Err(FkaError::Unsupported(format!("the kernel path in N = 1 has m in {{0, 1}}, got {m}"))),
    };
    let c = calibrate_c(params)?;
    let mut res = fka_1d_via_kernel(params, &f, grid, c, spec)?;
    if profile.m == 1 {
        for (v, r) in res.values.iter_mut().zip(grid) {
            *v /= C64::new(*r, 0.0);
        }
    }
    res.m = profile.m;
    Ok(res)
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> crate::Result<i32> {
    let id: CheckId = a.check.parse()?;
    let params = a.params.build()?;
    let profile = match &a.profile {
        Some(s) => RadialProfile::parse(s)?,
        None => RadialProfile::exppow(1.0 / params.a()),
    };
    if !(a.tolerance > 0.0) {
        return Err(FkaError::Config(format!("tolerance must be positive, got {}", a.tolerance)));
    }
    let opts = CheckOptions { tolerance: a.tolerance, ..CheckOptions::default() };
    let rep = run_check(id, &params, &profile, &a.exps.collect(), &opts)?;
    let json = serde_json::to_string(&rep).map_err(|e| FkaError::Config(e.to_string()))?;
    writeln!(out, "{json}").map_err(io_err)?;
    Ok(if rep.pass { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_suite(a: &SuiteArgs, out: &mut dyn Write) -> crate::Result<i32> {
    let text = fs::read_to_string(&a.config).map_err(|e| FkaError::Config(format!("{}: {e}", a.config.display())))?;
    let cfg = SuiteConfig::from_json(&text)?;
    let report = run_suite(&cfg)?;
    let target = a.out.clone().or_else(|| cfg.output.as_ref().map(PathBuf::from));
    let json = serde_json::to_string_pretty(&report).map_err(|e| FkaError::Config(e.to_string()))?;
    match &target {
        Some(p) => fs::write(p, json + "\n").map_err(io_err)?,
        None => writeln!(out, "{json}").map_err(io_err)?,
    }
    // summary lines go to stdout only when the report went to a file
    let mut summary: Box<dyn Write> = if target.is_some() { Box::new(&mut *out) } else { Box::new(std::io::sink()) };
    let tally = report.tally();
    let mut ids: Vec<CheckId> = cfg.checks.iter().map(|c| c.id).collect();
    ids.sort();
    ids.dedup();
    for id in ids {
        let (pass, total) = tally.get(&id).copied().unwrap_or((0, 0));
        let mode = match id.def().mode {
            Mode::ExactConstant => "exact",
            Mode::EmpiricalConstant => "empirical",
            Mode::ReportOnly => "report",
        };
        let skipped = report.skipped.iter().filter(|s| s.check == id).count();
        writeln!(summary, "{:<14} {mode:<9} {pass}/{total} pass, {skipped} skipped", id.name()).map_err(io_err)?;
    }
    Ok(if report.exact_failures() == 0 { EXIT_PASS } else { EXIT_FAIL })
}
