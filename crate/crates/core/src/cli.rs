//! Command-line front end: `verify` runs the identity registry, `show`
//! prints individual objects.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::clifford::{MatrixC4, Sign, SpatialIndex, C64};
use crate::error::{Error, Result};
use crate::projectors::{energy_projector_at, pi_projector_at, polsum, spin_projector, PiVariant, PolsumKind, SpinVector};
use crate::spinors::{bispinor_u, breve_u, breve_u_bar, Bispinor, Helicity, KinematicPoint, TetradIndex};
use crate::verify::{run_all_with, to_json, Context, RunConfig, Status, VerificationReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_IDENTITY_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "bispinor", version, about = "Dirac-algebra toolkit and identity verifier")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every registered identity and report residuals.
    Verify(VerifyArgs),
    /// Print one object for inspection.
    Show(ShowArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GammaIndex {
    Upper,
    Lower,
}

impl From<GammaIndex> for SpatialIndex {
    fn from(g: GammaIndex) -> Self {
        match g {
            GammaIndex::Upper => SpatialIndex::Upper,
            GammaIndex::Lower => SpatialIndex::Lower,
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tolerance: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Index placement of γ⃗ in γ⃗·s⃗.
    #[arg(long, value_enum, default_value_t = GammaIndex::Upper)]
    pub gamma_index: GammaIndex,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ShowObject {
    Basis,
    Breve,
    Projector,
    Polsum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HelicityArg {
    #[value(alias = "+")]
    Up,
    #[value(alias = "-")]
    Down,
}

impl From<HelicityArg> for Helicity {
    fn from(h: HelicityArg) -> Self {
        match h {
            HelicityArg::Up => Helicity::Up,
            HelicityArg::Down => Helicity::Down,
        }
    }
}

#[derive(Debug, Args)]
pub struct ShowArgs {
    #[arg(value_enum)]
    pub object: ShowObject,
    #[arg(long)]
    pub tau: Option<u8>,
    #[arg(long, allow_negative_numbers = true)]
    pub p0: Option<f64>,
    #[arg(long)]
    pub m: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub nx: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub ny: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub nz: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub sx: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub sy: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub sz: Option<f64>,
    /// projector: spin, energy-plus, energy-minus, pi, pi-neg;
    /// polsum: spinor, antispinor, breve-plus, breve-minus, completeness.
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long, value_enum)]
    pub lambda_plus: Option<HelicityArg>,
    #[arg(long, value_enum)]
    pub lambda_minus: Option<HelicityArg>,
    #[arg(long, value_enum, default_value_t = GammaIndex::Upper)]
    pub gamma_index: GammaIndex,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match cli.command {
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::Show(a) => cmd_show(&a, out, err),
    }
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    if args.samples == 0 {
        let _ = writeln!(err, "error: --samples must be at least 1");
        return EXIT_USAGE;
    }
    if !(args.tolerance > 0.0 && args.tolerance.is_finite()) {
        let _ = writeln!(err, "error: --tolerance must be positive, got {}", args.tolerance);
        return EXIT_USAGE;
    }
    let config = RunConfig {
        seed: args.seed,
        samples: args.samples,
        tolerance_override: Some(args.tolerance),
        context: Context { mass: args.mass, convention: args.gamma_index.into() },
    };
    let report = match run_all_with(&config) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let body = match args.format {
        Format::Json => match to_json(&report) {
            Ok(s) => s,
            Err(e) => {
                let _ = writeln!(err, "error: cannot serialize report: {e}");
                return EXIT_USAGE;
            }
        },
        Format::Text => render_text(&report),
    };
    let written = match &args.output {
        Some(path) => std::fs::write(path, &body).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(body.as_bytes()).map_err(|e| format!("cannot write report: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    if report.has_failures() {
        for c in report.failures() {
            let _ = writeln!(err, "identity failed: {} (max residual {:e})", c.name, c.max_residual);
        }
        EXIT_IDENTITY_FAILURE
    } else {
        EXIT_OK
    }
}

fn render_text(report: &VerificationReport) -> String {
    let mut s = format!(
        "bispinor {} seed={} samples={} tolerance={:e}\n",
        report.version, report.seed, report.samples, report.tolerance
    );
    let width = report.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &report.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        };
        s += &format!("{tag}  {:width$}  max_residual={:.3e}  samples={}\n", c.name, c.max_residual, c.samples);
    }
    s += &format!(
        "{} pass, {} fail, {} info\n",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Info)
    );
    s
}

fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let plain = format!("{x:.decimals$}");
        let plain = if plain.contains('.') { plain.trim_end_matches('0').trim_end_matches('.') } else { &plain };
        plain.to_string()
    } else {
        let m = if mantissa.contains('.') { mantissa.trim_end_matches('0').trim_end_matches('.') } else { mantissa };
        format!("{m}e{exp}")
    }
}

/// 12 significant digits; the imaginary part is printed when nonzero.
pub fn fmt_complex(z: C64) -> String {
    let re = fmt_real(z.re);
    if z.im == 0.0 {
        return re;
    }
    let im = fmt_real(z.im.abs());
    let sign = if z.im < 0.0 { '-' } else { '+' };
    if z.re == 0.0 {
        format!("{}{im}i", if z.im < 0.0 { "-" } else { "" })
    } else {
        format!("{re}{sign}{im}i")
    }
}

fn fmt_vector(v: &[C64]) -> String {
    format!("({})", v.iter().map(|&z| fmt_complex(z)).collect::<Vec<_>>().join(", "))
}

fn fmt_matrix(m: &MatrixC4) -> String {
    m.0.iter().map(|row| format!("[{}]\n", row.iter().map(|&z| fmt_complex(z)).collect::<Vec<_>>().join(", "))).collect()
}

fn missing(object: &str, required: &str) -> Error {
    Error::InvalidArgument(format!("show {object} requires {required}"))
}

fn axis(x: Option<f64>, y: Option<f64>, z: Option<f64>) -> Option<[f64; 3]> {
    if x.is_none() && y.is_none() && z.is_none() {
        None
    } else {
        Some([x.unwrap_or(0.0), y.unwrap_or(0.0), z.unwrap_or(0.0)])
    }
}

fn kinematic(a: &ShowArgs, object: &str, required: &str) -> Result<KinematicPoint> {
    let (Some(p0), Some(m)) = (a.p0, a.m) else {
        return Err(missing(object, required));
    };
    KinematicPoint::new(m, p0, axis(a.nx, a.ny, a.nz).unwrap_or([0.0, 0.0, 1.0]))
}

fn show(a: &ShowArgs) -> Result<String> {
    match a.object {
        ShowObject::Basis => {
            const REQ: &str = "--tau, --p0, --m (optional --nx --ny --nz, default ẑ)";
            let tau = TetradIndex::new(a.tau.ok_or_else(|| missing("basis", REQ))?)?;
            let k = kinematic(a, "basis", REQ)?;
            Ok(format!("{}\n", fmt_vector(&bispinor_u(&k, tau)?.0)))
        }
        ShowObject::Breve => {
            const REQ: &str = "--p0, --m, --lambda-plus, --lambda-minus (optional --nx --ny --nz, default ẑ)";
            let (Some(lp), Some(lm)) = (a.lambda_plus, a.lambda_minus) else {
                return Err(missing("breve", REQ));
            };
            let k = kinematic(a, "breve", REQ)?;
            let (lp, lm) = (lp.into(), lm.into());
            let col: Bispinor = breve_u(&k, lp, lm)?;
            let row = breve_u_bar(&k, lp, lm)?;
            Ok(format!(
                "u    = {}\nubar = {}\nubar u = {}\n",
                fmt_vector(&col.0),
                fmt_vector(&row.0),
                fmt_complex(row.contract(&col))
            ))
        }
        ShowObject::Projector => {
            const KINDS: &str = "--kind spin|energy-plus|energy-minus|pi|pi-neg";
            let kind = a.kind.as_deref().ok_or_else(|| missing("projector", KINDS))?;
            let spin = || -> Result<SpinVector> {
                SpinVector::new(axis(a.sx, a.sy, a.sz).ok_or_else(|| missing("projector", "--sx --sy --sz"))?)
            };
            const KIN: &str = "--p0, --m (optional --nx --ny --nz, default ẑ)";
            let p = match kind {
                "spin" => spin_projector(&spin()?),
                "energy-plus" => energy_projector_at(&kinematic(a, "projector", KIN)?, Sign::Plus),
                "energy-minus" => energy_projector_at(&kinematic(a, "projector", KIN)?, Sign::Minus),
                "pi" | "pi-neg" => {
                    let variant = if kind == "pi" { PiVariant::Lambda } else { PiVariant::NegLambda };
                    let k = kinematic(a, "projector", "--p0, --m, --sx --sy --sz")?;
                    pi_projector_at(&k, &spin()?, variant, a.gamma_index.into())
                }
                other => return Err(Error::InvalidArgument(format!("unknown projector kind `{other}`; {KINDS}"))),
            };
            Ok(fmt_matrix(p.matrix()))
        }
        ShowObject::Polsum => {
            const REQ: &str =
                "--kind spinor|antispinor|breve-plus|breve-minus|completeness, --p0, --m (optional --nx --ny --nz)";
            let kind = match a.kind.as_deref().ok_or_else(|| missing("polsum", REQ))? {
                "spinor" => PolsumKind::Spinor,
                "antispinor" => PolsumKind::Antispinor,
                "breve-plus" => PolsumKind::BrevePlus,
                "breve-minus" => PolsumKind::BreveMinus,
                "completeness" => PolsumKind::Completeness,
                other => return Err(Error::InvalidArgument(format!("unknown polsum kind `{other}`; {REQ}"))),
            };
            let ps = polsum(kind, &kinematic(a, "polsum", REQ)?)?;
            Ok(format!(
                "lhs\n{}rhs\n{}max residual {}\n",
                fmt_matrix(&ps.lhs),
                fmt_matrix(&ps.rhs),
                fmt_real(ps.residual())
            ))
        }
    }
}

pub fn cmd_show(args: &ShowArgs, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match show(args) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("bispinor").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn number_format() {
        assert_eq!(fmt_real(1.0), "1");
        assert_eq!(fmt_real(-0.0), "0");
        assert_eq!(fmt_real(0.5), "0.5");
        assert_eq!(fmt_real(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_real(std::f64::consts::FRAC_1_SQRT_2), "0.707106781187");
        assert_eq!(fmt_real(123456.789), "123456.789");
        assert_eq!(fmt_real(1.5e-9), "1.5e-9");
        assert_eq!(fmt_complex(C64::new(0.0, -1.0)), "-1i");
        assert_eq!(fmt_complex(C64::new(0.5, -0.25)), "0.5-0.25i");
    }

    #[test]
    fn show_examples() {
        let (code, out, _) = call(&["show", "basis", "--tau", "1", "--p0", "1", "--m", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "(1, 0, 0, 0)");
        let (code, out, _) = call(&["show", "projector", "--kind", "spin", "--sz", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "[1, 0, 0, 0]\n[0, 0, 0, 0]\n[0, 0, 0, 0]\n[0, 0, 0, 1]\n");
        let (code, out, _) = call(&["show", "polsum", "--kind", "spinor", "--p0", "1.25", "--m", "1", "--nz", "1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("lhs\n") && out.contains("\nrhs\n") && out.contains("max residual"));
    }

    #[test]
    fn show_reports_missing_keys() {
        let (code, _, err) = call(&["show", "basis", "--tau", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("--p0") && err.contains("--m"), "{err}");
        let (code, _, err) = call(&["show", "polsum", "--p0", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("--kind"));
        let (code, _, _) = call(&["show", "basis", "--tau", "1", "--p0", "0.5", "--m", "1"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_usage_errors() {
        assert_eq!(call(&["verify", "--samples", "0"]).0, 2);
        assert_eq!(call(&["verify", "--tolerance", "-1"]).0, 2);
        assert_eq!(call(&["verify", "--format", "yaml"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
