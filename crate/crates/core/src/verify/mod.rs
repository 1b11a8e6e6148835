//! Registry of algebraic identities evaluated over seeded samples.
//!
//! Each [`IdentityCheck`] builds both sides of an identity at a sample point;
//! the runner reports the largest elementwise `|lhs − rhs|` and the point
//! where it occurred.

mod registry;
mod report;
mod sampler;

use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::{generalized_pauli, gamma5, MatrixC4, Sign, SpatialIndex, C64};
use crate::error::{Error, Result};
use crate::spinors::Bispinor;

pub use registry::registry;
pub use report::{to_json, Conventions, VerificationReport};
pub use sampler::{check_rng, SamplePoint, Sampler};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    Holds,
    Informational,
    ExpectedFail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// Run-wide settings visible to side builders.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Context {
    pub mass: f64,
    pub convention: SpatialIndex,
}

impl Default for Context {
    fn default() -> Self {
        Context { mass: 1.0, convention: SpatialIndex::Upper }
    }
}

/// Flattened left and right sides of an identity.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Sides {
    pub lhs: Vec<C64>,
    pub rhs: Vec<C64>,
}

impl Sides {
    pub fn push(&mut self, lhs: C64, rhs: C64) {
        self.lhs.push(lhs);
        self.rhs.push(rhs);
    }

    pub fn push_real(&mut self, lhs: f64, rhs: f64) {
        self.push(C64::new(lhs, 0.0), C64::new(rhs, 0.0));
    }

    pub fn push_slices(&mut self, lhs: &[C64], rhs: &[C64]) {
        debug_assert_eq!(lhs.len(), rhs.len());
        self.lhs.extend_from_slice(lhs);
        self.rhs.extend_from_slice(rhs);
    }

    pub fn push_matrices(&mut self, lhs: &MatrixC4, rhs: &MatrixC4) {
        self.push_slices(lhs.0.as_flattened(), rhs.0.as_flattened());
    }

    pub fn matrices(lhs: &MatrixC4, rhs: &MatrixC4) -> Self {
        let mut s = Sides::default();
        s.push_matrices(lhs, rhs);
        s
    }

    /// `max |lhs_i − rhs_i|`; NaN if any entry is NaN.
    pub fn residual(&self) -> f64 {
        self.lhs.iter().zip(&self.rhs).map(|(a, b)| (a - b).norm()).fold(0.0, |acc, r| {
            if acc.is_nan() || r.is_nan() {
                f64::NAN
            } else {
                acc.max(r)
            }
        })
    }
}

pub type SideBuilder = fn(&SamplePoint, &Context) -> Result<Sides>;

#[derive(Clone, Copy, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// Quoted phrase locating the identity in the source derivation.
    pub paper_ref: &'static str,
    pub sampler: Sampler,
    pub sides: SideBuilder,
    pub tolerance: f64,
    pub expected: Expected,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub paper_ref: String,
    pub sampler: Sampler,
    pub samples: usize,
    pub tolerance: f64,
    pub max_residual: f64,
    pub worst_point: SamplePoint,
    pub expected: Expected,
    pub status: Status,
}

impl CheckResult {
    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Settings for a full run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub tolerance_override: Option<f64>,
    pub context: Context,
}

impl RunConfig {
    pub fn new(seed: u64, samples: usize) -> Self {
        RunConfig { seed, samples, tolerance_override: None, context: Context::default() }
    }
}

fn config_error(check: &IdentityCheck, reason: impl Into<String>) -> Error {
    Error::Config { check: check.name.to_string(), reason: reason.into() }
}

pub fn run_check(check: &IdentityCheck, seed: u64, samples: usize) -> Result<CheckResult> {
    run_check_with(check, seed, samples, &Context::default())
}

pub fn run_check_with(check: &IdentityCheck, seed: u64, samples: usize, ctx: &Context) -> Result<CheckResult> {
    if samples == 0 {
        return Err(config_error(check, "samples must be at least 1"));
    }
    if !(check.tolerance > 0.0) {
        return Err(config_error(check, format!("tolerance must be positive, got {}", check.tolerance)));
    }
    let mut rng = check_rng(seed, check.name);
    let n = check.sampler.effective_samples(samples);
    let mut max_residual = f64::NEG_INFINITY;
    let mut worst_point = SamplePoint::None;
    for _ in 0..n {
        let point = check.sampler.draw(&mut rng, ctx.mass).map_err(|e| config_error(check, e.to_string()))?;
        let sides = (check.sides)(&point, ctx).map_err(|e| config_error(check, e.to_string()))?;
        if sides.lhs.len() != sides.rhs.len() || sides.lhs.is_empty() {
            return Err(config_error(check, "side builders produced mismatched shapes"));
        }
        let r = sides.residual();
        if r.is_nan() || r > max_residual {
            max_residual = r;
            worst_point = point;
            if r.is_nan() {
                break;
            }
        }
    }
    let within = max_residual <= check.tolerance;
    let status = match check.expected {
        Expected::Holds if within => Status::Pass,
        Expected::Holds => Status::Fail,
        _ => Status::Info,
    };
    Ok(CheckResult {
        name: check.name.to_string(),
        paper_ref: check.paper_ref.to_string(),
        sampler: check.sampler,
        samples: n,
        tolerance: check.tolerance,
        max_residual,
        worst_point,
        expected: check.expected,
        status,
    })
}

pub fn run_all(seed: u64, samples: usize, tolerance_override: Option<f64>) -> Result<VerificationReport> {
    run_all_with(&RunConfig { tolerance_override, ..RunConfig::new(seed, samples) })
}

pub fn run_all_with(config: &RunConfig) -> Result<VerificationReport> {
    if let Some(t) = config.tolerance_override {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Config { check: "*".into(), reason: format!("tolerance must be positive, got {t}") });
        }
    }
    if !(config.context.mass > 0.0 && config.context.mass.is_finite()) {
        return Err(Error::Config {
            check: "*".into(),
            reason: format!("mass must be positive, got {}", config.context.mass),
        });
    }
    let checks: Vec<IdentityCheck> = registry()
        .into_iter()
        .map(|c| IdentityCheck { tolerance: config.tolerance_override.unwrap_or(c.tolerance), ..c })
        .collect();
    let results: Vec<Result<CheckResult>> = checks
        .par_iter()
        .map(|c| run_check_with(c, config.seed, config.samples, &config.context))
        .collect();
    let checks = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::new(config, checks))
}

/// `(Σ_λ x^λ x_λ, |ξ|⁴)` with `x_λ = ξ†(σ⁺_λ γ5)ξ` and `x^λ = ξ†(γ5 (σ⁺_λᵀ)†)ξ`.
pub fn section4_two_valued(xi: &Bispinor) -> (f64, f64) {
    let g5 = gamma5();
    let row = xi.dagger();
    let mut lhs = C64::new(0.0, 0.0);
    for lambda in 1..=3 {
        let s = generalized_pauli(lambda, Sign::Plus).expect("λ in 1..=3");
        let lower = row.contract(&((s * g5) * *xi));
        let upper = row.contract(&((g5 * s.transpose().dagger()) * *xi));
        lhs += upper * lower;
    }
    let norm = xi.norm_sqr();
    (lhs.re, norm * norm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn find(name: &str) -> IdentityCheck {
        registry().into_iter().find(|c| c.name == name).unwrap()
    }

    #[test]
    fn run_check_examples() {
        let r = run_check(&find("helicity-sum-unity"), 42, 10).unwrap();
        assert!(r.max_residual < 1e-14);
        assert_eq!(r.status, Status::Pass);
        let r = run_check(&find("polsum-spinor"), 42, 100).unwrap();
        assert!(r.max_residual < 1e-12);
        assert_eq!(r.status, Status::Pass);
        let r = run_check(&find("anticommutator-literal-delta"), 3, 1).unwrap();
        assert!(r.max_residual > 0.0);
        assert_eq!(r.status, Status::Info);
        assert_eq!(r.expected, Expected::ExpectedFail);
    }

    #[test]
    fn zero_samples_is_a_config_error() {
        let err = run_check(&find("norm-spinor"), 1, 0).unwrap_err();
        assert!(matches!(err, Error::Config { ref check, .. } if check == "norm-spinor"));
        assert!(run_all(1, 0, None).is_err());
    }

    #[test]
    fn region_mismatch_names_the_check() {
        let bad = IdentityCheck { sampler: Sampler::BreveRegion, ..find("polsum-spinor") };
        let err = run_check(&bad, 42, 20).unwrap_err();
        assert!(matches!(err, Error::Config { ref check, .. } if check == "polsum-spinor"), "{err}");
    }

    #[test]
    fn two_valued_examples() {
        assert_eq!(section4_two_valued(&Bispinor::zero()), (0.0, 0.0));
        let (lhs, rhs) = section4_two_valued(&Bispinor::unit(0));
        assert_eq!(rhs, 1.0);
        assert!(lhs.abs() < 1e-15);
        let xi = Bispinor([C64::new(0.3, -0.2), C64::new(0.1, 0.7), C64::new(-0.5, 0.4), C64::new(0.9, 0.0)]);
        let (l1, r1) = section4_two_valued(&xi);
        let (l2, r2) = section4_two_valued(&xi.scale(C64::new(2.0, 0.0)));
        assert!((l2 - 16.0 * l1).abs() < 1e-12 * l1.abs().max(1.0));
        assert!((r2 - 16.0 * r1).abs() < 1e-12 * r1);
    }

    #[test]
    fn full_run_has_no_failures() {
        let report = run_all(42, 100, None).unwrap();
        let failed: Vec<_> = report.checks.iter().filter(|c| c.failed()).map(|c| &c.name).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}
