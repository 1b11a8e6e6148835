use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter, Serializer};

use crate::clifford::SpatialIndex;

use super::{CheckResult, RunConfig, Status, DEFAULT_TOLERANCE};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Conventions {
    pub metric: &'static str,
    pub representation: &'static str,
    pub branch_rule: &'static str,
    pub gamma_dot_s_index: &'static str,
    pub epsilon_orientation: &'static str,
    pub generalized_pauli_sum: &'static str,
    pub plane_wave_phase: &'static str,
    pub spinor_adjoint: &'static str,
    pub antispinor_adjoint: &'static str,
    pub breve_adjoint: &'static str,
    pub diad: &'static str,
    pub breve_polarization_sums: &'static str,
    pub mass: f64,
    pub notes: Vec<&'static str>,
}

impl Conventions {
    fn new(config: &RunConfig) -> Self {
        Conventions {
            metric: "(+,-,-,-)",
            representation: "Dirac: γ⁰ = diag(1, 1, -1, -1), γⁱ = [[0, σⁱ], [-σⁱ, 0]], γ5 = iγ⁰γ¹γ²γ³ = [[0, 1], [1, 0]]",
            branch_rule: "principal square root, √x = i√|x| for x < 0; |p0| within 1e-12·m of m is snapped onto the boundary",
            gamma_dot_s_index: match config.context.convention {
                SpatialIndex::Upper => "upper: γ⃗·s⃗ = Σ γⁱ sⁱ",
                SpatialIndex::Lower => "lower: γ⃗·s⃗ = Σ γ_i sⁱ",
            },
            epsilon_orientation: "ε^{0123} = +1 (ε_{0123} = -1), ε_{123} = +1",
            generalized_pauli_sum: "σ±_λ sums over all ordered pairs (i, j), so σ⁺_λ = 2σ_{jk}",
            plane_wave_phase: "p̸ = p0 γ⁰ - |p⃗| n̂·γ⃗ with |p⃗| = √(p0² - m²), imaginary for |p0| < m",
            spinor_adjoint: "ū = u†γ⁰",
            antispinor_adjoint: "row (a φ†, -b φ† σ⃗·n̂) at -p0 with a, b taken unconjugated",
            breve_adjoint: "ū̆ = (γ5 (φ_{λ-}†[a - i(σ⃗·n̂)b], φ_{λ+}†[a + i(σ⃗·n̂)b]))ᵀ, coefficients unconjugated",
            diad: "|Φ⟩⟨Φ|Γ with ⟨Φ| = Φ†",
            breve_polarization_sums: "λ+ sum restricted to the upper block of ŭ, λ- sum to the lower block",
            mass: config.context.mass,
            notes: vec![
                "κ = ±1 is stated as the condition for spin eigenstates; this is a motivating remark and is not checked as a residual",
                "π projectors read σ⃗·s⃗ as the 4x4 operator γ5 γ⃗·s⃗",
                "the anticommutator is checked with the Minkowski metric; the literal δ form is kept as an expected failure",
                "ŭ at p0 = 0 and the unit basis e_τ/√2 are separate objects; their residual is reported as information",
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub version: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub tolerance: f64,
    pub conventions: Conventions,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub(super) fn new(config: &RunConfig, checks: Vec<CheckResult>) -> Self {
        VerificationReport {
            version: env!("CARGO_PKG_VERSION"),
            seed: config.seed,
            samples: config.samples,
            tolerance: config.tolerance_override.unwrap_or(DEFAULT_TOLERANCE),
            conventions: Conventions::new(config),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }
}

/// Pretty JSON that writes every float with 17 significant digits.
struct ExactFloats(PrettyFormatter<'static>);

impl Formatter for ExactFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, f64::from(value))
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut out = Vec::new();
    let mut ser = Serializer::with_formatter(&mut out, ExactFloats(PrettyFormatter::new()));
    value.serialize(&mut ser)?;
    out.push(b'\n');
    Ok(String::from_utf8(out).expect("serde_json writes UTF-8"))
}
