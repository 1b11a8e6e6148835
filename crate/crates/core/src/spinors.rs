//! Two-spinors, bispinors and the kinematic points they are evaluated at.
//!
//! Boost factors `√((p0 ± m)/2m)` go through [`principal_sqrt`], so a single
//! branch rule (`√x = i√|x|` for `x < 0`) continues every constructor across
//! `|p0| = m`. Plane-wave phases are fixed to 1.

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::clifford::{
    gamma, gamma5, gamma_dot, pauli_dot, slash_complex, FourVector, Matrix2, MatrixC4, Sign, SpatialIndex, C64,
};
use crate::error::{Error, Result};

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// Relative slack used when classifying `|p0|` against `m` and when
/// validating unit vectors.
pub const REGION_TOL: f64 = 1e-12;

/// Principal square root of a real number.
pub fn principal_sqrt(x: f64) -> C64 {
    if x >= 0.0 {
        C64::new(x.sqrt(), 0.0)
    } else {
        C64::new(0.0, (-x).sqrt())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoSpinor(pub [C64; 2]);

impl TwoSpinor {
    pub fn new(a: C64, b: C64) -> Self {
        TwoSpinor([a, b])
    }

    pub fn zero() -> Self {
        TwoSpinor([ZERO; 2])
    }

    /// `self† · other`
    pub fn inner(&self, other: &TwoSpinor) -> C64 {
        self.0[0].conj() * other.0[0] + self.0[1].conj() * other.0[1]
    }

    pub fn scale(&self, s: C64) -> Self {
        TwoSpinor(self.0.map(|z| z * s))
    }

    /// Components of the row `self† · m`.
    pub fn adjoint_times(&self, m: &Matrix2) -> TwoSpinor {
        let a = &m.0;
        let c = self.0.map(|z| z.conj());
        TwoSpinor([c[0] * a[0][0] + c[1] * a[1][0], c[0] * a[0][1] + c[1] * a[1][1]])
    }

    pub fn max_abs_diff(&self, other: &TwoSpinor) -> f64 {
        (self.0[0] - other.0[0]).norm().max((self.0[1] - other.0[1]).norm())
    }
}

impl Add for TwoSpinor {
    type Output = TwoSpinor;
    fn add(self, rhs: TwoSpinor) -> TwoSpinor {
        TwoSpinor([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1]])
    }
}

impl Sub for TwoSpinor {
    type Output = TwoSpinor;
    fn sub(self, rhs: TwoSpinor) -> TwoSpinor {
        TwoSpinor([self.0[0] - rhs.0[0], self.0[1] - rhs.0[1]])
    }
}

impl Mul<TwoSpinor> for Matrix2 {
    type Output = TwoSpinor;
    fn mul(self, v: TwoSpinor) -> TwoSpinor {
        let a = &self.0;
        TwoSpinor([a[0][0] * v.0[0] + a[0][1] * v.0[1], a[1][0] * v.0[0] + a[1][1] * v.0[1]])
    }
}

/// Four-component column: upper two-spinor stacked over lower two-spinor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bispinor(pub [C64; 4]);

impl Bispinor {
    pub fn zero() -> Self {
        Bispinor([ZERO; 4])
    }

    pub fn from_halves(upper: TwoSpinor, lower: TwoSpinor) -> Self {
        Bispinor([upper.0[0], upper.0[1], lower.0[0], lower.0[1]])
    }

    /// Standard basis vector `e_i`, `i ∈ 0..4`.
    pub fn unit(i: usize) -> Self {
        let mut v = [ZERO; 4];
        v[i] = ONE;
        Bispinor(v)
    }

    pub fn upper(&self) -> TwoSpinor {
        TwoSpinor([self.0[0], self.0[1]])
    }

    pub fn lower(&self) -> TwoSpinor {
        TwoSpinor([self.0[2], self.0[3]])
    }

    pub fn scale(&self, s: C64) -> Self {
        Bispinor(self.0.map(|z| z * s))
    }

    /// `|ψ|² = Σ |ψ_ν|²`
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `ψ†`
    pub fn dagger(&self) -> BispinorRow {
        BispinorRow(self.0.map(|z| z.conj()))
    }

    /// Row with the same entries, no conjugation.
    pub fn transpose(&self) -> BispinorRow {
        BispinorRow(self.0)
    }

    /// `self · row`, a 4×4 matrix.
    pub fn outer(&self, row: &BispinorRow) -> MatrixC4 {
        MatrixC4::from_fn(|i, j| self.0[i] * row.0[j])
    }

    pub fn max_abs_diff(&self, other: &Bispinor) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Add for Bispinor {
    type Output = Bispinor;
    fn add(self, rhs: Bispinor) -> Bispinor {
        Bispinor(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Bispinor {
    type Output = Bispinor;
    fn sub(self, rhs: Bispinor) -> Bispinor {
        Bispinor(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for Bispinor {
    type Output = Bispinor;
    fn neg(self) -> Bispinor {
        self.scale(-ONE)
    }
}

impl Mul<Bispinor> for MatrixC4 {
    type Output = Bispinor;
    fn mul(self, v: Bispinor) -> Bispinor {
        Bispinor(std::array::from_fn(|i| (0..4).map(|k| self.0[i][k] * v.0[k]).sum()))
    }
}

/// Four-component row, the result of an adjoint operation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BispinorRow(pub [C64; 4]);

impl BispinorRow {
    pub fn from_halves(upper: TwoSpinor, lower: TwoSpinor) -> Self {
        BispinorRow([upper.0[0], upper.0[1], lower.0[0], lower.0[1]])
    }

    /// `row · column`
    pub fn contract(&self, col: &Bispinor) -> C64 {
        self.0.iter().zip(&col.0).map(|(a, b)| a * b).sum()
    }

    pub fn upper(&self) -> TwoSpinor {
        TwoSpinor([self.0[0], self.0[1]])
    }

    pub fn lower(&self) -> TwoSpinor {
        TwoSpinor([self.0[2], self.0[3]])
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Mul<MatrixC4> for BispinorRow {
    type Output = BispinorRow;
    fn mul(self, m: MatrixC4) -> BispinorRow {
        BispinorRow(std::array::from_fn(|j| (0..4).map(|k| self.0[k] * m.0[k][j]).sum()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Helicity {
    /// `λ = +1/2`
    Up,
    /// `λ = −1/2`
    Down,
}

impl Helicity {
    pub const ALL: [Helicity; 2] = [Helicity::Up, Helicity::Down];

    pub fn value(self) -> f64 {
        0.5 * self.sign()
    }

    pub fn sign(self) -> f64 {
        match self {
            Helicity::Up => 1.0,
            Helicity::Down => -1.0,
        }
    }

    pub fn flip(self) -> Helicity {
        match self {
            Helicity::Up => Helicity::Down,
            Helicity::Down => Helicity::Up,
        }
    }
}

/// Tetrad label `τ ∈ {1, 2, 3, 4}`; τ = 1, 2 live in the upper block, 3, 4 in
/// the lower block; odd τ carry `λ = +1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TetradIndex {
    One,
    Two,
    Three,
    Four,
}

impl TetradIndex {
    pub const ALL: [TetradIndex; 4] = [TetradIndex::One, TetradIndex::Two, TetradIndex::Three, TetradIndex::Four];

    pub fn new(tau: u8) -> Result<Self> {
        match tau {
            1 => Ok(TetradIndex::One),
            2 => Ok(TetradIndex::Two),
            3 => Ok(TetradIndex::Three),
            4 => Ok(TetradIndex::Four),
            _ => Err(Error::InvalidArgument(format!("tetrad index {tau} not in 1..=4"))),
        }
    }

    pub fn get(self) -> u8 {
        match self {
            TetradIndex::One => 1,
            TetradIndex::Two => 2,
            TetradIndex::Three => 3,
            TetradIndex::Four => 4,
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(self, TetradIndex::One | TetradIndex::Two)
    }

    pub fn helicity(self) -> Helicity {
        match self {
            TetradIndex::One | TetradIndex::Three => Helicity::Up,
            TetradIndex::Two | TetradIndex::Four => Helicity::Down,
        }
    }
}

/// Undotted spinors boost with `exp(+χσ⃗·n̂/2)`, dotted with `exp(−χσ⃗·n̂/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinorKind {
    Undotted,
    Dotted,
}

impl SpinorKind {
    fn sign(self) -> f64 {
        match self {
            SpinorKind::Undotted => 1.0,
            SpinorKind::Dotted => -1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    /// `|p0| > m`
    BispinorReal,
    /// `|p0| < m`
    BreveComplex,
    /// `|p0| = m`, member of both regions.
    Boundary,
}

/// Mass, energy parameter and helicity axis. `|p⃗| = √(p0² − m²)` is implied,
/// imaginary inside `|p0| < m`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct KinematicPoint {
    m: f64,
    p0: f64,
    nhat: [f64; 3],
}

impl KinematicPoint {
    pub fn new(m: f64, p0: f64, nhat: [f64; 3]) -> Result<Self> {
        if !(m > 0.0 && m.is_finite()) {
            return Err(Error::InvalidArgument(format!("mass must be positive and finite, got {m}")));
        }
        if !p0.is_finite() {
            return Err(Error::InvalidArgument(format!("p0 must be finite, got {p0}")));
        }
        let len = nhat.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (len - 1.0).abs() > REGION_TOL {
            return Err(Error::InvalidArgument(format!("helicity axis must be a unit vector, |n| = {len}")));
        }
        Ok(KinematicPoint { m, p0, nhat })
    }

    /// Rest point `p0 = m` with the default axis `ẑ`.
    pub fn rest(m: f64) -> Result<Self> {
        Self::new(m, m, [0.0, 0.0, 1.0])
    }

    /// Builds a point from an on-shell real four-momentum. The axis is
    /// `p⃗/|p⃗|`, or `ẑ` when `p⃗ = 0`.
    pub fn from_momentum(p: &FourVector, m: f64) -> Result<Self> {
        let residual = p.square() - m * m;
        let scale = p.time().abs().max(m).powi(2).max(1.0);
        if residual.abs() > 1e-10 * scale {
            return Err(Error::OffShell { residual });
        }
        let v = p.space();
        let len = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let nhat = if len > 0.0 { v.map(|x| x / len) } else { [0.0, 0.0, 1.0] };
        Self::new(m, p.time(), nhat)
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn nhat(&self) -> [f64; 3] {
        self.nhat
    }

    pub fn with_nhat(&self, nhat: [f64; 3]) -> Result<Self> {
        Self::new(self.m, self.p0, nhat)
    }

    /// Same mass and axis, `p0 → −p0`.
    pub fn with_negated_energy(&self) -> Self {
        KinematicPoint { p0: -self.p0, ..*self }
    }

    fn on_boundary(&self) -> bool {
        (self.p0.abs() - self.m).abs() <= REGION_TOL * self.m
    }

    pub fn in_real_region(&self) -> bool {
        self.p0.abs() >= self.m || self.on_boundary()
    }

    pub fn in_breve_region(&self) -> bool {
        self.p0.abs() <= self.m || self.on_boundary()
    }

    pub fn region(&self) -> Region {
        if self.on_boundary() {
            Region::Boundary
        } else if self.p0.abs() > self.m {
            Region::BispinorReal
        } else {
            Region::BreveComplex
        }
    }

    /// `p0` snapped onto `±m` when within rounding distance of the boundary.
    fn effective_p0(&self) -> f64 {
        if self.on_boundary() {
            self.m.copysign(self.p0)
        } else {
            self.p0
        }
    }

    /// `(√((p0+m)/2m), √((p0−m)/2m))` on the principal branch.
    pub fn boost_factors(&self) -> (C64, C64) {
        let p0 = self.effective_p0();
        let two_m = 2.0 * self.m;
        (principal_sqrt((p0 + self.m) / two_m), principal_sqrt((p0 - self.m) / two_m))
    }

    /// `|p⃗| = √(p0² − m²)`, imaginary in the breve region.
    pub fn momentum_magnitude(&self) -> C64 {
        let p0 = self.effective_p0();
        principal_sqrt(p0 * p0 - self.m * self.m)
    }

    /// `(p0, |p⃗| n̂)` with the continued magnitude.
    pub fn momentum(&self) -> [C64; 4] {
        let k = self.momentum_magnitude();
        [C64::new(self.p0, 0.0), k * self.nhat[0], k * self.nhat[1], k * self.nhat[2]]
    }

    /// Real four-momentum, available only in the real region.
    pub fn four_momentum(&self) -> Option<FourVector> {
        if !self.in_real_region() {
            return None;
        }
        let k = self.momentum_magnitude().re;
        Some(FourVector::new(self.p0, k * self.nhat[0], k * self.nhat[1], k * self.nhat[2]))
    }

    pub fn slash_momentum(&self) -> MatrixC4 {
        slash_complex(&self.momentum())
    }

    /// `σ⃗·n̂`
    pub fn sigma_n(&self) -> Matrix2 {
        pauli_dot(self.nhat)
    }

    fn require_real(&self, hint: &'static str) -> Result<()> {
        if self.in_real_region() {
            Ok(())
        } else {
            Err(Error::Region { p0_abs: self.p0.abs(), m: self.m, hint })
        }
    }

    fn require_breve(&self, hint: &'static str) -> Result<()> {
        if self.in_breve_region() {
            Ok(())
        } else {
            Err(Error::Region { p0_abs: self.p0.abs(), m: self.m, hint })
        }
    }
}

const USE_BREVE: &str = "requires |p0| >= m; use breve_u for |p0| < m";
const USE_REAL: &str = "requires |p0| <= m; use bispinor_u for |p0| > m";

/// Rapidity and axis of a pure boost.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoostParams {
    chi: f64,
    nhat: [f64; 3],
}

impl BoostParams {
    pub fn new(chi: f64, nhat: [f64; 3]) -> Result<Self> {
        if !(chi >= 0.0 && chi.is_finite()) {
            return Err(Error::InvalidArgument(format!("rapidity must be finite and >= 0, got {chi}")));
        }
        let len = nhat.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (len - 1.0).abs() > REGION_TOL {
            return Err(Error::InvalidArgument(format!("boost axis must be a unit vector, |n| = {len}")));
        }
        Ok(BoostParams { chi, nhat })
    }

    /// `cosh χ = p0/m`; needs `p0 >= m`.
    pub fn from_kinematic(k: &KinematicPoint) -> Result<Self> {
        let ratio = k.effective_p0() / k.m();
        if ratio < 1.0 {
            return Err(Error::Domain(format!("no real rapidity for p0/m = {ratio}")));
        }
        Self::new(ratio.acosh(), k.nhat())
    }

    pub fn chi(&self) -> f64 {
        self.chi
    }

    pub fn nhat(&self) -> [f64; 3] {
        self.nhat
    }
}

/// `φ_{+1/2} = (1, 0)`, `φ_{−1/2} = (0, 1)`.
pub fn basis_two_spinor(lambda: Helicity) -> TwoSpinor {
    match lambda {
        Helicity::Up => TwoSpinor([ONE, ZERO]),
        Helicity::Down => TwoSpinor([ZERO, ONE]),
    }
}

/// `ξ = [a + (σ⃗·n̂) b] φ_λ` (undotted) or `ξ̇ = [a − (σ⃗·n̂) b] φ_λ` (dotted)
/// with `a, b` the boost factors.
pub fn xi(k: &KinematicPoint, lambda: Helicity, kind: SpinorKind) -> Result<TwoSpinor> {
    k.require_real(USE_BREVE)?;
    let (a, b) = k.boost_factors();
    let op = Matrix2::identity().scale(a) + k.sigma_n().scale(b * kind.sign());
    Ok(op * basis_two_spinor(lambda))
}

/// Applies `cosh(χ/2) ± sinh(χ/2) σ⃗·n̂`, `+` for undotted.
pub fn boost_two_spinor(phi: &TwoSpinor, b: &BoostParams, kind: SpinorKind) -> TwoSpinor {
    let half = 0.5 * b.chi();
    let op = Matrix2::identity().scale(C64::new(half.cosh(), 0.0))
        + pauli_dot(b.nhat()).scale(C64::new(kind.sign() * half.sinh(), 0.0));
    op * *phi
}

/// `(Ψ₁, Ψ₂) = ((ξ + ξ̇)/2, (ξ − ξ̇)/2)`.
pub fn parity_spinors(xi: &TwoSpinor, xi_dot: &TwoSpinor) -> (TwoSpinor, TwoSpinor) {
    let half = C64::new(0.5, 0.0);
    ((*xi + *xi_dot).scale(half), (*xi - *xi_dot).scale(half))
}

/// `Ψ⁻ = (a φ_{λs}, (σ⃗·n̂) b φ_{λa})`.
pub fn psi_minus(k: &KinematicPoint, lambda_s: Helicity, lambda_a: Helicity) -> Result<Bispinor> {
    k.require_real(USE_BREVE)?;
    let (a, b) = k.boost_factors();
    let upper = basis_two_spinor(lambda_s).scale(a);
    let lower = (k.sigma_n() * basis_two_spinor(lambda_a)).scale(b);
    Ok(Bispinor::from_halves(upper, lower))
}

/// Row `(a φ_{λs}†, −b φ_{λa}† σ⃗·n̂)` conjugate to [`psi_minus`].
///
/// The two-spinor structure is conjugated but the boost factors are not, so
/// for `p0 >= m` this equals [`dirac_adjoint`] and at negative energy, where
/// `a` and `b` are imaginary, the phases multiply instead of cancelling.
pub fn psi_minus_adjoint(k: &KinematicPoint, lambda_s: Helicity, lambda_a: Helicity) -> Result<BispinorRow> {
    k.require_real(USE_BREVE)?;
    let (a, b) = k.boost_factors();
    let upper = basis_two_spinor(lambda_s).adjoint_times(&Matrix2::identity()).scale(a);
    let lower = basis_two_spinor(lambda_a).adjoint_times(&k.sigma_n()).scale(-b);
    Ok(BispinorRow::from_halves(upper, lower))
}

/// Tetrad basis bispinor `u(p, s^τ)`: upper `a φ_λ` for τ = 1, 2; lower
/// `(σ⃗·n̂) b φ_λ` for τ = 3, 4.
pub fn bispinor_u(k: &KinematicPoint, tau: TetradIndex) -> Result<Bispinor> {
    k.require_real(USE_BREVE)?;
    let (a, b) = k.boost_factors();
    let phi = basis_two_spinor(tau.helicity());
    Ok(if tau.is_upper() {
        Bispinor::from_halves(phi.scale(a), TwoSpinor::zero())
    } else {
        Bispinor::from_halves(TwoSpinor::zero(), (k.sigma_n() * phi).scale(b))
    })
}

/// Imaginary antisymmetric basis `u⁺(p, s^τ)`: upper `±i b φ_λ` for τ = 1, 2;
/// lower `±i (σ⃗·n̂) a φ_λ` for τ = 3, 4.
pub fn bispinor_u_plus(k: &KinematicPoint, tau: TetradIndex, sign: Sign) -> Result<Bispinor> {
    k.require_real(USE_BREVE)?;
    let (a, b) = k.boost_factors();
    let phase = I * sign.value();
    let phi = basis_two_spinor(tau.helicity());
    Ok(if tau.is_upper() {
        Bispinor::from_halves(phi.scale(phase * b), TwoSpinor::zero())
    } else {
        Bispinor::from_halves(TwoSpinor::zero(), (k.sigma_n() * phi).scale(phase * a))
    })
}

fn breve_operators(k: &KinematicPoint) -> (Matrix2, Matrix2) {
    let (a, b) = k.boost_factors();
    let id = Matrix2::identity().scale(a);
    let sn = k.sigma_n().scale(I * b);
    (id + sn, id - sn)
}

/// Complex bispinor `ŭ` on `|p0| <= m`:
/// upper `[a + i(σ⃗·n̂)b] φ_{λ+}`, lower `[a − i(σ⃗·n̂)b] φ_{λ−}`.
pub fn breve_u(k: &KinematicPoint, lambda_plus: Helicity, lambda_minus: Helicity) -> Result<Bispinor> {
    k.require_breve(USE_REAL)?;
    let (plus_op, minus_op) = breve_operators(k);
    Ok(Bispinor::from_halves(
        plus_op * basis_two_spinor(lambda_plus),
        minus_op * basis_two_spinor(lambda_minus),
    ))
}

/// Conjugate row of [`breve_u`], built through `γ5`.
///
/// The column `(φ_{λ−}†[a − i(σ⃗·n̂)b], φ_{λ+}†[a + i(σ⃗·n̂)b])` is multiplied by
/// `γ5` and transposed, giving the row
/// `(φ_{λ+}†[a + i(σ⃗·n̂)b], φ_{λ−}†[a − i(σ⃗·n̂)b])`. The coefficients `a`,
/// `b` and `i` are not conjugated.
pub fn breve_u_bar(k: &KinematicPoint, lambda_plus: Helicity, lambda_minus: Helicity) -> Result<BispinorRow> {
    k.require_breve(USE_REAL)?;
    let (plus_op, minus_op) = breve_operators(k);
    let column = Bispinor::from_halves(
        basis_two_spinor(lambda_minus).adjoint_times(&minus_op),
        basis_two_spinor(lambda_plus).adjoint_times(&plus_op),
    );
    Ok((gamma5() * column).transpose())
}

/// `e_τ/√2`, the unit basis at `p0 = 0`.
pub fn rest_basis(tau: TetradIndex) -> Bispinor {
    Bispinor::unit(usize::from(tau.get() - 1)).scale(C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0))
}

/// `ū = u†γ⁰`
pub fn dirac_adjoint(u: &Bispinor) -> BispinorRow {
    u.dagger() * gamma(0).expect("γ⁰")
}

/// Spin operator `diag(σ⃗·n̂, −σ⃗·n̂)` acting on bispinors.
pub fn block_spin_operator(nhat: [f64; 3]) -> MatrixC4 {
    let sn = pauli_dot(nhat);
    MatrixC4::from_blocks(sn, Matrix2::zero(), Matrix2::zero(), -sn)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapVariant {
    /// `u = γ5 (γ⃗·s⃗) ŭ`
    U,
    /// `v = (γ⃗·s⃗) γ5 ŭ`
    V,
}

/// Maps a breve bispinor to a spinor with the upper-index `γ⃗·s⃗`.
pub fn spinor_from_breve(breve: &Bispinor, s: &FourVector, variant: MapVariant) -> Result<Bispinor> {
    spinor_from_breve_with(breve, s, variant, SpatialIndex::Upper)
}

pub fn spinor_from_breve_with(
    breve: &Bispinor,
    s: &FourVector,
    variant: MapVariant,
    convention: SpatialIndex,
) -> Result<Bispinor> {
    if s.time() != 0.0 {
        return Err(Error::InvalidArgument(format!("spin tetrad must be spatial, s0 = {}", s.time())));
    }
    let gs = gamma_dot(s.space(), convention);
    let op = match variant {
        MapVariant::U => gamma5() * gs,
        MapVariant::V => gs * gamma5(),
    };
    Ok(op * *breve)
}

/// `κ = √((p0 − m)/(p0 + m))` for `p0 >= m`.
pub fn kappa(p0: f64, m: f64) -> Result<f64> {
    if !(m > 0.0) {
        return Err(Error::InvalidArgument(format!("mass must be positive, got {m}")));
    }
    if p0 < m {
        return Err(Error::Domain(format!(
            "κ is imaginary for p0 = {p0} < m = {m}; use the breve region"
        )));
    }
    Ok(((p0 - m) / (p0 + m)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;
    const Z: [f64; 3] = [0.0, 0.0, 1.0];

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn kp(m: f64, p0: f64) -> KinematicPoint {
        KinematicPoint::new(m, p0, Z).unwrap()
    }

    fn bisp(v: [C64; 4]) -> Bispinor {
        Bispinor(v)
    }

    #[test]
    fn basis_spinors() {
        assert_eq!(basis_two_spinor(Helicity::Up), TwoSpinor::new(ONE, ZERO));
        assert_eq!(basis_two_spinor(Helicity::Down), TwoSpinor::new(ZERO, ONE));
        assert_eq!(basis_two_spinor(Helicity::Up).inner(&basis_two_spinor(Helicity::Down)), ZERO);
    }

    #[test]
    fn kinematic_point_validation() {
        assert!(KinematicPoint::new(0.0, 1.0, Z).is_err());
        assert!(KinematicPoint::new(1.0, 1.0, [0.0, 0.0, 2.0]).is_err());
        assert!(KinematicPoint::new(1.0, f64::NAN, Z).is_err());
        assert_eq!(kp(1.0, 1.0).region(), Region::Boundary);
        assert_eq!(kp(1.0, -1.0).region(), Region::Boundary);
        assert_eq!(kp(1.0, 2.0).region(), Region::BispinorReal);
        assert_eq!(kp(1.0, 0.2).region(), Region::BreveComplex);
        let b = kp(1.0, 1.0);
        assert!(b.in_real_region() && b.in_breve_region());
    }

    #[test]
    fn from_momentum_rejects_off_shell() {
        let err = KinematicPoint::from_momentum(&FourVector::new(1.25, 0.0, 0.0, 0.5), 1.0).unwrap_err();
        match err {
            Error::OffShell { residual } => assert!((residual - (1.5625 - 0.25 - 1.0)).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
        let k = KinematicPoint::from_momentum(&FourVector::new(1.25, 0.0, 0.0, 0.75), 1.0).unwrap();
        assert_eq!(k.nhat(), Z);
        let rest = KinematicPoint::from_momentum(&FourVector::new(2.0, 0.0, 0.0, 0.0), 2.0).unwrap();
        assert_eq!(rest.nhat(), Z);
    }

    #[test]
    fn xi_examples() {
        let rest = KinematicPoint::new(1.0, 1.0, [0.6, 0.0, 0.8]).unwrap();
        let x = xi(&rest, Helicity::Up, SpinorKind::Undotted).unwrap();
        assert!(x.max_abs_diff(&TwoSpinor::new(ONE, ZERO)) < TOL);

        let k = kp(1.0, 1.25);
        let x = xi(&k, Helicity::Up, SpinorKind::Undotted).unwrap();
        assert!(x.max_abs_diff(&TwoSpinor::new(c(2f64.sqrt()), ZERO)) < TOL);
        let xd = xi(&k, Helicity::Up, SpinorKind::Dotted).unwrap();
        assert!(xd.max_abs_diff(&TwoSpinor::new(c(0.5f64.sqrt()), ZERO)) < TOL);

        assert!(matches!(
            xi(&kp(1.0, 0.5), Helicity::Up, SpinorKind::Undotted),
            Err(Error::Region { .. })
        ));
    }

    #[test]
    fn boost_examples() {
        let phi = basis_two_spinor(Helicity::Down);
        let id = BoostParams::new(0.0, Z).unwrap();
        assert_eq!(boost_two_spinor(&phi, &id, SpinorKind::Dotted), phi);

        let k = kp(1.0, 1.25);
        let b = BoostParams::from_kinematic(&k).unwrap();
        assert!((b.chi().cosh() - 1.25).abs() < TOL);
        let boosted = boost_two_spinor(&basis_two_spinor(Helicity::Up), &b, SpinorKind::Undotted);
        let direct = xi(&k, Helicity::Up, SpinorKind::Undotted).unwrap();
        assert!(boosted.max_abs_diff(&direct) < TOL);

        assert!(BoostParams::from_kinematic(&kp(1.0, 0.5)).is_err());
        assert!(BoostParams::new(-0.1, Z).is_err());
    }

    #[test]
    fn parity_examples() {
        let x = TwoSpinor::new(c(0.3), C64::new(0.1, -0.2));
        let (p1, p2) = parity_spinors(&x, &x);
        assert_eq!(p2, TwoSpinor::zero());
        assert!((p1 + p2).max_abs_diff(&x) < TOL);

        let k = kp(1.0, 1.25);
        let (p1, p2) = parity_spinors(
            &xi(&k, Helicity::Up, SpinorKind::Undotted).unwrap(),
            &xi(&k, Helicity::Up, SpinorKind::Dotted).unwrap(),
        );
        assert!(p1.max_abs_diff(&TwoSpinor::new(c(1.125f64.sqrt()), ZERO)) < TOL);
        assert!(p2.max_abs_diff(&TwoSpinor::new(c(0.125f64.sqrt()), ZERO)) < TOL);
    }

    #[test]
    fn bispinor_u_examples() {
        let rest = kp(1.0, 1.0);
        assert!(bispinor_u(&rest, TetradIndex::One).unwrap().max_abs_diff(&Bispinor::unit(0)) < TOL);
        assert!(bispinor_u(&rest, TetradIndex::Three).unwrap().max_abs() < TOL);
        let u4 = bispinor_u(&kp(1.0, 1.25), TetradIndex::Four).unwrap();
        assert!(u4.max_abs_diff(&bisp([ZERO, ZERO, ZERO, c(-(0.125f64.sqrt()))])) < TOL);
        assert!(bispinor_u(&kp(1.0, 0.0), TetradIndex::One).is_err());
    }

    #[test]
    fn bispinor_u_plus_examples() {
        let rest = kp(1.0, 1.0);
        assert!(bispinor_u_plus(&rest, TetradIndex::One, Sign::Plus).unwrap().max_abs() < TOL);
        let u3 = bispinor_u_plus(&rest, TetradIndex::Three, Sign::Plus).unwrap();
        assert!(u3.max_abs_diff(&bisp([ZERO, ZERO, I, ZERO])) < TOL);
        // σ⃗·n̂ is real only for n̂ in the xz-plane; σ₂ brings in real parts otherwise.
        let tilted = KinematicPoint::new(1.0, 1.0, [0.6, 0.0, -0.8]).unwrap();
        for tau in TetradIndex::ALL {
            for sign in [Sign::Plus, Sign::Minus] {
                let u = bispinor_u_plus(&tilted, tau, sign).unwrap();
                assert!(u.0.iter().all(|z| z.re.abs() < TOL), "tau={tau:?}");
            }
        }
    }

    #[test]
    fn breve_examples() {
        let u = breve_u(&kp(1.0, 1.0), Helicity::Up, Helicity::Up).unwrap();
        assert!(u.max_abs_diff(&bisp([ONE, ZERO, ONE, ZERO])) < TOL);

        let u = breve_u(&kp(1.0, 0.0), Helicity::Up, Helicity::Up).unwrap();
        assert!(u.max_abs_diff(&bisp([ZERO, ZERO, c(2f64.sqrt()), ZERO])) < TOL);

        assert!(matches!(breve_u(&kp(1.0, 1.5), Helicity::Up, Helicity::Up), Err(Error::Region { .. })));
        assert!(breve_u_bar(&kp(1.0, -1.5), Helicity::Up, Helicity::Up).is_err());
    }

    #[test]
    fn breve_norm_examples() {
        let k = kp(1.0, 1.0);
        let n = breve_u_bar(&k, Helicity::Up, Helicity::Up)
            .unwrap()
            .contract(&breve_u(&k, Helicity::Up, Helicity::Up).unwrap());
        assert!((n - c(2.0)).norm() < TOL);

        let k = kp(1.0, 0.5);
        let n = breve_u_bar(&k, Helicity::Down, Helicity::Down)
            .unwrap()
            .contract(&breve_u(&k, Helicity::Down, Helicity::Down).unwrap());
        assert!((n - c(2.0)).norm() < TOL);

        // Mixed helicities: 2 + 2ac(⟨−|σ₃|−⟩ − ⟨+|σ₃|+⟩) = 2 − 4ac with
        // a = √0.75, c = √0.25, i.e. 2 − √3.
        let n = breve_u_bar(&k, Helicity::Up, Helicity::Down)
            .unwrap()
            .contract(&breve_u(&k, Helicity::Up, Helicity::Down).unwrap());
        assert!((n - c(0.267_949_192_431_122_7)).norm() < TOL);
    }

    #[test]
    fn rest_basis_examples() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        assert!(rest_basis(TetradIndex::One).max_abs_diff(&bisp([c(r), ZERO, ZERO, ZERO])) < TOL);
        assert!(rest_basis(TetradIndex::Four).max_abs_diff(&bisp([ZERO, ZERO, ZERO, c(r)])) < TOL);
        let sum: MatrixC4 = TetradIndex::ALL
            .iter()
            .map(|&t| {
                let e = rest_basis(t);
                e.outer(&e.dagger()).scale_real(2.0)
            })
            .sum();
        assert!(sum.approx_eq(&MatrixC4::identity(), TOL));
    }

    #[test]
    fn dirac_adjoint_examples() {
        assert_eq!(dirac_adjoint(&Bispinor::unit(0)).0, [ONE, ZERO, ZERO, ZERO]);
        assert_eq!(dirac_adjoint(&Bispinor::unit(2)).0, [ZERO, ZERO, -ONE, ZERO]);
        let k = kp(1.0, 1.25);
        let u = psi_minus(&k, Helicity::Up, Helicity::Up).unwrap();
        assert!((dirac_adjoint(&u).contract(&u) - ONE).norm() < TOL);
    }

    #[test]
    fn analytic_adjoint_matches_dirac_adjoint_at_positive_energy() {
        let k = KinematicPoint::new(1.0, 3.7, [0.0, 0.6, 0.8]).unwrap();
        for ls in Helicity::ALL {
            for la in Helicity::ALL {
                let u = psi_minus(&k, ls, la).unwrap();
                let a = psi_minus_adjoint(&k, ls, la).unwrap();
                let d = dirac_adjoint(&u);
                assert!(a.0.iter().zip(&d.0).all(|(x, y)| (x - y).norm() < TOL));
            }
        }
    }

    #[test]
    fn negated_energy_psi_minus_is_imaginary_antisymmetric_spinor() {
        let k = KinematicPoint::new(1.0, 2.0, [0.0, 0.6, 0.8]).unwrap();
        let neg = k.with_negated_energy();
        let (a, b) = k.boost_factors();
        let u = psi_minus(&neg, Helicity::Up, Helicity::Up).unwrap();
        let phi = basis_two_spinor(Helicity::Up);
        let want = Bispinor::from_halves(phi.scale(I * b), (k.sigma_n() * phi).scale(I * a));
        assert!(u.max_abs_diff(&want) < TOL);
    }

    #[test]
    fn spinor_from_breve_examples() {
        let s = FourVector::spatial(Z);
        let b = bisp([ZERO, ZERO, c(2f64.sqrt()), ZERO]);
        let u = spinor_from_breve(&b, &s, MapVariant::U).unwrap();
        // γ5γ³ = diag(−σ₃, σ₃) = diag(−1, 1, 1, −1)
        assert!(u.max_abs_diff(&b) < TOL);

        let e1 = rest_basis(TetradIndex::One);
        let u = spinor_from_breve(&e1, &s, MapVariant::U).unwrap();
        assert!(u.max_abs_diff(&-e1) < TOL);

        let v = spinor_from_breve(&e1, &s, MapVariant::V).unwrap();
        assert!(v.max_abs_diff(&e1) < TOL);

        let twice = spinor_from_breve(&u, &s, MapVariant::U).unwrap();
        assert!(twice.max_abs_diff(&e1) < TOL);

        assert!(spinor_from_breve(&e1, &FourVector::new(0.1, 0.0, 0.0, 1.0), MapVariant::U).is_err());
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(1.0, 1.0).unwrap(), 0.0);
        assert!((kappa(1.25, 1.0).unwrap() - 1.0 / 3.0).abs() < TOL);
        assert!((kappa(5.0 / 3.0, 1.0).unwrap() - 0.5).abs() < TOL);
        assert!(matches!(kappa(0.5, 1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn block_spin_operator_rest_signs() {
        let op = block_spin_operator(Z);
        let signs = [1.0, -1.0, -1.0, 1.0];
        for (tau, s) in TetradIndex::ALL.into_iter().zip(signs) {
            let e = rest_basis(tau);
            assert!((op * e).max_abs_diff(&e.scale(c(s))) == 0.0);
        }
    }

    #[test]
    fn tetrad_index_labels() {
        assert!(TetradIndex::new(0).is_err());
        assert!(TetradIndex::new(5).is_err());
        assert_eq!(TetradIndex::new(3).unwrap().helicity(), Helicity::Up);
        assert!(!TetradIndex::Four.is_upper());
        assert_eq!(Helicity::Down.value(), -0.5);
    }
}
