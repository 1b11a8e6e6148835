//! Spin, energy and π projectors, diads, and polarization sums.
//!
//! Every polarization sum is returned as a pair: the explicit outer-product
//! sum over basis bispinors and the closed form it is claimed to equal.
//! Comparing the two is the caller's job.

use crate::clifford::{gamma, gamma5, gamma_dot, pauli_dot, slash, FourVector, Matrix2, MatrixC4, Sign, SpatialIndex, C64};
use crate::error::{Error, Result};
use crate::spinors::{
    breve_u, breve_u_bar, dirac_adjoint, psi_minus, psi_minus_adjoint, Bispinor, BispinorRow, Helicity, KinematicPoint,
    TwoSpinor, REGION_TOL,
};

/// Spatial unit spin vector `s = (0, s⃗)`, `s·s = −1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinVector([f64; 3]);

impl SpinVector {
    pub fn new(s: [f64; 3]) -> Result<Self> {
        let len = s.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (len - 1.0).abs() > REGION_TOL {
            return Err(Error::InvalidArgument(format!("spin vector must have |s| = 1, got {len}")));
        }
        Ok(SpinVector(s))
    }

    pub fn from_four_vector(s: &FourVector) -> Result<Self> {
        if s.time() != 0.0 {
            return Err(Error::InvalidArgument(format!("spin vector must have s0 = 0, got {}", s.time())));
        }
        Self::new(s.space())
    }

    pub fn space(&self) -> [f64; 3] {
        self.0
    }

    pub fn four_vector(&self) -> FourVector {
        FourVector::spatial(self.0)
    }

    pub fn negated(&self) -> SpinVector {
        SpinVector(self.0.map(|x| -x))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectorKind {
    Spin,
    EnergyPlus,
    EnergyMinus,
    Pi,
    PiNeg,
    Diad,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Projector {
    matrix: MatrixC4,
    kind: ProjectorKind,
}

impl Projector {
    pub fn matrix(&self) -> &MatrixC4 {
        &self.matrix
    }

    pub fn kind(&self) -> ProjectorKind {
        self.kind
    }

    /// `max |P² − P|`
    pub fn idempotency_residual(&self) -> f64 {
        (self.matrix * self.matrix).max_abs_diff(&self.matrix)
    }
}

/// Rest-frame helicity projector `(1 + σ⃗·n̂)/2`.
pub fn spin_projector_rest(nhat: [f64; 3]) -> Result<Matrix2> {
    let s = SpinVector::new(nhat)?;
    Ok((Matrix2::identity() + pauli_dot(s.space())).scale(C64::new(0.5, 0.0)))
}

/// `P(s) = (1 + γ5 s̸)/2`
pub fn spin_projector(s: &SpinVector) -> Projector {
    let matrix = (MatrixC4::identity() + gamma5() * slash(&s.four_vector())).scale_real(0.5);
    Projector { matrix, kind: ProjectorKind::Spin }
}

/// The four tetrad spin vectors `{+n̂, −n̂}` paired with the upper (τ = 1, 2)
/// and lower (τ = 3, 4) blocks.
pub fn tetrad_spin_vectors(nhat: &SpinVector) -> [SpinVector; 4] {
    let neg = nhat.negated();
    [*nhat, neg, *nhat, neg]
}

fn shell_check(p: &FourVector, m: f64) -> Result<KinematicPoint> {
    if !(m > 0.0) {
        return Err(Error::InvalidArgument(format!("mass must be positive, got {m}")));
    }
    KinematicPoint::from_momentum(p, m)
}

/// `Λ₊ = (p̸ + m)/2m`, `Λ₋ = (m − p̸)/2m` for an on-shell real momentum.
pub fn energy_projector(p: &FourVector, m: f64, sign: Sign) -> Result<Projector> {
    let k = shell_check(p, m)?;
    Ok(energy_projector_at(&k, sign))
}

/// Energy projector at a kinematic point; in the breve region the momentum
/// is the continued one with imaginary `|p⃗|`.
pub fn energy_projector_at(k: &KinematicPoint, sign: Sign) -> Projector {
    let m = k.m();
    let pslash = k.slash_momentum();
    let id = MatrixC4::identity().scale_real(m);
    let (matrix, kind) = match sign {
        Sign::Plus => (pslash + id, ProjectorKind::EnergyPlus),
        Sign::Minus => (id - pslash, ProjectorKind::EnergyMinus),
    };
    Projector { matrix: matrix.scale_real(0.5 / m), kind }
}

/// Matrix inserted between ket and bra of a diad.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiadInsert {
    Gamma0,
    Gamma5,
}

impl DiadInsert {
    pub fn matrix(self) -> MatrixC4 {
        match self {
            DiadInsert::Gamma0 => gamma(0).expect("γ⁰"),
            DiadInsert::Gamma5 => gamma5(),
        }
    }
}

/// `|Φ⟩⟨Φ|Γ` with `⟨Φ| = Φ†`. For `Γ = γ⁰` this is `Φ Φ̄`.
pub fn diad(column: &Bispinor, insert: DiadInsert) -> MatrixC4 {
    column.outer(&column.dagger()) * insert.matrix()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PiVariant {
    /// `π^λ = −(1/4m)(p̸ − m)(1 − γ5 γ⃗·s⃗)`
    Lambda,
    /// `π^{−λ} = (1/4m)(p̸ + m)(1 − (γ⃗·s⃗)γ5)`
    NegLambda,
}

/// π projector for an on-shell real momentum, upper-index `γ⃗·s⃗`.
pub fn pi_projector(p: &FourVector, m: f64, s: &SpinVector, variant: PiVariant) -> Result<Projector> {
    let k = shell_check(p, m)?;
    Ok(pi_projector_at(&k, s, variant, SpatialIndex::Upper))
}

pub fn pi_projector_at(k: &KinematicPoint, s: &SpinVector, variant: PiVariant, convention: SpatialIndex) -> Projector {
    let m = k.m();
    let pslash = k.slash_momentum();
    let id = MatrixC4::identity();
    let gs = gamma_dot(s.space(), convention);
    let (matrix, kind) = match variant {
        PiVariant::Lambda => (
            ((pslash - id.scale_real(m)) * (id - gamma5() * gs)).scale_real(-0.25 / m),
            ProjectorKind::Pi,
        ),
        PiVariant::NegLambda => (
            ((pslash + id.scale_real(m)) * (id - gs * gamma5())).scale_real(0.25 / m),
            ProjectorKind::PiNeg,
        ),
    };
    Projector { matrix, kind }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolsumKind {
    /// `Σ_λ u^λ ū^λ` against `(p̸ + m)/2m`
    Spinor,
    /// `Σ_λ u^λ(−p) ū^λ(−p)` against `(m − p̸)/2m`
    Antispinor,
    /// `Σ_{λ+} ŭ^{λ+} ū̆^{λ+}` against `(p̸ + m)/2m`
    BrevePlus,
    /// `Σ_{λ−} ŭ^{λ−} ū̆^{λ−}` against `(m − p̸)/2m`
    BreveMinus,
    /// `Λ₊ + Λ₋` against the identity
    Completeness,
}

impl PolsumKind {
    pub const ALL: [PolsumKind; 5] = [
        PolsumKind::Spinor,
        PolsumKind::Antispinor,
        PolsumKind::BrevePlus,
        PolsumKind::BreveMinus,
        PolsumKind::Completeness,
    ];
}

/// Both sides of a polarization-sum identity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolSum {
    pub lhs: MatrixC4,
    pub rhs: MatrixC4,
}

impl PolSum {
    pub fn residual(&self) -> f64 {
        self.lhs.max_abs_diff(&self.rhs)
    }
}

fn positive_energy(k: &KinematicPoint) -> Result<()> {
    if k.in_real_region() && k.p0() > 0.0 {
        Ok(())
    } else {
        Err(Error::Region {
            p0_abs: k.p0().abs(),
            m: k.m(),
            hint: "spinor polarization sums need an on-shell point with p0 >= m",
        })
    }
}

fn breve_region(k: &KinematicPoint) -> Result<()> {
    if k.in_breve_region() {
        Ok(())
    } else {
        Err(Error::Region {
            p0_abs: k.p0().abs(),
            m: k.m(),
            hint: "breve polarization sums need |p0| <= m",
        })
    }
}

/// Explicit sum and closed form for the chosen polarization sum.
///
/// Breve sums keep each block of `ŭ` separate: the `λ+` sum pairs the upper
/// two-spinor of `ŭ(λ, λ)` with the upper slot of `ū̆(λ, λ)`, the `λ−` sum
/// does the same for the lower block.
pub fn polsum(kind: PolsumKind, k: &KinematicPoint) -> Result<PolSum> {
    let lambda_plus = energy_projector_at(k, Sign::Plus).matrix;
    let lambda_minus = energy_projector_at(k, Sign::Minus).matrix;
    match kind {
        PolsumKind::Spinor => {
            positive_energy(k)?;
            let mut lhs = MatrixC4::zero();
            for l in Helicity::ALL {
                let u = psi_minus(k, l, l)?;
                lhs += u.outer(&dirac_adjoint(&u));
            }
            Ok(PolSum { lhs, rhs: lambda_plus })
        }
        PolsumKind::Antispinor => {
            positive_energy(k)?;
            let neg = k.with_negated_energy();
            let mut lhs = MatrixC4::zero();
            for l in Helicity::ALL {
                lhs += psi_minus(&neg, l, l)?.outer(&psi_minus_adjoint(&neg, l, l)?);
            }
            Ok(PolSum { lhs, rhs: lambda_minus })
        }
        PolsumKind::BrevePlus | PolsumKind::BreveMinus => {
            breve_region(k)?;
            let upper = kind == PolsumKind::BrevePlus;
            let mut lhs = MatrixC4::zero();
            for l in Helicity::ALL {
                let col = breve_u(k, l, l)?;
                let row = breve_u_bar(k, l, l)?;
                let zero = TwoSpinor::zero();
                let (c, r) = if upper {
                    (
                        Bispinor::from_halves(col.upper(), zero),
                        BispinorRow::from_halves(row.upper(), zero),
                    )
                } else {
                    (
                        Bispinor::from_halves(zero, col.lower()),
                        BispinorRow::from_halves(zero, row.lower()),
                    )
                };
                lhs += c.outer(&r);
            }
            let rhs = if upper { lambda_plus } else { lambda_minus };
            Ok(PolSum { lhs, rhs })
        }
        PolsumKind::Completeness => Ok(PolSum { lhs: lambda_plus + lambda_minus, rhs: MatrixC4::identity() }),
    }
}
