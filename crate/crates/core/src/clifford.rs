//! Gamma matrices in the Dirac (standard) representation, metric
//! `diag(+1, -1, -1, -1)`, slash contraction, `γ5`, `σ_{μν}` and the
//! generalized Pauli matrices built from its spatial components.

use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};
use std::sync::LazyLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// Minkowski metric component `g^{μν} = g_{μν}`.
pub fn metric(mu: usize, nu: usize) -> f64 {
    match (mu, nu) {
        (0, 0) => 1.0,
        (a, b) if a == b && a < 4 => -1.0,
        _ => 0.0,
    }
}

/// `+1` / `-1` label used for helicity-independent sign choices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Real contravariant four-vector `(a⁰, a¹, a², a³)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector([t, x, y, z])
    }

    /// Purely spatial vector `(0, v)`.
    pub fn spatial(v: [f64; 3]) -> Self {
        FourVector([0.0, v[0], v[1], v[2]])
    }

    pub fn time(&self) -> f64 {
        self.0[0]
    }

    pub fn space(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Minkowski inner product `a·b = a⁰b⁰ − a⃗·b⃗`.
    pub fn dot(&self, other: &FourVector) -> f64 {
        self.0[0] * other.0[0] - self.0[1] * other.0[1] - self.0[2] * other.0[2] - self.0[3] * other.0[3]
    }

    pub fn square(&self) -> f64 {
        self.dot(self)
    }
}

impl Index<usize> for FourVector {
    type Output = f64;
    fn index(&self, mu: usize) -> &f64 {
        &self.0[mu]
    }
}

impl Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector(self.0.map(|a| -a))
    }
}

impl Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, rhs: FourVector) -> FourVector {
        FourVector(rhs.0.map(|a| self * a))
    }
}

/// 2×2 complex matrix. Carries the Pauli matrices and the rest-frame spin
/// projectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix2(pub [[C64; 2]; 2]);

impl Matrix2 {
    pub fn zero() -> Self {
        Matrix2([[ZERO; 2]; 2])
    }

    pub fn identity() -> Self {
        Matrix2([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn scale(&self, s: C64) -> Self {
        Matrix2(self.0.map(|row| row.map(|z| z * s)))
    }

    pub fn dagger(&self) -> Self {
        let a = &self.0;
        Matrix2([[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]])
    }

    pub fn max_abs_diff(&self, other: &Matrix2) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Matrix2, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }
}

impl Add for Matrix2 {
    type Output = Matrix2;
    fn add(self, rhs: Matrix2) -> Matrix2 {
        Matrix2(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j] + rhs.0[i][j])))
    }
}

impl Sub for Matrix2 {
    type Output = Matrix2;
    fn sub(self, rhs: Matrix2) -> Matrix2 {
        Matrix2(std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j] - rhs.0[i][j])))
    }
}

impl Neg for Matrix2 {
    type Output = Matrix2;
    fn neg(self) -> Matrix2 {
        self.scale(-ONE)
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;
    fn mul(self, rhs: Matrix2) -> Matrix2 {
        let (a, b) = (&self.0, &rhs.0);
        Matrix2(std::array::from_fn(|i| {
            std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j])
        }))
    }
}

/// Pauli matrix `σ_i`, `i ∈ {1, 2, 3}`.
pub fn pauli(i: usize) -> Result<Matrix2> {
    match i {
        1 => Ok(Matrix2([[ZERO, ONE], [ONE, ZERO]])),
        2 => Ok(Matrix2([[ZERO, -I], [I, ZERO]])),
        3 => Ok(Matrix2([[ONE, ZERO], [ZERO, -ONE]])),
        _ => Err(Error::InvalidArgument(format!("Pauli index {i} not in 1..=3"))),
    }
}

/// `σ⃗·v` for a real 3-vector.
pub fn pauli_dot(v: [f64; 3]) -> Matrix2 {
    let [x, y, z] = v;
    Matrix2([
        [C64::new(z, 0.0), C64::new(x, -y)],
        [C64::new(x, y), C64::new(-z, 0.0)],
    ])
}

/// Dense 4×4 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MatrixC4(pub [[C64; 4]; 4]);

impl MatrixC4 {
    pub fn zero() -> Self {
        MatrixC4([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        Self::diagonal([ONE; 4])
    }

    pub fn diagonal(d: [C64; 4]) -> Self {
        let mut m = Self::zero();
        for (i, z) in d.into_iter().enumerate() {
            m.0[i][i] = z;
        }
        m
    }

    pub fn real_diagonal(d: [f64; 4]) -> Self {
        Self::diagonal(d.map(|x| C64::new(x, 0.0)))
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> C64) -> Self {
        MatrixC4(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    /// Assemble `[[a, b], [c, d]]` from 2×2 blocks.
    pub fn from_blocks(a: Matrix2, b: Matrix2, c: Matrix2, d: Matrix2) -> Self {
        Self::from_fn(|i, j| {
            let blk = match (i / 2, j / 2) {
                (0, 0) => &a,
                (0, 1) => &b,
                (1, 0) => &c,
                _ => &d,
            };
            blk.0[i % 2][j % 2]
        })
    }

    /// 2×2 block at block-row `r`, block-column `c` (each 0 or 1).
    pub fn block(&self, r: usize, c: usize) -> Matrix2 {
        Matrix2(std::array::from_fn(|i| std::array::from_fn(|j| self.0[2 * r + i][2 * c + j])))
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.0[i][j]
    }

    pub fn scale(&self, s: C64) -> Self {
        MatrixC4(self.0.map(|row| row.map(|z| z * s)))
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    pub fn dagger(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn conj(&self) -> Self {
        MatrixC4(self.0.map(|row| row.map(|z| z.conj())))
    }

    pub fn trace(&self) -> C64 {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest elementwise modulus `max |a_ij − b_ij|`.
    pub fn max_abs_diff(&self, other: &MatrixC4) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Elementwise equality within absolute tolerance `tol`.
    pub fn approx_eq(&self, other: &MatrixC4, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn commutator(&self, other: &MatrixC4) -> MatrixC4 {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &MatrixC4) -> MatrixC4 {
        *self * *other + *other * *self
    }

    /// Numerical rank: count of singular directions above `tol`, via
    /// Gram–Schmidt on the columns.
    pub fn rank(&self, tol: f64) -> usize {
        let mut basis: Vec<[C64; 4]> = Vec::new();
        for j in 0..4 {
            let mut v: [C64; 4] = std::array::from_fn(|i| self.0[i][j]);
            for b in &basis {
                let proj: C64 = (0..4).map(|i| b[i].conj() * v[i]).sum();
                for i in 0..4 {
                    v[i] -= proj * b[i];
                }
            }
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > tol {
                basis.push(v.map(|z| z / norm));
            }
        }
        basis.len()
    }
}

impl Add for MatrixC4 {
    type Output = MatrixC4;
    fn add(self, rhs: MatrixC4) -> MatrixC4 {
        MatrixC4::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl AddAssign for MatrixC4 {
    fn add_assign(&mut self, rhs: MatrixC4) {
        for i in 0..4 {
            for j in 0..4 {
                self.0[i][j] += rhs.0[i][j];
            }
        }
    }
}

impl Sub for MatrixC4 {
    type Output = MatrixC4;
    fn sub(self, rhs: MatrixC4) -> MatrixC4 {
        MatrixC4::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl Neg for MatrixC4 {
    type Output = MatrixC4;
    fn neg(self) -> MatrixC4 {
        self.scale(-ONE)
    }
}

impl Mul for MatrixC4 {
    type Output = MatrixC4;
    fn mul(self, rhs: MatrixC4) -> MatrixC4 {
        MatrixC4::from_fn(|i, j| (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
    }
}

impl Mul<MatrixC4> for C64 {
    type Output = MatrixC4;
    fn mul(self, rhs: MatrixC4) -> MatrixC4 {
        rhs.scale(self)
    }
}

impl Mul<MatrixC4> for f64 {
    type Output = MatrixC4;
    fn mul(self, rhs: MatrixC4) -> MatrixC4 {
        rhs.scale_real(self)
    }
}

impl std::iter::Sum for MatrixC4 {
    fn sum<It: Iterator<Item = MatrixC4>>(iter: It) -> MatrixC4 {
        iter.fold(MatrixC4::zero(), |acc, m| acc + m)
    }
}

static GAMMA_UPPER: LazyLock<[MatrixC4; 4]> = LazyLock::new(|| {
    let one = Matrix2::identity();
    let zero = Matrix2::zero();
    let mut out = [MatrixC4::from_blocks(one, zero, zero, -one); 4];
    for (i, g) in out.iter_mut().enumerate().skip(1) {
        let s = pauli(i).expect("spatial index");
        *g = MatrixC4::from_blocks(zero, s, -s, zero);
    }
    out
});

static GAMMA5: LazyLock<MatrixC4> = LazyLock::new(|| {
    let g = &*GAMMA_UPPER;
    I * (g[0] * g[1] * g[2] * g[3])
});

fn check_index(mu: usize) -> Result<()> {
    if mu < 4 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("Lorentz index {mu} not in 0..=3")))
    }
}

/// Upper-index `γ^μ`: `γ⁰ = diag(1, −1)`, `γⁱ = [[0, σᵢ], [−σᵢ, 0]]`.
pub fn gamma(mu: usize) -> Result<MatrixC4> {
    check_index(mu)?;
    Ok(GAMMA_UPPER[mu])
}

/// Lower-index `γ_μ = g_{μν} γ^ν`.
pub fn gamma_lower(mu: usize) -> Result<MatrixC4> {
    Ok(gamma(mu)?.scale_real(metric(mu, mu)))
}

/// `γ5 = i γ⁰γ¹γ²γ³`, which is `[[0, 1], [1, 0]]` in this representation.
pub fn gamma5() -> MatrixC4 {
    *GAMMA5
}

/// `a̸ = a_μ γ^μ = a⁰γ⁰ − a⃗·γ⃗`.
pub fn slash(a: &FourVector) -> MatrixC4 {
    slash_complex(&a.0.map(|x| C64::new(x, 0.0)))
}

/// Slash of a complex four-vector, used for momenta continued into `|p0| < m`
/// where the spatial part is imaginary.
pub fn slash_complex(a: &[C64; 4]) -> MatrixC4 {
    let g = &*GAMMA_UPPER;
    g[0].scale(a[0]) - g[1].scale(a[1]) - g[2].scale(a[2]) - g[3].scale(a[3])
}

/// Which index placement the spatial contraction `γ⃗·s⃗` uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SpatialIndex {
    /// `Σᵢ γⁱ sⁱ`
    #[default]
    Upper,
    /// `Σᵢ γ_i sⁱ = −Σᵢ γⁱ sⁱ`
    Lower,
}

/// `γ⃗·s⃗` under the given index convention.
pub fn gamma_dot(s: [f64; 3], convention: SpatialIndex) -> MatrixC4 {
    let g = &*GAMMA_UPPER;
    let upper = g[1].scale_real(s[0]) + g[2].scale_real(s[1]) + g[3].scale_real(s[2]);
    match convention {
        SpatialIndex::Upper => upper,
        SpatialIndex::Lower => -upper,
    }
}

/// `σ_{μν} = (i/2)[γ_μ, γ_ν]` with lowered gammas.
pub fn sigma_munu(mu: usize, nu: usize) -> Result<MatrixC4> {
    let a = gamma_lower(mu)?;
    let b = gamma_lower(nu)?;
    Ok(C64::new(0.0, 0.5) * a.commutator(&b))
}

/// Three-index Levi-Civita symbol on `{1, 2, 3}` with `ε_{123} = +1`.
pub fn levi_civita3(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}

/// Four-index Levi-Civita symbol with upper indices, `ε^{0123} = +1`.
/// Lowering all four indices flips the sign: `ε_{0123} = −1`.
pub fn levi_civita4_upper(idx: [usize; 4]) -> f64 {
    let pairs = || (0..4).flat_map(|i| ((i + 1)..4).map(move |j| (i, j)));
    if idx.iter().any(|&i| i > 3) || pairs().any(|(i, j)| idx[i] == idx[j]) {
        return 0.0;
    }
    let inversions = pairs().filter(|&(i, j)| idx[i] > idx[j]).count();
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Lower-index symbol `ε_{μνσρ}` under the given orientation of `ε_{0123}`.
pub fn levi_civita4_lower(idx: [usize; 4], eps_0123: f64) -> f64 {
    eps_0123 * levi_civita4_upper(idx)
}

/// `−(i/4!) ε_{μνσρ} γ^μγ^νγ^σγ^ρ` with the given `ε_{0123}`.
///
/// Reproduces `γ5 = iγ⁰γ¹γ²γ³` for `ε_{0123} = −1`; the opposite orientation
/// yields `−γ5`.
pub fn gamma5_from_epsilon(eps_0123: f64) -> MatrixC4 {
    let g = &*GAMMA_UPPER;
    let mut acc = MatrixC4::zero();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let e = levi_civita4_lower([a, b, c, d], eps_0123);
                    if e != 0.0 {
                        acc += (g[a] * g[b] * g[c] * g[d]).scale_real(e);
                    }
                }
            }
        }
    }
    C64::new(0.0, -1.0 / 24.0) * acc
}

/// Generalized Pauli matrix `σ^±_λ`.
///
/// `σ⁺_λ = Σ_{i,j} ε_{λij} σ_{ij}` and `σ⁻_λ = Σ_{i,j} ε_{λji} σ_{ij}`,
/// summed over all ordered pairs, so `σ⁺_3 = 2σ_{12}`.
pub fn generalized_pauli(lambda: usize, sign: Sign) -> Result<MatrixC4> {
    if !(1..=3).contains(&lambda) {
        return Err(Error::InvalidArgument(format!(
            "generalized Pauli index {lambda} not in 1..=3"
        )));
    }
    let mut acc = MatrixC4::zero();
    for i in 1..=3 {
        for j in 1..=3 {
            let e = match sign {
                Sign::Plus => levi_civita3(lambda, i, j),
                Sign::Minus => levi_civita3(lambda, j, i),
            };
            if e != 0.0 {
                acc += sigma_munu(i, j)?.scale_real(e);
            }
        }
    }
    Ok(acc)
}

/// Trace of the ordered product `ms[0]·ms[1]·…`.
pub fn trace(ms: &[MatrixC4]) -> Result<C64> {
    let (first, rest) = ms
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("trace of an empty product".into()))?;
    Ok(rest.iter().fold(*first, |acc, m| acc * *m).trace())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-14;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn gamma0_is_diag() {
        let g0 = gamma(0).unwrap();
        assert_eq!(g0, MatrixC4::real_diagonal([1.0, 1.0, -1.0, -1.0]));
    }

    #[test]
    fn spatial_gammas_square_to_minus_one() {
        for i in 1..4 {
            let g = gamma(i).unwrap();
            assert!((g * g).approx_eq(&-MatrixC4::identity(), TOL));
        }
    }

    #[test]
    fn out_of_range_indices_are_rejected() {
        assert!(matches!(gamma(4), Err(Error::InvalidArgument(_))));
        assert!(sigma_munu(0, 7).is_err());
        assert!(generalized_pauli(0, Sign::Plus).is_err());
        assert!(generalized_pauli(4, Sign::Minus).is_err());
        assert!(pauli(0).is_err());
    }

    #[test]
    fn anticommutator_uses_minkowski_metric() {
        for mu in 0..4 {
            for nu in 0..4 {
                let ac = gamma(mu).unwrap().anticommutator(&gamma(nu).unwrap());
                let want = MatrixC4::identity().scale_real(2.0 * metric(mu, nu));
                assert!(ac.approx_eq(&want, TOL), "mu={mu} nu={nu}");
            }
        }
    }

    #[test]
    fn gamma5_block_form() {
        let one = Matrix2::identity();
        let zero = Matrix2::zero();
        let want = MatrixC4::from_blocks(zero, one, one, zero);
        assert!(gamma5().approx_eq(&want, TOL));
        assert!((gamma5() * gamma5()).approx_eq(&MatrixC4::identity(), TOL));
        let g0 = gamma(0).unwrap();
        assert!(gamma5().anticommutator(&g0).approx_eq(&MatrixC4::zero(), TOL));
    }

    #[test]
    fn gamma5_epsilon_orientation() {
        assert!(gamma5_from_epsilon(-1.0).approx_eq(&gamma5(), TOL));
        assert!(gamma5_from_epsilon(1.0).approx_eq(&-gamma5(), TOL));
    }

    #[test]
    fn levi_civita_signs() {
        assert_eq!(levi_civita4_upper([0, 1, 2, 3]), 1.0);
        assert_eq!(levi_civita4_upper([1, 0, 2, 3]), -1.0);
        assert_eq!(levi_civita4_upper([3, 2, 1, 0]), 1.0);
        assert_eq!(levi_civita4_upper([1, 2, 3, 0]), -1.0);
        assert_eq!(levi_civita4_upper([0, 0, 2, 3]), 0.0);
        assert_eq!(levi_civita3(2, 1, 3), -1.0);
    }

    #[test]
    fn slash_examples() {
        assert_eq!(slash(&FourVector::new(1.0, 0.0, 0.0, 0.0)), gamma(0).unwrap());
        let p = FourVector::new(1.25, 0.0, 0.0, 0.75);
        let pp = slash(&p) * slash(&p);
        assert!(pp.approx_eq(&MatrixC4::identity(), TOL));
        let s = FourVector::new(0.3, -0.2, 0.9, 0.1);
        assert!(slash(&s).anticommutator(&gamma5()).approx_eq(&MatrixC4::zero(), TOL));
    }

    #[test]
    fn sigma_munu_examples() {
        assert!(sigma_munu(1, 1).unwrap().approx_eq(&MatrixC4::zero(), TOL));
        let s3 = pauli(3).unwrap();
        let z = Matrix2::zero();
        let want = MatrixC4::from_blocks(s3, z, z, s3);
        assert!(sigma_munu(1, 2).unwrap().approx_eq(&want, TOL));
        assert!(sigma_munu(2, 1).unwrap().approx_eq(&-want, TOL));
    }

    #[test]
    fn generalized_pauli_examples() {
        let p3 = generalized_pauli(3, Sign::Plus).unwrap();
        assert!(p3.approx_eq(&sigma_munu(1, 2).unwrap().scale_real(2.0), TOL));
        assert!(generalized_pauli(3, Sign::Minus).unwrap().approx_eq(&-p3, TOL));
        let p1 = generalized_pauli(1, Sign::Plus).unwrap();
        assert!(p1.approx_eq(&sigma_munu(2, 3).unwrap().scale_real(2.0), TOL));
    }

    #[test]
    fn trace_examples() {
        let g0 = gamma(0).unwrap();
        let g1 = gamma(1).unwrap();
        assert!((trace(&[g0, g0]).unwrap() - c(4.0)).norm() < TOL);
        assert!(trace(&[g0, g1]).unwrap().norm() < TOL);
        let p = slash(&FourVector::new(1.0, 0.0, 0.0, 0.0));
        let q = slash(&FourVector::new(2.0, 0.0, 0.0, 1.0));
        assert!((trace(&[p, q]).unwrap() - c(8.0)).norm() < TOL);
        assert!(matches!(trace(&[]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn hermiticity_pattern() {
        let g0 = gamma(0).unwrap();
        assert_eq!(g0.dagger(), g0);
        for i in 1..4 {
            let g = gamma(i).unwrap();
            assert!(g.dagger().approx_eq(&-g, TOL));
        }
        assert!(gamma5().dagger().approx_eq(&gamma5(), TOL));
    }

    #[test]
    fn pauli_algebra() {
        let id = Matrix2::identity();
        for i in 1..=3 {
            for j in 1..=3 {
                let lhs = pauli(i).unwrap() * pauli(j).unwrap();
                let mut rhs = if i == j { id } else { Matrix2::zero() };
                for k in 1..=3 {
                    let e = levi_civita3(i, j, k);
                    if e != 0.0 {
                        rhs = rhs + pauli(k).unwrap().scale(C64::new(0.0, e));
                    }
                }
                assert!(lhs.approx_eq(&rhs, TOL), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn rank_of_simple_matrices() {
        assert_eq!(MatrixC4::identity().rank(1e-12), 4);
        assert_eq!(MatrixC4::zero().rank(1e-12), 0);
        assert_eq!(MatrixC4::real_diagonal([1.0, 0.0, 0.0, 0.0]).rank(1e-12), 1);
    }
}
