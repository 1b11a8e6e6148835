use crate::clifford::{
    gamma, gamma5, gamma5_from_epsilon, gamma_lower, metric, trace, FourVector, Matrix2, MatrixC4,
    SpatialIndex, C64,
};
use crate::error::{Error, Result};
use crate::projectors::{
    diad, energy_projector_at, pi_projector_at, polsum, spin_projector, spin_projector_rest, tetrad_spin_vectors,
    DiadInsert, PiVariant, PolsumKind, SpinVector,
};
use crate::spinors::{
    basis_two_spinor, block_spin_operator, boost_two_spinor, breve_u, breve_u_bar, dirac_adjoint, kappa,
    psi_minus, rest_basis, spinor_from_breve_with, xi, Bispinor, BoostParams, Helicity, KinematicPoint,
    MapVariant, SpinorKind, TetradIndex,
};

use super::{section4_two_valued, Context, Expected, IdentityCheck, SamplePoint, Sampler, Sides, DEFAULT_TOLERANCE};

const ZERO: C64 = C64::new(0.0, 0.0);
const Z: [f64; 3] = [0.0, 0.0, 1.0];

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn kin(p: &SamplePoint) -> Result<KinematicPoint> {
    match p {
        SamplePoint::Kinematic(k) => Ok(*k),
        _ => Err(Error::InvalidArgument("check needs a kinematic sample".into())),
    }
}

fn bisp(p: &SamplePoint) -> Result<(Bispinor, C64)> {
    match p {
        SamplePoint::Bispinor { xi, alpha } => Ok((*xi, *alpha)),
        _ => Err(Error::InvalidArgument("check needs a bispinor sample".into())),
    }
}

fn matrix2_sides(lhs: &Matrix2, rhs: &Matrix2) -> Sides {
    let mut s = Sides::default();
    s.push_slices(lhs.0.as_flattened(), rhs.0.as_flattened());
    s
}

fn bispinor_sides(s: &mut Sides, lhs: &Bispinor, rhs: &Bispinor) {
    s.push_slices(&lhs.0, &rhs.0);
}

fn polsum_sides(kind: PolsumKind, p: &SamplePoint) -> Result<Sides> {
    let ps = polsum(kind, &kin(p)?)?;
    Ok(Sides::matrices(&ps.lhs, &ps.rhs))
}

fn helicity_sign(l: Helicity) -> f64 {
    l.sign()
}

fn spatial(nhat: [f64; 3]) -> FourVector {
    FourVector::spatial(nhat)
}

// gamma algebra

fn anticommutator_with(rhs: impl Fn(usize, usize) -> f64) -> Result<Sides> {
    let mut s = Sides::default();
    for mu in 0..4 {
        for nu in 0..4 {
            let ac = gamma(mu)?.anticommutator(&gamma(nu)?);
            s.push_matrices(&ac, &MatrixC4::identity().scale_real(2.0 * rhs(mu, nu)));
        }
    }
    Ok(s)
}

fn anticommutator_minkowski(_: &SamplePoint, _: &Context) -> Result<Sides> {
    anticommutator_with(metric)
}

fn anticommutator_literal_delta(_: &SamplePoint, _: &Context) -> Result<Sides> {
    anticommutator_with(|mu, nu| if mu == nu { 1.0 } else { 0.0 })
}

fn gamma_hermiticity(_: &SamplePoint, _: &Context) -> Result<Sides> {
    let g0 = gamma(0)?;
    let mut s = Sides::default();
    for mu in 0..4 {
        let g = gamma(mu)?;
        s.push_matrices(&(g0 * g * g0), &g.dagger());
    }
    s.push_matrices(&gamma5().dagger(), &gamma5());
    Ok(s)
}

fn gamma5_pseudoscalar(_: &SamplePoint, _: &Context) -> Result<Sides> {
    Ok(Sides::matrices(&gamma5_from_epsilon(-1.0), &gamma5()))
}

fn gamma5_pseudoscalar_lower_epsilon(_: &SamplePoint, _: &Context) -> Result<Sides> {
    Ok(Sides::matrices(&gamma5_from_epsilon(1.0), &gamma5()))
}

fn trace_cyclicity(_: &SamplePoint, _: &Context) -> Result<Sides> {
    let mut g: Vec<MatrixC4> = (0..4).map(gamma).collect::<Result<_>>()?;
    g.push(gamma5());
    let mut s = Sides::default();
    for a in 0..5 {
        for b in 0..5 {
            for c in 0..5 {
                let abc = trace(&[g[a], g[b], g[c]])?;
                s.push(abc, trace(&[g[c], g[a], g[b]])?);
                s.push(abc, trace(&[g[b], g[c], g[a]])?);
            }
        }
    }
    Ok(s)
}

// real-region spinors

fn norm_spinor(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let mut s = Sides::default();
    for l in Helicity::ALL {
        let bar = dirac_adjoint(&psi_minus(&k, l, l)?);
        for l2 in Helicity::ALL {
            let delta = if l == l2 { 1.0 } else { 0.0 };
            s.push(bar.contract(&psi_minus(&k, l2, l2)?), c(delta));
        }
    }
    Ok(s)
}

fn helicity_sum_unity(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let n = kin(p)?.nhat();
    let sum = spin_projector_rest(n)? + spin_projector_rest(n.map(|x| -x))?;
    Ok(matrix2_sides(&sum, &Matrix2::identity()))
}

fn boost_equivalence(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let b = BoostParams::from_kinematic(&k)?;
    let mut s = Sides::default();
    for l in Helicity::ALL {
        for kind in [SpinorKind::Undotted, SpinorKind::Dotted] {
            let direct = xi(&k, l, kind)?;
            let boosted = boost_two_spinor(&basis_two_spinor(l), &b, kind);
            s.push_slices(&direct.0, &boosted.0);
        }
    }
    Ok(s)
}

fn polsum_spinor(p: &SamplePoint, _: &Context) -> Result<Sides> {
    polsum_sides(PolsumKind::Spinor, p)
}

fn polsum_antispinor(p: &SamplePoint, _: &Context) -> Result<Sides> {
    polsum_sides(PolsumKind::Antispinor, p)
}

fn polsum_antispinor_dirac_adjoint(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let neg = k.with_negated_energy();
    let mut lhs = MatrixC4::zero();
    for l in Helicity::ALL {
        let u = psi_minus(&neg, l, l)?;
        lhs += u.outer(&dirac_adjoint(&u));
    }
    Ok(Sides::matrices(&lhs, energy_projector_at(&k, crate::clifford::Sign::Minus).matrix()))
}

fn completeness(p: &SamplePoint, _: &Context) -> Result<Sides> {
    polsum_sides(PolsumKind::Completeness, p)
}

fn energy_projector_idempotent(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let mut s = Sides::default();
    for sign in [crate::clifford::Sign::Plus, crate::clifford::Sign::Minus] {
        let m = *energy_projector_at(&k, sign).matrix();
        s.push_matrices(&(m * m), &m);
    }
    Ok(s)
}

fn kappa_boundary(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let u = psi_minus(&k, Helicity::Up, Helicity::Up)?;
    let ratio = (u.lower().inner(&u.lower()).re / u.upper().inner(&u.upper()).re).sqrt();
    let mut s = Sides::default();
    s.push_real(kappa(k.m(), k.m())?, 0.0);
    s.push_real(kappa(k.p0(), k.m())?, ratio);
    Ok(s)
}

fn unity_decomposition_gamma0(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let at_minus_m = KinematicPoint::new(k.m(), -k.m(), k.nhat())?;
    let mut sum = MatrixC4::zero();
    for tau in TetradIndex::ALL {
        let u = crate::spinors::bispinor_u_plus(&at_minus_m, tau, crate::clifford::Sign::Plus)?;
        sum += diad(&u, DiadInsert::Gamma0);
    }
    Ok(Sides::matrices(&sum, &MatrixC4::identity()))
}

// projectors

fn spin_vector(p: &SamplePoint) -> Result<SpinVector> {
    SpinVector::new(kin(p)?.nhat())
}

fn spin_projector_idempotent(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let proj = spin_projector(&spin_vector(p)?);
    let m = *proj.matrix();
    Ok(Sides::matrices(&(m * m), &m))
}

fn spin_projector_complement(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let s = spin_vector(p)?;
    let sum = *spin_projector(&s).matrix() + *spin_projector(&s.negated()).matrix();
    Ok(Sides::matrices(&sum, &MatrixC4::identity()))
}

fn tetrad_projector_sum(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let s = spin_vector(p)?;
    let sum: MatrixC4 = tetrad_spin_vectors(&s).iter().map(|t| *spin_projector(t).matrix()).sum();
    Ok(Sides::matrices(&sum.scale_real(0.5), &MatrixC4::identity()))
}

fn diad_half_unity(_: &SamplePoint, _: &Context) -> Result<Sides> {
    let sum: MatrixC4 = TetradIndex::ALL.iter().map(|&t| diad(&rest_basis(t), DiadInsert::Gamma5)).sum();
    Ok(Sides::matrices(&sum, &MatrixC4::identity().scale_real(0.5)))
}

fn pi_rest_value(_: &SamplePoint, ctx: &Context) -> Result<Sides> {
    let k = KinematicPoint::rest(ctx.mass)?;
    let pi = *pi_projector_at(&k, &SpinVector::new(Z)?, PiVariant::Lambda, ctx.convention).matrix();
    let frozen = match ctx.convention {
        SpatialIndex::Upper => MatrixC4::real_diagonal([0.0, 0.0, 0.0, 1.0]),
        SpatialIndex::Lower => MatrixC4::real_diagonal([0.0, 0.0, 1.0, 0.0]),
    };
    let mut s = Sides::matrices(&pi, &frozen);
    s.push_matrices(&(pi * pi), &pi);
    Ok(s)
}

fn section4_projector_equivalence(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let n = kin(p)?.nhat();
    let mut contracted = MatrixC4::zero();
    for (i, &si) in n.iter().enumerate() {
        contracted += gamma_lower(i + 1)?.scale_real(si);
    }
    let lhs = (MatrixC4::identity() + gamma5() * contracted).scale_real(0.5);
    let rhs = MatrixC4::from_blocks(
        spin_projector_rest(n)?,
        Matrix2::zero(),
        Matrix2::zero(),
        spin_projector_rest(n.map(|x| -x))?,
    );
    Ok(Sides::matrices(&lhs, &rhs))
}

// breve region

fn rest_eigenvalues(_: &SamplePoint, _: &Context) -> Result<Sides> {
    let op = block_spin_operator(Z);
    let signs = [1.0, -1.0, -1.0, 1.0];
    let mut s = Sides::default();
    for (tau, sign) in TetradIndex::ALL.into_iter().zip(signs) {
        let e = rest_basis(tau);
        bispinor_sides(&mut s, &(op * e), &e.scale(c(sign)));
    }
    Ok(s)
}

fn rest_basis_breve(_: &SamplePoint, ctx: &Context) -> Result<Sides> {
    let k = KinematicPoint::new(ctx.mass, 0.0, Z)?;
    let mut s = Sides::default();
    for tau in TetradIndex::ALL {
        let h = tau.helicity();
        bispinor_sides(&mut s, &breve_u(&k, h, h)?, &rest_basis(tau));
    }
    Ok(s)
}

fn breve_norm(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let mut s = Sides::default();
    for l in Helicity::ALL {
        s.push(breve_u_bar(&k, l, l)?.contract(&breve_u(&k, l, l)?), c(2.0));
    }
    Ok(s)
}

fn breve_norm_mixed(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let mut s = Sides::default();
    for l in Helicity::ALL {
        let r = l.flip();
        s.push(breve_u_bar(&k, l, r)?.contract(&breve_u(&k, l, r)?), c(2.0));
    }
    Ok(s)
}

fn polsum_breve_plus(p: &SamplePoint, _: &Context) -> Result<Sides> {
    polsum_sides(PolsumKind::BrevePlus, p)
}

fn polsum_breve_minus(p: &SamplePoint, _: &Context) -> Result<Sides> {
    polsum_sides(PolsumKind::BreveMinus, p)
}

fn adjoint_dirac_rows(k: &KinematicPoint, op: &MatrixC4, dagger_row: bool) -> Result<Sides> {
    let mut s = Sides::default();
    for l in Helicity::ALL {
        let row = if dagger_row { breve_u(k, l, l)?.dagger() } else { breve_u_bar(k, l, l)? };
        s.push_slices(&(row * *op).0, &[ZERO; 4]);
    }
    Ok(s)
}

fn adjoint_dirac(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let op = k.slash_momentum() + MatrixC4::identity().scale_real(k.m());
    adjoint_dirac_rows(&k, &op, false)
}

fn adjoint_dirac_dagger(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let op = k.slash_momentum().dagger() - MatrixC4::identity().scale_real(k.m());
    adjoint_dirac_rows(&k, &op, true)
}

fn adjoint_dirac_negated(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let mom = k.momentum();
    let mut gp = gamma(0)?.scale(mom[0]);
    for (i, &pi) in mom.iter().enumerate().skip(1) {
        gp += gamma(i)?.scale(pi);
    }
    let op = -gp - MatrixC4::identity().scale_real(k.m());
    adjoint_dirac_rows(&k, &op, true)
}

fn pi_annihilation(p: &SamplePoint, ctx: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let n = SpinVector::new(k.nhat())?;
    let mut s = Sides::default();
    for l in Helicity::ALL {
        let sv = if helicity_sign(l) > 0.0 { n } else { n.negated() };
        let pi = *pi_projector_at(&k, &sv, PiVariant::Lambda, ctx.convention).matrix();
        bispinor_sides(&mut s, &(pi * breve_u(&k, l, l)?), &Bispinor::zero());
    }
    Ok(s)
}

fn spinor_breve_maps(p: &SamplePoint, ctx: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let sv = spatial(k.nhat());
    let mut s = Sides::default();
    for l in Helicity::ALL {
        let b = breve_u(&k, l, l)?;
        let u = spinor_from_breve_with(&b, &sv, MapVariant::U, ctx.convention)?;
        let uu = spinor_from_breve_with(&u, &sv, MapVariant::U, ctx.convention)?;
        let v = spinor_from_breve_with(&b, &sv, MapVariant::V, ctx.convention)?;
        bispinor_sides(&mut s, &uu, &b);
        bispinor_sides(&mut s, &u, &-v);
    }
    Ok(s)
}

fn spinor_breve_maps_literal(p: &SamplePoint, ctx: &Context) -> Result<Sides> {
    let k = kin(p)?;
    let sv = spatial(k.nhat());
    let mut s = Sides::default();
    for l in Helicity::ALL {
        let u = spinor_from_breve_with(&breve_u(&k, l, l)?, &sv, MapVariant::U, ctx.convention)?;
        bispinor_sides(&mut s, &u, &psi_minus(&k, l, l)?);
    }
    Ok(s)
}

fn section4_two_valued_sides(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let (xi, _) = bisp(p)?;
    let (lhs, rhs) = section4_two_valued(&xi);
    let mut s = Sides::default();
    s.push_real(lhs, rhs);
    Ok(s)
}

fn section4_quartic_homogeneity(p: &SamplePoint, _: &Context) -> Result<Sides> {
    let (xi, alpha) = bisp(p)?;
    let a4 = alpha.norm_sqr().powi(2);
    let (l1, r1) = section4_two_valued(&xi);
    let (l2, r2) = section4_two_valued(&xi.scale(alpha));
    let mut s = Sides::default();
    let scale = |x: f64| x.abs().max(f64::MIN_POSITIVE);
    s.push_real(l2 / scale(a4 * l1), a4 * l1 / scale(a4 * l1));
    s.push_real(r2 / scale(a4 * r1), a4 * r1 / scale(a4 * r1));
    Ok(s)
}

fn check(
    name: &'static str,
    paper_ref: &'static str,
    sampler: Sampler,
    sides: super::SideBuilder,
    expected: Expected,
) -> IdentityCheck {
    IdentityCheck { name, paper_ref, sampler, sides, tolerance: DEFAULT_TOLERANCE, expected }
}

/// Every shipped identity, in report order.
pub fn registry() -> Vec<IdentityCheck> {
    use Expected::{ExpectedFail, Holds, Informational};
    use Sampler::{Algebraic, BreveRegion, Direction, OnShell};
    const ANTICOMMUTATOR: &str = "\"anticommutation relations for the γ - matrixes\"";
    vec![
        check("anticommutator-minkowski", ANTICOMMUTATOR, Algebraic, anticommutator_minkowski, Holds),
        check("anticommutator-literal-delta", ANTICOMMUTATOR, Algebraic, anticommutator_literal_delta, ExpectedFail),
        check("gamma-hermiticity", "γ⁰γ^μγ⁰ = (γ^μ)†, γ5† = γ5", Algebraic, gamma_hermiticity, Holds),
        check("gamma5-pseudoscalar", "γ5 = −(i/4!) ε_{μνσρ} γ^μγ^νγ^σγ^ρ, ε^{0123} = +1", Algebraic, gamma5_pseudoscalar, Holds),
        check(
            "gamma5-pseudoscalar-lower-epsilon",
            "γ5 = −(i/4!) ε_{μνσρ} γ^μγ^νγ^σγ^ρ, ε_{0123} = +1",
            Algebraic,
            gamma5_pseudoscalar_lower_epsilon,
            ExpectedFail,
        ),
        check("trace-cyclicity", "Tr(ABC) = Tr(CAB) over γ^μ, γ5", Algebraic, trace_cyclicity, Holds),
        check("norm-spinor", "\"Normalization condition for a bispinor\"", OnShell, norm_spinor, Holds),
        check("helicity-sum-unity", "\"gives unity\"", Direction, helicity_sum_unity, Holds),
        check("boost-equivalence", "ξ = [a ± (σ⃗·n̂) b] φ_λ = exp(±χσ⃗·n̂/2) φ_λ", OnShell, boost_equivalence, Holds),
        check("polsum-spinor", "\"rule of summation over spinor polarizations\"", OnShell, polsum_spinor, Holds),
        check("polsum-antispinor", "\"a sum of antisymmetric spinor products\"", OnShell, polsum_antispinor, Holds),
        check(
            "polsum-antispinor-dirac-adjoint",
            "\"a sum of antisymmetric spinor products\", with ū = u†γ⁰",
            OnShell,
            polsum_antispinor_dirac_adjoint,
            ExpectedFail,
        ),
        check("unity-decomposition-gamma0", "\"unity decomposition over vectors\"", Direction, unity_decomposition_gamma0, ExpectedFail),
        check("kappa-boundary", "\"must be equal to\"", OnShell, kappa_boundary, Holds),
        check("completeness", "\"constitute a total set\"", OnShell, completeness, Holds),
        check("energy-projector-idempotent", "Λ±² = Λ±", OnShell, energy_projector_idempotent, Holds),
        check("spin-projector-idempotent", "P(s)² = P(s)", Direction, spin_projector_idempotent, Holds),
        check("spin-projector-complement", "\"gives unity\", P(s) + P(−s) = 1", Direction, spin_projector_complement, Holds),
        check("tetrad-projector-sum", "\"Since P(s) is a projection operator\"", Direction, tetrad_projector_sum, Holds),
        check("rest-eigenvalues", "eigenvalue equations following \"Let us put p₀=0\"", Algebraic, rest_eigenvalues, Holds),
        check("rest-basis-breve", "\"Let us put p₀=0\", ŭ(p₀ = 0) against e_τ/√2", Algebraic, rest_basis_breve, Informational),
        check("breve-norm", "\"Let us calculate a norm of bispinor\"", BreveRegion, breve_norm, Holds),
        check("breve-norm-mixed", "\"Let us calculate a norm of bispinor\", λ+ ≠ λ−", BreveRegion, breve_norm_mixed, Informational),
        check("adjoint-dirac", "\"Hermitian conjugated Dirac equation has the form\"", BreveRegion, adjoint_dirac, ExpectedFail),
        check(
            "adjoint-dirac-dagger",
            "\"Hermitian conjugated Dirac equation has the form\", ŭ†(p̸† − m) = 0",
            BreveRegion,
            adjoint_dirac_dagger,
            ExpectedFail,
        ),
        check(
            "adjoint-dirac-negated",
            "\"owing to hermicity of\", p̸† = −(γ⁰p₀ + γ⃗·p⃗)",
            BreveRegion,
            adjoint_dirac_negated,
            ExpectedFail,
        ),
        check("diad-half-unity", "\"because the matrix - diad\"", Algebraic, diad_half_unity, ExpectedFail),
        check("polsum-breve-plus", "\"rule of summation over polarizations λ+\"", BreveRegion, polsum_breve_plus, ExpectedFail),
        check("polsum-breve-minus", "closed form (m − p̸)/2m for the λ− sum", BreveRegion, polsum_breve_minus, ExpectedFail),
        check("pi-rest-value", "π^λ at p = (m, 0⃗), s = ẑ", Algebraic, pi_rest_value, Holds),
        check("pi-annihilation", "\"physical states are described by such bispinors\"", BreveRegion, pi_annihilation, ExpectedFail),
        check("spinor-breve-maps", "\"the following relation between the spinors\"", BreveRegion, spinor_breve_maps, Holds),
        check(
            "spinor-breve-maps-literal",
            "\"the following relation between the spinors\", at p₀ = m",
            Direction,
            spinor_breve_maps_literal,
            ExpectedFail,
        ),
        check(
            "section4-projector-equivalence",
            "\"selecting spinors with a given orientation\"",
            Direction,
            section4_projector_equivalence,
            Holds,
        ),
        check(
            "section4-two-valued",
            "\"the bispinors representation is two-valued one\"",
            Sampler::Bispinor,
            section4_two_valued_sides,
            ExpectedFail,
        ),
        check(
            "section4-quartic-homogeneity",
            "\"the bispinors representation is two-valued one\", |x|² under ξ → αξ",
            Sampler::Bispinor,
            section4_quartic_homogeneity,
            Holds,
        ),
    ]
}
