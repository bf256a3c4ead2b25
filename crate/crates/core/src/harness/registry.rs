//! The property registry. Each entry samples its inputs from the trial stream
//! and records one margin per sub-check.
//!
//! Notation in statements: `w` is `w_(2,ν)`, `w_op` is `w_ν` (operator norm),
//! `c(ν) = 2ν² − 2ν + 1`, `‖·‖₂` is Hilbert–Schmidt and `‖·‖` the operator norm.

use std::f64::consts::{FRAC_PI_2, SQRT_2};

use super::{triangle_refinement, PropertyCase, Relation, Trial};
use crate::blocks::{block2, diag2, offdiag, ri_block};
use crate::ensemble::{unit_vector, EnsembleKind, trace_orthogonal_pair};
use crate::error::Result;
use crate::matrix::{hermitian_eigenvalues, operator_norm, vec_dot, Matrix, C64, I};
use crate::radius::{
    classical_w, hs_theta_profile, radius_sweep, sweep_profile, two_angle_error_bound, two_angle_radius,
    w2nu_closed, wnu_operator, NormKind, RadiusResult,
};
use crate::weighted::{rotate, weighted_imag, weighted_real, Weight};

use EnsembleKind::*;
use Relation::*;

macro_rules! case {
    ($id:literal, $rel:expr, $req:literal, $stmt:literal, $check:expr) => {
        PropertyCase { id: $id, statement: $stmt, relation: $rel, requires: $req, check: $check }
    };
}

static REGISTRY: &[PropertyCase] = &[
    case!("Eq1.1-trace-cs", Le, "A,B ginibre", "|tr(AB)| <= ‖A‖₂‖B‖₂", trace_cauchy_schwarz),
    case!("Eq1.2-bounds", Chain, "A ginibre | square_zero | normal_aligned_squares",
        "‖A‖/2 <= w(A) <= ‖A‖ for the classical numerical radius", classical_bounds),
    case!("Eq1.3-identity", Le, "A ginibre; x seeded unit vectors",
        "|<Ax,x>| <= sup_θ ‖Re(e^{iθ}A)‖", classical_sup_identity),
    case!("D2.1-sweep-def", Le, "A ginibre; θ uniform",
        "N(𝔯_ν(e^{iθ}A)) <= w_(N,ν)(A) for every θ, N in {‖·‖₂, ‖·‖}", sweep_definition),
    case!("R2.2-imag-form", Eq, "A ginibre",
        "w_(N,ν)(A) = sup_θ N(𝔦_ν(ie^{iθ}A))", imaginary_form),
    case!("R2.3-opnorm-specialization", Eq, "A ginibre",
        "w_(‖·‖,ν)(A) = w_ν(A), largest singular value by power iteration vs eigensolver", operator_specialization),
    case!("R2.4-endpoints", Eq, "A ginibre",
        "w_(N,1)(A) = N(A), w_(N,0)(A) = N(A*), w_(‖·‖,1/2)(A) = w(A), w_(2,1/2)² = (‖A‖₂² + |tr A²|)/2",
        endpoints),
    case!("T2.6-axioms", Chain, "A,B ginibre; α complex",
        "w_(N,ν)(αA) = |α| w_(N,ν)(A), w_(N,ν)(A+B) <= w_(N,ν)(A) + w_(N,ν)(B), w_(N,ν)(A) = 0 only for A = 0",
        norm_axioms),
    case!("T2.6-sandwich", Chain, "A ginibre",
        "max(νN(A), (1-ν)N(A*)) <= w_(N,ν)(A) <= max(N(A), N(A*))", max_sandwich),
    case!("P2.7.i-adjoint-flip", Eq, "A ginibre", "w_(N,ν)(A*) = w_(N,1-ν)(A)", adjoint_flip),
    case!("P2.7.ii-selfadjoint", Eq, "A hermitian", "w_(N,ν)(A) = N(A) for A = A*", self_adjoint_value),
    case!("P2.7.iii-two-angle", Chain, "A ginibre",
        "w_(2,ν)(A) = (1/2) sup_(θ,φ) ‖𝔯_ν((e^{iθ} - ie^{iφ})A)‖₂", two_angle),
    case!("P2.8.i-selfadjoint-functional", Eq, "A ginibre", "w_(N,ν)(A*) = w_(N,ν)(A)", self_adjoint_functional),
    case!("P2.8.ii-equivalence", Chain, "A ginibre",
        "(1 + |1-2ν|)/2 · N(A) <= w_(N,ν)(A) <= N(A)", norm_equivalence),
    case!("P2.8.iii-convexity", Chain, "A ginibre",
        "ν ↦ w_(N,ν)(A) is convex, symmetric about 1/2, minimal at 1/2, maximal at 0 and 1", nu_convexity),
    case!("P2.8.iv-monotone", Le, "A ginibre; μ uniform",
        "|ν - 1/2| <= |μ - 1/2| implies w_(N,ν)(A) <= w_(N,μ)(A)", nu_monotone),
    case!("P2.9.i-weak-unitary", Eq, "A ginibre, U unitary", "w_(N,ν)(U*AU) = w_(N,ν)(A)", weak_unitary),
    case!("P2.9.ii-wnu-dominates", Le, "A ginibre",
        "w_(2,ν)(A) <= w_ν(A)·‖I‖₂ with ‖I‖₂ = √n", wnu_dominates),
    case!("T3.1-closed-vs-sweep", Eq, "A ginibre",
        "w² = c(ν)‖A‖₂² + 2ν(1-ν)|tr A²| agrees with the refined θ-sweep to 1e-9·max(1, ‖A‖₂)",
        closed_vs_sweep),
    case!("T3.3-hs-bounds", Chain, "A ginibre", "√c(ν)·‖A‖₂ <= w(A) <= ‖A‖₂", hs_bounds),
    case!("R3.3-constants", Le, "ν grid", "(1 + |1-2ν|)/2 <= √c(ν)", constant_comparison),
    case!("C4.3-lower-equality", Eq, "A trace_nilpotent", "tr A² = 0 implies w(A) = √c(ν)·‖A‖₂", lower_equality),
    case!("C5.3-upper-equality", Eq, "A normal_aligned_squares",
        "A normal with aligned eigenvalue squares implies w(A) = ‖A‖₂", upper_equality),
    case!("L6.3-pythagoras", Eq, "X,Y,Z,W ginibre",
        "‖[[X,Y],[Z,W]]‖₂² = ‖X‖₂² + ‖Y‖₂² + ‖Z‖₂² + ‖W‖₂²", block_pythagoras),
    case!("T7.3.i", Eq, "A,B ginibre", "w([[0,A],[B,0]]) = w([[0,B],[A,0]])", offdiag_swap),
    case!("T7.3.ii", Eq, "A,B ginibre; θ uniform", "w([[0,A],[B,0]]) = w([[0,A],[e^{iθ}B,0]])", offdiag_phase),
    case!("T7.3.iii", Eq, "A ginibre", "w([[A,A],[-A,-A]]) = 2√c(ν)·‖A‖₂", block_signed),
    case!("T7.3.iv", Eq, "A ginibre", "w([[0,A],[A,0]]) = √2·w(A)", offdiag_equal),
    case!("T7.3.v", Eq, "A,B ginibre", "w²([[A,B],[0,0]]) = w²(A) + c(ν)‖B‖₂²", block_top_row),
    case!("T7.3.vi", Eq, "A ginibre; B,C outer products with tr(BC) = 0",
        "w²([[A,B],[C,iA]]) = c(ν)(2‖A‖₂² + ‖B‖₂² + ‖C‖₂²)", block_imag_diagonal),
    case!("T7.3.vii", Eq, "A,B psd",
        "w²([[0,A],[B,0]]) = (‖A+B‖₂² + (1-2ν)²‖A-B‖₂²)/2", offdiag_psd),
    case!("T7.3.viii", Eq, "A,B hermitian", "w²([[A,0],[0,B]]) = w²(A) + w²(B)", diag_hermitian),
    case!("T7.3.ix", Eq, "A,B hermitian", "w²([[A,B],[B,A]]) = w²(A+B) + w²(A-B)", block_symmetric),
    case!("T8.3-upper", Le, "A,B,C,D ginibre",
        "w²([[A,B],[C,D]]) <= w²(A) + w²(D) + ‖B‖₂² + ‖C‖₂²", general_block_upper),
    case!("R9.3-tracefree-upper", Le, "A,D ginibre; B,C outer products with tr(BC) = 0",
        "w²([[A,B],[C,D]]) <= w²(A) + w²(D) + c(ν)(‖B‖₂² + ‖C‖₂²)", tracefree_block_upper),
    case!("C10.3-corollaries", Le, "A,B ginibre",
        "w([[A,0],[0,B]]) <= √(w²(A) + w²(B)) and w([[0,A],[B,0]]) <= √(‖A‖₂² + ‖B‖₂²)", block_corollaries),
    case!("T11.3-sandwich", Chain, "A ginibre",
        "(1 + |1-2ν|)/√2 · w(A) <= w([[0,𝔯_ν(A)],[𝔦_ν(A),0]]) <= √2·w(A)", ri_sandwich),
    case!("L4.1-parallelogram", Eq, "X,Y ginibre",
        "2(‖X‖₂² + ‖Y‖₂²) = ‖X-Y‖₂² + ‖X+Y‖₂²", parallelogram),
    case!("T4.2-triangle-chain", Chain, "A,B ginibre",
        "‖A+B‖₂ <= √(2w²([[0,A],[B*,0]]) - (1-2ν)²‖A-B‖₂²) <= ‖A‖₂ + ‖B‖₂", triangle_chain),
];

/// All registered properties, in report order.
pub fn registry() -> &'static [PropertyCase] {
    REGISTRY
}

pub fn find(id: &str) -> Option<&'static PropertyCase> {
    REGISTRY.iter().find(|c| c.id == id)
}

fn hs(a: &Matrix, nu: Weight) -> Result<f64> {
    Ok(w2nu_closed(a, nu)?.value)
}

fn op(t: &Trial, a: &Matrix, nu: Weight) -> Result<RadiusResult> {
    wnu_operator(a, nu, t.sweep())
}

fn c(nu: Weight) -> f64 {
    nu.hs_coefficient()
}

fn weight(v: f64) -> Weight {
    Weight::new(v.clamp(0.0, 1.0)).expect("clamped")
}

fn trace_cauchy_schwarz(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let b = t.ginibre("B")?;
    let lhs = (&a * &b).trace()?.norm();
    t.le(lhs, a.hs_norm() * b.hs_norm());
    Ok(())
}

fn classical_bounds(t: &mut Trial) -> Result<()> {
    let kind = [Ginibre, SquareZero, NormalAlignedSquares][t.index % 3];
    let a = t.draw("A", kind)?;
    let w = classical_w(&a, t.sweep())?;
    let norm = operator_norm(&a)?;
    t.le_slack(norm / 2.0, w.value, w.error_bound);
    t.le(w.value, norm);
    Ok(())
}

fn classical_sup_identity(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let w = classical_w(&a, t.sweep())?;
    for _ in 0..32 {
        let x = unit_vector(t.dim, t.rng());
        let form = vec_dot(&x, &a.apply(&x)).norm();
        t.le_slack(form, w.value, w.error_bound);
    }
    Ok(())
}

fn sweep_definition(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    for norm in [NormKind::HilbertSchmidt, NormKind::Operator] {
        let s = radius_sweep(&a, nu, norm, t.sweep())?;
        for _ in 0..16 {
            let theta = t.angle();
            let g = norm.eval(&weighted_real(&rotate(&a, theta), nu)?)?;
            t.le_slack(g, s.value, s.error_bound);
        }
    }
    Ok(())
}

fn imaginary_form(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let imag_at = |norm: NormKind, theta: f64| norm.eval(&weighted_imag(&rotate(&a, theta + FRAC_PI_2), nu)?);
    for _ in 0..8 {
        let theta = t.angle();
        let direct = imag_at(NormKind::HilbertSchmidt, theta)?;
        t.eq(direct, hs_theta_profile(&a, nu, theta)?);
    }
    let v = nu.value();
    let lipschitz = v * operator_norm(&a)? + (1.0 - v) * operator_norm(&a.adjoint())?;
    let imag = sweep_profile(|theta| imag_at(NormKind::Operator, theta), lipschitz, t.sweep())?.result;
    let real = op(t, &a, nu)?;
    t.eq_slack(imag.value, real.value, imag.error_bound.max(real.error_bound));
    Ok(())
}

fn operator_specialization(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let a_star = a.adjoint();
    // Same supremum, each norm evaluated by the Hermitian eigensolver on R*R.
    let eig_norm = |theta: f64| -> Result<f64> {
        let e = C64::from_polar(1.0, theta);
        let r = a.lin_comb(e * nu.value(), &a_star, e.conj() * (1.0 - nu.value()))?;
        let gram = (&r.adjoint() * &r).hermitian_part()?;
        Ok(hermitian_eigenvalues(&gram)?[0].max(0.0).sqrt())
    };
    let lipschitz = nu.value() * operator_norm(&a)? + (1.0 - nu.value()) * operator_norm(&a_star)?;
    let by_eig = sweep_profile(eig_norm, lipschitz, t.sweep())?.result;
    let by_power = op(t, &a, nu)?;
    t.eq_slack(by_power.value, by_eig.value, by_power.error_bound.max(by_eig.error_bound));
    Ok(())
}

fn endpoints(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    for norm in [NormKind::HilbertSchmidt, NormKind::Operator] {
        let one = radius_sweep(&a, Weight::ONE, norm, t.sweep())?;
        t.eq_slack(one.value, norm.eval(&a)?, one.error_bound);
        let zero = radius_sweep(&a, Weight::ZERO, norm, t.sweep())?;
        t.eq_slack(zero.value, norm.eval(&a.adjoint())?, zero.error_bound);
    }
    let half = op(t, &a, Weight::HALF)?;
    let classical = classical_w(&a, t.sweep())?;
    t.eq_slack(half.value, classical.value, half.error_bound.max(classical.error_bound));
    let w = hs(&a, Weight::HALF)?;
    t.eq(w * w, 0.5 * a.hs_norm_sqr() + 0.5 * (&a * &a).trace()?.norm());
    Ok(())
}

fn norm_axioms(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let b = t.ginibre("B")?;
    let alpha = C64::from_polar(3.0 * t.uniform(), t.angle());
    let nu = t.nu;
    let scaled = a.scale(alpha);

    t.eq(hs(&scaled, nu)?, alpha.norm() * hs(&a, nu)?);
    t.le(hs(&(&a + &b), nu)?, hs(&a, nu)? + hs(&b, nu)?);

    let (wa, wb) = (op(t, &a, nu)?, op(t, &b, nu)?);
    let ws = op(t, &scaled, nu)?;
    t.eq_slack(ws.value, alpha.norm() * wa.value, ws.error_bound.max(alpha.norm() * wa.error_bound));
    let wsum = op(t, &(&a + &b), nu)?;
    t.le_slack(wsum.value, wa.value + wb.value, wa.error_bound + wb.error_bound);

    // Definiteness: w is bounded below by a positive multiple of a norm of A.
    for norm in [NormKind::HilbertSchmidt, NormKind::Operator] {
        let s = radius_sweep(&a, nu, norm, t.sweep())?;
        if nu.value() > 0.0 {
            t.le_slack(nu.value() * norm.eval(&a)?, s.value, s.error_bound);
        } else {
            t.eq_slack(s.value, norm.eval(&a.adjoint())?, s.error_bound);
        }
        let zero = radius_sweep(&Matrix::zeros(t.dim), nu, norm, t.sweep())?;
        t.eq(zero.value, 0.0);
    }
    Ok(())
}

fn max_sandwich(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let v = nu.value();
    for norm in [NormKind::HilbertSchmidt, NormKind::Operator] {
        let (na, nas) = (norm.eval(&a)?, norm.eval(&a.adjoint())?);
        let s = match norm {
            NormKind::HilbertSchmidt => w2nu_closed(&a, nu)?,
            NormKind::Operator => op(t, &a, nu)?,
        };
        t.le_slack((v * na).max((1.0 - v) * nas), s.value, s.error_bound);
        t.le(s.value, na.max(nas));
    }
    Ok(())
}

fn adjoint_flip(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let a_star = a.adjoint();
    t.eq(hs(&a_star, nu)?, hs(&a, nu.complement())?);
    let (l, r) = (op(t, &a_star, nu)?, op(t, &a, nu.complement())?);
    t.eq_slack(l.value, r.value, l.error_bound.max(r.error_bound));
    Ok(())
}

fn self_adjoint_value(t: &mut Trial) -> Result<()> {
    let h = t.draw("A", Hermitian)?;
    let nu = t.nu;
    t.eq(hs(&h, nu)?, h.hs_norm());
    let s = op(t, &h, nu)?;
    t.eq_slack(s.value, operator_norm(&h)?, s.error_bound);
    Ok(())
}

fn two_angle(t: &mut Trial) -> Result<()> {
    const GRID: usize = 24;
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let w = hs(&a, nu)?;
    let grid = two_angle_radius(&a, nu, NormKind::HilbertSchmidt, GRID)?;
    let gap = two_angle_error_bound(&a, nu, NormKind::HilbertSchmidt, GRID)?;
    t.le(grid, w);
    t.le_slack(w, grid, gap);
    Ok(())
}

fn self_adjoint_functional(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    t.eq(hs(&a.adjoint(), nu)?, hs(&a, nu)?);
    let (l, r) = (op(t, &a.adjoint(), nu)?, op(t, &a, nu)?);
    t.eq_slack(l.value, r.value, l.error_bound.max(r.error_bound));
    Ok(())
}

fn norm_equivalence(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let k = (1.0 + (1.0 - 2.0 * nu.value()).abs()) / 2.0;
    let w = hs(&a, nu)?;
    t.le(k * a.hs_norm(), w);
    t.le(w, a.hs_norm());
    let s = op(t, &a, nu)?;
    let norm = operator_norm(&a)?;
    t.le_slack(k * norm, s.value, s.error_bound);
    t.le(s.value, norm);
    Ok(())
}

fn nu_convexity(t: &mut Trial) -> Result<()> {
    const STEPS: usize = 20;
    let a = t.ginibre("A")?;
    let at = |k: usize| weight(k as f64 / STEPS as f64);
    let f: Vec<f64> = (0..=STEPS).map(|k| hs(&a, at(k))).collect::<Result<_>>()?;
    let (mid, low, high) = (f[STEPS / 2], f[0], f[STEPS]);
    for i in 0..=STEPS {
        t.eq(f[i], f[STEPS - i]);
        t.le(mid, f[i]);
        t.le(f[i], low.max(high));
        for j in (i + 2..=STEPS).step_by(2) {
            t.le(f[(i + j) / 2], 0.5 * (f[i] + f[j]));
        }
    }
    let own = hs(&a, t.nu)?;
    t.le(mid, own);

    // Operator norm: midpoint convexity and symmetry on a coarse ν grid.
    let g: Vec<RadiusResult> = [0.0, 0.25, 0.5, 0.75, 1.0].iter().map(|&v| op(t, &a, weight(v))).collect::<Result<_>>()?;
    t.le_slack(g[2].value, 0.5 * (g[1].value + g[3].value), 0.0);
    t.le_slack(g[1].value, 0.5 * (g[0].value + g[2].value), 0.5 * (g[0].error_bound + g[2].error_bound));
    t.le_slack(g[3].value, 0.5 * (g[2].value + g[4].value), 0.5 * (g[2].error_bound + g[4].error_bound));
    t.eq_slack(g[1].value, g[3].value, g[1].error_bound.max(g[3].error_bound));
    t.le_slack(g[2].value, g[1].value.min(g[3].value), 0.0);
    Ok(())
}

fn nu_monotone(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let mu = weight(t.uniform());
    let nu = t.nu;
    let (near, far) =
        if (nu.value() - 0.5).abs() <= (mu.value() - 0.5).abs() { (nu, mu) } else { (mu, nu) };
    t.le(hs(&a, near)?, hs(&a, far)?);
    let (n, f) = (op(t, &a, near)?, op(t, &a, far)?);
    t.le_slack(n.value, f.value, f.error_bound);
    Ok(())
}

fn weak_unitary(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let u = t.draw("U", Unitary)?;
    let nu = t.nu;
    let conj = &(&u.adjoint() * &a) * &u;
    t.eq(hs(&conj, nu)?, hs(&a, nu)?);
    let (l, r) = (op(t, &conj, nu)?, op(t, &a, nu)?);
    t.eq_slack(l.value, r.value, l.error_bound.max(r.error_bound));
    Ok(())
}

fn wnu_dominates(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let norm_identity = Matrix::identity(t.dim).hs_norm();
    let s = op(t, &a, nu)?;
    t.le_slack(hs(&a, nu)?, s.value * norm_identity, s.error_bound * norm_identity);
    Ok(())
}

fn closed_vs_sweep(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let closed = hs(&a, nu)?;
    let s = radius_sweep(&a, nu, NormKind::HilbertSchmidt, t.sweep())?;
    t.margin((closed - s.value).abs() - 1e-9 * a.hs_norm().max(1.0));
    t.le_slack(closed, s.value, s.error_bound);
    Ok(())
}

fn hs_bounds(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let w = hs(&a, nu)?;
    t.le(c(nu).sqrt() * a.hs_norm(), w);
    t.le(w, a.hs_norm());
    Ok(())
}

fn constant_comparison(t: &mut Trial) -> Result<()> {
    let offset = t.uniform() / 100.0;
    for k in 0..=100 {
        let nu = weight(k as f64 / 100.0);
        let shifted = weight(k as f64 / 100.0 + offset);
        for v in [nu, shifted, t.nu] {
            t.le((1.0 + (1.0 - 2.0 * v.value()).abs()) / 2.0, c(v).sqrt());
        }
    }
    Ok(())
}

fn lower_equality(t: &mut Trial) -> Result<()> {
    let a = t.draw("A", TraceNilpotent)?;
    let nu = t.nu;
    t.eq(hs(&a, nu)?, c(nu).sqrt() * a.hs_norm());
    Ok(())
}

fn upper_equality(t: &mut Trial) -> Result<()> {
    let a = t.draw("A", NormalAlignedSquares)?;
    t.eq(hs(&a, t.nu)?, a.hs_norm());
    Ok(())
}

fn block_pythagoras(t: &mut Trial) -> Result<()> {
    let [x, y, z, w] = ["X", "Y", "Z", "W"].map(|n| t.ginibre(n));
    let (x, y, z, w) = (x?, y?, z?, w?);
    let blk = block2(&x, &y, &z, &w)?;
    let parts = x.hs_norm_sqr() + y.hs_norm_sqr() + z.hs_norm_sqr() + w.hs_norm_sqr();
    t.eq(blk.realized().hs_norm_sqr(), parts);
    Ok(())
}

fn offdiag_swap(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let b = t.ginibre("B")?;
    let nu = t.nu;
    t.eq(offdiag(&a, &b)?.w2nu(nu)?.value, offdiag(&b, &a)?.w2nu(nu)?.value);
    Ok(())
}

fn offdiag_phase(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let b = t.ginibre("B")?;
    let theta = t.angle();
    let nu = t.nu;
    t.eq(offdiag(&a, &b)?.w2nu(nu)?.value, offdiag(&a, &rotate(&b, theta))?.w2nu(nu)?.value);
    Ok(())
}

fn block_signed(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let neg = -&a;
    let w = block2(&a, &a, &neg, &neg)?.w2nu(nu)?.value;
    t.eq(w, 2.0 * c(nu).sqrt() * a.hs_norm());
    Ok(())
}

fn offdiag_equal(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    t.eq(offdiag(&a, &a)?.w2nu(nu)?.value, SQRT_2 * hs(&a, nu)?);
    Ok(())
}

fn block_top_row(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let b = t.ginibre("B")?;
    let nu = t.nu;
    let z = Matrix::zeros(t.dim);
    let w = block2(&a, &b, &z, &z)?.w2nu(nu)?.value;
    t.eq(w * w, hs(&a, nu)?.powi(2) + c(nu) * b.hs_norm_sqr());
    Ok(())
}

fn block_imag_diagonal(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let (b, cc) = trace_orthogonal_pair(t.dim, t.rng());
    let b = t.record("B", b);
    let cc = t.record("C", cc);
    let nu = t.nu;
    let w = block2(&a, &b, &cc, &a.scale(I))?.w2nu(nu)?.value;
    t.eq(w * w, c(nu) * (2.0 * a.hs_norm_sqr() + b.hs_norm_sqr() + cc.hs_norm_sqr()));
    Ok(())
}

fn offdiag_psd(t: &mut Trial) -> Result<()> {
    let a = t.draw("A", Psd)?;
    let b = t.draw("B", Psd)?;
    let nu = t.nu;
    let k = 1.0 - 2.0 * nu.value();
    let w = offdiag(&a, &b)?.w2nu(nu)?.value;
    t.eq(w * w, ((&a + &b).hs_norm_sqr() + k * k * (&a - &b).hs_norm_sqr()) / 2.0);
    Ok(())
}

fn diag_hermitian(t: &mut Trial) -> Result<()> {
    let a = t.draw("A", Hermitian)?;
    let b = t.draw("B", Hermitian)?;
    let nu = t.nu;
    let w = diag2(&a, &b)?.w2nu(nu)?.value;
    t.eq(w * w, hs(&a, nu)?.powi(2) + hs(&b, nu)?.powi(2));
    Ok(())
}

fn block_symmetric(t: &mut Trial) -> Result<()> {
    let a = t.draw("A", Hermitian)?;
    let b = t.draw("B", Hermitian)?;
    let nu = t.nu;
    let w = block2(&a, &b, &b, &a)?.w2nu(nu)?.value;
    t.eq(w * w, hs(&(&a + &b), nu)?.powi(2) + hs(&(&a - &b), nu)?.powi(2));
    Ok(())
}

fn general_block_upper(t: &mut Trial) -> Result<()> {
    let [a, b, cc, d] = ["A", "B", "C", "D"].map(|n| t.ginibre(n));
    let (a, b, cc, d) = (a?, b?, cc?, d?);
    let nu = t.nu;
    let w = block2(&a, &b, &cc, &d)?.w2nu(nu)?.value;
    t.le(w * w, hs(&a, nu)?.powi(2) + hs(&d, nu)?.powi(2) + b.hs_norm_sqr() + cc.hs_norm_sqr());
    Ok(())
}

fn tracefree_block_upper(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let d = t.ginibre("D")?;
    let (b, cc) = trace_orthogonal_pair(t.dim, t.rng());
    let b = t.record("B", b);
    let cc = t.record("C", cc);
    let nu = t.nu;
    let w = block2(&a, &b, &cc, &d)?.w2nu(nu)?.value;
    let bound = hs(&a, nu)?.powi(2) + hs(&d, nu)?.powi(2) + c(nu) * (b.hs_norm_sqr() + cc.hs_norm_sqr());
    t.le(w * w, bound);
    Ok(())
}

fn block_corollaries(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let b = t.ginibre("B")?;
    let nu = t.nu;
    let d = diag2(&a, &b)?.w2nu(nu)?.value;
    t.le(d, (hs(&a, nu)?.powi(2) + hs(&b, nu)?.powi(2)).sqrt());
    let o = offdiag(&a, &b)?.w2nu(nu)?.value;
    t.le(o, (a.hs_norm_sqr() + b.hs_norm_sqr()).sqrt());
    Ok(())
}

fn ri_sandwich(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let nu = t.nu;
    let w = hs(&a, nu)?;
    let r = ri_block(&a, nu)?.w2nu(nu)?.value;
    t.le((1.0 + (1.0 - 2.0 * nu.value()).abs()) / SQRT_2 * w, r);
    t.le(r, SQRT_2 * w);
    Ok(())
}

fn parallelogram(t: &mut Trial) -> Result<()> {
    let x = t.ginibre("X")?;
    let y = t.ginibre("Y")?;
    let lhs = 2.0 * (x.hs_norm_sqr() + y.hs_norm_sqr());
    t.eq_tol(lhs, (&x - &y).hs_norm_sqr() + (&x + &y).hs_norm_sqr(), 1e-12);
    Ok(())
}

fn triangle_chain(t: &mut Trial) -> Result<()> {
    let a = t.ginibre("A")?;
    let b = t.ginibre("B")?;
    let nu = t.nu;
    let chain = triangle_refinement(&a, &b, nu)?;
    t.le(chain.lhs, chain.mid);
    t.le(chain.mid, chain.rhs);
    if nu == Weight::HALF {
        let w = offdiag(&a, &b.adjoint())?.w2nu(nu)?.value;
        t.eq(chain.mid, SQRT_2 * w);
    }
    Ok(())
}
