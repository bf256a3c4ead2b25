use proptest::prelude::*;
use wradius::blocks::{block2, offdiag};
use wradius::harness::{check_relation, triangle_refinement, Relation};
use wradius::matrix::{Matrix, C64};
use wradius::radius::{hs_theta_profile, w2nu_closed, w2nu_maximizer};
use wradius::weighted::{reconstruct, rotate, weighted_imag, weighted_real};
use wradius::Weight;

fn square(max_dim: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_dim).prop_flat_map(|n| {
        prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), n * n).prop_map(move |entries| {
            Matrix::new(n, n, entries.into_iter().map(|(re, im)| C64::new(re, im)).collect()).unwrap()
        })
    })
}

fn pair(max_dim: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
    (1..=max_dim).prop_flat_map(|n| {
        let m = || {
            prop::collection::vec((-5.0..5.0f64, -5.0..5.0f64), n * n)
                .prop_map(move |e| Matrix::new(n, n, e.into_iter().map(|(re, im)| C64::new(re, im)).collect()).unwrap())
        };
        (m(), m())
    })
}

fn weight() -> impl Strategy<Value = Weight> {
    (0.0..=1.0f64).prop_map(|v| Weight::new(v).unwrap())
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn weight_range(v in -2.0..3.0f64) {
        prop_assert_eq!(Weight::new(v).is_ok(), (0.0..=1.0).contains(&v));
    }

    #[test]
    fn decomposition(a in square(5), nu in weight()) {
        let r = weighted_real(&a, nu).unwrap();
        let i = weighted_imag(&a, nu).unwrap();
        let sum = r.lin_comb(C64::new(1.0, 0.0), &i, C64::new(0.0, 1.0)).unwrap();
        prop_assert!((&sum - &a.scale_real(2.0 * nu.value())).hs_norm() <= 1e-12 * a.hs_norm().max(1.0));
        if nu.value() > 0.0 {
            let back = reconstruct(&r, &weighted_real(&a.scale(C64::new(0.0, 1.0)), nu).unwrap(), nu).unwrap();
            prop_assert!((&back - &a).hs_norm() <= 1e-12 * a.hs_norm().max(1.0) / nu.value());
        }
    }

    #[test]
    fn profile_bounded_by_closed_form(a in square(5), nu in weight(), theta in -10.0..10.0f64) {
        let closed = w2nu_closed(&a, nu).unwrap().value;
        let p = hs_theta_profile(&a, nu, theta).unwrap();
        prop_assert!(p <= closed * (1.0 + 1e-12) + 1e-12);
        let direct = weighted_real(&rotate(&a, theta), nu).unwrap().hs_norm();
        prop_assert!(rel_close(p, direct, 1e-10));
        let peak = hs_theta_profile(&a, nu, w2nu_maximizer(&a, nu).unwrap()).unwrap();
        prop_assert!(rel_close(peak, closed, 1e-12));
    }

    #[test]
    fn closed_form_bounds(a in square(6), nu in weight()) {
        let w = w2nu_closed(&a, nu).unwrap().value;
        let norm = a.hs_norm();
        prop_assert!(nu.hs_coefficient().sqrt() * norm <= w * (1.0 + 1e-14) + 1e-14);
        prop_assert!(w <= norm * (1.0 + 1e-14) + 1e-14);
        let adj = w2nu_closed(&a.adjoint(), nu).unwrap().value;
        prop_assert!(rel_close(w, adj, 1e-13));
        let flip = w2nu_closed(&a, nu.complement()).unwrap().value;
        prop_assert!(rel_close(w, flip, 1e-12));
    }

    #[test]
    fn homogeneity_and_subadditivity((a, b) in pair(5), nu in weight(), r in 0.0..4.0f64, phase in 0.0..6.3f64) {
        let alpha = C64::from_polar(r, phase);
        let w = |m: &Matrix| w2nu_closed(m, nu).unwrap().value;
        prop_assert!(rel_close(w(&a.scale(alpha)), r * w(&a), 1e-12));
        prop_assert!(w(&(&a + &b)) <= w(&a) + w(&b) + 1e-10);
    }

    #[test]
    fn block_norms((a, b) in pair(4), nu in weight()) {
        let blk = block2(&a, &b, &b, &a).unwrap();
        let parts = 2.0 * (a.hs_norm_sqr() + b.hs_norm_sqr());
        prop_assert!(rel_close(blk.realized().hs_norm_sqr(), parts, 1e-12));
        let o = offdiag(&a, &b).unwrap().w2nu(nu).unwrap().value;
        prop_assert!(o <= (a.hs_norm_sqr() + b.hs_norm_sqr()).sqrt() + 1e-10);
    }

    #[test]
    fn triangle_chain((a, b) in pair(4), nu in weight()) {
        let t = triangle_refinement(&a, &b, nu).unwrap();
        prop_assert!(t.lhs <= t.mid + 1e-9 * t.mid.max(1.0));
        prop_assert!(t.mid <= t.rhs + 1e-9 * t.rhs.max(1.0));
    }

    #[test]
    fn matrix_json_round_trip(a in square(4)) {
        prop_assert_eq!(Matrix::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn margins_are_signed(l in -10.0..10.0f64, r in -10.0..10.0f64, tol in 0.0..1e-6f64, slack in 0.0..1.0f64) {
        let le = check_relation(l, r, Relation::Le, tol, slack);
        prop_assert_eq!(le > 0.0, l > r + tol * r.abs().max(1.0) + slack);
        let eq = check_relation(l, r, Relation::Eq, tol, slack);
        prop_assert!(eq >= le - 1e-12);
        prop_assert!(check_relation(r, r, Relation::Eq, tol, 0.0) <= 0.0);
    }
}
