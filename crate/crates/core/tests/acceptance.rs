//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::{Command, ExitCode};
use std::time::Instant;

use wradius::blocks::offdiag;
use wradius::ensemble::{sample, EnsembleKind, EnsembleSpec};
use wradius::harness::{run_selected, triangle_refinement, SuiteConfig, SuiteReport};
use wradius::matrix::{operator_norm, Matrix};
use wradius::radius::{classical_w, radius_sweep, w2nu_closed, NormKind, SweepConfig};
use wradius::rng::{derive_seed, seeded, uniform};
use wradius::{Execution, Weight};

const DIMS: [usize; 6] = [1, 2, 3, 4, 6, 8];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn draw(kind: EnsembleKind, dim: usize, label: &str, index: u64) -> Matrix {
    sample(&EnsembleSpec::new(kind, dim), derive_seed(2024, label, index)).unwrap()
}

fn nu_grid(steps: usize) -> Vec<Weight> {
    (0..=steps).map(|k| Weight::new(k as f64 / steps as f64).unwrap()).collect()
}

fn closed_matches_sweep() -> Outcome {
    let started = Instant::now();
    let cfg = SweepConfig::default().with_execution(Execution::Serial);
    let mut worst = 0.0f64;
    let mut cases = 0;
    for &dim in &DIMS {
        for s in 0..200 {
            let a = draw(EnsembleKind::Ginibre, dim, "closed-vs-sweep", (dim * 1000 + s) as u64);
            let scale = a.hs_norm().max(1.0);
            for nu in nu_grid(10) {
                let closed = w2nu_closed(&a, nu).unwrap().value;
                let swept = radius_sweep(&a, nu, NormKind::HilbertSchmidt, &cfg).unwrap().value;
                worst = worst.max((closed - swept).abs() / scale);
                cases += 1;
            }
        }
    }
    let secs = started.elapsed().as_secs_f64();
    outcome(worst <= 1e-9, format!("{cases} cases, worst scaled gap {worst:.3e}, {secs:.1} s"))
}

fn suite_subset(report: &SuiteReport, ids: &[&str]) -> Outcome {
    let mut failed = Vec::new();
    let mut worst = f64::NEG_INFINITY;
    for id in ids {
        match report.property(id) {
            Some(p) => {
                worst = worst.max(p.worst_margin);
                if !p.passed() {
                    failed.push(format!("{id} ({} violations)", p.violations));
                }
            }
            None => failed.push(format!("{id} missing")),
        }
    }
    let detail = format!("{} properties, worst margin {worst:.3e}", ids.len());
    if failed.is_empty() { outcome(true, detail) } else { outcome(false, format!("{detail}; failed: {}", failed.join(", "))) }
}

const IDENTITIES: &[&str] = &[
    "P2.7.i-adjoint-flip",
    "P2.7.ii-selfadjoint",
    "P2.8.i-selfadjoint-functional",
    "L6.3-pythagoras",
    "T7.3.i",
    "T7.3.ii",
    "T7.3.iii",
    "T7.3.iv",
    "T7.3.v",
    "T7.3.vi",
    "T7.3.vii",
    "T7.3.viii",
    "T7.3.ix",
    "L4.1-parallelogram",
];

const INEQUALITIES: &[&str] = &[
    "Eq1.1-trace-cs",
    "Eq1.2-bounds",
    "T2.6-axioms",
    "T2.6-sandwich",
    "P2.8.ii-equivalence",
    "P2.8.iii-convexity",
    "P2.8.iv-monotone",
    "P2.9.i-weak-unitary",
    "P2.9.ii-wnu-dominates",
    "T3.3-hs-bounds",
    "T8.3-upper",
    "R9.3-tracefree-upper",
    "C10.3-corollaries",
    "T11.3-sandwich",
    "T4.2-triangle-chain",
];

fn equality_cases() -> Outcome {
    let cfg = SweepConfig::default().with_execution(Execution::Serial);
    let (mut square_zero, mut lower, mut upper) = (0.0f64, 0.0f64, 0.0f64);
    for &dim in &DIMS[1..] {
        for s in 0..20 {
            let a = draw(EnsembleKind::SquareZero, dim, "square-zero", s);
            let norm = operator_norm(&a).unwrap();
            let w = classical_w(&a, &cfg).unwrap().value;
            square_zero = square_zero.max((w - norm / 2.0).abs() / norm);
        }
    }
    for &dim in &DIMS {
        for s in 0..50 {
            let t = draw(EnsembleKind::TraceNilpotent, dim, "trace-nilpotent", s);
            let n = draw(EnsembleKind::NormalAlignedSquares, dim, "normal-aligned", s);
            for nu in nu_grid(10) {
                let w = w2nu_closed(&t, nu).unwrap().value;
                lower = lower.max((w - nu.hs_coefficient().sqrt() * t.hs_norm()).abs());
                let w = w2nu_closed(&n, nu).unwrap().value;
                upper = upper.max((w - n.hs_norm()).abs());
            }
        }
    }
    outcome(
        square_zero <= 1e-6 && lower <= 1e-10 && upper <= 1e-9,
        format!("square-zero gap {square_zero:.3e}·‖A‖, trace-nilpotent gap {lower:.3e}, normal gap {upper:.3e}"),
    )
}

fn triangle_chain() -> Outcome {
    let mut rng = seeded(derive_seed(2024, "triangle-nu", 0));
    let (mut chain, mut half) = (f64::NEG_INFINITY, 0.0f64);
    for k in 0..1000u64 {
        let dim = DIMS[k as usize % DIMS.len()];
        let a = draw(EnsembleKind::Ginibre, dim, "triangle-a", k);
        let b = draw(EnsembleKind::Ginibre, dim, "triangle-b", k);
        let nu = Weight::new(uniform(&mut rng)).unwrap();
        let t = triangle_refinement(&a, &b, nu).unwrap();
        chain = chain.max(t.lhs - t.mid).max(t.mid - t.rhs);

        // Oracle at ν = ½ from the block itself: w₂² = (‖X‖₂² + |tr X²|)/2.
        let x = offdiag(&a, &b.adjoint()).unwrap().realized().clone();
        let w_sq = 0.5 * x.hs_norm_sqr() + 0.5 * (&x * &x).trace().unwrap().norm();
        let t = triangle_refinement(&a, &b, Weight::HALF).unwrap();
        half = half.max((t.mid - (2.0 * w_sq).sqrt()).abs() / t.mid.max(1.0));
    }
    outcome(chain <= 1e-9 && half <= 1e-10, format!("1000 triples, worst chain excess {chain:.3e}, ν=½ gap {half:.3e}"))
}

fn nu_curve() -> Outcome {
    let grid = nu_grid(100);
    let (mut sym, mut convex, mut shape) = (0.0f64, f64::NEG_INFINITY, true);
    for s in 0..100 {
        let a = draw(EnsembleKind::Ginibre, DIMS[s as usize % DIMS.len()], "nu-curve", s);
        let f: Vec<f64> = grid.iter().map(|&nu| w2nu_closed(&a, nu).unwrap().value).collect();
        let n = f.len() - 1;
        for i in 0..=n {
            sym = sym.max((f[i] - f[n - i]).abs());
            // Flat curves (n = 1, Hermitian-like inputs) differ only by rounding.
            let ulps = 1e-12 * f[0].max(1.0);
            shape &= f[50] <= f[i] + ulps && f[i] <= f[0].max(f[n]) + ulps;
            for j in (i + 2..=n).step_by(2) {
                convex = convex.max(f[(i + j) / 2] - 0.5 * (f[i] + f[j]));
            }
        }
    }
    outcome(
        sym <= 1e-12 && convex <= 1e-10 && shape,
        format!("100 matrices × 101 ν, symmetry gap {sym:.3e}, worst convexity excess {convex:.3e}, extremes ok: {shape}"),
    )
}

fn constants() -> Outcome {
    let mut worst = f64::NEG_INFINITY;
    for k in 0..=10_000 {
        let nu = Weight::new(k as f64 / 10_000.0).unwrap();
        let lhs = (1.0 + (1.0 - 2.0 * nu.value()).abs()) / 2.0;
        worst = worst.max(lhs - nu.hs_coefficient().sqrt());
    }
    outcome(worst <= 2.0 * f64::EPSILON, format!("10001 points, max(lhs − rhs) = {worst:.3e}"))
}

fn cli_report(seed: u64) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_wradius"))
        .args(["verify", "--seed", &seed.to_string()])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("verify exited with {:?}", out.status.code()));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    let mut report = |name, o: Outcome| {
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        results.push((name, o));
    };

    report("[1] closed form equals refined Hilbert–Schmidt sweep", closed_matches_sweep());

    let started = Instant::now();
    let serial = run_selected(
        &SuiteConfig::new(42).with_execution(Execution::Serial),
        &wradius::harness::registry().iter().map(|c| c.id).collect::<Vec<_>>(),
    )
    .expect("suite runs");
    let suite_secs = started.elapsed().as_secs_f64();

    report("[2] exact-identity suite", suite_subset(&serial, IDENTITIES));
    report("[3] inequality suite", suite_subset(&serial, INEQUALITIES));
    report("[4] equality-case sharpness", equality_cases());
    report("[5] triangle refinement chain", triangle_chain());
    report("[6] ν-curve shape", nu_curve());

    let determinism = match (cli_report(42), cli_report(42)) {
        (Ok(first), Ok(second)) => {
            let serial_json = serial.to_json();
            outcome(
                first == second && first == serial_json,
                format!(
                    "two CLI runs identical: {}, CLI equals serial library run: {} ({} bytes, serial suite {suite_secs:.1} s)",
                    first == second,
                    first == serial_json,
                    first.len()
                ),
            )
        }
        (Err(e), _) | (_, Err(e)) => outcome(false, e),
    };
    report("[7] deterministic verify reports", determinism);
    report("[8] constant comparison", constants());

    let failed = results.iter().filter(|(_, o)| !o.pass).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
