//! Seeded randomized verification of the identities and inequalities
//! satisfied by `w_(N,ν)`.
//!
//! Every property in the [`registry`] is a function of one [`Trial`]: it
//! draws its inputs from the trial's random stream, evaluates both sides,
//! and records signed margins (positive means violated). [`run_property`]
//! aggregates the worst margin over all trials and keeps the inputs of the
//! worst trial as a replayable witness.

mod registry;

use serde::{Deserialize, Serialize};

use crate::blocks::offdiag;
use crate::ensemble::{EnsembleKind, EnsembleSpec};
use crate::error::{Error, Result};
use crate::exec::{map_indexed, Execution};
use crate::matrix::{Matrix, MatrixFile};
use crate::radius::{w2nu_closed, SweepConfig};
use crate::rng::{self, SeededRng};
use crate::weighted::Weight;

pub use registry::{find, registry};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub master_seed: u64,
    pub trials_per_property: usize,
    pub dims: Vec<usize>,
    pub nu_samples: Vec<Weight>,
    pub tol_identity: f64,
    pub tol_inequality: f64,
    pub sweep: SweepConfig,
    /// How trials are scheduled. Not part of the report.
    #[serde(skip)]
    pub execution: Execution,
}

impl SuiteConfig {
    /// Default settings under `master_seed`. The ν samples are the grid
    /// `0, 0.1, …, 1` followed by five uniform draws from the seed.
    pub fn new(master_seed: u64) -> Self {
        let mut nu_samples: Vec<Weight> = (0..=10).map(|k| Weight::new(k as f64 / 10.0).unwrap()).collect();
        let mut r = rng::seeded(rng::derive_seed(master_seed, "nu-samples", 0));
        nu_samples.extend((0..5).map(|_| Weight::new(rng::uniform(&mut r)).unwrap()));
        SuiteConfig {
            master_seed,
            trials_per_property: 200,
            dims: vec![1, 2, 3, 4, 6, 8],
            nu_samples,
            tol_identity: 1e-10,
            tol_inequality: 1e-9,
            sweep: SweepConfig::default().with_execution(Execution::Serial),
            execution: Execution::default(),
        }
    }

    pub fn with_trials(self, trials_per_property: usize) -> Self {
        SuiteConfig { trials_per_property, ..self }
    }

    pub fn with_dims(self, dims: Vec<usize>) -> Self {
        SuiteConfig { dims, ..self }
    }

    pub fn with_execution(self, execution: Execution) -> Self {
        SuiteConfig { execution, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials_per_property == 0 {
            return Err(Error::BadSweepConfig("trials_per_property must be at least 1".into()));
        }
        if self.dims.is_empty() || self.nu_samples.is_empty() {
            return Err(Error::BadSweepConfig("dims and nu_samples must be non-empty".into()));
        }
        if let Some(&d) = self.dims.iter().find(|&&d| d == 0) {
            return Err(Error::BadDimension(d));
        }
        if !(self.tol_identity >= 0.0 && self.tol_inequality >= 0.0) {
            return Err(Error::BadSweepConfig("tolerances must be non-negative".into()));
        }
        self.sweep.validate()
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::new(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq,
    Le,
    Chain,
}

/// Signed margin of `lhs (relation) rhs`; positive means violated.
///
/// * `Eq`: `|lhs − rhs| − tol·max(1, |rhs|) − slack`
/// * `Le` and `Chain` (applied to one link): `lhs − rhs − tol·max(1, |rhs|) − slack`
pub fn check_relation(lhs: f64, rhs: f64, relation: Relation, tol: f64, slack: f64) -> f64 {
    let allowance = tol * rhs.abs().max(1.0) + slack;
    let m = match relation {
        Relation::Eq => (lhs - rhs).abs() - allowance,
        Relation::Le | Relation::Chain => lhs - rhs - allowance,
    };
    if m.is_nan() { f64::MAX } else { m }
}

/// A registered property.
#[derive(Debug, Clone, Copy)]
pub struct PropertyCase {
    pub id: &'static str,
    pub statement: &'static str,
    pub relation: Relation,
    pub requires: &'static str,
    pub(crate) check: fn(&mut Trial) -> Result<()>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedMatrix {
    pub name: String,
    pub matrix: MatrixFile,
}

/// Inputs of one trial, enough to replay it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub trial: usize,
    pub seed: u64,
    pub dim: usize,
    pub nu: f64,
    pub inputs: Vec<NamedMatrix>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub id: String,
    pub statement: String,
    pub relation: Relation,
    pub requires: String,
    pub trials: usize,
    pub violations: usize,
    pub worst_margin: f64,
    pub witness: Witness,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub total: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub properties: Vec<PropertyReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn property(&self, id: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// State of one trial: its random stream, its sampled `(dim, ν)`, the inputs
/// drawn so far and the running worst margin.
pub struct Trial<'a> {
    pub index: usize,
    pub seed: u64,
    pub dim: usize,
    pub nu: Weight,
    pub cfg: &'a SuiteConfig,
    rng: SeededRng,
    inputs: Vec<(String, Matrix)>,
    worst: f64,
}

impl<'a> Trial<'a> {
    fn new(case: &PropertyCase, cfg: &'a SuiteConfig, index: usize) -> Self {
        let seed = rng::derive_seed(cfg.master_seed, case.id, index as u64);
        Trial {
            index,
            seed,
            dim: cfg.dims[index % cfg.dims.len()],
            nu: cfg.nu_samples[index % cfg.nu_samples.len()],
            cfg,
            rng: rng::seeded(seed),
            inputs: Vec::new(),
            worst: f64::NEG_INFINITY,
        }
    }

    pub fn sweep(&self) -> &SweepConfig {
        &self.cfg.sweep
    }

    /// Draws a `dim × dim` sample of `kind` and records it under `name`.
    pub fn draw(&mut self, name: &str, kind: EnsembleKind) -> Result<Matrix> {
        let m = EnsembleSpec::new(kind, self.dim).sample_from(&mut self.rng)?;
        Ok(self.record(name, m))
    }

    pub fn ginibre(&mut self, name: &str) -> Result<Matrix> {
        self.draw(name, EnsembleKind::Ginibre)
    }

    /// Records an input built outside [`Trial::draw`].
    pub fn record(&mut self, name: &str, m: Matrix) -> Matrix {
        self.inputs.push((name.to_string(), m.clone()));
        m
    }

    pub fn rng(&mut self) -> &mut SeededRng {
        &mut self.rng
    }

    pub fn uniform(&mut self) -> f64 {
        rng::uniform(&mut self.rng)
    }

    pub fn angle(&mut self) -> f64 {
        std::f64::consts::TAU * self.uniform()
    }

    pub fn margin(&mut self, m: f64) {
        let m = if m.is_nan() { f64::MAX } else { m };
        self.worst = self.worst.max(m);
    }

    /// `lhs = rhs` at `tol_identity`.
    pub fn eq(&mut self, lhs: f64, rhs: f64) {
        self.eq_slack(lhs, rhs, 0.0);
    }

    /// `lhs = rhs` at `tol_identity`, widened by a sweep error bound.
    pub fn eq_slack(&mut self, lhs: f64, rhs: f64, slack: f64) {
        let tol = self.cfg.tol_identity;
        self.margin(check_relation(lhs, rhs, Relation::Eq, tol, slack));
    }

    pub fn eq_tol(&mut self, lhs: f64, rhs: f64, tol: f64) {
        self.margin(check_relation(lhs, rhs, Relation::Eq, tol, 0.0));
    }

    /// `lhs ≤ rhs` at `tol_inequality`.
    pub fn le(&mut self, lhs: f64, rhs: f64) {
        self.le_slack(lhs, rhs, 0.0);
    }

    /// `lhs ≤ rhs` at `tol_inequality`, with `slack` added to the right side.
    pub fn le_slack(&mut self, lhs: f64, rhs: f64, slack: f64) {
        let tol = self.cfg.tol_inequality;
        self.margin(check_relation(lhs, rhs, Relation::Le, tol, slack));
    }

    fn witness(&self, error: Option<String>) -> Witness {
        Witness {
            trial: self.index,
            seed: self.seed,
            dim: self.dim,
            nu: self.nu.value(),
            inputs: self
                .inputs
                .iter()
                .map(|(name, m)| NamedMatrix { name: name.clone(), matrix: MatrixFile::from(m) })
                .collect(),
            error,
        }
    }
}

struct TrialOutcome {
    margin: f64,
    witness: Witness,
}

fn run_trial(case: &PropertyCase, cfg: &SuiteConfig, index: usize) -> TrialOutcome {
    let mut trial = Trial::new(case, cfg, index);
    match (case.check)(&mut trial) {
        Ok(()) => {
            // A trial that recorded nothing has nothing to violate.
            let margin = if trial.worst == f64::NEG_INFINITY { 0.0 } else { trial.worst };
            TrialOutcome { margin, witness: trial.witness(None) }
        }
        Err(e) => TrialOutcome { margin: f64::MAX, witness: trial.witness(Some(e.to_string())) },
    }
}

fn run_case(case: &PropertyCase, cfg: &SuiteConfig) -> PropertyReport {
    let outcomes = map_indexed(cfg.execution, cfg.trials_per_property, |t| run_trial(case, cfg, t));
    let violations = outcomes.iter().filter(|o| o.margin > 0.0).count();
    let worst = outcomes
        .into_iter()
        .reduce(|best, o| if o.margin > best.margin { o } else { best })
        .expect("at least one trial");
    PropertyReport {
        id: case.id.to_string(),
        statement: case.statement.to_string(),
        relation: case.relation,
        requires: case.requires.to_string(),
        trials: cfg.trials_per_property,
        violations,
        worst_margin: worst.margin,
        witness: worst.witness,
    }
}

/// Runs the property registered under `id`.
pub fn run_property(id: &str, cfg: &SuiteConfig) -> Result<PropertyReport> {
    cfg.validate()?;
    let case = find(id).ok_or_else(|| Error::UnknownProperty(id.to_string()))?;
    Ok(run_case(case, cfg))
}

/// Runs every registered property, in registry order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    run_selected(cfg, &ids)
}

/// Runs the listed properties in registry order. Unknown ids are an error.
pub fn run_selected(cfg: &SuiteConfig, ids: &[&str]) -> Result<SuiteReport> {
    cfg.validate()?;
    if let Some(bad) = ids.iter().find(|id| find(id).is_none()) {
        return Err(Error::UnknownProperty(bad.to_string()));
    }
    let properties: Vec<PropertyReport> =
        registry().iter().filter(|c| ids.contains(&c.id)).map(|c| run_case(c, cfg)).collect();
    let passed = properties.iter().filter(|p| p.passed()).count();
    let total = properties.len();
    Ok(SuiteReport { config: cfg.clone(), properties, summary: Summary { passed, failed: total - passed, total } })
}

/// The three terms of the refined triangle inequality for `‖·‖₂`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleChain {
    /// `‖A + B‖₂`
    pub lhs: f64,
    /// `√(2·w_(2,ν)²([[0, A], [B*, 0]]) − (1−2ν)²‖A − B‖₂²)`
    pub mid: f64,
    /// `‖A‖₂ + ‖B‖₂`
    pub rhs: f64,
}

/// Evaluates the chain `‖A+B‖₂ ≤ mid ≤ ‖A‖₂ + ‖B‖₂`.
///
/// The radicand is `‖A+B‖₂²` plus a non-negative term, so a negative value
/// beyond rounding (`−1e−12` relative to `‖A‖₂² + ‖B‖₂²`) is reported as an
/// error rather than clamped.
pub fn triangle_refinement(a: &Matrix, b: &Matrix, nu: Weight) -> Result<TriangleChain> {
    let n = a.require_square()?;
    if b.require_square()? != n {
        return Err(Error::DimMismatch(format!("A is {n}x{n}, B is {0}x{0}", b.rows())));
    }
    let w = w2nu_closed(offdiag(a, &b.adjoint())?.realized(), nu)?.value;
    let k = 1.0 - 2.0 * nu.value();
    let radicand = 2.0 * w * w - k * k * (a - b).hs_norm_sqr();
    let scale = (a.hs_norm_sqr() + b.hs_norm_sqr()).max(1.0);
    if radicand < -1e-12 * scale {
        return Err(Error::NegativeRadicand(radicand));
    }
    Ok(TriangleChain { lhs: (a + b).hs_norm(), mid: radicand.max(0.0).sqrt(), rhs: a.hs_norm() + b.hs_norm() })
}
