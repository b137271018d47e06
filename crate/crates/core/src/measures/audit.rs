//! Executable check of the cardinality axioms c1–c5 and entropy axioms e1–e5.
//!
//! Points come from a regular grid over the `(mu, nu)` square, the five
//! landmark points, and a seeded uniform sample. Monotonicity axioms are
//! probed with directed pairs: one penta index is raised by a small step
//! taken out of the ambiguity index, everything else held. Values outside
//! a measure's domain are skipped and counted.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{cardinality_point, entropy_point, CardinalityKind, EntropyKind};
use crate::kernel::{BipolarValue, PentaValue, EPS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    C1,
    C2,
    C3,
    C4,
    C5,
    E1,
    E2,
    E3,
    E4,
    E5,
}

impl Axiom {
    pub const CARDINALITY: [Axiom; 5] = [Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4, Axiom::C5];
    pub const ENTROPY: [Axiom; 5] = [Axiom::E1, Axiom::E2, Axiom::E3, Axiom::E4, Axiom::E5];

    pub fn describe(self) -> &'static str {
        match self {
            Axiom::C1 => "n(T) = 1, n(F) = 0, n(I) = 0.5",
            Axiom::C2 => "n rises with t, falls with f, u and c on their slices",
            Axiom::C3 => "n(x) = n(x^d) and n(x^c) = n(x^n)",
            Axiom::C4 => "n(x) + n(x^c) <= 1",
            Axiom::C5 => "x1 contains x2 implies n(x1) >= n(x2)",
            Axiom::E1 => "e(T) = e(F) = 0",
            Axiom::E2 => "e(I) = 1",
            Axiom::E3 => "e falls with t and f, rises with u and c on their slices",
            Axiom::E4 => "e(x) = e(x^c) = e(x^d) = e(x^n)",
            Axiom::E5 => "e(U) = e(C) >= e(I)",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::C1 => "c1",
            Axiom::C2 => "c2",
            Axiom::C3 => "c3",
            Axiom::C4 => "c4",
            Axiom::C5 => "c5",
            Axiom::E1 => "e1",
            Axiom::E2 => "e2",
            Axiom::E3 => "e3",
            Axiom::E4 => "e4",
            Axiom::E5 => "e5",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum AuditTarget {
    Cardinality(CardinalityKind),
    Entropy(EntropyKind),
}

impl AuditTarget {
    fn eval(self, x: &BipolarValue) -> Option<f64> {
        match self {
            AuditTarget::Cardinality(k) => cardinality_point(k, x).ok(),
            AuditTarget::Entropy(k) => entropy_point(k, x).ok().map(|e| e.scalar),
        }
    }

    pub fn axioms(self) -> [Axiom; 5] {
        match self {
            AuditTarget::Cardinality(_) => Axiom::CARDINALITY,
            AuditTarget::Entropy(_) => Axiom::ENTROPY,
        }
    }

    /// Axioms the measure is published to violate; every other axiom is
    /// claimed to hold.
    fn claimed_failures(self) -> ClaimedFailures {
        match self {
            AuditTarget::Cardinality(CardinalityKind::ClassicMax) => ClaimedFailures::AtLeastOne,
            AuditTarget::Entropy(EntropyKind::BustinceBurillo) => {
                ClaimedFailures::Exactly(&[Axiom::E2])
            }
            _ => ClaimedFailures::Exactly(&[]),
        }
    }
}

impl fmt::Display for AuditTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditTarget::Cardinality(k) => write!(f, "cardinality:{k}"),
            AuditTarget::Entropy(k) => write!(f, "entropy:{k}"),
        }
    }
}

enum ClaimedFailures {
    Exactly(&'static [Axiom]),
    AtLeastOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No point of the audit fell inside the measure's domain for this axiom.
    Vacuous,
}

impl Status {
    pub fn holds(self) -> bool {
        !matches!(self, Status::Fail)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
        })
    }
}

/// The point (or pair) that broke an axiom, with the values compared.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub points: Vec<(f64, f64)>,
    pub values: Vec<f64>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .points
            .iter()
            .map(|(m, n)| format!("({m}, {n})"))
            .collect();
        let vals: Vec<String> = self.values.iter().map(|v| format!("{v:.6}")).collect();
        write!(
            f,
            "{} at {} -> [{}]",
            self.detail,
            pts.join(" vs "),
            vals.join(", ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub status: Status,
    pub checks: usize,
    pub skipped: usize,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub target: String,
    pub points: usize,
    pub results: Vec<AxiomResult>,
}

impl AuditReport {
    pub fn result(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    pub fn holds(&self, axiom: Axiom) -> bool {
        self.result(axiom).is_some_and(|r| r.status.holds())
    }

    pub fn failures(&self) -> Vec<Axiom> {
        self.results
            .iter()
            .filter(|r| !r.status.holds())
            .map(|r| r.axiom)
            .collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct AuditConfig {
    /// Grid divisions per axis; 100 gives a step of 0.01.
    pub grid_divisions: u32,
    pub random_points: usize,
    pub seed: u64,
    /// Size of the directed perturbation for monotonicity probes.
    pub probe_step: f64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            grid_divisions: 100,
            random_points: 100_000,
            seed: 0x5eed_b1f0,
            probe_step: 0.01,
        }
    }
}

impl AuditConfig {
    pub fn points(&self) -> Vec<BipolarValue> {
        let n = self.grid_divisions;
        let mut pts = vec![
            BipolarValue::TRUE,
            BipolarValue::FALSE,
            BipolarValue::UNKNOWN,
            BipolarValue::CONTRADICTORY,
            BipolarValue::AMBIGUOUS,
        ];
        for a in 0..=n {
            for b in 0..=n {
                pts.push(BipolarValue::new_unchecked(
                    a as f64 / n as f64,
                    b as f64 / n as f64,
                ));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        pts.extend(
            (0..self.random_points).map(|_| BipolarValue::new_unchecked(rng.gen(), rng.gen())),
        );
        pts
    }
}

/// Runs the audit with [`AuditConfig::default`].
pub fn axiom_audit(target: AuditTarget) -> AuditReport {
    axiom_audit_with(target, &AuditConfig::default())
}

pub fn axiom_audit_with(target: AuditTarget, config: &AuditConfig) -> AuditReport {
    let points = config.points();
    let results = target
        .axioms()
        .into_iter()
        .map(|axiom| check_axiom(target, axiom, &points, config.probe_step))
        .collect();
    AuditReport {
        target: target.to_string(),
        points: points.len(),
        results,
    }
}

/// Compares the audit with the published pass/fail pattern for the measure.
pub fn matches_paper(target: AuditTarget, report: &AuditReport) -> bool {
    let failures = report.failures();
    match target.claimed_failures() {
        ClaimedFailures::AtLeastOne => !failures.is_empty(),
        ClaimedFailures::Exactly(expected) => {
            failures.len() == expected.len() && expected.iter().all(|a| failures.contains(a))
        }
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    skipped: usize,
    witness: Option<Witness>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.checks += other.checks;
        self.skipped += other.skipped;
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        self
    }

    fn skip(&mut self) {
        self.skipped += 1;
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.checks += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self, axiom: Axiom) -> AxiomResult {
        let status = if self.witness.is_some() {
            Status::Fail
        } else if self.checks == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
        AxiomResult {
            axiom,
            status,
            checks: self.checks,
            skipped: self.skipped,
            witness: self.witness,
        }
    }
}

fn pair(x: &BipolarValue) -> (f64, f64) {
    (x.mu(), x.nu())
}

fn check_axiom(
    target: AuditTarget,
    axiom: Axiom,
    points: &[BipolarValue],
    step: f64,
) -> AxiomResult {
    let eval = |x: &BipolarValue| target.eval(x);
    let tally = match axiom {
        Axiom::C1 => landmarks(
            eval,
            &[
                (BipolarValue::TRUE, 1.0),
                (BipolarValue::FALSE, 0.0),
                (BipolarValue::AMBIGUOUS, 0.5),
            ],
        ),
        Axiom::E1 => landmarks(
            eval,
            &[(BipolarValue::TRUE, 0.0), (BipolarValue::FALSE, 0.0)],
        ),
        Axiom::E2 => landmarks(eval, &[(BipolarValue::AMBIGUOUS, 1.0)]),
        Axiom::E5 => unknown_vs_ambiguous(eval),
        // per point, in order, so the reported witness is deterministic
        _ => points
            .par_iter()
            .map(|x| point_check(axiom, eval, x, step))
            .collect::<Vec<_>>()
            .into_iter()
            .fold(Tally::default(), Tally::merge),
    };
    tally.finish(axiom)
}

fn landmarks(
    eval: impl Fn(&BipolarValue) -> Option<f64>,
    expected: &[(BipolarValue, f64)],
) -> Tally {
    let mut tally = Tally::default();
    for (x, want) in expected {
        match eval(x) {
            Some(got) => tally.record((got - want).abs() <= EPS, || Witness {
                points: vec![pair(x)],
                values: vec![got, *want],
                detail: "landmark value differs".into(),
            }),
            None => tally.skip(),
        }
    }
    tally
}

fn unknown_vs_ambiguous(eval: impl Fn(&BipolarValue) -> Option<f64>) -> Tally {
    let mut tally = Tally::default();
    let (u, c, i) = (
        BipolarValue::UNKNOWN,
        BipolarValue::CONTRADICTORY,
        BipolarValue::AMBIGUOUS,
    );
    match (eval(&u), eval(&c), eval(&i)) {
        (Some(eu), Some(ec), Some(ei)) => {
            tally.record((eu - ec).abs() <= EPS && eu >= ei - EPS, || Witness {
                points: vec![pair(&u), pair(&c), pair(&i)],
                values: vec![eu, ec, ei],
                detail: "e(U) = e(C) >= e(I) violated".into(),
            })
        }
        _ => tally.skip(),
    }
    tally
}

/// Which penta index a monotonicity probe raises.
#[derive(Clone, Copy)]
enum Index {
    T,
    F,
    U,
    C,
}

/// Raises one index by `step` at the expense of ambiguity, on the slice where
/// the index's exclusive partner is zero. `None` when the slice or the room is missing.
fn raise(x: &BipolarValue, index: Index, step: f64) -> Option<BipolarValue> {
    let p = x.to_penta();
    if p.i < step - EPS {
        return None;
    }
    let (partner, mut q) = match index {
        Index::T => (p.f, p),
        Index::F => (p.t, p),
        Index::U => (p.c, p),
        Index::C => (p.u, p),
    };
    if partner > EPS {
        return None;
    }
    match index {
        Index::T => q.t += step,
        Index::F => q.f += step,
        Index::U => q.u += step,
        Index::C => q.c += step,
    }
    q.i = (p.i - step).max(0.0);
    PentaValue::new(q.t, q.f, q.u, q.c, q.i)
        .ok()
        .map(|q| q.to_bipolar())
}

fn point_check(
    axiom: Axiom,
    eval: impl Fn(&BipolarValue) -> Option<f64>,
    x: &BipolarValue,
    step: f64,
) -> Tally {
    let mut tally = Tally::default();
    match axiom {
        Axiom::C2 | Axiom::E3 => {
            // +1: the measure must not decrease; -1: must not increase
            let directions = if axiom == Axiom::C2 {
                [
                    (Index::T, 1.0),
                    (Index::F, -1.0),
                    (Index::U, -1.0),
                    (Index::C, -1.0),
                ]
            } else {
                [
                    (Index::T, -1.0),
                    (Index::F, -1.0),
                    (Index::U, 1.0),
                    (Index::C, 1.0),
                ]
            };
            for (index, sign) in directions {
                let Some(y) = raise(x, index, step) else {
                    continue;
                };
                match (eval(x), eval(&y)) {
                    (Some(before), Some(after)) => {
                        tally.record(sign * (after - before) >= -EPS, || Witness {
                            points: vec![pair(x), pair(&y)],
                            values: vec![before, after],
                            detail: format!("monotonicity in {} broken", index_name(index)),
                        })
                    }
                    _ => tally.skip(),
                }
            }
        }
        Axiom::C3 => {
            for (a, b, what) in [
                (*x, x.dual(), "n(x) != n(x^d)"),
                (x.complement(), x.negation(), "n(x^c) != n(x^n)"),
            ] {
                match (eval(&a), eval(&b)) {
                    (Some(va), Some(vb)) => tally.record((va - vb).abs() <= EPS, || Witness {
                        points: vec![pair(&a), pair(&b)],
                        values: vec![va, vb],
                        detail: what.into(),
                    }),
                    _ => tally.skip(),
                }
            }
        }
        Axiom::C4 => {
            let xc = x.complement();
            match (eval(x), eval(&xc)) {
                (Some(a), Some(b)) => tally.record(a + b <= 1.0 + EPS, || Witness {
                    points: vec![pair(x), pair(&xc)],
                    values: vec![a, b],
                    detail: "n(x) + n(x^c) exceeds 1".into(),
                }),
                _ => tally.skip(),
            }
        }
        Axiom::C5 => {
            let larger = [
                (x.mu() + step <= 1.0).then(|| BipolarValue::new_unchecked(x.mu() + step, x.nu())),
                (x.nu() - step >= 0.0).then(|| BipolarValue::new_unchecked(x.mu(), x.nu() - step)),
            ];
            for y in larger.into_iter().flatten() {
                match (eval(x), eval(&y)) {
                    (Some(small), Some(big)) => tally.record(big >= small - EPS, || Witness {
                        points: vec![pair(&y), pair(x)],
                        values: vec![big, small],
                        detail: "superset has smaller cardinality".into(),
                    }),
                    _ => tally.skip(),
                }
            }
        }
        Axiom::E4 => {
            let images = [*x, x.complement(), x.dual(), x.negation()];
            let values: Vec<Option<f64>> = images.iter().map(&eval).collect();
            if values.iter().any(Option::is_none) {
                tally.skip();
            } else {
                let vs: Vec<f64> = values.into_iter().flatten().collect();
                let ok = vs.iter().all(|v| (v - vs[0]).abs() <= EPS);
                tally.record(ok, || Witness {
                    points: images.iter().map(pair).collect(),
                    values: vs.clone(),
                    detail: "entropy not invariant under complement/dual/negation".into(),
                });
            }
        }
        Axiom::C1 | Axiom::E1 | Axiom::E2 | Axiom::E5 => {
            unreachable!("landmark axioms are checked once")
        }
    }
    tally
}

fn index_name(index: Index) -> &'static str {
    match index {
        Index::T => "t",
        Index::F => "f",
        Index::U => "u",
        Index::C => "c",
    }
}
