//! Distances and similarities.
//!
//! The building block is a metric on a bounded interval `[a, b]` that
//! scales the plain gap `|x - y|` by how far the pair sits from the
//! midpoint:
//!
//! ```text
//!                      |x - y|
//! d(x, y) = ---------------------------------------
//!           (b - a)/2 + max(|x - m|, |y - m|),  m = (a + b)/2
//! ```
//!
//! Pairs near the middle of the interval are further apart than pairs of
//! the same gap near an end. On `[-1, 1]` it becomes
//! `|x - y| / (1 + max(|x|, |y|))`, which is applied separately to the
//! `tau` and `omega` coordinates of two bipolar values and then combined
//! in three ways ([`DistanceKind`]).

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::BipolarFuzzySet;
use crate::error::{Error, Result};
use crate::kernel::{BipolarValue, TauOmega};

/// A closed interval `[a, b]` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    a: f64,
    b: f64,
}

impl Interval {
    /// `[0, 1]`, the range of a membership degree.
    pub const UNIT: Interval = Interval { a: 0.0, b: 1.0 };
    /// `[-1, 1]`, the range of `tau` and `omega`.
    pub const SIGNED: Interval = Interval { a: -1.0, b: 1.0 };

    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || a >= b {
            return Err(Error::DegenerateInterval { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn lower(&self) -> f64 {
        self.a
    }

    pub fn upper(&self) -> f64 {
        self.b
    }

    fn check(&self, value: f64) -> Result<()> {
        if (self.a..=self.b).contains(&value) {
            Ok(())
        } else {
            Err(Error::OutsideInterval {
                value,
                a: self.a,
                b: self.b,
            })
        }
    }

    /// The midpoint-weighted distance, in `[0, 1]`.
    ///
    /// On `[0, 1]` the pair `(0, 0.2)` is closer than `(0.4, 0.6)`, although
    /// both have the same plain gap:
    ///
    /// ```
    /// use bipolar_fuzzy::metrics::Interval;
    ///
    /// let near_edge = Interval::UNIT.distance(0.0, 0.2).unwrap();
    /// let mid = Interval::UNIT.distance(0.4, 0.6).unwrap();
    /// assert!((near_edge - 0.2).abs() < 1e-12);
    /// assert!((mid - 1.0 / 3.0).abs() < 1e-12);
    /// assert!(near_edge < mid);
    ///
    /// // the plain gap cannot tell them apart
    /// let plain = |x: f64, y: f64| (x - y).abs();
    /// assert!((plain(0.0, 0.2) - plain(0.4, 0.6)).abs() < 1e-12);
    /// ```
    pub fn distance(&self, x: f64, y: f64) -> Result<f64> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.distance_unchecked(x, y))
    }

    fn distance_unchecked(&self, x: f64, y: f64) -> f64 {
        let gap = (x - y).abs();
        if gap == 0.0 {
            return 0.0;
        }
        let mid = (self.a + self.b) / 2.0;
        gap / ((self.b - self.a) / 2.0 + (x - mid).abs().max((y - mid).abs()))
    }
}

/// `|x - y| / (1 + max(|x|, |y|))` on `[-1, 1]`.
#[inline]
fn signed_distance(x: f64, y: f64) -> f64 {
    let gap = (x - y).abs();
    if gap == 0.0 {
        0.0
    } else {
        gap / (1.0 + x.abs().max(y.abs()))
    }
}

/// Partial distance on the truth coordinate.
pub fn tau_distance(v1: &TauOmega, v2: &TauOmega) -> f64 {
    signed_distance(v1.tau, v2.tau)
}

/// Partial distance on the neutrality coordinate.
pub fn omega_distance(v1: &TauOmega, v2: &TauOmega) -> f64 {
    signed_distance(v1.omega, v2.omega)
}

/// Probabilistic sum `a + b - ab`.
#[inline]
pub fn probabilistic_sum(a: f64, b: f64) -> f64 {
    a + b - a * b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DistanceKind {
    /// `(|dtau| + |domega|) / (1 + max|tau| + max|omega|)`
    PseudoHamming,
    /// `sqrt(d_tau^2 + d_omega^2)`
    PseudoEuclid,
    /// `d_tau + d_omega - d_tau * d_omega`
    PseudoProb,
}

impl DistanceKind {
    pub const ALL: [DistanceKind; 3] = [
        DistanceKind::PseudoHamming,
        DistanceKind::PseudoEuclid,
        DistanceKind::PseudoProb,
    ];

    pub fn code(self) -> &'static str {
        match self {
            DistanceKind::PseudoHamming => "ph",
            DistanceKind::PseudoEuclid => "pe",
            DistanceKind::PseudoProb => "pp",
        }
    }
}

impl fmt::Display for DistanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for DistanceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ph" => Ok(DistanceKind::PseudoHamming),
            "pe" => Ok(DistanceKind::PseudoEuclid),
            "pp" => Ok(DistanceKind::PseudoProb),
            other => Err(format!(
                "unknown distance kind `{other}` (expected ph, pe or pp)"
            )),
        }
    }
}

/// Distance between two bipolar values, in `[0, 1]`.
pub fn bipolar_distance(kind: DistanceKind, x1: &BipolarValue, x2: &BipolarValue) -> f64 {
    let (v1, v2) = (x1.to_tau_omega(), x2.to_tau_omega());
    match kind {
        DistanceKind::PseudoHamming => {
            let num = (v1.tau - v2.tau).abs() + (v1.omega - v2.omega).abs();
            if num == 0.0 {
                0.0
            } else {
                num / (1.0 + v1.tau.abs().max(v2.tau.abs()) + v1.omega.abs().max(v2.omega.abs()))
            }
        }
        DistanceKind::PseudoEuclid => tau_distance(&v1, &v2).hypot(omega_distance(&v1, &v2)),
        DistanceKind::PseudoProb => {
            probabilistic_sum(tau_distance(&v1, &v2), omega_distance(&v1, &v2))
        }
    }
}

/// `1 - bipolar_distance`.
pub fn bipolar_similarity(kind: DistanceKind, x1: &BipolarValue, x2: &BipolarValue) -> f64 {
    1.0 - bipolar_distance(kind, x1, x2)
}

/// Distance between two membership degrees of fuzzy values, which all three
/// kinds share: `2|mu1 - mu2| / (1 + max(|2 mu1 - 1|, |2 mu2 - 1|))`.
///
/// It is the interval distance on `[0, 1]`:
///
/// ```
/// use bipolar_fuzzy::metrics::{fuzzy_distance, Interval};
///
/// assert!((fuzzy_distance(0.0, 0.2) - 0.2).abs() < 1e-12);
/// assert!((fuzzy_distance(0.4, 0.6) - 1.0 / 3.0).abs() < 1e-12);
/// let via_interval = Interval::UNIT.distance(0.4, 0.6).unwrap();
/// assert!((fuzzy_distance(0.4, 0.6) - via_interval).abs() < 1e-12);
/// ```
pub fn fuzzy_distance(mu1: f64, mu2: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&mu1) && (0.0..=1.0).contains(&mu2));
    let gap = 2.0 * (mu1 - mu2).abs();
    if gap == 0.0 {
        return 0.0;
    }
    gap / (1.0 + (2.0 * mu1 - 1.0).abs().max((2.0 * mu2 - 1.0).abs()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Aggregation {
    #[default]
    Mean,
    Max,
}

impl FromStr for Aggregation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mean" => Ok(Aggregation::Mean),
            "max" => Ok(Aggregation::Max),
            other => Err(format!(
                "unknown aggregation `{other}` (expected mean or max)"
            )),
        }
    }
}

impl fmt::Display for Aggregation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Aggregation::Mean => "mean",
            Aggregation::Max => "max",
        })
    }
}

/// Elementwise distances between two sets over the same universe, aggregated.
pub fn set_distance(
    kind: DistanceKind,
    a: &BipolarFuzzySet,
    b: &BipolarFuzzySet,
    aggregation: Aggregation,
) -> Result<f64> {
    let pairs = a.zip(b)?;
    if pairs.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    let distances = pairs.iter().map(|(_, x, y)| bipolar_distance(kind, x, y));
    Ok(match aggregation {
        Aggregation::Mean => distances.sum::<f64>() / pairs.len() as f64,
        Aggregation::Max => distances.fold(0.0, f64::max),
    })
}

/// Strictly lower-triangular matrix: row `i` holds entries for columns `0..i`.
pub fn lower_triangle(
    set: &BipolarFuzzySet,
    f: impl Fn(&BipolarValue, &BipolarValue) -> f64 + Sync,
) -> Vec<Vec<f64>> {
    let values: Vec<&BipolarValue> = set.values().collect();
    (0..values.len())
        .into_par_iter()
        .map(|i| (0..i).map(|j| f(values[i], values[j])).collect())
        .collect()
}

pub fn similarity_matrix(kind: DistanceKind, set: &BipolarFuzzySet) -> Vec<Vec<f64>> {
    lower_triangle(set, |x, y| bipolar_similarity(kind, x, y))
}

pub fn distance_matrix(kind: DistanceKind, set: &BipolarFuzzySet) -> Vec<Vec<f64>> {
    lower_triangle(set, |x, y| bipolar_distance(kind, x, y))
}
