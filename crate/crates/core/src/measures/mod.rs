//! Cardinality and entropy.
//!
//! Both families are built from the distances of [`crate::metrics`]:
//! a cardinality is a similarity to the true point, `n(x) = s(x, T)`, and
//! an entropy is twice the distance to the nearer crisp point,
//! `e(x) = 2 min(d(x, T), d(x, F))`. The closed forms below are written in
//! penta-valued indexes; tests check them against the distance route.
//!
//! Set-level values sum (cardinality) or average (entropy) the pointwise ones.
//! Entropy is not confined to `[0, 1]`: the unknown and contradictory points
//! score above the ambiguous one.

pub mod audit;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::BipolarFuzzySet;
use crate::error::{Error, Result};
use crate::kernel::{BipolarValue, ValueClass, EPS};
use crate::metrics::DistanceKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CardinalityKind {
    /// Similarity to the true point under the given distance.
    Similarity(DistanceKind),
    /// `mu`; intuitionistic values only.
    ClassicMin,
    /// `mu + pi/2`; intuitionistic values only.
    ClassicMed,
    /// `mu + pi`; intuitionistic values only.
    ClassicMax,
}

impl CardinalityKind {
    pub const ALL: [CardinalityKind; 6] = [
        CardinalityKind::Similarity(DistanceKind::PseudoEuclid),
        CardinalityKind::Similarity(DistanceKind::PseudoHamming),
        CardinalityKind::Similarity(DistanceKind::PseudoProb),
        CardinalityKind::ClassicMin,
        CardinalityKind::ClassicMed,
        CardinalityKind::ClassicMax,
    ];

    pub fn code(self) -> &'static str {
        match self {
            CardinalityKind::Similarity(k) => k.code(),
            CardinalityKind::ClassicMin => "min",
            CardinalityKind::ClassicMed => "med",
            CardinalityKind::ClassicMax => "max",
        }
    }

    /// Whether `x` lies in the domain of this measure.
    pub fn admits(self, x: &BipolarValue) -> bool {
        match self {
            CardinalityKind::Similarity(_) => true,
            _ => ValueClass::Intuitionistic.admits(x),
        }
    }
}

impl fmt::Display for CardinalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for CardinalityKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" => Ok(CardinalityKind::ClassicMin),
            "med" => Ok(CardinalityKind::ClassicMed),
            "max" => Ok(CardinalityKind::ClassicMax),
            other => other.parse().map(CardinalityKind::Similarity).map_err(|_| {
                format!("unknown cardinality kind `{other}` (expected pe, ph, pp, min, med or max)")
            }),
        }
    }
}

/// Norm that reduces the two-component entropy vector to a scalar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorNorm {
    #[default]
    Max,
    Sum,
}

impl VectorNorm {
    pub fn apply(self, (a, b): (f64, f64)) -> f64 {
        match self {
            VectorNorm::Max => a.abs().max(b.abs()),
            VectorNorm::Sum => a.abs() + b.abs(),
        }
    }
}

impl FromStr for VectorNorm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "max" => Ok(VectorNorm::Max),
            "sum" => Ok(VectorNorm::Sum),
            other => Err(format!(
                "unknown vector norm `{other}` (expected max or sum)"
            )),
        }
    }
}

impl fmt::Display for VectorNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VectorNorm::Max => "max",
            VectorNorm::Sum => "sum",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EntropyKind {
    /// Twice the distance to the nearer of T and F.
    Distance(DistanceKind),
    /// `(1 - t - f + u + c) / (1 + t + f + u + c)`
    SzmidtKacprzyk,
    /// `(1 - t - f) / (1 - u - c)`, undefined at U and C.
    SzmidtKacprzykPi,
    /// `u + c`
    BustinceBurillo,
    /// The vector `(1 - t - f, u + c)` reduced by a norm.
    GrzegorzewskiMrowka(VectorNorm),
}

impl EntropyKind {
    pub const ALL: [EntropyKind; 8] = [
        EntropyKind::Distance(DistanceKind::PseudoEuclid),
        EntropyKind::Distance(DistanceKind::PseudoHamming),
        EntropyKind::Distance(DistanceKind::PseudoProb),
        EntropyKind::SzmidtKacprzyk,
        EntropyKind::SzmidtKacprzykPi,
        EntropyKind::BustinceBurillo,
        EntropyKind::GrzegorzewskiMrowka(VectorNorm::Max),
        EntropyKind::GrzegorzewskiMrowka(VectorNorm::Sum),
    ];

    pub fn code(self) -> &'static str {
        match self {
            EntropyKind::Distance(k) => k.code(),
            EntropyKind::SzmidtKacprzyk => "sk",
            EntropyKind::SzmidtKacprzykPi => "skpi",
            EntropyKind::BustinceBurillo => "bb",
            EntropyKind::GrzegorzewskiMrowka(_) => "gm",
        }
    }

    /// Whether `x` lies in the domain of this measure.
    pub fn admits(self, x: &BipolarValue) -> bool {
        match self {
            EntropyKind::SzmidtKacprzykPi => {
                let p = x.to_penta();
                p.u + p.c < 1.0 - EPS
            }
            _ => true,
        }
    }
}

impl fmt::Display for EntropyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntropyKind::GrzegorzewskiMrowka(norm) => write!(f, "gm-{norm}"),
            other => f.write_str(other.code()),
        }
    }
}

impl FromStr for EntropyKind {
    type Err = String;

    /// `gm` selects the max norm; `gm-max` and `gm-sum` are explicit.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sk" => Ok(EntropyKind::SzmidtKacprzyk),
            "skpi" => Ok(EntropyKind::SzmidtKacprzykPi),
            "bb" => Ok(EntropyKind::BustinceBurillo),
            "gm" => Ok(EntropyKind::GrzegorzewskiMrowka(VectorNorm::default())),
            "gm-max" => Ok(EntropyKind::GrzegorzewskiMrowka(VectorNorm::Max)),
            "gm-sum" => Ok(EntropyKind::GrzegorzewskiMrowka(VectorNorm::Sum)),
            other => other.parse().map(EntropyKind::Distance).map_err(|_| {
                format!("unknown entropy kind `{other}` (expected pe, ph, pp, sk, skpi, bb or gm)")
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropyResult {
    pub scalar: f64,
    /// `(1 - t - f, u + c)`, present for the vector entropy only.
    pub vector: Option<(f64, f64)>,
}

impl EntropyResult {
    fn scalar(scalar: f64) -> Self {
        Self {
            scalar,
            vector: None,
        }
    }
}

/// Pointwise cardinality.
pub fn cardinality_point(kind: CardinalityKind, x: &BipolarValue) -> Result<f64> {
    let p = x.to_penta();
    let n = match kind {
        CardinalityKind::Similarity(DistanceKind::PseudoEuclid) => {
            let truth_leg = (1.0 - p.t + p.f) / 2.0;
            let neutral_leg = (p.u - p.c) / (1.0 + p.u + p.c);
            1.0 - truth_leg.hypot(neutral_leg)
        }
        CardinalityKind::Similarity(DistanceKind::PseudoHamming) => {
            (1.0 + p.t - p.f) / (2.0 + p.u + p.c)
        }
        CardinalityKind::Similarity(DistanceKind::PseudoProb) => {
            (1.0 + p.t - p.f) / (2.0 * (1.0 + p.u + p.c))
        }
        classic => {
            if !classic.admits(x) {
                return Err(Error::Undefined {
                    measure: "classic cardinality",
                    mu: x.mu(),
                    nu: x.nu(),
                    reason: "defined for intuitionistic values only",
                });
            }
            let pi = x.pi();
            match classic {
                CardinalityKind::ClassicMin => x.mu(),
                CardinalityKind::ClassicMed => x.mu() + pi / 2.0,
                _ => x.mu() + pi,
            }
        }
    };
    Ok(n)
}

/// Sum of pointwise cardinalities.
pub fn cardinality_set(kind: CardinalityKind, set: &BipolarFuzzySet) -> Result<f64> {
    set.values().map(|x| cardinality_point(kind, x)).sum()
}

/// `card(X) - n(A) - n(A^c)`, the mass between a set and its complement.
pub fn border_cardinality(kind: CardinalityKind, set: &BipolarFuzzySet) -> Result<f64> {
    let mut total = set.len() as f64;
    for x in set.values() {
        total -= cardinality_point(kind, x)? + cardinality_point(kind, &x.complement())?;
    }
    Ok(total)
}

/// Pointwise entropy.
pub fn entropy_point(kind: EntropyKind, x: &BipolarValue) -> Result<EntropyResult> {
    let p = x.to_penta();
    // 1 - t - f = 1 - |tau|, u + c = |omega|
    let crisp_gap = 1.0 - p.t - p.f;
    let neutral = p.u + p.c;
    let e = match kind {
        EntropyKind::Distance(DistanceKind::PseudoEuclid) => {
            crisp_gap.hypot(2.0 * (p.u - p.c) / (1.0 + neutral))
        }
        EntropyKind::Distance(DistanceKind::PseudoHamming) => {
            2.0 * (crisp_gap + neutral) / (2.0 + neutral)
        }
        EntropyKind::Distance(DistanceKind::PseudoProb) => {
            (crisp_gap + 2.0 * neutral) / (1.0 + neutral)
        }
        EntropyKind::SzmidtKacprzyk => (crisp_gap + neutral) / (1.0 + p.t + p.f + neutral),
        EntropyKind::SzmidtKacprzykPi => {
            if !kind.admits(x) {
                return Err(Error::Undefined {
                    measure: "pi-entropy",
                    mu: x.mu(),
                    nu: x.nu(),
                    reason: "u + c = 1",
                });
            }
            crisp_gap / (1.0 - neutral)
        }
        EntropyKind::BustinceBurillo => neutral,
        EntropyKind::GrzegorzewskiMrowka(norm) => {
            let vector = (crisp_gap, neutral);
            return Ok(EntropyResult {
                scalar: norm.apply(vector),
                vector: Some(vector),
            });
        }
    };
    Ok(EntropyResult::scalar(e))
}

/// Mean of pointwise entropies.
pub fn entropy_set(kind: EntropyKind, set: &BipolarFuzzySet) -> Result<f64> {
    if set.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    let total = set
        .values()
        .map(|x| entropy_point(kind, x).map(|e| e.scalar))
        .sum::<Result<f64>>()?;
    Ok(total / set.len() as f64)
}
