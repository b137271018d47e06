//! Set operators on bipolar values and the finite set container.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::BipolarValue;

/// A t-norm together with its dual t-conorm under `1 - x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormPair {
    /// `(min, max)`, the only idempotent pair.
    #[default]
    MinMax,
    /// `(max(a + b - 1, 0), min(a + b, 1))`.
    Lukasiewicz,
    /// `(a * b, a + b - a * b)`.
    Product,
}

impl NormPair {
    pub const ALL: [NormPair; 3] = [NormPair::MinMax, NormPair::Lukasiewicz, NormPair::Product];

    pub fn tnorm(self, a: f64, b: f64) -> f64 {
        match self {
            NormPair::MinMax => a.min(b),
            NormPair::Lukasiewicz => (a + b - 1.0).max(0.0),
            NormPair::Product => a * b,
        }
    }

    pub fn tconorm(self, a: f64, b: f64) -> f64 {
        match self {
            NormPair::MinMax => a.max(b),
            NormPair::Lukasiewicz => (a + b).min(1.0),
            NormPair::Product => a + b - a * b,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NormPair::MinMax => "minmax",
            NormPair::Lukasiewicz => "lukasiewicz",
            NormPair::Product => "product",
        }
    }
}

impl fmt::Display for NormPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NormPair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "minmax" => Ok(NormPair::MinMax),
            "lukasiewicz" => Ok(NormPair::Lukasiewicz),
            "product" => Ok(NormPair::Product),
            other => Err(format!("unknown norm pair `{other}`")),
        }
    }
}

// Results of the norms stay in [0, 1] up to rounding in the product pair.
fn unit(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

impl BipolarValue {
    /// Membership through the t-conorm, non-membership through the t-norm.
    pub fn union(&self, other: &Self, norms: NormPair) -> Self {
        Self::new_unchecked(
            unit(norms.tconorm(self.mu(), other.mu())),
            unit(norms.tnorm(self.nu(), other.nu())),
        )
    }

    /// Membership through the t-norm, non-membership through the t-conorm.
    pub fn intersection(&self, other: &Self, norms: NormPair) -> Self {
        Self::new_unchecked(
            unit(norms.tnorm(self.mu(), other.mu())),
            unit(norms.tconorm(self.nu(), other.nu())),
        )
    }

    /// `(nu, mu)`
    pub fn complement(&self) -> Self {
        Self::new_unchecked(self.nu(), self.mu())
    }

    /// `(1 - nu, 1 - mu)`
    pub fn dual(&self) -> Self {
        Self::new_unchecked(1.0 - self.nu(), 1.0 - self.mu())
    }

    /// `(1 - mu, 1 - nu)`
    pub fn negation(&self) -> Self {
        Self::new_unchecked(1.0 - self.mu(), 1.0 - self.nu())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetOp {
    Union,
    Intersection,
    Complement,
    Dual,
    Negation,
}

impl SetOp {
    pub fn is_binary(self) -> bool {
        matches!(self, SetOp::Union | SetOp::Intersection)
    }

    pub fn apply(
        self,
        a: &BipolarValue,
        b: Option<&BipolarValue>,
        norms: NormPair,
    ) -> Result<BipolarValue> {
        Ok(match self {
            SetOp::Union => a.union(b.ok_or(Error::MissingOperand(self))?, norms),
            SetOp::Intersection => a.intersection(b.ok_or(Error::MissingOperand(self))?, norms),
            SetOp::Complement => a.complement(),
            SetOp::Dual => a.dual(),
            SetOp::Negation => a.negation(),
        })
    }
}

/// A finite universe of named elements, each carrying a [`BipolarValue`].
///
/// Iteration follows insertion order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BipolarFuzzySet {
    values: IndexMap<String, BipolarValue>,
}

impl BipolarFuzzySet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I, S>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, BipolarValue)>,
        S: Into<String>,
    {
        let mut set = Self::new();
        for (id, value) in pairs {
            set.insert(id, value)?;
        }
        Ok(set)
    }

    /// Fails on a duplicate id.
    pub fn insert(&mut self, id: impl Into<String>, value: BipolarValue) -> Result<()> {
        let id = id.into();
        if self.values.contains_key(&id) {
            return Err(Error::DuplicateElement(id));
        }
        self.values.insert(id, value);
        Ok(())
    }

    pub fn get(&self, id: &str) -> Option<&BipolarValue> {
        self.values.get(id)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BipolarValue)> {
        self.values.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn values(&self) -> impl Iterator<Item = &BipolarValue> {
        self.values.values()
    }

    /// Applies `f` to every value, keeping ids and order.
    pub fn map(&self, mut f: impl FnMut(&BipolarValue) -> BipolarValue) -> Self {
        Self {
            values: self.values.iter().map(|(k, v)| (k.clone(), f(v))).collect(),
        }
    }

    /// Both sets must hold exactly the same ids; order may differ.
    pub fn check_same_universe(&self, other: &Self) -> Result<()> {
        if self.len() == other.len() && self.ids().all(|id| other.values.contains_key(id)) {
            return Ok(());
        }
        let left: BTreeSet<&str> = self.ids().collect();
        let right: BTreeSet<&str> = other.ids().collect();
        Err(Error::UniverseMismatch {
            only_left: left.difference(&right).map(|s| s.to_string()).collect(),
            only_right: right.difference(&left).map(|s| s.to_string()).collect(),
        })
    }

    /// Elementwise pairs `(id, a, b)` in the order of `self`.
    pub fn zip<'a>(
        &'a self,
        other: &'a Self,
    ) -> Result<Vec<(&'a str, &'a BipolarValue, &'a BipolarValue)>> {
        self.check_same_universe(other)?;
        Ok(self
            .iter()
            .map(|(id, a)| (id, a, &other.values[id]))
            .collect())
    }

    pub fn complement(&self) -> Self {
        self.map(BipolarValue::complement)
    }

    pub fn dual(&self) -> Self {
        self.map(BipolarValue::dual)
    }

    pub fn negation(&self) -> Self {
        self.map(BipolarValue::negation)
    }

    pub fn union(&self, other: &Self, norms: NormPair) -> Result<Self> {
        set_op(SetOp::Union, self, Some(other), norms)
    }

    pub fn intersection(&self, other: &Self, norms: NormPair) -> Result<Self> {
        set_op(SetOp::Intersection, self, Some(other), norms)
    }
}

impl<S: Into<String>> FromIterator<(S, BipolarValue)> for BipolarFuzzySet {
    /// Later duplicates overwrite earlier ones; use [`BipolarFuzzySet::from_pairs`]
    /// to reject them instead.
    fn from_iter<I: IntoIterator<Item = (S, BipolarValue)>>(iter: I) -> Self {
        Self {
            values: iter.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        }
    }
}

/// Pointwise lift of the five operators. Binary kinds need `b` over the same universe;
/// unary kinds ignore it.
pub fn set_op(
    kind: SetOp,
    a: &BipolarFuzzySet,
    b: Option<&BipolarFuzzySet>,
    norms: NormPair,
) -> Result<BipolarFuzzySet> {
    if !kind.is_binary() {
        return Ok(a.map(|x| kind.apply(x, None, norms).expect("unary operator")));
    }
    let b = b.ok_or(Error::MissingOperand(kind))?;
    let values = a
        .zip(b)?
        .into_iter()
        .map(|(id, x, y)| Ok((id.to_string(), kind.apply(x, Some(y), norms)?)))
        .collect::<Result<IndexMap<_, _>>>()?;
    Ok(BipolarFuzzySet { values })
}
