//! Value types and the penta-valued transforms.
//!
//! A [`BipolarValue`] carries two independent degrees, membership `mu` and
//! non-membership `nu`. It decomposes into five indexes (truth, falsity,
//! unknownness, contradiction, ambiguity) that form a partition of unity:
//!
//! ```text
//! t = (mu - nu)+        f = (nu - mu)+
//! c = (mu + nu - 1)+    u = (1 - mu - nu)+
//! i = 1 - |mu - nu| - |mu + nu - 1|
//! ```
//!
//! and back via `mu = t + c + i/2`, `nu = f + c + i/2`. The signed pair
//! `tau = t - f`, `omega = c - u` is the polar form used by the distances.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance for every invariant check in the crate.
pub const EPS: f64 = 1e-9;

#[inline]
pub(crate) fn pos(a: f64) -> f64 {
    a.max(0.0)
}

/// Pulls values that drifted past 0 or 1 by floating point noise back into range.
fn snap_unit(x: f64) -> f64 {
    x.clamp(0.0, 1.0)
}

/// A pair of independent degrees in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "(f64, f64)", into = "(f64, f64)")]
pub struct BipolarValue {
    mu: f64,
    nu: f64,
}

impl BipolarValue {
    /// True, `(1, 0)`.
    pub const TRUE: Self = Self { mu: 1.0, nu: 0.0 };
    /// False, `(0, 1)`.
    pub const FALSE: Self = Self { mu: 0.0, nu: 1.0 };
    /// Unknown, `(0, 0)`.
    pub const UNKNOWN: Self = Self { mu: 0.0, nu: 0.0 };
    /// Contradictory, `(1, 1)`.
    pub const CONTRADICTORY: Self = Self { mu: 1.0, nu: 1.0 };
    /// Ambiguous, `(0.5, 0.5)`.
    pub const AMBIGUOUS: Self = Self { mu: 0.5, nu: 0.5 };

    /// Rejects anything outside `[0, 1]`, including NaN. No clamping.
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        check_unit("mu", mu)?;
        check_unit("nu", nu)?;
        Ok(Self { mu, nu })
    }

    /// A fuzzy value, `nu = 1 - mu`.
    pub fn fuzzy(mu: f64) -> Result<Self> {
        check_unit("mu", mu)?;
        Ok(Self { mu, nu: 1.0 - mu })
    }

    pub(crate) fn new_unchecked(mu: f64, nu: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&mu) && (0.0..=1.0).contains(&nu));
        Self { mu, nu }
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }

    #[inline]
    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// Index of uncertainty `1 - mu - nu`, zero when the value is not intuitionistic.
    pub fn pi(&self) -> f64 {
        pos(1.0 - self.mu - self.nu)
    }

    /// Index of contradiction `mu + nu - 1`, zero when the value is not paraconsistent.
    pub fn kappa(&self) -> f64 {
        pos(self.mu + self.nu - 1.0)
    }

    pub fn to_penta(&self) -> PentaValue {
        let (mu, nu) = (self.mu, self.nu);
        PentaValue {
            t: pos(mu - nu),
            f: pos(nu - mu),
            u: pos(1.0 - mu - nu),
            c: pos(mu + nu - 1.0),
            i: 1.0 - (mu - nu).abs() - (mu + nu - 1.0).abs(),
        }
    }

    pub fn to_tau_omega(&self) -> TauOmega {
        let p = self.to_penta();
        TauOmega {
            tau: p.t - p.f,
            omega: p.c - p.u,
        }
    }

    /// Fuzzy when `|mu + nu - 1| <= EPS`, otherwise intuitionistic or
    /// paraconsistent by the sign of `mu + nu - 1`.
    pub fn classify(&self) -> ValueClass {
        let excess = self.mu + self.nu - 1.0;
        if excess.abs() <= EPS {
            ValueClass::Fuzzy
        } else if excess < 0.0 {
            ValueClass::Intuitionistic
        } else {
            ValueClass::Paraconsistent
        }
    }

    /// Decomposition through the formulas specialised for `class`.
    ///
    /// Fails when the value does not satisfy the constraint of `class`.
    /// [`ValueClass::GeneralBipolar`] accepts everything and uses the
    /// general transform.
    pub fn reduced_penta(&self, class: ValueClass) -> Result<PentaValue> {
        let (mu, nu) = (self.mu, self.nu);
        if !class.admits(self) {
            return Err(Error::ClassMismatch {
                expected: class,
                found: self.classify(),
                mu,
                nu,
            });
        }
        let p = match class {
            ValueClass::Fuzzy => PentaValue {
                t: pos(2.0 * mu - 1.0),
                f: pos(1.0 - 2.0 * mu),
                u: 0.0,
                c: 0.0,
                i: 1.0 - (2.0 * mu - 1.0).abs(),
            },
            ValueClass::Intuitionistic => PentaValue {
                t: pos(mu - nu),
                f: pos(nu - mu),
                u: pos(1.0 - mu - nu),
                c: 0.0,
                i: mu + nu - (mu - nu).abs(),
            },
            ValueClass::Paraconsistent => PentaValue {
                t: pos(mu - nu),
                f: pos(nu - mu),
                u: 0.0,
                c: pos(mu + nu - 1.0),
                i: 2.0 - (mu - nu).abs() - mu - nu,
            },
            ValueClass::GeneralBipolar => self.to_penta(),
        };
        Ok(p)
    }
}

fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange { name, value })
    }
}

impl TryFrom<(f64, f64)> for BipolarValue {
    type Error = Error;

    fn try_from((mu, nu): (f64, f64)) -> Result<Self> {
        Self::new(mu, nu)
    }
}

impl From<BipolarValue> for (f64, f64) {
    fn from(x: BipolarValue) -> Self {
        (x.mu, x.nu)
    }
}

impl fmt::Display for BipolarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mu, self.nu)
    }
}

/// Five nonnegative indexes summing to one, with `t*f = 0` and `u*c = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PentaValue {
    pub t: f64,
    pub f: f64,
    pub u: f64,
    pub c: f64,
    pub i: f64,
}

impl PentaValue {
    /// Validates the partition of unity and the two exclusivity products.
    pub fn new(t: f64, f: f64, u: f64, c: f64, i: f64) -> Result<Self> {
        let p = Self { t, f, u, c, i };
        for (name, v) in [("t", t), ("f", f), ("u", u), ("c", c), ("i", i)] {
            if !(-EPS..=1.0 + EPS).contains(&v) {
                return Err(Error::InconsistentPenta(format!(
                    "{name} = {v} is outside [0, 1]"
                )));
            }
        }
        let sum = p.sum();
        if (sum - 1.0).abs() > EPS {
            return Err(Error::InconsistentPenta(format!("indexes sum to {sum}")));
        }
        if (t * f).abs() > EPS {
            return Err(Error::InconsistentPenta(format!(
                "t*f = {} is not zero",
                t * f
            )));
        }
        if (u * c).abs() > EPS {
            return Err(Error::InconsistentPenta(format!(
                "u*c = {} is not zero",
                u * c
            )));
        }
        Ok(p)
    }

    pub fn sum(&self) -> f64 {
        self.t + self.f + self.u + self.c + self.i
    }

    /// `mu = t + c + i/2`, `nu = f + c + i/2`.
    pub fn to_bipolar(&self) -> BipolarValue {
        BipolarValue {
            mu: snap_unit(self.t + self.c + self.i / 2.0),
            nu: snap_unit(self.f + self.c + self.i / 2.0),
        }
    }

    pub fn to_tau_omega(&self) -> TauOmega {
        TauOmega {
            tau: self.t - self.f,
            omega: self.c - self.u,
        }
    }
}

/// Polar coordinates: signed truth `tau` and signed neutrality `omega`,
/// constrained by `|tau| + |omega| <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TauOmega {
    pub tau: f64,
    pub omega: f64,
}

impl TauOmega {
    pub fn new(tau: f64, omega: f64) -> Result<Self> {
        let norm = tau.abs() + omega.abs();
        if norm.is_nan() || norm > 1.0 + EPS {
            return Err(Error::TauOmegaOutOfRange(norm));
        }
        Ok(Self { tau, omega })
    }

    /// Splits each coordinate into its positive and negative parts; the
    /// remainder goes to ambiguity.
    pub fn to_penta(&self) -> PentaValue {
        PentaValue {
            t: pos(self.tau),
            f: pos(-self.tau),
            c: pos(self.omega),
            u: pos(-self.omega),
            i: pos(1.0 - self.tau.abs() - self.omega.abs()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValueClass {
    Fuzzy,
    Intuitionistic,
    Paraconsistent,
    /// No constraint between the two degrees. Never returned by
    /// [`BipolarValue::classify`].
    GeneralBipolar,
}

impl ValueClass {
    /// Whether `x` satisfies this class's constraint within [`EPS`].
    pub fn admits(self, x: &BipolarValue) -> bool {
        let excess = x.mu + x.nu - 1.0;
        match self {
            ValueClass::Fuzzy => excess.abs() <= EPS,
            ValueClass::Intuitionistic => excess <= EPS,
            ValueClass::Paraconsistent => excess >= -EPS,
            ValueClass::GeneralBipolar => true,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ValueClass::Fuzzy => "fuzzy",
            ValueClass::Intuitionistic => "intuitionistic",
            ValueClass::Paraconsistent => "paraconsistent",
            ValueClass::GeneralBipolar => "bipolar",
        }
    }
}

impl fmt::Display for ValueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
