//! Modified S-curve (logistic) membership functions.
//!
//! A fuzzy quantity on the interval `[lower, upper]` has membership
//!
//! ```text
//!            1                                   v <= lower
//!   mu(v) =  B / (1 + C * exp(d * t)),  t = (v - lower) / (upper - lower)
//!            0                                   v >= upper
//! ```
//!
//! The curve is strictly decreasing inside the interval, so every degree in
//! the open range `(B / (1 + C e^d), B / (1 + C))` maps back to exactly one
//! crisp value. That inverse is what defuzzification uses.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The `B`, `C`, `d` parameters shared by a family of S-curves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Logistic {
    /// `B`: the numerator, an upper bound on interior membership.
    pub scale: f64,
    /// `C`: controls how close the left endpoint sits to `B`.
    pub shape: f64,
    /// `d`: multiplier of the normalized position inside the exponent.
    pub steepness: f64,
}

impl Default for Logistic {
    fn default() -> Self {
        Self {
            scale: 1.0,
            shape: 0.001,
            steepness: 13.8,
        }
    }
}

impl Logistic {
    pub fn new(scale: f64, shape: f64, steepness: f64) -> Result<Self> {
        let params = Self {
            scale,
            shape,
            steepness,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("B", self.scale),
            ("C", self.shape),
            ("d", self.steepness),
        ] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::Parameter(format!(
                    "{name} must be finite and > 0, got {value}"
                )));
            }
        }
        Ok(())
    }

    /// Membership at normalized position `t` in `[0, 1]`.
    pub fn at_position(&self, t: f64) -> f64 {
        self.scale / (1.0 + self.shape * (self.steepness * t).exp())
    }

    /// Normalized position whose membership is `m`. No range checks.
    pub fn position_of(&self, m: f64) -> f64 {
        ((self.scale - m) / (self.shape * m)).ln() / self.steepness
    }

    /// `(B / (1 + C e^d), B / (1 + C))`.
    pub fn valid_range(&self) -> (f64, f64) {
        (self.at_position(1.0), self.at_position(0.0))
    }
}

/// How [`SCurve::inverse`] treats degrees outside the invertible range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InversePolicy {
    /// Reject with [`Error::DegreeRange`].
    Strict,
    /// Snap to the nearer interval endpoint and report it.
    Clamp,
}

/// Which end of the interval a clamped inverse landed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Endpoint {
    Lower,
    Upper,
}

/// Result of inverting a membership degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Inverted {
    pub value: f64,
    /// `Some` when the degree was outside the open range and clamping applied.
    pub clamped: Option<Endpoint>,
}

/// A decreasing logistic membership function over `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SCurve {
    params: Logistic,
    lower: f64,
    upper: f64,
}

impl SCurve {
    pub fn new(params: Logistic, lower: f64, upper: f64) -> Result<Self> {
        params.validate()?;
        if !lower.is_finite() || !upper.is_finite() {
            return Err(Error::Parameter(format!(
                "interval endpoints must be finite, got ({lower}, {upper})"
            )));
        }
        if lower >= upper {
            return Err(Error::Parameter(format!(
                "fuzzy interval lower bound must be < upper bound, got ({lower}, {upper})"
            )));
        }
        Ok(Self {
            params,
            lower,
            upper,
        })
    }

    /// Curve with the default `B = 1, C = 0.001, d = 13.8`.
    pub fn with_defaults(lower: f64, upper: f64) -> Result<Self> {
        Self::new(Logistic::default(), lower, upper)
    }

    pub fn params(&self) -> Logistic {
        self.params
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Piecewise membership: 1 at or below `lower`, 0 at or above `upper`,
    /// the logistic formula strictly between.
    ///
    /// The jump from 1 to `B / (1 + C)` at the left endpoint is part of the
    /// definition; use [`SCurve::interior`] for the continuous formula.
    pub fn mu(&self, v: f64) -> f64 {
        if v <= self.lower {
            1.0
        } else if v >= self.upper {
            0.0
        } else {
            self.interior(v)
        }
    }

    /// The logistic formula alone, evaluated at any `v`.
    pub fn interior(&self, v: f64) -> f64 {
        self.params.at_position((v - self.lower) / self.width())
    }

    /// Degrees strictly between these two values are invertible.
    pub fn valid_range(&self) -> (f64, f64) {
        self.params.valid_range()
    }

    /// Crisp value whose membership is `m`.
    pub fn inverse(&self, m: f64, policy: InversePolicy) -> Result<Inverted> {
        let (lo, hi) = self.valid_range();
        let out_of_range = || Error::DegreeRange { degree: m, lo, hi };
        if m.is_nan() {
            return Err(out_of_range());
        }
        if m > lo && m < hi {
            let value = self.lower + self.width() * self.params.position_of(m);
            return Ok(Inverted {
                value: value.clamp(self.lower, self.upper),
                clamped: None,
            });
        }
        match policy {
            InversePolicy::Strict => Err(out_of_range()),
            InversePolicy::Clamp if m >= hi => Ok(Inverted {
                value: self.lower,
                clamped: Some(Endpoint::Lower),
            }),
            InversePolicy::Clamp => Ok(Inverted {
                value: self.upper,
                clamped: Some(Endpoint::Upper),
            }),
        }
    }

    /// Strict inverse returning just the value.
    pub fn value_at(&self, m: f64) -> Result<f64> {
        self.inverse(m, InversePolicy::Strict).map(|inv| inv.value)
    }
}
