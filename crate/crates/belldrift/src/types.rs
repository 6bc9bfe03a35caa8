//! Shared outcome and context conventions.
//!
//! Joint two-qubit outcomes are indexed in the fixed order (00, 01, 10, 11)
//! with party A as the left bit. ±1-valued measurement results map to bits
//! via +1 → 0, −1 → 1. All modules share these conventions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shot counts over the four joint outcomes in the fixed (00, 01, 10, 11) order.
pub type Counts4 = [u64; 4];

/// Tolerance below which a probability entry may be negative (clamped to 0).
pub const PROB_NEG_TOL: f64 = 1e-12;

/// Tolerance for a probability vector summing to one.
pub const PROB_SUM_TOL: f64 = 1e-9;

/// One of the four CHSH measurement contexts (a, b), a ∈ {x, x'}, b ∈ {y, y'}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Context {
    #[serde(rename = "xy")]
    Xy,
    #[serde(rename = "xy'")]
    XyP,
    #[serde(rename = "x'y")]
    XpY,
    #[serde(rename = "x'y'")]
    XpYp,
}

/// Alice's measurement setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AliceSetting {
    X,
    Xp,
}

/// Bob's measurement setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BobSetting {
    Y,
    Yp,
}

impl Context {
    /// Canonical context order; also the sign-convention order for S
    /// (the last context enters S with a minus sign).
    pub const ALL: [Context; 4] = [Context::Xy, Context::XyP, Context::XpY, Context::XpYp];

    pub fn idx(self) -> usize {
        match self {
            Context::Xy => 0,
            Context::XyP => 1,
            Context::XpY => 2,
            Context::XpYp => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Context::Xy => "xy",
            Context::XyP => "xy'",
            Context::XpY => "x'y",
            Context::XpYp => "x'y'",
        }
    }

    pub fn from_label(label: &str) -> Result<Context> {
        match label.trim() {
            "xy" => Ok(Context::Xy),
            "xy'" => Ok(Context::XyP),
            "x'y" => Ok(Context::XpY),
            "x'y'" => Ok(Context::XpYp),
            other => Err(Error::invalid(format!(
                "unknown context label {other:?} (expected one of xy, xy', x'y, x'y')"
            ))),
        }
    }

    pub fn alice(self) -> AliceSetting {
        match self {
            Context::Xy | Context::XyP => AliceSetting::X,
            Context::XpY | Context::XpYp => AliceSetting::Xp,
        }
    }

    pub fn bob(self) -> BobSetting {
        match self {
            Context::Xy | Context::XpY => BobSetting::Y,
            Context::XyP | Context::XpYp => BobSetting::Yp,
        }
    }
}

impl std::fmt::Display for Context {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl AliceSetting {
    pub fn idx(self) -> usize {
        match self {
            AliceSetting::X => 0,
            AliceSetting::Xp => 1,
        }
    }
}

impl BobSetting {
    pub fn idx(self) -> usize {
        match self {
            BobSetting::Y => 0,
            BobSetting::Yp => 1,
        }
    }
}

/// A probability distribution over the four joint outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OutcomeDistribution([f64; 4]);

impl OutcomeDistribution {
    /// Validates simplex membership: entries ≥ −1e−12 (tiny negatives are
    /// clamped to zero) and total within 1e−9 of one.
    pub fn new(probs: [f64; 4]) -> Result<Self> {
        let mut out = [0.0; 4];
        for (i, &p) in probs.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::invalid(format!("probability {i} is not finite: {p}")));
            }
            if p < -PROB_NEG_TOL {
                return Err(Error::invalid(format!(
                    "probability {i} is negative beyond tolerance: {p:.3e}"
                )));
            }
            out[i] = p.max(0.0);
        }
        let total: f64 = out.iter().sum();
        if (total - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::invalid(format!(
                "probabilities sum to {total} (expected 1 within {PROB_SUM_TOL:.0e})"
            )));
        }
        Ok(OutcomeDistribution(out))
    }

    pub(crate) fn new_unchecked(probs: [f64; 4]) -> Self {
        OutcomeDistribution(probs)
    }

    pub fn uniform() -> Self {
        OutcomeDistribution([0.25; 4])
    }

    /// Empirical frequencies of a count vector.
    pub fn from_counts(counts: &Counts4) -> Result<Self> {
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(Error::invalid("cannot normalize counts with zero total"));
        }
        let t = total as f64;
        Ok(OutcomeDistribution([
            counts[0] as f64 / t,
            counts[1] as f64 / t,
            counts[2] as f64 / t,
            counts[3] as f64 / t,
        ]))
    }

    pub fn probs(&self) -> [f64; 4] {
        self.0
    }

    /// Expectation of the ±1 outcome product: p00 − p01 − p10 + p11.
    pub fn expectation(&self) -> f64 {
        self.0[0] - self.0[1] - self.0[2] + self.0[3]
    }
}

impl std::ops::Index<usize> for OutcomeDistribution {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Maps a pair of ±1 outcomes to the joint outcome index (A is the left bit).
pub fn outcome_index(a: i8, b: i8) -> usize {
    let a_bit = usize::from(a < 0);
    let b_bit = usize::from(b < 0);
    (a_bit << 1) | b_bit
}
