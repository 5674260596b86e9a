//! The primal `(mu, nu)` representation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::DomainError;

/// Band around `mu + nu = 1` inside which a value is classified as fuzzy.
pub const CLASSIFY_TOLERANCE: f64 = 1e-9;

/// A pair of independent degrees of membership and non-membership.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BifuzzyValue {
    mu: f64,
    nu: f64,
}

impl BifuzzyValue {
    /// Builds a value, rejecting degrees outside `[0, 1]` (NaN included).
    pub fn new(mu: f64, nu: f64) -> Result<Self, DomainError> {
        check_unit("mu", mu)?;
        check_unit("nu", nu)?;
        Ok(Self { mu, nu })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    /// The complemented value `(nu, mu)`.
    pub fn swapped(&self) -> Self {
        Self {
            mu: self.nu,
            nu: self.mu,
        }
    }

    /// `|mu - nu|`
    fn spread(&self) -> f64 {
        (self.mu - self.nu).abs()
    }

    /// `|mu + nu - 1|`
    fn excess(&self) -> f64 {
        (self.mu + self.nu - 1.0).abs()
    }

    /// Net truth and definedness, `(mu - nu, mu + nu - 1)`.
    pub fn tau_delta_standard(&self) -> TauDelta {
        TauDelta {
            tau: self.mu - self.nu,
            delta: self.mu + self.nu - 1.0,
            mode: Mode::Standard,
        }
    }

    /// Net truth and definedness rescaled so that the three shares
    /// `|tau|`, `|delta|` and the remainder follow the partition
    /// `a(1-b) + (1-a)b + (1-a)(1-b) = 1 - ab` with `a = |mu - nu|`, `b = |mu + nu - 1|`.
    pub fn tau_delta_balanced(&self) -> TauDelta {
        let a = self.spread();
        let b = self.excess();
        let denom = balanced_denominator(a, b);
        TauDelta {
            tau: (1.0 - b) / denom * (self.mu - self.nu),
            delta: (1.0 - a) / denom * (self.mu + self.nu - 1.0),
            mode: Mode::Balanced,
        }
    }

    pub fn tau_delta(&self, mode: Mode) -> TauDelta {
        match mode {
            Mode::Standard => self.tau_delta_standard(),
            Mode::Balanced => self.tau_delta_balanced(),
        }
    }

    /// Generalized distance between `mu` and `nu`:
    /// `a(1-b) / (1-ab)` with `a = |mu - nu|`, `b = |mu + nu - 1|`.
    ///
    /// Equal to `|tau|` of the balanced transform.
    pub fn distance(&self) -> f64 {
        let a = self.spread();
        let b = self.excess();
        a * (1.0 - b) / balanced_denominator(a, b)
    }

    /// Classifies the value by the sign of `mu + nu - 1`.
    pub fn classify(&self) -> Classification {
        let excess = self.mu + self.nu - 1.0;
        if excess.abs() <= CLASSIFY_TOLERANCE {
            Classification {
                kind: Kind::Fuzzy,
                index: 0.0,
            }
        } else if excess < 0.0 {
            Classification {
                kind: Kind::Intuitionistic,
                index: 1.0 - self.mu - self.nu,
            }
        } else {
            Classification {
                kind: Kind::Paraconsistent,
                index: excess,
            }
        }
    }
}

impl<'de> Deserialize<'de> for BifuzzyValue {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            mu: f64,
            nu: f64,
        }
        let raw = Raw::deserialize(deserializer)?;
        BifuzzyValue::new(raw.mu, raw.nu).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<(), DomainError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(DomainError::OutOfUnitInterval { name, value })
    }
}

/// `1 - ab`. Since `a + b = max(|2mu-1|, |2nu-1|) <= 1`, `ab <= 1/4`.
fn balanced_denominator(a: f64, b: f64) -> f64 {
    let denom = 1.0 - a * b;
    assert!(
        denom >= 0.75 - 1e-15,
        "balanced denominator {denom} below 3/4 (a={a}, b={b})"
    );
    denom
}

/// Which `(tau, delta)` transform to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Standard,
    Balanced,
}

impl Mode {
    pub const ALL: [Mode; 2] = [Mode::Standard, Mode::Balanced];

    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Standard => "standard",
            Mode::Balanced => "balanced",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(Mode::Standard),
            "balanced" => Ok(Mode::Balanced),
            other => Err(format!("unknown mode `{other}` (expected standard or balanced)")),
        }
    }
}

/// Signed coordinates: net truth `tau` and definedness `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TauDelta {
    pub tau: f64,
    pub delta: f64,
    pub mode: Mode,
}

impl TauDelta {
    /// Inverts the standard transform. The balanced transform has no
    /// closed-form inverse and is rejected.
    pub fn to_bifuzzy(&self) -> Result<BifuzzyValue, DomainError> {
        if self.mode == Mode::Balanced {
            return Err(DomainError::BalancedInverse);
        }
        let mu = snap_unit((1.0 + self.tau + self.delta) / 2.0);
        let nu = snap_unit((1.0 - self.tau + self.delta) / 2.0);
        BifuzzyValue::new(mu, nu)
    }
}

/// Pulls values within rounding distance of the unit interval back into it.
pub(crate) fn snap_unit(x: f64) -> f64 {
    if (-crate::EPS..0.0).contains(&x) {
        0.0
    } else if x > 1.0 && x <= 1.0 + crate::EPS {
        1.0
    } else {
        x
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Fuzzy,
    Intuitionistic,
    Paraconsistent,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Fuzzy => "fuzzy",
            Kind::Intuitionistic => "intuitionistic",
            Kind::Paraconsistent => "paraconsistent",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Special-case classification. `index` is the hesitation margin
/// `1 - mu - nu` for intuitionistic values, the contradiction
/// `mu + nu - 1` for paraconsistent ones, and zero for fuzzy ones.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Classification {
    pub kind: Kind,
    pub index: f64,
}
