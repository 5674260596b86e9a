//! The five-valued representation `(t, c, u, f)` with derived ambiguity `i`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bifuzzy::{snap_unit, BifuzzyValue, Mode, TauDelta};
use crate::error::DomainError;
use crate::EPS;

/// Indices of truth, inconsistency, incompleteness and falsity.
///
/// The ambiguity index is not stored; [`PentaValue::i`] derives it as
/// `1 - t - c - u - f`, so the five indices always form a partition of unity.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PentaValue {
    t: f64,
    c: f64,
    u: f64,
    f: f64,
}

impl PentaValue {
    /// The ambiguous vector, all four stored components zero.
    pub const AMBIGUOUS: PentaValue = PentaValue {
        t: 0.0,
        c: 0.0,
        u: 0.0,
        f: 0.0,
    };

    /// Builds a vector, requiring non-negative components with sum at most one.
    ///
    /// Components within [`EPS`] of a bound are accepted and snapped onto it;
    /// anything further out is an error.
    pub fn new(t: f64, c: f64, u: f64, f: f64) -> Result<Self, DomainError> {
        let invalid = |reason| DomainError::InvalidPenta { t, c, u, f, reason };
        let parts = [t, c, u, f];
        if parts.iter().any(|x| !x.is_finite()) {
            return Err(invalid("non-finite component"));
        }
        if parts.iter().any(|&x| x < -EPS) {
            return Err(invalid("negative component"));
        }
        if t + c + u + f > 1.0 + EPS {
            return Err(invalid("components sum above 1"));
        }
        Ok(Self {
            t: snap_unit(t),
            c: snap_unit(c),
            u: snap_unit(u),
            f: snap_unit(f),
        })
    }

    /// Five-valued split of a bifuzzy value: `t = tau+`, `f = tau-`,
    /// `c = delta+`, `u = delta-`.
    pub fn from_bifuzzy(v: BifuzzyValue, mode: Mode) -> Self {
        Self::from_tau_delta(v.tau_delta(mode))
    }

    pub fn from_tau_delta(td: TauDelta) -> Self {
        Self {
            t: td.tau.max(0.0),
            c: td.delta.max(0.0),
            u: (-td.delta).max(0.0),
            f: (-td.tau).max(0.0),
        }
    }

    /// Inverse of the standard transform.
    ///
    /// Only vectors with `t * f = 0` and `c * u = 0` have a single preimage.
    pub fn to_bifuzzy(&self) -> Result<BifuzzyValue, DomainError> {
        if self.t.min(self.f) > EPS {
            return Err(DomainError::AmbiguousPreimage("both t and f are positive"));
        }
        if self.c.min(self.u) > EPS {
            return Err(DomainError::AmbiguousPreimage("both c and u are positive"));
        }
        self.tau_delta().to_bifuzzy()
    }

    /// Standard `(tau, delta) = (t - f, c - u)`.
    pub fn tau_delta(&self) -> TauDelta {
        TauDelta {
            tau: self.t - self.f,
            delta: self.c - self.u,
            mode: Mode::Standard,
        }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    /// Ambiguity, `1 - t - c - u - f`, floored at zero against rounding.
    pub fn i(&self) -> f64 {
        (1.0 - self.t - self.c - self.u - self.f).max(0.0)
    }

    /// Components in `(t, c, u, f)` order.
    pub fn components(&self) -> [f64; 4] {
        [self.t, self.c, self.u, self.f]
    }

    /// All five indices as `(t, f, c, u, i)`.
    pub fn five(&self) -> [f64; 5] {
        [self.t, self.f, self.c, self.u, self.i()]
    }

    /// Whether the vector still satisfies the invariants within [`EPS`].
    pub fn is_valid(&self) -> bool {
        self.components().iter().all(|&x| x.is_finite() && x >= -EPS)
            && self.t + self.c + self.u + self.f <= 1.0 + EPS
    }

    /// Maps a 0/1 vector back to its crisp label. Each component must lie
    /// within `tol` of 0 or 1.
    pub fn as_crisp(&self, tol: f64) -> Option<Crisp> {
        let bit = |x: f64| {
            if x.abs() <= tol {
                Some(false)
            } else if (x - 1.0).abs() <= tol {
                Some(true)
            } else {
                None
            }
        };
        let bits = [bit(self.t)?, bit(self.c)?, bit(self.u)?, bit(self.f)?];
        match bits {
            [true, false, false, false] => Some(Crisp::T),
            [false, true, false, false] => Some(Crisp::C),
            [false, false, true, false] => Some(Crisp::U),
            [false, false, false, true] => Some(Crisp::F),
            [false, false, false, false] => Some(Crisp::I),
            _ => None,
        }
    }

    pub(crate) const fn raw(t: f64, c: f64, u: f64, f: f64) -> Self {
        Self { t, c, u, f }
    }
}

impl fmt::Display for PentaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(t={}, c={}, u={}, f={}, i={})",
            self.t,
            self.c,
            self.u,
            self.f,
            self.i()
        )
    }
}

impl Serialize for PentaValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("PentaValue", 5)?;
        s.serialize_field("t", &self.t)?;
        s.serialize_field("c", &self.c)?;
        s.serialize_field("u", &self.u)?;
        s.serialize_field("f", &self.f)?;
        s.serialize_field("i", &self.i())?;
        s.end()
    }
}

/// The five truth values of the logic.
///
/// Declaration order is the row/column order of the truth tables:
/// `t, i, u, c, f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Crisp {
    /// True.
    T,
    /// Ambiguous.
    I,
    /// Incomplete.
    U,
    /// Inconsistent.
    C,
    /// False.
    F,
}

impl Crisp {
    pub const ALL: [Crisp; 5] = [Crisp::T, Crisp::I, Crisp::U, Crisp::C, Crisp::F];

    pub const fn vector(self) -> PentaValue {
        match self {
            Crisp::T => PentaValue::raw(1.0, 0.0, 0.0, 0.0),
            Crisp::C => PentaValue::raw(0.0, 1.0, 0.0, 0.0),
            Crisp::U => PentaValue::raw(0.0, 0.0, 1.0, 0.0),
            Crisp::F => PentaValue::raw(0.0, 0.0, 0.0, 1.0),
            Crisp::I => PentaValue::AMBIGUOUS,
        }
    }

    /// Lower-case table letter.
    pub const fn letter(self) -> char {
        match self {
            Crisp::T => 't',
            Crisp::I => 'i',
            Crisp::U => 'u',
            Crisp::C => 'c',
            Crisp::F => 'f',
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            Crisp::T => "true",
            Crisp::I => "ambiguous",
            Crisp::U => "incomplete",
            Crisp::C => "inconsistent",
            Crisp::F => "false",
        }
    }

    pub fn from_letter(c: char) -> Option<Crisp> {
        Crisp::ALL
            .into_iter()
            .find(|k| k.letter() == c.to_ascii_lowercase())
    }
}

impl fmt::Display for Crisp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Crisp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Crisp::from_letter(c),
            _ => None,
        }
        .ok_or_else(|| format!("unknown truth value `{s}`"))
    }
}

/// A labeled crisp constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrispConstant {
    pub label: Crisp,
    pub vector: PentaValue,
}

/// The five crisp constants `T, I, U, C, F`.
pub fn crisp_constants() -> [CrispConstant; 5] {
    Crisp::ALL.map(|label| CrispConstant {
        label,
        vector: label.vector(),
    })
}
