//! Similarity, entropy and syntropy.
//!
//! Entropy collects the three neutral indices `(c, u, i)` and syntropy the
//! two decided ones `(t, f)`, so that `entropy + syntropy = 1` for every
//! vector. Set-level figures are plain sums over elements.

use serde::Serialize;
use thiserror::Error;

use crate::bifuzzy::{BifuzzyValue, Mode};
use crate::penta::PentaValue;
use crate::setio::BifuzzySet;

/// Bhattacharyya coefficient of the two five-component distributions.
pub fn similarity(x1: &PentaValue, x2: &PentaValue) -> f64 {
    x1.five()
        .iter()
        .zip(x2.five())
        .map(|(a, b)| (a * b).max(0.0).sqrt())
        .sum()
}

/// Inconsistency, incompleteness and ambiguity shares of the entropy.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct EntropyVector {
    pub c: f64,
    pub u: f64,
    pub i: f64,
}

impl EntropyVector {
    /// `c + u + i`. Agrees with [`PentaValue::entropy_scalar`] up to rounding.
    pub fn scalar(&self) -> f64 {
        self.c + self.u + self.i
    }
}

/// Truth and falsity shares of the syntropy.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct SyntropyVector {
    pub t: f64,
    pub f: f64,
}

impl SyntropyVector {
    pub fn scalar(&self) -> f64 {
        self.t + self.f
    }
}

impl PentaValue {
    pub fn entropy(&self) -> EntropyVector {
        EntropyVector {
            c: self.c(),
            u: self.u(),
            i: self.i(),
        }
    }

    /// Entropy scalar, `1 - (t + f)`. Equal to `c + u + i` up to rounding,
    /// and exactly `1 - syntropy_scalar()`.
    pub fn entropy_scalar(&self) -> f64 {
        1.0 - self.syntropy_scalar()
    }

    pub fn syntropy(&self) -> SyntropyVector {
        SyntropyVector {
            t: self.t(),
            f: self.f(),
        }
    }

    pub fn syntropy_scalar(&self) -> f64 {
        self.t() + self.f()
    }

    /// Entropy computed as the similarity between a vector and its complement.
    ///
    /// Agrees with [`PentaValue::entropy_scalar`] only when `t * f = 0`;
    /// otherwise it exceeds it by `2 sqrt(t f)`.
    pub fn entropy_by_similarity(&self) -> f64 {
        similarity(self, &self.complement())
    }
}

/// `(1 - a) / (1 - ab)` with `a = |mu - nu|`, `b = |mu + nu - 1|`: the entropy
/// of the balanced transform in closed form.
pub fn entropy_closed_form_balanced(v: BifuzzyValue) -> f64 {
    let (a, b) = spread_excess(v);
    (1.0 - a) / (1.0 - a * b)
}

/// `a(1 - b) / (1 - ab)`: the syntropy of the balanced transform in closed form.
pub fn syntropy_closed_form_balanced(v: BifuzzyValue) -> f64 {
    let (a, b) = spread_excess(v);
    a * (1.0 - b) / (1.0 - a * b)
}

/// `1 - |mu - nu|`: the entropy of the standard transform in closed form.
pub fn entropy_closed_form_standard(v: BifuzzyValue) -> f64 {
    1.0 - (v.mu() - v.nu()).abs()
}

fn spread_excess(v: BifuzzyValue) -> (f64, f64) {
    ((v.mu() - v.nu()).abs(), (v.mu() + v.nu() - 1.0).abs())
}

/// Summed entropy of a set.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct SetEntropy {
    pub scalar: f64,
    pub vector: EntropyVector,
    pub count: usize,
}

impl SetEntropy {
    /// Per-element mean of the scalar, zero for an empty set.
    pub fn mean(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.scalar / self.count as f64
        }
    }
}

/// Summed syntropy of a set.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct SetSyntropy {
    pub scalar: f64,
    pub vector: SyntropyVector,
    pub count: usize,
}

impl SetSyntropy {
    pub fn mean(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            self.scalar / self.count as f64
        }
    }
}

/// Sum of per-element entropies, accumulated in canonical label order.
pub fn set_entropy(set: &BifuzzySet, mode: Mode) -> SetEntropy {
    set.values().fold(SetEntropy::default(), |mut acc, v| {
        let x = PentaValue::from_bifuzzy(v, mode);
        let e = x.entropy();
        acc.scalar += x.entropy_scalar();
        acc.vector.c += e.c;
        acc.vector.u += e.u;
        acc.vector.i += e.i;
        acc.count += 1;
        acc
    })
}

/// Sum of per-element syntropies, accumulated in canonical label order.
pub fn set_syntropy(set: &BifuzzySet, mode: Mode) -> SetSyntropy {
    set.values().fold(SetSyntropy::default(), |mut acc, v| {
        let x = PentaValue::from_bifuzzy(v, mode);
        acc.scalar += x.syntropy_scalar();
        acc.vector.t += x.t();
        acc.vector.f += x.f();
        acc.count += 1;
        acc
    })
}

/// The two sets are defined over different universes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("universe mismatch: missing from second set [{}], extra in second set [{}]", missing.join(", "), extra.join(", "))]
pub struct UniverseMismatch {
    /// Labels in the first set but not the second.
    pub missing: Vec<String>,
    /// Labels in the second set but not the first.
    pub extra: Vec<String>,
}

/// Mean elementwise similarity over a shared universe.
///
/// Two empty sets are identical and score 1.
pub fn set_similarity(
    s1: &BifuzzySet,
    s2: &BifuzzySet,
    mode: Mode,
) -> Result<f64, UniverseMismatch> {
    let missing: Vec<String> = s1
        .labels()
        .filter(|l| !s2.contains(l))
        .map(str::to_owned)
        .collect();
    let extra: Vec<String> = s2
        .labels()
        .filter(|l| !s1.contains(l))
        .map(str::to_owned)
        .collect();
    if !missing.is_empty() || !extra.is_empty() {
        return Err(UniverseMismatch { missing, extra });
    }
    if s1.is_empty() {
        return Ok(1.0);
    }
    let total: f64 = s1
        .iter()
        .zip(s2.iter())
        .map(|((_, a), (_, b))| {
            similarity(
                &PentaValue::from_bifuzzy(a, mode),
                &PentaValue::from_bifuzzy(b, mode),
            )
        })
        .sum();
    Ok(total / s1.len() as f64)
}
