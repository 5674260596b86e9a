//! Operators on five-valued vectors.
//!
//! Union and intersection are parameterized by a [`NormCouple`]. Their
//! outputs are checked against the vector invariants instead of clamped: a
//! violation means the couple is not closed on the given inputs and is
//! returned as a [`ClosureError`].

use thiserror::Error;

use crate::norm::NormCouple;
use crate::penta::PentaValue;
use crate::EPS;

/// A binary operator produced a vector outside the simplex.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{operator} under {couple} left the simplex: (t={t}, c={c}, u={u}, f={f}) from {lhs} and {rhs}")]
pub struct ClosureError {
    pub operator: &'static str,
    pub couple: NormCouple,
    pub lhs: PentaValue,
    pub rhs: PentaValue,
    pub t: f64,
    pub c: f64,
    pub u: f64,
    pub f: f64,
}

fn checked(
    operator: &'static str,
    couple: NormCouple,
    lhs: &PentaValue,
    rhs: &PentaValue,
    [t, c, u, f]: [f64; 4],
) -> Result<PentaValue, ClosureError> {
    PentaValue::new(t, c, u, f).map_err(|_| ClosureError {
        operator,
        couple,
        lhs: *lhs,
        rhs: *rhs,
        t,
        c,
        u,
        f,
    })
}

impl PentaValue {
    /// Raw union components, before validation.
    pub fn union_components(&self, other: &PentaValue, couple: NormCouple) -> [f64; 4] {
        let (t1, c1, u1, f1) = (self.t(), self.c(), self.u(), self.f());
        let (t2, c2, u2, f2) = (other.t(), other.c(), other.u(), other.f());
        let ff = couple.t_norm(f1, f2);
        [
            couple.t_conorm(t1, t2),
            couple.t_norm(c1 + f1, c2 + f2) - ff,
            couple.t_norm(u1 + f1, u2 + f2) - ff,
            ff,
        ]
    }

    /// Raw intersection components, before validation.
    pub fn intersection_components(&self, other: &PentaValue, couple: NormCouple) -> [f64; 4] {
        let (t1, c1, u1, f1) = (self.t(), self.c(), self.u(), self.f());
        let (t2, c2, u2, f2) = (other.t(), other.c(), other.u(), other.f());
        let tt = couple.t_norm(t1, t2);
        [
            tt,
            couple.t_norm(c1 + t1, c2 + t2) - tt,
            couple.t_norm(u1 + t1, u2 + t2) - tt,
            couple.t_conorm(f1, f2),
        ]
    }

    /// Disjunction.
    pub fn union(&self, other: &PentaValue, couple: NormCouple) -> Result<PentaValue, ClosureError> {
        checked(
            "union",
            couple,
            self,
            other,
            self.union_components(other, couple),
        )
    }

    /// Conjunction.
    pub fn intersection(
        &self,
        other: &PentaValue,
        couple: NormCouple,
    ) -> Result<PentaValue, ClosureError> {
        checked(
            "intersection",
            couple,
            self,
            other,
            self.intersection_components(other, couple),
        )
    }

    /// `(t, c, u, f) -> (f, c, u, t)`
    pub fn complement(&self) -> PentaValue {
        PentaValue::raw(self.f(), self.c(), self.u(), self.t())
    }

    /// `(t, c, u, f) -> (f, u, c, t)`
    pub fn negation(&self) -> PentaValue {
        PentaValue::raw(self.f(), self.u(), self.c(), self.t())
    }

    /// `(t, c, u, f) -> (t, u, c, f)`
    pub fn dual(&self) -> PentaValue {
        PentaValue::raw(self.t(), self.u(), self.c(), self.f())
    }

    /// `complement(self) ∪ other`.
    pub fn implication(
        &self,
        other: &PentaValue,
        couple: NormCouple,
    ) -> Result<PentaValue, ClosureError> {
        self.complement().union(other, couple)
    }

    /// `(self → other) ∩ (other → self)`.
    pub fn equivalence(
        &self,
        other: &PentaValue,
        couple: NormCouple,
    ) -> Result<PentaValue, ClosureError> {
        let forward = self.implication(other, couple)?;
        let backward = other.implication(self, couple)?;
        forward.intersection(&backward, couple)
    }

    /// Componentwise distance in `(t, c, u, f)`.
    pub fn max_abs_diff(&self, other: &PentaValue) -> f64 {
        self.components()
            .iter()
            .zip(other.components())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Whether `c * u` vanishes (within [`EPS`]).
pub fn cu_free(x: &PentaValue) -> bool {
    x.c().min(x.u()) <= EPS
}
