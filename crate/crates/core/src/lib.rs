//! Five-valued representation of bifuzzy sets.
//!
//! A bifuzzy value is a pair `(mu, nu)` of independent degrees of
//! membership and non-membership. This crate maps such pairs onto five
//! non-negative indices that sum to one (truth `t`, inconsistency `c`,
//! incompleteness `u`, falsity `f` and ambiguity `i`), and builds on top of
//! that representation:
//!
//! - [`bifuzzy`]: the primal `(mu, nu)` model, net truth / definedness
//!   coordinates (standard and balanced), the generalized distance and the
//!   fuzzy / intuitionistic / paraconsistent classification.
//! - [`penta`]: the five-valued vector, its inverse, and the crisp
//!   constants `T`, `F`, `C`, `U`, `I`.
//! - [`norm`] and [`ops`]: Frank t-norm couples and the vector operators
//!   (union, intersection, complement, negation, dual, implication,
//!   equivalence).
//! - [`table`]: truth-table generation from the vector operators and the
//!   reference tables they are checked against.
//! - [`measures`]: Bhattacharyya similarity, entropy, syntropy and their
//!   set-level aggregates.
//! - [`setio`]: labeled finite sets with CSV and JSON persistence.
//! - [`verify`]: a seeded, deterministic sweep over every algebraic law.
//! - [`cli`]: the command-line surface used by the `pentafuzzy` binary.
//!
//! ```
//! use pentafuzzy::{BifuzzyValue, Mode, PentaValue, NormCouple};
//!
//! let x = PentaValue::from_bifuzzy(BifuzzyValue::new(0.5, 0.5)?, Mode::Standard);
//! let y = PentaValue::from_bifuzzy(BifuzzyValue::new(0.0, 0.0)?, Mode::Standard);
//! assert_eq!(x.entropy().scalar(), 1.0);
//! assert_eq!(y.entropy().scalar(), 1.0);
//! assert_eq!(x.entropy().i, 1.0);
//! assert_eq!(y.entropy().u, 1.0);
//!
//! let z = x.union(&y, NormCouple::MinMax)?;
//! assert!(z.is_valid());
//! # Ok::<(), pentafuzzy::Error>(())
//! ```

// ClosureError carries both operands for diagnostics.
#![allow(clippy::result_large_err)]

pub mod bifuzzy;
pub mod cli;
mod error;
pub mod format;
pub mod measures;
pub mod norm;
pub mod ops;
pub mod penta;
pub mod setio;
pub mod table;
pub mod verify;

pub use bifuzzy::{BifuzzyValue, Classification, Kind, Mode, TauDelta};
pub use error::{DomainError, Error};
pub use measures::{EntropyVector, SetEntropy, SetSyntropy, SyntropyVector};
pub use norm::NormCouple;
pub use ops::ClosureError;
pub use penta::{Crisp, CrispConstant, PentaValue};
pub use setio::BifuzzySet;
pub use table::{Operator, TruthTable};

/// Absolute tolerance used when validating computed vectors.
///
/// Values produced by floating-point arithmetic may overshoot a bound by a
/// few ulps; anything beyond this is a genuine violation.
pub const EPS: f64 = 1e-12;
