//! Frank t-norm / t-conorm couples.
//!
//! Every member of the Frank family satisfies `T(a, b) + S(a, b) = a + b`,
//! with `S(a, b) = 1 - T(1 - a, 1 - b)`. For a parameter `s > 0, s != 1`:
//!
//! ```text
//! T_s(a, b) = log_s(1 + (s^a - 1)(s^b - 1) / (s - 1))
//! ```
//!
//! The limits `s -> 0`, `s -> 1` and `s -> inf` give the minimum, the
//! product and the Lukasiewicz t-norm, which are exposed as their own
//! variants.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::DomainError;

/// A validated Frank parameter: finite, positive and different from 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrankParameter(f64);

impl FrankParameter {
    pub fn new(s: f64) -> Result<Self, DomainError> {
        if s.is_finite() && s > 0.0 && s != 1.0 {
            Ok(Self(s))
        } else {
            Err(DomainError::FrankParameter(s))
        }
    }

    pub fn get(&self) -> f64 {
        self.0
    }
}

/// A dual t-norm / t-conorm pair from the Frank family.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum NormCouple {
    /// `min` / `max`.
    #[default]
    MinMax,
    /// `a * b` / `a + b - a * b`.
    ProductProbSum,
    /// `max(a + b - 1, 0)` / `min(a + b, 1)`.
    Lukasiewicz,
    Frank(FrankParameter),
}

impl NormCouple {
    /// The three limit members and `frank(2)`.
    pub fn standard_set() -> Vec<NormCouple> {
        vec![
            NormCouple::MinMax,
            NormCouple::ProductProbSum,
            NormCouple::Lukasiewicz,
            NormCouple::frank(2.0).expect("valid parameter"),
        ]
    }

    pub fn frank(s: f64) -> Result<Self, DomainError> {
        FrankParameter::new(s).map(NormCouple::Frank)
    }

    pub fn t_norm(&self, a: f64, b: f64) -> f64 {
        match *self {
            NormCouple::MinMax => a.min(b),
            NormCouple::ProductProbSum => a * b,
            NormCouple::Lukasiewicz => lukasiewicz_t_norm(a, b),
            NormCouple::Frank(s) => frank_t_norm(s.get(), a, b),
        }
    }

    pub fn t_conorm(&self, a: f64, b: f64) -> f64 {
        match *self {
            NormCouple::MinMax => a.max(b),
            NormCouple::ProductProbSum => a + b - a * b,
            NormCouple::Lukasiewicz => (a + b).min(1.0),
            NormCouple::Frank(s) => 1.0 - frank_t_norm(s.get(), 1.0 - a, 1.0 - b),
        }
    }

    /// Canonical name, parseable by [`FromStr`].
    pub fn name(&self) -> String {
        match self {
            NormCouple::MinMax => "min_max".to_owned(),
            NormCouple::ProductProbSum => "product_probsum".to_owned(),
            NormCouple::Lukasiewicz => "lukasiewicz".to_owned(),
            NormCouple::Frank(s) => format!("frank({})", s.get()),
        }
    }
}

fn lukasiewicz_t_norm(a: f64, b: f64) -> f64 {
    if a == 1.0 {
        b
    } else if b == 1.0 {
        a
    } else {
        (a + b - 1.0).max(0.0)
    }
}

/// `ln(1 + expm1(a ln s) expm1(b ln s) / expm1(ln s)) / ln s`, which stays
/// accurate for `s` close to 1.
fn frank_t_norm(s: f64, a: f64, b: f64) -> f64 {
    // Exact on the boundary, so the unit laws hold bit-for-bit.
    if a == 0.0 || b == 0.0 {
        return 0.0;
    }
    if a == 1.0 {
        return b;
    }
    if b == 1.0 {
        return a;
    }
    let ls = s.ln();
    let ratio = (a * ls).exp_m1() * (b * ls).exp_m1() / ls.exp_m1();
    (ratio.ln_1p() / ls).clamp(0.0, 1.0)
}

impl fmt::Display for NormCouple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for NormCouple {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl FromStr for NormCouple {
    type Err = String;

    /// Accepts `min_max` (`min`, `minmax`), `product_probsum` (`product`),
    /// `lukasiewicz` (`luk`), and `frank(S)` or `frank:S`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "min_max" | "minmax" | "min" => return Ok(NormCouple::MinMax),
            "product_probsum" | "product" | "prod" => return Ok(NormCouple::ProductProbSum),
            "lukasiewicz" | "luk" => return Ok(NormCouple::Lukasiewicz),
            _ => {}
        }
        let param = s
            .strip_prefix("frank(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("frank:"))
            .ok_or_else(|| {
                format!(
                    "unknown couple `{s}` (expected min_max, product_probsum, lukasiewicz or frank(S))"
                )
            })?;
        let value: f64 = param
            .trim()
            .parse()
            .map_err(|_| format!("invalid Frank parameter `{param}`"))?;
        NormCouple::frank(value).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Solves `s^x - 1 = (s^a - 1)(s^b - 1)/(s - 1)` for `x` by bisection,
    /// independent of the closed form used above.
    fn frank_by_bisection(s: f64, a: f64, b: f64) -> f64 {
        let target = (s.powf(a) - 1.0) * (s.powf(b) - 1.0) / (s - 1.0);
        let g = |x: f64| s.powf(x) - 1.0 - target;
        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        let increasing = s > 1.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if (g(mid) < 0.0) == increasing {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn couples() -> Vec<NormCouple> {
        let mut v = NormCouple::standard_set();
        v.push(NormCouple::frank(0.5).unwrap());
        v.push(NormCouple::frank(10.0).unwrap());
        v
    }

    #[test]
    fn named_examples() {
        assert_eq!(NormCouple::MinMax.t_norm(0.3, 0.7), 0.3);
        assert_eq!(NormCouple::MinMax.t_conorm(0.3, 0.7), 0.7);
        assert_eq!(NormCouple::ProductProbSum.t_conorm(0.5, 0.5), 0.75);
        assert_eq!(NormCouple::Lukasiewicz.t_norm(0.3, 0.5), 0.0);
    }

    #[test]
    fn frank_two_at_half() {
        let frank2 = NormCouple::frank(2.0).unwrap();
        let value = frank2.t_norm(0.5, 0.5);
        let oracle = frank_by_bisection(2.0, 0.5, 0.5);
        assert!((value - oracle).abs() < 1e-12);
        assert!((value - 0.228_446_696_836_388).abs() < 1e-12, "{value}");
    }

    #[test]
    fn frank_matches_bisection_oracle() {
        for &s in &[0.01, 0.5, 0.9, 1.1, 2.0, 10.0, 1000.0] {
            for i in 0..=10 {
                for j in 0..=10 {
                    let (a, b) = (i as f64 / 10.0, j as f64 / 10.0);
                    let got = frank_t_norm(s, a, b);
                    let want = frank_by_bisection(s, a, b);
                    assert!((got - want).abs() < 1e-9, "s={s} a={a} b={b}: {got} vs {want}");
                }
            }
        }
    }

    #[test]
    fn units_hold_exactly() {
        for couple in couples() {
            for k in 0..=20 {
                let a = k as f64 / 20.0;
                assert_eq!(couple.t_norm(a, 1.0), a, "{couple}");
                assert_eq!(couple.t_norm(1.0, a), a, "{couple}");
                assert!((couple.t_conorm(a, 0.0) - a).abs() <= 1e-15, "{couple}");
            }
        }
    }

    #[test]
    fn frank_approaches_limits() {
        let near_product = NormCouple::frank(1.0 + 1e-7).unwrap();
        let near_min = NormCouple::frank(1e-12).unwrap();
        for (a, b) in [(0.3, 0.6), (0.8, 0.9), (0.5, 0.5)] {
            assert!((near_product.t_norm(a, b) - a * b).abs() < 1e-6);
            assert!((near_min.t_norm(a, b) - a.min(b)).abs() < 0.05);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        for s in [0.0, -1.0, 1.0, f64::INFINITY, f64::NAN] {
            assert!(NormCouple::frank(s).is_err());
        }
    }

    #[test]
    fn parse_names() {
        for couple in couples() {
            assert_eq!(couple.name().parse::<NormCouple>(), Ok(couple));
        }
        assert_eq!("product".parse(), Ok(NormCouple::ProductProbSum));
        assert_eq!("frank:10".parse(), Ok(NormCouple::frank(10.0).unwrap()));
        assert!("frank(1)".parse::<NormCouple>().is_err());
        assert!("hamacher".parse::<NormCouple>().is_err());
    }
}
