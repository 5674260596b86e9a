//! Seeded sweep over every algebraic law of the representation.
//!
//! Each law draws from its own ChaCha stream derived from the seed, so the
//! report is byte-identical for identical configurations regardless of
//! which laws or couples are selected. Random vectors are images of
//! uniformly drawn `(mu, nu)` pairs under a randomly chosen transform mode.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bifuzzy::{BifuzzyValue, Mode};
use crate::format::sig;
use crate::measures::{
    entropy_closed_form_balanced, entropy_closed_form_standard, similarity,
    syntropy_closed_form_balanced,
};
use crate::norm::NormCouple;
use crate::ops::{cu_free, ClosureError};
use crate::penta::PentaValue;
use crate::table::{generate_truth_table, reference, Operator};

/// Side length of the `(mu, nu)` grid used by grid-based laws.
pub const GRID: usize = 201;

/// Tolerance for identities between closed forms and the pipeline.
pub const TOL_ALGEBRA: f64 = 1e-12;
/// Tolerance for the modularity laws.
pub const TOL_MODULARITY: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub couples: Vec<NormCouple>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            samples: 10_000,
            seed: 42,
            couples: vec![NormCouple::MinMax],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawResult {
    pub law: &'static str,
    pub couple: Option<NormCouple>,
    pub status: Status,
    pub checks: usize,
    pub violations: usize,
    /// Largest absolute error seen; `None` when a pass/fail check (a
    /// closure violation or a table mismatch) failed outright.
    pub max_error: Option<f64>,
    pub tolerance: f64,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub seed: u64,
    pub samples: usize,
    pub couples: Vec<NormCouple>,
    pub results: Vec<LawResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status == Status::Pass)
    }

    pub fn find(&self, law: &str, couple: Option<NormCouple>) -> Option<&LawResult> {
        self.results
            .iter()
            .find(|r| r.law == law && r.couple == couple)
    }

    /// Text report, one line per law plus an indented counterexample line for
    /// failures. Errors are printed in scientific notation with 9
    /// significant digits.
    pub fn render(&self) -> String {
        let couples: Vec<String> = self.couples.iter().map(NormCouple::name).collect();
        let mut out = format!(
            "verify: seed={} samples={} couples={}\n",
            self.seed,
            self.samples,
            couples.join(",")
        );
        for r in &self.results {
            let status = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let name = match &r.couple {
                Some(c) => format!("{} [{}]", r.law, c),
                None => r.law.to_owned(),
            };
            let max_err = r
                .max_error
                .map_or_else(|| "inf".to_owned(), |e| format!("{e:.8e}"));
            out.push_str(&format!(
                "{status} {name:<44} checks={} violations={} max_err={max_err} tol={:.0e}\n",
                r.checks, r.violations, r.tolerance
            ));
            if let Some(ce) = &r.counterexample {
                if r.status == Status::Fail {
                    out.push_str(&format!("     counterexample: {ce}\n"));
                }
            }
        }
        let failed = self
            .results
            .iter()
            .filter(|r| r.status == Status::Fail)
            .count();
        out.push_str(&format!(
            "summary: {} passed, {} failed\n",
            self.results.len() - failed,
            failed
        ));
        out
    }
}

struct Tally {
    law: &'static str,
    couple: Option<NormCouple>,
    tolerance: f64,
    checks: usize,
    violations: usize,
    max_error: f64,
    counterexample: Option<String>,
}

impl Tally {
    fn new(law: &'static str, couple: Option<NormCouple>, tolerance: f64) -> Self {
        Self {
            law,
            couple,
            tolerance,
            checks: 0,
            violations: 0,
            max_error: 0.0,
            counterexample: None,
        }
    }

    /// Records one check with absolute error `error`.
    fn check(&mut self, error: f64, describe: impl FnOnce() -> String) {
        self.checks += 1;
        let error = if error.is_nan() { f64::INFINITY } else { error };
        if error > self.max_error {
            self.max_error = error;
        }
        if error > self.tolerance {
            self.violations += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    fn holds(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.check(if ok { 0.0 } else { f64::INFINITY }, describe);
    }

    fn closure_failure(&mut self, err: &ClosureError) {
        self.holds(false, || err.to_string());
    }

    fn finish(self) -> LawResult {
        LawResult {
            law: self.law,
            couple: self.couple,
            status: if self.violations == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            checks: self.checks,
            violations: self.violations,
            max_error: self.max_error.is_finite().then_some(self.max_error),
            tolerance: self.tolerance,
            counterexample: self.counterexample,
        }
    }
}

/// Deterministic source of bifuzzy values and vectors.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { rng }
    }

    pub fn unit(&mut self) -> f64 {
        self.rng.gen::<f64>()
    }

    pub fn bifuzzy(&mut self) -> BifuzzyValue {
        BifuzzyValue::new(self.unit(), self.unit()).expect("gen::<f64> lies in [0, 1)")
    }

    pub fn mode(&mut self) -> Mode {
        if self.rng.gen_bool(0.5) {
            Mode::Standard
        } else {
            Mode::Balanced
        }
    }

    pub fn penta(&mut self) -> PentaValue {
        let v = self.bifuzzy();
        let mode = self.mode();
        PentaValue::from_bifuzzy(v, mode)
    }

    /// A vector drawn uniformly from the simplex, without the `t f = 0`
    /// and `c u = 0` structure of transform outputs.
    pub fn simplex(&mut self) -> PentaValue {
        let mut e: [f64; 5] = std::array::from_fn(|_| -(1.0 - self.unit()).ln());
        let total: f64 = e.iter().sum();
        e.iter_mut().for_each(|x| *x /= total);
        PentaValue::new(e[0], e[1], e[2], e[3]).expect("normalized")
    }
}

/// Every grid point `(i/(GRID-1), j/(GRID-1))`.
pub fn grid() -> impl Iterator<Item = BifuzzyValue> {
    let n = (GRID - 1) as f64;
    (0..GRID).flat_map(move |i| {
        (0..GRID).map(move |j| {
            BifuzzyValue::new(i as f64 / n, j as f64 / n).expect("grid point in range")
        })
    })
}

fn show(x: &PentaValue) -> String {
    format!(
        "(t={}, c={}, u={}, f={})",
        sig(x.t()),
        sig(x.c()),
        sig(x.u()),
        sig(x.f())
    )
}

fn show_v(v: &BifuzzyValue) -> String {
    format!("(mu={}, nu={})", sig(v.mu()), sig(v.nu()))
}

/// Runs all laws: the couple-independent ones first, then each couple's.
pub fn run(config: &VerifyConfig) -> Report {
    let mut results = Vec::new();
    let seed = config.seed;
    let n = config.samples.max(1);
    let mut stream = 0u64;
    let mut next = || {
        stream += 1;
        Sampler::new(seed, stream)
    };

    results.push(partition_of_unity(&mut next(), n));
    results.push(bound_identity());
    results.push(standard_closed_forms());
    results.push(balanced_closed_forms());
    results.push(penta_round_trip(&mut next(), n));
    results.push(involutions(&mut next(), n));
    results.push(entropy_plus_syntropy(&mut next(), n));
    results.push(similarity_route(&mut next(), n));
    results.push(bhattacharyya_bound(&mut next(), n));

    for (k, &couple) in config.couples.iter().enumerate() {
        // Streams per couple are keyed by position so adding couples does not
        // perturb the earlier ones.
        let base = 1000 * (k as u64 + 1);
        let s = |offset: u64| Sampler::new(seed, base + offset);
        results.push(truth_tables(couple));
        results.push(frank_equation(&mut s(1), n, couple));
        results.push(closure(&mut s(2), n, couple));
        results.push(de_morgan(&mut s(3), n, couple));
        results.push(commutativity(&mut s(4), n, couple));
        results.push(associativity(&mut s(5), n, couple));
        results.push(idempotence(&mut s(6), n, couple));
        results.push(cu_preservation(&mut s(7), n, couple));
        let (e, g) = modularity(&mut s(8), n, couple);
        results.push(e);
        results.push(g);
        results.push(monotonicity(&mut s(9), n, couple));
    }

    Report {
        seed,
        samples: config.samples,
        couples: config.couples.clone(),
        results,
    }
}

pub fn partition_of_unity(sampler: &mut Sampler, n: usize) -> LawResult {
    let mut tally = Tally::new("partition_of_unity", None, TOL_ALGEBRA);
    let points = grid().chain((0..n).map(|_| sampler.bifuzzy()));
    for v in points {
        for mode in Mode::ALL {
            let x = PentaValue::from_bifuzzy(v, mode);
            let sum: f64 = x.five().iter().sum();
            let nonneg = x.five().iter().all(|&c| c >= 0.0);
            let exclusive = x.t() * x.f() == 0.0 && x.c() * x.u() == 0.0;
            let err = if nonneg && exclusive {
                (sum - 1.0).abs()
            } else {
                f64::INFINITY
            };
            tally.check(err, || format!("{} {mode}: {}", show_v(&v), show(&x)));
        }
    }
    tally.finish()
}

/// `|mu-nu| + |mu+nu-1| = max(|2mu-1|, |2nu-1|)` and the resulting bound
/// `|tau| + |delta| <= 1` in both modes.
pub fn bound_identity() -> LawResult {
    let mut tally = Tally::new("abs_tau_plus_abs_delta", None, TOL_ALGEBRA);
    for v in grid() {
        let (mu, nu) = (v.mu(), v.nu());
        let lhs = (mu - nu).abs() + (mu + nu - 1.0).abs();
        let rhs = (2.0 * mu - 1.0).abs().max((2.0 * nu - 1.0).abs());
        tally.check((lhs - rhs).abs(), || show_v(&v));
        for mode in Mode::ALL {
            let td = v.tau_delta(mode);
            let excess = (td.tau.abs() + td.delta.abs() - 1.0).max(0.0);
            tally.check(excess, || format!("{} {mode}", show_v(&v)));
        }
        let bal = v.tau_delta_balanced();
        let signs = bal.tau.signum() * (mu - nu).signum() >= 0.0
            && bal.delta.signum() * (mu + nu - 1.0).signum() >= 0.0
            && (bal.tau == 0.0) == (mu == nu);
        tally.holds(signs, || format!("balanced signs at {}", show_v(&v)));
    }
    tally.finish()
}

/// Standard-mode oracles: `i = 2 min(mu, nu, 1-mu, 1-nu)`, `t + f = |mu - nu|`,
/// `e = 1 - |mu - nu|`.
pub fn standard_closed_forms() -> LawResult {
    let mut tally = Tally::new("standard_closed_forms", None, TOL_ALGEBRA);
    for v in grid() {
        let (mu, nu) = (v.mu(), v.nu());
        let x = PentaValue::from_bifuzzy(v, Mode::Standard);
        let i_oracle = 2.0 * mu.min(nu).min(1.0 - mu).min(1.0 - nu);
        tally.check((x.i() - i_oracle).abs(), || show_v(&v));
        tally.check((x.t() + x.f() - (mu - nu).abs()).abs(), || show_v(&v));
        tally.check(
            (x.entropy_scalar() - entropy_closed_form_standard(v)).abs(),
            || show_v(&v),
        );
    }
    tally.finish()
}

/// Balanced-mode entropy and syntropy against their closed forms, and the
/// generalized distance against the syntropy.
pub fn balanced_closed_forms() -> LawResult {
    let mut tally = Tally::new("balanced_closed_forms", None, TOL_ALGEBRA);
    for v in grid() {
        let x = PentaValue::from_bifuzzy(v, Mode::Balanced);
        let e = entropy_closed_form_balanced(v);
        let g = syntropy_closed_form_balanced(v);
        tally.check((x.entropy_scalar() - e).abs(), || show_v(&v));
        tally.check((x.entropy().scalar() - e).abs(), || show_v(&v));
        tally.check((x.syntropy_scalar() - g).abs(), || show_v(&v));
        tally.check((e + g - 1.0).abs(), || show_v(&v));
        tally.check((v.distance() - g).abs(), || show_v(&v));
    }
    tally.finish()
}

pub fn penta_round_trip(sampler: &mut Sampler, n: usize) -> LawResult {
    let mut tally = Tally::new("penta_round_trip", None, TOL_ALGEBRA);
    let points = grid().chain((0..n).map(|_| sampler.bifuzzy()));
    for v in points {
        let x = PentaValue::from_bifuzzy(v, Mode::Standard);
        match x.to_bifuzzy() {
            Ok(back) => tally.check(
                (back.mu() - v.mu()).abs().max((back.nu() - v.nu()).abs()),
                || show_v(&v),
            ),
            Err(e) => tally.holds(false, || format!("{}: {e}", show_v(&v))),
        }
    }
    tally.finish()
}

pub fn involutions(sampler: &mut Sampler, n: usize) -> LawResult {
    let mut tally = Tally::new("involutions", None, 0.0);
    for k in 0..n {
        let x = if k % 2 == 0 {
            sampler.penta()
        } else {
            sampler.simplex()
        };
        tally.holds(x.complement().complement() == x, || show(&x));
        tally.holds(x.negation().negation() == x, || show(&x));
        tally.holds(x.dual().dual() == x, || show(&x));
        tally.holds(x.complement().dual() == x.negation(), || show(&x));
        tally.holds(x.dual().complement() == x.negation(), || show(&x));
    }
    tally.finish()
}

pub fn entropy_plus_syntropy(sampler: &mut Sampler, n: usize) -> LawResult {
    let mut tally = Tally::new("entropy_plus_syntropy", None, 0.0);
    let grid_points = grid().flat_map(|v| Mode::ALL.map(|m| PentaValue::from_bifuzzy(v, m)));
    for x in grid_points.chain((0..n).map(|_| sampler.simplex())) {
        tally.check((x.entropy_scalar() + x.syntropy_scalar() - 1.0).abs(), || {
            show(&x)
        });
    }
    tally.finish()
}

/// `S(x, x^c) = e(x)` on transform outputs; on general simplex vectors the
/// similarity exceeds the entropy by exactly `2 sqrt(t f)`.
pub fn similarity_route(sampler: &mut Sampler, n: usize) -> LawResult {
    let mut tally = Tally::new("similarity_route", None, TOL_ALGEBRA);
    for _ in 0..n {
        let x = sampler.penta();
        tally.check((x.entropy_by_similarity() - x.entropy_scalar()).abs(), || {
            show(&x)
        });
        let y = sampler.simplex();
        let gap = y.entropy_by_similarity() - y.entropy().scalar();
        tally.check((gap - 2.0 * (y.t() * y.f()).sqrt()).abs(), || show(&y));
    }
    tally.finish()
}

pub fn bhattacharyya_bound(sampler: &mut Sampler, n: usize) -> LawResult {
    let mut tally = Tally::new("bhattacharyya_bound", None, 1e-9);
    for _ in 0..n {
        let x = sampler.penta();
        let y = sampler.penta();
        let s = similarity(&x, &y);
        tally.check((s - 1.0).max(0.0) + (-s).max(0.0), || {
            format!("{} {}", show(&x), show(&y))
        });
        tally.check((similarity(&x, &x) - 1.0).abs(), || show(&x));
        tally.check((s - similarity(&y, &x)).abs(), || show(&x));
        // 1 - S is half the squared Hellinger distance, zero iff x = y.
        let hellinger: f64 = x
            .five()
            .iter()
            .zip(y.five())
            .map(|(a, b)| (a.max(0.0).sqrt() - b.max(0.0).sqrt()).powi(2))
            .sum::<f64>()
            / 2.0;
        tally.check((1.0 - s - hellinger).abs(), || {
            format!("hellinger gap at {} {}", show(&x), show(&y))
        });
    }
    tally.finish()
}

pub fn truth_tables(couple: NormCouple) -> LawResult {
    let mut tally = Tally::new("truth_tables", Some(couple), 0.0);
    for op in Operator::ALL {
        match generate_truth_table(op, couple) {
            Ok(table) => {
                let expected = reference::table(op);
                let mismatches = table.diff(&expected);
                for _ in 0..table.cell_count() - mismatches.len() {
                    tally.holds(true, String::new);
                }
                for m in mismatches {
                    tally.holds(false, || format!("{op}: {m}"));
                }
            }
            Err(e) => tally.holds(false, || format!("{op}: {e}")),
        }
    }
    tally.finish()
}

pub fn frank_equation(sampler: &mut Sampler, n: usize, couple: NormCouple) -> LawResult {
    let mut tally = Tally::new("frank_equation", Some(couple), TOL_ALGEBRA);
    for _ in 0..n {
        let (a, b) = (sampler.unit(), sampler.unit());
        let t = couple.t_norm(a, b);
        let s = couple.t_conorm(a, b);
        tally.check((t + s - a - b).abs(), || format!("a={} b={}", sig(a), sig(b)));
        tally.check((s - (1.0 - couple.t_norm(1.0 - a, 1.0 - b))).abs(), || {
            format!("duality at a={} b={}", sig(a), sig(b))
        });
        tally.check((t - couple.t_norm(b, a)).abs(), || {
            format!("t-norm symmetry at a={} b={}", sig(a), sig(b))
        });
    }
    tally.finish()
}

pub fn closure(sampler: &mut Sampler, n: usize, couple: NormCouple) -> LawResult {
    let mut tally = Tally::new("closure", Some(couple), 0.0);
    for _ in 0..n {
        let x = sampler.penta();
        let y = sampler.penta();
        for result in [x.union(&y, couple), x.intersection(&y, couple)] {
            match result {
                Ok(_) => tally.holds(true, String::new),
                Err(e) => tally.closure_failure(&e),
            }
        }
    }
    tally.finish()
}

pub fn de_morgan(sampler: &mut Sampler, n: usize, couple: NormCouple) -> LawResult {
    let mut tally = Tally::new("de_morgan", Some(couple), TOL_ALGEBRA);
    for _ in 0..n {
        let x = sampler.penta();
        let y = sampler.penta();
        let pair = (|| {
            let lhs = x.union(&y, couple)?.complement();
            let rhs = x.complement().intersection(&y.complement(), couple)?;
            let lhs2 = x.intersection(&y, couple)?.complement();
            let rhs2 = x.complement().union(&y.complement(), couple)?;
            Ok::<_, ClosureError>(lhs.max_abs_diff(&rhs).max(lhs2.max_abs_diff(&rhs2)))
        })();
        match pair {
            Ok(err) => tally.check(err, || format!("x={} y={}", show(&x), show(&y))),
            Err(e) => tally.closure_failure(&e),
        }
    }
    tally.finish()
}

pub fn commutativity(sampler: &mut Sampler, n: usize, couple: NormCouple) -> LawResult {
    let mut tally = Tally::new("commutativity", Some(couple), TOL_ALGEBRA);
    for _ in 0..n {
        let x = sampler.penta();
        let y = sampler.penta();
        let r = (|| {
            let u = x.union(&y, couple)?.max_abs_diff(&y.union(&x, couple)?);
            let i = x
                .intersection(&y, couple)?
                .max_abs_diff(&y.intersection(&x, couple)?);
            Ok::<_, ClosureError>(u.max(i))
        })();
        match r {
            Ok(err) => tally.check(err, || format!("x={} y={}", show(&x), show(&y))),
            Err(e) => tally.closure_failure(&e),
        }
    }
    tally.finish()
}

pub fn associativity(sampler: &mut Sampler, n: usize, couple: NormCouple) -> LawResult {
    let mut tally = Tally::new("associativity", Some(couple), TOL_ALGEBRA);
    for _ in 0..n {
        let x = sampler.penta();
        let y = sampler.penta();
        let z = sampler.penta();
        let r = (|| {
            let u1 = x.union(&y, couple)?.union(&z, couple)?;
            let u2 = x.union(&y.union(&z, couple)?, couple)?;
            let i1 = x.intersection(&y, couple)?.intersection(&z, couple)?;
            let i2 = x.intersection(&y.intersection(&z, couple)?, couple)?;
            Ok::<_, ClosureError>(u1.max_abs_diff(&u2).max(i1.max_abs_diff(&i2)))
        })();
        match r {
            Ok(err) => tally.check(err, || {
                format!("x={} y={} z={}", show(&x), show(&y), show(&z))
            }),
            Err(e) => tally.closure_failure(&e),
        }
    }
    tally.finish()
}

pub fn idempotence(sampler: &mut Sampler, n: usize, couple: NormCouple) -> LawResult {
    let mut tally = Tally::new("idempotence", Some(couple), TOL_ALGEBRA);
    for _ in 0..n {
        let x = sampler.penta();
        let r = (|| {
            let u = x.union(&x, couple)?;
            let i = x.intersection(&x, couple)?;
            Ok::<_, ClosureError>((u, i))
        })();
        match r {
            Ok((u, i)) => tally.check(x.max_abs_diff(&u).max(x.max_abs_diff(&i)), || {
                format!("x={} x∪x={} x∩x={}", show(&x), show(&u), show(&i))
            }),
            Err(e) => tally.closure_failure(&e),
        }
    }
    tally.finish()
}

/// Union and intersection of `c u = 0` inputs must stay `c u = 0`.
pub fn cu_preservation(sampler: &mut Sampler, n: usize, couple: NormCouple) -> LawResult {
    let mut tally = Tally::new("cu_preservation", Some(couple), crate::EPS);
    for _ in 0..n {
        let x = sampler.penta();
        let y = sampler.penta();
        debug_assert!(cu_free(&x) && cu_free(&y));
        for (name, r) in [
            ("∪", x.union(&y, couple)),
            ("∩", x.intersection(&y, couple)),
        ] {
            match r {
                Ok(z) => tally.check(z.c().min(z.u()), || {
                    format!("x={} {name} y={} = {}", show(&x), show(&y), show(&z))
                }),
                Err(e) => tally.closure_failure(&e),
            }
        }
    }
    tally.finish()
}

pub fn modularity(
    sampler: &mut Sampler,
    n: usize,
    couple: NormCouple,
) -> (LawResult, LawResult) {
    let mut ent = Tally::new("modularity_entropy", Some(couple), TOL_MODULARITY);
    let mut syn = Tally::new("modularity_syntropy", Some(couple), TOL_MODULARITY);
    for _ in 0..n {
        let x = sampler.penta();
        let y = sampler.penta();
        match (x.union(&y, couple), x.intersection(&y, couple)) {
            (Ok(u), Ok(i)) => {
                let describe = || format!("x={} y={}", show(&x), show(&y));
                let e =
                    u.entropy().scalar() + i.entropy().scalar() - x.entropy().scalar() - y.entropy().scalar();
                ent.check(e.abs(), describe);
                let g = u.syntropy_scalar() + i.syntropy_scalar()
                    - x.syntropy_scalar()
                    - y.syntropy_scalar();
                syn.check(g.abs(), describe);
            }
            (Err(e), _) | (_, Err(e)) => {
                ent.closure_failure(&e);
                syn.closure_failure(&e);
            }
        }
    }
    (ent.finish(), syn.finish())
}

/// The decided components of union and intersection are monotone in the
/// matching input components.
pub fn monotonicity(sampler: &mut Sampler, n: usize, couple: NormCouple) -> LawResult {
    let mut tally = Tally::new("monotonicity", Some(couple), 1e-15);
    for _ in 0..n {
        let (a, a2, b) = (sampler.unit(), sampler.unit(), sampler.unit());
        let (lo, hi) = (a.min(a2), a.max(a2));
        let describe = || format!("a={} a'={} b={}", sig(lo), sig(hi), sig(b));
        tally.check(couple.t_conorm(lo, b) - couple.t_conorm(hi, b), describe);
        tally.check(couple.t_norm(lo, b) - couple.t_norm(hi, b), describe);
        tally.check(couple.t_conorm(b, lo) - couple.t_conorm(b, hi), describe);
        tally.check(couple.t_norm(b, lo) - couple.t_norm(b, hi), describe);
    }
    tally.finish()
}
