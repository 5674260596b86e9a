//! Runs the randomized law checker over every named couple and prints
//! the report. Couples other than min/max are expected to fail
//! idempotence and c*u preservation.
//!
//! ```text
//! cargo run --release --example verify_laws -- 10000 42
//! ```

use pentafuzzy::verify::{self, VerifyConfig};
use pentafuzzy::NormCouple;

fn main() {
    let mut args = std::env::args().skip(1);
    let samples = args.next().map_or(2000, |s| s.parse().expect("sample count"));
    let seed = args.next().map_or(42, |s| s.parse().expect("seed"));
    let mut couples = NormCouple::standard_set();
    couples.push(NormCouple::frank(0.5).unwrap());
    couples.push(NormCouple::frank(10.0).unwrap());

    let report = verify::run(&VerifyConfig {
        samples,
        seed,
        couples,
    });
    print!("{}", report.render());
}
