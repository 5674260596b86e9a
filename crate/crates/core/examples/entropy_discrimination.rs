//! Two maximally uncertain values: the scalar entropy cannot tell them
//! apart, the entropy vector can.

use pentafuzzy::measures::similarity;
use pentafuzzy::{BifuzzyValue, Mode, PentaValue};

fn main() {
    for mode in Mode::ALL {
        let x = PentaValue::from_bifuzzy(BifuzzyValue::new(0.5, 0.5).unwrap(), mode);
        let y = PentaValue::from_bifuzzy(BifuzzyValue::new(0.0, 0.0).unwrap(), mode);
        println!("{mode}");
        for (name, v) in [("(0.5, 0.5)", x), ("(0, 0)", y)] {
            let e = v.entropy();
            println!(
                "  {name:<11} entropy={} vector=(c={}, u={}, i={}) by similarity={}",
                v.entropy_scalar(),
                e.c,
                e.u,
                e.i,
                v.entropy_by_similarity()
            );
        }
        println!("  similarity between them: {}", similarity(&x, &y));
    }
}
