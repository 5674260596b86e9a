//! Builds two labelled sets, writes them as CSV and JSON, reads them back
//! and computes set-level measures.

use pentafuzzy::measures::{set_entropy, set_similarity, set_syntropy};
use pentafuzzy::{BifuzzySet, BifuzzyValue, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut a = BifuzzySet::new("observed");
    a.insert("alpha", BifuzzyValue::new(0.5, 0.5)?)?;
    a.insert("beta", BifuzzyValue::new(0.9, 0.1)?)?;
    a.insert("gamma", BifuzzyValue::new(0.2, 0.7)?)?;

    let mut b = BifuzzySet::new("expected");
    b.insert("alpha", BifuzzyValue::new(0.0, 0.0)?)?;
    b.insert("beta", BifuzzyValue::new(1.0, 0.0)?)?;
    b.insert("gamma", BifuzzyValue::new(0.2, 0.8)?)?;

    let csv = a.to_csv();
    let json = b.to_json();
    print!("{csv}");
    print!("{json}");
    let a = BifuzzySet::from_csv_str("observed", &csv)?;
    let b = BifuzzySet::from_json_str(&json)?;

    for mode in Mode::ALL {
        let e = set_entropy(&a, mode);
        let s = set_syntropy(&a, mode);
        println!(
            "{mode}: entropy sum={:.4} mean={:.4} vec=({:.4}, {:.4}, {:.4}); syntropy sum={:.4}; similarity={:.4}",
            e.scalar,
            e.mean(),
            e.vector.c,
            e.vector.u,
            e.vector.i,
            s.scalar,
            set_similarity(&a, &b, mode)?
        );
    }
    Ok(())
}
