//! Maps a few bifuzzy pairs into both five-valued representations.
//!
//! ```text
//! cargo run --example transform -- 0.7 0.2
//! ```

use pentafuzzy::{BifuzzyValue, Mode, PentaValue};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let pairs = match args.as_slice() {
        [mu, nu] => vec![(*mu, *nu)],
        _ => vec![(0.5, 0.5), (0.0, 0.0), (0.7, 0.2), (0.6, 0.8), (1.0, 1.0)],
    };

    for (mu, nu) in pairs {
        let v = BifuzzyValue::new(mu, nu)?;
        let class = v.classify();
        println!("({mu}, {nu})  {} index={:.3}", class.kind.as_str(), class.index);
        for mode in Mode::ALL {
            let td = v.tau_delta(mode);
            let x = PentaValue::from_bifuzzy(v, mode);
            println!(
                "  {:<9} tau={:+.4} delta={:+.4}  {x}",
                mode.as_str(),
                td.tau,
                td.delta
            );
        }
        let back = PentaValue::from_bifuzzy(v, Mode::Standard).to_bifuzzy()?;
        println!("  inverse   ({}, {})", back.mu(), back.nu());
    }
    Ok(())
}
