//! Renders entropy over the unit square as a coarse text heat map.
//!
//! ```text
//! cargo run --example entropy_map -- balanced
//! ```

use pentafuzzy::{BifuzzyValue, Mode, PentaValue};

const SHADES: &[u8] = b" .:-=+*#%@";
const N: usize = 20;

fn main() {
    let mode: Mode = std::env::args()
        .nth(1)
        .map(|m| m.parse().expect("standard or balanced"))
        .unwrap_or_default();
    println!("entropy, {mode} mode (nu up, mu right)");
    for j in (0..=N).rev() {
        let row: String = (0..=N)
            .map(|i| {
                let v = BifuzzyValue::new(i as f64 / N as f64, j as f64 / N as f64).unwrap();
                let e = PentaValue::from_bifuzzy(v, mode).entropy_scalar();
                SHADES[((e * (SHADES.len() - 1) as f64).round() as usize).min(SHADES.len() - 1)] as char
            })
            .collect();
        println!("|{row}|");
    }
}
