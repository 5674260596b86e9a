//! Union, intersection and the unary operators on non-crisp values, under
//! two couples.

use pentafuzzy::{BifuzzyValue, Mode, NormCouple, PentaValue};

fn p(mu: f64, nu: f64) -> PentaValue {
    PentaValue::from_bifuzzy(BifuzzyValue::new(mu, nu).unwrap(), Mode::Standard)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = p(0.7, 0.2);
    let y = p(0.3, 0.9);
    println!("x = {x}");
    println!("y = {y}");
    println!("~x = {}", x.complement());
    println!("¬x = {}", x.negation());
    println!("x^d = {}", x.dual());

    for couple in [NormCouple::MinMax, NormCouple::ProductProbSum] {
        println!("\n[{couple}]");
        println!("x ∪ y = {}", x.union(&y, couple)?);
        println!("x ∩ y = {}", x.intersection(&y, couple)?);
        println!("x → y = {}", x.implication(&y, couple)?);
        println!("x ↔ y = {}", x.equivalence(&y, couple)?);
        println!("x ∪ x = {}", x.union(&x, couple)?);
    }

    // Only min/max keeps c * u = 0.
    let (a, b) = (p(0.5, 1.0), p(0.0, 0.5));
    let z = a.union(&b, NormCouple::ProductProbSum)?;
    println!("\n{a} ∪ {b} under product = {z}");
    Ok(())
}
