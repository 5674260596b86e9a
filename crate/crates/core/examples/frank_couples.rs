//! Frank t-norms across the parameter range, and the identity
//! `T(a, b) + S(a, b) = a + b` they all share.

use pentafuzzy::NormCouple;

fn main() {
    let (a, b) = (0.5, 0.5);
    let mut couples = vec![NormCouple::MinMax];
    for s in [1e-6, 0.1, 0.5, 2.0, 10.0, 1e6] {
        couples.push(NormCouple::frank(s).unwrap());
    }
    couples.push(NormCouple::ProductProbSum);
    couples.push(NormCouple::Lukasiewicz);

    println!("{:<18} {:>10} {:>10} {:>10}", "couple", "T", "S", "T+S-a-b");
    for couple in couples {
        let t = couple.t_norm(a, b);
        let s = couple.t_conorm(a, b);
        println!("{:<18} {t:>10.6} {s:>10.6} {:>10.1e}", couple.name(), t + s - a - b);
    }
}
