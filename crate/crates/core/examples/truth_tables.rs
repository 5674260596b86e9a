//! Prints all seven crisp operator tables and checks them against the
//! reference tables for each couple.

use pentafuzzy::table::{generate_truth_table, reference};
use pentafuzzy::{NormCouple, Operator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for op in Operator::ALL {
        let table = generate_truth_table(op, NormCouple::MinMax)?;
        println!("{} ({})", op.name(), op.symbol());
        println!("{}", table.render());
    }

    for couple in NormCouple::standard_set() {
        let mut mismatches = 0;
        for op in Operator::ALL {
            let table = generate_truth_table(op, couple)?;
            mismatches += table.diff(&reference::table(op)).len();
        }
        println!("{couple:<16} mismatches: {mismatches}");
    }
    Ok(())
}
