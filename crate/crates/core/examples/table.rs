//! CSV table of the symmetric family: bound, closed form and constructed span.

use blockhc::pipeline::{sym_row, SymRow};
use blockhc::prelude::*;

fn main() {
    println!("{}", SymRow::CSV_HEADER);
    for m in 3..=4 {
        for kappa in 2..=3 {
            for d in 3..=6 {
                let spec = SymmetricSpec::new(m, kappa, d).unwrap();
                if sym_order_count(&spec).unwrap() <= 2000 {
                    println!("{}", sym_row(spec).unwrap().to_csv());
                }
            }
        }
    }
}
