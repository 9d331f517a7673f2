//! Write a colored symmetric block graph as Graphviz DOT.
//!
//!     cargo run --example dot_export > sym.dot && dot -Tsvg sym.dot -o sym.svg

use blockhc::export::to_dot;
use blockhc::pipeline::auto_color;
use blockhc::prelude::*;

fn main() {
    let (g, _) = gen_symmetric(SymmetricSpec::new(3, 3, 4).unwrap()).unwrap();
    let outcome = auto_color(&g, None);
    eprintln!("span {} ({})", outcome.span(), outcome.status());
    print!("{}", to_dot(&g, Some(&outcome.coloring), true));
}
