//! Explicit optimal colorings of one-point unions of complete graphs.

use blockhc::prelude::*;

fn main() {
    for (n, k) in [(4, 2), (3, 3), (5, 3), (3, 4)] {
        let g = gen_union(n, k).unwrap();
        let c = union_coloring(n, k).unwrap();
        let expected = family_hc(FamilyKind::Union { n, k }).unwrap().value;
        println!(
            "K_{n}^{k}: span {} (formula {expected}), valid {}, colors {:?}",
            c.span(),
            is_valid_coloring(&g, &c.colors),
            c.colors
        );
    }
}
