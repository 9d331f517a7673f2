//! Closed-form values for the named families next to the general bound.

use blockhc::prelude::*;

fn main() {
    let named = [
        ("star(4)", FamilyKind::Star { n: 4 }),
        ("path(7)", FamilyKind::Path { p: 7 }),
        ("union(4,2)", FamilyKind::Union { n: 4, k: 2 }),
        ("union(3,4)", FamilyKind::Union { n: 3, k: 4 }),
        ("path(3)", FamilyKind::Path { p: 3 }),
    ];
    for (name, kind) in named {
        match family_hc(kind) {
            Ok(v) => match v.advisory {
                Some(note) => println!("{name:<12} {} ({note})", v.value),
                None => println!("{name:<12} {}", v.value),
            },
            Err(e) => println!("{name:<12} error: {e}"),
        }
    }

    for (m, kappa, d) in [(4, 2, 4), (4, 2, 5), (3, 3, 6)] {
        let spec = SymmetricSpec::new(m, kappa, d).unwrap();
        println!(
            "{spec:<12} p = {} total level = {} hc = {}",
            sym_order_count(&spec).unwrap(),
            sym_total_level(&spec).unwrap(),
            sym_hc(&spec).unwrap()
        );
    }
}
