//! Compare the block-path detour distance with exhaustive longest-path search
//! on seeded random block graphs.

use blockhc::prelude::*;

fn main() {
    let mut pairs = 0;
    for seed in 0..50 {
        let g = gen_random_block_graph(seed, 9, 4, 3);
        for u in 0..g.order() {
            for v in 0..g.order() {
                let fast = detour_distance(&g, u, v);
                let slow = brute_longest_path(&g, u, v, &SearchBudget::default()).expect("small graph");
                assert_eq!(fast, slow, "seed {seed}, pair ({u}, {v})");
                pairs += 1;
            }
        }
    }
    println!("{pairs} vertex pairs agree");
}
