//! Exact hamiltonian chromatic number of small block graphs by ordering
//! search, compared with the lower bound.

use std::time::Duration;

use blockhc::prelude::*;

fn main() {
    let graphs = [
        ("star(4)", gen_star(4).unwrap()),
        ("path(6)", gen_path(6).unwrap()),
        ("union(4,2)", gen_union(4, 2).unwrap()),
        ("random", (0..).map(|s| gen_random_block_graph(s, 9, 3, 3)).find(|g| g.order() >= 8).unwrap()),
    ];
    let budget = SearchBudget {
        time_limit: Some(Duration::from_secs(20)),
        stop_at_lower_bound: false,
        ..Default::default()
    };
    for (name, g) in graphs {
        match exact_hc(&g, &budget) {
            Ok(r) => println!(
                "{name:<11} p = {:<2} hc = {:<3} lower bound = {:<3} nodes = {}  witness {:?}",
                g.order(),
                r.value,
                r.lower_bound,
                r.nodes,
                r.witness.colors
            ),
            Err(e) => println!("{name:<11} {e}"),
        }
    }
}
