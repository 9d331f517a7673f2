//! Detour profile and general lower bound of a block graph given as JSON
//! (`{"p":..,"blocks":[[..],..]}`), or of a small built-in example.
//!
//!     cargo run --example lower_bound_profile -- graph.json

use blockhc::prelude::*;

fn main() {
    let g = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).expect("readable graph file");
            GraphFile::from_json(&text).expect("graph JSON").to_graph().expect("block graph")
        }
        // two triangles and a pendant edge hanging off vertex 2
        None => BlockGraph::new(6, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5]]).unwrap(),
    };
    let profile = DetourProfile::compute(&g);
    println!("p = {}, blocks = {}", g.order(), g.blocks().len());
    println!("center {:?} (omega = {}), xi = {}", profile.center, profile.omega, profile.xi);
    for v in 0..g.order() {
        println!("  vertex {v}: ecc {} level {}", profile.ecc[v], profile.level(v));
    }
    println!("total level {}", profile.total_level);
    println!("lower bound {}", lower_bound(&g, &profile));
}
