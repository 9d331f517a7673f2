//! Color a symmetric block graph with the ordering construction and check it.
//!
//!     cargo run --example symmetric_coloring -- 4 2 5

use blockhc::prelude::*;

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let (m, kappa, d) = match args[..] {
        [m, kappa, d] => (m, kappa, d),
        _ => (4, 2, 4),
    };
    let spec = SymmetricSpec::new(m, kappa, d).expect("valid parameters");
    let (g, coords) = gen_symmetric(spec).expect("generator accepts spec");
    let profile = DetourProfile::compute(&g);
    let ordering = sym_ordering(&g, &coords, &profile).expect("coordinates fit");
    let coloring = coloring_from_ordering(&g, &profile, &ordering).expect("gaps are non-negative");
    let report = check_ordering_conditions(&g, &profile, &ordering).expect("ordering is a permutation");

    println!("{spec}: p = {}, omega = {}, xi = {}", g.order(), profile.omega, profile.xi);
    println!("span        {}", coloring.span());
    println!("lower bound {}", lower_bound(&g, &profile));
    match sym_hc(&spec) {
        Ok(v) => println!("closed form {v}"),
        Err(e) => println!("closed form n/a ({e})"),
    }
    println!("valid       {}", is_valid_coloring(&g, &coloring.colors));
    println!(
        "conditions  endpoints {} branches {} half-order {}",
        report.endpoints.pass, report.branches.pass, report.half_order.pass
    );
}
