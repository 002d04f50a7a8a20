//! Tabulate all connected r-spin Hurwitz numbers up to a degree bound,
//! the same enumeration the `table` subcommand streams as JSON.
//!
//! ```text
//! cargo run --example hurwitz_table
//! ```

use hurwitz_wedge::hurwitz::{HurwitzEngine, HurwitzParams};
use hurwitz_wedge::partitions::partitions_of;

fn main() {
    let (r, q) = (2u32, 1u32);
    let max_degree = 5;
    let max_genus = 1;

    let mut engine = HurwitzEngine::new();
    println!("r = {}, q = {}, |mu| <= {}, g <= {}", r, q, max_degree, max_genus);
    println!("{:>8} {:>4} {:>10} {:>4}   value", "|mu|", "g", "mu", "m");
    for degree in 1..=max_degree {
        if degree % q != 0 {
            continue;
        }
        for g in 0..=max_genus {
            for mu in partitions_of(degree) {
                // skip parameter sets ruled out by Riemann-Hurwitz
                let Ok(params) = HurwitzParams::new(r, q, g, mu) else {
                    continue;
                };
                let h = engine.connected_hurwitz(&params);
                println!(
                    "{:>8} {:>4} {:>10} {:>4}   {}",
                    degree,
                    g,
                    format!("({})", params.mu()),
                    params.branch_points(),
                    h.value
                );
            }
        }
    }
}
