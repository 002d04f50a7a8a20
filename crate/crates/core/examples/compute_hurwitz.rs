//! Compute connected Hurwitz numbers in the three families.
//!
//! ```text
//! cargo run --example compute_hurwitz
//! ```

use hurwitz_wedge::hurwitz::{HurwitzEngine, HurwitzParams};
use hurwitz_wedge::partitions::Partition;

fn main() {
    let mut engine = HurwitzEngine::new();

    println!("simple Hurwitz numbers (r = 1, q = 1), genus 0:");
    for (mu, label) in [
        (vec![1], "mu = (1)"),
        (vec![2], "mu = (2)"),
        (vec![3], "mu = (3)"),
        (vec![2, 1], "mu = (2,1)"),
        (vec![1, 1, 1], "mu = (1,1,1)"),
    ] {
        let params = HurwitzParams::new(1, 1, 0, Partition::new(mu)).unwrap();
        let h = engine.connected_hurwitz(&params);
        println!(
            "  {:10} m = {}   h = {}",
            label,
            params.branch_points(),
            h.value
        );
    }

    println!();
    println!("q-double (r = 1, q = 2), r-spin (r = 2, q = 1) and mixed (r = 2, q = 2):");
    for (r, q, mu) in [
        (1u32, 2u32, vec![2]),
        (1, 2, vec![4]),
        (2, 1, vec![3]),
        (2, 1, vec![1, 1, 1]),
        (2, 2, vec![2]),
        (2, 2, vec![4, 4]),
    ] {
        let params = HurwitzParams::new(r, q, 0, Partition::new(mu)).unwrap();
        let h = engine.connected_hurwitz(&params);
        println!(
            "  h^({},{})_(0; {})  m = {}   value = {}",
            r,
            q,
            params.mu(),
            params.branch_points(),
            h.value
        );
    }

    println!();
    println!("higher genus, r = 1, q = 1, mu = (2):");
    for genus in 0..=3u32 {
        let params = HurwitzParams::new(1, 1, genus, Partition::new(vec![2])).unwrap();
        let h = engine.connected_hurwitz(&params);
        println!(
            "  g = {}  m = {:2}   h = {}",
            genus,
            params.branch_points(),
            h.value
        );
    }
}
