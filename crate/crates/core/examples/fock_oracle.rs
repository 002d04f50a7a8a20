//! Poke at the infinite-wedge model directly: ribbon moves, diagonal
//! E-operator eigenvalues, commutation relations, and the brute-force
//! disconnected numbers it produces.
//!
//! ```text
//! cargo run --example fock_oracle
//! ```

use hurwitz_wedge::fock::{
    alpha, charge_zero_states, e_tilde_z, verify_commutator, verify_vacuum_zeta_identity,
    FockVector, MayaState,
};
use hurwitz_wedge::hurwitz::{disconnected_fock, HurwitzEngine};
use hurwitz_wedge::partitions::Partition;
use hurwitz_wedge::rings::Rational;

fn show(v: &FockVector<Rational>) -> String {
    let terms: Vec<String> = v
        .iter()
        .map(|(s, c)| format!("({}) v_({})", c, s.partition()))
        .collect();
    terms.join(" + ")
}

fn main() {
    // bosonic modes add and remove border strips with signs
    let vacuum = FockVector::<Rational>::vacuum();
    println!("alpha_-1 |0>          = {}", show(&alpha(-1, &vacuum)));
    println!("alpha_-2 |0>          = {}", show(&alpha(-2, &vacuum)));
    println!(
        "alpha_-2 alpha_-2 |0> = {}",
        show(&alpha(-2, &alpha(-2, &vacuum)))
    );

    // the operator E~_0(z) is diagonal; its z-expansion on v_lambda carries
    // the shifted power sums of lambda
    let v = FockVector::<Rational>::basis(MayaState::from_partition(Partition::new(vec![3, 1])));
    let diag = e_tilde_z(0, 4, &v);
    println!();
    println!("E~_0(z) v_(3,1) = {:?}", diag);

    // commutation relations on every basis state of energy <= 4
    let states = charge_zero_states(4);
    println!();
    for (k, l) in [(1i64, -1i64), (2, 3), (-2, 2), (0, 2)] {
        let ok = verify_commutator(k, l, 4, &states).is_ok();
        println!(
            "[E~_{}(w), E~_{}(z)] = zeta(kz-lw) E_{}(z+w) on {} states: {}",
            k,
            l,
            k + l,
            states.len(),
            if ok { "verified" } else { "FAILED" }
        );
    }
    println!(
        "zeta(z) E_0(z)|0> = |0> to z-order 10: {}",
        if verify_vacuum_zeta_identity(10) {
            "verified"
        } else {
            "FAILED"
        }
    );

    // the whole point: disconnected numbers computed with no characters
    // agree with the character-formula engine
    println!();
    let mut engine = HurwitzEngine::new();
    for (m, mu, r, q) in [
        (1u32, vec![2u32], 1u32, 1u32),
        (2, vec![2, 1, 1], 1, 1),
        (1, vec![4], 1, 2),
        (2, vec![3], 2, 1),
    ] {
        let mu = Partition::new(mu);
        let fock = disconnected_fock(m, &mu, r, q);
        let chars = engine.disconnected_vev(m, &mu, r, q);
        println!(
            "D(m={}, mu=({}), r={}, q={}): fock {} vs characters {}  {}",
            m,
            mu,
            r,
            q,
            fock,
            chars,
            if fock == chars { "agree" } else { "MISMATCH" }
        );
    }
}
