//! Verify the quantum curves: the family operators annihilate the
//! principal specialization of the partition function, in both the
//! simplified and the raw (ordered-product) forms.
//!
//! ```text
//! cargo run --example quantum_curves
//! ```

use hurwitz_wedge::quantum::{
    apply, fmt_exponent2, operators_agree_on_monomials, quantum_operator, verify_annihilation,
    verify_recurrence, z_principal, OperatorForm,
};
use hurwitz_wedge::spectral::SpectralFamily;

fn main() {
    // the first few terms of the principal specialization for (r,q)=(1,2):
    // coefficients are exponential polynomials in the genus parameter
    let fam = SpectralFamily::new(1, 2);
    let z = z_principal(fam, 8);
    println!("Z(x; lambda) for (r,q) = (1,2), truncated at x^8:");
    for (e2, c) in z.iter() {
        println!("  x^{:>2} : {}", fmt_exponent2(*e2), c);
    }

    // applying the annihilating operator wipes out every coefficient in
    // the guaranteed-complete range
    let op = quantum_operator(fam, OperatorForm::Simplified);
    let image = apply(&op, &z);
    let residuals: Vec<_> = image
        .iter()
        .filter(|(e2, _)| **e2 <= 2 * (8 - 2))
        .collect();
    println!();
    println!(
        "operator applied to Z: {} nonzero coefficients below the truncation edge",
        residuals.len()
    );

    println!();
    for r in 1..=3u32 {
        for q in 1..=3u32 {
            let fam = SpectralFamily::new(r, q);
            let simplified = verify_annihilation(fam, 30, OperatorForm::Simplified);
            let raw = verify_annihilation(fam, 30, OperatorForm::Raw);
            let agree = operators_agree_on_monomials(
                &quantum_operator(fam, OperatorForm::Simplified),
                &quantum_operator(fam, OperatorForm::Raw),
                15,
            );
            println!(
                "(r,q) = ({},{}): annihilation {} / raw {} / forms agree on monomials {}",
                r,
                q,
                ok(simplified.is_ok()),
                ok(raw.is_ok()),
                ok(agree.is_ok()),
            );
        }
    }

    println!();
    for (r, q) in [(1u32, 1u32), (2, 1), (3, 2)] {
        let res = verify_recurrence(SpectralFamily::new(r, q), 20);
        println!(
            "coefficient recurrence lambda q (d+1) a_(d+1) = x^q exp(...) a_d, \
             (r,q) = ({},{}), d <= 20: {}",
            r,
            q,
            ok(res.is_ok())
        );
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "verified"
    } else {
        "FAILED"
    }
}
