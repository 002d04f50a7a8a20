//! Dequantize the annihilating operators: replacing the quantized momentum
//! by the spectral series y(x), each diagonal exponential by the
//! genus-parameter-free part of its exponent, and scalars by their
//! classical limits recovers the spectral curve `y - x^q exp(q y^r) = 0`.
//!
//! ```text
//! cargo run --example semiclassical_limit
//! ```

use hurwitz_wedge::quantum::{quantum_operator, semiclassical_check_with, OperatorForm};
use hurwitz_wedge::spectral::SpectralFamily;

fn main() {
    for r in 1..=3u32 {
        for q in 1..=3u32 {
            let fam = SpectralFamily::new(r, q);
            for form in [OperatorForm::Simplified, OperatorForm::Raw] {
                let op = quantum_operator(fam, form);
                let res = semiclassical_check_with(&op, fam, 40);
                println!(
                    "(r,q) = ({},{})  {:?} operator dequantizes to y - x^{} e^({} y^{}): {}",
                    r,
                    q,
                    form,
                    q,
                    q,
                    r,
                    match res {
                        Ok(()) => "verified to x^40".to_string(),
                        Err(e) => format!("FAILED: {}", e),
                    }
                );
            }
        }
    }
}
