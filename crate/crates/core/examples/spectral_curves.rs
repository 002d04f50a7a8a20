//! Build the spectral curve series y(x) of each family and verify the
//! curve equation `y = x^q exp(q y^r)` as an exact truncated identity,
//! then match `x dF_{0,1}/dx` against y(x) using connected Hurwitz
//! numbers.
//!
//! ```text
//! cargo run --example spectral_curves
//! ```

use hurwitz_wedge::hurwitz::HurwitzEngine;
use hurwitz_wedge::spectral::{omega01_match, verify_spectral_equation, SpectralFamily};

fn main() {
    // the simple-Hurwitz case is the classical Lambert curve x = y e^{-y};
    // y(x) is the tree function
    let fam = SpectralFamily::new(1, 1);
    let y = fam.y_series(8);
    print!("y(x) for (r,q) = (1,1):");
    for e in 1..=8 {
        print!(" + ({}) x^{}", y.coeff(e), e);
    }
    println!();

    let fam = SpectralFamily::new(2, 3);
    let y = fam.y_series(22);
    print!("y(x) for (r,q) = (2,3):");
    for e in fam.support(22) {
        print!(" + ({}) x^{}", y.coeff(e), e);
    }
    println!();
    println!();

    for r in 1..=3u32 {
        for q in 1..=3u32 {
            let fam = SpectralFamily::new(r, q);
            match verify_spectral_equation(fam, 40) {
                Ok(()) => println!(
                    "x = y^(1/{q}) e^(-y^{r})  <=>  y = x^{q} e^({q} y^{r}): verified to x^40"
                ),
                Err(e) => println!("FAILED: {}", e),
            }
        }
    }

    println!();
    let mut engine = HurwitzEngine::new();
    for (r, q) in [(1u32, 1u32), (2, 1), (1, 2), (2, 2)] {
        let fam = SpectralFamily::new(r, q);
        match omega01_match(fam, 4, &mut engine) {
            Ok(()) => println!(
                "omega_(0,1) = y dx/x matches connected Hurwitz numbers for (r,q) = ({},{})",
                r, q
            ),
            Err(e) => println!("FAILED: {}", e),
        }
    }
}
