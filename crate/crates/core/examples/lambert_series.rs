//! The exact series toolbox: Lambert W, its powers, and the truncated
//! exp/log/compose machinery everything else is built on.
//!
//! ```text
//! cargo run --example lambert_series
//! ```

use hurwitz_wedge::rings::{rat, ratio};
use hurwitz_wedge::series::{lambert_w, w_power_ratio, TruncSeries};

fn main() {
    let n = 12;
    let w = lambert_w(n);
    print!("W(z) =");
    for k in 1..=6 {
        print!(" + ({}) z^{}", w.coeff(k), k);
    }
    println!(" + ...");

    // the defining functional equation, checked exactly
    let we_w = w.mul(&w.exp());
    println!(
        "W(z) e^W(z) - z = {:?}",
        we_w.sub(&TruncSeries::var(n))
    );

    // fractional powers of W(z)/z multiply like powers
    let half = w_power_ratio(&ratio(1, 2), n);
    let whole = w_power_ratio(&rat(1), n);
    println!(
        "(W/z)^(1/2) squared equals (W/z): {}",
        if half.mul(&half) == whole { "yes" } else { "NO" }
    );

    // exp and log are exact inverses on series with the right constant term
    let mut f = TruncSeries::zero(n);
    f.set_coeff(1, rat(3));
    f.set_coeff(4, ratio(-7, 2));
    println!(
        "log(exp(f)) == f for f = 3z - 7/2 z^4: {}",
        if f.exp().log() == f { "yes" } else { "NO" }
    );

    // composition: substituting -z into W gives the tree function
    let tree = TruncSeries::compose(&w, &TruncSeries::monomial(n, rat(-1), 1));
    print!("tree function T(z) = -W(-z) =");
    for k in 1..=5 {
        print!(" + ({}) z^{}", -tree.coeff(k), k);
    }
    println!(" + ...   (coefficients k^(k-1)/k!)");
}
