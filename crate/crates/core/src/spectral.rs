//! The spectral curve of each Hurwitz family as an exact series identity.
//!
//! Each family `(r, q)` carries the plane curve `x = y^{1/q} e^{-y^r}`;
//! restated with integer exponents (raise to the q-th power and solve for
//! `y`) it reads `y = x^q exp(q y^r)`, and its unique formal solution with
//! `y = x^q + ...` comes from the Lambert W expansion. This module builds
//! that `y(x)` series, checks the curve equation to any order, and matches
//! the `(0,1)` free energy computed from Hurwitz numbers against
//! `y(x) dx/x` coefficientwise.

use std::fmt;

use num_traits::Zero;

use crate::hurwitz::{f01_coefficient, f01_exponent, HurwitzEngine, HurwitzParams};
use crate::partitions::Partition;
use crate::rings::{rat, ratio, Rational};
use crate::series::{w_power_ratio, TruncSeries};

/// A Hurwitz family seen through its spectral curve: `(1, q)` is q-double,
/// `(r, 1)` is r-spin, general `(r, q)` is the mixed case.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SpectralFamily {
    pub r: u32,
    pub q: u32,
}

impl SpectralFamily {
    pub fn new(r: u32, q: u32) -> Self {
        assert!(r >= 1 && q >= 1);
        SpectralFamily { r, q }
    }

    pub fn qdouble(q: u32) -> Self {
        Self::new(1, q)
    }

    pub fn rspin(r: u32) -> Self {
        Self::new(r, 1)
    }

    /// The series `y(x) = x^q ((W(-rq x^{rq})) / (-rq x^{rq}))^{1/r}`,
    /// i.e. the coefficient of `x^{q + n rq}` is
    /// `(1/r) (n + 1/r)^{n-1} (rq)^n / n!`.
    pub fn y_series(&self, order: usize) -> TruncSeries<Rational> {
        assert!(order >= self.q as usize, "order must be at least q");
        let alpha = ratio(1, self.r as i64);
        let ratio_series = w_power_ratio(&alpha, order);
        let inner = TruncSeries::monomial(
            order,
            rat(-((self.r * self.q) as i64)),
            (self.r * self.q) as usize,
        );
        TruncSeries::compose(&ratio_series, &inner).shift_up(self.q as usize)
    }

    /// Exponents at which `y(x)` has support: `q + n r q`.
    pub fn support(&self, order: usize) -> Vec<usize> {
        (0..)
            .map(|n| (self.q + n * self.r * self.q) as usize)
            .take_while(|&e| e <= order)
            .collect()
    }
}

/// First failing coefficient of a spectral-curve check.
#[derive(Clone, Debug)]
pub struct SpectralMismatch {
    pub r: u32,
    pub q: u32,
    pub exponent: usize,
    pub residual: Rational,
}

impl fmt::Display for SpectralMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "spectral curve (r={}, q={}): first failing coefficient at x^{}, residual {}",
            self.r, self.q, self.exponent, self.residual
        )
    }
}

/// Check `y - x^q exp(q y^r) = 0` for the family's own `y(x)` series.
pub fn verify_spectral_equation(
    family: SpectralFamily,
    order: usize,
) -> Result<(), SpectralMismatch> {
    verify_spectral_equation_for(&family.y_series(order), family)
}

/// Check `y - x^q exp(q y^r) = 0` for a caller-supplied series; the entry
/// point the soundness (mutation) tests use.
pub fn verify_spectral_equation_for(
    y: &TruncSeries<Rational>,
    family: SpectralFamily,
) -> Result<(), SpectralMismatch> {
    let exp_part = y
        .pow(family.r)
        .scale_rational(&rat(family.q as i64))
        .exp()
        .shift_up(family.q as usize);
    let residual = y.sub(&exp_part);
    match residual.valuation() {
        None => Ok(()),
        Some(e) => Err(SpectralMismatch {
            r: family.r,
            q: family.q,
            exponent: e,
            residual: residual.coeff(e).clone(),
        }),
    }
}

/// First failing coefficient of the `omega_{0,1}` match.
#[derive(Clone, Debug)]
pub struct Omega01Mismatch {
    pub r: u32,
    pub q: u32,
    pub exponent: usize,
    pub expected: Rational,
    pub got: Rational,
    /// which comparison failed: the closed form against y, or the
    /// connected Hurwitz numbers against the closed form
    pub stage: &'static str,
}

impl fmt::Display for Omega01Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "omega01 (r={}, q={}) {} mismatch at x^{}: expected {}, got {}",
            self.r, self.q, self.stage, self.exponent, self.expected, self.got
        )
    }
}

/// Match `x dF_{0,1}/dx` against `y(x)` coefficientwise.
///
/// Two independent inputs feed the left side: the closed-form coefficients
/// of the `(0,1)` free energy, and (for every term up to `n_max`) the
/// connected Hurwitz number `h_{0,(e)} / m!` computed by the character
/// engine. The check also insists that `y` vanishes away from the family
/// support.
#[allow(clippy::result_large_err)]
pub fn omega01_match(
    family: SpectralFamily,
    n_max: u32,
    engine: &mut HurwitzEngine,
) -> Result<(), Omega01Mismatch> {
    let (r, q) = (family.r, family.q);
    let n_lo = if r == 1 { 1 } else { 0 };
    let max_exp = f01_exponent(n_lo + n_max, r, q) as usize;
    let y = family.y_series(max_exp);
    let support = family.support(max_exp);

    // every coefficient of y off the support must vanish
    for e in 0..=max_exp {
        if !support.contains(&e) && !y.coeff(e).is_zero() {
            return Err(Omega01Mismatch {
                r,
                q,
                exponent: e,
                expected: rat(0),
                got: y.coeff(e).clone(),
                stage: "support",
            });
        }
    }

    for n in n_lo..=(n_lo + n_max) {
        let c = f01_coefficient(n, r, q);
        let e = f01_exponent(n, r, q) as usize;
        // x d/dx multiplies the x^e term of F by e
        let omega = rat(e as i64) * &c;
        if *y.coeff(e) != omega {
            return Err(Omega01Mismatch {
                r,
                q,
                exponent: e,
                expected: omega,
                got: y.coeff(e).clone(),
                stage: "closed-form",
            });
        }
        // independent route: the connected Hurwitz number at genus 0 with
        // one-part mu divided by m! reproduces the closed form
        let params = HurwitzParams::new(r, q, 0, Partition::new(vec![e as u32]))
            .expect("one-part (0,1) parameters are always valid");
        let m = params.branch_points();
        let mut mfact = rat(1);
        for j in 2..=m as i64 {
            mfact *= rat(j);
        }
        let h = engine.connected_hurwitz(&params).value / mfact;
        if h != c {
            return Err(Omega01Mismatch {
                r,
                q,
                exponent: e,
                expected: c,
                got: h,
                stage: "hurwitz",
            });
        }
    }
    Ok(())
}
