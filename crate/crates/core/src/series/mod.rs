//! Truncated formal power series over a pluggable commutative coefficient
//! ring, plus the Lambert W expansions used by the spectral and quantum
//! layers, and a multivariate series in power-sum variables for the log-Z
//! oracle.
//!
//! A [`TruncSeries`] of order `N` stores coefficients of `z^0 .. z^N`
//! exactly; every operation truncates at order `N` and two series are equal
//! exactly when all stored coefficients are equal. The coefficient ring is
//! a type parameter (see [`Coeff`]) so the same engine serves both
//! [`Rational`] and [`crate::rings::ExpPoly`] coefficients.

mod multi;

pub use multi::MultiSeries;

use std::fmt;

use num_traits::{One, Zero};

use crate::rings::{rat, rational_pow, Coeff, Rational};

/// A power series truncated at a fixed order, with exact coefficients.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncSeries<C> {
    /// The zero series of order `n` (stores `n + 1` coefficients).
    pub fn zero(n: usize) -> Self {
        TruncSeries {
            coeffs: vec![C::zero(); n + 1],
        }
    }

    /// The constant series `1` of order `n`.
    pub fn one(n: usize) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = C::one();
        s
    }

    /// The monomial `c * z^k` of order `n`.
    pub fn monomial(n: usize, c: C, k: usize) -> Self {
        let mut s = Self::zero(n);
        if k <= n {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity series `z`.
    pub fn var(n: usize) -> Self {
        Self::monomial(n, C::one(), 1)
    }

    /// Build from a coefficient function.
    pub fn from_fn(n: usize, f: impl FnMut(usize) -> C) -> Self {
        TruncSeries {
            coeffs: (0..=n).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    /// Overwrite one coefficient in place. Used by the soundness tests to
    /// corrupt a series and check that the verifiers notice.
    pub fn set_coeff(&mut self, k: usize, c: C) {
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn assert_same_order(&self, rhs: &Self) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "series truncation orders must match"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_order(rhs);
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncSeries { coeffs: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(r)).collect(),
        }
    }

    /// Multiply by `z^k`, pushing content past the order off the end.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut s = Self::zero(n);
        if k <= n {
            for i in 0..=(n - k) {
                s.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        s
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Truncated composition `outer(inner)`. The inner series must have
    /// zero constant term, otherwise composition is not a finite operation
    /// order by order.
    pub fn compose(outer: &Self, inner: &Self) -> Self {
        outer.assert_same_order(inner);
        assert!(
            inner.coeffs[0].is_zero(),
            "composition requires zero constant term in the inner series"
        );
        let n = outer.order();
        // Horner evaluation from the top coefficient down.
        let mut acc = Self::monomial(n, outer.coeffs[n].clone(), 0);
        for k in (0..n).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + outer.coeffs[k].clone();
        }
        acc
    }

    /// Truncated exponential of a series with zero constant term, via the
    /// first-order recurrence `g' = f' g`.
    pub fn exp(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "exp requires zero constant term");
        let n = self.order();
        let mut g = Self::zero(n);
        g.coeffs[0] = C::one();
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let t = self.coeffs[k].scale(&rat(k as i64));
                acc = acc + t * g.coeffs[m - k].clone();
            }
            g.coeffs[m] = acc.scale(&ratio_inv(m));
        }
        g
    }

    /// Truncated logarithm of a series with constant term 1, via
    /// `h' = g'/g` in recurrence form.
    pub fn log(&self) -> Self {
        assert!(self.coeffs[0].is_one(), "log requires constant term 1");
        let n = self.order();
        let mut h = Self::zero(n);
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&rat(m as i64));
            for k in 1..m {
                let t = h.coeffs[k].scale(&rat(k as i64));
                acc = acc - t * self.coeffs[m - k].clone();
            }
            h.coeffs[m] = acc.scale(&ratio_inv(m));
        }
        h
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Self {
        assert!(self.coeffs[0].is_one(), "inverse requires constant term 1");
        let n = self.order();
        let mut g = Self::zero(n);
        g.coeffs[0] = C::one();
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                acc = acc + self.coeffs[k].clone() * g.coeffs[m - k].clone();
            }
            g.coeffs[m] = -acc;
        }
        g
    }

    /// Apply the Euler operator `z d/dz` (multiply coefficient `k` by `k`).
    pub fn euler_derivative(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&rat(k as i64)))
                .collect(),
        }
    }
}

fn ratio_inv(m: usize) -> Rational {
    use num_bigint::BigInt;
    Rational::new(BigInt::one(), BigInt::from(m))
}

impl<C: Coeff> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})*z^{}", c, k)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

/// The principal-branch Lambert W series: the coefficient of `z^n` is
/// `(-1)^{n+1} n^{n-1} / n!`, so `W(z) e^{W(z)} = z`.
pub fn lambert_w(n: usize) -> TruncSeries<Rational> {
    assert!(n >= 1);
    let mut fact = rat(1);
    TruncSeries::from_fn(n, |k| {
        if k == 0 {
            return rat(0);
        }
        fact *= rat(k as i64);
        let mag = rational_pow(&rat(k as i64), k as i64 - 1) / &fact;
        if k % 2 == 0 {
            -mag
        } else {
            mag
        }
    })
}

/// The series `(W(x)/x)^alpha = sum_n alpha (n+alpha)^{n-1} / n! (-x)^n`,
/// valid for any nonzero rational exponent `alpha`.
pub fn w_power_ratio(alpha: &Rational, n: usize) -> TruncSeries<Rational> {
    assert!(!alpha.is_zero(), "w_power_ratio requires alpha != 0");
    let mut fact = rat(1);
    TruncSeries::from_fn(n, |k| {
        if k > 0 {
            fact *= rat(k as i64);
        }
        let base = rat(k as i64) + alpha;
        let mut c = alpha * rational_pow(&base, k as i64 - 1) / &fact;
        if k % 2 == 1 {
            c = -c;
        }
        c
    })
}

/// The series `zeta(z)/z` where `zeta(z) = e^{z/2} - e^{-z/2}`; a unit
/// power series, which lets the Laurent factor `1/zeta` be handled without
/// a general Laurent type.
pub fn zeta_over_z(n: usize) -> TruncSeries<Rational> {
    // zeta(z)/z = sum_{j>=0} z^{2j} / (4^j (2j+1)!)
    let mut denom = rat(1);
    TruncSeries::from_fn(n, |k| {
        if k % 2 == 1 {
            return rat(0);
        }
        if k > 0 {
            denom *= rat(4 * (k * (k + 1)) as i64);
        }
        denom.recip()
    })
}

/// The power series `zeta(k z)/zeta(z)`; equals `k + O(z^2)` and is the
/// central scalar in the `k + l = 0` case of the E-operator commutator.
pub fn zeta_ratio(k: i64, n: usize) -> TruncSeries<Rational> {
    if k == 0 {
        return TruncSeries::zero(n);
    }
    // zeta(kz)/zeta(z) = k * [zeta(kz)/(kz)] / [zeta(z)/z]
    let base = zeta_over_z(n);
    let scaled = TruncSeries::from_fn(n, |j| base.coeff(j) * rational_pow(&rat(k), j as i64));
    scaled.mul(&base.inverse()).scale_rational(&rat(k))
}
