//! Sparse multivariate series in the power-sum variables `p_1, p_2, ...`
//! (variable `p_i` carries weight `i`) and one auxiliary branch-point
//! counting variable `t` of weight zero. Terms are truncated at a total
//! p-weight bound and a separate t-degree bound.
//!
//! This is the carrier of the log-Z oracle: the partition function of a
//! Hurwitz family is assembled as an explicit [`MultiSeries`] and its
//! multivariate logarithm recovers the connected numbers.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rings::{rat, Rational};

/// A truncated series over the rationals in the `p_i` and `t`. Terms are
/// keyed by `(t_pow, mu)` with `mu` the partition recording the power-sum
/// factors, sorted weakly decreasing.
#[derive(Clone, PartialEq)]
pub struct MultiSeries {
    weight_bound: u32,
    t_bound: u32,
    terms: BTreeMap<(u32, Vec<u32>), Rational>,
}

impl MultiSeries {
    pub fn zero(weight_bound: u32, t_bound: u32) -> Self {
        MultiSeries {
            weight_bound,
            t_bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(weight_bound: u32, t_bound: u32, c: Rational) -> Self {
        let mut s = Self::zero(weight_bound, t_bound);
        s.add_term(0, &[], c);
        s
    }

    pub fn weight_bound(&self) -> u32 {
        self.weight_bound
    }

    pub fn t_bound(&self) -> u32 {
        self.t_bound
    }

    /// Add `c * t^t_pow * p_mu` in place, dropping it silently when it
    /// exceeds either truncation bound.
    pub fn add_term(&mut self, t_pow: u32, mu: &[u32], c: Rational) {
        if c.is_zero() || t_pow > self.t_bound {
            return;
        }
        let mut parts = mu.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.iter().sum::<u32>() > self.weight_bound {
            return;
        }
        let key = (t_pow, parts);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Coefficient of `t^t_pow * p_mu`.
    pub fn coeff(&self, t_pow: u32, mu: &[u32]) -> Rational {
        let mut parts = mu.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        self.terms
            .get(&(t_pow, parts))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, Vec<u32>), &Rational)> {
        self.terms.iter()
    }

    fn assert_same_bounds(&self, rhs: &Self) {
        assert_eq!(self.weight_bound, rhs.weight_bound, "weight bound mismatch");
        assert_eq!(self.t_bound, rhs.t_bound, "t-degree bound mismatch");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same_bounds(rhs);
        let mut out = self.clone();
        for ((t, mu), c) in &rhs.terms {
            out.add_term(*t, mu, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiSeries {
            weight_bound: self.weight_bound,
            t_bound: self.t_bound,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_bounds(rhs);
        let mut out = Self::zero(self.weight_bound, self.t_bound);
        for ((ta, ma), ca) in &self.terms {
            for ((tb, mb), cb) in &rhs.terms {
                let t = ta + tb;
                if t > self.t_bound {
                    continue;
                }
                let mut mu = ma.clone();
                mu.extend_from_slice(mb);
                out.add_term(t, &mu, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(self.weight_bound, self.t_bound);
        }
        MultiSeries {
            weight_bound: self.weight_bound,
            t_bound: self.t_bound,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * r)).collect(),
        }
    }

    /// Multivariate truncated logarithm; the constant term must be 1.
    /// Since every non-constant term has positive p-weight or positive
    /// t-degree, the expansion terminates after `weight_bound + t_bound`
    /// powers.
    pub fn log(&self) -> Self {
        assert!(
            self.coeff(0, &[]).is_one(),
            "multivariate log requires constant term 1"
        );
        let mut u = self.clone();
        u.add_term(0, &[], -Rational::one());
        let mut out = Self::zero(self.weight_bound, self.t_bound);
        let mut upow = u.clone();
        for j in 1..=(self.weight_bound + self.t_bound + 1) {
            if upow.is_zero() {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            out = out.add(&upow.scale(&(rat(sign) / rat(j as i64))));
            upow = upow.mul(&u);
        }
        out
    }

    /// Multivariate truncated exponential; the constant term must be 0.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeff(0, &[]).is_zero(),
            "multivariate exp requires zero constant term"
        );
        let mut out = Self::constant(self.weight_bound, self.t_bound, Rational::one());
        let mut upow = self.clone();
        let mut fact = Rational::one();
        for j in 1..=(self.weight_bound + self.t_bound + 1) {
            if upow.is_zero() {
                break;
            }
            fact *= rat(j as i64);
            out = out.add(&upow.scale(&fact.recip()));
            upow = upow.mul(self);
        }
        out
    }
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((t, mu), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if *t > 0 {
                write!(f, "*t^{}", t)?;
            }
            for p in mu {
                write!(f, "*p{}", p)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::ratio;

    #[test]
    fn log_of_one_is_zero() {
        let one = MultiSeries::constant(4, 3, Rational::one());
        assert!(one.log().is_zero());
    }

    #[test]
    fn log_of_exp_p1_t() {
        let mut f = MultiSeries::zero(4, 4);
        f.add_term(1, &[1], Rational::one());
        let z = f.exp();
        // exp(p1 t) has p1^k t^k / k! terms
        assert_eq!(z.coeff(2, &[1, 1]), ratio(1, 2));
        assert_eq!(z.log(), f);
    }

    #[test]
    fn mul_respects_bounds() {
        let mut a = MultiSeries::zero(3, 2);
        a.add_term(1, &[2], Rational::one());
        let sq = a.mul(&a);
        // p-weight 4 > 3: dropped entirely
        assert!(sq.is_zero());
    }

    #[test]
    fn exp_log_round_trip_mixed_terms() {
        let mut f = MultiSeries::zero(5, 4);
        f.add_term(1, &[1], ratio(1, 2));
        f.add_term(0, &[2, 1], rat(3));
        f.add_term(2, &[], ratio(-2, 7));
        assert_eq!(f.exp().log(), f);
    }
}
