//! Exact scalar arithmetic: arbitrary-precision rationals, polynomials in
//! the genus parameter `lambda`, and the exponential-polynomial ring used as
//! the coefficient ring of the quantum-curve checks.
//!
//! An [`ExpPoly`] is a finite sum of terms `c * lambda^k * exp(P(lambda))`
//! with rational `c`, integer `k` (negative powers allowed) and `P` a
//! rational polynomial with zero-free canonical storage. Two such terms are
//! like terms exactly when they share the pair `(k, P)`; since the functions
//! `lambda^k e^{P(lambda)}` for distinct `(k, P)` are linearly independent
//! over the rationals, an `ExpPoly` is zero if and only if its canonical
//! term set is empty. That makes equality decidable, which is what the
//! annihilation checks in [`crate::quantum`] rely on. The constant term of
//! an exponent is kept symbolic (`exp(c)` is transcendental for rational
//! `c != 0`, so folding it into the coefficient would lose exactness).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// The scalar for all combinatorial computations: an exact rational in
/// lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer power with negative exponents allowed. Panics on `0^k`
/// with `k < 0`.
pub fn rational_pow(base: &Rational, exp: i64) -> Rational {
    assert!(
        exp >= 0 || !base.is_zero(),
        "zero cannot be raised to a negative power"
    );
    base.pow(exp as i32)
}

/// The operations a commutative coefficient ring must provide for the
/// series engine: ring arithmetic plus an embedding of the rationals.
/// Implemented by [`Rational`], [`ExpPoly`] and the bivariate polynomials
/// of the Fock module.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;

    fn scale(&self, r: &Rational) -> Self {
        self.clone() * Self::from_rational(r)
    }
}

impl Coeff for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

/// A polynomial in the genus parameter `lambda` with rational coefficients
/// and non-negative exponents. Zero coefficients are never stored, so the
/// derived equality is canonical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct LambdaPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly::default()
    }

    /// The monomial `c * lambda^k`.
    pub fn monomial(c: Rational, k: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        LambdaPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(|| rat(0))
    }

    /// Constant term `P(0)`.
    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &Rational)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = rat(0);
        for (k, c) in &self.coeffs {
            acc += c * rational_pow(x, *k as i64);
        }
        acc
    }
}

impl Add for &LambdaPoly {
    type Output = LambdaPoly;

    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &rhs.coeffs {
            let entry = coeffs.entry(*k).or_insert_with(|| rat(0));
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(k);
            }
        }
        LambdaPoly { coeffs }
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;

    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Sub for &LambdaPoly {
    type Output = LambdaPoly;

    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        self + &(-rhs)
    }
}

impl Mul for &LambdaPoly {
    type Output = LambdaPoly;

    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut coeffs: BTreeMap<u32, Rational> = BTreeMap::new();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                let entry = coeffs.entry(ka + kb).or_insert_with(|| rat(0));
                *entry += ca * cb;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LambdaPoly { coeffs }
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match (*k, a.is_one()) {
                (0, _) => write!(f, "{}", a)?,
                (1, true) => write!(f, "lambda")?,
                (1, false) => write!(f, "{}*lambda", a)?,
                (_, true) => write!(f, "lambda^{}", k)?,
                (_, false) => write!(f, "{}*lambda^{}", a, k)?,
            }
        }
        Ok(())
    }
}

/// A finite sum of terms `c * lambda^k * exp(P(lambda))` in canonical form:
/// no two terms share the key `(k, P)` and no term has a zero coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExpPoly {
    terms: BTreeMap<(i64, LambdaPoly), Rational>,
}

impl ExpPoly {
    /// The single term `c * lambda^k * exp(P)`.
    pub fn term(c: Rational, k: i64, p: LambdaPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((k, p), c);
        }
        ExpPoly { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, LambdaPoly::zero())
    }

    /// The monomial `c * lambda^k`.
    pub fn lambda_pow(c: Rational, k: i64) -> Self {
        Self::term(c, k, LambdaPoly::zero())
    }

    /// The pure exponential `exp(P)`.
    pub fn exp_of(p: LambdaPoly) -> Self {
        Self::term(rat(1), 0, p)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, LambdaPoly), &Rational)> {
        self.terms.iter()
    }

    /// The commutative symbol in the semiclassical limit `lambda -> 0`:
    /// terms with a positive `lambda` power vanish and a term with `k = 0`
    /// and `P(0) = 0` contributes its rational coefficient. Returns `None`
    /// when the limit leaves the rationals (a negative power of `lambda`,
    /// or a residual `exp(c)` with `c != 0`, which is transcendental).
    pub fn semiclassical_limit(&self) -> Option<Rational> {
        let mut acc = rat(0);
        for ((k, p), c) in &self.terms {
            match k.cmp(&0) {
                std::cmp::Ordering::Greater => continue,
                std::cmp::Ordering::Less => return None,
                std::cmp::Ordering::Equal => {
                    if !p.constant_term().is_zero() {
                        return None;
                    }
                    acc += c;
                }
            }
        }
        Some(acc)
    }
}

impl Add for &ExpPoly {
    type Output = ExpPoly;

    fn add(self, rhs: &ExpPoly) -> ExpPoly {
        let mut terms = self.terms.clone();
        for (key, c) in &rhs.terms {
            let entry = terms.entry(key.clone()).or_insert_with(|| rat(0));
            *entry += c;
            if entry.is_zero() {
                terms.remove(key);
            }
        }
        ExpPoly { terms }
    }
}

impl Neg for &ExpPoly {
    type Output = ExpPoly;

    fn neg(self) -> ExpPoly {
        ExpPoly {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Sub for &ExpPoly {
    type Output = ExpPoly;

    fn sub(self, rhs: &ExpPoly) -> ExpPoly {
        self + &(-rhs)
    }
}

impl Mul for &ExpPoly {
    type Output = ExpPoly;

    fn mul(self, rhs: &ExpPoly) -> ExpPoly {
        let mut terms: BTreeMap<(i64, LambdaPoly), Rational> = BTreeMap::new();
        for ((ka, pa), ca) in &self.terms {
            for ((kb, pb), cb) in &rhs.terms {
                let key = (ka + kb, pa + pb);
                let entry = terms.entry(key).or_insert_with(|| rat(0));
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        ExpPoly { terms }
    }
}

impl Add for ExpPoly {
    type Output = ExpPoly;
    fn add(self, rhs: ExpPoly) -> ExpPoly {
        &self + &rhs
    }
}

impl Sub for ExpPoly {
    type Output = ExpPoly;
    fn sub(self, rhs: ExpPoly) -> ExpPoly {
        &self - &rhs
    }
}

impl Mul for ExpPoly {
    type Output = ExpPoly;
    fn mul(self, rhs: ExpPoly) -> ExpPoly {
        &self * &rhs
    }
}

impl Neg for ExpPoly {
    type Output = ExpPoly;
    fn neg(self) -> ExpPoly {
        -&self
    }
}

impl Zero for ExpPoly {
    fn zero() -> Self {
        ExpPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ExpPoly {
    fn one() -> Self {
        ExpPoly::constant(rat(1))
    }
}

impl Coeff for ExpPoly {
    fn from_rational(r: &Rational) -> Self {
        ExpPoly::constant(r.clone())
    }
}

impl fmt::Debug for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ExpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((k, p), c) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", c)?;
            if *k != 0 {
                write!(f, "*lambda^{}", k)?;
            }
            if !p.is_zero() {
                write!(f, "*exp({})", p)?;
            }
        }
        Ok(())
    }
}
