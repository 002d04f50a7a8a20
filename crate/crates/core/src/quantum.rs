//! Exact operator algebra for the quantum curves.
//!
//! The annihilating operators of all three families are words in three
//! generators: multiplication by a (half-integer) power of `x`, the Euler
//! operator `y^ = lambda x d/dx`, and diagonal exponentials
//! `exp(R(lambda, y^))` that act on a monomial `x^e` by the scalar
//! `exp(R(lambda, lambda e))`. Every exponential appearing in the curve
//! operators becomes diagonal after the conjugation rule
//! `y^ x^a = x^a (y^ + a lambda)`, so words of this shape are closed under
//! everything the verification needs and act exactly on truncated series.
//!
//! The series being annihilated is the principal specialization of the
//! partition function, whose coefficients live in the exponential
//! polynomial ring [`ExpPoly`]; that ring's decidable zero test is what
//! turns "the operator annihilates Z" into a finite exact check.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::rings::{rat, ratio, rational_pow, ExpPoly, LambdaPoly, Rational};
use crate::series::TruncSeries;
use crate::spectral::SpectralFamily;

/// A polynomial in `(lambda, y)` with rational coefficients: the exponent
/// of a diagonal exponential generator.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiagExponent {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl DiagExponent {
    pub fn zero() -> Self {
        DiagExponent::default()
    }

    /// The monomial `c * lambda^a * y^b`.
    pub fn monomial(c: Rational, lambda_pow: u32, y_pow: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((lambda_pow, y_pow), c);
        }
        DiagExponent { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            let entry = terms.entry(*k).or_insert_with(|| rat(0));
            *entry += c;
            if entry.is_zero() {
                terms.remove(k);
            }
        }
        DiagExponent { terms }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for ((la, ya), ca) in &self.terms {
            for ((lb, yb), cb) in &rhs.terms {
                let entry = terms.entry((la + lb, ya + yb)).or_insert_with(|| rat(0));
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        DiagExponent { terms }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        DiagExponent {
            terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = DiagExponent::monomial(rat(1), 0, 0);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division by `lambda`; every term must carry a positive
    /// `lambda` power.
    pub fn div_lambda(&self) -> Self {
        DiagExponent {
            terms: self
                .terms
                .iter()
                .map(|(&(l, y), c)| {
                    assert!(l >= 1, "exponent polynomial is not divisible by lambda");
                    ((l - 1, y), c.clone())
                })
                .collect(),
        }
    }

    /// Substitute `y = lambda * e`, producing the exponent polynomial in
    /// `lambda` alone.
    pub fn substitute(&self, e: &Rational) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (&(l, y), c) in &self.terms {
            let coeff = c * rational_pow(e, y as i64);
            out = &out + &LambdaPoly::monomial(coeff, l + y);
        }
        out
    }

    /// The `lambda -> 0` symbol: the `lambda`-free part as coefficients of
    /// powers of `y`.
    pub fn symbol_y_coeffs(&self) -> Vec<(u32, Rational)> {
        self.terms
            .iter()
            .filter(|((l, _), _)| *l == 0)
            .map(|(&(_, y), c)| (y, c.clone()))
            .collect()
    }
}

impl fmt::Debug for DiagExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((l, y), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if *l > 0 {
                write!(f, "*lambda^{}", l)?;
            }
            if *y > 0 {
                write!(f, "*y^{}", y)?;
            }
        }
        Ok(())
    }
}

/// One generator of an operator word.
#[derive(Clone, PartialEq, Debug)]
pub enum Gen {
    /// Multiply by `x^{a}` where `a = twice/2` may be a half-integer.
    MulX(i64),
    /// The quantized momentum `y^ = lambda x d/dx`.
    Y,
    /// The diagonal exponential `exp(R(lambda, y^))`.
    ExpDiag(DiagExponent),
}

/// An ordered product of generators (leftmost first, applied right to
/// left) with an overall exponential-polynomial scalar.
#[derive(Clone, PartialEq, Debug)]
pub struct Word {
    pub scalar: ExpPoly,
    pub gens: Vec<Gen>,
}

/// A formal sum of words.
#[derive(Clone, PartialEq, Debug)]
pub struct OperatorExpr {
    pub words: Vec<Word>,
}

/// Truncated series in `x` with exponents on the half-integer grid and
/// `ExpPoly` coefficients. Exponents are stored as twice their value;
/// everything above the truncation order is dropped, exponents below zero
/// are representable (they arise transiently inside words).
#[derive(Clone, PartialEq, Debug)]
pub struct XSeries {
    order2: i64,
    coeffs: BTreeMap<i64, ExpPoly>,
}

impl XSeries {
    pub fn zero(order: u32) -> Self {
        XSeries {
            order2: 2 * order as i64,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single term `c * x^{e2/2}`.
    pub fn monomial(order: u32, c: ExpPoly, e2: i64) -> Self {
        let mut s = Self::zero(order);
        s.add_term(e2, c);
        s
    }

    pub fn order(&self) -> u32 {
        (self.order2 / 2) as u32
    }

    pub fn add_term(&mut self, e2: i64, c: ExpPoly) {
        if c.is_zero() || e2 > self.order2 {
            return;
        }
        let entry = self.coeffs.entry(e2).or_insert_with(ExpPoly::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&e2);
        }
    }

    /// Coefficient at exponent `e2/2`.
    pub fn coeff2(&self, e2: i64) -> ExpPoly {
        self.coeffs.get(&e2).cloned().unwrap_or_else(ExpPoly::zero)
    }

    /// Overwrite the coefficient at `e2/2`; soundness tests use this to
    /// corrupt one term.
    pub fn set_coeff2(&mut self, e2: i64, c: ExpPoly) {
        self.coeffs.remove(&e2);
        self.add_term(e2, c);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &ExpPoly)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order2, rhs.order2, "truncation orders must match");
        let mut out = self.clone();
        for (&e2, c) in rhs.iter() {
            out.add_term(e2, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.order2, rhs.order2, "truncation orders must match");
        let mut out = self.clone();
        for (&e2, c) in rhs.iter() {
            out.add_term(e2, -c);
        }
        out
    }
}

/// Display a doubled exponent as `n` or `n/2`.
pub fn fmt_exponent2(e2: i64) -> String {
    if e2 % 2 == 0 {
        format!("{}", e2 / 2)
    } else {
        format!("{}/2", e2)
    }
}

/// Apply one word to a single term, returning the transformed term.
fn apply_word_to_term(word: &Word, e2: i64, c: &ExpPoly) -> (i64, ExpPoly) {
    let mut e2 = e2;
    let mut c = c.clone();
    for gen in word.gens.iter().rev() {
        match gen {
            Gen::MulX(a2) => e2 += a2,
            Gen::Y => {
                c = &c * &ExpPoly::lambda_pow(ratio(e2, 2), 1);
            }
            Gen::ExpDiag(r) => {
                c = &c * &ExpPoly::exp_of(r.substitute(&ratio(e2, 2)));
            }
        }
    }
    (e2, &c * &word.scalar)
}

/// Apply an operator expression to a truncated series.
pub fn apply(op: &OperatorExpr, f: &XSeries) -> XSeries {
    let mut out = XSeries::zero(f.order());
    for word in &op.words {
        for (&e2, c) in f.iter() {
            let (e2_new, c_new) = apply_word_to_term(word, e2, c);
            out.add_term(e2_new, c_new);
        }
    }
    out
}

/// The principal specialization of the partition function: term `d` is
/// `x^{qd} / (d! q^d lambda^d) * exp((lambda^r/(r+1)) ((qd - 1/2)^{r+1} -
/// (-1/2)^{r+1}))`, truncated at `x^order`.
pub fn z_principal(family: SpectralFamily, order: u32) -> XSeries {
    let (r, q) = (family.r, family.q);
    let mut out = XSeries::zero(order);
    let mut fact = rat(1);
    let mut qpow = rat(1);
    let mut d = 0u32;
    while q * d <= order {
        if d > 0 {
            fact *= rat(d as i64);
            qpow *= rat(q as i64);
        }
        let c = ExpPoly::term(
            (&fact * &qpow).recip(),
            -(d as i64),
            exponent_poly(r, q, d),
        );
        out.add_term(2 * (q * d) as i64, c);
        d += 1;
    }
    out
}

/// The exponent polynomial of the `d`-th term:
/// `(lambda^r / (r+1)) ((qd - 1/2)^{r+1} - (-1/2)^{r+1})`.
fn exponent_poly(r: u32, q: u32, d: u32) -> LambdaPoly {
    let a = ratio(2 * (q * d) as i64 - 1, 2);
    let b = ratio(-1, 2);
    let diff = (rational_pow(&a, r as i64 + 1) - rational_pow(&b, r as i64 + 1))
        / rat(r as i64 + 1);
    LambdaPoly::monomial(diff, r)
}

/// `(y + q lambda)` as a diagonal exponent polynomial.
fn y_plus_qlambda(q: u32) -> DiagExponent {
    DiagExponent::monomial(rat(1), 0, 1).add(&DiagExponent::monomial(rat(q as i64), 1, 0))
}

/// The evaluated (telescoped) exponent of the shift part:
/// `((y + q lambda)^{r+1} - y^{r+1}) / ((r+1) lambda)`.
pub fn shift_exponent_evaluated(r: u32, q: u32) -> DiagExponent {
    let top = y_plus_qlambda(q)
        .pow(r + 1)
        .add(&DiagExponent::monomial(rat(-1), 0, r + 1));
    top.div_lambda().scale(&ratio(1, r as i64 + 1))
}

/// The ordered-form exponent of the shift part, with the conjugations
/// `x^{-q} y^i x^q = (y + q lambda)^i` carried out but the geometric sum
/// left unevaluated: `(q/(r+1)) sum_i (y + q lambda)^i y^{r-i}`.
pub fn shift_exponent_ordered(r: u32, q: u32) -> DiagExponent {
    let conj = y_plus_qlambda(q);
    let mut acc = DiagExponent::zero();
    for i in 0..=r {
        let term = conj
            .pow(i)
            .mul(&DiagExponent::monomial(rat(1), 0, r - i));
        acc = acc.add(&term);
    }
    acc.scale(&ratio(q as i64, r as i64 + 1))
}

/// Simplified q-double operator
/// `y^ - e^{q lambda (q-1)/2} x^q e^{q y^}`.
pub fn qdouble_operator(q: u32) -> OperatorExpr {
    let scalar = ExpPoly::exp_of(LambdaPoly::monomial(
        ratio((q * (q - 1)) as i64, 2),
        1,
    ));
    OperatorExpr {
        words: vec![
            Word {
                scalar: ExpPoly::one(),
                gens: vec![Gen::Y],
            },
            Word {
                scalar: -&scalar,
                gens: vec![
                    Gen::MulX(2 * q as i64),
                    Gen::ExpDiag(DiagExponent::monomial(rat(q as i64), 0, 1)),
                ],
            },
        ],
    }
}

/// Raw (ordered) q-double operator
/// `y^ - (e^{c y^} x^ e^{-c y^})^q e^{q y^}` with `c = (q-1)/2`.
pub fn qdouble_operator_raw(q: u32) -> OperatorExpr {
    let c = ratio(q as i64 - 1, 2);
    let mut gens = Vec::new();
    for _ in 0..q {
        gens.push(Gen::ExpDiag(DiagExponent::monomial(c.clone(), 0, 1)));
        gens.push(Gen::MulX(2));
        gens.push(Gen::ExpDiag(DiagExponent::monomial(-&c, 0, 1)));
    }
    gens.push(Gen::ExpDiag(DiagExponent::monomial(rat(q as i64), 0, 1)));
    OperatorExpr {
        words: vec![
            Word {
                scalar: ExpPoly::one(),
                gens: vec![Gen::Y],
            },
            Word {
                scalar: -&ExpPoly::one(),
                gens,
            },
        ],
    }
}

/// Simplified r-spin operator `y^ - A` with the ladder operator `A`
/// realized as `x^{3/2} exp(...) x^{-1/2}` in evaluated diagonal form.
pub fn rspin_operator(r: u32) -> OperatorExpr {
    shifted_operator(shift_exponent_evaluated(r, 1), 1)
}

/// Raw r-spin operator with the geometric-sum exponent of the ordered
/// form.
pub fn rspin_operator_raw(r: u32) -> OperatorExpr {
    shifted_operator(shift_exponent_ordered(r, 1), 1)
}

/// Simplified mixed operator
/// `y^ - x^{q+1/2} exp(((y + q lambda)^{r+1} - y^{r+1})/((r+1) lambda)) x^{-1/2}`.
pub fn mixed_operator(r: u32, q: u32) -> OperatorExpr {
    shifted_operator(shift_exponent_evaluated(r, q), q)
}

/// Raw mixed operator with the ordered-form exponent
/// `(q/(r+1)) sum_i (y + q lambda)^i y^{r-i}`.
pub fn mixed_operator_raw(r: u32, q: u32) -> OperatorExpr {
    shifted_operator(shift_exponent_ordered(r, q), q)
}

fn shifted_operator(exponent: DiagExponent, q: u32) -> OperatorExpr {
    OperatorExpr {
        words: vec![
            Word {
                scalar: ExpPoly::one(),
                gens: vec![Gen::Y],
            },
            Word {
                scalar: -&ExpPoly::one(),
                gens: vec![
                    Gen::MulX(2 * q as i64 + 1),
                    Gen::ExpDiag(exponent),
                    Gen::MulX(-1),
                ],
            },
        ],
    }
}

/// Which of the two operator normal forms to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorForm {
    /// Diagonal exponentials fully evaluated (telescoped).
    Simplified,
    /// The fully ordered product form, conjugations applied but geometric
    /// sums left in place.
    Raw,
}

/// The family's annihilating operator: the q-double form when `r = 1`,
/// the r-spin form when `q = 1`, the mixed form otherwise.
pub fn quantum_operator(family: SpectralFamily, form: OperatorForm) -> OperatorExpr {
    let (r, q) = (family.r, family.q);
    match (r, q, form) {
        (1, _, OperatorForm::Simplified) => qdouble_operator(q),
        (1, _, OperatorForm::Raw) => qdouble_operator_raw(q),
        (_, 1, OperatorForm::Simplified) => rspin_operator(r),
        (_, 1, OperatorForm::Raw) => rspin_operator_raw(r),
        (_, _, OperatorForm::Simplified) => mixed_operator(r, q),
        (_, _, OperatorForm::Raw) => mixed_operator_raw(r, q),
    }
}

/// First exponent at which an annihilation check failed, with the residual
/// coefficient (an exact `ExpPoly`, nonzero by construction).
#[derive(Clone, Debug)]
pub struct AnnihilationFailure {
    pub r: u32,
    pub q: u32,
    pub exponent2: i64,
    pub residual: ExpPoly,
}

impl fmt::Display for AnnihilationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "annihilation (r={}, q={}) fails at x^{}: residual {}",
            self.r,
            self.q,
            fmt_exponent2(self.exponent2),
            self.residual
        )
    }
}

/// Check that the family operator annihilates `z_principal` up to the
/// exponent range fully determined by the truncation (`e <= order - q`:
/// the x^q shift can pull content in from at most `q` above).
pub fn verify_annihilation(
    family: SpectralFamily,
    order: u32,
    form: OperatorForm,
) -> Result<(), AnnihilationFailure> {
    let z = z_principal(family, order);
    let op = quantum_operator(family, form);
    verify_annihilation_with(&op, &z, family)
}

/// Annihilation check against caller-supplied operator and series; the
/// mutation tests corrupt one or the other and expect an `Err`.
pub fn verify_annihilation_with(
    op: &OperatorExpr,
    z: &XSeries,
    family: SpectralFamily,
) -> Result<(), AnnihilationFailure> {
    let out = apply(op, z);
    let complete2 = 2 * (z.order() as i64 - family.q as i64);
    for (&e2, c) in out.iter() {
        if e2 <= complete2 && !c.is_zero() {
            return Err(AnnihilationFailure {
                r: family.r,
                q: family.q,
                exponent2: e2,
                residual: c.clone(),
            });
        }
    }
    Ok(())
}

/// Compare two operator expressions on all monomials `x^{j/2}` for
/// `0 <= j/2 <= n_max`, half-integers included. Returns the first
/// monomial exponent where they differ.
pub fn operators_agree_on_monomials(
    a: &OperatorExpr,
    b: &OperatorExpr,
    n_max: u32,
) -> Result<(), i64> {
    let order = 2 * n_max + 4;
    for j2 in 0..=(2 * n_max as i64) {
        let x = XSeries::monomial(order, ExpPoly::one(), j2);
        if apply(a, &x) != apply(b, &x) {
            return Err(j2);
        }
    }
    Ok(())
}

/// Witness of a failed coefficient recurrence at step `d`.
#[derive(Clone, Debug)]
pub struct RecurrenceFailure {
    pub d: u32,
    pub lhs: ExpPoly,
    pub rhs: ExpPoly,
}

impl fmt::Display for RecurrenceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient recurrence fails at d = {}: {} != {}",
            self.d, self.lhs, self.rhs
        )
    }
}

/// Check the two-term recurrence
/// `lambda q (d+1) a_{d+1} = exp(lambda^r ((qd + q - 1/2)^{r+1} -
/// (qd - 1/2)^{r+1}) / (r+1)) a_d` (the `x^q` shift being implicit in the
/// exponent bookkeeping) for `d < d_max` in exact ExpPoly arithmetic.
pub fn verify_recurrence(family: SpectralFamily, d_max: u32) -> Result<(), RecurrenceFailure> {
    let (r, q) = (family.r, family.q);
    let z = z_principal(family, q * d_max + q);
    for d in 0..d_max {
        let a_d = z.coeff2(2 * (q * d) as i64);
        let a_d1 = z.coeff2(2 * (q * d + q) as i64);
        let lhs = &a_d1 * &ExpPoly::lambda_pow(rat((q * (d + 1)) as i64), 1);
        let step = step_exponent(r, q, d);
        let rhs = &a_d * &ExpPoly::exp_of(step);
        if lhs != rhs {
            return Err(RecurrenceFailure { d, lhs, rhs });
        }
    }
    Ok(())
}

/// `lambda^r ((qd + q - 1/2)^{r+1} - (qd - 1/2)^{r+1}) / (r+1)`, the
/// exponent increment between consecutive coefficients.
pub fn step_exponent(r: u32, q: u32, d: u32) -> LambdaPoly {
    let hi = ratio(2 * (q * d + q) as i64 - 1, 2);
    let lo = ratio(2 * (q * d) as i64 - 1, 2);
    let diff = (rational_pow(&hi, r as i64 + 1) - rational_pow(&lo, r as i64 + 1))
        / rat(r as i64 + 1);
    LambdaPoly::monomial(diff, r)
}

/// First failing exponent of the semiclassical (dequantization) check.
#[derive(Clone, Debug)]
pub struct SemiclassicalFailure {
    pub r: u32,
    pub q: u32,
    pub exponent: usize,
    pub residual: Rational,
}

impl fmt::Display for SemiclassicalFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "semiclassical limit (r={}, q={}) fails at x^{}: residual {}",
            self.r, self.q, self.exponent, self.residual
        )
    }
}

/// Evaluate the commutative symbol of the family operator at
/// `y = y(x)` and check it vanishes: replace `y^` by the spectral series,
/// `x^` by `x`, each diagonal exponential by `exp` of the `lambda`-free
/// part of its exponent, and each scalar by its `lambda -> 0` limit. This
/// is the statement that the operator dequantizes to the spectral curve
/// `y - x^q exp(q y^r)`.
pub fn semiclassical_check(
    family: SpectralFamily,
    order: usize,
) -> Result<(), SemiclassicalFailure> {
    semiclassical_check_with(&quantum_operator(family, OperatorForm::Simplified), family, order)
}

/// Semiclassical check for a caller-supplied operator expression.
pub fn semiclassical_check_with(
    op: &OperatorExpr,
    family: SpectralFamily,
    order: usize,
) -> Result<(), SemiclassicalFailure> {
    let y = family.y_series(order);
    let mut total = TruncSeries::<Rational>::zero(order);
    for word in &op.words {
        let scalar = word
            .scalar
            .semiclassical_limit()
            .expect("operator scalar has no rational semiclassical limit");
        let mut shift2 = 0i64;
        let mut series = TruncSeries::<Rational>::one(order);
        for gen in &word.gens {
            match gen {
                Gen::MulX(a2) => shift2 += a2,
                Gen::Y => series = series.mul(&y),
                Gen::ExpDiag(r) => {
                    let mut arg = TruncSeries::<Rational>::zero(order);
                    for (y_pow, c) in r.symbol_y_coeffs() {
                        assert!(y_pow >= 1, "diagonal symbol must vanish at y = 0");
                        arg = arg.add(&y.pow(y_pow).scale_rational(&c));
                    }
                    series = series.mul(&arg.exp());
                }
            }
        }
        assert!(
            shift2 % 2 == 0 && shift2 >= 0,
            "word symbol must carry an integer non-negative power of x"
        );
        total = total.add(&series.shift_up((shift2 / 2) as usize).scale_rational(&scalar));
    }
    match total.valuation() {
        None => Ok(()),
        Some(e) => Err(SemiclassicalFailure {
            r: family.r,
            q: family.q,
            exponent: e,
            residual: total.coeff(e).clone(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monomial_x(n2: i64, order: u32) -> XSeries {
        XSeries::monomial(order, ExpPoly::one(), n2)
    }

    #[test]
    fn diagonal_exponential_is_eigen() {
        // e^{q lambda x d/dx} x^n = e^{q lambda n} x^n
        let q = 3u32;
        let word = OperatorExpr {
            words: vec![Word {
                scalar: ExpPoly::one(),
                gens: vec![Gen::ExpDiag(DiagExponent::monomial(rat(q as i64), 0, 1))],
            }],
        };
        for n in 0..6i64 {
            let out = apply(&word, &monomial_x(2 * n, 12));
            let expect = ExpPoly::exp_of(LambdaPoly::monomial(rat(q as i64 * n), 1));
            assert_eq!(out.coeff2(2 * n), expect);
        }
    }

    #[test]
    fn euler_operator_on_monomials() {
        let yhat = OperatorExpr {
            words: vec![Word {
                scalar: ExpPoly::one(),
                gens: vec![Gen::Y],
            }],
        };
        for n in 0..6i64 {
            let out = apply(&yhat, &monomial_x(2 * n, 12));
            assert_eq!(out.coeff2(2 * n), ExpPoly::lambda_pow(rat(n), 1));
        }
    }

    #[test]
    fn ladder_action_on_monomials() {
        // the r-spin shift part maps x^n to
        // exp(lambda^r ((n+1/2)^{r+1} - (n-1/2)^{r+1})/(r+1)) x^{n+1}
        for r in 1..=3u32 {
            let ladder = OperatorExpr {
                words: vec![Word {
                    scalar: ExpPoly::one(),
                    gens: vec![
                        Gen::MulX(3),
                        Gen::ExpDiag(shift_exponent_evaluated(r, 1)),
                        Gen::MulX(-1),
                    ],
                }],
            };
            for n in 0..8i64 {
                let out = apply(&ladder, &monomial_x(2 * n, 12));
                let hi = ratio(2 * n + 1, 2);
                let lo = ratio(2 * n - 1, 2);
                let diff = (rational_pow(&hi, r as i64 + 1) - rational_pow(&lo, r as i64 + 1))
                    / rat(r as i64 + 1);
                let expect = ExpPoly::exp_of(LambdaPoly::monomial(diff, r));
                assert_eq!(out.coeff2(2 * (n + 1)), expect, "r={} n={}", r, n);
            }
        }
    }

    #[test]
    fn conjugated_x_gains_scalar() {
        // e^{c y^} x^ e^{-c y^} applied to x^n is e^{c lambda} x^{n+1}
        let c = ratio(5, 2);
        let word = OperatorExpr {
            words: vec![Word {
                scalar: ExpPoly::one(),
                gens: vec![
                    Gen::ExpDiag(DiagExponent::monomial(c.clone(), 0, 1)),
                    Gen::MulX(2),
                    Gen::ExpDiag(DiagExponent::monomial(-&c, 0, 1)),
                ],
            }],
        };
        for n in 0..6i64 {
            let out = apply(&word, &monomial_x(2 * n, 12));
            let expect = ExpPoly::exp_of(LambdaPoly::monomial(c.clone(), 1));
            assert_eq!(out.coeff2(2 * (n + 1)), expect);
        }
    }

    #[test]
    fn conjugated_y_powers_are_diagonal() {
        // x^{-1} y^^i x^ applied to x^n is (lambda (n+1))^i x^n
        for i in 0..4usize {
            let mut gens = vec![Gen::MulX(-2)];
            gens.extend(std::iter::repeat_n(Gen::Y, i));
            gens.push(Gen::MulX(2));
            let word = OperatorExpr {
                words: vec![Word {
                    scalar: ExpPoly::one(),
                    gens,
                }],
            };
            for n in 0..5i64 {
                let out = apply(&word, &monomial_x(2 * n, 12));
                let expect = ExpPoly::lambda_pow(rational_pow(&rat(n + 1), i as i64), i as i64);
                assert_eq!(out.coeff2(2 * n), expect, "i={} n={}", i, n);
            }
        }
    }

    #[test]
    fn z_principal_anchors() {
        // a_0 = 1 in every family
        for (r, q) in [(1u32, 1u32), (2, 3), (3, 2)] {
            let z = z_principal(SpectralFamily::new(r, q), 8);
            assert_eq!(z.coeff2(0), ExpPoly::one());
        }
        // (1,1): a_1 = x / lambda, the exponent polynomial vanishes
        let z11 = z_principal(SpectralFamily::new(1, 1), 8);
        assert_eq!(z11.coeff2(2), ExpPoly::lambda_pow(rat(1), -1));
        // (1,2): a_1 = x^2/(2 lambda) e^{lambda}
        let z12 = z_principal(SpectralFamily::new(1, 2), 8);
        assert_eq!(
            z12.coeff2(4),
            ExpPoly::term(ratio(1, 2), -1, LambdaPoly::monomial(rat(1), 1))
        );
    }

    #[test]
    fn telescoping_identity() {
        // the geometric-sum exponent equals the binomial difference
        // quotient as a polynomial identity in (lambda, y)
        for r in 1..=6u32 {
            for q in 1..=3u32 {
                assert_eq!(
                    shift_exponent_ordered(r, q),
                    shift_exponent_evaluated(r, q),
                    "r={} q={}",
                    r,
                    q
                );
            }
        }
    }

    #[test]
    fn raw_and_simplified_agree_qdouble() {
        for q in 1..=4u32 {
            let a = qdouble_operator(q);
            let b = qdouble_operator_raw(q);
            assert!(operators_agree_on_monomials(&a, &b, 15).is_ok(), "q={}", q);
        }
    }

    #[test]
    fn family_specializations_on_monomials() {
        // mixed at r = 1 matches the q-double word; r-spin at r = 1
        // matches q-double at q = 1; mixed at q = 1 matches r-spin
        for q in 1..=3u32 {
            assert!(operators_agree_on_monomials(
                &mixed_operator(1, q),
                &qdouble_operator(q),
                15
            )
            .is_ok());
        }
        assert!(operators_agree_on_monomials(
            &rspin_operator(1),
            &qdouble_operator(1),
            15
        )
        .is_ok());
        for r in 2..=3u32 {
            assert!(operators_agree_on_monomials(
                &mixed_operator(r, 1),
                &rspin_operator(r),
                15
            )
            .is_ok());
        }
    }

    #[test]
    fn annihilation_spot_checks() {
        for (r, q) in [(1u32, 1u32), (3, 1), (2, 3)] {
            let fam = SpectralFamily::new(r, q);
            assert!(
                verify_annihilation(fam, 30, OperatorForm::Simplified).is_ok(),
                "simplified r={} q={}",
                r,
                q
            );
            assert!(
                verify_annihilation(fam, 30, OperatorForm::Raw).is_ok(),
                "raw r={} q={}",
                r,
                q
            );
        }
    }

    #[test]
    fn corrupting_z_breaks_annihilation() {
        let fam = SpectralFamily::new(2, 2);
        let op = quantum_operator(fam, OperatorForm::Simplified);
        for d in 0..=5u32 {
            let mut z = z_principal(fam, 20);
            let e2 = 2 * (2 * d) as i64;
            let bad = &z.coeff2(e2) + &ExpPoly::lambda_pow(rat(1), 3);
            z.set_coeff2(e2, bad);
            let err = verify_annihilation_with(&op, &z, fam).unwrap_err();
            assert!(!err.residual.is_zero(), "d = {}", d);
        }
    }

    #[test]
    fn corrupting_operator_breaks_annihilation() {
        let fam = SpectralFamily::new(1, 2);
        let z = z_principal(fam, 20);
        // corrupt the shift amount
        let mut op = quantum_operator(fam, OperatorForm::Simplified);
        if let Gen::MulX(a) = &mut op.words[1].gens[0] {
            *a += 2;
        }
        assert!(verify_annihilation_with(&op, &z, fam).is_err());
        // corrupt the scalar
        let mut op = quantum_operator(fam, OperatorForm::Simplified);
        op.words[1].scalar = &op.words[1].scalar + &ExpPoly::one();
        assert!(verify_annihilation_with(&op, &z, fam).is_err());
    }

    #[test]
    fn recurrence_families() {
        // (1,1): (d+1) lambda a_{d+1} = x e^{lambda d} a_d
        assert!(verify_recurrence(SpectralFamily::new(1, 1), 20).is_ok());
        for d in 0..5u32 {
            assert_eq!(
                step_exponent(1, 1, d),
                LambdaPoly::monomial(rat(d as i64), 1)
            );
        }
        // (2,1): the exponent increment is lambda^2((d+1/2)^3-(d-1/2)^3)/3
        assert!(verify_recurrence(SpectralFamily::new(2, 1), 20).is_ok());
        for d in 0..5u32 {
            let hi = ratio(2 * d as i64 + 1, 2);
            let lo = ratio(2 * d as i64 - 1, 2);
            let expect = (rational_pow(&hi, 3) - rational_pow(&lo, 3)) / rat(3);
            assert_eq!(step_exponent(2, 1, d), LambdaPoly::monomial(expect, 2));
        }
        // mixed case
        assert!(verify_recurrence(SpectralFamily::new(3, 2), 12).is_ok());
    }

    #[test]
    fn recurrence_base_case() {
        // d = 0: lambda q a_1 = e^{step(0)} a_0 with a_0 = 1
        let fam = SpectralFamily::new(2, 3);
        let z = z_principal(fam, 6);
        assert_eq!(z.coeff2(0), ExpPoly::one());
        let lhs = &z.coeff2(6) * &ExpPoly::lambda_pow(rat(3), 1);
        assert_eq!(lhs, ExpPoly::exp_of(step_exponent(2, 3, 0)));
    }

    #[test]
    fn semiclassical_spot_checks() {
        for (r, q) in [(1u32, 1u32), (1, 3), (2, 2)] {
            assert!(
                semiclassical_check(SpectralFamily::new(r, q), 40).is_ok(),
                "r={} q={}",
                r,
                q
            );
        }
        // the raw form dequantizes identically
        let fam = SpectralFamily::new(2, 2);
        assert!(semiclassical_check_with(
            &quantum_operator(fam, OperatorForm::Raw),
            fam,
            30
        )
        .is_ok());
    }
}
