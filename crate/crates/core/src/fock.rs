//! A faithful finite-support model of the charged infinite wedge space.
//!
//! Basis states are Maya diagrams: an infinite decreasing sequence of
//! half-integers that eventually follows the vacuum pattern
//! `c - 1/2, c - 3/2, ...` of its charge `c`. Every such state is the data
//! of a charge and a partition, with the occupied slots at
//! `lambda_i + c - i + 1/2`. The fermion operators insert or remove one
//! slot with the sign of the sorting permutation; everything downstream
//! (`alpha_n`, the E-operators, vacuum expectation values) is built from
//! those two moves, which is what makes this module an independent
//! brute-force oracle for the character formulas in [`crate::hurwitz`].
//!
//! All operator actions are exact: on a fixed basis state each formally
//! infinite sum has finite support, so no energy cutoff is ever applied.
//! The z-dependent operators carry truncated exponential weights in up to
//! two formal variables `(w, z)` via [`BiPoly`] coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::partitions::Partition;
use crate::rings::{rat, ratio, Coeff, Rational};
use crate::series::{zeta_ratio, TruncSeries};

/// A basis vector of the charged infinite wedge space: the wedge product
/// with entries `lambda_i + c - i + 1/2`. Charge 0 states biject with
/// partitions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MayaState {
    charge: i64,
    shape: Partition,
}

impl MayaState {
    pub fn vacuum() -> Self {
        MayaState {
            charge: 0,
            shape: Partition::empty(),
        }
    }

    pub fn new(charge: i64, shape: Partition) -> Self {
        MayaState { charge, shape }
    }

    /// The charge-0 state of a partition.
    pub fn from_partition(shape: Partition) -> Self {
        MayaState { charge: 0, shape }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn partition(&self) -> &Partition {
        &self.shape
    }

    /// Eigenvalue of the energy operator: the size of the partition.
    pub fn energy(&self) -> u32 {
        self.shape.size()
    }

    /// Entry of row `j` (1-based) as twice its half-integer value:
    /// `2 (lambda_j + c - j) + 1`. Valid for every `j >= 1`; rows past the
    /// partition length follow the vacuum pattern.
    fn entry(&self, j: i64) -> i64 {
        let part = if j as usize <= self.shape.len() {
            self.shape.part(j as usize - 1) as i64
        } else {
            0
        };
        2 * (part + self.charge - j) + 1
    }

    /// Whether the slot at half-integer `k = k2/2` is occupied.
    pub fn occupied(&self, k2: i64) -> bool {
        assert!(k2.rem_euclid(2) == 1, "fermion index must be a half-integer");
        let len = self.shape.len() as i64;
        for j in 1..=len {
            let e = self.entry(j);
            if e == k2 {
                return true;
            }
            if e < k2 {
                return false;
            }
        }
        // the remaining rows are the vacuum tail: slot k2 sits at row
        // j0 = (2c + 1 - k2)/2, occupied exactly when past the explicit rows
        let j0 = (2 * self.charge + 1 - k2) / 2;
        j0 > len
    }

    fn from_entries(charge: i64, entries: &[i64]) -> MayaState {
        let mut parts = Vec::new();
        for (i, &e) in entries.iter().enumerate() {
            let j = (i + 1) as i64;
            let part = (e - 1) / 2 - charge + j;
            assert!(part >= 0, "entry list does not define a partition");
            if part > 0 {
                parts.push(part as u32);
            }
        }
        MayaState {
            charge,
            shape: Partition::new(parts),
        }
    }

    /// Wedge insertion at slot `k2/2`: prepend and sort with sign. `None`
    /// when the slot is occupied. The charge increases by one.
    pub fn psi(&self, k2: i64) -> Option<(i64, MayaState)> {
        if self.occupied(k2) {
            return None;
        }
        let len = self.shape.len() as i64;
        let mut entries: Vec<i64> = (1..=len).map(|j| self.entry(j)).collect();
        let pos = entries.iter().filter(|&&e| e > k2).count();
        entries.insert(pos, k2);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        Some((sign, MayaState::from_entries(self.charge + 1, &entries)))
    }

    /// Wedge removal at slot `k2/2` (the adjoint move): `None` when the
    /// slot is vacant. The charge decreases by one.
    pub fn psi_star(&self, k2: i64) -> Option<(i64, MayaState)> {
        if !self.occupied(k2) {
            return None;
        }
        let len = self.shape.len() as i64;
        // materialize into the vacuum tail when the occupied slot is there
        let j0 = (2 * self.charge + 1 - k2) / 2;
        let rows = len.max(j0);
        let mut entries: Vec<i64> = (1..=rows).map(|j| self.entry(j)).collect();
        let pos = entries.iter().position(|&e| e == k2).expect("occupied");
        entries.remove(pos);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        Some((sign, MayaState::from_entries(self.charge - 1, &entries)))
    }
}

impl fmt::Debug for MayaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|c={}; {:?}>", self.charge, self.shape)
    }
}

/// A finite linear combination of basis states over a coefficient ring.
#[derive(Clone, PartialEq)]
pub struct FockVector<C: Coeff> {
    terms: BTreeMap<MayaState, C>,
}

impl<C: Coeff> FockVector<C> {
    pub fn zero() -> Self {
        FockVector {
            terms: BTreeMap::new(),
        }
    }

    pub fn vacuum() -> Self {
        Self::basis(MayaState::vacuum())
    }

    pub fn basis(state: MayaState) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(state, C::one());
        FockVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MayaState, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, state: &MayaState) -> C {
        self.terms.get(state).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, state: MayaState, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(state.clone()).or_insert_with(C::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&state);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_term(s.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_term(s.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (s, x) in &self.terms {
            out.add_term(s.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&C::from_rational(r))
    }

    /// Coefficient of the vacuum: the vacuum expectation pairing.
    pub fn vev(&self) -> C {
        self.coefficient(&MayaState::vacuum())
    }
}

impl<C: Coeff> fmt::Debug for FockVector<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?}) {:?}", c, s)?;
        }
        Ok(())
    }
}

/// `Psi_k` on a vector, `k = k2/2`.
pub fn psi<C: Coeff>(k2: i64, v: &FockVector<C>) -> FockVector<C> {
    let mut out = FockVector::zero();
    for (s, c) in v.iter() {
        if let Some((sign, t)) = s.psi(k2) {
            out.add_term(t, c.scale(&rat(sign)));
        }
    }
    out
}

/// `Psi*_k` on a vector, `k = k2/2`.
pub fn psi_star<C: Coeff>(k2: i64, v: &FockVector<C>) -> FockVector<C> {
    let mut out = FockVector::zero();
    for (s, c) in v.iter() {
        if let Some((sign, t)) = s.psi_star(k2) {
            out.add_term(t, c.scale(&rat(sign)));
        }
    }
    out
}

/// Move one occupied slot from `k2/2` to `(k2 - 2n)/2` with the fermionic
/// sign, i.e. the summand `:Psi_{k-n} Psi*_k:` of an E-operator for
/// `n != 0`. `None` when the move annihilates the state.
fn hop(s: &MayaState, k2: i64, n: i64) -> Option<(i64, MayaState)> {
    let target = k2 - 2 * n;
    if s.occupied(target) {
        return None;
    }
    let (sign1, t) = s.psi_star(k2)?;
    let (sign2, u) = t.psi(target).expect("vacant slot stays vacant");
    Some((sign1 * sign2, u))
}

/// The bosonic mode `alpha_n = sum_k :Psi_{k-n} Psi*_k:` for `n != 0`.
/// Exact: on each basis state only finitely many `k` contribute.
pub fn alpha<C: Coeff>(n: i64, v: &FockVector<C>) -> FockVector<C> {
    assert!(n != 0, "alpha_0 is the charge operator; not used here");
    let mut out = FockVector::zero();
    for (s, c) in v.iter() {
        // every contributing k is an occupied slot within the first
        // len + |n| rows: deeper rows have both k and k - n in the tail
        let rows = s.shape.len() as i64 + n.abs();
        for j in 1..=rows {
            let k2 = s.entry(j);
            if let Some((sign, t)) = hop(s, k2, n) {
                out.add_term(t, c.scale(&rat(sign)));
            }
        }
    }
    out
}

/// Apply `alpha_n` iterated `times` times.
pub fn alpha_power<C: Coeff>(n: i64, times: u32, v: &FockVector<C>) -> FockVector<C> {
    let mut out = v.clone();
    for _ in 0..times {
        out = alpha(n, &out);
    }
    out
}

/// Which formal exponential weight an E-operator application carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EVariable {
    /// weight `e^{w (k - n/2)}`
    W,
    /// weight `e^{z (k - n/2)}`
    Z,
    /// weight `e^{(w + z)(k - n/2)}`
    WPlusZ,
    /// weight 1: the operator evaluated at 0, i.e. `alpha_n` for `n != 0`
    /// and the charge-counting diagonal for `n = 0`
    AtZero,
}

impl EVariable {
    fn weights(self) -> (i64, i64) {
        match self {
            EVariable::W => (1, 0),
            EVariable::Z => (0, 1),
            EVariable::WPlusZ => (1, 1),
            EVariable::AtZero => (0, 0),
        }
    }
}

/// A polynomial in the two formal variables `(w, z)` over the rationals.
/// This is the coefficient ring for z-dependent operator actions; callers
/// truncate explicitly at the bi-degree they need.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BiPoly { terms }
    }

    pub fn coeff(&self, w_pow: u32, z_pow: u32) -> Rational {
        self.terms
            .get(&(w_pow, z_pow))
            .cloned()
            .unwrap_or_else(|| rat(0))
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(|| rat(0));
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `exp(cw * w) * exp(cz * z)` truncated at the given orders.
    pub fn exponential(cw: &Rational, cz: &Rational, w_ord: usize, z_ord: usize) -> Self {
        let mut out = BiPoly::default();
        let mut wterm = rat(1);
        for i in 0..=w_ord as u32 {
            if i > 0 {
                wterm = wterm * cw / rat(i as i64);
            }
            if wterm.is_zero() {
                break;
            }
            let mut term = wterm.clone();
            for j in 0..=z_ord as u32 {
                if j > 0 {
                    term = term * cz / rat(j as i64);
                    if term.is_zero() {
                        break;
                    }
                }
                out.add_term((i, j), term.clone());
            }
        }
        out
    }

    /// Substitute `u = w + z` into a univariate series, truncating at the
    /// given bi-degree.
    pub fn from_series_in_sum(series: &TruncSeries<Rational>, w_ord: usize, z_ord: usize) -> Self {
        let mut out = BiPoly::default();
        let mut binom_row: Vec<Rational> = vec![rat(1)];
        for n in 0..=series.order() {
            let c = series.coeff(n);
            if !c.is_zero() {
                for (i, b) in binom_row.iter().enumerate() {
                    let j = n - i;
                    if i <= w_ord && j <= z_ord {
                        out.add_term((i as u32, j as u32), c * b);
                    }
                }
            }
            // next Pascal row
            let zero = rat(0);
            let mut next = vec![rat(1)];
            for i in 1..=n {
                next.push(&binom_row[i - 1] + binom_row.get(i).unwrap_or(&zero));
            }
            next.push(rat(1));
            binom_row = next;
        }
        out
    }

    pub fn truncate(&self, w_ord: usize, z_ord: usize) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|((i, j), _)| *i as usize <= w_ord && *j as usize <= z_ord)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    fn first_term(&self) -> Option<((u32, u32), Rational)> {
        self.terms.iter().next().map(|(k, c)| (*k, c.clone()))
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        let mut out = self;
        for (k, c) in rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        self + (-rhs)
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        let mut out = BiPoly::default();
        for ((ia, ja), ca) in &self.terms {
            for ((ib, jb), cb) in &rhs.terms {
                out.add_term((ia + ib, ja + jb), ca * cb);
            }
        }
        out
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::constant(rat(1))
    }
}

impl Coeff for BiPoly {
    fn from_rational(r: &Rational) -> Self {
        BiPoly::constant(r.clone())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if *i > 0 {
                write!(f, "*w^{}", i)?;
            }
            if *j > 0 {
                write!(f, "*z^{}", j)?;
            }
        }
        Ok(())
    }
}

/// The operator `E~_n` with exponential weight `e^{var (k - n/2)}`,
/// truncated at `(w_ord, z_ord)`. For `n = 0` the action is diagonal with
/// the occupation-number eigenvalue
/// `sum_{k>0 occupied} e^{vk} - sum_{k<0 vacant} e^{vk}`, computed from
/// the Maya diagram directly.
pub fn e_tilde(
    n: i64,
    var: EVariable,
    w_ord: usize,
    z_ord: usize,
    v: &FockVector<BiPoly>,
) -> FockVector<BiPoly> {
    let (aw, az) = var.weights();
    let weight = move |k2_scaled: i64| -> BiPoly {
        // exponent (k - n/2) = k2_scaled / 2
        let c = ratio(k2_scaled, 2);
        BiPoly::exponential(&(&c * rat(aw)), &(&c * rat(az)), w_ord, z_ord)
    };
    let mut out = FockVector::zero();
    if n != 0 {
        for (s, c) in v.iter() {
            let rows = s.shape.len() as i64 + n.abs();
            for j in 1..=rows {
                let k2 = s.entry(j);
                if let Some((sign, t)) = hop(s, k2, n) {
                    let coeff = c.clone() * weight(k2 - n).scale(&rat(sign));
                    out.add_term(t, coeff);
                }
            }
        }
    } else {
        for (s, c) in v.iter() {
            let eigen = diagonal_eigenvalue(s, &weight);
            out.add_term(s.clone(), c.clone() * eigen);
        }
    }
    out
}

fn diagonal_eigenvalue(s: &MayaState, weight: &dyn Fn(i64) -> BiPoly) -> BiPoly {
    let mut eigen = BiPoly::zero();
    let len = s.shape.len() as i64;
    // occupied positive slots: explicit rows with positive entries plus the
    // positive part of the vacuum tail (rows len+1 ..= charge)
    for j in 1..=len.max(s.charge) {
        let e = s.entry(j);
        if e > 0 {
            eigen = eigen + weight(e);
        }
    }
    // vacant negative slots all lie within the first len rows of the tail
    // pattern, i.e. at or above 2(c - len) + 1
    let lowest = 2 * (s.charge - len) + 1;
    let mut k2 = -1;
    while k2 >= lowest {
        if !s.occupied(k2) {
            eigen = eigen - weight(k2);
        }
        k2 -= 2;
    }
    eigen
}

/// Convenience form of `E~_n(z)` acting on a rational vector, with
/// series-in-z coefficients truncated at `z_order`.
pub fn e_tilde_z(n: i64, z_order: usize, v: &FockVector<Rational>) -> FockVector<BiPoly> {
    e_tilde(n, EVariable::Z, 0, z_order, &lift(v))
}

/// Lift a rational vector into bivariate-polynomial coefficients.
pub fn lift(v: &FockVector<Rational>) -> FockVector<BiPoly> {
    let mut out = FockVector::zero();
    for (s, c) in v.iter() {
        out.add_term(s.clone(), BiPoly::constant(c.clone()));
    }
    out
}

/// The completed-cycle branch operator `r! [z^{r+1}] E~_0(z)` acting on a
/// rational vector. Diagonal; the eigenvalue is read off the occupation
/// expansion, not from any character-side formula.
pub fn completed_cycle(r: u32, v: &FockVector<Rational>) -> FockVector<Rational> {
    let z_ord = (r + 1) as usize;
    let mut r_fact = rat(1);
    for j in 2..=r as i64 {
        r_fact *= rat(j);
    }
    let mut out = FockVector::zero();
    for (s, c) in v.iter() {
        let weight =
            |k2: i64| -> BiPoly { BiPoly::exponential(&rat(0), &ratio(k2, 2), 0, z_ord) };
        let eigen = diagonal_eigenvalue(s, &weight);
        out.add_term(s.clone(), c * eigen.coeff(0, r + 1) * &r_fact);
    }
    out
}

/// Witness for a failed commutation check: the state and bi-degree of the
/// first mismatching coefficient, with both sides.
#[derive(Clone, Debug)]
pub struct CommutatorFailure {
    pub k: i64,
    pub l: i64,
    pub state: MayaState,
    pub w_pow: u32,
    pub z_pow: u32,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for CommutatorFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[E~_{}(w), E~_{}(z)] mismatch on {:?} at w^{} z^{}: lhs {} != rhs {}",
            self.k, self.l, self.state, self.w_pow, self.z_pow, self.lhs, self.rhs
        )
    }
}

/// Verify the commutation relation
/// `[E~_k(w), E~_l(z)] = zeta(kz - lw) E_{k+l}(z + w)` on the given test
/// states, to the stated bi-order in `(w, z)`. For `k + l = 0` the
/// right-hand side carries the central scalar `zeta(k(z+w)) / zeta(z+w)`,
/// expanded as a power series.
#[allow(clippy::result_large_err)]
pub fn verify_commutator(
    k: i64,
    l: i64,
    z_order: usize,
    states: &[MayaState],
) -> Result<(), CommutatorFailure> {
    let (w_ord, z_ord) = (z_order, z_order);
    for state in states {
        let v = FockVector::<BiPoly>::basis(state.clone());

        let kl = e_tilde(
            k,
            EVariable::W,
            w_ord,
            z_ord,
            &e_tilde(l, EVariable::Z, w_ord, z_ord, &v),
        );
        let lk = e_tilde(
            l,
            EVariable::Z,
            w_ord,
            z_ord,
            &e_tilde(k, EVariable::W, w_ord, z_ord, &v),
        );
        let lhs = kl.sub(&lk);

        // zeta(kz - lw) = e^{(kz - lw)/2} - e^{-(kz - lw)/2}
        let zeta_arg = BiPoly::exponential(&ratio(-l, 2), &ratio(k, 2), w_ord, z_ord)
            - BiPoly::exponential(&ratio(l, 2), &ratio(-k, 2), w_ord, z_ord);
        let mut rhs = e_tilde(k + l, EVariable::WPlusZ, w_ord, z_ord, &v).scale(&zeta_arg);
        if k + l == 0 {
            let ratio_series = zeta_ratio(k, w_ord + z_ord);
            let central = BiPoly::from_series_in_sum(&ratio_series, w_ord, z_ord);
            rhs = rhs.add(&v.scale(&central));
        }

        // compare all touched states coefficientwise at the target bi-order
        let mut keys: Vec<MayaState> = lhs.iter().map(|(s, _)| s.clone()).collect();
        keys.extend(rhs.iter().map(|(s, _)| s.clone()));
        keys.sort();
        keys.dedup();
        for key in keys {
            let a = lhs.coefficient(&key).truncate(w_ord, z_ord);
            let b = rhs.coefficient(&key).truncate(w_ord, z_ord);
            if a != b {
                let diff = a.clone() - b.clone();
                let ((i, j), _) = diff.first_term().expect("nonzero difference");
                return Err(CommutatorFailure {
                    k,
                    l,
                    state: state.clone(),
                    w_pow: i,
                    z_pow: j,
                    lhs: a.coeff(i, j),
                    rhs: b.coeff(i, j),
                });
            }
        }
    }
    Ok(())
}

/// Verify the specialized relation `[E~_k(0), E~_l(z)] = zeta(kz) E_{k+l}(z)`
/// (one operator evaluated at 0, where `E~_k(0) = alpha_k`), again with the
/// central `zeta(kz)/zeta(z)` scalar when `k + l = 0`.
#[allow(clippy::result_large_err)]
pub fn verify_commutator_at_zero(
    k: i64,
    l: i64,
    z_order: usize,
    states: &[MayaState],
) -> Result<(), CommutatorFailure> {
    let z_ord = z_order;
    for state in states {
        let v = FockVector::<BiPoly>::basis(state.clone());

        let kl = e_tilde(
            k,
            EVariable::AtZero,
            0,
            z_ord,
            &e_tilde(l, EVariable::Z, 0, z_ord, &v),
        );
        let lk = e_tilde(
            l,
            EVariable::Z,
            0,
            z_ord,
            &e_tilde(k, EVariable::AtZero, 0, z_ord, &v),
        );
        let lhs = kl.sub(&lk);

        // zeta(kz) = e^{kz/2} - e^{-kz/2}
        let zeta_arg = BiPoly::exponential(&rat(0), &ratio(k, 2), 0, z_ord)
            - BiPoly::exponential(&rat(0), &ratio(-k, 2), 0, z_ord);
        let mut rhs = e_tilde(k + l, EVariable::Z, 0, z_ord, &v).scale(&zeta_arg);
        if k + l == 0 {
            let central = BiPoly::from_series_in_sum(&zeta_ratio(k, z_ord), 0, z_ord);
            rhs = rhs.add(&v.scale(&central));
        }

        let mut keys: Vec<MayaState> = lhs.iter().map(|(s, _)| s.clone()).collect();
        keys.extend(rhs.iter().map(|(s, _)| s.clone()));
        keys.sort();
        keys.dedup();
        for key in keys {
            let a = lhs.coefficient(&key).truncate(0, z_ord);
            let b = rhs.coefficient(&key).truncate(0, z_ord);
            if a != b {
                let diff = a.clone() - b.clone();
                let ((i, j), _) = diff.first_term().expect("nonzero difference");
                return Err(CommutatorFailure {
                    k,
                    l,
                    state: state.clone(),
                    w_pow: i,
                    z_pow: j,
                    lhs: a.coeff(i, j),
                    rhs: b.coeff(i, j),
                });
            }
        }
    }
    Ok(())
}

/// Check `zeta(z) E_0(z) |0> = |0>` to the given z-order, the regularized
/// form of the vacuum eigenvalue `E_0(z)|0> = |0> / zeta(z)`. With
/// `E_0 = E~_0 + 1/zeta`, this holds exactly when `E~_0(z)|0> = 0`.
pub fn verify_vacuum_zeta_identity(z_order: usize) -> bool {
    let vac = FockVector::<BiPoly>::basis(MayaState::vacuum());
    let et = e_tilde(0, EVariable::Z, 0, z_order, &vac);
    // zeta(z) * E~_0(z)|0> + |0> must equal |0>
    let zeta = BiPoly::exponential(&rat(0), &ratio(1, 2), 0, z_order)
        - BiPoly::exponential(&rat(0), &ratio(-1, 2), 0, z_order);
    let lhs = et.scale(&zeta).add(&vac);
    lhs.sub(&vac)
        .iter()
        .all(|(_, c)| c.truncate(0, z_order).is_zero())
}

/// All charge-0 basis states of energy up to `max_energy`, in a
/// deterministic order.
pub fn charge_zero_states(max_energy: u32) -> Vec<MayaState> {
    let mut out = Vec::new();
    for n in 0..=max_energy {
        for p in crate::partitions::partitions_of(n) {
            out.push(MayaState::from_partition(p));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;

    #[test]
    fn charge_zero_bijection_round_trips() {
        for n in 0..=12u32 {
            for p in partitions_of(n) {
                let s = MayaState::from_partition(p.clone());
                assert_eq!(s.partition(), &p);
                assert_eq!(s.energy(), n);
                // occupied set matches lambda_i - i + 1/2 (doubled: odd)
                for (i, &part) in p.parts().iter().enumerate() {
                    let k2 = 2 * (part as i64 - (i as i64 + 1)) + 1;
                    assert!(s.occupied(k2));
                }
            }
        }
    }

    #[test]
    fn psi_front_insertion() {
        let vac = MayaState::vacuum();
        let (sign, s) = vac.psi(1).expect("slot 1/2 vacant in vacuum");
        assert_eq!(sign, 1);
        assert_eq!(s.charge(), 1);
        assert!(s.partition().is_empty());
        assert!(vac.psi(-1).is_none(), "slot -1/2 occupied in vacuum");
    }

    #[test]
    fn psi_star_after_psi() {
        let vac = MayaState::vacuum();
        let (s1, up) = vac.psi(1).unwrap();
        let (s2, down) = up.psi_star(-1).unwrap();
        assert_eq!(s1 * s2, -1);
        assert_eq!(down.charge(), 0);
        assert_eq!(down.partition(), &Partition::new(vec![1]));
    }

    #[test]
    fn anticommutators_on_low_energy_states() {
        let states = charge_zero_states(4);
        let indices: Vec<i64> = (-9..=9).step_by(2).collect();
        for s in &states {
            let v = FockVector::<Rational>::basis(s.clone());
            for &i in &indices {
                for &j in &indices {
                    // {Psi_i, Psi*_j} = delta_ij
                    let a = psi(i, &psi_star(j, &v));
                    let b = psi_star(j, &psi(i, &v));
                    let sum = a.add(&b);
                    let expect = if i == j { v.clone() } else { FockVector::zero() };
                    assert_eq!(sum, expect, "{{Psi_{}, Psi*_{}}} on {:?}", i, j, s);
                    // {Psi_i, Psi_j} = 0
                    let pp = psi(i, &psi(j, &v)).add(&psi(j, &psi(i, &v)));
                    assert!(pp.is_zero(), "{{Psi_{}, Psi_{}}} on {:?}", i, j, s);
                }
            }
        }
    }

    #[test]
    fn alpha_creates_ribbons() {
        let vac = FockVector::<Rational>::vacuum();
        let a1 = alpha(-1, &vac);
        assert_eq!(
            a1,
            FockVector::basis(MayaState::from_partition(Partition::new(vec![1])))
        );

        let a2 = alpha(-2, &vac);
        let mut expect = FockVector::zero();
        expect.add_term(MayaState::from_partition(Partition::new(vec![2])), rat(1));
        expect.add_term(
            MayaState::from_partition(Partition::new(vec![1, 1])),
            rat(-1),
        );
        assert_eq!(a2, expect);
    }

    #[test]
    fn alpha_matches_ribbon_combinatorics() {
        // alpha_{-n} on v_lambda agrees with border-strip addition from the
        // partitions module, signs included
        for n in 1..=4i64 {
            for base in partitions_of(5) {
                let v = FockVector::<Rational>::basis(MayaState::from_partition(base.clone()));
                let moved = alpha(-n, &v);
                let mut expect = FockVector::zero();
                for (p, sign) in base.ribbons_addable(n as u32) {
                    expect.add_term(MayaState::from_partition(p), rat(sign));
                }
                assert_eq!(moved, expect, "alpha_{} on {:?}", -n, base);
            }
        }
    }

    #[test]
    fn alpha_iterated_from_vacuum() {
        // alpha_{-1}^2 |0> = v_(2) - ... : iterating single-box ribbon
        // addition must match the fock result
        let vac = FockVector::<Rational>::vacuum();
        let twice = alpha_power(-1, 2, &vac);
        let mut expect = FockVector::zero();
        for (p1, s1) in Partition::empty().ribbons_addable(1) {
            for (p2, s2) in p1.ribbons_addable(1) {
                expect.add_term(MayaState::from_partition(p2), rat(s1 * s2));
            }
        }
        assert_eq!(twice, expect);
    }

    #[test]
    fn alpha_commutator_is_central() {
        for m in 1..=5i64 {
            let vac = FockVector::<Rational>::vacuum();
            let ab = alpha(m, &alpha(-m, &vac));
            let ba = alpha(-m, &alpha(m, &vac));
            assert_eq!(ab.sub(&ba), vac.scale(&rat(m)), "[a_{}, a_{}]", m, -m);
        }
    }

    #[test]
    fn e_tilde_annihilates_vacuum() {
        let vac = FockVector::<BiPoly>::basis(MayaState::vacuum());
        assert!(e_tilde(0, EVariable::Z, 0, 8, &vac).is_zero());
        for n in 1..=4 {
            assert!(
                e_tilde(n, EVariable::Z, 0, 8, &vac).is_zero(),
                "E~_{}(z)|0> != 0",
                n
            );
        }
    }

    #[test]
    fn e_tilde_negative_has_no_vacuum_component() {
        // <0| E~_n(z) = 0 for n < 0: the vev of E~_n(z) v vanishes
        for s in charge_zero_states(4) {
            let v = FockVector::<BiPoly>::basis(s);
            for n in -4..0 {
                let moved = e_tilde(n, EVariable::Z, 0, 6, &v);
                assert!(moved.vev().is_zero());
            }
        }
    }

    #[test]
    fn diagonal_matches_shifted_power_sums() {
        // [z^j] of the E~_0 eigenvalue is shifted_power_sum(j)/j! per state
        for n in 0..=6u32 {
            for p in partitions_of(n) {
                let v = FockVector::<BiPoly>::basis(MayaState::from_partition(p.clone()));
                let diag = e_tilde(0, EVariable::Z, 0, 5, &v);
                let c = diag.coefficient(&MayaState::from_partition(p.clone()));
                let mut fact = rat(1);
                for j in 1..=5u32 {
                    fact *= rat(j as i64);
                    assert_eq!(
                        c.coeff(0, j),
                        p.shifted_power_sum(j) / &fact,
                        "z^{} on {:?}",
                        j,
                        p
                    );
                }
            }
        }
        // the one-box content sum: coefficient of z^2 on v_(2) is 1
        let v2 = FockVector::<BiPoly>::basis(MayaState::from_partition(Partition::new(vec![2])));
        let diag = e_tilde(0, EVariable::Z, 0, 3, &v2);
        let c = diag.coefficient(&MayaState::from_partition(Partition::new(vec![2])));
        assert_eq!(c.coeff(0, 2), rat(1));
    }

    #[test]
    fn alpha_bridge_to_characters() {
        // <0| alpha_{mu_l} ... alpha_{mu_1} |v_lambda> = chi^lambda_mu
        let mut table = crate::partitions::CharTable::new();
        for n in 1..=8u32 {
            for lam in partitions_of(n) {
                let v = FockVector::<Rational>::basis(MayaState::from_partition(lam.clone()));
                for mu in partitions_of(n) {
                    let mut moved = v.clone();
                    for &part in mu.parts().iter().rev() {
                        moved = alpha(part as i64, &moved);
                    }
                    assert_eq!(
                        moved.vev(),
                        table.character_rational(&lam, &mu),
                        "lambda {:?} mu {:?}",
                        lam,
                        mu
                    );
                }
            }
        }
    }

    #[test]
    fn vacuum_zeta_identity_to_order_ten() {
        assert!(verify_vacuum_zeta_identity(10));
    }

    #[test]
    fn vev_energy_matching() {
        let vac = FockVector::<Rational>::vacuum();
        assert_eq!(vac.vev(), rat(1));
        assert_eq!(alpha(1, &alpha(-1, &vac)).vev(), rat(1));
    }

    #[test]
    fn commutator_small_cases() {
        let states = charge_zero_states(4);
        assert!(verify_commutator(1, -1, 4, &states).is_ok());
        assert!(verify_commutator(2, 3, 4, &states).is_ok());
        assert!(verify_commutator(0, 0, 4, &states).is_ok());
        assert!(verify_commutator(0, 2, 4, &states).is_ok());
        assert!(verify_commutator(-2, 2, 4, &states).is_ok());
    }

    #[test]
    fn commutator_at_zero_small_cases() {
        let states = charge_zero_states(4);
        for k in -2..=2i64 {
            for l in -2..=2i64 {
                assert!(
                    verify_commutator_at_zero(k, l, 4, &states).is_ok(),
                    "k={} l={}",
                    k,
                    l
                );
            }
        }
    }

    #[test]
    fn completed_cycle_eigenvalues() {
        // on v_lambda the r-th completed cycle acts by
        // shifted_power_sum(r+1)/(r+1)
        for p in partitions_of(4) {
            let v = FockVector::<Rational>::basis(MayaState::from_partition(p.clone()));
            for r in 1..=3u32 {
                let moved = completed_cycle(r, &v);
                let c = moved.coefficient(&MayaState::from_partition(p.clone()));
                assert_eq!(c, p.shifted_power_sum(r + 1) / rat(r as i64 + 1));
            }
        }
    }
}
