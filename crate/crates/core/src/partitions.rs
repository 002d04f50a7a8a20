//! Integer partitions, border strips (ribbons), automorphism factors, and
//! irreducible symmetric-group characters via the Murnaghan-Nakayama rule.
//!
//! Partitions are stored as weakly decreasing lists of positive parts; the
//! empty partition is valid. Enumeration order is reverse lexicographic
//! everywhere, so `partitions_of(4)` yields `(4), (3,1), (2,2), (2,1,1),
//! (1,1,1,1)` in that order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rings::Rational;

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts, which must be weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        Partition { parts }
    }

    /// Build from parts in any order, sorting them.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|lambda|`, the integer being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicity of each part value, as (part, multiplicity) pairs in
    /// decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = vec![0u32; cols];
        for &p in &self.parts {
            for c in parts.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts }
    }

    /// First-column hook lengths `lambda_i + L - i` for `i = 1..=L`, where
    /// `L >= len` rows are used (trailing rows have part 0). These "beta
    /// numbers" are strictly decreasing and drive all ribbon moves.
    fn beta_numbers(&self, rows: usize) -> Vec<i64> {
        assert!(rows >= self.len());
        (0..rows)
            .map(|i| self.part(i) as i64 + (rows - 1 - i) as i64)
            .collect()
    }

    fn from_beta_numbers(mut beta: Vec<i64>) -> Partition {
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let rows = beta.len();
        let parts: Vec<u32> = beta
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (rows - 1 - i) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }

    /// All partitions obtained by adding a border strip of `n` cells,
    /// each with the sign `(-1)^height` of the strip.
    pub fn ribbons_addable(&self, n: u32) -> Vec<(Partition, i64)> {
        assert!(n >= 1);
        let rows = self.len() + n as usize;
        let beta = self.beta_numbers(rows);
        let occupied: std::collections::BTreeSet<i64> = beta.iter().copied().collect();
        let mut out = Vec::new();
        for &b in &beta {
            let target = b + n as i64;
            if occupied.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&x| x > b && x < target).count();
            let mut new_beta = beta.clone();
            let pos = new_beta.iter().position(|&x| x == b).unwrap();
            new_beta[pos] = target;
            let sign = if height % 2 == 0 { 1 } else { -1 };
            out.push((Partition::from_beta_numbers(new_beta), sign));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// All partitions obtained by removing a border strip of `n` cells,
    /// each with the sign `(-1)^height`.
    pub fn ribbons_removable(&self, n: u32) -> Vec<(Partition, i64)> {
        assert!(n >= 1);
        let rows = self.len().max(1);
        let beta = self.beta_numbers(rows);
        let occupied: std::collections::BTreeSet<i64> = beta.iter().copied().collect();
        let mut out = Vec::new();
        for &b in &beta {
            let target = b - n as i64;
            if target < 0 || occupied.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut new_beta = beta.clone();
            let pos = new_beta.iter().position(|&x| x == b).unwrap();
            new_beta[pos] = target;
            let sign = if height % 2 == 0 { 1 } else { -1 };
            out.push((Partition::from_beta_numbers(new_beta), sign));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// The content sum `sum_{(i,j) in lambda} (j - i)`.
    pub fn content_sum(&self) -> i64 {
        let mut acc = 0i64;
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p as i64 {
                acc += j - i as i64;
            }
        }
        acc
    }

    /// The shifted power sum
    /// `sum_i [(lambda_i - i + 1/2)^j - (-i + 1/2)^j]` (a finite sum: terms
    /// with `lambda_i = 0` vanish). For `j = r + 1` this is, up to the
    /// factor `1/(r+1)`, the completed-cycle weight of the partition.
    pub fn shifted_power_sum(&self, j: u32) -> Rational {
        assert!(j >= 1);
        let mut acc = Rational::zero();
        for (i, &p) in self.parts.iter().enumerate() {
            // lambda_i - i + 1/2 = (2(lambda_i - i) + 1)/2 with i 1-based
            let row = (i + 1) as i64;
            let a = Rational::new(BigInt::from(2 * (p as i64 - row) + 1), BigInt::from(2));
            let b = Rational::new(BigInt::from(-2 * row + 1), BigInt::from(2));
            acc += a.pow(j as i32) - b.pow(j as i32);
        }
        acc
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Parse a comma-separated part list such as "3,1,1". The empty string is
/// the empty partition. Parts are sorted if given out of order.
impl FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| format!("invalid partition part {:?}", piece))?;
            if p == 0 {
                return Err("partition parts must be positive".into());
            }
            parts.push(p);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_iter(n).collect()
}

/// Iterator over the partitions of `n` in reverse lexicographic order.
pub fn partitions_iter(n: u32) -> PartitionIter {
    PartitionIter {
        current: if n == 0 { Vec::new() } else { vec![n] },
        done: false,
    }
}

pub struct PartitionIter {
    current: Vec<u32>,
    done: bool,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let result = Partition {
            parts: self.current.clone(),
        };
        // standard successor in reverse lexicographic order: find the last
        // part exceeding 1, decrement it, and redistribute the remainder
        // greedily.
        match self.current.iter().rposition(|&p| p > 1) {
            None => self.done = true,
            Some(i) => {
                let cap = self.current[i] - 1;
                let mut rest = self.current[i] + (self.current.len() - 1 - i) as u32;
                self.current.truncate(i);
                while rest > 0 {
                    let take = cap.min(rest);
                    self.current.push(take);
                    rest -= take;
                }
            }
        }
        Some(result)
    }
}

/// The centralizer order `z_mu = prod_i i^{m_i} m_i!` where `m_i` is the
/// multiplicity of the part `i`.
pub fn z_factor(mu: &Partition) -> Rational {
    let mut acc = BigInt::one();
    for (part, mult) in mu.multiplicities() {
        acc *= BigInt::from(part).pow(mult);
        for j in 1..=mult {
            acc *= BigInt::from(j);
        }
    }
    Rational::from_integer(acc)
}

/// A memoized character table for the symmetric groups, filled on demand
/// by the Murnaghan-Nakayama recursion. One table per worker; creating a
/// fresh table is always correct, just slower.
#[derive(Default)]
pub struct CharTable {
    memo: HashMap<(Vec<u32>, Vec<u32>), BigInt>,
}

impl CharTable {
    pub fn new() -> Self {
        CharTable::default()
    }

    /// The irreducible character `chi^lambda_mu`, both partitions of the
    /// same integer, computed by recursive border-strip removal.
    pub fn character(&mut self, lambda: &Partition, mu: &Partition) -> BigInt {
        assert_eq!(
            lambda.size(),
            mu.size(),
            "character requires |lambda| = |mu|"
        );
        if lambda.is_empty() {
            return BigInt::one();
        }
        let key = (lambda.parts.clone(), mu.parts.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        // remove the largest part of mu first
        let strip = mu.parts[0];
        let rest = Partition {
            parts: mu.parts[1..].to_vec(),
        };
        let mut acc = BigInt::zero();
        for (smaller, sign) in lambda.ribbons_removable(strip) {
            acc += rat_sign(sign) * self.character(&smaller, &rest);
        }
        self.memo.insert(key, acc.clone());
        acc
    }

    /// Character as an exact rational (convenience for weighted sums).
    pub fn character_rational(&mut self, lambda: &Partition, mu: &Partition) -> Rational {
        Rational::from_integer(self.character(lambda, mu))
    }
}

fn rat_sign(sign: i64) -> BigInt {
    BigInt::from(sign)
}

/// Hook-length dimension `chi^lambda_{(1^n)} = n! / prod hooks`; an
/// independent route to the character on the identity class.
pub fn hook_length_dimension(lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut dim = BigInt::one();
    for k in 1..=n as u64 {
        dim *= BigInt::from(k);
    }
    let mut hooks = BigInt::one();
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 0..p as usize {
            let arm = p as i64 - 1 - j as i64;
            let leg = conj.part(j) as i64 - 1 - i as i64;
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    dim / hooks
}
