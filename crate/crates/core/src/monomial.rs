//! Exponent vectors and term orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of variables a monomial can carry. User rings are capped
/// at four variables; the extra slots host auxiliary elimination variables.
pub const MAX_VARS: usize = 6;

/// A monomial `x_1^{e_1} ... x_k^{e_k}` stored as a fixed-size exponent array.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut e = [0u16; MAX_VARS];
        for (slot, &x) in e.iter_mut().zip(exps) {
            *slot = u16::try_from(x).expect("exponent overflow");
        }
        Monomial { exps: e, nvars: exps.len() as u8 }
    }

    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8 }
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    /// The pure power `x_i^k`.
    pub fn pure_power(nvars: usize, i: usize, k: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = u16::try_from(k).expect("exponent overflow");
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn degree(&self) -> u32 {
        self.exps().iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps().iter().all(|&e| e == 0)
    }

    /// If this is `x_i^k` with `k > 0`, returns `(i, k)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps().iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e as u32));
            }
        }
        found
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] = m.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        m
    }

    /// `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars, other.nvars);
        (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] -= other.exps[i];
        }
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] = m.exps[i].max(other.exps[i]);
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] = m.exps[i].min(other.exps[i]);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.nvars as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut m = *self;
        for i in 0..self.nvars as usize {
            m.exps[i] = u16::try_from(m.exps[i] as u32 * k).expect("exponent overflow");
        }
        m
    }

    /// Inserts a new variable with exponent `e` at position `at`.
    pub fn insert_var(&self, at: usize, e: u32) -> Monomial {
        let n = self.nvars as usize;
        assert!(n < MAX_VARS && at <= n);
        let mut m = Monomial::one(n + 1);
        m.exps[..at].copy_from_slice(&self.exps[..at]);
        m.exps[at] = u16::try_from(e).expect("exponent overflow");
        m.exps[at + 1..=n].copy_from_slice(&self.exps[at..n]);
        m
    }

    /// Drops the variable at position `at`, which must have exponent zero.
    pub fn remove_var(&self, at: usize) -> Option<Monomial> {
        let n = self.nvars as usize;
        if self.exps[at] != 0 {
            return None;
        }
        let mut m = Monomial::one(n - 1);
        m.exps[..at].copy_from_slice(&self.exps[..at]);
        m.exps[at..n - 1].copy_from_slice(&self.exps[at + 1..n]);
        Some(m)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

/// Monomial orders over the ambient variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum TermOrder {
    /// Graded reverse lexicographic, `x_1 > x_2 > ...`.
    #[default]
    DegRevLex,
    /// Pure lexicographic, `x_1 > x_2 > ...`.
    Lex,
    /// Elimination order for the first `k` variables: degrevlex on the
    /// block `x_1..x_k`, ties broken by degrevlex on the rest.
    BlockElim(usize),
}

fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            // a smaller exponent in the last differing variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl TermOrder {
    /// Unchecked comparison; both monomials must live in the same ring.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars, b.nvars);
        let (ea, eb) = (a.exps(), b.exps());
        match *self {
            TermOrder::DegRevLex => degrevlex(ea, eb),
            TermOrder::Lex => ea.cmp(eb),
            TermOrder::BlockElim(k) => {
                let k = k.min(ea.len());
                match degrevlex(&ea[..k], &eb[..k]) {
                    Ordering::Equal => degrevlex(&ea[k..], &eb[k..]),
                    o => o,
                }
            }
        }
    }
}

/// Compares two monomials under `ord`.
pub fn cmp_monomials(a: &Monomial, b: &Monomial, ord: TermOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch { left: a.nvars(), right: b.nvars() });
    }
    Ok(ord.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn degrevlex_prefers_higher_first_variable_at_equal_degree() {
        assert_eq!(
            cmp_monomials(&m(&[2, 1]), &m(&[1, 2]), TermOrder::DegRevLex).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            cmp_monomials(&m(&[1, 1, 1]), &m(&[2, 0, 1]), TermOrder::DegRevLex).unwrap(),
            Ordering::Less
        );
        // degrevlex differs from deglex here
        assert_eq!(TermOrder::DegRevLex.cmp(&m(&[1, 0, 2]), &m(&[0, 2, 1])), Ordering::Less);
    }

    #[test]
    fn reflexive_and_lex() {
        let a = m(&[3, 4]);
        for ord in [TermOrder::DegRevLex, TermOrder::Lex, TermOrder::BlockElim(1)] {
            assert_eq!(cmp_monomials(&a, &a, ord).unwrap(), Ordering::Equal);
        }
        assert_eq!(cmp_monomials(&m(&[0, 5]), &m(&[1, 0]), TermOrder::Lex).unwrap(), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let ord = TermOrder::BlockElim(1);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(matches!(
            cmp_monomials(&m(&[1]), &m(&[1, 0]), TermOrder::Lex),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn insert_and_remove_variable() {
        let a = m(&[2, 3]);
        let b = a.insert_var(0, 4);
        assert_eq!(b.exps(), &[4, 2, 3]);
        assert_eq!(b.remove_var(0), None);
        assert_eq!(a.insert_var(0, 0).remove_var(0), Some(a));
        assert_eq!(a.insert_var(2, 1).exps(), &[2, 3, 1]);
    }
}
