//! Rank lower bounds modulo a large prime.
//!
//! A rational matrix whose denominators are prime to `p` has rank mod `p`
//! at most its rational rank: a nonzero minor mod `p` is nonzero over `Q`.
//! Callers compare the modular rank with a known upper bound for the
//! rational rank; equality proves the rational rank, anything else is
//! undecided and falls back to exact arithmetic.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::linalg::SparseVec;
use crate::poly::Coeff;

const P: u64 = (1 << 61) - 1;

pub(crate) type ModVec = Vec<(u32, u64)>;

fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn inv(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    acc
}

fn residue(n: &BigInt) -> u64 {
    let r = n % BigInt::from(P);
    let r = r.to_i128().unwrap();
    if r < 0 {
        (r + P as i128) as u64
    } else {
        r as u64
    }
}

/// `c mod p`, or `None` when `p` divides the denominator.
pub(crate) fn reduce_coeff(c: &Coeff) -> Option<u64> {
    let d = residue(c.denom());
    if d == 0 {
        return None;
    }
    Some(mul(residue(c.numer()), inv(d)))
}

pub(crate) fn reduce_vec(v: &SparseVec) -> Option<ModVec> {
    let mut out = Vec::with_capacity(v.len());
    for (i, c) in v {
        if c.is_zero() {
            continue;
        }
        let r = reduce_coeff(c)?;
        if r != 0 {
            out.push((*i, r));
        }
    }
    Some(out)
}

/// `a - c * b`.
fn axpy(a: &ModVec, c: u64, b: &ModVec) -> ModVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, sub(0, mul(b[j].1, c))));
            j += 1;
        } else {
            let v = sub(a[i].1, mul(b[j].1, c));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental echelon form over `GF(p)`; rows are monic at their first
/// column.
#[derive(Clone, Debug, Default)]
pub(crate) struct ModEchelon {
    rows: Vec<ModVec>,
    pivots: HashMap<u32, usize>,
}

impl ModEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, mut v: ModVec) -> bool {
        while let Some(&(col, c)) = v.first() {
            match self.pivots.get(&col) {
                Some(&r) => v = axpy(&v, c, &self.rows[r]),
                None => {
                    let s = inv(c);
                    for e in v.iter_mut() {
                        e.1 = mul(e.1, s);
                    }
                    self.pivots.insert(col, self.rows.len());
                    self.rows.push(v);
                    return true;
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn residues_of_rationals() {
        assert_eq!(reduce_coeff(&q(3, 1)), Some(3));
        assert_eq!(reduce_coeff(&q(-1, 1)), Some(P - 1));
        let half = reduce_coeff(&q(1, 2)).unwrap();
        assert_eq!(mul(half, 2), 1);
        assert_eq!(reduce_coeff(&Coeff::new(BigInt::from(1), BigInt::from(P))), None);
    }

    #[test]
    fn rank_of_small_matrices() {
        let mut e = ModEchelon::new();
        assert!(e.insert(vec![(0, 1), (1, 2)]));
        assert!(e.insert(vec![(0, 2), (2, 1)]));
        // (0,1,2) - 2*(...) combination: row3 = row1*2 - row2 = (0, 4, -1) in cols 1,2
        assert!(!e.insert(vec![(1, 4), (2, P - 1)]));
        assert!(e.insert(vec![(2, 5)]));
        assert_eq!(e.rank(), 3);
    }
}
