//! Sparse exact linear algebra over the rationals: row echelon forms and
//! kernels. Column 0 is the largest monomial, so the leading (smallest)
//! column index of a row is its leading monomial.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::poly::Coeff;

/// Sorted `(column, value)` pairs with nonzero values.
pub type SparseVec = Vec<(u32, Coeff)>;

/// `a + c * b`.
pub fn axpy(a: &SparseVec, c: &Coeff, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, &b[j].1 * c));
            j += 1;
        } else {
            let v = &a[i].1 + &b[j].1 * c;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(a: &SparseVec, c: &Coeff) -> SparseVec {
    a.iter().map(|(i, v)| (*i, v * c)).collect()
}

/// Accumulates scaled sparse vectors.
#[derive(Default)]
pub struct Accumulator {
    acc: HashMap<u32, Coeff>,
}

impl Accumulator {
    pub fn add(&mut self, c: &Coeff, v: &SparseVec) {
        for (i, x) in v {
            *self.acc.entry(*i).or_insert_with(Coeff::zero) += x * c;
        }
    }

    pub fn finish(self) -> SparseVec {
        let mut out: SparseVec = self.acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }
}

/// Incremental row echelon form. Rows are monic at their pivot.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivots: HashMap<u32, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = u32> + '_ {
        self.pivots.keys().copied()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Eliminates leading entries of `v` against the pivots until its
    /// leading column is free (or `v` vanishes).
    pub fn semi_reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((col, c)) = v.first() {
            match self.pivots.get(col) {
                Some(&r) => {
                    let c = -c.clone();
                    v = axpy(&v, &c, &self.rows[r]);
                }
                None => break,
            }
        }
        v
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.semi_reduce(v);
        match v.first() {
            None => false,
            Some((col, c)) => {
                let col = *col;
                let v = if c.is_one() { v } else { scale(&v, &c.recip()) };
                self.pivots.insert(col, self.rows.len());
                self.rows.push(v);
                true
            }
        }
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        if self.rows.is_empty() {
            return v.clone();
        }
        let mut work: BTreeMap<u32, Coeff> = v.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((col, c)) = work.pop_first() {
            match self.pivots.get(&col) {
                Some(&r) => {
                    for (j, x) in &self.rows[r][1..] {
                        let e = work.entry(*j).or_insert_with(Coeff::zero);
                        *e -= x * &c;
                        if e.is_zero() {
                            work.remove(j);
                        }
                    }
                }
                None => out.push((col, c)),
            }
        }
        out
    }

    /// Reduced row echelon form: every pivot column is zero in all other rows.
    pub fn into_rref(mut self) -> Echelon {
        let mut order: Vec<(u32, usize)> = self.pivots.iter().map(|(c, r)| (*c, *r)).collect();
        // back-substitute from the last pivot column upwards
        order.sort_by_key(|a| std::cmp::Reverse(a.0));
        let mut done = Echelon::new();
        for (col, r) in order {
            let row = std::mem::take(&mut self.rows[r]);
            let reduced = done.reduce(&row);
            debug_assert_eq!(reduced.first().map(|e| e.0), Some(col));
            done.pivots.insert(col, done.rows.len());
            done.rows.push(reduced);
        }
        done
    }

    pub fn row_for_pivot(&self, col: u32) -> Option<&SparseVec> {
        self.pivots.get(&col).map(|&r| &self.rows[r])
    }
}

/// Basis of `{a : Σ a_i images[i] = 0}`, as sparse combination vectors
/// indexed by position in `images`.
pub fn kernel(images: &[SparseVec], width: u32) -> Vec<SparseVec> {
    // augment each image with a unit tag beyond the image columns
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut v = img.clone();
        v.push((width + i as u32, Coeff::one()));
        let v = ech.semi_reduce(v);
        match v.first() {
            Some((col, _)) if *col >= width => {
                out.push(v.into_iter().map(|(c, x)| (c - width, x)).collect());
            }
            Some(_) => {
                ech.insert(v);
            }
            None => unreachable!("tag column cannot cancel"),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn sv(e: &[(u32, i64)]) -> SparseVec {
        e.iter().map(|(i, v)| (*i, q(*v))).collect()
    }

    #[test]
    fn echelon_rank_and_rref() {
        let mut e = Echelon::new();
        assert!(e.insert(sv(&[(0, 1), (1, 1)])));
        assert!(e.insert(sv(&[(0, 1), (2, 1)])));
        assert!(!e.insert(sv(&[(1, 1), (2, -1)])));
        let r = e.into_rref();
        assert_eq!(r.rank(), 2);
        assert_eq!(r.row_for_pivot(0).unwrap(), &sv(&[(0, 1), (2, 1)]));
        assert_eq!(r.row_for_pivot(1).unwrap(), &sv(&[(1, 1), (2, -1)]));
    }

    #[test]
    fn kernel_of_dependent_rows() {
        let imgs = vec![sv(&[(0, 1)]), sv(&[(0, 2)]), sv(&[(1, 1)])];
        let k = kernel(&imgs, 2);
        assert_eq!(k.len(), 1);
        // 2*v0 - v1 = 0
        let combo = &k[0];
        let mut acc = Accumulator::default();
        for (i, c) in combo {
            acc.add(c, &imgs[*i as usize]);
        }
        assert!(acc.finish().is_empty());
    }
}
