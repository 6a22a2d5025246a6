//! Finite-dimensional quotients `R/A` of an m-primary ideal `A`.
//!
//! The standard monomials of a reduced Groebner basis of `A` form a vector
//! space basis of `R/A` (Macaulay). Ideal arithmetic above `A` then turns
//! into exact linear algebra: an ideal `B ⊇ A` is a subspace of `R/A`
//! closed under multiplication, its leading monomials are the pivots of an
//! echelon form, and colons are kernels of multiplication maps.

use std::collections::HashMap;

use num_traits::One;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::linalg::{self, Accumulator, Echelon, SparseVec};
use crate::monideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Coeff, Polynomial, Term};

pub(crate) struct Quotient {
    nvars: usize,
    order: TermOrder,
    gb: GroebnerBasis,
    lt: MonomialIdeal,
    std: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    memo: HashMap<Monomial, SparseVec>,
}

impl Quotient {
    pub fn new(gb: GroebnerBasis) -> Result<Self> {
        let lt = gb.leading_ideal();
        let std = lt
            .standard_monomials(gb.order())
            .ok_or_else(|| Error::NotMPrimary("quotient is not finite-dimensional".into()))?;
        let index = std.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
        Ok(Quotient { nvars: gb.nvars(), order: gb.order(), gb, lt, std, index, memo: HashMap::new() })
    }

    pub fn dim(&self) -> usize {
        self.std.len()
    }

    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.std
    }

    /// Coordinates of the normal form of `m`.
    pub fn nf_monomial(&mut self, m: &Monomial) -> SparseVec {
        if let Some(&i) = self.index.get(m) {
            return vec![(i, Coeff::one())];
        }
        if let Some(v) = self.memo.get(m) {
            return v.clone();
        }
        let g = self
            .gb
            .basis()
            .iter()
            .find(|g| g.leading_monomial().unwrap().divides(m))
            .expect("non-standard monomial lies in the leading ideal");
        if g.len() == 1 {
            return Vec::new();
        }
        let w = m.div(&g.leading_monomial().unwrap()).unwrap();
        let tail: Vec<Term> = g.terms()[1..].to_vec();
        let mut acc = Accumulator::default();
        for t in &tail {
            // g is monic: m ≡ -w * tail(g)
            let v = self.nf_monomial(&t.mono.mul(&w));
            acc.add(&-t.coeff.clone(), &v);
        }
        let v = acc.finish();
        self.memo.insert(*m, v.clone());
        v
    }

    pub fn reduce(&mut self, f: &Polynomial) -> SparseVec {
        let mut acc = Accumulator::default();
        for t in f.terms() {
            let v = self.nf_monomial(&t.mono);
            acc.add(&t.coeff, &v);
        }
        acc.finish()
    }

    pub fn to_poly(&self, v: &SparseVec) -> Polynomial {
        let terms = v.iter().map(|(i, c)| Term { coeff: c.clone(), mono: self.std[*i as usize] }).collect();
        Polynomial::from_sorted_terms(self.nvars, self.order, terms)
    }

    /// The image of the ideal generated by `polys` in `R/A`.
    pub fn ideal_span(&mut self, polys: &[Polynomial]) -> Echelon {
        let mut ech = Echelon::new();
        let std = self.std.clone();
        for f in polys {
            // smallest multipliers first keeps the rows short
            for s in std.iter().rev() {
                let v = self.reduce(&f.mul_term(&Coeff::one(), s));
                if !v.is_empty() {
                    ech.insert(v);
                }
                if ech.rank() == self.dim() {
                    return ech;
                }
            }
        }
        ech
    }

    /// Reduced Groebner basis of `A + lift(sub)`, where `sub` is an ideal of
    /// `R/A` given as a subspace.
    pub fn extend(&mut self, sub: Echelon) -> GroebnerBasis {
        if sub.rank() == 0 {
            return self.gb.clone();
        }
        let rref = sub.into_rref();
        let pivots: Vec<Monomial> = rref.pivot_columns().map(|c| self.std[c as usize]).collect();
        let lt = MonomialIdeal::new(self.nvars, self.lt.gens().iter().copied().chain(pivots));
        let mut basis = Vec::with_capacity(lt.gens().len());
        for g in lt.gens() {
            let poly = match self.index.get(g) {
                Some(&col) => self.to_poly(rref.row_for_pivot(col).expect("standard generator is a pivot")),
                None => {
                    let v = self.nf_monomial(g);
                    let r = rref.reduce(&v);
                    let tail = self.to_poly(&r);
                    &Polynomial::monomial(*g, self.order) - &tail
                }
            };
            basis.push(poly);
        }
        GroebnerBasis::from_reduced(self.nvars, self.order, basis)
    }

    /// `{f ∈ R/A : f·u ∈ B for every u in multipliers}` where `self = R/A`
    /// and `target = R/B`. Requires `A·u ⊆ B` for each multiplier so that the
    /// map is well defined.
    pub fn kernel(&mut self, multipliers: &[Polynomial], target: &mut Quotient) -> Echelon {
        // None stands for the full space with its unit basis
        let mut basis: Option<Vec<SparseVec>> = None;
        for u in multipliers {
            let mut cache: HashMap<u32, SparseVec> = HashMap::new();
            let mut image_of = |s: u32, target: &mut Quotient| -> SparseVec {
                cache
                    .entry(s)
                    .or_insert_with(|| target.reduce(&u.mul_term(&Coeff::one(), &self.std[s as usize])))
                    .clone()
            };
            let images: Vec<SparseVec> = match &basis {
                None => (0..self.dim() as u32).map(|s| image_of(s, target)).collect(),
                Some(vs) => vs
                    .iter()
                    .map(|v| {
                        let mut acc = Accumulator::default();
                        for (s, c) in v {
                            acc.add(c, &image_of(*s, target));
                        }
                        acc.finish()
                    })
                    .collect(),
            };
            let combos = linalg::kernel(&images, target.dim() as u32);
            let next: Vec<SparseVec> = match &basis {
                None => combos,
                Some(vs) => combos
                    .iter()
                    .map(|k| {
                        let mut acc = Accumulator::default();
                        for (i, c) in k {
                            acc.add(c, &vs[*i as usize]);
                        }
                        acc.finish()
                    })
                    .collect(),
            };
            basis = Some(next);
            if basis.as_ref().is_some_and(|b| b.is_empty()) {
                break;
            }
        }
        let mut ech = Echelon::new();
        match basis {
            None => {
                for s in 0..self.dim() as u32 {
                    ech.insert(vec![(s, Coeff::one())]);
                }
            }
            Some(vs) => {
                for v in vs {
                    ech.insert(v);
                }
            }
        }
        ech
    }
}
