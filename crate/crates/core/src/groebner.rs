//! Buchberger's algorithm with the normal selection strategy and the
//! product and chain criteria; reduced bases; normal forms.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::monideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Polynomial, Term};

/// Work limits for a Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_pairs: 50_000, max_degree: 80 }
    }
}

/// A reduced Groebner basis: monic, interreduced, sorted by ascending
/// leading monomial. Two bases of the same ideal under the same order are
/// equal as values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: TermOrder,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Wraps polynomials that already form a reduced basis.
    pub(crate) fn from_reduced(nvars: usize, order: TermOrder, mut basis: Vec<Polynomial>) -> Self {
        basis.sort_by(|a, b| order.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));
        GroebnerBasis { nvars, order, basis }
    }

    /// The basis of a monomial ideal is its minimal generators.
    pub fn of_monomial_ideal(ideal: &MonomialIdeal, order: TermOrder) -> Self {
        let basis = ideal.gens().iter().map(|m| Polynomial::monomial(*m, order)).collect();
        Self::from_reduced(ideal.nvars(), order, basis)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.basis.iter().map(|g| g.leading_monomial().unwrap()))
    }

    /// Every basis element is a single term.
    pub fn is_monomial(&self) -> bool {
        self.basis.iter().all(|g| g.is_monomial())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { left: f.nvars(), right: self.nvars });
        }
        if f.order() != self.order {
            return Err(Error::RingMismatch(format!("term orders {:?} and {:?}", f.order(), self.order)));
        }
        Ok(reduce(f, &self.basis))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Full reduction of `f` by `basis` (division algorithm, remainder only).
pub(crate) fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let nvars = f.nvars();
    let order = f.order();
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f.clone();
    'outer: while let Some(lt) = p.leading_term().cloned() {
        for g in basis {
            let glt = g.leading_term().unwrap();
            if let Some(w) = lt.mono.div(&glt.mono) {
                let c = &lt.coeff / &glt.coeff;
                p = p.merge(g, &-c, &w);
                continue 'outer;
            }
        }
        rem.push(lt);
        p = Polynomial::from_sorted_terms(nvars, order, p.terms()[1..].to_vec());
    }
    Polynomial::from_sorted_terms(nvars, order, rem)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (ft, gt) = (f.leading_term().unwrap(), g.leading_term().unwrap());
    let l = ft.mono.lcm(&gt.mono);
    let a = f.mul_term(&gt.coeff, &l.div(&ft.mono).unwrap());
    let b = g.mul_term(&ft.coeff, &l.div(&gt.mono).unwrap());
    &a - &b
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Buchberger's algorithm. Deterministic for a fixed generator order.
pub fn buchberger(gens: &[Polynomial], order: TermOrder, budget: Budget) -> Result<GroebnerBasis> {
    let nvars = match gens.first() {
        Some(g) => g.nvars(),
        None => return Err(Error::InvalidArgument("buchberger needs at least one generator".into())),
    };
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::DimensionMismatch { left: g.nvars(), right: nvars });
        }
        let g = g.with_order(order);
        if !g.is_zero() {
            basis.push(g.primitive());
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis { nvars, order, basis });
    }
    basis.dedup();
    if basis.iter().any(|g| g.is_constant()) {
        return Ok(GroebnerBasis::from_reduced(nvars, order, vec![Polynomial::one(nvars, order)]));
    }

    let pair_key = |p: &Pair| (p.lcm.degree(), p.i, p.j);
    let mut pending: Vec<Pair> = Vec::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push(make_pair(&basis, i, j));
        }
    }
    let mut reductions = 0usize;
    while !pending.is_empty() {
        // normal strategy: smallest lcm first, ties by degree then order
        let idx = (0..pending.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pending[a], &pending[b]);
                pa.lcm
                    .degree()
                    .cmp(&pb.lcm.degree())
                    .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| pair_key(pa).cmp(&pair_key(pb)))
            })
            .unwrap();
        let pair = pending.swap_remove(idx);
        done.insert((pair.i, pair.j));

        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let (li, lj) = (fi.leading_monomial().unwrap(), fj.leading_monomial().unwrap());
        if li.is_coprime(&lj) {
            continue;
        }
        if chain_criterion(&basis, &pair, &pending, &done) {
            continue;
        }
        if pair.lcm.degree() > budget.max_degree || reductions >= budget.max_pairs {
            return Err(Error::BudgetExceeded { pairs: reductions, degree: pair.lcm.degree() });
        }
        reductions += 1;
        let s = s_polynomial(fi, fj);
        let r = reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.primitive();
        if r.is_constant() {
            return Ok(GroebnerBasis::from_reduced(nvars, order, vec![Polynomial::one(nvars, order)]));
        }
        let k = basis.len();
        basis.push(r);
        for i in 0..k {
            pending.push(make_pair(&basis, i, k));
        }
    }
    Ok(GroebnerBasis::from_reduced(nvars, order, interreduce(basis)))
}

fn make_pair(basis: &[Polynomial], i: usize, j: usize) -> Pair {
    let l = basis[i].leading_monomial().unwrap().lcm(&basis[j].leading_monomial().unwrap());
    Pair { lcm: l, i, j }
}

/// Buchberger's chain criterion: the pair `(i, j)` is redundant when some
/// `k` has `LM(k) | lcm(i, j)` and both `(i, k)` and `(j, k)` have already
/// been treated.
fn chain_criterion(basis: &[Polynomial], pair: &Pair, pending: &[Pair], done: &HashSet<(usize, usize)>) -> bool {
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for (k, g) in basis.iter().enumerate() {
        if k == pair.i || k == pair.j {
            continue;
        }
        if !g.leading_monomial().unwrap().divides(&pair.lcm) {
            continue;
        }
        let treated = |a: usize, b: usize| {
            let kk = key(a, b);
            done.contains(&kk) || !pending.iter().any(|p| (p.i, p.j) == kk)
        };
        if treated(pair.i, k) && treated(pair.j, k) {
            return true;
        }
    }
    false
}

/// Minimal, fully reduced and monic form of a Groebner basis.
fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = basis[0].order();
    basis.sort_by(|a, b| order.cmp(&a.leading_monomial().unwrap(), &b.leading_monomial().unwrap()));
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !kept.iter().any(|k| k.leading_monomial().unwrap().divides(&lm)) {
            kept.push(g);
        }
    }
    let mut out = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<Polynomial> = kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let g = &kept[i];
        let lt = g.leading_term().unwrap().clone();
        let tail = Polynomial::from_sorted_terms(g.nvars(), g.order(), g.terms()[1..].to_vec());
        let tail = reduce(&tail, &others);
        let head = Polynomial::term(lt.coeff, lt.mono, g.order());
        out.push((&head + &tail).monic());
    }
    out
}

/// Normal form of `f` with respect to `gb`.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}
