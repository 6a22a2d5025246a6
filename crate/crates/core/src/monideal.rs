//! Monomial ideals with minimal generators: the fast path for the
//! monomial ideals that dominate this domain, and the leading-term ideals
//! of Groebner bases.

use crate::monomial::{Monomial, TermOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    /// Minimal generators, sorted by exponent vector.
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        minimize(&mut gens);
        MonomialIdeal { nvars, gens }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    /// The maximal ideal `(x_1..x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::new(nvars, (0..nvars).map(|i| Monomial::var(nvars, i)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Exponent of the smallest pure power of `x_i` in the ideal.
    pub fn pure_power(&self, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .filter(|g| (0..self.nvars).all(|j| j == i || g.exp(j) == 0))
            .map(|g| g.exp(i))
            .min()
    }

    /// Every variable has a pure power in the ideal.
    pub fn is_m_primary(&self) -> bool {
        (0..self.nvars).all(|i| self.pure_power(i).is_some())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().chain(&other.gens).copied())
    }

    pub fn mul(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b))))
    }

    pub fn pow(&self, n: u32) -> MonomialIdeal {
        let mut acc = Self::unit(self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))))
    }

    /// `(self : u)` for a monomial `u`.
    pub fn colon_monomial(&self, u: &Monomial) -> MonomialIdeal {
        Self::new(self.nvars, self.gens.iter().map(|g| g.div(&g.gcd(u)).unwrap()))
    }

    /// `(self : other) = ∩_u (self : u)` over generators `u` of `other`.
    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut acc = Self::unit(self.nvars);
        for u in &other.gens {
            acc = acc.intersect(&self.colon_monomial(u));
            if acc == *self {
                break;
            }
        }
        acc
    }

    /// Monomials outside the ideal. Requires the ideal to be m-primary;
    /// returns `None` otherwise. Ordered descending in `order`.
    pub fn standard_monomials(&self, order: TermOrder) -> Option<Vec<Monomial>> {
        if !self.is_m_primary() {
            return None;
        }
        let mut out = Vec::new();
        let bounds: Vec<u32> = (0..self.nvars).map(|i| self.pure_power(i).unwrap()).collect();
        let mut exps = vec![0u32; self.nvars];
        self.enumerate(0, &bounds, &mut exps, &mut |m| out.push(m));
        out.sort_by(|a, b| order.cmp(b, a));
        Some(out)
    }

    /// Number of standard monomials, i.e. `λ(R/I)`. `None` unless m-primary.
    pub fn colength(&self) -> Option<u64> {
        if !self.is_m_primary() {
            return None;
        }
        let bounds: Vec<u32> = (0..self.nvars).map(|i| self.pure_power(i).unwrap()).collect();
        let mut exps = vec![0u32; self.nvars];
        let mut count = 0u64;
        self.enumerate(0, &bounds, &mut exps, &mut |_| count += 1);
        Some(count)
    }

    fn enumerate(&self, i: usize, bounds: &[u32], exps: &mut Vec<u32>, visit: &mut impl FnMut(Monomial)) {
        if i == self.nvars {
            visit(Monomial::new(exps));
            return;
        }
        for e in 0..bounds[i] {
            exps[i] = e;
            // the remaining variables at zero give the smallest candidate
            let probe = Monomial::new(exps);
            if self.contains(&probe) {
                break;
            }
            self.enumerate(i + 1, bounds, exps, visit);
        }
        exps[i..].iter_mut().for_each(|e| *e = 0);
    }
}

/// Removes duplicates and generators divisible by another generator.
fn minimize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| (m.degree(), m.exps().to_vec()));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens.iter() {
        if !kept.iter().any(|k| k.divides(g)) {
            kept.push(*g);
        }
    }
    kept.sort_by(|a, b| a.exps().cmp(b.exps()));
    *gens = kept;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(gens: &[[u32; 2]]) -> MonomialIdeal {
        MonomialIdeal::new(2, gens.iter().map(|e| Monomial::new(e)))
    }

    #[test]
    fn powers_and_minimality() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.pow(2), mi(&[[2, 0], [1, 1], [0, 2]]));
        assert!(m.pow(0).is_unit());
        let i = mi(&[[4, 0], [3, 1], [1, 3], [0, 4]]);
        assert!(i.pow(2).contains(&Monomial::new(&[4, 4])));
        assert_eq!(mi(&[[2, 0], [3, 1]]).gens().len(), 1);
    }

    #[test]
    fn colength_examples() {
        assert_eq!(MonomialIdeal::maximal(2).colength(), Some(1));
        assert_eq!(mi(&[[6, 0], [4, 1], [1, 5], [0, 6]]).colength(), Some(23));
        assert_eq!(mi(&[[7, 0], [6, 1], [1, 6], [0, 7]]).colength(), Some(38));
        assert_eq!(mi(&[[1, 0]]).colength(), None);
    }

    #[test]
    fn colon_examples() {
        let i = mi(&[[4, 0], [3, 1], [1, 3], [0, 4]]);
        let c = i.pow(2).colon(&i);
        assert!(c.contains(&Monomial::new(&[2, 2])));
        assert!(!i.contains(&Monomial::new(&[2, 2])));
        assert_eq!(mi(&[[2, 0], [1, 1]]).colon_monomial(&Monomial::new(&[1, 0])), MonomialIdeal::maximal(2));
    }
}
