//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, TermOrder};

pub type Coeff = BigRational;

/// A nonzero coefficient times a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coeff,
    pub mono: Monomial,
}

/// Terms kept strictly descending in `order`, with no zero coefficients.
/// The zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: TermOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: TermOrder) -> Self {
        Polynomial { nvars, order, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, order: TermOrder, c: Coeff) -> Self {
        Self::term(c, Monomial::one(nvars), order)
    }

    pub fn one(nvars: usize, order: TermOrder) -> Self {
        Self::constant(nvars, order, Coeff::one())
    }

    pub fn term(c: Coeff, mono: Monomial, order: TermOrder) -> Self {
        let nvars = mono.nvars();
        if c.is_zero() {
            return Self::zero(nvars, order);
        }
        Polynomial { nvars, order, terms: vec![Term { coeff: c, mono }] }
    }

    pub fn monomial(mono: Monomial, order: TermOrder) -> Self {
        Self::term(Coeff::one(), mono, order)
    }

    /// Builds a normalized polynomial from arbitrary (possibly repeated,
    /// unsorted, zero) terms.
    pub fn from_terms<I>(nvars: usize, order: TermOrder, terms: I) -> Self
    where
        I: IntoIterator<Item = (Coeff, Monomial)>,
    {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.nvars(), nvars, "monomial from a different ring");
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { nvars, order, terms }
    }

    /// Wraps terms already sorted, merged and zero-free.
    pub(crate) fn from_sorted_terms(nvars: usize, order: TermOrder, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { nvars, order, terms }
    }

    /// Re-normalizes the term list. Idempotent.
    pub fn normalized(&self) -> Self {
        Self::from_terms(self.nvars, self.order, self.terms.iter().map(|t| (t.coeff.clone(), t.mono)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one() && self.terms[0].coeff.is_one()
    }

    /// Single-term polynomial.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn with_order(&self, order: TermOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial { nvars: self.nvars, order, terms }
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { left: self.nvars, right: other.nvars });
        }
        if self.order != other.order {
            return Err(Error::RingMismatch(format!("term orders {:?} and {:?}", self.order, other.order)));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.merge(other, &Coeff::one(), &Monomial::one(self.nvars)))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.merge(other, &-Coeff::one(), &Monomial::one(self.nvars)))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self + c * m * other`, a sorted merge.
    pub(crate) fn merge(&self, other: &Polynomial, c: &Coeff, m: &Monomial) -> Polynomial {
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|t| (t.coeff.clone() * c, t.mono.mul(m))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (coeff, mono) = b.next().unwrap();
                    out.push(Term { coeff, mono });
                }
                (Some(ta), Some((_, mb))) => match ord.cmp(&ta.mono, mb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => {
                        let (coeff, mono) = b.next().unwrap();
                        out.push(Term { coeff, mono });
                    }
                    Ordering::Equal => {
                        let ta = a.next().unwrap();
                        let (cb, _) = b.next().unwrap();
                        let s = &ta.coeff + cb;
                        if !s.is_zero() {
                            out.push(Term { coeff: s, mono: ta.mono });
                        }
                    }
                },
            }
        }
        Polynomial { nvars: self.nvars, order: ord, terms: out }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        if other.terms.len() == 1 {
            let t = &other.terms[0];
            return self.mul_term(&t.coeff, &t.mono);
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return other.mul_term(&t.coeff, &t.mono);
        }
        let prod = self
            .terms
            .iter()
            .flat_map(|a| other.terms.iter().map(move |b| (&a.coeff * &b.coeff, a.mono.mul(&b.mono))));
        Polynomial::from_terms(self.nvars, self.order, prod)
    }

    /// `c * m * self`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|t| Term { coeff: &t.coeff * c, mono: t.mono.mul(m) }).collect();
        Polynomial { nvars: self.nvars, order: self.order, terms }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.nvars))
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars, self.order);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Integer content removed and positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let den_lcm = self.terms.iter().fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let nums: Vec<BigInt> = self.terms.iter().map(|t| (&t.coeff * &den_lcm).to_integer()).collect();
        let mut g = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        if nums[0].is_negative() {
            g = -g;
        }
        let terms = self
            .terms
            .iter()
            .zip(nums)
            .map(|(t, n)| Term { coeff: BigRational::from_integer(n / &g), mono: t.mono })
            .collect();
        Polynomial { nvars: self.nvars, order: self.order, terms }
    }

    /// Embeds into a ring with one more variable inserted at `at`, with
    /// exponent zero in every term.
    pub fn insert_var(&self, at: usize, order: TermOrder) -> Polynomial {
        let terms = self.terms.iter().map(|t| (t.coeff.clone(), t.mono.insert_var(at, 0)));
        Polynomial::from_terms(self.nvars + 1, order, terms)
    }

    /// Drops variable `at`; `None` if it occurs.
    pub fn remove_var(&self, at: usize, order: TermOrder) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((t.coeff.clone(), t.mono.remove_var(at)?));
        }
        Some(Polynomial::from_terms(self.nvars - 1, order, terms))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let lt = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rem.leading_term() {
            let m = t.mono.div(&lt.mono)?;
            let c = &t.coeff / &lt.coeff;
            rem = rem.merge(divisor, &-c.clone(), &m);
            quot.push((c, m));
        }
        Some(Polynomial::from_terms(self.nvars, self.order, quot))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials from different rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials from different rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials from different rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

/// Rational from an integer.
pub fn q(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    const O: TermOrder = TermOrder::DegRevLex;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    fn p(terms: &[(i64, [u32; 2])]) -> Polynomial {
        Polynomial::from_terms(2, O, terms.iter().map(|(c, e)| (q(*c), mono(e))))
    }

    #[test]
    fn add_examples() {
        let x_plus_y = p(&[(1, [1, 0]), (1, [0, 1])]);
        let x_minus_y = p(&[(1, [1, 0]), (-1, [0, 1])]);
        assert_eq!(&x_plus_y + &x_minus_y, p(&[(2, [1, 0])]));
        assert_eq!(&x_plus_y + &Polynomial::zero(2, O), x_plus_y);
        let a = p(&[(1, [6, 0]), (1, [1, 5])]);
        let b = p(&[(1, [0, 6]), (-1, [1, 5])]);
        assert_eq!(&a + &b, p(&[(1, [6, 0]), (1, [0, 6])]));
    }

    #[test]
    fn mul_examples() {
        let x_plus_y = p(&[(1, [1, 0]), (1, [0, 1])]);
        let x_minus_y = p(&[(1, [1, 0]), (-1, [0, 1])]);
        assert_eq!(&x_plus_y * &x_minus_y, p(&[(1, [2, 0]), (-1, [0, 2])]));
        assert_eq!(&x_plus_y * &Polynomial::one(2, O), x_plus_y);
        let s = p(&[(1, [4, 1]), (1, [0, 6])]);
        assert_eq!(&s * &s, p(&[(1, [8, 2]), (2, [4, 7]), (1, [0, 12])]));
    }

    #[test]
    fn terms_are_sorted_and_zero_free() {
        let f = Polynomial::from_terms(2, O, vec![(q(1), mono(&[0, 1])), (q(3), mono(&[2, 0])), (q(-1), mono(&[0, 1]))]);
        assert_eq!(f.len(), 1);
        assert_eq!(f.leading_monomial(), Some(mono(&[2, 0])));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::monomial(mono(&[1, 0]), O);
        let b = Polynomial::monomial(Monomial::new(&[1, 0, 0]), O);
        assert!(a.checked_add(&b).is_err());
        let c = Polynomial::monomial(mono(&[1, 0]), TermOrder::Lex);
        assert!(matches!(a.checked_mul(&c), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn primitive_and_exact_division() {
        let f = Polynomial::from_terms(2, O, vec![(BigRational::new(2.into(), 3.into()), mono(&[1, 0])), (q(-4), mono(&[0, 1]))]);
        assert_eq!(f.primitive(), p(&[(1, [1, 0]), (-6, [0, 1])]));
        let g = p(&[(1, [1, 0]), (1, [0, 1])]);
        let h = p(&[(1, [1, 0]), (-1, [0, 1])]);
        assert_eq!((&g * &h).div_exact(&g), Some(h.clone()));
        assert_eq!(p(&[(1, [1, 1])]).div_exact(&g), None);
    }
}
