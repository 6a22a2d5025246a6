//! Ideals of `Q[x_1..x_d]` with a lazily computed reduced Groebner basis.
//!
//! Each ideal may carry a *floor*: an m-primary monomial ideal known to be
//! contained in it. Floors let Groebner bases, colons and lengths be
//! computed by linear algebra in the finite-dimensional quotient by the
//! floor instead of by Buchberger's algorithm.

use std::sync::OnceLock;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, Budget, GroebnerBasis};
use crate::monideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Coeff, Polynomial};
use crate::quotient::Quotient;
use crate::ring::RingCtx;

/// Three-valued flag for properties that may not have been decided yet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tristate {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    order: TermOrder,
    gens: Vec<Polynomial>,
    monomial: Option<MonomialIdeal>,
    floor: Option<MonomialIdeal>,
    gb: OnceLock<GroebnerBasis>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Sum,
    Product,
}

impl Ideal {
    /// Ideal generated by `gens` in the ring `ring`. Zero generators are
    /// dropped.
    pub fn new(ring: &RingCtx, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if g.nvars() != ring.dim() {
                return Err(Error::DimensionMismatch { left: g.nvars(), right: ring.dim() });
            }
        }
        let gens = gens.into_iter().map(|g| g.with_order(ring.order())).collect();
        Ok(Self::from_polys(ring.dim(), ring.order(), gens))
    }

    pub fn from_polys(nvars: usize, order: TermOrder, gens: Vec<Polynomial>) -> Ideal {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars && g.order() == order));
        let monomial = if gens.iter().all(|g| g.is_monomial()) {
            Some(MonomialIdeal::new(nvars, gens.iter().map(|g| g.leading_monomial().unwrap())))
        } else {
            None
        };
        let floor = monomial.clone().filter(|m| m.is_m_primary());
        Ideal { nvars, order, gens, monomial, floor, gb: OnceLock::new() }
    }

    pub fn from_monomial(ideal: &MonomialIdeal, order: TermOrder) -> Ideal {
        let gens = ideal.gens().iter().map(|m| Polynomial::monomial(*m, order)).collect();
        Self::from_polys(ideal.nvars(), order, gens)
    }

    pub fn unit(nvars: usize, order: TermOrder) -> Ideal {
        Self::from_polys(nvars, order, vec![Polynomial::one(nvars, order)])
    }

    pub fn maximal(nvars: usize, order: TermOrder) -> Ideal {
        Self::from_monomial(&MonomialIdeal::maximal(nvars), order)
    }

    /// Wraps a reduced basis, recording a known monomial floor.
    pub(crate) fn from_gb(gb: GroebnerBasis, floor: Option<MonomialIdeal>) -> Ideal {
        let mut ideal = Self::from_polys(gb.nvars(), gb.order(), gb.basis().to_vec());
        if ideal.floor.is_none() {
            ideal.floor = floor;
        }
        let _ = ideal.gb.set(gb);
        ideal
    }

    fn with_floor(mut self, floor: Option<MonomialIdeal>) -> Ideal {
        if self.floor.is_none() {
            self.floor = floor;
        }
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial.is_some()
    }

    pub fn as_monomial(&self) -> Option<&MonomialIdeal> {
        self.monomial.as_ref()
    }

    /// A monomial m-primary ideal known to lie inside this one.
    pub fn floor(&self) -> Option<&MonomialIdeal> {
        self.floor.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// m-primarity as far as it is known without computing a basis.
    pub fn m_primary_hint(&self) -> Tristate {
        if self.floor.is_some() {
            Tristate::Yes
        } else if self.monomial.is_some() || self.gens.is_empty() {
            Tristate::No
        } else if let Some(gb) = self.gb.get() {
            if gb.leading_ideal().is_m_primary() {
                Tristate::Yes
            } else {
                Tristate::No
            }
        } else {
            Tristate::Unknown
        }
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { left: self.nvars, right: other.nvars });
        }
        if self.order != other.order {
            return Err(Error::RingMismatch(format!("term orders {:?} and {:?}", self.order, other.order)));
        }
        Ok(())
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { left: f.nvars(), right: self.nvars });
        }
        if f.order() != self.order {
            return Err(Error::RingMismatch(format!("term orders {:?} and {:?}", f.order(), self.order)));
        }
        Ok(())
    }

    /// The reduced Groebner basis, computed on first use.
    pub fn groebner(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = self.compute_groebner(Budget::default())?;
        Ok(self.gb.get_or_init(|| gb))
    }

    fn compute_groebner(&self, budget: Budget) -> Result<GroebnerBasis> {
        if self.gens.is_empty() {
            return Ok(GroebnerBasis::from_reduced(self.nvars, self.order, Vec::new()));
        }
        if let Some(m) = &self.monomial {
            return Ok(GroebnerBasis::of_monomial_ideal(m, self.order));
        }
        if let Some(floor) = &self.floor {
            // monomial generators join the floor directly
            let mut base = floor.clone();
            let mut rest = Vec::new();
            for g in &self.gens {
                if g.is_monomial() {
                    base = base.sum(&MonomialIdeal::new(self.nvars, g.leading_monomial()));
                } else {
                    rest.push(g.clone());
                }
            }
            let mut q = Quotient::new(GroebnerBasis::of_monomial_ideal(&base, self.order))?;
            let span = q.ideal_span(&rest);
            return Ok(q.extend(span));
        }
        buchberger(&self.gens, self.order, budget)
    }

    /// Basis computed through a caller-supplied monomial floor.
    pub(crate) fn groebner_with_floor(&self, floor: &MonomialIdeal) -> Result<GroebnerBasis> {
        let mut with = self.clone();
        with.floor = Some(floor.clone());
        with.gb = OnceLock::new();
        with.compute_groebner(Budget::default())
    }

    /// A monomial floor, computing `m^c` for the least `c` with `m^c ⊆ I`
    /// when none is recorded.
    pub fn ensure_floor(&self) -> Result<MonomialIdeal> {
        if let Some(f) = &self.floor {
            return Ok(f.clone());
        }
        let gb = self.groebner()?;
        let mut q = Quotient::new(gb.clone())?;
        let bound = q.dim() + 1;
        let m = MonomialIdeal::maximal(self.nvars);
        let mut power = MonomialIdeal::unit(self.nvars);
        for _ in 0..=bound {
            if power.gens().iter().all(|g| q.nf_monomial(g).is_empty()) {
                return Ok(power);
            }
            power = power.mul(&m);
        }
        Err(Error::NotMPrimary("quotient is finite but has support away from the origin".into()))
    }

    /// Finite colength and support at the origin.
    pub fn is_m_primary(&self) -> Result<bool> {
        match self.m_primary_hint() {
            Tristate::Yes => return Ok(true),
            Tristate::No if self.gb.get().is_some() || self.monomial.is_some() => return Ok(false),
            _ => {}
        }
        if self.gens.is_empty() {
            return Ok(false);
        }
        let gb = self.groebner()?;
        if gb.is_unit() || !gb.leading_ideal().is_m_primary() {
            return Ok(false);
        }
        match self.ensure_floor() {
            Ok(_) => Ok(true),
            Err(Error::NotMPrimary(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    fn require_m_primary(&self, what: &str) -> Result<()> {
        if self.is_unit()? || self.is_m_primary()? {
            Ok(())
        } else {
            Err(Error::NotMPrimary(what.to_string()))
        }
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        if let Some(m) = &self.monomial {
            return Ok(m.is_unit());
        }
        Ok(self.groebner()?.is_unit())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        if let Some(m) = &self.monomial {
            return Ok(f.terms().iter().all(|t| m.contains(&t.mono)));
        }
        self.groebner()?.contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        if let (Some(a), Some(b)) = (&self.monomial, &other.monomial) {
            return Ok(a.contains_ideal(b));
        }
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `λ(R/I)`.
    pub fn length(&self) -> Result<u64> {
        if self.is_unit()? {
            return Ok(0);
        }
        if let Some(m) = &self.monomial {
            return m.colength().ok_or_else(|| Error::NotMPrimary("length of a monomial ideal".into()));
        }
        self.require_m_primary("length")?;
        Ok(self.groebner()?.leading_ideal().colength().expect("m-primary leading ideal"))
    }

    /// `I^n`; the unit ideal for `n = 0`.
    pub fn power(&self, n: u32) -> Ideal {
        if n == 0 {
            return Ideal::unit(self.nvars, self.order);
        }
        if let Some(m) = &self.monomial {
            return Ideal::from_monomial(&m.pow(n), self.order);
        }
        let mut gens = self.gens.clone();
        for _ in 1..n {
            gens = products(&gens, &self.gens);
        }
        let floor = self.floor.as_ref().map(|f| f.pow(n));
        Ideal::from_polys(self.nvars, self.order, gens).with_floor(floor)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        let floor = match (&self.floor, &other.floor) {
            (Some(a), Some(b)) => Some(a.sum(b)),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        Ok(Ideal::from_polys(self.nvars, self.order, gens).with_floor(floor))
    }

    /// `I + (f)`.
    pub fn add_element(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        let mut gens = self.gens.clone();
        gens.push(f.clone());
        Ok(Ideal::from_polys(self.nvars, self.order, gens).with_floor(self.floor.clone()))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if let (Some(a), Some(b)) = (&self.monomial, &other.monomial) {
            return Ok(Ideal::from_monomial(&a.mul(b), self.order));
        }
        let floor = match (&self.floor, &other.floor) {
            (Some(a), Some(b)) => Some(a.mul(b)),
            _ => None,
        };
        Ok(Ideal::from_polys(self.nvars, self.order, products(&self.gens, &other.gens)).with_floor(floor))
    }

    /// `(I : J)`. `I` must be m-primary or the unit ideal.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Err(Error::InvalidArgument("colon by the zero ideal".into()));
        }
        self.require_m_primary("colon")?;
        if self.is_unit()? {
            return Ok(self.clone());
        }
        colon_with_lower(self, other, self)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        if let (Some(a), Some(b)) = (&self.monomial, &other.monomial) {
            return Ok(a == b);
        }
        Ok(self.groebner()? == other.groebner()?)
    }
}

fn products(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(a.len() * b.len());
    for f in a {
        for g in b {
            let p = (f * g).primitive();
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// `(A : K)` given an ideal `lower ⊆ (A : K)` with an m-primary basis.
pub(crate) fn colon_with_lower(a: &Ideal, k: &Ideal, lower: &Ideal) -> Result<Ideal> {
    if let (Some(am), Some(km)) = (&a.monomial, &k.monomial) {
        return Ok(Ideal::from_monomial(&am.colon(km), a.order));
    }
    let mut qa = Quotient::new(a.groebner()?.clone())?;
    let mut qc = Quotient::new(lower.groebner()?.clone())?;
    let kernel = qc.kernel(k.gens(), &mut qa);
    let gb = qc.extend(kernel);
    Ok(Ideal::from_gb(gb, lower.floor.clone()))
}

/// `I^n`.
pub fn ideal_power(ideal: &Ideal, n: u32) -> Ideal {
    ideal.power(n)
}

pub fn ideal_combine(a: &Ideal, b: &Ideal, op: CombineOp) -> Result<Ideal> {
    match op {
        CombineOp::Sum => a.sum(b),
        CombineOp::Product => a.product(b),
    }
}

pub fn colon(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.colon(b)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

pub fn is_m_primary(ideal: &Ideal) -> Result<bool> {
    ideal.is_m_primary()
}

pub fn length_quotient(ideal: &Ideal) -> Result<u64> {
    ideal.length()
}

pub fn contains(ideal: &Ideal, f: &Polynomial) -> Result<bool> {
    ideal.contains(f)
}

/// `(I : g)` via one elimination variable: `I ∩ (g)` is the `t`-free part
/// of a basis of `t·I + (1 - t)·(g)` under a block order, then divided by
/// `g`. Kept as an independent cross-check of [`Ideal::colon`].
pub fn colon_by_elimination(ideal: &Ideal, g: &Polynomial) -> Result<Ideal> {
    ideal.check_poly(g)?;
    if g.is_zero() {
        return Err(Error::InvalidArgument("colon by zero".into()));
    }
    let inter = intersect_principal(ideal, g)?;
    let gens = inter
        .iter()
        .map(|f| f.div_exact(g).expect("elements of (g) are divisible by g"))
        .collect();
    let out = Ideal::from_polys(ideal.nvars, ideal.order, gens);
    let gb = out.groebner()?.clone();
    Ok(Ideal::from_gb(gb, None))
}

/// `(I : J)` as the intersection of `(I : g)` over generators of `J`, each
/// by elimination.
pub fn colon_ideal_by_elimination(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.check_ring(b)?;
    let mut acc: Option<Ideal> = None;
    for g in b.gens() {
        let c = colon_by_elimination(a, g)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect_by_elimination(&prev, &c)?,
        });
    }
    acc.ok_or_else(|| Error::InvalidArgument("colon by the zero ideal".into()))
}

/// `I ∩ J` via `t·I + (1 - t)·J` and elimination of `t`.
pub fn intersect_by_elimination(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.check_ring(b)?;
    let n = a.nvars;
    let elim = TermOrder::BlockElim(1);
    let t = Polynomial::monomial(Monomial::var(n + 1, 0), elim);
    let one_minus_t = &Polynomial::one(n + 1, elim) - &t;
    let mut gens = Vec::new();
    for f in a.gens() {
        gens.push(&t * &f.insert_var(0, elim));
    }
    for f in b.gens() {
        gens.push(&one_minus_t * &f.insert_var(0, elim));
    }
    let gb = buchberger(&gens, elim, Budget::default())?;
    let survivors: Vec<Polynomial> = gb.basis().iter().filter_map(|f| f.remove_var(0, a.order)).collect();
    Ok(Ideal::from_polys(n, a.order, survivors))
}

fn intersect_principal(ideal: &Ideal, g: &Polynomial) -> Result<Vec<Polynomial>> {
    let principal = Ideal::from_polys(ideal.nvars, ideal.order, vec![g.clone()]);
    Ok(intersect_by_elimination(ideal, &principal)?.gens().to_vec())
}

/// Integral closure of a monomial m-primary ideal in at most three
/// variables: the monomials whose exponents lie in the Newton polyhedron.
pub fn monomial_integral_closure(ideal: &Ideal) -> Result<Ideal> {
    let m = ideal.as_monomial().ok_or(Error::NotMonomial)?;
    if ideal.nvars > 3 {
        return Err(Error::InvalidArgument("integral closure is implemented for at most 3 variables".into()));
    }
    if !m.is_m_primary() {
        return Err(Error::NotMPrimary("integral closure".into()));
    }
    let hull = NewtonPolyhedron::new(m);
    let bounds: Vec<u32> = (0..m.nvars()).map(|i| m.pure_power(i).unwrap()).collect();
    let mut members = Vec::new();
    let mut exps = vec![0u32; m.nvars()];
    scan_box(0, &bounds, &mut exps, &mut |e| {
        if hull.contains(e) {
            members.push(Monomial::new(e));
        }
    });
    Ok(Ideal::from_monomial(&MonomialIdeal::new(m.nvars(), members), ideal.order))
}

pub fn is_integrally_closed(ideal: &Ideal) -> Result<bool> {
    monomial_integral_closure(ideal)?.equals(ideal)
}

fn scan_box(i: usize, bounds: &[u32], exps: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    if i == bounds.len() {
        visit(exps);
        return;
    }
    for e in 0..=bounds[i] {
        exps[i] = e;
        scan_box(i + 1, bounds, exps, visit);
    }
}

/// `conv(exponents) + R^d_{≥0}` as a list of valid inequalities
/// `⟨w, a⟩ ≥ b` that include every facet.
struct NewtonPolyhedron {
    inequalities: Vec<(Vec<i64>, i64)>,
}

impl NewtonPolyhedron {
    fn new(ideal: &MonomialIdeal) -> Self {
        let d = ideal.nvars();
        let points: Vec<Vec<i64>> =
            ideal.gens().iter().map(|g| (0..d).map(|i| g.exp(i) as i64).collect()).collect();
        // a facet is spanned by k affinely independent points and d - k
        // recession directions
        let mut normals: Vec<Vec<i64>> = Vec::new();
        for k in 1..=d {
            for pts in subsets(points.len(), k) {
                for dirs in subsets(d, d - k) {
                    let mut rows: Vec<Vec<i64>> =
                        pts[1..].iter().map(|&p| diff(&points[p], &points[pts[0]])).collect();
                    for &j in &dirs {
                        let mut e = vec![0; d];
                        e[j] = 1;
                        rows.push(e);
                    }
                    if let Some(w) = null_vector(&rows, d) {
                        let w = if w.iter().all(|&c| c <= 0) { w.iter().map(|c| -c).collect() } else { w };
                        if w.iter().all(|&c| c >= 0) && !normals.contains(&w) {
                            normals.push(w);
                        }
                    }
                }
            }
        }
        let inequalities = normals
            .into_iter()
            .map(|w| {
                let b = points.iter().map(|p| dot(&w, p)).min().unwrap();
                (w, b)
            })
            .collect();
        NewtonPolyhedron { inequalities }
    }

    fn contains(&self, e: &[u32]) -> bool {
        let a: Vec<i64> = e.iter().map(|&x| x as i64).collect();
        self.inequalities.iter().all(|(w, b)| dot(w, &a) >= *b)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Primitive integer vector orthogonal to `rows` when they have rank
/// `d - 1`; `None` otherwise. Small `d` only (cofactor expansion).
fn null_vector(rows: &[Vec<i64>], d: usize) -> Option<Vec<i64>> {
    if rows.len() != d - 1 {
        return None;
    }
    // generalized cross product: w_j = (-1)^j det(rows without column j)
    let w: Vec<i64> = (0..d)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                rows.iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * det(&minor)
        })
        .collect();
    if w.iter().all(|&c| c == 0) {
        return None;
    }
    let g = w.iter().fold(0i64, |g, &c| num_integer::gcd(g, c));
    Some(w.iter().map(|c| c / g).collect())
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// `λ(R/(A + (f)))` for m-primary `A`, by the rank of `f·R/A`.
pub(crate) fn length_with_element(a: &Ideal, f: &Polynomial) -> Result<u64> {
    let mut q = Quotient::new(a.groebner()?.clone())?;
    let span = q.ideal_span(std::slice::from_ref(f));
    Ok((q.dim() - span.rank()) as u64)
}

/// Monomial-term helper used by examples and tests.
pub fn monomial_poly(exps: &[u32], order: TermOrder) -> Polynomial {
    Polynomial::term(Coeff::one(), Monomial::new(exps), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> RingCtx {
        RingCtx::xy()
    }

    fn ideal(r: &RingCtx, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| r.poly(g)).collect()).unwrap()
    }

    #[test]
    fn powers_and_sums() {
        let r = ring();
        let m = ideal(&r, &["x", "y"]);
        assert!(m.power(2).equals(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
        assert!(m.power(0).is_unit().unwrap());
        let s = ideal(&r, &["x"]).sum(&ideal(&r, &["y"])).unwrap();
        assert!(s.equals(&m).unwrap());
        assert!(ideal(&r, &["x", "y"]).equals(&ideal(&r, &["y", "x + y"])).unwrap());
        assert!(!ideal(&r, &["x"]).equals(&ideal(&r, &["x^2"])).unwrap());
    }

    #[test]
    fn lengths() {
        let r = ring();
        assert_eq!(ideal(&r, &["x", "y"]).length().unwrap(), 1);
        assert_eq!(ideal(&r, &["x^6", "x^4*y", "x*y^5", "y^6"]).length().unwrap(), 23);
        assert_eq!(ideal(&r, &["x^7", "x^6*y", "x*y^6", "y^7"]).length().unwrap(), 38);
        assert!(matches!(ideal(&r, &["x"]).length(), Err(Error::NotMPrimary(_))));
        assert_eq!(ideal(&r, &["x^2 - y^3", "y^4"]).length().unwrap(), 8);
    }

    #[test]
    fn colon_non_monomial_matches_elimination() {
        let r = ring();
        let i = ideal(&r, &["x^4", "x^3*y", "x*y^3", "y^4"]);
        let p = r.poly("x^4 + y^4");
        let a = i.power(3).add_element(&p).unwrap();
        let k = i.clone();
        let fast = a.colon(&k).unwrap();
        let slow = colon_ideal_by_elimination(&a, &k).unwrap();
        assert!(fast.equals(&slow).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring();
        let c = ideal(&r, &["x^2", "x*y"]).colon(&ideal(&r, &["x"]));
        assert!(matches!(c, Err(Error::NotMPrimary(_))));
        let e = colon_by_elimination(&ideal(&r, &["x^2", "x*y"]), &r.poly("x")).unwrap();
        assert!(e.equals(&ideal(&r, &["x", "y"])).unwrap());
        let i = ideal(&r, &["x^4", "x^3*y", "x*y^3", "y^4"]);
        let c = i.power(2).colon(&i).unwrap();
        assert!(c.contains(&r.poly("x^2*y^2")).unwrap());
        assert!(!i.contains(&r.poly("x^2*y^2")).unwrap());
        assert!(i.colon(&Ideal::unit(2, r.order())).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn integral_closure() {
        let r = ring();
        let c = monomial_integral_closure(&ideal(&r, &["x^2", "y^2"])).unwrap();
        assert!(c.contains(&r.poly("x*y")).unwrap());
        assert!(is_integrally_closed(&ideal(&r, &["x", "y"])).unwrap());
        let i = ideal(&r, &["x^4", "x^3*y", "x*y^3", "y^4"]);
        assert!(!is_integrally_closed(&i).unwrap());
        assert!(monomial_integral_closure(&i).unwrap().contains(&r.poly("x^2*y^2")).unwrap());
        let r3 = RingCtx::xyz();
        let c3 = monomial_integral_closure(&ideal(&r3, &["x^2", "y^2", "z^2"])).unwrap();
        assert!(c3.contains(&r3.poly("x*y")).unwrap());
        assert!(!c3.contains(&r3.poly("x")).unwrap());
    }

    #[test]
    fn non_origin_support_is_not_m_primary() {
        let r = ring();
        assert!(!ideal(&r, &["x - x^2", "y"]).is_m_primary().unwrap());
        assert!(ideal(&r, &["x^2 + y^3", "x*y"]).is_m_primary().unwrap());
    }
}
