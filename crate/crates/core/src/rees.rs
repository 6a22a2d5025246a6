//! Ratliff-Rush closures of powers, the stability index, superficial
//! elements and the surjectivity index.
//!
//! Quotients by a superficial element `x` are never formed explicitly:
//! every ideal of `R/(x)` is represented by its preimage, an ideal of `R`
//! containing `x`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::hilbert::{fit_hilbert, HilbertLimits, HilbertReport};
use crate::ideal::{colon_with_lower, Ideal};
use crate::poly::{Coeff, Polynomial};
use crate::modp::{reduce_vec, ModEchelon};
use crate::quotient::Quotient;

/// Chain limits: the largest power or chain step examined, and how many
/// consecutive equal terms count as stabilized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub n_max: u32,
    pub window: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { n_max: 12, window: 2 }
    }
}

impl Limits {
    pub fn doubled(self) -> Limits {
        Limits { n_max: self.n_max * 2, window: self.window * 2 }
    }
}

/// Nonzero integers in `[-9, 9]`.
pub(crate) fn draw_coefficient(rng: &mut ChaCha8Rng) -> i64 {
    let k = rng.gen_range(0..18);
    if k < 9 {
        k - 9
    } else {
        k - 8
    }
}

pub(crate) fn combination(gens: &[Polynomial], coeffs: &[i64]) -> Polynomial {
    let mut acc = Polynomial::zero(gens[0].nvars(), gens[0].order());
    for (g, &c) in gens.iter().zip(coeffs) {
        acc = &acc + &g.scale(&Coeff::from_integer(c.into()));
    }
    acc
}

/// Powers of a fixed ideal with cached lengths.
pub struct PowerTower {
    base: Ideal,
    powers: Vec<Ideal>,
    lengths: HashMap<u32, u64>,
    quotients: HashMap<u32, Quotient>,
}

impl PowerTower {
    pub fn new(base: Ideal) -> Self {
        let unit = Ideal::unit(base.nvars(), base.order());
        PowerTower { powers: vec![unit, base.clone()], base, lengths: HashMap::new(), quotients: HashMap::new() }
    }

    pub fn base(&self) -> &Ideal {
        &self.base
    }

    pub fn power(&mut self, n: u32) -> Result<&Ideal> {
        while self.powers.len() <= n as usize {
            let last = self.powers.last().unwrap();
            let next = if self.base.is_monomial() {
                last.product(&self.base)?
            } else {
                // multiply the reduced basis of the previous power to keep the
                // generator count bounded
                let floor = last.ensure_floor()?.mul(&self.base.ensure_floor()?);
                let prev = Ideal::from_polys(last.nvars(), last.order(), last.groebner()?.basis().to_vec());
                let p = prev.product(&self.base)?;
                Ideal::from_gb(p.groebner_with_floor(&floor)?, Some(floor))
            };
            self.powers.push(next);
        }
        Ok(&self.powers[n as usize])
    }

    /// `R/I^n`, kept for repeated normal forms.
    pub(crate) fn quotient(&mut self, n: u32) -> Result<&mut Quotient> {
        if !self.quotients.contains_key(&n) {
            let q = Quotient::new(self.power(n)?.groebner()?.clone())?;
            self.quotients.insert(n, q);
        }
        Ok(self.quotients.get_mut(&n).unwrap())
    }

    /// `λ(R/I^n)`.
    pub fn length(&mut self, n: u32) -> Result<u64> {
        if n == 0 {
            return Ok(0);
        }
        if let Some(v) = self.lengths.get(&n) {
            return Ok(*v);
        }
        let v = self.power(n)?.length()?;
        self.lengths.insert(n, v);
        Ok(v)
    }
}

/// Quotients `R/(I^n + (x))` for a fixed element `x`.
pub struct Lift {
    x: Polynomial,
    quotients: HashMap<u32, (GroebnerBasis, Quotient)>,
    /// Span of `x` in `R/I^n` mod p, kept when its rank reaches the bound
    /// `H(n-1)`; `None` when undecided.
    spans: HashMap<u32, Option<ModEchelon>>,
}

impl Lift {
    pub fn new(x: Polynomial) -> Self {
        Lift { x, quotients: HashMap::new(), spans: HashMap::new() }
    }

    pub fn element(&self) -> &Polynomial {
        &self.x
    }

    fn ensure(&mut self, tower: &mut PowerTower, n: u32) -> Result<()> {
        if self.quotients.contains_key(&n) {
            return Ok(());
        }
        // I^n is m-primary, so R/(I^n + (x)) is local and a global basis
        // computed over the floor of I^n gives the local length
        let p = tower.power(n)?;
        let floor = match p.as_monomial() {
            Some(m) => m.clone(),
            None => p.ensure_floor()?,
        };
        let mut gens = p.groebner()?.basis().to_vec();
        gens.push(self.x.clone());
        let gb = Ideal::from_polys(p.nvars(), p.order(), gens).groebner_with_floor(&floor)?;
        let lifted = Quotient::new(gb.clone())?;
        self.quotients.insert(n, (gb, lifted));
        Ok(())
    }

    /// `H_{I'}(n) = λ(R/(I^n + (x)))`, zero for `n = 0`.
    pub fn length(&mut self, tower: &mut PowerTower, n: u32) -> Result<u64> {
        if n == 0 {
            return Ok(0);
        }
        if let Some((_, q)) = self.quotients.get(&n) {
            return Ok(q.dim() as u64);
        }
        // multiplication by x on R/I^n has kernel containing I^(n-1)/I^n,
        // so its rank is at most H(n-1)
        if self.modular_span(tower, n)?.is_some() {
            return Ok(tower.length(n)? - tower.length(n - 1)?);
        }
        self.ensure(tower, n)?;
        Ok(self.quotients[&n].1.dim() as u64)
    }

    /// The span of `x` in `R/I^n` over `GF(p)` when its rank proves
    /// `(I^n : x) = I^(n-1)`.
    pub(crate) fn modular_span(&mut self, tower: &mut PowerTower, n: u32) -> Result<Option<&ModEchelon>> {
        if !self.spans.contains_key(&n) {
            let bound = tower.length(n - 1)? as usize;
            let q = tower.quotient(n)?;
            let std = q.standard_monomials().to_vec();
            let mut ech = ModEchelon::new();
            for s in std.iter().rev() {
                if ech.rank() == bound {
                    break;
                }
                match reduce_vec(&q.reduce(&self.x.mul_term(&Coeff::one(), s))) {
                    Some(v) => {
                        ech.insert(v);
                    }
                    None => break,
                }
            }
            let certified = ech.rank() == bound;
            self.spans.insert(n, certified.then_some(ech));
        }
        Ok(self.spans[&n].as_ref())
    }

    /// Proves `((I^{m+k} + (x)) : v) = I^m + (x)` for one `v ∈ I^k`, which
    /// forces the same for the colon by `I^k`. `false` means undecided.
    fn certified_closed(&mut self, tower: &mut PowerTower, m: u32, k: u32, v: &Polynomial) -> Result<bool> {
        let target = self.length(tower, m)? as usize;
        let Some(span) = self.modular_span(tower, m + k)?.cloned() else {
            return Ok(false);
        };
        // rank of f ↦ v·f from R/I^m into R/(I^{m+k} + (x)) is at most
        // H'(m); the x-span rank is exact, so rank([V; X]) - rank(X) bounds it
        // from below
        let base = span.rank();
        let mut ech = span;
        let std = tower.quotient(m)?.standard_monomials().to_vec();
        let q = tower.quotient(m + k)?;
        for s in std.iter().rev() {
            if ech.rank() - base == target {
                return Ok(true);
            }
            match reduce_vec(&q.reduce(&v.mul_term(&Coeff::one(), s))) {
                Some(w) => {
                    ech.insert(w);
                }
                None => return Ok(false),
            }
        }
        Ok(ech.rank() - base == target)
    }

    pub fn lifted_ideal(&mut self, tower: &mut PowerTower, n: u32) -> Result<Ideal> {
        self.ensure(tower, n)?;
        let floor = tower.power(n)?.floor().cloned();
        Ok(Ideal::from_gb(self.quotients[&n].0.clone(), floor))
    }

    /// Dimension of `((I^{n+k} + (x)) : I^k) / (I^n + (x))`, with the
    /// kernel itself.
    fn chain_step(&mut self, tower: &mut PowerTower, n: u32, k: u32) -> Result<crate::linalg::Echelon> {
        self.ensure(tower, n)?;
        self.ensure(tower, n + k)?;
        let multipliers = tower.power(k)?.gens().to_vec();
        let mut domain = self.quotients.remove(&n).unwrap();
        let target = &mut self.quotients.get_mut(&(n + k)).unwrap().1;
        let kernel = domain.1.kernel(&multipliers, target);
        self.quotients.insert(n, domain);
        Ok(kernel)
    }
}

/// The settled value of an ascending colon chain.
#[derive(Clone, Debug)]
pub struct ChainResult {
    pub ideal: Ideal,
    /// First step of the stable window.
    pub k_star: u32,
}

/// `tilde(I^m)`: the chain `(I^{m+k} : I^k)` read at the first `k` that
/// starts `window` equal terms.
pub fn rr_closure(ideal: &Ideal, m: u32, limits: Limits) -> Result<Ideal> {
    let mut tower = PowerTower::new(ideal.clone());
    Ok(rr_closure_in(&mut tower, m, limits)?.ideal)
}

pub fn rr_closure_in(tower: &mut PowerTower, m: u32, limits: Limits) -> Result<ChainResult> {
    if m == 0 {
        return Err(Error::InvalidArgument("closure of the zeroth power".into()));
    }
    if !tower.base().is_m_primary()? {
        return Err(Error::NotMPrimary("Ratliff-Rush closure".into()));
    }
    let lower = tower.power(m)?.clone();
    let mut chain: Vec<Ideal> = Vec::new();
    for k in 1..=limits.n_max {
        let a = tower.power(m + k)?.clone();
        let b = tower.power(k)?.clone();
        let next = colon_with_lower(&a, &b, &lower)?;
        if let Some(prev) = chain.last() {
            if !next.contains_ideal(prev)? {
                return Err(Error::InvalidArgument(format!("colon chain for power {m} is not ascending at step {k}")));
            }
        }
        chain.push(next);
        let w = limits.window as usize;
        if chain.len() >= w {
            let tail = &chain[chain.len() - w..];
            let mut stable = true;
            for pair in tail.windows(2) {
                if !pair[0].equals(&pair[1])? {
                    stable = false;
                    break;
                }
            }
            if stable {
                let k_star = (chain.len() - w + 1) as u32;
                return Ok(ChainResult { ideal: chain[k_star as usize - 1].clone(), k_star });
            }
        }
    }
    Err(Error::StabilizationBudgetExceeded {
        what: format!("Ratliff-Rush chain of power {m}"),
        n_max: limits.n_max as usize,
        window: limits.window as usize,
    })
}

/// A fixed combination of the generators of `I^k` with coefficients from
/// the usual pool.
fn generic_element(tower: &mut PowerTower, k: u32) -> Result<Polynomial> {
    let gens = tower.power(k)?.gens().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9 ^ k as u64);
    let c: Vec<i64> = gens.iter().map(|_| draw_coefficient(&mut rng)).collect();
    Ok(combination(&gens, &c))
}

/// Settled length of the chain `((I^{m+k} + (x)) : I^k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientChain {
    pub power: u32,
    /// `λ(R/T_m)`.
    pub length: u64,
    pub k_star: u32,
}

fn quotient_chain(tower: &mut PowerTower, lift: &mut Lift, m: u32, limits: Limits) -> Result<(QuotientChain, crate::linalg::Echelon)> {
    let base = lift.length(tower, m)?;
    // the chain ascends, so a closed step at k = window closes every earlier one
    let v = generic_element(tower, limits.window)?;
    if lift.certified_closed(tower, m, limits.window, &v)? {
        return Ok((QuotientChain { power: m, length: base, k_star: 1 }, crate::linalg::Echelon::new()));
    }
    let mut dims: Vec<usize> = Vec::new();
    let mut kernels = Vec::new();
    for k in 1..=limits.n_max {
        let ker = lift.chain_step(tower, m, k)?;
        if let Some(&prev) = dims.last() {
            if ker.rank() < prev {
                return Err(Error::InvalidArgument(format!("quotient colon chain for power {m} is not ascending")));
            }
        }
        dims.push(ker.rank());
        kernels.push(ker);
        let w = limits.window as usize;
        if dims.len() >= w && dims[dims.len() - w..].iter().all(|&d| d == dims[dims.len() - 1]) {
            let k_star = dims.len() - w + 1;
            let length = base - dims[k_star - 1] as u64;
            let ker = kernels.swap_remove(k_star - 1);
            return Ok((QuotientChain { power: m, length, k_star: k_star as u32 }, ker));
        }
    }
    Err(Error::StabilizationBudgetExceeded {
        what: format!("quotient Ratliff-Rush chain of power {m}"),
        n_max: limits.n_max as usize,
        window: limits.window as usize,
    })
}

/// The preimage `T_m ⊆ R` of the Ratliff-Rush closure of the `m`-th power
/// of `(I + (x))/(x)`.
pub fn quotient_rr_closure(ideal: &Ideal, x: &Polynomial, m: u32, limits: Limits) -> Result<Ideal> {
    let mut tower = PowerTower::new(ideal.clone());
    let mut lift = Lift::new(x.clone());
    let (_, kernel) = quotient_chain(&mut tower, &mut lift, m, limits)?;
    lift.ensure(&mut tower, m)?;
    let (_, mut q) = lift.quotients.remove(&m).unwrap();
    let out = q.extend(kernel);
    let floor = tower.power(m)?.floor().cloned();
    Ok(Ideal::from_gb(out, floor))
}

/// Evidence that `x` is superficial for `I`.
#[derive(Clone, Debug)]
pub struct SuperficialCertificate {
    pub element: Polynomial,
    /// Coefficients over the generators of `I`, when drawn at random.
    pub coefficients: Option<Vec<i64>>,
    /// `(e_i(I), e_i(I'))` for `0 ≤ i ≤ d-1`.
    pub e_pairs: Vec<(i64, i64)>,
    /// `[k, N]` on which `(I^{n+1} : x) = I^n`.
    pub colon_window: (u32, u32),
    pub in_i_not_i2: bool,
    /// Hilbert data of `n ↦ λ(R/(I^n + (x)))`.
    pub quotient_hilbert: HilbertReport,
    /// Draws used before acceptance.
    pub trials_used: usize,
}

impl SuperficialCertificate {
    /// `ρ_x(I)`: the start of the colon window.
    pub fn rho_x(&self) -> u32 {
        self.colon_window.0
    }
}

/// Checks that `x` is superficial for `I` by the multiplicity test and a
/// trailing colon window.
pub fn certify_superficial(ideal: &Ideal, x: &Polynomial, hilbert: &HilbertReport, limits: Limits) -> Result<SuperficialCertificate> {
    let mut tower = PowerTower::new(ideal.clone());
    let mut lift = Lift::new(x.clone());
    certify_with(&mut tower, &mut lift, hilbert, limits)
}

pub(crate) fn certify_with(tower: &mut PowerTower, lift: &mut Lift, hilbert: &HilbertReport, limits: Limits) -> Result<SuperficialCertificate> {
    certify_in(tower, lift, hilbert, limits).map_err(|reason| match reason {
        Rejection::Error(e) => e,
        Rejection::Failed(reason) => Error::NoSuperficialFound { trials: 1, reason },
    })
}

enum Rejection {
    Error(Error),
    Failed(String),
}

impl From<Error> for Rejection {
    fn from(e: Error) -> Self {
        Rejection::Error(e)
    }
}

fn hilbert_limits(limits: Limits, hilbert: &HilbertReport) -> HilbertLimits {
    HilbertLimits { n_max: limits.n_max as i64 + 1, window: hilbert.window, floor: None }
}

fn certify_in(
    tower: &mut PowerTower,
    lift: &mut Lift,
    hilbert: &HilbertReport,
    limits: Limits,
) -> std::result::Result<SuperficialCertificate, Rejection> {
    let x = lift.element().clone();
    let ideal = tower.base().clone();
    if !ideal.contains(&x)? {
        return Err(Rejection::Failed("element not in I".into()));
    }
    if tower.power(2)?.contains(&x)? {
        return Err(Rejection::Failed("element lies in I^2".into()));
    }
    let d = ideal.nvars();
    // colon window from lengths: λ(R/(I^{n+1}:x)) = H(n+1) - H'(n+1)
    let n_max = limits.n_max;
    let mut k = n_max + 1;
    for n in (1..=n_max).rev() {
        let colon_len = tower.length(n + 1)? - lift.length(tower, n + 1)?;
        if colon_len != tower.length(n)? {
            break;
        }
        k = n;
    }
    if k + limits.window > n_max + 1 {
        return Err(Rejection::Failed(format!("(I^(n+1):x) = I^n fails on the trailing window below {n_max}")));
    }
    let quotient_hilbert = fit_hilbert(d - 1, hilbert_limits(limits, hilbert), |n| Ok(lift.length(tower, n as u32)? as i64))
        .map_err(|e| match e {
            Error::AnchorNotFound { .. } => Rejection::Failed("quotient Hilbert polynomial did not settle".into()),
            e => Rejection::Error(e),
        })?;
    let e_pairs: Vec<(i64, i64)> = (0..d).map(|i| (hilbert.e[i], quotient_hilbert.e[i])).collect();
    if let Some(i) = e_pairs.iter().position(|(a, b)| a != b) {
        return Err(Rejection::Failed(format!("e_{i} differs: {} vs {}", e_pairs[i].0, e_pairs[i].1)));
    }
    Ok(SuperficialCertificate {
        element: x,
        coefficients: None,
        e_pairs,
        colon_window: (k, n_max),
        in_i_not_i2: true,
        quotient_hilbert,
        trials_used: 1,
    })
}

/// Draws `x = Σ c_i g_i` with `c_i ∈ [-9, 9] \ {0}` until one is certified.
pub fn find_superficial(ideal: &Ideal, hilbert: &HilbertReport, trials: usize, seed: u64, limits: Limits) -> Result<SuperficialCertificate> {
    let mut tower = PowerTower::new(ideal.clone());
    find_superficial_in(&mut tower, hilbert, trials, seed, limits).map(|(c, _)| c)
}

pub(crate) fn find_superficial_in(
    tower: &mut PowerTower,
    hilbert: &HilbertReport,
    trials: usize,
    seed: u64,
    limits: Limits,
) -> Result<(SuperficialCertificate, Lift)> {
    let gens = tower.base().gens().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = String::from("no draws");
    for t in 0..trials {
        let coeffs: Vec<i64> = gens.iter().map(|_| draw_coefficient(&mut rng)).collect();
        let x = combination(&gens, &coeffs);
        let mut lift = Lift::new(x);
        // a draw is discarded when the modular bound fails at the top of
        // the window; discarding a good draw only costs another trial
        if lift.modular_span(tower, limits.n_max + 1)?.is_none() {
            last = format!("(I^(n+1):x) = I^n not established at n = {}", limits.n_max);
            continue;
        }
        match certify_in(tower, &mut lift, hilbert, limits) {
            Ok(mut cert) => {
                cert.coefficients = Some(coeffs);
                cert.trials_used = t + 1;
                return Ok((cert, lift));
            }
            Err(Rejection::Failed(reason)) => last = reason,
            Err(Rejection::Error(e)) => return Err(e),
        }
    }
    Err(Error::NoSuperficialFound { trials, reason: last })
}

/// Per-power closure data.
#[derive(Clone, Debug)]
pub struct PowerClosure {
    pub power: u32,
    pub closure: Ideal,
    pub k_star: u32,
    /// `λ(tilde(I^n) / I^n)`.
    pub excess: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossCheck {
    Agree,
    NotRun,
}

#[derive(Clone, Debug)]
pub struct RRReport {
    pub powers: Vec<PowerClosure>,
    pub rho: u32,
    pub rho_x: Option<u32>,
    pub omega: Option<u32>,
    /// `ρ(I/(x))` on lifted ideals.
    pub rho_quotient: Option<u32>,
    pub quotient_chains: Vec<QuotientChain>,
    pub limits: Limits,
    pub cross_check: CrossCheck,
}

/// Smallest `k` such that `holds(n)` for every `k ≤ n ≤ n_max`, or `None`
/// when `holds(n_max)` fails.
fn trailing_start(n_max: u32, mut holds: impl FnMut(u32) -> Result<bool>) -> Result<Option<u32>> {
    let mut k = None;
    for n in (1..=n_max).rev() {
        if !holds(n)? {
            break;
        }
        k = Some(n);
    }
    Ok(k)
}

/// Ratliff-Rush closures of `I^1..I^N`; `ρ(I)` as the start of the trailing
/// run of closed powers.
pub(crate) fn closures_in(tower: &mut PowerTower, limits: Limits) -> Result<(Vec<PowerClosure>, u32)> {
    let mut powers = Vec::new();
    for n in 1..=limits.n_max {
        let c = rr_closure_in(tower, n, limits)?;
        let excess = tower.length(n)? - c.ideal.length()?;
        powers.push(PowerClosure { power: n, closure: c.ideal, k_star: c.k_star, excess });
    }
    let rho = trailing_start(limits.n_max, |n| Ok(powers[n as usize - 1].excess == 0))?;
    let rho = rho.ok_or_else(|| Error::StabilizationBudgetExceeded {
        what: "closed powers".into(),
        n_max: limits.n_max as usize,
        window: limits.window as usize,
    })?;
    if rho + limits.window > limits.n_max + 1 {
        return Err(Error::StabilizationBudgetExceeded {
            what: "trailing run of closed powers".into(),
            n_max: limits.n_max as usize,
            window: limits.window as usize,
        });
    }
    Ok((powers, rho))
}

/// `ρ(I)` by closures of powers, cross-checked against `ρ_x(I)`.
pub fn stability_index(ideal: &Ideal, cert: &SuperficialCertificate, limits: Limits) -> Result<u32> {
    let mut tower = PowerTower::new(ideal.clone());
    let (_, rho) = closures_in(&mut tower, limits)?;
    if rho != cert.rho_x() {
        return Err(Error::CrossCheckMismatch { rho: rho as usize, rho_x: cert.rho_x() as usize });
    }
    Ok(rho)
}

/// ω(I) and ρ(I/(x)) from the quotient chains, given the closures of the
/// powers.
pub(crate) fn surjectivity_in(
    tower: &mut PowerTower,
    lift: &mut Lift,
    powers: &[PowerClosure],
    limits: Limits,
) -> Result<(u32, u32, Vec<QuotientChain>)> {
    let mut chains = Vec::new();
    let mut surjective = Vec::new();
    let mut closed = Vec::new();
    for n in 1..=limits.n_max {
        let (chain, _) = quotient_chain(tower, lift, n, limits)?;
        let plain = lift.length(tower, n)?;
        // tilde(I^n) + (x)
        let pc = &powers[n as usize - 1];
        let image = if pc.excess == 0 {
            plain
        } else {
            crate::ideal::length_with_element(&pc.closure, lift.element())?
        };
        if chain.length > image {
            return Err(Error::StabilizationBudgetExceeded {
                what: format!("quotient chain of power {n} settled below the image of the closure"),
                n_max: limits.n_max as usize,
                window: limits.window as usize,
            });
        }
        surjective.push(chain.length == image);
        closed.push(chain.length == plain);
        chains.push(chain);
    }
    let err = |what: &str| Error::StabilizationBudgetExceeded {
        what: what.into(),
        n_max: limits.n_max as usize,
        window: limits.window as usize,
    };
    let omega = trailing_start(limits.n_max, |n| Ok(surjective[n as usize - 1]))?.ok_or_else(|| err("surjectivity"))?;
    let rho_q = trailing_start(limits.n_max, |n| Ok(closed[n as usize - 1]))?.ok_or_else(|| err("closed quotient powers"))?;
    Ok((omega, rho_q, chains))
}

/// ω(I): the least `k` with `π_n` surjective for all `k ≤ n ≤ N`.
pub fn surjectivity_index(ideal: &Ideal, x: &Polynomial, limits: Limits) -> Result<u32> {
    let mut tower = PowerTower::new(ideal.clone());
    let mut lift = Lift::new(x.clone());
    let (powers, _) = closures_in(&mut tower, limits)?;
    Ok(surjectivity_in(&mut tower, &mut lift, &powers, limits)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_polynomial;
    use crate::ring::RingCtx;

    fn ideal(r: &RingCtx, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| r.poly(g)).collect()).unwrap()
    }


    #[test]
    fn lifted_lengths_match_linear_algebra() {
        let r = RingCtx::xy();
        for (gens, x) in [
            (vec!["y^6", "x*y^5", "x^2*y^3", "x^5"], "-8*x*y^5 - 2*y^6 - x^5 - 4*x^2*y^3"),
            (vec!["x^3 + y^4", "x*y^2", "y^5"], "x^3 + y^4 - 3*x*y^2"),
        ] {
            let i = ideal(&r, &gens);
            let mut tower = PowerTower::new(i.clone());
            let mut lift = Lift::new(r.poly(x));
            for n in 1..=4 {
                let mut q = Quotient::new(tower.power(n).unwrap().groebner().unwrap().clone()).unwrap();
                let span = q.ideal_span(&[r.poly(x)]);
                let want = (q.dim() - span.rank()) as u64;
                assert_eq!(lift.length(&mut tower, n).unwrap(), want, "{gens:?} n={n}");
            }
        }
    }

    #[test]
    fn closure_of_section_four_ideal() {
        let r = RingCtx::xy();
        let i = ideal(&r, &["x^4", "x^3*y", "x*y^3", "y^4"]);
        let t = rr_closure(&i, 1, Limits::default()).unwrap();
        assert!(t.equals(&ideal(&r, &["x^4", "x^3*y", "x*y^3", "y^4", "x^2*y^2"])).unwrap());
        let m = ideal(&r, &["x", "y"]);
        assert!(rr_closure(&m, 1, Limits::default()).unwrap().equals(&m).unwrap());
    }

    #[test]
    fn superficial_and_rho() {
        let r = RingCtx::xy();
        let i = ideal(&r, &["x^4", "x^3*y", "x*y^3", "y^4"]);
        let limits = Limits { n_max: 6, window: 2 };
        let h = hilbert_polynomial(&i, HilbertLimits::default()).unwrap();
        let cert = certify_superficial(&i, &r.poly("x^4 + y^4"), &h, limits).unwrap();
        assert_eq!(cert.e_pairs, vec![(16, 16), (6, 6)]);
        assert_eq!(stability_index(&i, &cert, limits).unwrap(), 2);
        let omega = surjectivity_index(&i, &r.poly("x^4 + y^4"), limits).unwrap();
        assert_eq!(omega, 1);
        assert!(certify_superficial(&i, &r.poly("x^8"), &h, limits).is_err());
        assert!(certify_superficial(&i, &r.poly("x^3"), &h, limits).is_err());
    }

    #[test]
    fn quotient_closure_of_parameter_ideal() {
        let r = RingCtx::xy();
        let i = ideal(&r, &["x^2", "y^3"]);
        let x = r.poly("x^2");
        for m in 1..4 {
            let t = quotient_rr_closure(&i, &x, m, Limits { n_max: 6, window: 2 }).unwrap();
            assert!(t.equals(&i.power(m).add_element(&x).unwrap()).unwrap());
        }
    }
}
