//! Reductions `J ⊆ I` generated by `d` elements and their reduction
//! numbers, read in the local ring at the origin.
//!
//! `J·I^n = I^{n+1}` holds locally iff `J·I^n + m·I^{n+1} ⊇ I^{n+1}`
//! (Nakayama). Since `m·(J·I^n) ⊆ m·I^{n+1}`, the left side modulo
//! `m·I^{n+1}` is the plain linear span of the products `h_j·g`, so each
//! test is a single rank computation.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_polynomial, HilbertLimits};
use crate::ideal::Ideal;
use crate::linalg::Echelon;
use crate::poly::Polynomial;
use crate::modp::{reduce_vec, ModEchelon};
use crate::poly::Coeff;
use num_traits::One;
use crate::quotient::Quotient;
use crate::rees::{combination, draw_coefficient, find_superficial_in, Lift, Limits, PowerTower};

/// `R/(m·I^{n+1})`, optionally with `x` added, and the minimal number of
/// generators of the image of `I^{n+1}` in it.
struct Socle {
    quotient: Quotient,
    mu: usize,
}

/// Caches the socle quotients of one ideal (and of one added element).
pub(crate) struct NakayamaCache {
    plain: HashMap<u32, Socle>,
    with_x: HashMap<u32, Socle>,
}

impl NakayamaCache {
    pub fn new() -> Self {
        NakayamaCache { plain: HashMap::new(), with_x: HashMap::new() }
    }

    fn m_times(tower: &mut PowerTower, n: u32) -> Result<Quotient> {
        let p = tower.power(n)?.clone();
        let m = Ideal::maximal(p.nvars(), p.order());
        let prod = p.product(&m)?;
        let gb = if prod.is_monomial() {
            prod.groebner()?.clone()
        } else {
            let floor = p.ensure_floor()?.mul(m.as_monomial().unwrap());
            prod.groebner_with_floor(&floor)?
        };
        Quotient::new(gb)
    }

    fn plain(&mut self, tower: &mut PowerTower, n: u32) -> Result<&mut Socle> {
        if let std::collections::hash_map::Entry::Vacant(e) = self.plain.entry(n) {
            let quotient = Self::m_times(tower, n + 1)?;
            let mu = quotient.dim() - tower.length(n + 1)? as usize;
            e.insert(Socle { quotient, mu });
        }
        Ok(self.plain.get_mut(&n).unwrap())
    }

    fn with_x(&mut self, tower: &mut PowerTower, lift: &mut Lift, n: u32) -> Result<&mut Socle> {
        if let std::collections::hash_map::Entry::Vacant(e) = self.with_x.entry(n) {
            let mut q = Self::m_times(tower, n + 1)?;
            let span = q.ideal_span(std::slice::from_ref(lift.element()));
            let quotient = Quotient::new(q.extend(span))?;
            let mu = quotient.dim() - lift.length(tower, n + 1)? as usize;
            e.insert(Socle { quotient, mu });
        }
        Ok(self.with_x.get_mut(&n).unwrap())
    }
}

fn spans_top(socle: &mut Socle, hs: &[Polynomial], gens: &[Polynomial]) -> bool {
    let mut ech = Echelon::new();
    for h in hs {
        for g in gens {
            let v = socle.quotient.reduce(&(h * g));
            if !v.is_empty() {
                ech.insert(v);
                if ech.rank() == socle.mu {
                    return true;
                }
            }
        }
    }
    ech.rank() == socle.mu
}

/// Local test of `J·I^n = I^{n+1}`.
pub(crate) fn is_reduction_at(tower: &mut PowerTower, cache: &mut NakayamaCache, hs: &[Polynomial], n: u32) -> Result<bool> {
    let gens = tower.power(n)?.gens().to_vec();
    Ok(spans_top(cache.plain(tower, n)?, hs, &gens))
}

pub(crate) fn reduction_number_in(tower: &mut PowerTower, cache: &mut NakayamaCache, hs: &[Polynomial], n_max: u32) -> Result<u32> {
    for n in 0..=n_max {
        if is_reduction_at(tower, cache, hs, n)? {
            return Ok(n);
        }
    }
    Err(Error::NotAReduction(n_max as usize))
}

/// `rd_J(I)`: the least `n ≤ n_max` with `J·I^n = I^{n+1}` locally.
pub fn reduction_number_wrt(ideal: &Ideal, j: &Ideal, n_max: u32) -> Result<u32> {
    if !ideal.is_m_primary()? {
        return Err(Error::NotMPrimary("reduction number".into()));
    }
    if j.gens().len() != ideal.nvars() {
        return Err(Error::InvalidArgument(format!("J has {} generators, expected {}", j.gens().len(), ideal.nvars())));
    }
    if !ideal.contains_ideal(j)? {
        return Err(Error::InvalidArgument("J is not contained in I".into()));
    }
    let mut tower = PowerTower::new(ideal.clone());
    reduction_number_in(&mut tower, &mut NakayamaCache::new(), j.gens(), n_max)
}

/// Local `λ(R/J)` for a reduction `J` with `J·I^r = I^{r+1}`: `I^{r+1} ⊆ J`
/// at the origin, so the length is that of `R/(J + I^{r+1})`.
pub(crate) fn local_colength(tower: &mut PowerTower, hs: &[Polynomial], rd: u32) -> Result<u64> {
    let mut q = Quotient::new(tower.power(rd + 1)?.groebner()?.clone())?;
    let span = q.ideal_span(hs);
    Ok((q.dim() - span.rank()) as u64)
}

/// `rd_y(I/(x))` in `R/(x)`: the least `n ≤ n_max` with
/// `y·I'^n = I'^{n+1}` locally. The first level is found by a modular
/// certificate and confirmed minimal exactly; a `y` never certified is
/// reported as not a reduction.
pub(crate) fn quotient_reduction_number(
    tower: &mut PowerTower,
    lift: &mut Lift,
    cache: &mut NakayamaCache,
    y: &Polynomial,
    n_max: u32,
) -> Result<u32> {
    let mut found = None;
    for n in 0..=n_max {
        if certified_quotient_reduction(tower, lift, cache, y, n)? {
            found = Some(n);
            break;
        }
    }
    let Some(mut n) = found else {
        return Err(Error::NotAReduction(n_max as usize));
    };
    while n > 0 {
        let gens = tower.power(n - 1)?.gens().to_vec();
        if !spans_top(cache.with_x(tower, lift, n - 1)?, std::slice::from_ref(y), &gens) {
            break;
        }
        n -= 1;
    }
    Ok(n)
}

/// `y·I^n + (x) + m·I^{n+1} ⊇ I^{n+1}` proved by a rank mod p: the span of
/// `y·I^n` and `x·R` in `R/(m·I^{n+1})` has rational rank at most
/// `λ(R/m·I^{n+1}) - H'(n+1)`, with equality exactly when the inclusion holds.
fn certified_quotient_reduction(
    tower: &mut PowerTower,
    lift: &mut Lift,
    cache: &mut NakayamaCache,
    y: &Polynomial,
    n: u32,
) -> Result<bool> {
    let h = lift.length(tower, n + 1)? as usize;
    let gens = tower.power(n)?.gens().to_vec();
    let x = lift.element().clone();
    let q = &mut cache.plain(tower, n)?.quotient;
    let bound = q.dim() - h;
    let std = q.standard_monomials().to_vec();
    let mut ech = ModEchelon::new();
    let rows = gens.iter().map(|g| y * g).chain(std.iter().rev().map(|s| x.mul_term(&Coeff::one(), s)));
    for f in rows {
        if ech.rank() == bound {
            return Ok(true);
        }
        match reduce_vec(&q.reduce(&f)) {
            Some(v) => {
                ech.insert(v);
            }
            None => return Ok(false),
        }
    }
    Ok(ech.rank() == bound)
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionSample {
    #[serde(skip)]
    pub generators: Vec<Polynomial>,
    /// Rows of coefficients over the generators of `I`; `None` for a
    /// supplied first generator.
    pub coefficients: Vec<Option<Vec<i64>>>,
    pub rd: u32,
    /// Local `λ(R/J)`, which equals `e_0(J) = e_0(I)`.
    pub e0: u64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Independence {
    IndependentCertified,
    IndependentLikely,
    Varies,
    Unknown,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub samples: Vec<ReductionSample>,
    pub rd_min: u32,
    pub histogram: BTreeMap<u32, usize>,
    pub verdict: Independence,
    pub seed: u64,
    /// Draws rejected as non-reductions within `n_max`.
    pub discarded: usize,
}

impl ReductionReport {
    pub fn rd_max(&self) -> u32 {
        self.samples.iter().map(|s| s.rd).max().unwrap_or(0)
    }
}

/// Sampling settings: sample count, master seed, and the largest power
/// examined per reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleLimits {
    pub count: usize,
    pub seed: u64,
    pub n_max: u32,
}

impl Default for SampleLimits {
    fn default() -> Self {
        SampleLimits { count: 20, seed: 0, n_max: 12 }
    }
}

/// Sub-seed of sample `i`.
fn sub_seed(master: u64, i: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(i + 1);
    rng.gen()
}

/// Draws `count` reductions `J = (h_1..h_d)`. With `first`, `h_1` is that
/// element. A parameter ideal contributes itself as the first sample.
pub(crate) fn sample_in(
    tower: &mut PowerTower,
    cache: &mut NakayamaCache,
    first: Option<&Polynomial>,
    limits: SampleLimits,
) -> Result<(Vec<ReductionSample>, usize)> {
    let gens = tower.base().gens().to_vec();
    let d = tower.base().nvars();
    let mut samples = Vec::new();
    let mut discarded = 0;
    let mut draw = 0u64;
    if first.is_none() && gens.len() == d && limits.count > 0 {
        let rd = reduction_number_in(tower, cache, &gens, limits.n_max)?;
        let e0 = local_colength(tower, &gens, rd)?;
        let identity = (0..d).map(|i| Some((0..d).map(|j| (i == j) as i64).collect())).collect();
        samples.push(ReductionSample { generators: gens.clone(), coefficients: identity, rd, e0, seed: limits.seed });
    }
    let max_draws = 4 * limits.count as u64 + 4;
    while samples.len() < limits.count {
        if draw >= max_draws {
            return Err(Error::SamplingExhausted(format!(
                "{} of {} reductions after {draw} draws",
                samples.len(),
                limits.count
            )));
        }
        let seed = sub_seed(limits.seed, draw);
        draw += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut hs = Vec::with_capacity(d);
        let mut coefficients = Vec::with_capacity(d);
        if let Some(x) = first {
            hs.push(x.clone());
            coefficients.push(None);
        }
        while hs.len() < d {
            let c: Vec<i64> = gens.iter().map(|_| draw_coefficient(&mut rng)).collect();
            hs.push(combination(&gens, &c));
            coefficients.push(Some(c));
        }
        match reduction_number_in(tower, cache, &hs, limits.n_max) {
            Ok(rd) => {
                let e0 = local_colength(tower, &hs, rd)?;
                samples.push(ReductionSample { generators: hs, coefficients, rd, e0, seed });
            }
            Err(Error::NotAReduction(_)) => discarded += 1,
            Err(e) => return Err(e),
        }
    }
    Ok((samples, discarded))
}

/// Random reductions of `I`; with `superficial_first` the first generator
/// is a certified superficial element.
pub fn sample_minimal_reductions(ideal: &Ideal, count: usize, seed: u64, superficial_first: bool) -> Result<Vec<Ideal>> {
    if !ideal.is_m_primary()? {
        return Err(Error::NotMPrimary("reduction sampling".into()));
    }
    let mut tower = PowerTower::new(ideal.clone());
    let first = if superficial_first {
        let hilbert = hilbert_polynomial(ideal, HilbertLimits::default())?;
        Some(find_superficial_in(&mut tower, &hilbert, 20, seed, Limits::default())?.0.element)
    } else {
        None
    };
    let limits = SampleLimits { count, seed, n_max: 12 };
    let (samples, _) = sample_in(&mut tower, &mut NakayamaCache::new(), first.as_ref(), limits)?;
    Ok(samples.into_iter().map(|s| Ideal::from_polys(ideal.nvars(), ideal.order(), s.generators)).collect())
}

/// Independence verdict from the sampled values. A known postulation
/// number enables the dimension-two criterion `rd_J ≥ n(I) + 2`.
pub fn independence(samples: &[ReductionSample], dim: usize, postulation: Option<i64>) -> Independence {
    let Some(min) = samples.iter().map(|s| s.rd).min() else {
        return Independence::Unknown;
    };
    if samples.iter().any(|s| s.rd != min) {
        return Independence::Varies;
    }
    let criterion = min == 0
        || dim == 1
        || (dim == 2 && postulation.is_some_and(|n| samples.iter().any(|s| s.rd as i64 >= n + 2)));
    if criterion {
        Independence::IndependentCertified
    } else if samples.len() > 1 {
        Independence::IndependentLikely
    } else {
        Independence::Unknown
    }
}

pub(crate) fn report_from(samples: Vec<ReductionSample>, discarded: usize, dim: usize, postulation: Option<i64>, seed: u64) -> ReductionReport {
    let mut histogram = BTreeMap::new();
    for s in &samples {
        *histogram.entry(s.rd).or_insert(0) += 1;
    }
    let rd_min = samples.iter().map(|s| s.rd).min().unwrap_or(0);
    let verdict = independence(&samples, dim, postulation);
    ReductionReport { samples, rd_min, histogram, verdict, seed, discarded }
}

/// Sampled upper bound for `rd(I)` with an independence verdict.
pub fn reduction_number_estimate(ideal: &Ideal, count: usize, seed: u64) -> Result<ReductionReport> {
    if !ideal.is_m_primary()? {
        return Err(Error::NotMPrimary("reduction number".into()));
    }
    let postulation = hilbert_polynomial(ideal, HilbertLimits::default()).ok().and_then(|h| h.postulation_value());
    let mut tower = PowerTower::new(ideal.clone());
    let limits = SampleLimits { count, seed, n_max: 12 };
    let (samples, discarded) = sample_in(&mut tower, &mut NakayamaCache::new(), None, limits)?;
    Ok(report_from(samples, discarded, ideal.nvars(), postulation, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingCtx;

    fn ideal(r: &RingCtx, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| r.poly(g)).collect()).unwrap()
    }

    #[test]
    fn reduction_numbers_of_known_pairs() {
        let r = RingCtx::xy();
        let i = ideal(&r, &["x^7", "x^6*y", "x^2*y^5", "y^7"]);
        assert_eq!(reduction_number_wrt(&i, &ideal(&r, &["x^7", "y^7"]), 12).unwrap(), 4);
        let i = ideal(&r, &["x^6", "x^4*y", "x*y^5", "y^6"]);
        let j = ideal(&r, &["x^4*y", "x^6 + x*y^5 + y^6"]);
        assert_eq!(reduction_number_wrt(&i, &j, 12).unwrap(), 3);
        let j = ideal(&r, &["x^2 - y^3", "y^4"]);
        assert_eq!(reduction_number_wrt(&j, &j, 12).unwrap(), 0);
    }

    #[test]
    fn non_reduction_is_rejected() {
        let r = RingCtx::xy();
        let i = ideal(&r, &["x^2", "x*y", "y^2"]);
        let j = ideal(&r, &["x^2", "x*y"]);
        assert_eq!(reduction_number_wrt(&i, &j, 6), Err(Error::NotAReduction(6)));
    }

    #[test]
    fn sampled_reductions_preserve_multiplicity() {
        let r = RingCtx::xy();
        let i = ideal(&r, &["x^4", "x^3*y", "x*y^3", "y^4"]);
        let rep = reduction_number_estimate(&i, 6, 3).unwrap();
        assert_eq!(rep.rd_min, 2);
        assert!(rep.samples.iter().all(|s| s.e0 == 16 && s.rd == 2));
        assert_eq!(reduction_number_wrt(&i, &ideal(&r, &["x^4", "y^4"]), 12).unwrap(), 2);
    }

    #[test]
    fn parameter_ideal_is_its_own_reduction() {
        let r = RingCtx::xy();
        let i = ideal(&r, &["x^2", "y^3"]);
        let rep = reduction_number_estimate(&i, 3, 1).unwrap();
        assert_eq!(rep.rd_min, 0);
        assert_eq!(rep.verdict, Independence::IndependentCertified);
        assert_eq!(rep.samples[0].e0, 6);
    }

    #[test]
    fn verdicts() {
        let s = |rd| ReductionSample { generators: vec![], coefficients: vec![], rd, e0: 0, seed: 0 };
        assert_eq!(independence(&[s(3), s(3)], 2, Some(0)), Independence::IndependentCertified);
        assert_eq!(independence(&[s(3), s(3)], 2, Some(4)), Independence::IndependentLikely);
        assert_eq!(independence(&[s(3), s(4)], 2, Some(0)), Independence::Varies);
        assert_eq!(independence(&[s(3)], 3, None), Independence::Unknown);
        assert_eq!(independence(&[], 2, None), Independence::Unknown);
    }
}
