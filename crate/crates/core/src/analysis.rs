//! One pass over an ideal collecting every invariant the theorem checks
//! consume. Failures of individual sections are kept as values so that a
//! report can still be produced.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{delta_table, fit_hilbert, HilbertLimits, HilbertReport};
use crate::ideal::{is_integrally_closed, Ideal};
use crate::poly::Polynomial;
use crate::reductions::{self, NakayamaCache, ReductionReport, SampleLimits};
use crate::rees::{
    certify_with, closures_in, combination, draw_coefficient, find_superficial_in, surjectivity_in, CrossCheck, Lift,
    Limits, PowerTower, RRReport, SuperficialCertificate,
};
use crate::ring::RingCtx;

/// Every budget of one analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budgets {
    pub n_max: u32,
    pub window: u32,
    pub hilbert_window: u32,
    pub samples: usize,
    pub seed: u64,
    /// Lowest `n` of the postulation scan; `None` means `-2d`.
    pub floor: Option<i64>,
    pub superficial_trials: usize,
    /// Elements `y` drawn for reduction numbers of `I/(x)`.
    pub quotient_samples: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            n_max: 12,
            window: 2,
            hilbert_window: 3,
            samples: 20,
            seed: 0,
            floor: None,
            superficial_trials: 20,
            quotient_samples: 2,
        }
    }
}

impl Budgets {
    pub fn limits(&self) -> Limits {
        Limits { n_max: self.n_max, window: self.window }
    }

    pub fn hilbert_limits(&self) -> HilbertLimits {
        HilbertLimits { n_max: self.n_max as i64, window: self.hilbert_window as i64, floor: self.floor }
    }

    pub fn sample_limits(&self) -> SampleLimits {
        SampleLimits { count: self.samples, seed: self.seed, n_max: self.n_max }
    }

    pub fn doubled(&self) -> Budgets {
        Budgets {
            n_max: self.n_max * 2,
            window: self.window * 2,
            hilbert_window: self.hilbert_window * 2,
            ..*self
        }
    }
}

/// Which sections to compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sections {
    pub ratliff_rush: bool,
    pub reductions: bool,
}

impl Default for Sections {
    fn default() -> Self {
        Sections { ratliff_rush: true, reductions: true }
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub ring: RingCtx,
    pub ideal: Ideal,
    pub budgets: Budgets,
    pub hilbert: HilbertReport,
    pub superficial: Result<SuperficialCertificate>,
    pub ratliff_rush: Option<Result<RRReport>>,
    pub reductions: Option<Result<ReductionReport>>,
    /// `rd_y(I/(x))` for sampled `y`, in dimension two.
    pub quotient_reductions: Option<Result<Vec<u32>>>,
    pub integrally_closed: Option<bool>,
}

impl Analysis {
    pub fn dim(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn postulation(&self) -> Option<i64> {
        self.hilbert.postulation_value()
    }

    pub fn rr(&self) -> Option<&RRReport> {
        self.ratliff_rush.as_ref().and_then(|r| r.as_ref().ok())
    }

    pub fn rho(&self) -> Option<u32> {
        self.rr().map(|r| r.rho)
    }

    pub fn reduction_report(&self) -> Option<&ReductionReport> {
        self.reductions.as_ref().and_then(|r| r.as_ref().ok())
    }

    pub fn certificate(&self) -> Option<&SuperficialCertificate> {
        self.superficial.as_ref().ok()
    }

    /// Section errors, labelled.
    pub fn errors(&self) -> Vec<(&'static str, &Error)> {
        let mut out = Vec::new();
        if let Err(e) = &self.superficial {
            out.push(("superficial", e));
        }
        if let Some(Err(e)) = &self.ratliff_rush {
            out.push(("ratliff_rush", e));
        }
        if let Some(Err(e)) = &self.reductions {
            out.push(("reductions", e));
        }
        if let Some(Err(e)) = &self.quotient_reductions {
            out.push(("quotient_reductions", e));
        }
        out
    }
}

/// Runs the full pipeline. Only a failure of the Hilbert fit is fatal.
pub fn analyze(ring: &RingCtx, ideal: &Ideal, element: Option<&Polynomial>, budgets: Budgets) -> Result<Analysis> {
    analyze_sections(ring, ideal, element, budgets, Sections::default())
}

pub fn analyze_sections(
    ring: &RingCtx,
    ideal: &Ideal,
    element: Option<&Polynomial>,
    budgets: Budgets,
    sections: Sections,
) -> Result<Analysis> {
    if ring.dim() != ideal.nvars() {
        return Err(Error::DimensionMismatch { left: ring.dim(), right: ideal.nvars() });
    }
    if !ideal.is_m_primary()? {
        return Err(Error::NotMPrimary("analysis".into()));
    }
    let d = ideal.nvars();
    let limits = budgets.limits();
    let mut tower = PowerTower::new(ideal.clone());
    let mut hilbert = fit_hilbert(d, budgets.hilbert_limits(), |n| Ok(tower.length(n as u32)? as i64))?;
    for n in 1..=budgets.n_max {
        hilbert.h.insert(n as i64, tower.length(n)? as i64);
    }
    hilbert.delta = Some(delta_table(&hilbert, d, 0, budgets.n_max as i64 - d as i64));

    let mut lift = None;
    let superficial = match element {
        Some(x) => {
            let mut l = Lift::new(x.clone());
            let c = certify_with(&mut tower, &mut l, &hilbert, limits);
            lift = Some(l);
            c
        }
        None => find_superficial_in(&mut tower, &hilbert, budgets.superficial_trials, budgets.seed, limits).map(|(c, l)| {
            lift = Some(l);
            c
        }),
    };
    let superficial = match (superficial, lift.as_mut()) {
        (Ok(mut c), Some(l)) => {
            for n in 1..=budgets.n_max + 1 {
                c.quotient_hilbert.h.insert(n as i64, l.length(&mut tower, n)? as i64);
            }
            Ok(c)
        }
        (s, _) => s,
    };
    let cert = superficial.as_ref().ok();

    let ratliff_rush = sections.ratliff_rush.then(|| -> Result<RRReport> {
        let (powers, rho) = closures_in(&mut tower, limits)?;
        let (Some(cert), Some(lift)) = (cert, lift.as_mut()) else {
            return Ok(RRReport {
                powers,
                rho,
                rho_x: None,
                omega: None,
                rho_quotient: None,
                quotient_chains: Vec::new(),
                limits,
                cross_check: CrossCheck::NotRun,
            });
        };
        if rho != cert.rho_x() {
            return Err(Error::CrossCheckMismatch { rho: rho as usize, rho_x: cert.rho_x() as usize });
        }
        let (omega, rho_q, chains) = surjectivity_in(&mut tower, lift, &powers, limits)?;
        Ok(RRReport {
            powers,
            rho,
            rho_x: Some(rho),
            omega: Some(omega),
            rho_quotient: Some(rho_q),
            quotient_chains: chains,
            limits,
            cross_check: CrossCheck::Agree,
        })
    });

    let mut cache = NakayamaCache::new();
    let reductions = sections.reductions.then(|| {
        // superficial first in dimension two, where the upper bound on every
        // reduction number is stated for such reductions
        let first = if d == 2 { cert.map(|c| &c.element) } else { None };
        reductions::sample_in(&mut tower, &mut cache, first, budgets.sample_limits()).map(|(samples, discarded)| {
            reductions::report_from(samples, discarded, d, hilbert.postulation_value(), budgets.seed)
        })
    });

    let quotient_reductions = match (sections.reductions && d == 2, lift.as_mut()) {
        (true, Some(lift)) if cert.is_some() => Some(quotient_reduction_numbers(&mut tower, lift, &mut cache, budgets)),
        _ => None,
    };

    let integrally_closed = if ideal.is_monomial() { Some(is_integrally_closed(ideal)?) } else { None };

    Ok(Analysis {
        ring: ring.clone(),
        ideal: ideal.clone(),
        budgets,
        hilbert,
        superficial,
        ratliff_rush,
        reductions,
        quotient_reductions,
        integrally_closed,
    })
}

fn quotient_reduction_numbers(
    tower: &mut PowerTower,
    lift: &mut Lift,
    cache: &mut NakayamaCache,
    budgets: Budgets,
) -> Result<Vec<u32>> {
    use rand::SeedableRng;
    let gens = tower.base().gens().to_vec();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(budgets.seed ^ 0x5eed);
    let mut out = Vec::new();
    let mut draws = 0;
    while out.len() < budgets.quotient_samples {
        if draws >= 4 * budgets.quotient_samples + 4 {
            return Err(Error::SamplingExhausted(format!("{} reductions of I/(x)", out.len())));
        }
        draws += 1;
        let c: Vec<i64> = gens.iter().map(|_| draw_coefficient(&mut rng)).collect();
        let y = combination(&gens, &c);
        match reductions::quotient_reduction_number(tower, lift, cache, &y, budgets.n_max) {
            Ok(rd) => out.push(rd),
            Err(Error::NotAReduction(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::Postulation;

    #[test]
    fn example_with_given_element() {
        let r = RingCtx::xy();
        let i = Ideal::new(&r, ["x^6", "x^4*y", "x*y^5", "y^6"].iter().map(|g| r.poly(g)).collect()).unwrap();
        let p = r.poly("x^4*y + y^6");
        let budgets = Budgets { samples: 4, ..Default::default() };
        let a = analyze(&r, &i, Some(&p), budgets).unwrap();
        assert_eq!(a.hilbert.e, vec![30, 10, 3]);
        assert_eq!(a.postulation(), Some(0));
        let cert = a.certificate().unwrap();
        assert_eq!(cert.quotient_hilbert.postulation, Postulation::Value(2));
        assert_eq!(a.rho(), Some(cert.rho_x()));
        let red = a.reduction_report().unwrap();
        assert!(red.rd_min >= 2);
        let qrd = a.quotient_reductions.as_ref().unwrap().as_ref().unwrap();
        assert!(qrd.iter().all(|&r| r as i64 == 3));
    }
}
