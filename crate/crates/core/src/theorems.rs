//! Executable statements relating postulation numbers, stability indices,
//! surjectivity indices and reduction numbers, evaluated on an
//! [`Analysis`].
//!
//! A conclusion is only evaluated when its hypothesis is decided. One-sided
//! quantities are used one-sidedly: the sampled `rd_min` bounds `rd(I)`
//! from above, so it may only establish hypotheses of the form
//! `ρ ≥ rd - 1` and conclusions of the form `rd ≥ c`.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{analyze, Analysis, Budgets};
use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::reductions::Independence;
use crate::ring::RingCtx;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    Satisfied,
    NotSatisfied,
    UndecidableAtBudget,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    Holds,
    Violated,
    NotApplicable,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub id: &'static str,
    pub statement: &'static str,
    pub hypothesis: Hypothesis,
    pub conclusion: Conclusion,
    pub witness: BTreeMap<String, Value>,
    pub budgets: Budgets,
}

impl TheoremVerdict {
    pub fn violated(&self) -> bool {
        self.conclusion == Conclusion::Violated
    }
}

struct Check<'a> {
    a: &'a Analysis,
    id: &'static str,
    statement: &'static str,
    witness: BTreeMap<String, Value>,
}

impl<'a> Check<'a> {
    fn new(a: &'a Analysis, id: &'static str, statement: &'static str) -> Self {
        Check { a, id, statement, witness: BTreeMap::new() }
    }

    fn with(mut self, key: &str, v: Value) -> Self {
        self.witness.insert(key.to_string(), v);
        self
    }

    fn finish(mut self, hypothesis: Hypothesis, conclusion: Conclusion) -> TheoremVerdict {
        if conclusion == Conclusion::Violated {
            let gens: Vec<String> = self.a.ideal.gens().iter().map(|g| self.a.ring.format_poly(g)).collect();
            self.witness.insert("ideal".into(), json!(gens));
            self.witness.insert("ring".into(), json!(self.a.ring.vars()));
            if let Some(c) = self.a.certificate() {
                self.witness.insert("element".into(), json!(self.a.ring.format_poly(&c.element)));
            }
        }
        TheoremVerdict {
            id: self.id,
            statement: self.statement,
            hypothesis,
            conclusion,
            witness: self.witness,
            budgets: self.a.budgets,
        }
    }

    fn undecidable(self, why: &str) -> TheoremVerdict {
        self.with("missing", json!(why)).finish(Hypothesis::UndecidableAtBudget, Conclusion::Inconclusive)
    }

    fn not_satisfied(self) -> TheoremVerdict {
        self.finish(Hypothesis::NotSatisfied, Conclusion::NotApplicable)
    }

    fn decide(self, holds: bool) -> TheoremVerdict {
        let c = if holds { Conclusion::Holds } else { Conclusion::Violated };
        self.finish(Hypothesis::Satisfied, c)
    }
}

fn quotient_h(a: &Analysis, n: i64) -> Option<i64> {
    if n <= 0 {
        return Some(0);
    }
    a.certificate()?.quotient_hilbert.h.get(&n).copied()
}

/// `H_{I'}(n) ≥ H_I(n) - H_I(n-1)` on the computed range and
/// `P_{I'}(n) = P_I(n) - P_I(n-1)` as polynomials.
pub fn check_quotient_length(a: &Analysis) -> TheoremVerdict {
    let c = Check::new(a, "quotient-length-bound", "H_{I'}(n) >= H_I(n) - H_I(n-1) and P_{I'}(n) = P_I(n) - P_I(n-1)");
    let Some(cert) = a.certificate() else {
        return c.undecidable("superficial element");
    };
    let mut strict = Vec::new();
    let mut failing = Vec::new();
    for n in 1..=a.budgets.n_max as i64 {
        let (Some(hq), Some(h1), Some(h0)) = (quotient_h(a, n), a.hilbert.h_at(n), a.hilbert.h_at(n - 1)) else {
            continue;
        };
        if hq < h1 - h0 {
            failing.push(n);
        } else if hq > h1 - h0 {
            strict.push(n);
        }
    }
    let p = a.hilbert.polynomial();
    let q = cert.quotient_hilbert.polynomial();
    let d = a.dim() as i64;
    let identity = (0..=d).all(|n| q.eval(n) == p.eval(n) - p.eval(n - 1));
    c.with("strict_at", json!(strict))
        .with("failing_at", json!(failing))
        .with("polynomial_identity", json!(identity))
        .decide(failing.is_empty() && identity)
}

/// How `n(I')` moves with `n(I)` relative to `ρ(I) - 1`.
pub fn check_postulation_shift(a: &Analysis) -> TheoremVerdict {
    let c = Check::new(
        a,
        "postulation-shift",
        "n > rho-1 => n' = n+1; n = rho-1 => n' <= n+1; n < rho-1 => n' >= n+1",
    );
    if a.dim() < 2 {
        return c.not_satisfied();
    }
    let Some(cert) = a.certificate() else {
        return c.undecidable("superficial element");
    };
    let (Some(n), Some(rho), Some(nq)) = (a.postulation(), a.rho(), cert.quotient_hilbert.postulation_value()) else {
        return c.undecidable("postulation numbers or stability index");
    };
    let rho = rho as i64;
    let (case, holds) = if n > rho - 1 {
        ("above", nq == n + 1)
    } else if n == rho - 1 {
        ("equal", nq <= n + 1)
    } else {
        ("below", nq > n)
    };
    c.with("n", json!(n)).with("rho", json!(rho)).with("n_quotient", json!(nq)).with("case", json!(case)).decide(holds)
}

/// Dimension two: `n(I) ≠ ρ - 1` forces `rd(I) ≥ n + 2`; `n(I) = ρ - 1`
/// bounds every `rd_J` with a superficial first generator by `n + 2`.
pub fn check_reduction_bounds(a: &Analysis) -> TheoremVerdict {
    let c = Check::new(
        a,
        "reduction-bounds",
        "d = 2: n != rho-1 => rd >= n+2; n = rho-1 => rd_J <= n+2 for J = (x, y), x superficial",
    );
    if a.dim() != 2 {
        return c.not_satisfied();
    }
    let (Some(n), Some(rho), Some(red)) = (a.postulation(), a.rho(), a.reduction_report()) else {
        return c.undecidable("postulation number, stability index or reductions");
    };
    let rho = rho as i64;
    let c = c.with("n", json!(n)).with("rho", json!(rho)).with("rd_min", json!(red.rd_min)).with("rd_max", json!(red.rd_max()));
    if n != rho - 1 {
        let holds = red.rd_min as i64 >= n + 2;
        c.with("case", json!("lower")).with("independence_certified", json!(holds)).decide(holds)
    } else {
        let superficial_first = red.samples.iter().all(|s| s.coefficients.first().is_some_and(|c| c.is_none()));
        if !superficial_first {
            return c.undecidable("reductions with a superficial first generator");
        }
        c.with("case", json!("upper")).decide(red.samples.iter().all(|s| s.rd as i64 <= n + 2))
    }
}

/// Comparisons of `ρ(I)` with `ρ(I/(x))` in dimension two.
pub fn check_stability(a: &Analysis) -> Vec<TheoremVerdict> {
    let mut out = Vec::new();
    let c = Check::new(a, "stability-vs-omega", "rho >= omega => rho >= rho(I/(x))");
    let rr = a.rr();
    let quotient = rr.and_then(|r| Some((r.rho, r.omega?, r.rho_quotient?)));
    out.push(if a.dim() != 2 {
        c.not_satisfied()
    } else if let Some((rho, omega, rho_q)) = quotient {
        let c = c.with("rho", json!(rho)).with("omega", json!(omega)).with("rho_quotient", json!(rho_q));
        if rho >= omega {
            c.decide(rho >= rho_q)
        } else {
            c.not_satisfied()
        }
    } else {
        c.undecidable("stability and surjectivity indices")
    });

    let c = Check::new(a, "stability-vs-reduction", "rho >= rd - 1 => rho >= rho(I/(x))");
    let red = a.reduction_report();
    out.push(if a.dim() != 2 {
        c.not_satisfied()
    } else if let (Some((rho, _, rho_q)), Some(red)) = (quotient, red) {
        let c = c.with("rho", json!(rho)).with("rd_min", json!(red.rd_min)).with("rho_quotient", json!(rho_q));
        if rho as i64 >= red.rd_min as i64 - 1 {
            c.decide(rho >= rho_q)
        } else if red.verdict == Independence::IndependentCertified {
            c.not_satisfied()
        } else {
            // rd(I) may lie below the sampled minimum
            c.undecidable("rd(I) below the sampled minimum")
        }
    } else {
        c.undecidable("indices or reductions")
    });

    let c = Check::new(a, "closed-surjectivity", "I integrally closed and rd = 2 => omega = 1");
    out.push(match (a.dim(), a.integrally_closed, red, rr.and_then(|r| r.omega)) {
        (2, Some(true), Some(red), omega) if red.rd_min == 2 => {
            let settled = matches!(red.verdict, Independence::IndependentCertified | Independence::IndependentLikely);
            match (settled, omega) {
                (true, Some(w)) => c.with("omega", json!(w)).with("rd_min", json!(2)).decide(w == 1),
                (true, None) => c.undecidable("surjectivity index"),
                (false, _) => c.undecidable("rd(I) below the sampled minimum"),
            }
        }
        (2, Some(_), Some(_), _) => c.not_satisfied(),
        (2, None, ..) => c.not_satisfied(),
        (2, _, None, _) => c.undecidable("reductions"),
        _ => c.not_satisfied(),
    });
    out
}

/// Signs of the differences of `P - H` from `ρ(I)` on and eventual
/// agreement once `P(k) = H(k)` for some `k ≥ ρ(I)`.
pub fn check_defect_signs(a: &Analysis) -> Vec<TheoremVerdict> {
    let signs = Check::new(a, "defect-signs", "(-1)^(d-i) Delta^i (P - H)(n) >= 0 for n >= rho, 0 <= i <= d");
    let agree = Check::new(a, "eventual-agreement", "P(k) = H(k) for some k >= rho => P(n) = H(n) for n >= k");
    let d = a.dim();
    let hypothesis = match d {
        2 => Some(true),
        3 => a.rr().and_then(|r| r.omega).map(|w| w == 1),
        _ => Some(false),
    };
    let rho = a.rho();
    match (hypothesis, rho) {
        (Some(false), _) => return vec![signs.not_satisfied(), agree.not_satisfied()],
        (None, _) => return vec![signs.undecidable("surjectivity index"), agree.undecidable("surjectivity index")],
        (Some(true), None) => return vec![signs.undecidable("stability index"), agree.undecidable("stability index")],
        (Some(true), Some(_)) => {}
    }
    let rho = rho.unwrap() as i64;
    let last = a.hilbert.last_computed();
    let mut bad = Vec::new();
    let mut checked = 0;
    for i in 0..=d as i64 {
        for n in rho..=last - i {
            let v = (0..=i)
                .map(|j| {
                    let s = if (i - j) % 2 == 0 { 1 } else { -1 };
                    s * crate::hilbert::binomial(i, j) * a.hilbert.defect(n + j).unwrap()
                })
                .sum::<i64>();
            let sign = if (d as i64 - i) % 2 == 0 { 1 } else { -1 };
            checked += 1;
            if sign * v < 0 {
                bad.push(json!([i, n, v]));
            }
        }
    }
    let v1 = signs.with("rho", json!(rho)).with("entries_checked", json!(checked)).with("failing", json!(bad)).decide(bad.is_empty());

    let first = (rho..=last).find(|&k| a.hilbert.defect(k) == Some(0));
    let v2 = match first {
        None => agree.with("rho", json!(rho)).not_satisfied(),
        Some(k) => {
            let later: Vec<i64> = (k..=last).filter(|&n| a.hilbert.defect(n) != Some(0)).collect();
            agree.with("k", json!(k)).with("disagree_at", json!(later)).decide(later.is_empty())
        }
    };
    vec![v1, v2]
}

/// Dimension one on `R/(x)`: `rd(I') = n(I') + 1`.
pub fn check_ooishi(a: &Analysis) -> TheoremVerdict {
    let c = Check::new(a, "ooishi", "dim 1: rd(I') = n(I') + 1");
    if a.dim() != 2 {
        return c.not_satisfied();
    }
    let (Some(cert), Some(Ok(rds))) = (a.certificate(), a.quotient_reductions.as_ref()) else {
        return c.undecidable("superficial element or reductions of I/(x)");
    };
    let Some(nq) = cert.quotient_hilbert.postulation_value() else {
        return c.undecidable("postulation number of I/(x)");
    };
    c.with("n_quotient", json!(nq)).with("rd_quotient", json!(rds)).decide(rds.iter().all(|&r| r as i64 == nq + 1))
}

/// Dimension one on `R/(x)`: `P - H` is non-decreasing.
pub fn check_northcott(a: &Analysis) -> TheoremVerdict {
    let c = Check::new(a, "northcott", "dim 1: P(n+1) - H(n+1) >= P(n) - H(n)");
    if a.dim() != 2 {
        return c.not_satisfied();
    }
    let Some(cert) = a.certificate() else {
        return c.undecidable("superficial element");
    };
    let p = cert.quotient_hilbert.polynomial();
    let defect = |n: i64| Some(p.eval(n) - quotient_h(a, n)?);
    let floor = a.budgets.floor.unwrap_or(-2);
    let mut bad = Vec::new();
    let mut n = floor;
    while let (Some(lo), Some(hi)) = (defect(n), defect(n + 1)) {
        if hi < lo {
            bad.push(n);
        }
        n += 1;
    }
    c.with("range", json!([floor, n])).with("failing_at", json!(bad)).decide(bad.is_empty())
}

/// Parameter ideals: `rd(I) = n(I) + d`.
pub fn check_marley(a: &Analysis) -> TheoremVerdict {
    let c = Check::new(a, "marley", "depth gr(I) = d => rd(I) = n(I) + d");
    if a.ideal.gens().len() != a.dim() {
        return c.not_satisfied();
    }
    let (Some(n), Some(red)) = (a.postulation(), a.reduction_report()) else {
        return c.undecidable("postulation number or reductions");
    };
    // generated by a regular sequence, so rd(I) = 0 and the sample J = I
    // attains it
    c.with("n", json!(n)).with("rd_min", json!(red.rd_min)).decide(red.rd_min as i64 == n + a.dim() as i64)
}

pub fn check_all(a: &Analysis) -> Vec<TheoremVerdict> {
    let mut out = vec![check_quotient_length(a), check_postulation_shift(a), check_reduction_bounds(a)];
    out.extend(check_stability(a));
    out.extend(check_defect_signs(a));
    out.extend([check_ooishi(a), check_northcott(a), check_marley(a)]);
    out
}

/// Checks with triage: a violation triggers a rerun at doubled budgets.
#[derive(Clone, Debug)]
pub struct Triaged {
    pub analysis: Analysis,
    pub verdicts: Vec<TheoremVerdict>,
    /// Ids violated at the first budgets but not after doubling.
    pub budget_artifacts: Vec<&'static str>,
    pub rerun: bool,
}

pub fn check_with_triage(ring: &RingCtx, ideal: &Ideal, element: Option<&Polynomial>, budgets: Budgets) -> Result<Triaged> {
    let analysis = analyze(ring, ideal, element, budgets)?;
    let verdicts = check_all(&analysis);
    let first: Vec<&'static str> = verdicts.iter().filter(|v| v.violated()).map(|v| v.id).collect();
    if first.is_empty() {
        return Ok(Triaged { analysis, verdicts, budget_artifacts: Vec::new(), rerun: false });
    }
    let again = analyze(ring, ideal, element, budgets.doubled())?;
    let verdicts2 = check_all(&again);
    let budget_artifacts = first.iter().copied().filter(|id| verdicts2.iter().any(|v| v.id == *id && !v.violated())).collect();
    Ok(Triaged { analysis: again, verdicts: verdicts2, budget_artifacts, rerun: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(gens: &[&str], element: Option<&str>) -> Vec<TheoremVerdict> {
        let r = RingCtx::xy();
        let i = Ideal::new(&r, gens.iter().map(|g| r.poly(g)).collect()).unwrap();
        let e = element.map(|e| r.poly(e));
        let a = analyze(&r, &i, e.as_ref(), Budgets { samples: 4, ..Default::default() }).unwrap();
        check_all(&a)
    }

    fn get<'a>(v: &'a [TheoremVerdict], id: &str) -> &'a TheoremVerdict {
        v.iter().find(|t| t.id == id).unwrap()
    }

    #[test]
    fn example_ideal_verdicts() {
        let v = run(&["x^6", "x^4*y", "x*y^5", "y^6"], Some("x^4*y + y^6"));
        // rho = 2 and rd = 3 meet the hypothesis, yet rho(I/(x)) = 3
        let bad: Vec<&str> = v.iter().filter(|t| t.violated()).map(|t| t.id).collect();
        assert_eq!(bad, ["stability-vs-reduction"]);
        assert_eq!(get(&v, "stability-vs-reduction").witness["rho_quotient"], json!(3));
        assert_eq!(get(&v, "stability-vs-omega").hypothesis, Hypothesis::NotSatisfied);
        let lemma = get(&v, "quotient-length-bound");
        assert_eq!(lemma.conclusion, Conclusion::Holds);
        assert_eq!(lemma.witness["strict_at"], json!([2]));
        assert_eq!(get(&v, "postulation-shift").witness["case"], json!("below"));
        assert_eq!(get(&v, "marley").hypothesis, Hypothesis::NotSatisfied);
    }

    #[test]
    fn maximal_ideal_is_trivial() {
        let v = run(&["x", "y"], Some("x"));
        assert!(v.iter().all(|t| !t.violated()));
        assert!(get(&v, "quotient-length-bound").witness["strict_at"].as_array().unwrap().is_empty());
        assert_eq!(get(&v, "marley").conclusion, Conclusion::Holds);
        assert_eq!(get(&v, "postulation-shift").witness["n_quotient"], json!(-1));
    }
}
