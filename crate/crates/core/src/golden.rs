//! Six reference ideals with published invariants, recomputed from
//! scratch. A mismatch is reported, never masked; known disagreements
//! carry a note with the independently checked value.

use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{analyze, analyze_sections, Analysis, Budgets, Sections};
use crate::error::Result;
use crate::hilbert::Postulation;
use crate::ideal::{monomial_integral_closure, Ideal};
use crate::reductions::{self, reduction_number_in, reduction_number_wrt, Independence, NakayamaCache, SampleLimits};
use crate::rees::{rr_closure, PowerTower};
use crate::ring::RingCtx;

#[derive(Clone, Debug, Serialize)]
pub struct GoldenCheck {
    pub name: &'static str,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenResult {
    pub name: &'static str,
    pub ring: Vec<String>,
    pub ideal: Vec<&'static str>,
    pub checks: Vec<GoldenCheck>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenReport {
    pub examples: Vec<GoldenResult>,
    pub passed: usize,
    pub total: usize,
}

/// Value computed for `n(I/(x))` on the symmetric septic ideal, where the
/// published value is 3.
pub const SEPTIC_QUOTIENT_NOTE: &str =
    "published value 3; exact computation gives H_{I'}(3) = 126 = P_{I'}(3), confirmed by an independent rank computation over GF(p)";

/// The published `K` for the three-variable ideal lists four generators; it is
/// not a minimal reduction in dimension three.
pub const FOUR_GENERATOR_NOTE: &str =
    "published K has four generators; with all four rd_K = 1, any three of them give the published rd_K = 2 (confirmed by rank computation over GF(p))";

struct Builder {
    checks: Vec<GoldenCheck>,
}

impl Builder {
    fn eq(&mut self, name: &'static str, expected: Value, computed: Value) {
        let pass = expected == computed;
        self.checks.push(GoldenCheck { name, expected, computed, pass, note: None });
    }

    fn holds(&mut self, name: &'static str, expected: Value, computed: Value, pass: bool) {
        self.checks.push(GoldenCheck { name, expected, computed, pass, note: None });
    }

    fn noted(&mut self, name: &'static str, expected: Value, computed: Value, note: &'static str) {
        let pass = expected == computed;
        self.checks.push(GoldenCheck { name, expected, computed, pass, note: Some(note) });
    }
}

fn post(p: Postulation) -> Value {
    match p {
        Postulation::Value(n) => json!(n),
        Postulation::BelowFloor(f) => json!({ "below_floor": f }),
    }
}

fn ideal(r: &RingCtx, gens: &[&str]) -> Result<Ideal> {
    Ideal::new(r, gens.iter().map(|g| r.poly(g)).collect())
}

fn budgets() -> Budgets {
    Budgets { seed: 1, ..Default::default() }
}

fn full(r: &RingCtx, gens: &[&str], element: &str) -> Result<Analysis> {
    analyze(r, &ideal(r, gens)?, Some(&r.poly(element)), budgets())
}

const SEXTIC: [&str; 4] = ["x^6", "x^4*y", "x*y^5", "y^6"];
const SEPTIC: [&str; 4] = ["x^7", "x^6*y", "x*y^6", "y^7"];
const SEPTIC_SKEW: [&str; 4] = ["x^7", "x^6*y", "x^2*y^5", "y^7"];
const QUARTIC: [&str; 4] = ["x^4", "x^3*y", "x*y^3", "y^4"];
const CUBIC3: [&str; 9] = ["x^3", "y^3", "z^3", "x*y^2", "x^2*z", "x*z^2", "y^2*z", "y*z^2", "x*y*z"];

fn sextic(b: &mut Builder) -> Result<()> {
    let r = RingCtx::xy();
    let a = full(&r, &SEXTIC, "x^4*y + y^6")?;
    b.eq("e", json!([30, 10, 3]), json!(a.hilbert.e));
    b.eq("n(I)", json!(0), post(a.hilbert.postulation));
    b.eq("H(1)", json!(23), json!(a.hilbert.h_at(1)));
    let c = a.certificate();
    b.eq("e(I/p)", json!([30, 10]), json!(c.map(|c| &c.quotient_hilbert.e)));
    b.eq("n(I/p)", json!(2), json!(c.map(|c| post(c.quotient_hilbert.postulation))));
    let rho = a.rho();
    b.holds("rho(I) >= 2", json!(">= 2"), json!(rho), rho.is_some_and(|r| r >= 2));
    Ok(())
}

fn sextic_reduction(b: &mut Builder) -> Result<()> {
    let r = RingCtx::xy();
    let i = ideal(&r, &SEXTIC)?;
    let j = ideal(&r, &["x^4*y", "x^6 + x*y^5 + y^6"])?;
    b.eq("rd_J(I)", json!(3), json!(reduction_number_wrt(&i, &j, 12)?));
    let a = analyze_sections(&r, &i, None, budgets(), Sections { ratliff_rush: false, reductions: true })?;
    let red = a.reduction_report();
    b.eq("rd_min", json!(3), json!(red.map(|r| r.rd_min)));
    b.eq("independence", json!(Independence::IndependentCertified), json!(red.map(|r| r.verdict)));
    Ok(())
}

fn septic(b: &mut Builder) -> Result<()> {
    let r = RingCtx::xy();
    let a = full(&r, &SEPTIC, "x^7 + y^7")?;
    b.eq("e", json!([49, 21, 0]), json!(a.hilbert.e));
    b.eq("n(I)", json!(4), post(a.hilbert.postulation));
    b.eq("rho(I)", json!(5), json!(a.rho()));
    let c = a.certificate();
    b.eq("e(I/p)", json!([49, 21]), json!(c.map(|c| &c.quotient_hilbert.e)));
    b.noted("n(I/p)", json!(3), json!(c.map(|c| post(c.quotient_hilbert.postulation))), SEPTIC_QUOTIENT_NOTE);
    Ok(())
}

fn septic_skew(b: &mut Builder) -> Result<()> {
    let r = RingCtx::xy();
    let a = full(&r, &SEPTIC_SKEW, "x^7 + y^7")?;
    b.eq("e", json!([49, 21, 3]), json!(a.hilbert.e));
    b.eq("n(I)", json!(3), post(a.hilbert.postulation));
    b.eq("rho(I)", json!(4), json!(a.rho()));
    let c = a.certificate();
    b.eq("e(I/p)", json!([49, 21]), json!(c.map(|c| &c.quotient_hilbert.e)));
    let j = ideal(&r, &["x^7", "y^7"])?;
    b.eq("rd_J(I)", json!(4), json!(reduction_number_wrt(&a.ideal, &j, 12)?));
    let w = r.poly("x^5*y^4");
    let i2_i = a.ideal.power(2).colon(&a.ideal)?;
    b.eq("x^5*y^4 in (I^2:I) \\ I", json!(true), json!(i2_i.contains(&w)? && !a.ideal.contains(&w)?));
    Ok(())
}

fn quartic(b: &mut Builder) -> Result<()> {
    let r = RingCtx::xy();
    let a = full(&r, &QUARTIC, "x^4 + y^4")?;
    b.eq("e0", json!(16), json!(a.hilbert.e[0]));
    b.eq("e1", json!(6), json!(a.hilbert.e[1]));
    b.eq("rho(I)", json!(2), json!(a.rho()));
    b.eq("rd_min", json!(2), json!(a.reduction_report().map(|r| r.rd_min)));
    let j = ideal(&r, &["x^4", "y^4"])?;
    b.eq("rd_J(I)", json!(2), json!(reduction_number_wrt(&a.ideal, &j, 12)?));
    let closure = rr_closure(&a.ideal, 1, a.budgets.limits())?;
    b.eq("x^2*y^2 in tilde(I)", json!(true), json!(closure.contains(&r.poly("x^2*y^2"))?));
    let rq = a.rr().and_then(|r| r.rho_quotient);
    b.holds("rho(I/p) <= 2", json!("<= 2"), json!(rq), rq.is_some_and(|v| v <= 2));
    Ok(())
}

fn cubic3(b: &mut Builder) -> Result<()> {
    let r = RingCtx::xyz();
    let i = ideal(&r, &CUBIC3)?;
    let h = crate::hilbert::hilbert_polynomial(&i, Default::default())?;
    b.eq("e", json!([27, 18, 1, -1]), json!(h.e));
    b.eq("n(I)", json!(0), post(h.postulation));
    let closure = monomial_integral_closure(&i)?;
    let w = r.poly("x^2*y");
    b.eq("x^2*y in closure(I) \\ I", json!(true), json!(closure.contains(&w)? && !i.contains(&w)?));
    let mut tower = PowerTower::new(i.clone());
    let mut cache = NakayamaCache::new();
    let k: Vec<_> = [
        "5/3*x^3 + 6*x*y^2 + 7/6*y^3 + 1/10*x^2*z + x*y*z + 3/10*y^2*z + 7/4*x*z^2 + 1/4*y*z^2 + z^3",
        "6/5*x^3 + 1/4*x*y^2 + 3/5*y^3 + 1/4*x^2*z + 3/8*x*y*z + 6/5*y^2*z + 3/10*x*z^2 + 7/9*y*z^2 + z^3",
        "1/6*x^3 + 2/3*x*y^2 + 5*y^3 + 1/5*x^2*z + 7/8*x*y*z + 3/4*y^2*z + x*z^2 + 5/3*y*z^2",
        "3*z^3",
    ]
    .iter()
    .map(|s| r.poly(s))
    .collect();
    b.eq("rd_K(I), first three generators of K", json!(2), json!(reduction_number_in(&mut tower, &mut cache, &k[..3], 12)?));
    b.noted("rd_K(I), all four generators of K", json!(2), json!(reduction_number_in(&mut tower, &mut cache, &k, 12)?), FOUR_GENERATOR_NOTE);
    let limits = SampleLimits { count: 5, seed: 1, n_max: 12 };
    let (samples, _) = reductions::sample_in(&mut tower, &mut cache, None, limits)?;
    let rds: Vec<u32> = samples.iter().map(|s| s.rd).collect();
    b.holds("some sampled rd_J = 2", json!("contains 2"), json!(rds), rds.contains(&2));
    Ok(())
}

type Example = (&'static str, &'static [&'static str], &'static [&'static str], fn(&mut Builder) -> Result<()>);

const EXAMPLES: [Example; 6] = [
    ("sextic", &["x", "y"], &SEXTIC, sextic),
    ("sextic-reduction", &["x", "y"], &SEXTIC, sextic_reduction),
    ("septic", &["x", "y"], &SEPTIC, septic),
    ("septic-skew", &["x", "y"], &SEPTIC_SKEW, septic_skew),
    ("quartic", &["x", "y"], &QUARTIC, quartic),
    ("cubic-three-variables", &["x", "y", "z"], &CUBIC3, cubic3),
];

pub fn example_names() -> Vec<&'static str> {
    EXAMPLES.iter().map(|e| e.0).collect()
}

/// Runs a single named reference example.
pub fn run_example(name: &str) -> Option<GoldenResult> {
    let (name, ring, gens, f) = EXAMPLES.iter().find(|e| e.0 == name)?;
    let mut b = Builder { checks: Vec::new() };
    let error = f(&mut b).err().map(|e| e.to_string());
    let pass = error.is_none() && b.checks.iter().all(|c| c.pass);
    Some(GoldenResult {
        name,
        ring: ring.iter().map(|s| s.to_string()).collect(),
        ideal: gens.to_vec(),
        checks: b.checks,
        pass,
        error,
    })
}

pub fn verify_paper() -> GoldenReport {
    use rayon::prelude::*;
    let examples: Vec<GoldenResult> = EXAMPLES.par_iter().map(|e| run_example(e.0).unwrap()).collect();
    let passed = examples.iter().filter(|e| e.pass).count();
    GoldenReport { total: examples.len(), passed, examples }
}
