//! Seeded corpora of random m-primary ideals run through every check.
//!
//! Monomial ideals always contain a pure power of each variable. Parameter
//! ideals are triangular, `(x_1^{a_1} + c_1 u_1, .., x_d^{a_d})` with `u_i`
//! a monomial in the later variables, so their only zero is the origin.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::Budgets;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::input::render;
use crate::monideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Coeff, Polynomial};
use crate::ring::RingCtx;
use crate::theorems::{check_with_triage, Conclusion, TheoremVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusConfig {
    pub vars: usize,
    pub max_deg: u32,
    pub count: usize,
    pub seed: u64,
    #[serde(default = "default_n_max")]
    pub n_max: u32,
    #[serde(default = "default_window")]
    pub window: u32,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub floor: Option<i64>,
    /// Parameter ideals appended to the corpus; 10 by default, none for an
    /// empty corpus.
    #[serde(default)]
    pub parameter_ideals: Option<usize>,
}

fn default_n_max() -> u32 {
    12
}
fn default_window() -> u32 {
    2
}
fn default_samples() -> usize {
    20
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            vars: 2,
            max_deg: 8,
            count: 50,
            seed: 1,
            n_max: default_n_max(),
            window: default_window(),
            samples: default_samples(),
            floor: None,
            parameter_ideals: None,
        }
    }
}

impl CorpusConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let c: CorpusConfig = toml::from_str(text).map_err(|e| Error::InvalidArgument(format!("corpus config: {e}")))?;
        if c.vars == 0 || c.vars > crate::ring::MAX_DIM {
            return Err(Error::InvalidArgument(format!("vars must be between 1 and {}", crate::ring::MAX_DIM)));
        }
        if c.max_deg < 2 || c.n_max == 0 || c.window == 0 {
            return Err(Error::InvalidArgument("max_deg >= 2, n_max >= 1 and window >= 1 required".into()));
        }
        Ok(c)
    }

    fn parameter_count(&self) -> usize {
        self.parameter_ideals.unwrap_or(if self.count == 0 { 0 } else { 10 })
    }

    fn budgets(&self, seed: u64) -> Budgets {
        Budgets { n_max: self.n_max, window: self.window, samples: self.samples, seed, floor: self.floor, ..Default::default() }
    }

    pub fn ring(&self) -> RingCtx {
        let names: Vec<String> = match self.vars {
            1 => vec!["x".into()],
            2 => vec!["x".into(), "y".into()],
            3 => vec!["x".into(), "y".into(), "z".into()],
            n => (1..=n).map(|i| format!("x{i}")).collect(),
        };
        RingCtx::new(&names, TermOrder::DegRevLex).expect("valid generated ring")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ItemKind {
    Monomial,
    Parameter,
}

fn item_seed(master: u64, kind: ItemKind, i: usize) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(match kind {
        ItemKind::Monomial => 2 * i as u64,
        ItemKind::Parameter => 2 * i as u64 + 1,
    });
    rng.gen()
}

/// A random m-primary monomial ideal with generators of degree at most
/// `max_deg`.
pub fn random_monomial_ideal(vars: usize, max_deg: u32, seed: u64) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gens: Vec<Monomial> = (0..vars).map(|i| Monomial::pure_power(vars, i, rng.gen_range(2..=max_deg))).collect();
    let extra = rng.gen_range(1..=4);
    let mut tries = 0;
    while gens.len() < vars + extra && tries < 100 {
        tries += 1;
        let exps: Vec<u32> = (0..vars).map(|_| rng.gen_range(0..max_deg)).collect();
        let deg: u32 = exps.iter().sum();
        if (2..=max_deg).contains(&deg) && exps.iter().filter(|&&e| e > 0).count() >= 2 {
            gens.push(Monomial::new(&exps));
        }
    }
    MonomialIdeal::new(vars, gens)
}

/// A random triangular parameter ideal.
pub fn random_parameter_ideal(vars: usize, max_deg: u32, seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = TermOrder::DegRevLex;
    let top = max_deg.min(5);
    (0..vars)
        .map(|i| {
            let a = rng.gen_range(1..=top);
            let lead = Polynomial::monomial(Monomial::pure_power(vars, i, a), order);
            if i + 1 == vars {
                return lead;
            }
            let mut exps = vec![0u32; vars];
            for e in exps.iter_mut().skip(i + 1) {
                *e = rng.gen_range(0..=2);
            }
            if exps.iter().all(|&e| e == 0) {
                exps[i + 1] = 1;
            }
            exps[i] = rng.gen_range(0..a);
            let c = loop {
                let c: i64 = rng.gen_range(-9..=9);
                if c != 0 {
                    break c;
                }
            };
            &lead + &Polynomial::term(Coeff::from_integer(c.into()), Monomial::new(&exps), order)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusItem {
    pub index: usize,
    pub kind: ItemKind,
    pub seed: u64,
    pub ideal: Vec<String>,
    pub element: Option<String>,
    pub invariants: BTreeMap<&'static str, Value>,
    pub conclusions: BTreeMap<&'static str, Conclusion>,
    pub violations: Vec<TheoremVerdict>,
    pub rerun: bool,
    pub budget_artifacts: Vec<&'static str>,
    pub errors: Vec<String>,
    pub repro: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub config: CorpusConfig,
    pub items: Vec<CorpusItem>,
    /// Per check, the number of items with each conclusion.
    pub summary: BTreeMap<&'static str, BTreeMap<String, usize>>,
    pub violations: usize,
    pub errors: usize,
}

impl CorpusReport {
    pub fn violated_ids(&self) -> BTreeMap<&'static str, usize> {
        let mut out = BTreeMap::new();
        for it in &self.items {
            for v in &it.violations {
                *out.entry(v.id).or_insert(0) += 1;
            }
        }
        out
    }
}

fn run_item(cfg: &CorpusConfig, ring: &RingCtx, index: usize, kind: ItemKind, dump: Option<&Path>) -> CorpusItem {
    let seed = item_seed(cfg.seed, kind, index);
    let gens = match kind {
        ItemKind::Monomial => {
            let m = random_monomial_ideal(cfg.vars, cfg.max_deg, seed);
            Ideal::from_monomial(&m, ring.order()).gens().to_vec()
        }
        ItemKind::Parameter => random_parameter_ideal(cfg.vars, cfg.max_deg, seed),
    };
    let mut item = CorpusItem {
        index,
        kind,
        seed,
        ideal: gens.iter().map(|g| ring.format_poly(g)).collect(),
        element: None,
        invariants: BTreeMap::new(),
        conclusions: BTreeMap::new(),
        violations: Vec::new(),
        rerun: false,
        budget_artifacts: Vec::new(),
        errors: Vec::new(),
        repro: None,
    };
    let ideal = match Ideal::new(ring, gens.clone()) {
        Ok(i) => i,
        Err(e) => {
            item.errors.push(e.to_string());
            return item;
        }
    };

    let t = match check_with_triage(ring, &ideal, None, cfg.budgets(seed)) {
        Ok(t) => t,
        Err(e) => {
            item.errors.push(e.to_string());
            return item;
        }
    };
    let a = &t.analysis;
    item.rerun = t.rerun;
    item.budget_artifacts = t.budget_artifacts.clone();
    item.errors = a.errors().iter().map(|(k, e)| format!("{k}: {e}")).collect();
    item.element = a.certificate().map(|c| ring.format_poly(&c.element));
    let inv = &mut item.invariants;
    inv.insert("e", json!(a.hilbert.e));
    inv.insert("n", json!(a.postulation()));
    inv.insert("rho", json!(a.rho()));
    inv.insert("omega", json!(a.rr().and_then(|r| r.omega)));
    inv.insert("rho_quotient", json!(a.rr().and_then(|r| r.rho_quotient)));
    inv.insert("n_quotient", json!(a.certificate().and_then(|c| c.quotient_hilbert.postulation_value())));
    inv.insert("rd_min", json!(a.reduction_report().map(|r| r.rd_min)));
    inv.insert("rd_max", json!(a.reduction_report().map(|r| r.rd_max())));
    for v in &t.verdicts {
        item.conclusions.insert(v.id, v.conclusion);
    }
    item.violations = t.verdicts.iter().filter(|v| v.violated()).cloned().collect();
    if !item.violations.is_empty() {
        if let Some(dir) = dump {
            item.repro = write_repro(dir, ring, &gens, a.certificate().map(|c| &c.element), &item, cfg).ok();
        }
    }
    item
}

fn write_repro(
    dir: &Path,
    ring: &RingCtx,
    gens: &[Polynomial],
    element: Option<&Polynomial>,
    item: &CorpusItem,
    cfg: &CorpusConfig,
) -> std::io::Result<String> {
    std::fs::create_dir_all(dir)?;
    let name = format!("repro-{:?}-{:03}.txt", item.kind, item.index).to_lowercase();
    let ids: Vec<&str> = item.violations.iter().map(|v| v.id).collect();
    let mut text = format!(
        "# violated: {}\n# reproduce: samuel analyze {name} --seed {} --nmax {} --window {} --samples {}\n",
        ids.join(", "),
        item.seed,
        cfg.n_max,
        cfg.window,
        cfg.samples
    );
    text.push_str(&render(ring, gens, element));
    let path: PathBuf = dir.join(&name);
    std::fs::write(&path, text)?;
    Ok(name)
}

/// Runs every check over the corpus described by `cfg`. Items run in
/// parallel; the report is assembled in index order.
pub fn run_corpus(cfg: &CorpusConfig, dump: Option<&Path>) -> CorpusReport {
    let ring = cfg.ring();
    let jobs: Vec<(usize, ItemKind)> = (0..cfg.count)
        .map(|i| (i, ItemKind::Monomial))
        .chain((0..cfg.parameter_count()).map(|i| (i, ItemKind::Parameter)))
        .collect();
    let items: Vec<CorpusItem> = jobs.par_iter().map(|&(i, kind)| run_item(cfg, &ring, i, kind, dump)).collect();
    let mut summary: BTreeMap<&'static str, BTreeMap<String, usize>> = BTreeMap::new();
    for it in &items {
        for (id, c) in &it.conclusions {
            let key = serde_json::to_value(c).unwrap().as_str().unwrap().to_string();
            *summary.entry(id).or_default().entry(key).or_insert(0) += 1;
        }
    }
    let violations = items.iter().map(|i| i.violations.len()).sum();
    let errors = items.iter().filter(|i| !i.errors.is_empty()).count();
    CorpusReport { config: cfg.clone(), items, summary, violations, errors }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parses_with_defaults() {
        let c = CorpusConfig::from_toml("vars = 2\nmax_deg = 8\ncount = 5\nseed = 1\n").unwrap();
        assert_eq!((c.n_max, c.window, c.samples, c.floor), (12, 2, 20, None));
        assert!(CorpusConfig::from_toml("vars = 2\nmax_deg = 8\ncount = 5\nseed = 1\nbogus = 3\n").is_err());
    }

    #[test]
    fn empty_corpus() {
        let c = CorpusConfig { count: 0, ..Default::default() };
        let r = run_corpus(&c, None);
        assert!(r.items.is_empty());
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn generated_ideals_are_m_primary_and_deterministic() {
        for s in 0..20 {
            let m = random_monomial_ideal(2, 8, s);
            assert!(m.is_m_primary());
            assert!(m.gens().iter().all(|g| g.degree() <= 8));
            assert_eq!(m, random_monomial_ideal(2, 8, s));
            let p = random_parameter_ideal(2, 8, s);
            let i = Ideal::from_polys(2, TermOrder::DegRevLex, p);
            assert!(i.is_m_primary().unwrap());
        }
    }
}
