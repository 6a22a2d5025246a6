//! Report documents for one analysis: JSON, CSV (one row per invariant)
//! and plain text. Output is deterministic: object keys are sorted and
//! nothing time-dependent is recorded.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::analysis::Analysis;
use crate::error::Error;
use crate::hilbert::{HilbertReport, Postulation};
use crate::theorems::{Conclusion, TheoremVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn postulation_json(p: Postulation) -> Value {
    match p {
        Postulation::Value(n) => json!(n),
        Postulation::BelowFloor(f) => json!({ "below_floor": f }),
    }
}

fn error_json(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}

fn hilbert_json(h: &HilbertReport) -> Value {
    let table: Map<String, Value> = h.h.iter().map(|(n, v)| (n.to_string(), json!(v))).collect();
    json!({
        "dim": h.dim,
        "e": h.e,
        "anchor": h.anchor,
        "window": h.window,
        "postulation": postulation_json(h.postulation),
        "H": table,
        "delta": h.delta,
    })
}

/// The full report document for one analysis.
pub fn document(a: &Analysis, verdicts: &[TheoremVerdict], rerun: Option<&[&str]>) -> Value {
    let ring = &a.ring;
    let fmt = |p| ring.format_poly(p);
    let gens: Vec<String> = a.ideal.gens().iter().map(fmt).collect();

    let superficial = match &a.superficial {
        Ok(c) => json!({
            "element": fmt(&c.element),
            "coefficients": c.coefficients,
            "e_pairs": c.e_pairs,
            "colon_window": [c.colon_window.0, c.colon_window.1],
            "in_i_not_i2": c.in_i_not_i2,
            "trials_used": c.trials_used,
            "quotient_hilbert": hilbert_json(&c.quotient_hilbert),
        }),
        Err(e) => error_json(e),
    };

    let ratliff_rush = match &a.ratliff_rush {
        None => Value::Null,
        Some(Err(e)) => error_json(e),
        Some(Ok(r)) => {
            let powers: Vec<Value> = r
                .powers
                .iter()
                .map(|p| {
                    let mut o = json!({ "power": p.power, "excess": p.excess, "k_star": p.k_star });
                    if p.excess > 0 {
                        let closure: Vec<String> = match p.closure.groebner() {
                            Ok(gb) => gb.basis().iter().map(fmt).collect(),
                            Err(_) => p.closure.gens().iter().map(fmt).collect(),
                        };
                        o["closure"] = json!(closure);
                    }
                    o
                })
                .collect();
            json!({
                "rho": r.rho,
                "rho_x": r.rho_x,
                "omega": r.omega,
                "rho_quotient": r.rho_quotient,
                "cross_check": r.cross_check,
                "limits": r.limits,
                "powers": powers,
                "quotient_chains": r.quotient_chains,
                "superficial": superficial,
            })
        }
    };

    let mut reductions = match &a.reductions {
        None => Value::Null,
        Some(Err(e)) => error_json(e),
        Some(Ok(r)) => {
            let samples: Vec<Value> = r
                .samples
                .iter()
                .map(|s| {
                    json!({
                        "generators": s.generators.iter().map(fmt).collect::<Vec<_>>(),
                        "rd": s.rd,
                        "e0": s.e0,
                        "seed": s.seed,
                    })
                })
                .collect();
            let histogram: Map<String, Value> = r.histogram.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            json!({
                "rd_min": r.rd_min,
                "histogram": histogram,
                "verdict": r.verdict,
                "discarded": r.discarded,
                "samples": samples,
            })
        }
    };
    if let (Value::Object(o), Some(q)) = (&mut reductions, &a.quotient_reductions) {
        o.insert(
            "quotient".into(),
            match q {
                Ok(v) => json!(v),
                Err(e) => error_json(e),
            },
        );
    }

    let mut doc = json!({
        "ring": { "vars": ring.vars(), "order": ring.order() },
        "ideal": {
            "generators": gens,
            "m_primary": true,
            "integrally_closed": a.integrally_closed,
        },
        "hilbert": hilbert_json(&a.hilbert),
        "ratliff_rush": ratliff_rush,
        "reductions": reductions,
        "theorems": verdicts,
        "budgets": a.budgets,
        "seed": a.budgets.seed,
    });
    if let Some(ids) = rerun {
        doc["triage"] = json!({ "rerun_at_doubled_budgets": true, "budget_artifacts": ids });
    }
    doc
}

/// Exit status: 2 on violated verdicts, 1 on section errors, 0 otherwise.
pub fn exit_code(a: &Analysis, verdicts: &[TheoremVerdict]) -> i32 {
    if verdicts.iter().any(|v| v.conclusion == Conclusion::Violated) {
        2
    } else if !a.errors().is_empty() {
        1
    } else {
        0
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, rows);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One `key,value` row per leaf of the document.
pub fn to_csv(doc: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", doc, &mut rows);
    let mut out = String::from("key,value\n");
    for (k, v) in rows {
        let _ = writeln!(out, "{},{}", csv_field(&k), csv_field(&v));
    }
    out
}

/// A short human-readable summary.
pub fn to_text(a: &Analysis, verdicts: &[TheoremVerdict]) -> String {
    let mut s = String::new();
    let gens: Vec<String> = a.ideal.gens().iter().map(|g| a.ring.format_poly(g)).collect();
    let _ = writeln!(s, "ring      Q[{}]", a.ring.vars().join(","));
    let _ = writeln!(s, "ideal     ({})", gens.join(", "));
    let _ = writeln!(s, "e         {:?}", a.hilbert.e);
    let _ = writeln!(s, "n(I)      {}", show_post(a.hilbert.postulation));
    match &a.superficial {
        Ok(c) => {
            let _ = writeln!(s, "x         {}", a.ring.format_poly(&c.element));
            let _ = writeln!(s, "e(I/x)    {:?}", c.quotient_hilbert.e);
            let _ = writeln!(s, "n(I/x)    {}", show_post(c.quotient_hilbert.postulation));
        }
        Err(e) => {
            let _ = writeln!(s, "x         error: {e}");
        }
    }
    if let Some(r) = &a.ratliff_rush {
        match r {
            Ok(r) => {
                let _ = writeln!(s, "rho       {}", r.rho);
                let _ = writeln!(s, "omega     {}", opt(r.omega));
                let _ = writeln!(s, "rho(I/x)  {}", opt(r.rho_quotient));
            }
            Err(e) => {
                let _ = writeln!(s, "rho       error: {e}");
            }
        }
    }
    if let Some(r) = &a.reductions {
        match r {
            Ok(r) => {
                let _ = writeln!(s, "rd_min    {} ({:?}, {} samples)", r.rd_min, r.verdict, r.samples.len());
            }
            Err(e) => {
                let _ = writeln!(s, "rd        error: {e}");
            }
        }
    }
    for v in verdicts {
        let _ = writeln!(s, "check     {:<28} {:?} / {:?}", v.id, v.hypothesis, v.conclusion);
    }
    s
}

fn show_post(p: Postulation) -> String {
    match p {
        Postulation::Value(n) => n.to_string(),
        Postulation::BelowFloor(f) => format!("< {f}"),
    }
}

fn opt(v: Option<u32>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}
