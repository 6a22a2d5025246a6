//! Every theorem check on one ideal, with triage at doubled budgets.

use samuel::analysis::Budgets;
use samuel::theorems::check_with_triage;
use samuel::{Ideal, RingCtx};

fn main() -> samuel::Result<()> {
    let r = RingCtx::xy();
    let i = Ideal::new(&r, ["x^7", "x^6*y", "x^2*y^5", "y^7"].iter().map(|g| r.poly(g)).collect())?;
    let t = check_with_triage(&r, &i, Some(&r.poly("x^7 + y^7")), Budgets { samples: 6, ..Default::default() })?;
    for v in &t.verdicts {
        println!("{:<26} {:?} / {:?}", v.id, v.hypothesis, v.conclusion);
    }
    println!("rerun at doubled budgets: {}", t.rerun);
    Ok(())
}
