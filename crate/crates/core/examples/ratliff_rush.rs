//! Ratliff-Rush closures of powers and the stability index.

use samuel::rees::{rr_closure, Limits};
use samuel::{Ideal, RingCtx};

fn main() -> samuel::Result<()> {
    let r = RingCtx::xy();
    let i = Ideal::new(&r, ["x^4", "x^3*y", "x*y^3", "y^4"].iter().map(|g| r.poly(g)).collect())?;
    let limits = Limits::default();
    for m in 1..=3 {
        let t = rr_closure(&i.power(m), 1, limits)?;
        let excess = i.power(m).length()? - t.length()?;
        let gb = t.groebner()?;
        let gens: Vec<String> = gb.basis().iter().map(|g| r.format_poly(g)).collect();
        println!("closure of I^{m}: excess {excess}, basis ({})", gens.join(", "));
    }
    Ok(())
}
