//! Reduction numbers: with respect to a fixed reduction, and by sampling
//! minimal reductions.

use samuel::reductions::{reduction_number_estimate, reduction_number_wrt};
use samuel::{Ideal, RingCtx};

fn main() -> samuel::Result<()> {
    let r = RingCtx::xy();
    let ideal = |g: &[&str]| Ideal::new(&r, g.iter().map(|s| r.poly(s)).collect());
    let i = ideal(&["x^6", "x^4*y", "x*y^5", "y^6"])?;
    let j = ideal(&["x^4*y", "x^6 + x*y^5 + y^6"])?;
    println!("rd_J(I) = {}", reduction_number_wrt(&i, &j, 12)?);

    let report = reduction_number_estimate(&i, 10, 3)?;
    println!("rd_min = {}, histogram {:?}, verdict {:?}", report.rd_min, report.histogram, report.verdict);
    for s in report.samples.iter().take(3) {
        let gens: Vec<String> = s.generators.iter().map(|g| r.format_poly(g)).collect();
        println!("  ({}) rd {} e0 {}", gens.join(", "), s.rd, s.e0);
    }

    let not_reduction = ideal(&["x^6", "x^4*y"])?;
    println!("(x^6, x^4*y) rejected: {}", reduction_number_wrt(&i, &not_reduction, 12).is_err());
    Ok(())
}
