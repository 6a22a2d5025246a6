//! Hilbert-Samuel function, polynomial and postulation number.

use samuel::hilbert::{hilbert_polynomial, HilbertLimits};
use samuel::{Ideal, RingCtx};

fn main() -> samuel::Result<()> {
    let r = RingCtx::xy();
    let i = Ideal::new(&r, ["x^7", "x^6*y", "x*y^6", "y^7"].iter().map(|g| r.poly(g)).collect())?;
    let h = hilbert_polynomial(&i, HilbertLimits::default())?;
    println!("e = {:?}", h.e);
    println!("postulation number = {:?}", h.postulation);
    let p = h.polynomial();
    println!(" n  H(n)  P(n)");
    for n in 0..=h.last_computed() {
        println!("{n:>2} {:>5} {:>5}", h.h_at(n).unwrap(), p.eval(n));
    }
    Ok(())
}
