//! Certifying a superficial element and the invariants of `I/(x)`.

use samuel::hilbert::{hilbert_polynomial, HilbertLimits};
use samuel::rees::{certify_superficial, find_superficial, stability_index, surjectivity_index, Limits};
use samuel::{Ideal, RingCtx};

fn main() -> samuel::Result<()> {
    let r = RingCtx::xy();
    let i = Ideal::new(&r, ["x^6", "x^4*y", "x*y^5", "y^6"].iter().map(|g| r.poly(g)).collect())?;
    let h = hilbert_polynomial(&i, HilbertLimits::default())?;
    let limits = Limits::default();

    let p = r.poly("x^4*y + y^6");
    let cert = certify_superficial(&i, &p, &h, limits)?;
    println!("p = {} is superficial", r.format_poly(&p));
    println!("  e(I), e(I/p) pairs: {:?}", cert.e_pairs);
    println!("  colon window: {:?}", cert.colon_window);
    println!("  n(I/p) = {:?}", cert.quotient_hilbert.postulation);
    println!("  rho(I) = {}", stability_index(&i, &cert, limits)?);
    println!("  omega(I) = {}", surjectivity_index(&i, &p, limits)?);

    println!("x^8 rejected: {}", certify_superficial(&i, &r.poly("x^8"), &h, limits).is_err());

    let found = find_superficial(&i, &h, 20, 7, limits)?;
    println!("random superficial element: {}", r.format_poly(&found.element));
    Ok(())
}
