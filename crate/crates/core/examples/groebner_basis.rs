//! Reduced Groebner basis and normal forms in `Q[x,y,z]`.

use samuel::{buchberger, normal_form, Budget, RingCtx, TermOrder};

fn main() -> samuel::Result<()> {
    let r = RingCtx::new(&["x", "y", "z"], TermOrder::Lex)?;
    let gens = vec![r.poly("x^2 + y*z - 1"), r.poly("x*y - z^2"), r.poly("y^3 - x*z")];
    let gb = buchberger(&gens, r.order(), Budget::default())?;
    println!("reduced basis ({} elements, lex):", gb.basis().len());
    for g in gb.basis() {
        println!("  {}", r.format_poly(g));
    }
    let f = r.poly("x^3*y + z^5");
    println!("NF({}) = {}", r.format_poly(&f), r.format_poly(&normal_form(&f, &gb)?));
    println!("x*y - z^2 in ideal: {}", gb.contains(&r.poly("x*y - z^2"))?);
    Ok(())
}
