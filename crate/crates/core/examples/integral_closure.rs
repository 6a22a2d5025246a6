//! Integral closure of a monomial ideal from its Newton polyhedron.

use samuel::ideal::{is_integrally_closed, monomial_integral_closure};
use samuel::{Ideal, RingCtx};

fn main() -> samuel::Result<()> {
    let r = RingCtx::xyz();
    let gens = ["x^3", "y^3", "z^3", "x*y^2", "x^2*z", "x*z^2", "y^2*z", "y*z^2", "x*y*z"];
    let i = Ideal::new(&r, gens.iter().map(|g| r.poly(g)).collect())?;
    let c = monomial_integral_closure(&i)?;
    let added: Vec<String> =
        c.gens().iter().filter(|g| !i.contains(g).unwrap()).map(|g| r.format_poly(g)).collect();
    println!("closure adds: {}", added.join(", "));
    println!("I integrally closed: {}", is_integrally_closed(&i)?);
    println!("closure integrally closed: {}", is_integrally_closed(&c)?);
    Ok(())
}
