//! Sums, products, powers, colons and equality of ideals.

use samuel::ideal::{colon_by_elimination, ideal_combine};
use samuel::{CombineOp, Ideal, RingCtx};

fn main() -> samuel::Result<()> {
    let r = RingCtx::xy();
    let i = Ideal::new(&r, vec![r.poly("x^7"), r.poly("x^6*y"), r.poly("x^2*y^5"), r.poly("y^7")])?;
    let j = Ideal::new(&r, vec![r.poly("x^7"), r.poly("y^7")])?;

    println!("length R/I      = {}", i.length()?);
    println!("length R/I^2    = {}", i.power(2).length()?);
    println!("length R/(I*J)  = {}", ideal_combine(&i, &j, CombineOp::Product)?.length()?);

    let c = i.power(2).colon(&i)?;
    let w = r.poly("x^5*y^4");
    println!("x^5*y^4 in (I^2:I) = {}, in I = {}", c.contains(&w)?, i.contains(&w)?);

    // colon by a single element, two independent ways
    let x = r.poly("x^7 + y^7");
    let a = i.power(3).colon(&Ideal::new(&r, vec![x.clone()])?)?;
    let b = colon_by_elimination(&i.power(3), &x)?;
    println!("(I^3 : x^7+y^7) agrees with elimination: {}", a.equals(&b)?);
    for n in 1..=5 {
        let c = i.power(n + 1).colon(&Ideal::new(&r, vec![x.clone()])?)?;
        println!("(I^{} : x^7+y^7) = I^{n}: {}", n + 1, c.equals(&i.power(n))?);
    }
    Ok(())
}
