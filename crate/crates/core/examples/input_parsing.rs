//! The input grammar and its positioned errors.

use samuel::input::{parse_input, render};

fn main() {
    let ok = parse_input("ring Q[x,y,z]\nideal I = x^2 - y*z, y^3, z^4 + 1/2*x*z\n").unwrap();
    print!("{}", render(&ok.ring, ok.ideal.gens(), None));
    for bad in ["ring Q[x,2y]\n", "ring Q[x]\nideal I = x^2, \n", "ring Q[x]\n", "ring Q[x,y]\nideal I = x^^2\n"] {
        match parse_input(bad) {
            Ok(_) => println!("{bad:?} parsed"),
            Err(e) => println!("{bad:?}: line {} col {}: expected {}", e.line, e.col, e.expected),
        }
    }
}
