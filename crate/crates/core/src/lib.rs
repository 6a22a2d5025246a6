//! Exact Hilbert-Samuel invariants of m-primary ideals in `Q[x_1..x_d]`
//! read locally at the origin.

pub mod analysis;
pub mod corpus;
pub mod error;
pub mod golden;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod input;
pub mod linalg;
pub(crate) mod modp;
pub mod monideal;
pub mod monomial;
pub mod poly;
pub(crate) mod quotient;
pub mod reductions;
pub mod rees;
pub mod report;
pub mod theorems;
pub mod ring;

pub use error::{Error, ParseError, Result};
pub use groebner::{buchberger, normal_form, Budget, GroebnerBasis};
pub use ideal::{CombineOp, Ideal, Tristate};
pub use monideal::MonomialIdeal;
pub use monomial::{cmp_monomials, Monomial, TermOrder};
pub use poly::{Coeff, Polynomial, Term};
pub use ring::RingCtx;
