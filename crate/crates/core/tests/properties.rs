use proptest::prelude::*;
use samuel::{buchberger, Budget, Coeff, Ideal, Monomial, Polynomial, RingCtx, TermOrder};

const ORDER: TermOrder = TermOrder::DegRevLex;

fn poly(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0..=max_exp, nvars)), 0..=max_terms).prop_map(move |ts| {
        Polynomial::from_terms(nvars, ORDER, ts.into_iter().map(|(c, e)| (Coeff::from_integer(c.into()), Monomial::new(&e))))
    })
}

fn monomial(nvars: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..=5, nvars).prop_map(|e| Monomial::new(&e))
}

fn order() -> impl Strategy<Value = TermOrder> {
    prop_oneof![Just(TermOrder::DegRevLex), Just(TermOrder::Lex), Just(TermOrder::BlockElim(1)), Just(TermOrder::BlockElim(2))]
}

/// `(x^a, y^b, g)` with `g` vanishing at the origin.
fn m_primary() -> impl Strategy<Value = Ideal> {
    (2u32..=4, 2u32..=4, poly(2, 3, 2)).prop_map(|(a, b, g)| {
        let r = RingCtx::xy();
        let g = Polynomial::from_terms(2, ORDER, g.terms().iter().filter(|t| !t.mono.is_one()).map(|t| (t.coeff.clone(), t.mono)));
        let mut gens = vec![r.monomial(&[a, 0]), r.monomial(&[0, b])];
        if !g.is_zero() {
            gens.push(g);
        }
        Ideal::new(&r, gens).unwrap()
    })
}

proptest! {
    #[test]
    fn multiplication_is_commutative_and_associative(a in poly(3, 3, 4), b in poly(3, 3, 4), c in poly(3, 3, 3)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in poly(2, 4, 4), b in poly(2, 4, 4), c in poly(2, 4, 4)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&(&(&a + &b) - &b) - &a).is_zero());
    }

    #[test]
    fn term_orders_are_monomial_orders(o in order(), a in monomial(3), b in monomial(3), c in monomial(3)) {
        prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
        prop_assert_eq!(o.cmp(&a, &b).is_eq(), a == b);
        prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
        prop_assert!(o.cmp(&Monomial::one(3), &a).is_le());
    }

    #[test]
    fn normal_form_is_a_projection(gens in prop::collection::vec(poly(2, 3, 3), 1..=3), f in poly(2, 5, 5)) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let gb = buchberger(&gens, ORDER, Budget::default()).unwrap();
        let r = gb.normal_form(&f).unwrap();
        prop_assert_eq!(gb.normal_form(&r).unwrap(), r.clone());
        prop_assert!(gb.contains(&(&f - &r)).unwrap());
        for g in &gens {
            prop_assert!(gb.contains(&(g * &f)).unwrap());
        }
    }

    #[test]
    fn parameter_ideal_lengths(a in 1u32..=6, b in 1u32..=6, n in 1u32..=3) {
        let r = RingCtx::xy();
        let j = Ideal::new(&r, vec![r.monomial(&[a, 0]), r.monomial(&[0, b])]).unwrap();
        prop_assert_eq!(j.length().unwrap(), (a * b) as u64);
        prop_assert_eq!(j.power(n).length().unwrap(), (a * b * n * (n + 1) / 2) as u64);
        // same ideal, presented without monomial generators
        let hidden = Ideal::new(&r, vec![r.monomial(&[a, 0]), &r.monomial(&[0, b]) + &r.monomial(&[a, 0])]).unwrap();
        prop_assert_eq!(hidden.length().unwrap(), (a * b) as u64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn powers_multiply(i in m_primary(), a in 1u32..=2, b in 1u32..=2) {
        let prod = i.power(a).product(&i.power(b)).unwrap();
        prop_assert!(prod.equals(&i.power(a + b)).unwrap());
        prop_assert!(i.contains_ideal(&i.power(a + b)).unwrap());
    }

    #[test]
    fn colons_contain_and_annihilate(i in m_primary(), j in m_primary()) {
        let c = i.colon(&j).unwrap();
        prop_assert!(c.contains_ideal(&i).unwrap());
        prop_assert!(i.contains_ideal(&c.product(&j).unwrap()).unwrap());
        prop_assert!(c.length().unwrap() <= i.length().unwrap());
    }

    #[test]
    fn lengths_are_monotone_under_inclusion(i in m_primary(), j in m_primary()) {
        let s = i.sum(&j).unwrap();
        prop_assert!(s.length().unwrap() <= i.length().unwrap().min(j.length().unwrap()));
        prop_assert!(i.product(&j).unwrap().length().unwrap() >= i.length().unwrap().max(j.length().unwrap()));
    }
}
