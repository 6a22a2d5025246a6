//! Groebner-basis answers recomputed by independent linear algebra.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use samuel::{buchberger, Budget, Coeff, Monomial, MonomialIdeal, Polynomial, TermOrder};

const ORDER: TermOrder = TermOrder::DegRevLex;

fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, degs: std::ops::RangeInclusive<u32>, terms: usize) -> Polynomial {
    let ts = (0..terms).map(|_| {
        let mut e = vec![0u32; nvars];
        let d = rng.gen_range(degs.clone());
        for _ in 0..d {
            e[rng.gen_range(0..nvars)] += 1;
        }
        (Coeff::from_integer(rng.gen_range(-3i64..=3).into()), Monomial::new(&e))
    });
    Polynomial::from_terms(nvars, ORDER, ts)
}

/// Monomials of degree below `d`.
fn monomials_below(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(nvars)];
    let mut layer = out.clone();
    for _ in 1..d {
        let mut next: Vec<Monomial> = layer
            .iter()
            .flat_map(|m| (0..nvars).map(move |i| m.mul(&Monomial::var(nvars, i))))
            .collect();
        next.sort_by_key(|m| m.exps().to_vec());
        next.dedup();
        out.extend(next.iter().copied());
        layer = next;
    }
    out
}

/// Dense row reduction over `Q`; returns whether `target` lies in the row space.
fn in_row_space(mut rows: Vec<Vec<BigRational>>, target: Vec<BigRational>) -> bool {
    let width = target.len();
    let rank_of = |rows: &mut Vec<Vec<BigRational>>| {
        let mut r = 0;
        for c in 0..width {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
            rows.swap(r, p);
            let inv = BigRational::one() / &rows[r][c];
            let pivot: Vec<BigRational> = rows[r].iter().map(|v| v * &inv).collect();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (a, b) in row.iter_mut().zip(&pivot) {
                        *a -= &f * b;
                    }
                }
            }
            rows[r] = pivot;
            r += 1;
        }
        r
    };
    let before = rank_of(&mut rows);
    rows.push(target);
    rank_of(&mut rows) == before
}

/// `f ∈ I` decided in `R/m^d`, valid when `m^d ⊆ I`.
fn member_by_linear_algebra(gens: &[Polynomial], f: &Polynomial, nvars: usize, d: u32) -> bool {
    let basis = monomials_below(nvars, d);
    let index = |m: &Monomial| basis.iter().position(|b| b == m);
    let vector = |p: &Polynomial| {
        let mut v = vec![BigRational::zero(); basis.len()];
        for t in p.terms() {
            if let Some(i) = index(&t.mono) {
                v[i] += &t.coeff;
            }
        }
        v
    };
    let rows = gens
        .iter()
        .flat_map(|g| basis.iter().map(move |t| g.mul_term(&Coeff::one(), t)))
        .map(|p| vector(&p))
        .collect();
    in_row_space(rows, vector(f))
}

pub struct Agreement {
    pub agree: usize,
    pub total: usize,
    /// Pairs with `f ∈ I`; unused for staircases.
    pub members: usize,
}

/// GB membership against membership in `R/m^d` on 200 seeded pairs.
pub fn membership_agreement() -> Agreement {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut inside, mut agree) = (0, 0);
    for case in 0..200 {
        let nvars = if case % 5 == 4 { 3 } else { 2 };
        let powers: Vec<u32> = (0..nvars).map(|_| rng.gen_range(2..=if nvars == 2 { 5 } else { 3 })).collect();
        let mut gens: Vec<Polynomial> = (0..nvars)
            .map(|i| Polynomial::monomial(Monomial::pure_power(nvars, i, powers[i]), ORDER))
            .collect();
        for _ in 0..rng.gen_range(1..=2) {
            let g = random_poly(&mut rng, nvars, 1..=4, 3);
            if !g.is_zero() {
                gens.push(g);
            }
        }
        let f = if rng.gen_bool(0.5) {
            gens.iter().fold(Polynomial::zero(nvars, ORDER), |acc, g| &acc + &(g * &random_poly(&mut rng, nvars, 0..=2, 2)))
        } else {
            random_poly(&mut rng, nvars, 1..=5, 4)
        };
        let d = powers.iter().map(|p| p - 1).sum::<u32>() + 1;
        let gb = buchberger(&gens, ORDER, Budget::default()).unwrap();
        let by_gb = gb.normal_form(&f).unwrap().is_zero();
        let by_la = member_by_linear_algebra(&gens, &f, nvars, d);
        inside += by_gb as usize;
        agree += (by_gb == by_la) as usize;
    }
    Agreement { agree, total: 200, members: inside }
}

fn count_standard(leading: &[Monomial], bounds: &[u32]) -> u64 {
    let nvars = bounds.len();
    let mut count = 0;
    let mut e = vec![0u32; nvars];
    loop {
        let m = Monomial::new(&e);
        if !leading.iter().any(|l| l.divides(&m)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == nvars {
                return count;
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// Staircase length against the standard monomials of a Groebner basis on
/// 50 seeded monomial ideals.
pub fn staircase_agreement() -> Agreement {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut agree = 0;
    for case in 0..50 {
        let nvars = if case % 4 == 3 { 3 } else { 2 };
        let bounds: Vec<u32> = (0..nvars).map(|_| rng.gen_range(2..=if nvars == 2 { 9 } else { 5 })).collect();
        let mut monos: Vec<Monomial> = (0..nvars).map(|i| Monomial::pure_power(nvars, i, bounds[i])).collect();
        for _ in 0..rng.gen_range(0..=4) {
            let e: Vec<u32> = bounds.iter().map(|&b| rng.gen_range(0..b)).collect();
            monos.push(Monomial::new(&e));
        }
        let staircase = MonomialIdeal::new(nvars, monos.iter().copied()).colength().unwrap();
        // a triangular change of generators hides the monomial structure
        let gens: Vec<Polynomial> = monos
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let p = Polynomial::monomial(*m, ORDER);
                if i == 0 { p } else { &p + &Polynomial::monomial(monos[i - 1], ORDER) }
            })
            .collect();
        let gb = buchberger(&gens, ORDER, Budget::default()).unwrap();
        let leading: Vec<Monomial> = gb.basis().iter().map(|g| g.leading_monomial().unwrap()).collect();
        agree += (staircase == count_standard(&leading, &bounds)) as usize;
    }
    Agreement { agree, total: 50, members: 0 }
}
