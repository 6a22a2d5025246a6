//! Hilbert-Samuel functions, fitted polynomials, postulation numbers and
//! difference tables.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// Search limits for the polynomial fit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertLimits {
    /// Largest power whose length may be computed.
    pub n_max: i64,
    /// Points past the fitted block that must agree with the fit.
    pub window: i64,
    /// Lowest `n` examined by the downward postulation scan; `None` means
    /// `-2d`.
    pub floor: Option<i64>,
}

impl Default for HilbertLimits {
    fn default() -> Self {
        HilbertLimits { n_max: 12, window: 3, floor: None }
    }
}

/// `C(m, k)` for any integer `m` and `k ≥ 0`.
pub fn binomial(m: i64, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    let mut r: i128 = 1;
    for j in 0..k as i128 {
        r = r * (m as i128 - j) / (j + 1);
    }
    r as i64
}

/// `P(n) = Σ_i (-1)^i e_i C(n+d-1-i, d-i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertPolynomial {
    pub dim: usize,
    pub e: Vec<i64>,
}

impl HilbertPolynomial {
    pub fn eval(&self, n: i64) -> i64 {
        let d = self.dim as i64;
        self.e
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let i = i as i64;
                let s = if i % 2 == 0 { 1 } else { -1 };
                s * e * binomial(n + d - 1 - i, d - i)
            })
            .sum()
    }

    /// Interpolates the polynomial of degree `dim` through the values at
    /// `n0, n0+1, .., n0+dim`.
    pub fn interpolate(dim: usize, n0: i64, values: &[i64]) -> HilbertPolynomial {
        assert_eq!(values.len(), dim + 1);
        let d = dim as i64;
        let mut rest: Vec<i64> = values.to_vec();
        let mut e = Vec::with_capacity(dim + 1);
        for i in 0..=d {
            // the (d-i)-th difference of what remains is (-1)^i e_i
            let top = forward_difference(&rest, (d - i) as usize)[0];
            let s = if i % 2 == 0 { 1 } else { -1 };
            let ei = s * top;
            for (k, r) in rest.iter_mut().enumerate() {
                *r -= s * ei * binomial(n0 + k as i64 + d - 1 - i, d - i);
            }
            e.push(ei);
        }
        HilbertPolynomial { dim, e }
    }
}

fn forward_difference(values: &[i64], times: usize) -> Vec<i64> {
    let mut v = values.to_vec();
    for _ in 0..times {
        v = v.windows(2).map(|w| w[1] - w[0]).collect();
    }
    v
}

/// Postulation number, or the floor of an unsuccessful downward scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Postulation {
    Value(i64),
    BelowFloor(i64),
}

impl Postulation {
    pub fn value(&self) -> Option<i64> {
        match self {
            Postulation::Value(n) => Some(*n),
            Postulation::BelowFloor(_) => None,
        }
    }
}

/// `rows[i][k] = Δ^i(P - H)(from + k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaTable {
    pub from: i64,
    pub rows: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertReport {
    pub dim: usize,
    pub e: Vec<i64>,
    pub anchor: i64,
    pub window: i64,
    pub postulation: Postulation,
    /// `H(n)` for `1 ≤ n ≤` the last computed power.
    #[serde(rename = "H")]
    pub h: BTreeMap<i64, i64>,
    pub delta: Option<DeltaTable>,
}

impl HilbertReport {
    pub fn polynomial(&self) -> HilbertPolynomial {
        HilbertPolynomial { dim: self.dim, e: self.e.clone() }
    }

    /// `H(n)`, zero for `n ≤ 0`; `None` beyond the computed range.
    pub fn h_at(&self, n: i64) -> Option<i64> {
        if n <= 0 {
            Some(0)
        } else {
            self.h.get(&n).copied()
        }
    }

    pub fn last_computed(&self) -> i64 {
        self.h.keys().next_back().copied().unwrap_or(0)
    }

    /// `(P - H)(n)` where `H` is known.
    pub fn defect(&self, n: i64) -> Option<i64> {
        Some(self.polynomial().eval(n) - self.h_at(n)?)
    }

    pub fn postulation_value(&self) -> Option<i64> {
        self.postulation.value()
    }
}

/// Fits the Hilbert polynomial of degree `dim` to a function `h` defined
/// for `n ≥ 1`, computing values lazily and at most up to `limits.n_max`.
pub fn fit_hilbert(
    dim: usize,
    limits: HilbertLimits,
    mut h: impl FnMut(i64) -> Result<i64>,
) -> Result<HilbertReport> {
    let d = dim as i64;
    let mut values: BTreeMap<i64, i64> = BTreeMap::new();
    let mut get = |n: i64, values: &mut BTreeMap<i64, i64>| -> Result<i64> {
        if n <= 0 {
            return Ok(0);
        }
        if let Some(v) = values.get(&n) {
            return Ok(*v);
        }
        let v = h(n)?;
        values.insert(n, v);
        Ok(v)
    };
    let mut n0 = 1;
    let poly = loop {
        if n0 + d + limits.window > limits.n_max {
            return Err(Error::AnchorNotFound { n_max: limits.n_max as usize });
        }
        let block: Vec<i64> = (n0..=n0 + d).map(|n| get(n, &mut values)).collect::<Result<_>>()?;
        let p = HilbertPolynomial::interpolate(dim, n0, &block);
        let mut ok = true;
        for n in n0 + d + 1..=n0 + d + limits.window {
            if get(n, &mut values)? != p.eval(n) {
                ok = false;
                break;
            }
        }
        if ok {
            break p;
        }
        n0 += 1;
    };
    let floor = limits.floor.unwrap_or(-2 * d);
    let mut postulation = Postulation::BelowFloor(floor);
    let mut n = n0 - 1;
    while n >= floor {
        if poly.eval(n) != get(n, &mut values)? {
            postulation = Postulation::Value(n);
            break;
        }
        n -= 1;
    }
    Ok(HilbertReport { dim, e: poly.e, anchor: n0, window: limits.window, postulation, h: values, delta: None })
}

/// `H_I(n) = λ(R/I^n)`, zero for `n ≤ 0`.
pub fn hilbert_function(ideal: &Ideal, n: i64) -> Result<i64> {
    if n <= 0 {
        return Ok(0);
    }
    Ok(ideal.power(n as u32).length()? as i64)
}

/// Hilbert-Samuel polynomial of an m-primary ideal of the ambient ring.
pub fn hilbert_polynomial(ideal: &Ideal, limits: HilbertLimits) -> Result<HilbertReport> {
    if !ideal.is_m_primary()? {
        return Err(Error::NotMPrimary("Hilbert function".into()));
    }
    let mut tower = crate::rees::PowerTower::new(ideal.clone());
    fit_hilbert(ideal.nvars(), limits, |n| tower.length(n as u32).map(|v| v as i64))
}

/// Postulation number from a fitted report with a fresh floor.
pub fn postulation_number(report: &HilbertReport, floor: i64) -> Postulation {
    let p = report.polynomial();
    let mut n = report.anchor - 1;
    while n >= floor {
        match report.h_at(n) {
            Some(h) if h != p.eval(n) => return Postulation::Value(n),
            _ => {}
        }
        n -= 1;
    }
    Postulation::BelowFloor(floor)
}

/// `Δ^i(P - H)(n)` for `0 ≤ i ≤ i_max` and `from ≤ n ≤ to`, restricted to
/// entries whose inputs are all known.
pub fn delta_table(report: &HilbertReport, i_max: usize, from: i64, to: i64) -> DeltaTable {
    let top = report.last_computed().min(to + i_max as i64);
    let base: Vec<i64> = (from..=top).map(|n| report.defect(n).unwrap_or(0)).collect();
    let rows = (0..=i_max)
        .map(|i| {
            let mut r = forward_difference(&base, i);
            r.truncate((to - from + 1).max(0) as usize);
            r
        })
        .collect();
    DeltaTable { from, rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generalized_binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(-1, 2), 1);
        assert_eq!(binomial(-2, 3), -4);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(0, 1), 0);
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        let p = HilbertPolynomial { dim: 2, e: vec![49, 21, -3] };
        let vals: Vec<i64> = (4..=6).map(|n| p.eval(n)).collect();
        assert_eq!(HilbertPolynomial::interpolate(2, 4, &vals), p);
        let q = HilbertPolynomial { dim: 3, e: vec![27, 18, 1, -1] };
        let vals: Vec<i64> = (-2..=1).map(|n| q.eval(n)).collect();
        assert_eq!(HilbertPolynomial::interpolate(3, -2, &vals), q);
        // 27 C(n+2,3) - 18 C(n+1,2) + n + 1
        for n in -3..8 {
            assert_eq!(q.eval(n), 27 * binomial(n + 2, 3) - 18 * binomial(n + 1, 2) + n + 1);
        }
    }

    #[test]
    fn fit_of_the_maximal_ideal() {
        let r = fit_hilbert(2, HilbertLimits::default(), |n| Ok(n * (n + 1) / 2)).unwrap();
        assert_eq!(r.e, vec![1, 0, 0]);
        assert_eq!(r.postulation, Postulation::Value(-2));
        assert_eq!(r.anchor, 1);
    }

    #[test]
    fn below_floor_is_reported() {
        // P = H = n in dimension one with zero defect only at n = 0
        let r = fit_hilbert(1, HilbertLimits { floor: Some(0), ..Default::default() }, Ok).unwrap();
        assert_eq!(r.postulation, Postulation::BelowFloor(0));
    }
}
