//! Slow reference implementations used to cross-check the fast paths.

use crate::error::{HrhError, Result};
use crate::exactnum::{LaurentPoly, Rational, RationalMultiset};
use crate::spectrum::BpSpec;

/// Enumerates every tuple `(i_1, ..., i_n)` with `1 <= i_j <= a_j - 1` and
/// records `Σ i_j / a_j`.
pub fn bp_spectrum_brute_force(spec: &BpSpec, max_mu: u64) -> Result<RationalMultiset> {
    let exps = spec.exponents();
    match spec.milnor_u64() {
        Some(mu) if mu <= max_mu => {}
        _ => {
            return Err(HrhError::domain(format!(
                "Milnor number of {spec} exceeds the enumeration cap {max_mu}"
            )))
        }
    }
    let mut out = RationalMultiset::new();
    let mut idx = vec![1u32; exps.len()];
    loop {
        let value = exps
            .iter()
            .zip(&idx)
            .fold(Rational::zero(), |acc, (&a, &i)| acc + Rational::new(i, a).expect("a >= 2"));
        out.insert(value, 1);
        // odometer increment
        let mut j = 0;
        loop {
            if j == idx.len() {
                return Ok(out);
            }
            idx[j] += 1;
            if idx[j] < exps[j] {
                break;
            }
            idx[j] = 1;
            j += 1;
        }
    }
}

/// Gaussian binomial via `[a, b] = [a-1, b-1] + q^b [a-1, b]`, then `q -> q^step`.
pub fn qbinomial_pascal(a: i64, b: i64, step: i64) -> Result<LaurentPoly> {
    if b < 0 || a < b || step == 0 {
        return Err(HrhError::domain(format!("q-binomial needs 0 <= b <= a, step != 0; got ({a}, {b}, {step})")));
    }
    let (a, b) = (a as usize, b as usize);
    // row[j] = [i, j] for the current i
    let mut row = vec![LaurentPoly::one()];
    for i in 1..=a {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i.min(b) {
            let left = if j >= 1 { row[j - 1].clone() } else { LaurentPoly::zero() };
            let right = row.get(j).map_or_else(LaurentPoly::zero, |p| p.shift(j as i64));
            next.push(&left + &right);
        }
        row = next;
    }
    row[b].substitute_power(step)
}
