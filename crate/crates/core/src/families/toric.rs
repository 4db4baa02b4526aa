use num_integer::Integer;

use crate::error::{HrhError, Result};
use crate::exactnum::Rational;
use crate::hrh::HrhValue;

/// Subset enumeration in the cone-membership test is exponential.
pub const MAX_RAYS: usize = 20;

/// A rational polyhedral cone given by generating rays, normalized to
/// primitive vectors with duplicates removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricCone {
    rays: Vec<Vec<i64>>,
}

impl ToricCone {
    pub fn new(rays: Vec<Vec<i64>>) -> Result<Self> {
        let Some(first) = rays.first() else {
            return Err(HrhError::domain("toric cone needs at least one ray"));
        };
        let dim = first.len();
        if dim == 0 {
            return Err(HrhError::domain("rays must have at least one coordinate"));
        }
        if rays.len() > MAX_RAYS {
            return Err(HrhError::domain(format!("at most {MAX_RAYS} rays supported")));
        }
        let mut out: Vec<Vec<i64>> = Vec::with_capacity(rays.len());
        for ray in rays {
            if ray.len() != dim {
                return Err(HrhError::domain("rays must all have the same length"));
            }
            let g = ray.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g == 0 {
                return Err(HrhError::domain("zero ray"));
            }
            let prim: Vec<i64> = ray.iter().map(|&x| x / g).collect();
            if !out.contains(&prim) {
                out.push(prim);
            }
        }
        let cone = ToricCone { rays: out };
        for r in &cone.rays {
            let neg: Vec<i64> = r.iter().map(|x| -x).collect();
            if in_cone(&neg, &cone.rays) {
                return Err(HrhError::domain("cone contains a line (not strongly convex)"));
            }
        }
        Ok(cone)
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn rank(&self) -> usize {
        rank(&self.rays)
    }

    /// Rays not in the cone spanned by the others.
    pub fn extremal_rays(&self) -> Vec<Vec<i64>> {
        (0..self.rays.len())
            .filter(|&i| {
                let others: Vec<Vec<i64>> = self
                    .rays
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, r)| r.clone())
                    .collect();
                !in_cone(&self.rays[i], &others)
            })
            .map(|i| self.rays[i].clone())
            .collect()
    }

    pub fn is_simplicial(&self) -> bool {
        self.extremal_rays().len() == self.rank()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "rays": self.rays })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let bad = || HrhError::domain("cone JSON must be {\"rays\": [[...],...]}");
        let rows = value.get("rays").and_then(|v| v.as_array()).ok_or_else(bad)?;
        let mut rays = Vec::with_capacity(rows.len());
        for row in rows {
            let coords = row.as_array().ok_or_else(bad)?;
            rays.push(coords.iter().map(|x| x.as_i64().ok_or_else(bad)).collect::<Result<Vec<_>>>()?);
        }
        Self::new(rays)
    }
}

/// `+∞` for a simplicial cone, `0` otherwise.
pub fn toric_hrh(cone: &ToricCone) -> HrhValue {
    if cone.is_simplicial() {
        HrhValue::infinite()
    } else {
        HrhValue::exact(0)
    }
}

fn to_rational(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x)).collect()
}

/// Row-reduces in place; returns pivot columns.
fn row_reduce(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = Rational::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

fn rank(vectors: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational>> = vectors.iter().map(|v| to_rational(v)).collect();
    row_reduce(&mut m).len()
}

/// Solves `Σ λ_j cols[j] = target` for linearly independent `cols`.
fn solve_independent(cols: &[&Vec<i64>], target: &[i64]) -> Option<Vec<Rational>> {
    let k = cols.len();
    let mut m: Vec<Vec<Rational>> = (0..target.len())
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| Rational::from_integer(c[i])).collect();
            row.push(Rational::from_integer(target[i]));
            row
        })
        .collect();
    let pivots = row_reduce(&mut m);
    if pivots.contains(&k) || pivots.len() < k {
        return None;
    }
    Some((0..k).map(|j| m[j][k].clone()).collect())
}

/// Whether `v` is a non-negative combination of `gens`. By Carathéodory it
/// suffices to try linearly independent subsets.
fn in_cone(v: &[i64], gens: &[Vec<i64>]) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let n = gens.len();
    let max_size = rank(gens);
    for mask in 1u32..(1u32 << n) {
        if mask.count_ones() as usize > max_size {
            continue;
        }
        let subset: Vec<&Vec<i64>> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &gens[i]).collect();
        if let Some(lambda) = solve_independent(&subset, v) {
            if lambda.iter().all(|l| l.is_positive() || l.is_zero()) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(rays: &[&[i64]]) -> ToricCone {
        ToricCone::new(rays.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(toric_hrh(&cone(&[&[1, 0], &[0, 1]])), HrhValue::infinite());
        assert_eq!(toric_hrh(&cone(&[&[2, 1], &[1, 2]])), HrhValue::infinite());
        let square = cone(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(square.rank(), 3);
        assert_eq!(toric_hrh(&square), HrhValue::exact(0));
    }

    #[test]
    fn normalization() {
        let c = cone(&[&[2, 4], &[1, 2], &[0, 3]]);
        assert_eq!(c.rays(), &[vec![1, 2], vec![0, 1]]);
    }

    #[test]
    fn redundant_generator_dropped() {
        let c = cone(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(c.extremal_rays().len(), 2);
        assert_eq!(toric_hrh(&c), HrhValue::infinite());
        let c = cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert!(c.is_simplicial());
    }

    #[test]
    fn rejected() {
        assert!(ToricCone::new(vec![]).is_err());
        assert!(ToricCone::new(vec![vec![0, 0]]).is_err());
        assert!(ToricCone::new(vec![vec![1, 0], vec![1]]).is_err());
        assert!(ToricCone::new(vec![vec![1, 0], vec![-1, 0]]).is_err());
        assert!(ToricCone::new(vec![vec![1, 0], vec![-1, 1], vec![0, -1]]).is_err());
    }

    #[test]
    fn membership() {
        assert!(in_cone(&[1, 1], &[vec![1, 0], vec![0, 1]]));
        assert!(!in_cone(&[-1, 1], &[vec![1, 0], vec![0, 1]]));
        assert!(in_cone(&[1, 1, 1], &[vec![1, 0, 0], vec![0, 1, 1]]));
        assert!(!in_cone(&[1, 1, 0], &[vec![1, 0, 0], vec![0, 1, 1]]));
    }

    #[test]
    fn json() {
        let c = cone(&[&[1, 0], &[1, 2]]);
        assert_eq!(ToricCone::from_json(&c.to_json()).unwrap(), c);
    }
}
