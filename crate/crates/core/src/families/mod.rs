//! HRH and `lcdef` for affine cones over smooth projective varieties, affine
//! toric varieties and secant varieties.

mod toric;

use std::collections::BTreeMap;

use crate::error::{HrhError, Result};
use crate::hrh::{promote, HrhValue};

pub use toric::{toric_hrh, ToricCone};

/// Hodge numbers `h^{p,q}` of a smooth projective variety of dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDiamond {
    n: usize,
    h: Vec<Vec<u64>>,
}

impl HodgeDiamond {
    /// Builds a diamond from `(p, q, h^{p,q})` triples, filling in the entries
    /// forced by Hodge and Serre symmetry. Unset entries are zero; two
    /// triples forcing different values at one spot are an error.
    pub fn from_entries(n: usize, entries: &[(i64, i64, i64)]) -> Result<Self> {
        if n == 0 {
            return Err(HrhError::domain("Hodge diamond needs n >= 1"));
        }
        let ni = n as i64;
        let mut forced: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for &(p, q, v) in entries {
            if !(0..=ni).contains(&p) || !(0..=ni).contains(&q) {
                return Err(HrhError::domain(format!("h^{{{p},{q}}} outside 0..={n}")));
            }
            if v < 0 {
                return Err(HrhError::domain(format!("negative Hodge number h^{{{p},{q}}} = {v}")));
            }
            for (a, b) in [(p, q), (q, p), (ni - p, ni - q), (ni - q, ni - p)] {
                let key = (a as usize, b as usize);
                match forced.insert(key, v as u64) {
                    Some(old) if old != v as u64 => {
                        return Err(HrhError::domain(format!(
                            "h^{{{a},{b}}} forced to both {old} and {v} by symmetry"
                        )))
                    }
                    _ => {}
                }
            }
        }
        let mut h = vec![vec![0u64; n + 1]; n + 1];
        for ((p, q), v) in forced {
            h[p][q] = v;
        }
        if h[0][0] == 0 {
            return Err(HrhError::domain("h^{0,0} must be at least 1"));
        }
        Ok(HodgeDiamond { n, h })
    }

    /// Diamond of `P^n`.
    pub fn projective_space(n: usize) -> Self {
        let entries: Vec<_> = (0..=n as i64).map(|p| (p, p, 1)).collect();
        Self::from_entries(n, &entries).expect("valid diamond")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: i64, q: i64) -> u64 {
        let n = self.n as i64;
        if (0..=n).contains(&p) && (0..=n).contains(&q) {
            self.h[p as usize][q as usize]
        } else {
            0
        }
    }

    /// `b_k = Σ_{p+q=k} h^{p,q}`; zero outside `0..=2n`.
    pub fn betti(&self, k: i64) -> u64 {
        (0..=k).map(|p| self.get(p, k - p)).sum()
    }

    /// The same diamond with `p` and `q` swapped.
    pub fn transpose(&self) -> Self {
        let n = self.n;
        let h = (0..=n).map(|p| (0..=n).map(|q| self.h[q][p]).collect()).collect();
        HodgeDiamond { n, h }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut h = Vec::new();
        for p in 0..=self.n {
            for q in 0..=self.n {
                if self.h[p][q] != 0 {
                    h.push(serde_json::json!([p, q, self.h[p][q]]));
                }
            }
        }
        serde_json::json!({ "n": self.n, "h": h })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let bad = || HrhError::domain("diamond JSON must be {\"n\": n, \"h\": [[p,q,v],...]}");
        let n = value.get("n").and_then(|v| v.as_u64()).ok_or_else(bad)? as usize;
        let rows = value.get("h").and_then(|v| v.as_array()).ok_or_else(bad)?;
        let mut entries = Vec::with_capacity(rows.len());
        for row in rows {
            let t = row.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
            let get = |i: usize| t[i].as_i64().ok_or_else(bad);
            entries.push((get(0)?, get(1)?, get(2)?));
        }
        Self::from_entries(n, &entries)
    }
}

/// HRH of the affine cone over `X` under an ample line bundle.
///
/// `k₀` is the largest `k <= ⌊(n+1)/2⌋` with `h^{p,q} = 0` for `q ≠ p` and
/// `h^{p,p} = 1` for all `p <= k`. Under the vanishing, the cup-product maps
/// `H^{p-1,p-1} -> H^{p,p}` are injective by Hard Lefschetz, so being
/// isomorphisms reduces to `h^{p,p} = 1`.
pub fn cone_hrh(dia: &HodgeDiamond) -> Result<HrhValue> {
    if dia.get(0, 0) != 1 {
        return Err(HrhError::domain("cone criterion needs a connected base (h^{0,0} = 1)"));
    }
    let n = dia.n as i64;
    let row_ok = |p: i64| dia.get(p, p) == 1 && (0..=n).all(|q| q == p || dia.get(p, q) == 0);
    let mut k0 = -1;
    for p in 0..=(n + 1) / 2 {
        if !row_ok(p) {
            break;
        }
        k0 = p;
    }
    Ok(HrhValue::Exact(promote(k0, n + 1)))
}

/// `lcdef` of the affine cone: the smallest `c >= 0` with `b_i = b_{i+2}`
/// for `-1 <= i <= n-3-c`.
pub fn cone_lcdef(dia: &HodgeDiamond) -> i64 {
    let n = dia.n as i64;
    let b = |i: i64| if i < 0 { 0 } else { dia.betti(i) };
    (0..)
        .find(|&c| (-1..=n - 3 - c).all(|i| b(i) == b(i + 2)))
        .expect("empty range at c = n - 1")
}

/// HRH of the secant variety of a suitably embedded smooth projective `X`.
pub fn secant_hrh(is_p1: bool, has_vanishing_hi_o: bool) -> HrhValue {
    if is_p1 {
        HrhValue::infinite()
    } else if has_vanishing_hi_o {
        HrhValue::exact(0)
    } else {
        HrhValue::exact(-1)
    }
}
