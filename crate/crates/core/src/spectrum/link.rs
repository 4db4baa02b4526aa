use serde::Serialize;

use super::MilnorVector;
use crate::error::{HrhError, Result};

/// Hodge-graded link invariants `ℓ^{p,q}` of an isolated singular point of a
/// `d`-dimensional variety, together with the local cohomological defect `a`.
///
/// Entries outside `0 <= p, q <= d` read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkTable {
    d: usize,
    a: usize,
    entries: Vec<Vec<u64>>,
}

impl LinkTable {
    /// `rows[p][q] = ℓ^{p,q}`; must be a `(d+1) x (d+1)` grid of non-negative values.
    pub fn new(d: usize, a: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if rows.len() != d + 1 || rows.iter().any(|r| r.len() != d + 1) {
            return Err(HrhError::domain(format!(
                "link table for d={d} must be {0}x{0}",
                d + 1
            )));
        }
        let mut entries = vec![vec![0u64; d + 1]; d + 1];
        for (p, row) in rows.iter().enumerate() {
            for (q, &v) in row.iter().enumerate() {
                if v < 0 {
                    return Err(HrhError::domain(format!("negative link invariant l^{{{p},{q}}} = {v}")));
                }
                entries[p][q] = v as u64;
            }
        }
        Ok(LinkTable { d, a, entries })
    }

    pub fn zeros(d: usize, a: usize) -> Self {
        LinkTable { d, a, entries: vec![vec![0; d + 1]; d + 1] }
    }

    /// Sets one entry; panics if out of range.
    pub fn with(mut self, p: usize, q: usize, v: u64) -> Self {
        self.entries[p][q] = v;
        self
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn defect(&self) -> usize {
        self.a
    }

    pub fn get(&self, p: i64, q: i64) -> u64 {
        let d = self.d as i64;
        if (0..=d).contains(&p) && (0..=d).contains(&q) {
            self.entries[p as usize][q as usize]
        } else {
            0
        }
    }

    /// Serre symmetry `ℓ^{p,q} = ℓ^{d-p, d-q-1}`.
    pub fn serre_symmetric(&self) -> bool {
        let d = self.d as i64;
        (0..=d).all(|p| (0..=d).all(|q| self.get(p, q) == self.get(d - p, d - q - 1)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkVerdict {
    Holds,
    Fails,
    InvalidTable,
}

/// Decides `HRH_x(Z) >= k` from the link invariants at an isolated singular
/// point: needs `ℓ^{d-i, q-d+i} = 0` for `i <= k`, `q ∈ [d, d+a]`, and
/// `ℓ^{d-i, d-1+i} = 0` for `1 <= i <= k`.
pub fn link_table_verdict(lt: &LinkTable, k: u32) -> LinkVerdict {
    if !lt.serre_symmetric() {
        return LinkVerdict::InvalidTable;
    }
    let d = lt.d as i64;
    let a = lt.a as i64;
    let k = k as i64;
    let first = (0..=k).all(|i| (d..=d + a).all(|q| lt.get(d - i, q - d + i) == 0));
    let second = (1..=k).all(|i| lt.get(d - i, d - 1 + i) == 0);
    if first && second {
        LinkVerdict::Holds
    } else {
        LinkVerdict::Fails
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqmfReport {
    pub holds: bool,
    /// Indices `p` at which `s_{d-p} - s_p ≠ ℓ^{p,d-p-1} - ℓ^{p,d-p}`.
    pub failures: Vec<usize>,
}

/// Checks the identity `s_{d-p} - s_p = ℓ^{p,d-p-1} - ℓ^{p,d-p}` for every `p`.
pub fn eqmf_consistency(lt: &LinkTable, ms: &MilnorVector) -> Result<EqmfReport> {
    if lt.d != ms.dim() {
        return Err(HrhError::domain(format!(
            "link table has d={} but Milnor vector has d={}",
            lt.d,
            ms.dim()
        )));
    }
    let d = lt.d;
    let s = ms.s();
    let failures: Vec<usize> = (0..=d)
        .filter(|&p| {
            let lhs = s[d - p] as i128 - s[p] as i128;
            let (pi, di) = (p as i64, d as i64);
            let rhs = lt.get(pi, di - pi - 1) as i128 - lt.get(pi, di - pi) as i128;
            lhs != rhs
        })
        .collect();
    Ok(EqmfReport { holds: failures.is_empty(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_table_holds() {
        for d in 0..5 {
            assert_eq!(link_table_verdict(&LinkTable::zeros(d, 0), 0), LinkVerdict::Holds);
            assert_eq!(link_table_verdict(&LinkTable::zeros(d, 0), 3), LinkVerdict::Holds);
        }
    }

    #[test]
    fn top_entry_fails() {
        let lt = LinkTable::zeros(2, 0).with(2, 0, 1).with(0, 1, 1);
        assert!(lt.serre_symmetric());
        assert_eq!(link_table_verdict(&lt, 0), LinkVerdict::Fails);
    }

    #[test]
    fn broken_serre_pair() {
        let lt = LinkTable::zeros(2, 0).with(1, 1, 1);
        assert_eq!(link_table_verdict(&lt, 0), LinkVerdict::InvalidTable);
    }

    #[test]
    fn negative_entries_rejected() {
        let rows = vec![vec![0, -1], vec![0, 0]];
        assert!(LinkTable::new(1, 0, &rows).is_err());
        assert!(LinkTable::new(2, 0, &rows).is_err());
    }

    #[test]
    fn eqmf_examples() {
        let zero_s = MilnorVector::new(vec![0; 4]).unwrap();
        assert!(eqmf_consistency(&LinkTable::zeros(3, 0), &zero_s).unwrap().holds);

        let s = MilnorVector::new(vec![0, 1, 0, 0]).unwrap();
        let rep = eqmf_consistency(&LinkTable::zeros(3, 0), &s).unwrap();
        assert!(!rep.holds);
        assert!(rep.failures.contains(&1));

        let lt = LinkTable::zeros(3, 0).with(1, 2, 1).with(2, 0, 1);
        assert!(lt.serre_symmetric());
        assert_eq!(eqmf_consistency(&lt, &s).unwrap().failures, Vec::<usize>::new());
    }

    #[test]
    fn dimension_mismatch() {
        let s = MilnorVector::new(vec![0, 0]).unwrap();
        assert!(eqmf_consistency(&LinkTable::zeros(3, 0), &s).is_err());
    }
}
