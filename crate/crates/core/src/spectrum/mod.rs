//! Spectra of Brieskorn–Pham singularities and the HRH level of isolated
//! hypersurface singularities.
//!
//! For `f = x_1^{a_1} + ... + x_n^{a_n}` the spectrum is the multiset of
//! sums `i_1/a_1 + ... + i_n/a_n` with `1 <= i_j <= a_j - 1`. It is built
//! here as an iterated sumset of the one-variable spectra
//! `{1/a, ..., (a-1)/a}`, which is the Thom–Sebastiani rule.

mod link;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HrhError, Result};
use crate::exactnum::{Extended, MultisetEntry, Rational, RationalMultiset};
use crate::hrh::{promote, HrhValue};

pub use link::{eqmf_consistency, link_table_verdict, EqmfReport, LinkTable, LinkVerdict};

/// Default cap on the Milnor number of a spectrum we are willing to build.
pub const DEFAULT_MAX_MU: u64 = 1_000_000;

/// Exponent list of a Brieskorn–Pham polynomial `x_1^{a_1} + ... + x_n^{a_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BpSpec {
    exponents: Vec<u32>,
}

impl BpSpec {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(HrhError::domain("bp() needs at least one exponent"));
        }
        if let Some(a) = exponents.iter().find(|&&a| a < 2) {
            return Err(HrhError::domain(format!("exponent must be >= 2, got {a}")));
        }
        Ok(BpSpec { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    /// `∏ (a_i - 1)`.
    pub fn milnor_number(&self) -> BigUint {
        self.exponents
            .iter()
            .map(|&a| BigUint::from(a - 1))
            .product()
    }

    /// Thom–Sebastiani sum in disjoint variables: the exponent lists concatenate.
    pub fn concat(&self, other: &BpSpec) -> BpSpec {
        let mut exponents = self.exponents.clone();
        exponents.extend_from_slice(&other.exponents);
        BpSpec { exponents }
    }
}

impl fmt::Display for BpSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("bp(")?;
        for (i, a) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Spectrum of an isolated hypersurface singularity in `n` ambient variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumData {
    values: RationalMultiset,
    ambient_vars: usize,
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    ambient_vars: usize,
    values: Vec<MultisetEntry>,
}

impl SpectrumData {
    /// Every value must lie in the open interval `(0, n)`.
    pub fn new(values: RationalMultiset, ambient_vars: usize) -> Result<Self> {
        if ambient_vars == 0 {
            return Err(HrhError::domain("spectrum needs at least one ambient variable"));
        }
        let n = Rational::from(ambient_vars as i64);
        if let Some(bad) = values
            .distinct()
            .find(|v| !v.is_positive() || **v >= n)
        {
            return Err(HrhError::domain(format!(
                "spectral value {bad} outside (0, {ambient_vars})"
            )));
        }
        Ok(SpectrumData { values, ambient_vars })
    }

    pub fn values(&self) -> &RationalMultiset {
        &self.values
    }

    pub fn ambient_vars(&self) -> usize {
        self.ambient_vars
    }

    /// Dimension `d = n - 1` of the hypersurface.
    pub fn dim(&self) -> usize {
        self.ambient_vars - 1
    }

    pub fn multiplicity(&self, alpha: &Rational) -> u64 {
        self.values.multiplicity(alpha)
    }

    /// Spectrum of the Thom–Sebastiani sum `f(x) + g(y)`.
    pub fn thom_sebastiani(&self, other: &SpectrumData) -> SpectrumData {
        SpectrumData {
            values: self.values.sumset(&other.values),
            ambient_vars: self.ambient_vars + other.ambient_vars,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SpectrumJson {
            ambient_vars: self.ambient_vars,
            values: self.values.to_entries(),
        })
        .expect("spectrum serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: SpectrumJson = serde_json::from_value(value.clone())
            .map_err(|e| HrhError::domain(format!("bad spectrum JSON: {e}")))?;
        SpectrumData::new(RationalMultiset::from_entries(raw.values), raw.ambient_vars)
    }
}

/// Spectrum of `x^a` in one variable: `{1/a, ..., (a-1)/a}`.
fn one_variable_spectrum(a: u32) -> RationalMultiset {
    (1..a)
        .map(|i| Rational::new(i, a).expect("a >= 2"))
        .collect()
}

pub fn bp_spectrum(spec: &BpSpec) -> Result<SpectrumData> {
    bp_spectrum_capped(spec, DEFAULT_MAX_MU)
}

/// Spectrum of a Brieskorn–Pham polynomial, refusing inputs whose Milnor
/// number exceeds `max_mu`.
pub fn bp_spectrum_capped(spec: &BpSpec, max_mu: u64) -> Result<SpectrumData> {
    let mu = spec.milnor_number();
    if mu > BigUint::from(max_mu) {
        return Err(HrhError::domain(format!(
            "Milnor number {mu} of {spec} exceeds the enumeration cap {max_mu}"
        )));
    }
    let mut values = RationalMultiset::singleton(Rational::zero());
    for &a in spec.exponents() {
        values = values.sumset(&one_variable_spectrum(a));
    }
    debug_assert_eq!(BigUint::from(values.total()), mu);
    SpectrumData::new(values, spec.num_vars())
}

/// Smallest integer spectral value, or `+∞` if there is none.
pub fn sp_min_int(sp: &SpectrumData) -> Extended<Rational> {
    sp.values
        .distinct()
        .find(|v| v.is_integer())
        .cloned()
        .map_or(Extended::PosInf, Extended::Finite)
}

/// HRH level of an isolated hypersurface singularity: `Sp_min,Z - 2`.
pub fn hrh_isolated_hypersurface(sp: &SpectrumData) -> HrhValue {
    match sp_min_int(sp) {
        Extended::PosInf => HrhValue::infinite(),
        Extended::Finite(m) => {
            let k = m.to_i64().expect("integral spectral value fits i64") - 2;
            HrhValue::Exact(promote(k, sp.dim() as i64))
        }
    }
}

/// Hodge numbers `s_p = dim Gr_F^p H^d(F)` of the Milnor fiber cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MilnorVector {
    s: Vec<u64>,
    d: usize,
}

impl MilnorVector {
    pub fn new(s: Vec<u64>) -> Result<Self> {
        if s.is_empty() {
            return Err(HrhError::domain("Milnor vector needs s_0 .. s_d"));
        }
        let d = s.len() - 1;
        Ok(MilnorVector { s, d })
    }

    pub fn s(&self) -> &[u64] {
        &self.s
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn total(&self) -> u64 {
        self.s.iter().sum()
    }
}

/// Bins the spectrum: `s_p` counts values in `(d - p, d - p + 1]`.
pub fn milnor_s(sp: &SpectrumData) -> MilnorVector {
    let d = sp.dim();
    let mut s = vec![0u64; d + 1];
    for (alpha, mult) in sp.values.iter() {
        // alpha in (d-p, d-p+1]  <=>  ceil(alpha) = d - p + 1
        let c = alpha.ceil().to_i64().expect("spectral value fits i64");
        let p = d as i64 + 1 - c;
        if (0..=d as i64).contains(&p) {
            s[p as usize] += mult;
        }
    }
    MilnorVector { s, d }
}

/// HRH level from the symmetry defect of the Milnor vector: the largest `k`
/// with `s_{d-p} = s_p` for every `p <= k`, subject to the finiteness
/// dichotomy.
pub fn hrh_from_milnor(ms: &MilnorVector) -> HrhValue {
    let d = ms.d;
    let mut k: i64 = -1;
    for p in 0..=d {
        if ms.s[d - p] != ms.s[p] {
            break;
        }
        k = p as i64;
    }
    if k == d as i64 {
        return HrhValue::infinite();
    }
    HrhValue::Exact(promote(k, d as i64))
}

/// Result of the spectral duality check `m_α = m_{n-α}` for non-integral α.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub holds: bool,
    /// Non-integral values whose mirror has a different multiplicity.
    pub violations: Vec<Rational>,
}

pub fn check_duality(sp: &SpectrumData) -> DualityReport {
    let n = Rational::from(sp.ambient_vars as i64);
    let violations: Vec<Rational> = sp
        .values
        .iter()
        .filter(|(alpha, _)| !alpha.is_integer())
        .filter(|(alpha, mult)| sp.values.multiplicity(&(&n - alpha)) != *mult)
        .map(|(alpha, _)| alpha.clone())
        .collect();
    DualityReport { holds: violations.is_empty(), violations }
}

impl BpSpec {
    /// `μ` as `u64` when it fits.
    pub fn milnor_u64(&self) -> Option<u64> {
        let mu = self.milnor_number();
        if mu.is_zero() {
            Some(0)
        } else {
            mu.to_u64()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(e: &[u32]) -> SpectrumData {
        bp_spectrum(&BpSpec::new(e.to_vec()).unwrap()).unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ms(items: &[(&str, u64)]) -> RationalMultiset {
        items.iter().map(|(v, m)| (r(v), *m)).collect()
    }

    #[test]
    fn small_spectra() {
        assert_eq!(bp(&[2, 2, 2]).values(), &ms(&[("3/2", 1)]));
        assert_eq!(bp(&[2, 3]).values(), &ms(&[("5/6", 1), ("7/6", 1)]));
        assert_eq!(bp(&[2, 2, 2, 2]).values(), &ms(&[("2", 1)]));
        assert_eq!(
            bp(&[3, 3]).values(),
            &ms(&[("2/3", 1), ("1", 2), ("4/3", 1)])
        );
    }

    #[test]
    fn exponent_below_two_rejected() {
        assert!(BpSpec::new(vec![1, 2]).is_err());
        assert!(BpSpec::new(vec![]).is_err());
    }

    #[test]
    fn cap_enforced() {
        let spec = BpSpec::new(vec![11, 11, 11]).unwrap();
        assert!(bp_spectrum_capped(&spec, 999).is_err());
        assert_eq!(bp_spectrum_capped(&spec, 1000).unwrap().values().total(), 1000);
    }

    #[test]
    fn sp_min_values() {
        assert_eq!(sp_min_int(&bp(&[2, 3])), Extended::PosInf);
        assert_eq!(sp_min_int(&bp(&[2, 2, 2, 2])), Extended::Finite(r("2")));
        assert_eq!(sp_min_int(&bp(&[3, 3])), Extended::Finite(r("1")));
    }

    #[test]
    fn hrh_examples() {
        assert_eq!(hrh_isolated_hypersurface(&bp(&[2, 2, 2, 2])), HrhValue::exact(0));
        assert_eq!(hrh_isolated_hypersurface(&bp(&[2, 3])), HrhValue::infinite());
        assert_eq!(hrh_isolated_hypersurface(&bp(&[3; 6])), HrhValue::exact(0));
    }

    #[test]
    fn milnor_bins() {
        assert_eq!(milnor_s(&bp(&[2, 2, 2, 2])).s(), &[0, 0, 1, 0]);
        assert_eq!(milnor_s(&bp(&[3, 3])).s(), &[1, 3]);
        let empty = SpectrumData::new(RationalMultiset::new(), 4).unwrap();
        assert_eq!(milnor_s(&empty).s(), &[0, 0, 0, 0]);
    }

    #[test]
    fn hrh_from_milnor_examples() {
        let v = |s: &[u64]| hrh_from_milnor(&MilnorVector::new(s.to_vec()).unwrap());
        assert_eq!(v(&[0, 1, 0, 0]), HrhValue::exact(0));
        assert_eq!(v(&[1, 3]), HrhValue::exact(-1));
        assert_eq!(v(&[0; 6]), HrhValue::infinite());
    }

    #[test]
    fn duality_examples() {
        assert!(check_duality(&bp(&[2, 3])).holds);
        assert!(check_duality(&bp(&[3, 3])).holds);
        let fake = SpectrumData::new(ms(&[("1/2", 1)]), 3).unwrap();
        let rep = check_duality(&fake);
        assert!(!rep.holds);
        assert_eq!(rep.violations, vec![r("1/2")]);
    }

    #[test]
    fn out_of_range_values_rejected() {
        assert!(SpectrumData::new(ms(&[("0", 1)]), 2).is_err());
        assert!(SpectrumData::new(ms(&[("2", 1)]), 2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let sp = bp(&[3, 3]);
        let j = sp.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"ambient_vars":2,"values":[{"alpha":"2/3","mult":1},{"alpha":"1","mult":2},{"alpha":"4/3","mult":1}]}"#
        );
        assert_eq!(SpectrumData::from_json(&j).unwrap(), sp);
    }
}
