//! Bernstein–Sato root sets for Brieskorn–Pham hypersurfaces and for tuples
//! of them in disjoint variables, the integer invariant `alpha_tilde_Z`, and
//! the inequalities tying it to the HRH level and `Sp_min,Z`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{HrhError, Result};
use crate::exactnum::{Extended, Rational, RationalMultiset};
use crate::hrh::HrhValue;
use crate::spectrum::{bp_spectrum_capped, BpSpec, SpectrumData, DEFAULT_MAX_MU};

/// Roots `γ` of a Bernstein–Sato polynomial `b_f(s) = ∏ (s + γ)` of a tuple of
/// `r` functions, stored as the root set of the reduced polynomial
/// `b_f(s) / (s + r)` plus `r` itself.
///
/// Keeping the reduced roots separate retains whether `s + r` divides the
/// reduced polynomial (as for `x^2 + y^2`, where `b = (s+1)^2`), while
/// every other multiplicity is dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSet {
    reduced: BTreeSet<Rational>,
    r: u32,
}

#[derive(Serialize, Deserialize)]
struct RootSetJson {
    r: u32,
    roots: Vec<Rational>,
}

impl RootSet {
    pub fn new(reduced: impl IntoIterator<Item = Rational>, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(HrhError::domain("a root set needs r >= 1"));
        }
        let reduced: BTreeSet<Rational> = reduced.into_iter().collect();
        if let Some(bad) = reduced.iter().find(|g| !g.is_positive()) {
            return Err(HrhError::domain(format!("root {bad} is not positive")));
        }
        Ok(RootSet { reduced, r })
    }

    /// From the full root list of `b_f`; one copy of `r` is divided out.
    pub fn from_full(full: &RationalMultiset, r: u32) -> Result<Self> {
        let mut rest = full.clone();
        if !rest.remove_one(&Rational::from(r as i64)) {
            return Err(HrhError::domain(format!(
                "the root {r} is missing; b_f(s) must be divisible by (s + {r})"
            )));
        }
        RootSet::new(rest.distinct().cloned(), r)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn reduced(&self) -> &BTreeSet<Rational> {
        &self.reduced
    }

    /// Roots of `b_f` with the mandatory root `r` counted once more than in
    /// the reduced polynomial.
    pub fn full(&self) -> RationalMultiset {
        let mut m: RationalMultiset = self.reduced.iter().cloned().collect();
        m.insert(Rational::from(self.r as i64), 1);
        m
    }

    /// Distinct roots of `b_f`, ascending.
    pub fn full_set(&self) -> BTreeSet<Rational> {
        self.full().distinct().cloned().collect()
    }

    /// JSON `{"r": r, "roots": [...]}`. Roots are listed ascending; `r`
    /// appears twice when it is also a root of the reduced polynomial.
    pub fn to_json(&self) -> serde_json::Value {
        let roots = self
            .full()
            .iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v.clone(), m as usize))
            .collect();
        serde_json::to_value(RootSetJson { r: self.r, roots })
            .expect("root set serializes")
    }

    /// Reads the JSON form. The root `r` is the mandatory factor; it is kept
    /// among the reduced roots only if listed twice.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: RootSetJson = serde_json::from_value(value.clone())
            .map_err(|e| HrhError::domain(format!("bad root set JSON: {e}")))?;
        let full: RationalMultiset = raw.roots.into_iter().collect();
        RootSet::from_full(&full, raw.r)
    }
}

/// Roots of `b_f` for a Brieskorn–Pham `f`: the reduced roots are the
/// distinct spectral numbers (quasi-homogeneous case) and `r = 1`.
pub fn bp_reduced_roots(spec: &BpSpec) -> Result<RootSet> {
    let sp = bp_spectrum_capped(spec, DEFAULT_MAX_MU)?;
    Ok(roots_from_spectrum(&sp))
}

/// Roots of a quasi-homogeneous isolated hypersurface singularity from its spectrum.
pub fn roots_from_spectrum(sp: &SpectrumData) -> RootSet {
    RootSet {
        reduced: sp.values().distinct().cloned().collect(),
        r: 1,
    }
}

/// Thom–Sebastiani rule for tuples in disjoint variables: the roots of
/// `b_{(f,g)}` are the pairwise sums of roots of `b_f` and `b_g`, and the
/// codimensions add.
pub fn tuple_ts_roots(a: &RootSet, b: &RootSet) -> RootSet {
    let sums = a.full().sumset(&b.full());
    RootSet::from_full(&sums, a.r + b.r).expect("r_A + r_B is always a pairwise sum")
}

/// `min { j ∈ ℤ : b̃_f(-j) = 0 }`, or `+∞` when the reduced polynomial has
/// no integer root.
pub fn alpha_tilde_int(rs: &RootSet) -> Extended<Rational> {
    rs.reduced
        .iter()
        .find(|g| g.is_integer())
        .cloned()
        .map_or(Extended::PosInf, Extended::Finite)
}

/// One inequality `lhs <= rhs` in the extended order (`+∞` maximal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IneqEntry {
    pub statement: &'static str,
    pub lhs: Extended<Rational>,
    pub rhs: Extended<Rational>,
    pub holds: bool,
}

impl IneqEntry {
    pub fn new(statement: &'static str, lhs: Extended<Rational>, rhs: Extended<Rational>) -> Self {
        let holds = lhs <= rhs;
        IneqEntry { statement, lhs, rhs, holds }
    }

    pub fn is_equality(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl Serialize for IneqEntry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("IneqEntry", 4)?;
        st.serialize_field("statement", self.statement)?;
        st.serialize_field("lhs", &ext_json(&self.lhs))?;
        st.serialize_field("rhs", &ext_json(&self.rhs))?;
        st.serialize_field("holds", &self.holds)?;
        st.end()
    }
}

/// Finite values as exact `"p/q"` strings, `+∞` as `"inf"`.
pub fn ext_json(v: &Extended<Rational>) -> serde_json::Value {
    match v {
        Extended::Finite(x) => serde_json::Value::from(x.to_string()),
        Extended::PosInf => serde_json::Value::from("inf"),
    }
}

/// Named inequality checks, keyed by a stable identifier.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IneqReport {
    pub entries: BTreeMap<String, IneqEntry>,
}

impl IneqReport {
    pub fn all_hold(&self) -> bool {
        self.entries.values().all(|e| e.holds)
    }

    pub fn get(&self, key: &str) -> Option<&IneqEntry> {
        self.entries.get(key)
    }
}

/// Inputs to [`check_cor_bs`]. `sp_min` and the Hodge-filtration index are
/// optional because not every family has them available.
#[derive(Clone, Debug)]
pub struct BsInequalityInput {
    pub alpha_z: Extended<Rational>,
    pub r: u32,
    pub hrh: HrhValue,
    pub sp_min: Option<Extended<Rational>>,
    /// `p(Q^ℤ, F)` together with the ambient dimension `n`.
    pub hodge_index: Option<(i64, u32)>,
}

pub const BS_HRH: &str = "bs_hrh_bound";
pub const BS_SPMIN: &str = "bs_spmin_bound";
pub const BS_HODGE: &str = "bs_hodge_bound";

/// Checks the inequalities valid for hypersurfaces and for varieties with
/// rational singularities:
///
/// * `alpha_tilde_Z - r - 1 <= HRH`
/// * `alpha_tilde_Z - r + 1 <= Sp_min,Z`
/// * `alpha_tilde_Z <= p(Q^ℤ, F) + n + r`
///
/// The HRH side uses the largest level compatible with `hrh`, so the check is
/// a necessary condition when HRH is only bracketed.
pub fn check_cor_bs(input: &BsInequalityInput) -> IneqReport {
    let r = Rational::from(input.r as i64);
    let shifted = |delta: i64| {
        input
            .alpha_z
            .clone()
            .map(|a| &a + &(&Rational::from(delta) - &r))
    };
    let mut entries = BTreeMap::new();
    entries.insert(
        BS_HRH.to_string(),
        IneqEntry::new(
            "alpha_tilde_Z - r - 1 <= HRH",
            shifted(-1),
            input.hrh.upper().into(),
        ),
    );
    if let Some(sp_min) = &input.sp_min {
        entries.insert(
            BS_SPMIN.to_string(),
            IneqEntry::new("alpha_tilde_Z - r + 1 <= Sp_min,Z", shifted(1), sp_min.clone()),
        );
    }
    if let Some((p, n)) = input.hodge_index {
        let rhs = Rational::from(p + n as i64 + input.r as i64);
        entries.insert(
            BS_HODGE.to_string(),
            IneqEntry::new(
                "alpha_tilde_Z <= p(Q, F) + n + r",
                input.alpha_z.clone(),
                Extended::Finite(rhs),
            ),
        );
    }
    IneqReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{bp_spectrum, hrh_isolated_hypersurface, sp_min_int};

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Rational> {
        items.iter().map(|s| r(s)).collect()
    }

    fn bp(e: &[u32]) -> BpSpec {
        BpSpec::new(e.to_vec()).unwrap()
    }

    #[test]
    fn bp_roots() {
        let q = bp_reduced_roots(&bp(&[2, 2, 2, 2])).unwrap();
        assert_eq!(q.reduced(), &set(&["2"]));
        assert_eq!(q.full_set(), set(&["1", "2"]));
        assert_eq!(bp_reduced_roots(&bp(&[2, 2, 2])).unwrap().reduced(), &set(&["3/2"]));
        assert_eq!(
            bp_reduced_roots(&bp(&[2, 3])).unwrap().reduced(),
            &set(&["5/6", "7/6"])
        );
    }

    #[test]
    fn torelli_tuple() {
        let f = bp_reduced_roots(&bp(&[2, 2, 2])).unwrap();
        let t = tuple_ts_roots(&f, &f);
        assert_eq!(t.r(), 2);
        assert_eq!(t.full_set(), set(&["2", "5/2", "3"]));
        assert_eq!(alpha_tilde_int(&t), Extended::Finite(r("3")));
    }

    #[test]
    fn trivial_tuple() {
        let one = RootSet::new([], 1).unwrap();
        let t = tuple_ts_roots(&one, &one);
        assert_eq!(t.full_set(), set(&["2"]));
        assert_eq!(alpha_tilde_int(&t), Extended::PosInf);
    }

    #[test]
    fn odd_quadric_tuple_has_half_integer_sum() {
        let a = bp_reduced_roots(&bp(&[2; 3])).unwrap();
        let b = bp_reduced_roots(&bp(&[2; 5])).unwrap();
        let t = tuple_ts_roots(&a, &b);
        assert!(t.full_set().contains(&r("4")));
    }

    #[test]
    fn alpha_tilde_examples() {
        assert_eq!(
            alpha_tilde_int(&bp_reduced_roots(&bp(&[2, 3])).unwrap()),
            Extended::PosInf
        );
        assert_eq!(
            alpha_tilde_int(&bp_reduced_roots(&bp(&[2, 2, 2, 2])).unwrap()),
            Extended::Finite(r("2"))
        );
    }

    #[test]
    fn normal_crossing_keeps_root_one() {
        let rs = bp_reduced_roots(&bp(&[2, 2])).unwrap();
        assert_eq!(alpha_tilde_int(&rs), Extended::Finite(r("1")));
        assert_eq!(rs.full().multiplicity(&r("1")), 2);
        let sp = bp_spectrum(&bp(&[2, 2])).unwrap();
        assert_eq!(sp_min_int(&sp), alpha_tilde_int(&rs));
    }

    #[test]
    fn missing_mandatory_root() {
        let full: RationalMultiset = [r("5/2"), r("3")].into_iter().collect();
        assert!(RootSet::from_full(&full, 2).is_err());
        assert!(RootSet::new([r("-1")], 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = bp_reduced_roots(&bp(&[2, 2, 2])).unwrap();
        let t = tuple_ts_roots(&f, &f);
        let j = t.to_json();
        assert_eq!(j.to_string(), r#"{"r":2,"roots":["2","5/2","3"]}"#);
        assert_eq!(RootSet::from_json(&j).unwrap(), t);
    }

    #[test]
    fn json_keeps_r_when_also_reduced() {
        // 1/4 + 6/8 = 1, so 1 is a reduced root as well as r
        let rs = bp_reduced_roots(&bp(&[4, 8])).unwrap();
        assert!(rs.reduced().contains(&r("1")));
        let j = rs.to_json();
        assert_eq!(j["roots"].as_array().unwrap().iter().filter(|v| *v == "1").count(), 2);
        assert_eq!(RootSet::from_json(&j).unwrap(), rs);
    }

    #[test]
    fn inequality_examples() {
        let torelli = check_cor_bs(&BsInequalityInput {
            alpha_z: Extended::Finite(r("3")),
            r: 2,
            hrh: HrhValue::infinite(),
            sp_min: None,
            hodge_index: None,
        });
        assert!(torelli.all_hold());
        assert_eq!(torelli.get(BS_HRH).unwrap().lhs, Extended::Finite(r("0")));

        let sp = bp_spectrum(&bp(&[2, 2, 2, 2])).unwrap();
        let quadric = check_cor_bs(&BsInequalityInput {
            alpha_z: Extended::Finite(r("2")),
            r: 1,
            hrh: hrh_isolated_hypersurface(&sp),
            sp_min: Some(sp_min_int(&sp)),
            hodge_index: None,
        });
        assert!(quadric.all_hold());
        assert!(quadric.get(BS_HRH).unwrap().is_equality());

        let cusp = check_cor_bs(&BsInequalityInput {
            alpha_z: Extended::PosInf,
            r: 1,
            hrh: HrhValue::infinite(),
            sp_min: Some(Extended::PosInf),
            hodge_index: None,
        });
        assert!(cusp.all_hold());
        assert_eq!(cusp.entries.len(), 2);
    }

    #[test]
    fn violated_inequality_reported() {
        let rep = check_cor_bs(&BsInequalityInput {
            alpha_z: Extended::Finite(r("5")),
            r: 1,
            hrh: HrhValue::exact(0),
            sp_min: Some(Extended::Finite(r("2"))),
            hodge_index: Some((-3, 3)),
        });
        assert!(!rep.get(BS_HRH).unwrap().holds);
        assert!(!rep.get(BS_SPMIN).unwrap().holds);
        assert!(!rep.get(BS_HODGE).unwrap().holds);
    }
}
