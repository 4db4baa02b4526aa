//! Local cohomology of determinantal varieties.
//!
//! For each of the four matrix spaces (generic `m x n`, odd and even skew,
//! symmetric) the class of `Σ_j [H^j_{Z_p}(O_X)] q^j` in the Grothendieck
//! group of equivariant holonomic D-modules is a sum of simple classes `[D_s]`
//! with explicit `q`-binomial coefficients. Codimension, `lcd`, `lcdef_gen`
//! and the equality `IC = H^c` are all read off that vector and then compared
//! with independent closed forms; any disagreement is a [`HrhError::Consistency`].

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{HrhError, Result};
use crate::exactnum::{qbinomial, Extended, LaurentPoly};
use crate::hrh::{level_json, HrhValue};

/// `C(x, 2)`; zero for `x < 2`.
fn choose2(x: i64) -> i64 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DetCase {
    /// `m x n` matrices, `m >= n`; `Z_p` = rank `<= p`.
    Generic { m: i64, n: i64 },
    /// `(2m+1) x (2m+1)` skew matrices; `Z_p` = rank `<= 2p`.
    SkewOdd { m: i64 },
    /// `2m x 2m` skew matrices; `Z_p` = rank `<= 2p`.
    SkewEven { m: i64 },
    /// `n x n` symmetric matrices; `Z_p` = rank `<= p`.
    Symmetric { n: i64 },
}

/// A determinantal variety `Z_p` inside one of the four matrix spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DetSpec {
    case: DetCase,
    p: i64,
}

/// Where a spec sits relative to the range covered by the singular analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetRegime {
    /// `p = 0` or `p` maximal: `Z_p` is a point or the whole space.
    Smooth,
    /// Symmetric `p = 1`: singular but a rational homology manifold.
    SymmetricRankOne,
    /// Singular, not a rational homology manifold.
    Singular,
}

impl DetSpec {
    /// Accepts `0 <= p <= p_max` (`n` generic/symmetric, `m` skew) and
    /// `m >= n >= 2` generic, `m >= 1` skew, `n >= 2` symmetric.
    pub fn new(case: DetCase, p: i64) -> Result<Self> {
        let size_ok = match case {
            DetCase::Generic { m, n } => m >= n && n >= 2,
            DetCase::SkewOdd { m } | DetCase::SkewEven { m } => m >= 1,
            DetCase::Symmetric { n } => n >= 2,
        };
        if !size_ok {
            return Err(HrhError::domain(format!("invalid matrix size in {case:?}")));
        }
        let spec = DetSpec { case, p };
        if p < 0 || p > spec.p_max() {
            return Err(HrhError::domain(format!(
                "rank parameter p={p} outside 0..={} for {case:?}",
                spec.p_max()
            )));
        }
        Ok(spec)
    }

    pub fn case(&self) -> DetCase {
        self.case
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    fn p_max(&self) -> i64 {
        match self.case {
            DetCase::Generic { n, .. } | DetCase::Symmetric { n } => n,
            DetCase::SkewOdd { m } | DetCase::SkewEven { m } => m,
        }
    }

    pub fn regime(&self) -> DetRegime {
        if self.p == 0 || self.p == self.p_max() {
            DetRegime::Smooth
        } else if matches!(self.case, DetCase::Symmetric { .. }) && self.p == 1 {
            DetRegime::SymmetricRankOne
        } else {
            DetRegime::Singular
        }
    }

    fn with_p(&self, p: i64) -> DetSpec {
        DetSpec { case: self.case, p }
    }

    /// Dimension of the ambient matrix space.
    pub fn ambient_dim(&self) -> i64 {
        match self.case {
            DetCase::Generic { m, n } => m * n,
            DetCase::SkewOdd { m } => choose2(2 * m + 1),
            DetCase::SkewEven { m } => choose2(2 * m),
            DetCase::Symmetric { n } => choose2(n + 1),
        }
    }

    /// Codimension of `Z_p` in the matrix space, by the classical closed forms.
    pub fn codim(&self) -> i64 {
        let p = self.p;
        match self.case {
            DetCase::Generic { m, n } => (m - p) * (n - p),
            DetCase::SkewOdd { m } => (m - p) * (2 * (m - p) + 1),
            DetCase::SkewEven { m } => (m - p) * (2 * (m - p) - 1),
            DetCase::Symmetric { n } => choose2(n - p + 1),
        }
    }

    pub fn dim(&self) -> i64 {
        self.ambient_dim() - self.codim()
    }

    /// Index of the simple class supported on the non-rationally-smooth locus:
    /// `p - 1`, or `p - 2` in the symmetric case.
    fn witness_class(&self) -> i64 {
        match self.case {
            DetCase::Symmetric { .. } => self.p - 2,
            _ => self.p - 1,
        }
    }
}

impl fmt::Display for DetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.p;
        match self.case {
            DetCase::Generic { m, n } => write!(f, "det generic m={m} n={n} p={p}"),
            DetCase::SkewOdd { m } => write!(f, "det skew-odd m={m} p={p}"),
            DetCase::SkewEven { m } => write!(f, "det skew-even m={m} p={p}"),
            DetCase::Symmetric { n } => write!(f, "det symmetric n={n} p={p}"),
        }
    }
}

/// Coefficients of `[D_s]` in `Σ_j [H^j_{Z_p}(O_X)] q^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothVector {
    classes: BTreeMap<i64, LaurentPoly>,
}

impl GrothVector {
    pub fn classes(&self) -> &BTreeMap<i64, LaurentPoly> {
        &self.classes
    }

    pub fn class(&self, s: i64) -> Option<&LaurentPoly> {
        self.classes.get(&s)
    }

    pub fn min_exponent(&self) -> i64 {
        self.classes
            .values()
            .map(|c| c.min_degree().expect("stored classes are nonzero"))
            .min()
            .expect("at least one class")
    }

    pub fn max_exponent(&self) -> i64 {
        self.classes
            .values()
            .map(|c| c.max_degree().expect("stored classes are nonzero"))
            .max()
            .expect("at least one class")
    }

    /// Classes with a nonzero coefficient at `q^j`.
    pub fn classes_at(&self, j: i64) -> Vec<i64> {
        self.classes
            .iter()
            .filter(|(_, c)| !c.coeff(j).is_zero_big())
            .map(|(s, _)| *s)
            .collect()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.classes.values().all(LaurentPoly::has_nonnegative_coeffs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .classes
            .iter()
            .map(|(s, c)| (s.to_string(), serde_json::Value::from(c.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }
}

trait IsZeroBig {
    fn is_zero_big(&self) -> bool;
}

impl IsZeroBig for num_bigint::BigInt {
    fn is_zero_big(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

fn term(prefactor: i64, a: i64, b: i64, step: i64) -> Result<LaurentPoly> {
    Ok(qbinomial(a, b, step)?.shift(prefactor))
}

/// Evaluates the local cohomology class formula. Defined for `0 <= p < p_max`.
pub fn groth_vector(spec: &DetSpec) -> Result<GrothVector> {
    let p = spec.p;
    if p >= spec.p_max() {
        return Err(HrhError::domain(format!(
            "{spec}: local cohomology formula needs p < {}",
            spec.p_max()
        )));
    }
    let mut classes = BTreeMap::new();
    match spec.case {
        DetCase::Generic { m, n } => {
            for s in 0..=p {
                let e = (n - p).pow(2) + (n - s) * (m - n);
                classes.insert(s, term(e, n - s - 1, p - s, 2)?);
            }
        }
        DetCase::SkewOdd { m } => {
            for s in 0..=p {
                let e = 2 * (m - p).pow(2) + (m - p) + 2 * (p - s);
                classes.insert(s, term(e, m - 1 - s, p - s, 4)?);
            }
        }
        DetCase::SkewEven { m } => {
            for s in 0..=p {
                let e = 2 * (m - p).pow(2) - (m - p);
                classes.insert(s, term(e, m - 1 - s, p - s, 4)?);
            }
        }
        DetCase::Symmetric { n } => {
            for l in 0..=p / 2 {
                let e = 1 + choose2(n - p + 2 * l + 1) - choose2(2 * l + 2);
                let a = (n - p + 2 * l - 1).div_euclid(2);
                classes.insert(p - 2 * l, term(e, a, l, -4)?);
            }
        }
    }
    let gv = GrothVector { classes };
    if !gv.all_nonnegative() {
        return Err(HrhError::consistency(format!(
            "{spec}: negative coefficient in the local cohomology classes"
        )));
    }
    Ok(gv)
}

/// Whether `IC_{Z_p} = H^{c_p}_{Z_p}(O_X)`, read from the class vector:
/// `[D_p]` must be the only class present at `q^{c_p}`. Cross-checked against
/// the closed-form answer for singular specs.
pub fn ic_equals_h(spec: &DetSpec) -> Result<bool> {
    let gv = groth_vector(spec)?;
    let at_codim = gv.classes_at(spec.codim());
    let computed = at_codim == vec![spec.p];
    if spec.regime() == DetRegime::Singular {
        let closed = closed_forms(spec)?.ic_equals_h;
        if closed != computed {
            return Err(HrhError::consistency(format!(
                "{spec}: IC = H^c is {computed} from the class vector but {closed} by closed form"
            )));
        }
    }
    Ok(computed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LcdefInvariants {
    pub lcdef_gen: i64,
    pub lcd: i64,
    pub lcdef: i64,
}

fn closed_lcdef_gen(spec: &DetSpec) -> i64 {
    let p = spec.p;
    match spec.case {
        DetCase::Generic { m, n } => m + n - 2 * p - 2,
        DetCase::SkewOdd { m } => 4 * (m - p - 1) + 2,
        DetCase::SkewEven { m } => 4 * (m - p - 1),
        DetCase::Symmetric { n } => 2 * (n - p - 1),
    }
}

fn closed_lcd(spec: &DetSpec) -> i64 {
    let p = spec.p;
    match spec.case {
        DetCase::Generic { m, n } => m * n - (p + 1).pow(2) + 1,
        DetCase::SkewOdd { m } => choose2(2 * m + 1) - choose2(2 * p + 2) + 1,
        DetCase::SkewEven { m } => choose2(2 * m) - choose2(2 * p + 2) + 1,
        DetCase::Symmetric { n } if p % 2 == 0 => 1 + choose2(n + 1) - choose2(p + 2),
        DetCase::Symmetric { n } => 1 + choose2(n) - choose2(p + 1),
    }
}

fn closed_lcdef_difference(spec: &DetSpec) -> i64 {
    let p = spec.p;
    match spec.case {
        DetCase::Generic { m, n } => (p - 1) * (m + n - 2 * p - 2),
        DetCase::SkewOdd { m } => 2 * (p - 1) * (2 * (m - p - 1) + 1),
        DetCase::SkewEven { m } => 4 * (p - 1) * (m - p - 1),
        DetCase::Symmetric { n } if p % 2 == 0 => (n - p - 1) * (p - 2),
        DetCase::Symmetric { n } => (n - p - 1) * (p - 3),
    }
}

fn closed_nrs_codim(spec: &DetSpec) -> i64 {
    let p = spec.p;
    match spec.case {
        DetCase::Generic { m, n } => m + n - 2 * p + 1,
        DetCase::SkewOdd { m } => 4 * (m - p) + 3,
        DetCase::SkewEven { m } => 4 * (m - p) + 1,
        DetCase::Symmetric { n } => 2 * (n - p) + 3,
    }
}

/// Closed-form answers for a singular spec, independent of the class vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub codim: i64,
    pub lcdef_gen: i64,
    pub lcd: i64,
    pub lcdef_minus_gen: i64,
    pub nrs_codim: i64,
    pub ic_equals_h: bool,
}

pub fn closed_forms(spec: &DetSpec) -> Result<ClosedForms> {
    require_singular(spec)?;
    let ic_equals_h = match spec.case {
        DetCase::Generic { m, n } => m > n,
        DetCase::SkewOdd { .. } => true,
        DetCase::SkewEven { .. } => false,
        DetCase::Symmetric { n } => (n - spec.p) % 2 == 0,
    };
    Ok(ClosedForms {
        codim: spec.codim(),
        lcdef_gen: closed_lcdef_gen(spec),
        lcd: closed_lcd(spec),
        lcdef_minus_gen: closed_lcdef_difference(spec),
        nrs_codim: closed_nrs_codim(spec),
        ic_equals_h,
    })
}

fn require_singular(spec: &DetSpec) -> Result<()> {
    if spec.regime() != DetRegime::Singular {
        return Err(HrhError::domain(format!(
            "{spec}: defect invariants need 1 <= p < p_max (2 <= p for symmetric)"
        )));
    }
    Ok(())
}

fn agree(spec: &DetSpec, what: &str, computed: i64, closed: i64) -> Result<()> {
    if computed != closed {
        return Err(HrhError::consistency(format!(
            "{spec}: {what} is {computed} from the class vector but {closed} by closed form"
        )));
    }
    Ok(())
}

/// `lcdef_gen`, `lcd` and `lcdef` of a singular determinantal variety.
///
/// `lcdef_gen` is the top `q`-degree of the witness class minus the
/// codimension; `lcd` is the top `q`-degree overall.
pub fn lcdef_invariants(spec: &DetSpec) -> Result<LcdefInvariants> {
    require_singular(spec)?;
    let gv = groth_vector(spec)?;
    let codim = spec.codim();
    agree(spec, "codim", gv.min_exponent(), codim)?;

    let witness = gv.class(spec.witness_class()).ok_or_else(|| {
        HrhError::consistency(format!("{spec}: witness class missing from the class vector"))
    })?;
    let lcdef_gen = witness.max_degree()? - codim;
    agree(spec, "lcdef_gen", lcdef_gen, closed_lcdef_gen(spec))?;

    let lcd = gv.max_exponent();
    agree(spec, "lcd", lcd, closed_lcd(spec))?;

    let lcdef = lcd - codim;
    agree(spec, "lcdef - lcdef_gen", lcdef - lcdef_gen, closed_lcdef_difference(spec))?;
    if lcdef_gen > lcdef {
        return Err(HrhError::consistency(format!(
            "{spec}: lcdef_gen {lcdef_gen} exceeds lcdef {lcdef}"
        )));
    }
    Ok(LcdefInvariants { lcdef_gen, lcd, lcdef })
}

/// Codimension of the non-rationally-smooth locus `Z_{p-1}` (`Z_{p-2}`
/// symmetric) inside `Z_p`, computed as a difference of codimensions and
/// checked against the closed form.
pub fn nrs_codim(spec: &DetSpec) -> Result<i64> {
    require_singular(spec)?;
    let diff = spec.with_p(spec.witness_class()).codim() - spec.codim();
    agree(spec, "codim of the non-RHM locus", diff, closed_nrs_codim(spec))?;
    Ok(diff)
}

/// Everything known about one determinantal variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetReport {
    pub spec: DetSpec,
    pub codim: i64,
    pub dim: i64,
    pub ic_equals_h: bool,
    pub lcdef_gen: i64,
    pub lcd: i64,
    pub lcdef: i64,
    pub nrs_codim: Option<i64>,
    pub hrh: HrhValue,
    pub is_rhm: bool,
}

impl DetReport {
    /// Slack in `lcdef_gen + 2 HRH + 3 <= codim_Z(Z_nRS)` at the lower HRH
    /// end; `None` when there is no non-RHM locus.
    pub fn pp_bound_slack(&self) -> Option<i64> {
        let lo = *self.hrh.lower().finite()?;
        self.nrs_codim.map(|c| c - (self.lcdef_gen + 2 * lo + 3))
    }

    /// Flat JSON with every named field.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "spec": self.spec.to_string(),
            "codim": self.codim,
            "dim": self.dim,
            "ic_equals_h": self.ic_equals_h,
            "lcdef_gen": self.lcdef_gen,
            "lcd": self.lcd,
            "lcdef": self.lcdef,
            "nrs_codim": self.nrs_codim,
            "hrh_kind": self.hrh.kind(),
            "hrh_lo": level_json(&self.hrh.lower()),
            "hrh_hi": level_json(&self.hrh.upper()),
            "is_rhm": self.is_rhm,
        })
    }
}

/// HRH bracket for a singular `Z_p`: at least 0 (rational singularities) and
/// at most the largest `k` with `lcdef_gen + 2k + 3 <= codim_Z(Z_nRS)`.
pub fn det_report(spec: &DetSpec) -> Result<DetReport> {
    let codim = spec.codim();
    let dim = spec.dim();
    match spec.regime() {
        DetRegime::Smooth => Ok(DetReport {
            spec: *spec,
            codim,
            dim,
            ic_equals_h: true,
            lcdef_gen: 0,
            lcd: codim,
            lcdef: 0,
            nrs_codim: None,
            hrh: HrhValue::infinite(),
            is_rhm: true,
        }),
        DetRegime::SymmetricRankOne => {
            let gv = groth_vector(spec)?;
            agree(spec, "codim", gv.min_exponent(), codim)?;
            agree(spec, "lcd", gv.max_exponent(), codim)?;
            Ok(DetReport {
                spec: *spec,
                codim,
                dim,
                ic_equals_h: ic_equals_h(spec)?,
                lcdef_gen: 0,
                lcd: codim,
                lcdef: 0,
                nrs_codim: None,
                hrh: HrhValue::infinite(),
                is_rhm: true,
            })
        }
        DetRegime::Singular => {
            let inv = lcdef_invariants(spec)?;
            let nrs = nrs_codim(spec)?;
            let hi = (nrs - inv.lcdef_gen - 3).div_euclid(2);
            if hi < 0 {
                return Err(HrhError::consistency(format!(
                    "{spec}: HRH upper bound {hi} contradicts rational singularities"
                )));
            }
            Ok(DetReport {
                spec: *spec,
                codim,
                dim,
                ic_equals_h: ic_equals_h(spec)?,
                lcdef_gen: inv.lcdef_gen,
                lcd: inv.lcd,
                lcdef: inv.lcdef,
                nrs_codim: Some(nrs),
                hrh: HrhValue::interval(0, Extended::Finite(hi)),
                is_rhm: false,
            })
        }
    }
}

/// All specs with size parameters in `2..=max_size` (`1..=max_size` for skew)
/// and every `p` in range, including smooth boundary cases.
pub fn spec_grid(max_size: i64) -> Vec<DetSpec> {
    let mut out = Vec::new();
    for n in 2..=max_size {
        for m in n..=max_size {
            for p in 0..=n {
                out.push(DetSpec { case: DetCase::Generic { m, n }, p });
            }
        }
        for p in 0..=n {
            out.push(DetSpec { case: DetCase::Symmetric { n }, p });
        }
    }
    for m in 1..=max_size {
        for p in 0..=m {
            out.push(DetSpec { case: DetCase::SkewOdd { m }, p });
            out.push(DetSpec { case: DetCase::SkewEven { m }, p });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic(m: i64, n: i64, p: i64) -> DetSpec {
        DetSpec::new(DetCase::Generic { m, n }, p).unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn generic_4_3_2_vector() {
        let gv = groth_vector(&generic(4, 3, 2)).unwrap();
        assert_eq!(gv.class(2), Some(&poly("1*q^2")));
        assert_eq!(gv.class(1), Some(&poly("1*q^3")));
        assert_eq!(gv.class(0), Some(&poly("1*q^4")));
    }

    #[test]
    fn pfaffian_vector() {
        let spec = DetSpec::new(DetCase::SkewEven { m: 2 }, 1).unwrap();
        let gv = groth_vector(&spec).unwrap();
        assert_eq!(gv.classes().len(), 2);
        assert_eq!(gv.class(0), Some(&poly("1*q^1")));
        assert_eq!(gv.class(1), Some(&poly("1*q^1")));
        assert_eq!(spec.codim(), 1);
        assert_eq!(spec.dim(), 5);
    }

    #[test]
    fn symmetric_3_2_vector() {
        let spec = DetSpec::new(DetCase::Symmetric { n: 3 }, 2).unwrap();
        let gv = groth_vector(&spec).unwrap();
        assert_eq!(gv.class(2), Some(&poly("1*q^1")));
        assert_eq!(gv.class(0), Some(&poly("1*q^1")));
        assert_eq!(spec.codim(), 1);
        assert!(!ic_equals_h(&spec).unwrap());
        let inv = lcdef_invariants(&spec).unwrap();
        assert_eq!(inv, LcdefInvariants { lcdef_gen: 0, lcd: 1, lcdef: 0 });
    }

    #[test]
    fn codim_and_dim() {
        let s = generic(4, 3, 2);
        assert_eq!((s.codim(), s.dim()), (2, 10));
    }

    #[test]
    fn ic_examples() {
        assert!(ic_equals_h(&generic(4, 3, 2)).unwrap());
        assert!(!ic_equals_h(&generic(3, 3, 2)).unwrap());
    }

    #[test]
    fn lcdef_examples() {
        let inv = lcdef_invariants(&generic(4, 3, 2)).unwrap();
        assert_eq!(inv, LcdefInvariants { lcdef_gen: 1, lcd: 4, lcdef: 2 });
        let skew = DetSpec::new(DetCase::SkewEven { m: 3 }, 2).unwrap();
        let inv = lcdef_invariants(&skew).unwrap();
        assert_eq!(inv.lcdef_gen, 0);
        assert_eq!(inv.lcdef, 0);
    }

    #[test]
    fn reports() {
        let g = det_report(&generic(4, 3, 2)).unwrap();
        assert_eq!(g.hrh, HrhValue::exact(0));
        assert_eq!(g.nrs_codim, Some(4));
        assert!(!g.is_rhm);
        assert_eq!(g.pp_bound_slack(), Some(0));

        let pf = det_report(&DetSpec::new(DetCase::SkewEven { m: 2 }, 1).unwrap()).unwrap();
        assert_eq!(pf.hrh, HrhValue::interval(0, Extended::Finite(1)));
        assert_eq!(pf.nrs_codim, Some(5));
        assert!(!pf.is_rhm);

        for n in 2..6 {
            let s1 = det_report(&DetSpec::new(DetCase::Symmetric { n }, 1).unwrap()).unwrap();
            assert!(s1.is_rhm);
            assert_eq!(s1.hrh, HrhValue::infinite());
        }
    }

    #[test]
    fn out_of_range() {
        assert!(DetSpec::new(DetCase::Generic { m: 3, n: 4 }, 1).is_err());
        assert!(DetSpec::new(DetCase::Generic { m: 4, n: 3 }, 4).is_err());
        assert!(DetSpec::new(DetCase::SkewOdd { m: 2 }, -1).is_err());
        let top = generic(4, 3, 3);
        assert!(groth_vector(&top).is_err());
        assert!(lcdef_invariants(&DetSpec::new(DetCase::Symmetric { n: 4 }, 1).unwrap()).is_err());
        assert!(det_report(&top).unwrap().is_rhm);
    }

    #[test]
    fn flat_json() {
        let j = det_report(&generic(4, 3, 2)).unwrap().to_json();
        assert_eq!(j["lcdef_gen"], 1);
        assert_eq!(j["lcd"], 4);
        assert_eq!(j["hrh_lo"], 0);
        assert_eq!(j["hrh_kind"], "exact");
        assert_eq!(j["spec"], "det generic m=4 n=3 p=2");
    }

    #[test]
    fn grid_is_consistent() {
        for spec in spec_grid(8) {
            let rep = det_report(&spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
            assert!(rep.lcdef_gen <= rep.lcdef, "{spec}");
            if let Some(slack) = rep.pp_bound_slack() {
                assert!(slack >= 0, "{spec}");
                if matches!(spec.case(), DetCase::Generic { .. }) {
                    assert_eq!(slack, 0, "{spec}");
                    assert_eq!(rep.hrh, HrhValue::exact(0));
                } else {
                    assert_eq!(rep.hrh, HrhValue::interval(0, Extended::Finite(1)), "{spec}");
                }
            }
        }
    }
}
