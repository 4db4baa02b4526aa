//! The HRH level and how precisely it is known.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::exactnum::Extended;

/// An HRH level: an integer `>= -1`, or `+∞` for a rational homology manifold.
pub type Level = Extended<i64>;

/// HRH level of a variety together with how tightly it is determined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HrhValue {
    Exact(Level),
    LowerBound(Level),
    /// Known to lie in `[lo, hi]`.
    Interval { lo: i64, hi: Level },
}

impl HrhValue {
    pub fn exact(k: i64) -> Self {
        HrhValue::Exact(Extended::Finite(k))
    }

    pub fn infinite() -> Self {
        HrhValue::Exact(Extended::PosInf)
    }

    /// A bracket that collapses to `Exact` when both ends agree.
    pub fn interval(lo: i64, hi: Level) -> Self {
        if hi == Extended::Finite(lo) {
            HrhValue::Exact(hi)
        } else {
            HrhValue::Interval { lo, hi }
        }
    }

    /// The smallest level compatible with this value.
    pub fn lower(&self) -> Level {
        match self {
            HrhValue::Exact(v) | HrhValue::LowerBound(v) => v.clone(),
            HrhValue::Interval { lo, .. } => Extended::Finite(*lo),
        }
    }

    /// The largest level compatible with this value.
    pub fn upper(&self) -> Level {
        match self {
            HrhValue::Exact(v) => v.clone(),
            HrhValue::LowerBound(_) => Extended::PosInf,
            HrhValue::Interval { hi, .. } => hi.clone(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            HrhValue::Exact(_) => "exact",
            HrhValue::LowerBound(_) => "lower_bound",
            HrhValue::Interval { .. } => "interval",
        }
    }

    pub fn is_rhm(&self) -> bool {
        matches!(self, HrhValue::Exact(Extended::PosInf))
    }

    pub fn contains(&self, level: &Level) -> bool {
        self.lower() <= *level && *level <= self.upper()
    }
}

impl fmt::Display for HrhValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HrhValue::Exact(v) => write!(f, "{v}"),
            HrhValue::LowerBound(v) => write!(f, ">= {v}"),
            HrhValue::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// Finite levels as JSON integers, `+∞` as the string `"inf"`.
pub fn level_json(level: &Level) -> serde_json::Value {
    match level {
        Extended::Finite(k) => serde_json::Value::from(*k),
        Extended::PosInf => serde_json::Value::from("inf"),
    }
}

impl Serialize for HrhValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("HrhValue", 3)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("lo", &level_json(&self.lower()))?;
        st.serialize_field("hi", &level_json(&self.upper()))?;
        st.end()
    }
}

/// Applies the finiteness dichotomy: a finite level `k` with `2k > d - 3`
/// is impossible, so such a candidate means the variety is a rational
/// homology manifold.
pub fn promote(k: i64, dim: i64) -> Level {
    if k >= 0 && 2 * k > dim - 3 {
        Extended::PosInf
    } else {
        Extended::Finite(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotion_threshold() {
        assert_eq!(promote(0, 3), Extended::Finite(0));
        assert_eq!(promote(1, 3), Extended::PosInf);
        assert_eq!(promote(0, 2), Extended::PosInf);
        assert_eq!(promote(-1, 1), Extended::Finite(-1));
        assert_eq!(promote(6, 15), Extended::Finite(6));
    }

    #[test]
    fn interval_collapses() {
        assert_eq!(HrhValue::interval(0, Extended::Finite(0)), HrhValue::exact(0));
        let v = HrhValue::interval(0, Extended::Finite(1));
        assert_eq!(v.kind(), "interval");
        assert!(v.contains(&Extended::Finite(1)));
        assert!(!v.contains(&Extended::Finite(2)));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_string(&HrhValue::infinite()).unwrap();
        assert_eq!(v, r#"{"kind":"exact","lo":"inf","hi":"inf"}"#);
    }
}
