use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{HrhError, Result};

/// Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Canonical form: no zero coefficient is ever stored, so the zero polynomial
/// is the empty map and two equal polynomials have equal maps.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^e`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        Self::from_terms([(exp, coeff.into())])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_degree(&self) -> Result<i64> {
        self.terms
            .keys()
            .next()
            .copied()
            .ok_or_else(|| HrhError::domain("min_degree of the zero polynomial"))
    }

    pub fn max_degree(&self) -> Result<i64> {
        self.terms
            .keys()
            .next_back()
            .copied()
            .ok_or_else(|| HrhError::domain("max_degree of the zero polynomial"))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_add(k).expect("exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `q -> q^step`. `step` must be nonzero.
    pub fn substitute_power(&self, step: i64) -> Result<Self> {
        if step == 0 {
            return Err(HrhError::domain("substitution q -> q^0 is not allowed"));
        }
        Ok(LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_mul(step).expect("exponent overflow"), c.clone()))
                .collect(),
        })
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True when the coefficient list reads the same from both ends.
    pub fn is_palindromic(&self) -> bool {
        let (Ok(lo), Ok(hi)) = (self.min_degree(), self.max_degree()) else {
            return true;
        };
        self.terms.iter().all(|(e, c)| self.coeff(lo + hi - e) == *c)
    }

    /// Exact quotient by `1 - q^k` (`k > 0`), or `None` if the division
    /// leaves a remainder.
    pub fn div_one_minus_qk(&self, k: i64) -> Option<Self> {
        assert!(k > 0);
        if self.is_zero() {
            return Some(Self::zero());
        }
        // P = (1 - q^k) Q  <=>  Q_e = P_e + Q_{e-k}, read from the low end.
        let lo = self.min_degree().ok()?;
        let hi = self.max_degree().ok()?;
        let mut quot: BTreeMap<i64, BigInt> = BTreeMap::new();
        for e in lo..=hi - k {
            let mut c = self.coeff(e);
            if let Some(prev) = quot.get(&(e - k)) {
                c += prev;
            }
            if !c.is_zero() {
                quot.insert(e, c);
            }
        }
        let q = LaurentPoly { terms: quot };
        let back = &q - &q.shift(k);
        (back == *self).then_some(q)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
        )
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.checked_add(*eb).expect("exponent overflow");
                *out.entry(e).or_default() += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: out }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for LaurentPoly {
    /// Ascending sum of `c*q^e` terms, `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*q^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LaurentPoly {
    type Err = HrhError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for term in s.split(" + ") {
            let bad = || HrhError::domain(format!("malformed Laurent term {term:?}"));
            let (c, e) = term.trim().split_once("*q^").ok_or_else(bad)?;
            let c: BigInt = c.parse().map_err(|_| bad())?;
            let e: i64 = e.parse().map_err(|_| bad())?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

/// `1 + q + ... + q^(n-1)`.
pub fn q_integer(n: u64) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|e| (e, BigInt::one())))
}
