//! Exact arithmetic substrate: rationals, Laurent polynomials in `q`,
//! Gaussian binomials and multisets of rationals.

mod laurent;
mod multiset;
mod qbinomial;
mod rational;

pub use laurent::{q_integer, LaurentPoly};
pub use multiset::{MultisetEntry, RationalMultiset};
pub use qbinomial::qbinomial;
pub use rational::{Extended, Rational};
