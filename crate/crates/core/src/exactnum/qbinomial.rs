use super::laurent::LaurentPoly;
use crate::error::{HrhError, Result};

/// Gaussian binomial `[a choose b]` evaluated at `q^step`.
///
/// Built from the product formula: multiply in one numerator factor
/// `1 - q^(a-b+i)` and divide out `1 - q^i` at each step, every quotient
/// being exact.
pub fn qbinomial(a: i64, b: i64, step: i64) -> Result<LaurentPoly> {
    if b < 0 || a < b {
        return Err(HrhError::domain(format!(
            "q-binomial needs a >= b >= 0, got a={a}, b={b}"
        )));
    }
    if step == 0 {
        return Err(HrhError::domain("q-binomial step must be nonzero"));
    }
    let b = b.min(a - b);
    let mut acc = LaurentPoly::one();
    for i in 1..=b {
        let factor = &LaurentPoly::one() - &LaurentPoly::monomial(a - b + i, 1);
        acc = (&acc * &factor)
            .div_one_minus_qk(i)
            .expect("intermediate q-binomial is a polynomial");
    }
    acc.substitute_power(step)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(qbinomial(2, 1, 1).unwrap().to_string(), "1*q^0 + 1*q^1");
        assert_eq!(
            qbinomial(4, 2, 1).unwrap().to_string(),
            "1*q^0 + 1*q^1 + 2*q^2 + 1*q^3 + 1*q^4"
        );
        assert_eq!(qbinomial(0, 0, 1).unwrap(), LaurentPoly::one());
        assert_eq!(qbinomial(5, 5, -4).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn negative_step_lowest_term() {
        let p = qbinomial(3, 1, -4).unwrap();
        assert_eq!(p.min_degree().unwrap(), -8);
        assert_eq!(p.coeff(-8), 1.into());
    }

    #[test]
    fn shifted_step_four() {
        let p = &LaurentPoly::monomial(1, 1) * &qbinomial(2, 1, 4).unwrap();
        assert_eq!(p.to_string(), "1*q^1 + 1*q^5");
    }

    #[test]
    fn domain_errors() {
        assert!(qbinomial(2, 3, 1).is_err());
        assert!(qbinomial(2, -1, 1).is_err());
        assert!(qbinomial(2, 1, 0).is_err());
    }
}
