//! Rational functions in `a` over ℚ, kept in canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::polynomial::Polynomial;
use super::{Rational, ScalarError};

/// An element of ℚ(a) as a reduced fraction of polynomials.
///
/// Canonical form: `gcd(num, den) = 1`, `den` is monic, and the zero
/// function is `0/1`. Equality is therefore plain structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num/den` to canonical form. Panics if `den` is zero;
    /// fallible callers should go through [`RationalFunction::div`].
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, r) = num.div_rem(&g);
        debug_assert!(r.is_zero());
        let (mut den, r) = den.div_rem(&g);
        debug_assert!(r.is_zero());
        let lead = den.leading_coeff();
        if !lead.is_one() {
            let inv = Rational::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction::from_poly(Polynomial::constant(c))
    }

    /// The indeterminate `a`.
    pub fn indeterminate() -> Self {
        RationalFunction::from_poly(Polynomial::indeterminate())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn div(&self, rhs: &RationalFunction) -> Result<RationalFunction, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(RationalFunction::new(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    pub fn inv(&self) -> Result<RationalFunction, ScalarError> {
        RationalFunction::one().div(self)
    }

    pub fn pow(&self, exp: u32) -> Self {
        // num and den are coprime, so the powers are too
        RationalFunction {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Evaluates at a rational point. Because the fraction is reduced, a
    /// vanishing denominator is a genuine pole.
    pub fn eval(&self, at: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(ScalarError::Pole { at: at.clone() });
        }
        Ok(self.num.eval(at) / d)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Renders in the scalar grammar: plain polynomial when the denominator is
/// one, otherwise `num/den` with parentheses wherever re-parsing could
/// associate differently.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_s = self.num.to_string();
        let den_s = self.den.to_string();
        if needs_paren_as_numerator(&self.num) {
            write!(f, "({num_s})")?;
        } else {
            write!(f, "{num_s}")?;
        }
        write!(f, "/")?;
        if needs_paren_as_denominator(&self.den) {
            write!(f, "({den_s})")
        } else {
            write!(f, "{den_s}")
        }
    }
}

fn term_count(p: &Polynomial) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

fn needs_paren_as_numerator(p: &Polynomial) -> bool {
    term_count(p) > 1
        || p.leading_coeff().is_negative()
        || p.coeffs().iter().any(|c| !c.is_integer())
}

/// The denominator can stay bare only when it is a monic power of `a` or a
/// positive integer: anything else (e.g. `2*a`, `a - 1`) could fuse with a
/// preceding integer literal or read ambiguously.
fn needs_paren_as_denominator(p: &Polynomial) -> bool {
    if term_count(p) != 1 {
        return true;
    }
    let lead = p.leading_coeff();
    match p.degree() {
        Some(0) => !(lead.is_integer() && lead.is_positive()),
        _ => !lead.is_one(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&c| q(c, 1)).collect())
    }

    #[test]
    fn canonical_form_monic_denominator() {
        // (1 + a)/(1 - a) -> num = -a - 1, den = a - 1
        let rf = RationalFunction::new(poly(&[1, 1]), poly(&[1, -1]));
        assert_eq!(rf.num(), &poly(&[-1, -1]));
        assert_eq!(rf.den(), &poly(&[-1, 1]));
        assert!(rf.den().is_monic());
    }

    #[test]
    fn reduces_common_factors() {
        // (a^2 - 1)/(a - 1) = a + 1
        let rf = RationalFunction::new(poly(&[-1, 0, 1]), poly(&[-1, 1]));
        assert_eq!(rf, RationalFunction::from_poly(poly(&[1, 1])));
        assert!(!rf.is_constant());
        assert!(rf.den().is_one());
    }

    #[test]
    fn eval_and_poles() {
        let rf = RationalFunction::new(poly(&[1, 1]), poly(&[1, -1]));
        assert_eq!(rf.eval(&q(0, 1)).unwrap(), q(1, 1));
        assert_eq!(rf.eval(&q(3, 1)).unwrap(), q(-2, 1));
        assert!(matches!(
            rf.eval(&q(1, 1)),
            Err(ScalarError::Pole { .. })
        ));
    }

    #[test]
    fn arithmetic_keeps_canonical_form() {
        let x = RationalFunction::new(poly(&[1, 1]), poly(&[1, -1]));
        let sum = &x + &(-&x);
        assert_eq!(sum, RationalFunction::zero());
        let prod = &x * &x.inv().unwrap();
        assert_eq!(prod, RationalFunction::one());
    }

    #[test]
    fn display_parenthesizes_compound_parts() {
        let rf = RationalFunction::new(poly(&[1, 1]), poly(&[1, -1]));
        assert_eq!(rf.to_string(), "(-a - 1)/(a - 1)");
        let simple = RationalFunction::new(poly(&[1]), poly(&[0, 2]));
        // 1/(2a) reduces to (1/2)/a
        assert_eq!(simple.to_string(), "(1/2)/a");
    }
}
