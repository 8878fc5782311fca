//! Canonical exact scalars: arbitrary-precision rationals (ℚ) and rational
//! functions in one indeterminate `a` (ℚ(a)), plus a text grammar for
//! scalar expressions.
//!
//! Every scalar is kept in canonical form at all times — rationals as
//! reduced fractions with positive denominator, rational functions as
//! reduced fractions with monic denominator — so equality is structural
//! and zero-testing is exact. The parameter `a` is generic: a ℚ(a) scalar
//! is zero iff it is the zero rational function; behaviour at specific
//! parameter values is reached through [`Scalar::substitute`].

mod parser;
mod polynomial;
mod rational_function;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

pub use parser::parse_scalar;
pub use polynomial::Polynomial;
pub use rational_function::RationalFunction;

/// Arbitrary-precision rational number in lowest terms with positive
/// denominator (invariants maintained by the representation itself).
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Which of the two supported fields a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    /// The rational numbers ℚ.
    Q,
    /// The rational function field ℚ(a).
    Qa,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Q => write!(f, "Q"),
            FieldTag::Qa => write!(f, "Qa"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot combine scalars from different fields")]
    MixedField,
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at a = {}", rational_to_string(.at))]
    Pole { at: Rational },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("the indeterminate `a` is not available in field Q")]
    FieldMismatch { position: usize },
    #[error("substitute requires a Q(a) scalar")]
    NotParametric,
}

/// An element of ℚ or ℚ(a), tagged by field.
///
/// Arithmetic never mixes tags: the checked methods return
/// [`ScalarError::MixedField`], while the operator impls (used internally
/// where containers already enforce a uniform tag) panic on a mix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rational),
    Qa(RationalFunction),
}

impl Scalar {
    pub fn tag(&self) -> FieldTag {
        match self {
            Scalar::Q(_) => FieldTag::Q,
            Scalar::Qa(_) => FieldTag::Qa,
        }
    }

    pub fn zero(tag: FieldTag) -> Self {
        match tag {
            FieldTag::Q => Scalar::Q(Rational::zero()),
            FieldTag::Qa => Scalar::Qa(RationalFunction::zero()),
        }
    }

    pub fn one(tag: FieldTag) -> Self {
        match tag {
            FieldTag::Q => Scalar::Q(Rational::one()),
            FieldTag::Qa => Scalar::Qa(RationalFunction::one()),
        }
    }

    pub fn from_integer(n: i64, tag: FieldTag) -> Self {
        let r = Rational::from_integer(n.into());
        match tag {
            FieldTag::Q => Scalar::Q(r),
            FieldTag::Qa => Scalar::Qa(RationalFunction::constant(r)),
        }
    }

    pub fn from_rational(r: Rational, tag: FieldTag) -> Self {
        match tag {
            FieldTag::Q => Scalar::Q(r),
            FieldTag::Qa => Scalar::Qa(RationalFunction::constant(r)),
        }
    }

    /// The indeterminate `a` as a ℚ(a) scalar.
    pub fn indeterminate() -> Self {
        Scalar::Qa(RationalFunction::indeterminate())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Qa(rf) => rf.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Qa(rf) => rf.is_one(),
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, rhs) {
            (Scalar::Q(x), Scalar::Q(y)) => Ok(Scalar::Q(x + y)),
            (Scalar::Qa(x), Scalar::Qa(y)) => Ok(Scalar::Qa(x + y)),
            _ => Err(ScalarError::MixedField),
        }
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, rhs) {
            (Scalar::Q(x), Scalar::Q(y)) => Ok(Scalar::Q(x - y)),
            (Scalar::Qa(x), Scalar::Qa(y)) => Ok(Scalar::Qa(x - y)),
            _ => Err(ScalarError::MixedField),
        }
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, rhs) {
            (Scalar::Q(x), Scalar::Q(y)) => Ok(Scalar::Q(x * y)),
            (Scalar::Qa(x), Scalar::Qa(y)) => Ok(Scalar::Qa(x * y)),
            _ => Err(ScalarError::MixedField),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, rhs) {
            (Scalar::Q(x), Scalar::Q(y)) => {
                if y.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Q(x / y))
                }
            }
            (Scalar::Qa(x), Scalar::Qa(y)) => Ok(Scalar::Qa(x.div(y)?)),
            _ => Err(ScalarError::MixedField),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        Scalar::one(self.tag()).checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Q(r) => {
                let mut acc = Rational::one();
                for _ in 0..exp {
                    acc *= r;
                }
                Scalar::Q(acc)
            }
            Scalar::Qa(rf) => Scalar::Qa(rf.pow(exp)),
        }
    }

    /// Evaluates a ℚ(a) scalar at a rational point, landing back in ℚ.
    /// A vanishing denominator signals an excluded parameter value.
    pub fn substitute(&self, value: &Rational) -> Result<Rational, ScalarError> {
        match self {
            Scalar::Q(_) => Err(ScalarError::NotParametric),
            Scalar::Qa(rf) => rf.eval(value),
        }
    }

    /// Parses `text` in the scalar grammar under the given field tag.
    pub fn parse(text: &str, tag: FieldTag) -> Result<Scalar, ScalarError> {
        parse_scalar(text, tag)
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x $op y),
                    (Scalar::Qa(x), Scalar::Qa(y)) => Scalar::Qa(x $op y),
                    _ => panic!("scalar arithmetic across different fields"),
                }
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(r) => Scalar::Q(-r),
            Scalar::Qa(rf) => Scalar::Qa(-rf),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Renders in the scalar grammar; `parse(render(s), tag(s)) == s`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{}", rational_to_string(r)),
            Scalar::Qa(rf) => write!(f, "{rf}"),
        }
    }
}

/// `p/q`, or just `p` when the denominator is one.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` as a rational (used for `--alpha`-style inputs).
pub fn rational_from_str(text: &str) -> Result<Rational, ScalarError> {
    match Scalar::parse(text, FieldTag::Q)? {
        Scalar::Q(r) => Ok(r),
        Scalar::Qa(_) => unreachable!("Q-tagged parse returned a Qa scalar"),
    }
}
