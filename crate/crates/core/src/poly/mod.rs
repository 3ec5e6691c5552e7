//! Exact sparse multivariate polynomials over Q.

mod monomial;
mod permutation;
mod polynomial;
mod ring;
mod weights;

use num_bigint::BigInt;

pub use monomial::Monomial;
pub use permutation::Permutation;
pub use polynomial::Polynomial;
pub use ring::{Ring, RingSignature, EL_VARIABLES, MQL_VARIABLES};
pub use weights::{WeightSystem, WeightedDegree};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
