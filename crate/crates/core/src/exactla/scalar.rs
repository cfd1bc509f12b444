use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

/// Largest magnitude allowed on the small path. `i64::MIN` is excluded so
/// negation can never overflow.
const SMALL_MAX: i128 = i64::MAX as i128;

/// An exact rational number.
///
/// Invariants: the denominator is positive, the fraction is fully reduced,
/// and `Big` never holds a value whose numerator and denominator would both
/// fit in an `i64` (such values are demoted on construction). Equality is
/// therefore plain structural equality.
///
/// Arithmetic on two `Small` values runs in `i128` intermediates, which
/// cannot overflow: products of two magnitudes below 2^63 stay below 2^126,
/// and a sum of two such products stays below 2^127.
#[derive(Clone)]
pub enum Scalar {
    Small(i64, i64),
    Big(Box<BigRational>),
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Builds a reduced scalar from an `i128` fraction, demoting to the small
/// representation whenever it fits.
fn make(num: i128, den: i128) -> Scalar {
    assert!(den != 0, "zero denominator");
    if num == 0 {
        return Scalar::Small(0, 1);
    }
    let sign = if (num < 0) == (den < 0) { 1 } else { -1 };
    let (mut n, mut d) = (num.abs(), den.abs());
    let g = gcd_i128(n, d);
    n /= g;
    d /= g;
    if n <= SMALL_MAX && d <= SMALL_MAX {
        Scalar::Small(sign as i64 * n as i64, d as i64)
    } else {
        let br = BigRational::new(BigInt::from(sign * n), BigInt::from(d));
        Scalar::Big(Box::new(br))
    }
}

/// Demotes a big rational when both components fit in `i64`.
fn from_big(r: BigRational) -> Scalar {
    if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
        if n != i64::MIN && d != i64::MIN {
            return Scalar::Small(n, d);
        }
    }
    Scalar::Big(Box::new(r))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Small(0, 1)
    }

    pub fn one() -> Self {
        Scalar::Small(1, 1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Small(n, 1)
    }

    /// `n/d`, reduced. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        make(n as i128, d as i128)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(n, _) => *n < 0,
            Scalar::Big(r) => r.is_negative(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Small(n, d) => {
                assert!(*n != 0, "inverse of zero");
                make(*d as i128, *n as i128)
            }
            Scalar::Big(r) => from_big(r.recip()),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(n, d) => BigRational::new(BigInt::from(*n), BigInt::from(*d)),
            Scalar::Big(r) => (**r).clone(),
        }
    }

    /// Exact integer value, if the scalar is an integer that fits in `i64`.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Scalar::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    /// Numerator and denominator as `i128`, if they fit (denominator > 0).
    pub fn as_ratio_i128(&self) -> Option<(i128, i128)> {
        match self {
            Scalar::Small(n, d) => Some((*n as i128, *d as i128)),
            Scalar::Big(r) => {
                let n = r.numer().to_i128()?;
                let d = r.denom().to_i128()?;
                Some((n, d))
            }
        }
    }

    /// `n/d` from `i128` parts, reduced. Panics if `d == 0`.
    pub fn ratio_i128(n: i128, d: i128) -> Self {
        make(n, d)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => a == c && b == d,
            (Scalar::Big(x), Scalar::Big(y)) => x == y,
            // Canonical form: a big value never fits the small range.
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => make(
                *a as i128 * *d as i128 + *c as i128 * *b as i128,
                *b as i128 * *d as i128,
            ),
            _ => from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => make(
                *a as i128 * *d as i128 - *c as i128 * *b as i128,
                *b as i128 * *d as i128,
            ),
            _ => from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                make(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        match (self, rhs) {
            (Scalar::Small(a, b), Scalar::Small(c, d)) => {
                make(*a as i128 * *d as i128, *b as i128 * *c as i128)
            }
            _ => from_big(self.to_big() / rhs.to_big()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Small(n, d) => Scalar::Small(-n, *d),
            Scalar::Big(r) => Scalar::Big(Box::new(-(**r).clone())),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| &acc + &x)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(n, 1) => write!(f, "{}", n),
            Scalar::Small(n, d) => write!(f, "{}/{}", n, d),
            Scalar::Big(r) => write!(f, "{}", r),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_reduces() {
        let a = Scalar::ratio(1, 3);
        let b = Scalar::ratio(1, 6);
        assert_eq!(&a + &b, Scalar::ratio(1, 2));
        assert_eq!(&a - &b, Scalar::ratio(1, 6));
        assert_eq!(&a * &b, Scalar::ratio(1, 18));
        assert_eq!(&a / &b, Scalar::from_int(2));
    }

    #[test]
    fn sign_normalization() {
        assert_eq!(Scalar::ratio(1, -2), Scalar::ratio(-1, 2));
        assert_eq!(Scalar::ratio(-4, -8), Scalar::ratio(1, 2));
        assert!(Scalar::ratio(-1, 2).is_negative());
    }

    #[test]
    fn promotion_and_demotion() {
        // (2^62)^2 overflows i64, so the product must promote.
        let big = Scalar::from_int(1 << 62);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Big(_)));
        // Dividing back demotes to the small path again.
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Small(..)));
    }

    #[test]
    fn ordering_is_exact() {
        assert!(Scalar::ratio(1, 3) < Scalar::ratio(34, 100));
        assert!(Scalar::ratio(-1, 2) < Scalar::zero());
        let huge = &Scalar::from_int(i64::MAX) * &Scalar::from_int(i64::MAX);
        assert!(Scalar::from_int(i64::MAX) < huge);
    }

    #[test]
    fn inverse_round_trip() {
        let x = Scalar::ratio(-7, 12);
        assert_eq!(&x * &x.inv(), Scalar::one());
    }
}
