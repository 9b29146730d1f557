//! Arbitrary-precision rationals with an inline `i64` fast path.
//!
//! Almost every coefficient that shows up in partition generating functions
//! is a small integer, so values are kept as a reduced `i64` pair until an
//! operation overflows, at which point they move to a [`BigRational`]. The
//! representation is canonical: a value that fits the small form is always
//! stored in the small form, which keeps derived equality and hashing exact.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::QfracError;

/// Reduced fraction `numerator / denominator` with `denominator >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactRational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    // reduced, den > 0, num != i64::MIN
    Small(i64, i64),
    Big(BigRational),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl ExactRational {
    pub fn zero() -> Self {
        ExactRational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        ExactRational(Repr::Small(1, 1))
    }

    pub fn from_integer(n: i64) -> Self {
        if n == i64::MIN {
            ExactRational(Repr::Big(BigRational::from_integer(BigInt::from(n))))
        } else {
            ExactRational(Repr::Small(n, 1))
        }
    }

    /// Builds `num / den`, reducing and normalising the sign.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_big(BigRational::new(num, den))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let negative = (num < 0) != (den < 0);
        let (n, d) = (num.unsigned_abs(), den.unsigned_abs());
        let g = gcd_u128(n, d);
        let (n, d) = (n / g, d / g);
        if n <= i64::MAX as u128 && d <= i64::MAX as u128 {
            let n = n as i64;
            return ExactRational(Repr::Small(if negative { -n } else { n }, d as i64));
        }
        let mut bn = BigInt::from(n);
        if negative {
            bn = -bn;
        }
        ExactRational(Repr::Big(BigRational::new_raw(bn, BigInt::from(d))))
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational::new reduces; `new_raw` callers must pass reduced input.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return ExactRational(Repr::Small(n, d));
            }
        }
        ExactRational(Repr::Big(r))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(r) => Some(Self::from_big(r.recip())),
        }
    }

    /// Integer power; negative exponents invert. `None` for `0^negative`.
    pub fn pow(&self, exp: i32) -> Option<Self> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Some(acc)
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl Default for ExactRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<i32> for ExactRational {
    fn from(n: i32) -> Self {
        Self::from_integer(n as i64)
    }
}

impl From<(i64, i64)> for ExactRational {
    fn from((n, d): (i64, i64)) -> Self {
        Self::new(n, d)
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        Self::from_big(BigRational::from_integer(n))
    }
}

impl fmt::Display for ExactRational {
    /// Always `num/den`, also for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExactRational {
    type Err = QfracError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || QfracError::Usage(format!("malformed rational `{s}`"));
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Self::from_bigints(n, d))
    }
}

impl PartialOrd for ExactRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        match &self.0 {
            Repr::Small(n, d) => ExactRational(Repr::Small(-n, *d)),
            Repr::Big(r) => ExactRational::from_big(-r),
        }
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        -&self
    }
}

impl Add for &ExactRational {
    type Output = ExactRational;
    fn add(self, rhs: &ExactRational) -> ExactRational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_add(*c) {
                Some(s) => ExactRational::from_integer(s),
                None => ExactRational::from_i128(*a as i128 + *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                ExactRational::from_i128(a * d + c * b, b * d)
            }
            _ => ExactRational::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for &ExactRational {
    type Output = ExactRational;
    fn sub(self, rhs: &ExactRational) -> ExactRational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_sub(*c) {
                Some(s) => ExactRational::from_integer(s),
                None => ExactRational::from_i128(*a as i128 - *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                ExactRational::from_i128(a * d - c * b, b * d)
            }
            _ => ExactRational::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl Mul for &ExactRational {
    type Output = ExactRational;
    fn mul(self, rhs: &ExactRational) -> ExactRational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_mul(*c) {
                Some(p) => ExactRational::from_integer(p),
                None => ExactRational::from_i128(*a as i128 * *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                // cross-cancel first so the product is already reduced
                let g1 = a.gcd(d).max(1);
                let g2 = c.gcd(b).max(1);
                let n = (*a / g1) as i128 * (*c / g2) as i128;
                let m = (*b / g2) as i128 * (*d / g1) as i128;
                ExactRational::from_i128(n, m)
            }
            _ => ExactRational::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &ExactRational {
    type Output = ExactRational;
    /// Panics on division by zero.
    fn div(self, rhs: &ExactRational) -> ExactRational {
        let inv = rhs.recip().expect("division by zero rational");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational { (&self).$m(&rhs) }
        }
        impl $tr<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: &ExactRational) -> ExactRational { (&self).$m(rhs) }
        }
        impl $tr<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $m(self, rhs: ExactRational) -> ExactRational { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul, Div::div);

impl AddAssign<&ExactRational> for ExactRational {
    fn add_assign(&mut self, rhs: &ExactRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&ExactRational> for ExactRational {
    fn sub_assign(&mut self, rhs: &ExactRational) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&ExactRational> for ExactRational {
    fn mul_assign(&mut self, rhs: &ExactRational) {
        *self = &*self * rhs;
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

impl Zero for ExactRational {
    fn zero() -> Self {
        ExactRational::zero()
    }
    fn is_zero(&self) -> bool {
        ExactRational::is_zero(self)
    }
}

impl One for ExactRational {
    fn one() -> Self {
        ExactRational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn reduces_and_normalises_sign() {
        assert_eq!(r(6, -4), r(-3, 2));
        assert_eq!(r(0, -7), ExactRational::zero());
        assert_eq!(r(-6, -4).to_string(), "3/2");
        assert_eq!(ExactRational::from_integer(5).to_string(), "5/1");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = ExactRational::from_integer(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.numer(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let m = ExactRational::from_integer(i64::MIN);
        assert_eq!((-&m).numer(), -BigInt::from(i64::MIN));
        assert_eq!(
            &m + &ExactRational::one(),
            ExactRational::from_integer(i64::MIN + 1)
        );
    }

    #[test]
    fn parse_round_trip() {
        let x: ExactRational = "-12/18".parse().unwrap();
        assert_eq!(x, r(-2, 3));
        assert_eq!("7".parse::<ExactRational>().unwrap(), r(7, 1));
        assert!("1/0".parse::<ExactRational>().is_err());
        assert!("x".parse::<ExactRational>().is_err());
    }

    #[test]
    fn pow_and_recip() {
        assert_eq!(r(2, 3).pow(3).unwrap(), r(8, 27));
        assert_eq!(r(2, 3).pow(-2).unwrap(), r(9, 4));
        assert_eq!(ExactRational::zero().pow(0).unwrap(), ExactRational::one());
        assert!(ExactRational::zero().pow(-1).is_none());
    }

    fn big_or_small() -> impl Strategy<Value = ExactRational> {
        (any::<i64>(), 1i64..=i64::MAX, any::<bool>()).prop_map(|(n, d, square)| {
            let x = ExactRational::from_bigints(BigInt::from(n), BigInt::from(d));
            if square {
                &x * &x
            } else {
                x
            }
        })
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational(x in big_or_small(), y in big_or_small()) {
            let (bx, by) = (x.to_big(), y.to_big());
            prop_assert_eq!((&x + &y).to_big(), &bx + &by);
            prop_assert_eq!((&x - &y).to_big(), &bx - &by);
            prop_assert_eq!((&x * &y).to_big(), &bx * &by);
            if !y.is_zero() {
                prop_assert_eq!((&x / &y).to_big(), &bx / &by);
            }
            prop_assert_eq!(x.cmp(&y), bx.cmp(&by));
        }
    }
}
