//! Exact rational scalars.
//!
//! A [`Rational`] is always kept in lowest terms with a positive denominator.
//! Values whose numerator and denominator fit in 64 bits are stored inline;
//! anything larger spills to a heap-allocated [`BigRational`]. The
//! representation is canonical (a value that fits inline is never stored on
//! the heap), so derived equality and hashing are value equality and value
//! hashing.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::num::NonZeroU64;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Lowest terms; `den <= i64::MAX`.
    Small {
        num: i64,
        den: NonZeroU64,
    },
    Big(Box<BigRational>),
}

const ONE: NonZeroU64 = NonZeroU64::MIN;
const MAX_SMALL_DEN: i128 = i64::MAX as i128;

impl Rational {
    pub const fn integer(n: i64) -> Rational {
        Rational(Repr::Small { num: n, den: ONE })
    }

    pub const fn zero() -> Rational {
        Rational::integer(0)
    }

    pub const fn one() -> Rational {
        Rational::integer(1)
    }

    /// `num / den`, reduced. Fails on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
        let num = num.into();
        let den = den.into();
        if den.is_zero() {
            return Err(Error::InvalidRational(format!("{num}/{den}")));
        }
        Ok(Rational::from_big(BigRational::new(num, den)))
    }

    /// `num / den` for machine integers.
    ///
    /// Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational::from_i128(num as i128, den as i128)
    }

    fn from_i128(mut num: i128, mut den: i128) -> Rational {
        debug_assert!(den != 0);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        Rational::from_reduced_i128(num, den)
    }

    fn from_reduced_i128(num: i128, den: i128) -> Rational {
        match i64::try_from(num) {
            Ok(n) if den <= MAX_SMALL_DEN => Rational(Repr::Small {
                num: n,
                den: NonZeroU64::new(den as u64).expect("positive denominator"),
            }),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            )))),
        }
    }

    fn from_big(r: BigRational) -> Rational {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Rational(Repr::Small {
                num,
                den: NonZeroU64::new(den as u64).expect("positive denominator"),
            }),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    fn as_big(&self) -> Cow<'_, BigRational> {
        match &self.0 {
            Repr::Small { num, den } => Cow::Owned(BigRational::new_raw(
                BigInt::from(*num),
                BigInt::from(den.get()),
            )),
            Repr::Big(b) => Cow::Borrowed(b),
        }
    }

    pub fn to_big(&self) -> BigRational {
        self.as_big().into_owned()
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(den.get()),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small { num, .. } => num.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => den.get() == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn abs(&self) -> Rational {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Rational {
        self * self
    }

    /// `1 / self`, or `None` for zero.
    pub fn recip(&self) -> Option<Rational> {
        match &self.0 {
            Repr::Small { num: 0, .. } => None,
            Repr::Small { num, den } => Some(Rational::from_i128(den.get() as i128, *num as i128)),
            Repr::Big(b) => Some(Rational::from_big(b.recip())),
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Option<Rational> {
        rhs.recip().map(|r| self * &r)
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small { num, den } => *num as f64 / den.get() as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    fn add_ref(&self, rhs: &Rational) -> Rational {
        if let (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) =
            (&self.0, &rhs.0)
        {
            let (d1, d2) = (d1.get(), d2.get());
            if d1 == 1 && d2 == 1 {
                if let Some(s) = n1.checked_add(*n2) {
                    return Rational::integer(s);
                }
            }
            if d1 == d2 {
                return Rational::from_i128(*n1 as i128 + *n2 as i128, d1 as i128);
            }
            let num = *n1 as i128 * d2 as i128 + *n2 as i128 * d1 as i128;
            return Rational::from_i128(num, d1 as i128 * d2 as i128);
        }
        Rational::from_big(self.as_big().as_ref() + rhs.as_big().as_ref())
    }

    fn sub_ref(&self, rhs: &Rational) -> Rational {
        if let (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) =
            (&self.0, &rhs.0)
        {
            let (d1, d2) = (d1.get(), d2.get());
            if d1 == 1 && d2 == 1 {
                if let Some(s) = n1.checked_sub(*n2) {
                    return Rational::integer(s);
                }
            }
            if d1 == d2 {
                return Rational::from_i128(*n1 as i128 - *n2 as i128, d1 as i128);
            }
            let num = *n1 as i128 * d2 as i128 - *n2 as i128 * d1 as i128;
            return Rational::from_i128(num, d1 as i128 * d2 as i128);
        }
        Rational::from_big(self.as_big().as_ref() - rhs.as_big().as_ref())
    }

    fn mul_ref(&self, rhs: &Rational) -> Rational {
        if let (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) =
            (&self.0, &rhs.0)
        {
            let (n1, n2) = (*n1 as i128, *n2 as i128);
            let (d1, d2) = (d1.get() as i128, d2.get() as i128);
            if n1 == 0 || n2 == 0 {
                return Rational::zero();
            }
            if d1 == 1 && d2 == 1 {
                return Rational::from_reduced_i128(n1 * n2, 1);
            }
            // Cross-cancel so the product is already in lowest terms.
            let g1 = n1.gcd(&d2).max(1);
            let g2 = n2.gcd(&d1).max(1);
            return Rational::from_reduced_i128((n1 / g1) * (n2 / g2), (d1 / g2) * (d2 / g1));
        }
        Rational::from_big(self.as_big().as_ref() * rhs.as_big().as_ref())
    }

    fn div_ref(&self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero rational")
    }

    fn neg_ref(&self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => match num.checked_neg() {
                Some(n) => Rational(Repr::Small { num: n, den: *den }),
                None => Rational::from_reduced_i128(-(*num as i128), den.get() as i128),
            },
            Repr::Big(b) => Rational::from_big(-b.as_ref().clone()),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::integer(n as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_big(BigRational::from_integer(n))
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational::from_big(r)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if let (Repr::Small { num: n1, den: d1 }, Repr::Small { num: n2, den: d2 }) =
            (&self.0, &other.0)
        {
            if d1 == d2 {
                return n1.cmp(n2);
            }
            let lhs = *n1 as i128 * d2.get() as i128;
            let rhs = *n2 as i128 * d1.get() as i128;
            return lhs.cmp(&rhs);
        }
        self.as_big().as_ref().cmp(other.as_big().as_ref())
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den } if den.get() == 1 => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p` or `p/q` where `p` may carry a sign and `q` is a positive
    /// decimal integer.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p, Some(q)),
            None => (s, None),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        let unsigned = p.strip_prefix(['+', '-']).unwrap_or(p);
        if !digits(unsigned) {
            return Err(bad());
        }
        let num: BigInt = p.parse().map_err(|_| bad())?;
        let den: BigInt = match q {
            None => BigInt::one(),
            Some(q) if digits(q) => q.parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_big(BigRational::new(num, den)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                self.$imp(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$imp(rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_ignores_common_factors() {
        for k in [1i64, 2, -3, 7, 1_000_003] {
            assert_eq!(Rational::frac(3 * k, 4 * k), Rational::frac(3, 4));
        }
        assert_eq!(Rational::frac(2, -4).to_string(), "-1/2");
        assert_eq!(Rational::frac(6, 3).to_string(), "2");
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(q("1/2").to_string(), "1/2");
        assert_eq!(q("-10/4").to_string(), "-5/2");
        assert_eq!(q("+7").to_string(), "7");
        assert_eq!(q("0/5"), Rational::zero());
        for bad in ["", "1/0", "1/", "/2", "a", "1/-2", "1.5", " 1", "--1"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn spills_to_big_and_back() {
        let big = Rational::integer(i64::MAX);
        let sq = big.square();
        assert_eq!(sq.to_string(), "85070591730234615847396907784232501249");
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small { .. }));

        let min = Rational::integer(i64::MIN);
        let neg = -&min;
        assert_eq!(neg.to_string(), "9223372036854775808");
        assert_eq!(-neg, min);
    }

    #[test]
    fn big_parse_normalizes_to_small() {
        let r = q("18446744073709551616/36893488147419103232");
        assert_eq!(r, Rational::frac(1, 2));
        assert!(matches!(r.0, Repr::Small { .. }));
    }

    #[test]
    fn ordering_is_by_value() {
        let mut v = [
            q("1/2"),
            q("-3"),
            q("2/3"),
            q("0"),
            q("99999999999999999999"),
        ];
        v.sort();
        let s: Vec<_> = v.iter().map(|r| r.to_string()).collect();
        assert_eq!(s, ["-3", "0", "1/2", "2/3", "99999999999999999999"]);
    }

    #[test]
    fn recip_of_zero_is_none() {
        assert!(Rational::zero().recip().is_none());
        assert_eq!(q("-2/3").recip().unwrap(), q("-3/2"));
    }

    #[test]
    fn compact_layout() {
        assert_eq!(std::mem::size_of::<Rational>(), 16);
    }
}
