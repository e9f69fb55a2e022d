use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn checked(v: Option<i64>) -> i64 {
    v.expect("integer overflow in exact arithmetic")
}

/// A reduced fraction `num/den` with `den > 0`. Zero is `0/1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain(format!("zero denominator in {num}/{den}")));
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    /// Builds a fraction from parts already known to be coprime with a
    /// nonzero denominator (the sign is still normalized).
    pub(crate) fn reduce(num: i64, den: i64) -> Self {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = checked(n.checked_neg());
            d = checked(d.checked_neg());
        }
        Rational { num: n, den: d }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn signum(&self) -> i64 {
        self.num.signum()
    }

    pub fn floor(&self) -> i64 {
        Integer::div_floor(&self.num, &self.den)
    }

    /// `1/x`; zero maps to infinity.
    pub fn recip(&self) -> ExtRational {
        if self.num == 0 {
            ExtRational::Infinity
        } else {
            ExtRational::Finite(Self::reduce(self.den, self.num))
        }
    }

    /// Nearest integer, ties (half-integers) resolved toward the floor.
    pub fn round_half_down(&self) -> i64 {
        let f = self.floor();
        // twice the fractional part, compared against den
        let twice_frac = 2 * (self.num - f * self.den);
        if twice_frac <= self.den {
            f
        } else {
            f + 1
        }
    }

    /// Nearest even integer, ties (odd integers) resolved toward the smaller one.
    pub fn nearest_even(&self) -> i64 {
        let e = 2 * Integer::div_floor(&self.num, &checked(self.den.checked_mul(2)));
        // x - e lies in [0, 2)
        let rem = self.num - e * self.den;
        if rem <= self.den {
            e
        } else {
            e + 2
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        let l = self.den.lcm(&rhs.den);
        let a = checked(self.num.checked_mul(l / self.den));
        let b = checked(rhs.num.checked_mul(l / rhs.den));
        Rational::reduce(checked(a.checked_add(b)), l)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: checked(self.num.checked_neg()),
            den: self.den,
        }
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n = checked((self.num / g1).checked_mul(rhs.num / g2));
        let d = checked((self.den / g2).checked_mul(rhs.den / g1));
        Rational::reduce(n, d)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let l = i128::from(self.num) * i128::from(other.den);
        let r = i128::from(other.num) * i128::from(self.den);
        l.cmp(&r)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// A rational number or the single unsigned infinity `1/0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ExtRational {
    Finite(Rational),
    Infinity,
}

impl ExtRational {
    /// The projective point `[x : y]`, i.e. `x/y`, infinity when `y = 0`.
    /// Panics if both coordinates vanish.
    pub fn from_ratio(x: i64, y: i64) -> Self {
        assert!(x != 0 || y != 0, "0/0 is not a value");
        if y == 0 {
            ExtRational::Infinity
        } else {
            ExtRational::Finite(Rational::reduce(x, y))
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRational::Infinity)
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            ExtRational::Finite(r) => Some(*r),
            ExtRational::Infinity => None,
        }
    }

    pub fn recip(&self) -> ExtRational {
        match self {
            ExtRational::Finite(r) => r.recip(),
            ExtRational::Infinity => ExtRational::Finite(Rational::ZERO),
        }
    }

    /// `n + x` with `n + ∞ = ∞`.
    pub fn add_int(&self, n: i64) -> ExtRational {
        match self {
            ExtRational::Finite(r) => ExtRational::Finite(*r + Rational::from_int(n)),
            ExtRational::Infinity => ExtRational::Infinity,
        }
    }
}

impl From<Rational> for ExtRational {
    fn from(r: Rational) -> Self {
        ExtRational::Finite(r)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => write!(f, "{r}"),
            ExtRational::Infinity => f.write_str("infinity"),
        }
    }
}

/// A class in Q/Z, stored as `p/q` with `0 <= p < q` and `gcd(p, q) = 1`.
/// The trivial class is `0/1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SimpleSlope {
    p: i64,
    q: i64,
}

impl SimpleSlope {
    pub const TRIVIAL: SimpleSlope = SimpleSlope { p: 0, q: 1 };

    /// The class of `p/q` modulo 1.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        Ok(Self::from_rational(Rational::new(p, q)?))
    }

    pub fn from_rational(r: Rational) -> Self {
        SimpleSlope {
            p: r.num().rem_euclid(r.den()),
            q: r.den(),
        }
        .normalized()
    }

    fn normalized(self) -> Self {
        if self.p == 0 {
            SimpleSlope::TRIVIAL
        } else {
            self
        }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_trivial(&self) -> bool {
        self.p == 0
    }

    /// The representative in `[0, 1)`.
    pub fn representative(&self) -> Rational {
        Rational::reduce(self.p, self.q)
    }
}

impl fmt::Display for SimpleSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[ {}/{} ]", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(r(6, -4), r(-3, 2));
        assert_eq!(r(-3, 2).den(), 2);
        assert_eq!(r(0, -5), Rational::ZERO);
        assert!(Rational::new(1, 0).is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(r(1, 2) + r(1, 3), r(5, 6));
        assert_eq!(r(1, 2) - r(1, 3), r(1, 6));
        assert_eq!(r(2, 3) * r(9, 4), r(3, 2));
        assert!(r(-1, 2) < r(1, 3));
    }

    #[test]
    fn rounding_rules() {
        assert_eq!(r(7, 3).nearest_even(), 2);
        assert_eq!(r(7, 2).nearest_even(), 4);
        assert_eq!(r(3, 1).nearest_even(), 2);
        assert_eq!(r(-3, 1).nearest_even(), -4);
        assert_eq!(r(1, 1).nearest_even(), 0);
        assert_eq!(r(-227, 41).round_half_down(), -6);
        assert_eq!(r(5, 2).round_half_down(), 2);
        assert_eq!(r(-5, 2).round_half_down(), -3);
        assert_eq!(r(19, 3).round_half_down(), 6);
    }

    #[test]
    fn simple_slope_classes() {
        let s = SimpleSlope::from_rational(r(-1, 3));
        assert_eq!((s.p(), s.q()), (2, 3));
        assert_eq!(
            SimpleSlope::new(25, 4).unwrap(),
            SimpleSlope::new(1, 4).unwrap()
        );
        assert!(SimpleSlope::new(5, 1).unwrap().is_trivial());
        assert_eq!(SimpleSlope::new(21, 25).unwrap().to_string(), "[ 21/25 ]");
    }

    #[test]
    fn ext_rational_rules() {
        assert_eq!(Rational::ZERO.recip(), ExtRational::Infinity);
        assert_eq!(
            ExtRational::Infinity.recip(),
            ExtRational::Finite(Rational::ZERO)
        );
        assert_eq!(ExtRational::Infinity.add_int(3), ExtRational::Infinity);
        assert_eq!(
            ExtRational::from_ratio(6, -4),
            ExtRational::Finite(r(-3, 2))
        );
    }
}
