//! Continued fractions `[n1, n2, ..., nk] = n1 + 1/(n2 + 1/(... + 1/nk))`
//! evaluated projectively, and the two expansion shapes used for slopes:
//! even/odd (`[2a1, b1, ..., 2an, bn]`) for odd numerators and all-even for
//! the Conway position of a 2-bridge knot.

use std::fmt;

use num_integer::Integer;

use super::matrix::Mat2;
use super::rational::{ExtRational, Rational};
use crate::error::{Error, Result};

/// Evaluates a continued fraction right to left with `1/0 = ∞` and
/// `n + 1/∞ = n`.
pub fn cf_eval(entries: &[i64]) -> Result<ExtRational> {
    let (&last, rest) = entries
        .split_last()
        .ok_or_else(|| Error::Usage("continued fraction needs at least one entry".into()))?;
    let mut value = ExtRational::Finite(Rational::from_int(last));
    for &n in rest.iter().rev() {
        value = value.recip().add_int(n);
    }
    Ok(value)
}

/// The product `U^n1 L^n2 U^n3 ...` for the given entries.
pub fn cf_matrix(entries: &[i64]) -> Mat2 {
    entries
        .iter()
        .enumerate()
        .fold(Mat2::IDENTITY, |acc, (i, &n)| {
            acc * if i % 2 == 0 {
                Mat2::upper(n)
            } else {
                Mat2::lower(n)
            }
        })
}

/// Evaluates through the matrix product: the value is the ratio of the first
/// column for an even number of entries, of the second column otherwise.
pub fn cf_eval_matrix(entries: &[i64]) -> Result<ExtRational> {
    if entries.is_empty() {
        return Err(Error::Usage(
            "continued fraction needs at least one entry".into(),
        ));
    }
    let m = cf_matrix(entries);
    let v = if entries.len().is_multiple_of(2) {
        m.apply_col((1, 0))
    } else {
        m.apply_col((0, 1))
    };
    Ok(ExtRational::from_ratio(v.0, v.1))
}

/// A continued fraction `[2a1, b1, ..., 2an, bn]`, stored as the pairs
/// `(2ai, bi)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EvenOddCF {
    pairs: Vec<(i64, i64)>,
}

impl EvenOddCF {
    pub fn new(pairs: Vec<(i64, i64)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::domain("even/odd continued fraction needs a pair"));
        }
        if let Some((e, _)) = pairs.iter().find(|(e, _)| e % 2 != 0) {
            return Err(Error::domain(format!(
                "entry {e} in an even position is odd"
            )));
        }
        Ok(EvenOddCF { pairs })
    }

    /// Pairs `(2ai, bi)`.
    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }

    /// Pairs `(ai, bi)` with the even entries halved.
    pub fn halved(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.pairs.iter().map(|&(e, b)| (e / 2, b))
    }

    pub fn entries(&self) -> Vec<i64> {
        self.pairs.iter().flat_map(|&(e, b)| [e, b]).collect()
    }

    pub fn eval(&self) -> ExtRational {
        cf_eval(&self.entries()).expect("nonempty")
    }
}

impl fmt::Debug for EvenOddCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries())
    }
}

/// Expands a rational with odd numerator as `[2a1, b1, ..., 2an, bn]`.
///
/// Even positions take the nearest even integer (odd-integer ties go down),
/// odd positions the nearest integer (half-integer ties go down).
pub fn expand_odd_numerator(x: Rational) -> Result<EvenOddCF> {
    if x.num() % 2 == 0 {
        return Err(Error::domain(format!(
            "{x} has even numerator and describes a link, not a knot"
        )));
    }
    let mut pairs = Vec::new();
    let mut value = x;
    loop {
        let even = value.nearest_even();
        // numerator of value - even stays odd, so this never vanishes
        let rem = value - Rational::from_int(even);
        let y = rem.recip().finite().expect("odd numerator is nonzero");
        let b = y.round_half_down();
        pairs.push((even, b));
        let tail = y - Rational::from_int(b);
        if tail.is_zero() {
            break;
        }
        value = tail.recip().finite().expect("nonzero tail");
    }
    Ok(EvenOddCF { pairs })
}

/// An all-even continued fraction `[2a_d, 2b_d, ..., 2a_0, 2b_0]` as it is
/// written left to right.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AllEvenCF {
    entries: Vec<i64>,
}

impl AllEvenCF {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.len() < 2 || !entries.len().is_multiple_of(2) {
            return Err(Error::domain(
                "all-even continued fraction needs a positive even number of entries",
            ));
        }
        if entries.iter().any(|e| e % 2 != 0) {
            return Err(Error::domain(
                "all-even continued fraction has an odd entry",
            ));
        }
        if *entries.last().unwrap() == 0 {
            return Err(Error::domain(
                "last entry of an all-even continued fraction is zero",
            ));
        }
        Ok(AllEvenCF { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn eval(&self) -> ExtRational {
        cf_eval(&self.entries).expect("nonempty")
    }
}

impl fmt::Debug for AllEvenCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

/// The representative `b̂` of `b` modulo `a` used for the Conway position:
/// `b` itself when even, `b - a` when odd.
pub fn conway_representative(a: i64, b: i64) -> i64 {
    if b % 2 == 0 {
        b
    } else {
        b - a
    }
}

/// All-even expansion of `a / b̂` for the 2-bridge parameters `(a, b)`.
pub fn expand_all_even(a: i64, b: i64) -> Result<AllEvenCF> {
    if a < 3 || a % 2 == 0 {
        return Err(Error::domain(format!("a = {a} must be odd and at least 3")));
    }
    if b == 0 || b.abs() >= a || a.gcd(&b) != 1 {
        return Err(Error::domain(format!(
            "b = {b} must satisfy 0 < |b| < {a} and be coprime to it"
        )));
    }
    let mut value = Rational::reduce(a, conway_representative(a, b));
    let mut entries = Vec::new();
    loop {
        let even = value.nearest_even();
        entries.push(even);
        let rem = value - Rational::from_int(even);
        if rem.is_zero() {
            break;
        }
        value = rem.recip().finite().expect("nonzero remainder");
    }
    // parity bookkeeping guarantees termination on an even position
    debug_assert!(entries.len() % 2 == 0);
    AllEvenCF::new(entries)
}

/// `b'` with `0 < b' < a` and `b b' ≡ 1 (mod a)`.
pub fn mod_inverse(b: i64, a: i64) -> Result<i64> {
    if a < 2 {
        return Err(Error::domain(format!("modulus {a} must be at least 2")));
    }
    let eg = b.rem_euclid(a).extended_gcd(&a);
    if eg.gcd != 1 {
        return Err(Error::domain(format!("{b} is not invertible modulo {a}")));
    }
    Ok(eg.x.rem_euclid(a))
}
