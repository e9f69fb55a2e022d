//! Slope sequences of upper and lower tunnels, computed from braid
//! descriptions, and braid descriptions built from slope sequences.

use std::fmt;

use crate::arith::{expand_odd_numerator, EvenOddCF, ExtRational, Mat2, Rational, SimpleSlope};
use crate::braid::{
    compose_winding, reverse_word, segment, simplify, subgroup_vector, winding_number, BraidWord,
    Letter,
};
use crate::error::{Error, Result};

/// The slope invariant `[m0], m1, ..., md` of a (1,1)-tunnel.
///
/// `m0` lives in Q/Z and is nontrivial; each later slope is a finite
/// rational with odd numerator. The empty sequence is the tunnel of the
/// trivial knot.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SlopeSequence {
    m0: SimpleSlope,
    rest: Vec<Rational>,
}

impl SlopeSequence {
    pub fn trivial() -> Self {
        SlopeSequence {
            m0: SimpleSlope::TRIVIAL,
            rest: Vec::new(),
        }
    }

    pub fn new(m0: SimpleSlope, rest: Vec<Rational>) -> Result<Self> {
        if m0.is_trivial() {
            return Err(Error::domain(
                "the simple slope m0 of a nontrivial tunnel cannot be [ 0 ]",
            ));
        }
        if m0.q() % 2 == 0 {
            return Err(Error::domain(format!(
                "m0 = [ {}/{} ] has even denominator and belongs to a link",
                m0.p(),
                m0.q()
            )));
        }
        if let Some(m) = rest.iter().find(|m| m.num() % 2 == 0) {
            return Err(Error::domain(format!(
                "slope {m} has even numerator and belongs to a link"
            )));
        }
        Ok(SlopeSequence { m0, rest })
    }

    /// Reads the flat `[p0, q0, n1, d1, ...]` form: `m0 = [p0/q0]`, then
    /// `mi = ni/di`. An empty list is the trivial sequence.
    pub fn from_flat(values: &[i64]) -> Result<Self> {
        if values.is_empty() {
            return Ok(SlopeSequence::trivial());
        }
        if !values.len().is_multiple_of(2) {
            return Err(Error::domain(format!(
                "slope list has {} entries; expected numerator/denominator pairs",
                values.len()
            )));
        }
        let mut pairs = values.chunks_exact(2);
        let first = pairs.next().unwrap();
        let m0 = SimpleSlope::new(first[0], first[1])?;
        let rest = pairs
            .map(|p| Rational::new(p[0], p[1]))
            .collect::<Result<Vec<_>>>()?;
        SlopeSequence::new(m0, rest)
    }

    pub fn is_trivial(&self) -> bool {
        self.m0.is_trivial()
    }

    /// The simple slope; [`SimpleSlope::TRIVIAL`] for the trivial tunnel.
    pub fn m0(&self) -> SimpleSlope {
        self.m0
    }

    /// `m1, ..., md`.
    pub fn rest(&self) -> &[Rational] {
        &self.rest
    }

    /// Number of cablings, `d + 1` (zero for the trivial tunnel).
    pub fn len(&self) -> usize {
        if self.is_trivial() {
            0
        } else {
            1 + self.rest.len()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    /// Numerators and denominators, `m0` first.
    pub fn to_flat(&self) -> Vec<(i64, i64)> {
        if self.is_trivial() {
            return Vec::new();
        }
        std::iter::once((self.m0.p(), self.m0.q()))
            .chain(self.rest.iter().map(|r| (r.num(), r.den())))
            .collect()
    }
}

impl fmt::Display for SlopeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("trivial knot (empty slope sequence)");
        }
        write!(f, "{}", self.m0)?;
        for m in &self.rest {
            write!(f, ", {m}")?;
        }
        Ok(())
    }
}

/// Cabling slopes `s_i = slope(ω_i δℓ^(-T_i))`, where `T_i` is the winding
/// number of everything to the right of `ω_i`. `segs[0]` is `ω_0`.
fn cabling_slopes(segs: &[BraidWord]) -> Vec<ExtRational> {
    let mut suffix_winding = 0i64;
    segs.iter()
        .map(|omega| {
            let (x, y) = subgroup_vector(omega);
            let (x, y) = Mat2::lower(2 * suffix_winding).apply_row((x, y));
            // prepend δmσ·ω_i to the suffix; the leading σ flips the sign
            let head = -winding_number(omega);
            suffix_winding = compose_winding(head, 1 + omega.sigma_exponent(), suffix_winding);
            ExtRational::from_ratio(x, y)
        })
        .collect()
}

/// Removes `ω_0`, which equals `δℓ^(-t(ω_0))` (times a power of `σ` on the
/// right), by pushing `δℓ^(t(ω_0))` through `δmσ` onto `ω_1`.
fn absorb_first(segs: &mut Vec<BraidWord>) {
    let t = winding_number(&segs[0]);
    segs.remove(0);
    if let Some(next) = segs.first_mut() {
        next.push(Letter::l(t));
    }
}

/// Eliminates the segment `i` whose cabling slope is infinite.
fn eliminate_infinite(segs: &mut Vec<BraidWord>, i: usize) {
    let d = segs.len() - 1;
    if i == 0 {
        absorb_first(segs);
    } else if i == d {
        segs.truncate(d - 1);
    } else {
        let t = winding_number(&segs[i]);
        let merged = segs[i + 1].clone() * BraidWord::l(t) * &segs[i - 1];
        segs.splice(i - 1..=i + 1, [merged]);
    }
}

/// Slope sequence of the upper tunnel of the (1,1)-position described by `w`.
pub fn upper_slopes(w: &BraidWord) -> SlopeSequence {
    let Some(segments) = segment(w) else {
        return SlopeSequence::trivial();
    };
    let mut segs: Vec<BraidWord> = segments.into_omegas();
    segs.reverse();
    loop {
        if segs.is_empty() {
            return SlopeSequence::trivial();
        }
        let slopes = cabling_slopes(&segs);
        if let Some(i) = slopes.iter().position(ExtRational::is_infinite) {
            eliminate_infinite(&mut segs, i);
            continue;
        }
        let finite: Vec<Rational> = slopes.iter().map(|s| s.finite().unwrap()).collect();
        if finite[0].num().abs() == 1 {
            // integral simple slope: the tunnel is still trivial here
            absorb_first(&mut segs);
            continue;
        }
        let m0 = SimpleSlope::from_rational(
            finite[0]
                .recip()
                .finite()
                .expect("odd numerator is nonzero"),
        );
        return SlopeSequence::new(m0, finite[1..].to_vec())
            .expect("cabling slopes have odd numerators");
    }
}

/// Slope sequence of the lower tunnel: the upper tunnel of the reverse braid.
pub fn lower_slopes(w: &BraidWord) -> SlopeSequence {
    upper_slopes(&reverse_word(w))
}

/// `σ^(bn) δℓ^(-an) ⋯ σ^(b1) δℓ^(-a1)` for `[2a1, b1, ..., 2an, bn]`.
fn tangle_word(cf: &EvenOddCF) -> BraidWord {
    let halves: Vec<(i64, i64)> = cf.halved().collect();
    halves
        .iter()
        .rev()
        .flat_map(|&(a, b)| [Letter::s(b), Letter::l(-a)])
        .collect()
}

/// A braid description whose upper tunnel has slope sequence `s`.
///
/// The trivial sequence gives the identity braid.
pub fn braid_from_slopes(s: &SlopeSequence) -> Result<BraidWord> {
    if s.is_trivial() {
        return Ok(BraidWord::identity());
    }
    let lead = BraidWord::from_letters([Letter::m(1), Letter::s(1)]);
    let m0 = s.m0().representative();
    let first = expand_odd_numerator(m0.recip().finite().expect("m0 is nonzero"))?;
    let mut word = lead.clone() * tangle_word(&first);
    for m in s.rest() {
        let cf = expand_odd_numerator(*m)?;
        let t = winding_number(&word);
        word = lead.clone() * tangle_word(&cf) * BraidWord::l(t) * word;
    }
    Ok(simplify(&word))
}

/// Slopes of the tunnel dual to the one with slope sequence `s`.
pub fn dual_slopes(s: &SlopeSequence) -> Result<SlopeSequence> {
    Ok(lower_slopes(&braid_from_slopes(s)?))
}
