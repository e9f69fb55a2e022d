use std::fmt;

use num_integer::Integer;

use crate::arith::{
    cf_eval, expand_all_even, expand_odd_numerator, mod_inverse, Rational, SimpleSlope,
};
use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::slopes::{upper_slopes, SlopeSequence};

/// The 2-bridge knot `K(a, b)` with `a` odd, `a >= 3`, `0 < b < a`,
/// `gcd(a, b) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TwoBridge {
    a: i64,
    b: i64,
}

impl TwoBridge {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a < 3 || a % 2 == 0 {
            return Err(Error::domain(format!(
                "a = {a} must be odd and at least 3 (even a gives a 2-bridge link)"
            )));
        }
        if b <= 0 || b >= a || a.gcd(&b) != 1 {
            return Err(Error::domain(format!(
                "b = {b} must satisfy 0 < b < {a} and be coprime to it"
            )));
        }
        Ok(TwoBridge { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `K(a, b')` with `b b' ≡ 1 (mod a)`; the same knot, seen from the
    /// other side.
    pub fn dual(&self) -> TwoBridge {
        let b = mod_inverse(self.b, self.a).expect("validated coprime");
        TwoBridge { a: self.a, b }
    }
}

impl fmt::Display for TwoBridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K( {}, {} )", self.a, self.b)
    }
}

/// The four tunnels of a 2-bridge knot.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoBridgeReport {
    pub upper_simple: SimpleSlope,
    pub upper_semisimple: SlopeSequence,
    pub lower_simple: SimpleSlope,
    pub lower_semisimple: SlopeSequence,
}

impl fmt::Display for TwoBridgeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Upper simple tunnel:     {}", self.upper_simple)?;
        writeln!(f, "Upper semisimple tunnel: {}", self.upper_semisimple)?;
        writeln!(f, "Lower simple tunnel:     {}", self.lower_simple)?;
        write!(f, "Lower semisimple tunnel: {}", self.lower_semisimple)
    }
}

pub fn two_bridge_tunnels(k: TwoBridge) -> TwoBridgeReport {
    let dual = k.dual();
    TwoBridgeReport {
        upper_simple: SimpleSlope::new(dual.b, k.a).expect("nonzero a"),
        upper_semisimple: upper_slopes(&upper_semisimple_word(k)),
        lower_simple: SimpleSlope::new(k.b, k.a).expect("nonzero a"),
        lower_semisimple: upper_slopes(&upper_semisimple_word(dual)),
    }
}

fn halved_expansion(k: TwoBridge) -> Vec<(i64, i64)> {
    expand_odd_numerator(Rational::reduce(k.a, k.b))
        .expect("a is odd")
        .halved()
        .collect()
}

/// `δm^(-a1) σ^(b1) ⋯ δm^(-an) σ^(bn) δℓ^(-1)` for `a/b = [2a1, b1, ..., 2an, bn]`.
/// Its upper tunnel is the upper semisimple tunnel of `K(a, b)`.
pub fn upper_semisimple_word(k: TwoBridge) -> BraidWord {
    halved_expansion(k)
        .into_iter()
        .flat_map(|(a, b)| [Letter::m(-a), Letter::s(b)])
        .chain([Letter::l(-1)])
        .collect()
}

/// `δm⁻¹ σ^(bn) δℓ^(-an) σ^(b_{n-1}) ⋯ σ^(b1) δℓ^(-a1)`: the single cabling
/// from the trivial knot whose upper tunnel is the lower simple tunnel.
pub fn lower_simple_word(k: TwoBridge) -> BraidWord {
    let pairs = halved_expansion(k);
    std::iter::once(Letter::m(-1))
        .chain(
            pairs
                .iter()
                .rev()
                .flat_map(|&(a, b)| [Letter::s(b), Letter::l(-a)]),
        )
        .collect()
}

/// Splits the all-even expansion into pairs `(a_i, b_i)` with `a_i = ±1`,
/// listed `i = d, ..., 0`, where the continued fraction reads
/// `[2a_d, 2b_d, ..., 2a_0, 2b_0]`.
fn unit_conway_pairs(k: TwoBridge) -> Vec<(i64, i64)> {
    let cf = expand_all_even(k.a, k.b).expect("validated parameters");
    let mut pairs = Vec::new();
    for chunk in cf.entries().chunks_exact(2) {
        let (a, b) = (chunk[0] / 2, chunk[1] / 2);
        debug_assert!(a != 0, "greedy all-even expansion has no zero a-entries");
        let unit = a.signum();
        // [..., n1 + n2, ...] = [..., n1, 0, n2, ...]
        for _ in 1..a.abs() {
            pairs.push((unit, 0));
        }
        pairs.push((unit, b));
    }
    pairs
}

/// Upper semisimple slopes straight from the Conway-position continued
/// fraction, without going through a braid word.
pub fn semisimple_slopes_closed_form(k: TwoBridge) -> SlopeSequence {
    // index i counts from the right: pairs[len-1] = (a_0, b_0)
    let mut pairs = unit_conway_pairs(k);
    pairs.reverse();
    let (a0, b0) = pairs[0];
    let m0 = if a0 == 1 {
        SimpleSlope::new(2 * b0, 4 * b0 + 1)
    } else {
        SimpleSlope::new(2 * b0 - 1, 4 * b0 - 1)
    }
    .expect("odd denominator");
    let rest = pairs
        .windows(2)
        .map(|w| {
            let (prev_a, _) = w[0];
            let (a, b) = w[1];
            let k = match (a, prev_a) {
                (1, 1) => 2 * b + 1,
                (-1, -1) => 2 * b - 1,
                _ => 2 * b,
            };
            Rational::from_int(-2 * prev_a) + Rational::reduce(1, k)
        })
        .collect();
    SlopeSequence::new(m0, rest).expect("closed-form slopes have odd numerators")
}

/// Which condition of the 2-bridge characterization a sequence violates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rejection {
    /// `m0` is not `[n0/(2n0+1)]` with `n0 ∉ {-1, 0}`.
    SimpleSlopeShape,
    /// Some `mi` (i ≥ 1) is not `±2 + 1/k`.
    SlopeShape { index: usize },
    /// The sign of `m1` does not match the parity of `n0`.
    FirstSign,
    /// Consecutive signs disagree with the parity of the preceding `k`;
    /// `index` is that of the later slope.
    SignAlternation { index: usize, k_even: bool },
}

impl Rejection {
    pub fn condition(&self) -> &'static str {
        match self {
            Rejection::SimpleSlopeShape => "i",
            Rejection::SlopeShape { .. } => "ii",
            Rejection::FirstSign => "iii",
            Rejection::SignAlternation { .. } => "iv",
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rejection::SimpleSlopeShape => {
                "m0 must be of the form [ n0/(2n0+1) ] with n0 not in {-1,0}."
            }
            Rejection::SlopeShape { .. } => {
                "Slopes other than first must be of the form 2 + 1/k or 2 - 1/k."
            }
            Rejection::FirstSign => {
                "m1 must be positive or negative according as n0 is odd or even."
            }
            Rejection::SignAlternation { k_even: true, .. } => {
                "The ith and (i+1)st slopes must have opposite signs when k sub i is even."
            }
            Rejection::SignAlternation { k_even: false, .. } => {
                "The ith and (i+1)st slopes must have the same sign when k sub i is odd."
            }
        })
    }
}

/// The knot and its dual found by [`find_two_bridge`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TwoBridgeMatch {
    pub knot: TwoBridge,
    pub dual: TwoBridge,
}

impl fmt::Display for TwoBridgeMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "The tunnel is the upper semisimple tunnel of {}, or",
            self.knot
        )?;
        write!(
            f,
            "equivalently the lower semisimple tunnel of {}.",
            self.dual
        )
    }
}

/// `n0` with `m0 = [n0/(2n0+1)]`, if any.
fn solve_n0(m0: SimpleSlope) -> Option<i64> {
    let (p, q) = (m0.p(), m0.q());
    if q < 3 || q % 2 == 0 {
        return None;
    }
    if p == (q - 1) / 2 {
        Some((q - 1) / 2)
    } else if p == (q + 1) / 2 {
        Some(-(q + 1) / 2)
    } else {
        None
    }
}

/// `(sign, k)` with `m = sign·2 + 1/k`, if `m` has that shape.
fn split_slope(m: Rational) -> Option<(i64, i64)> {
    for sign in [1i64, -1] {
        let r = m - Rational::from_int(2 * sign);
        if r.num().abs() == 1 {
            return Some((sign, r.num() * r.den()));
        }
    }
    None
}

/// Decides whether `s` is the slope sequence of a semisimple tunnel of a
/// 2-bridge knot and, if so, which one.
pub fn find_two_bridge(s: &SlopeSequence) -> std::result::Result<TwoBridgeMatch, Rejection> {
    let n0 = solve_n0(s.m0()).ok_or(Rejection::SimpleSlopeShape)?;
    let split: Vec<(i64, i64)> = s
        .rest()
        .iter()
        .enumerate()
        .map(|(i, &m)| split_slope(m).ok_or(Rejection::SlopeShape { index: i + 1 }))
        .collect::<std::result::Result<_, _>>()?;
    if let Some(&(sign, _)) = split.first() {
        let want = if n0 % 2 != 0 { 1 } else { -1 };
        if sign != want {
            return Err(Rejection::FirstSign);
        }
    }
    for (i, w) in split.windows(2).enumerate() {
        let ((prev_sign, prev_k), (sign, _)) = (w[0], w[1]);
        if (sign == prev_sign) != (prev_k % 2 != 0) {
            return Err(Rejection::SignAlternation {
                index: i + 2,
                k_even: prev_k % 2 == 0,
            });
        }
    }

    // Conway position [2a_d, 2b_d, ..., 2a_0, 2b_0], built from the right.
    let mut a_i: i64 = if n0 % 2 != 0 { -1 } else { 1 };
    let mut entries = vec![2 * a_i, if n0 % 2 == 0 { n0 } else { n0 + 1 }];
    for &(_, k) in &split {
        let two_b = if k % 2 == 0 {
            a_i = -a_i;
            k
        } else if a_i == 1 {
            k - 1
        } else {
            k + 1
        };
        entries.push(2 * a_i);
        entries.push(two_b);
    }
    // entries were pushed as (a_0, b_0), (a_1, b_1), ...; restore reading order
    let pairs: Vec<i64> = entries
        .chunks_exact(2)
        .rev()
        .flat_map(|c| [c[0], c[1]])
        .collect();
    let value = cf_eval(&pairs)
        .expect("nonempty")
        .finite()
        .expect("Conway continued fraction is finite");
    let a = value.num().abs();
    let b = (value.num().signum() * value.den()).rem_euclid(a);
    let knot = TwoBridge::new(a, b).expect("characterized sequences give 2-bridge knots");
    Ok(TwoBridgeMatch {
        knot,
        dual: knot.dual(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(a: i64, b: i64) -> TwoBridge {
        TwoBridge::new(a, b).unwrap()
    }

    fn seq(flat: &[i64]) -> SlopeSequence {
        SlopeSequence::from_flat(flat).unwrap()
    }

    #[test]
    fn report_for_413_227() {
        let r = two_bridge_tunnels(k(413, 227));
        assert_eq!(r.upper_simple, SimpleSlope::new(131, 413).unwrap());
        assert_eq!(r.upper_semisimple.to_string(), "[ 1/3 ], 15/7, 9/5");
        assert_eq!(r.lower_simple, SimpleSlope::new(227, 413).unwrap());
        assert_eq!(
            r.lower_semisimple.to_string(),
            "[ 2/5 ], -1, -3/2, 1, 1, 1, 3"
        );
    }

    #[test]
    fn trefoil() {
        let r = two_bridge_tunnels(k(3, 1));
        assert_eq!(r.upper_simple.to_string(), "[ 1/3 ]");
        assert_eq!(r.lower_simple.to_string(), "[ 1/3 ]");
        assert_eq!(r.upper_semisimple.to_string(), "[ 1/3 ]");
        assert_eq!(upper_semisimple_word(k(3, 1)).to_string(), "m -1 s 1 l -1");
        assert_eq!(lower_simple_word(k(3, 1)).to_string(), "m -1 s 1 l -1");
        assert_eq!(semisimple_slopes_closed_form(k(3, 1)), seq(&[1, 3]));
    }

    #[test]
    fn dual_swaps_roles() {
        let (x, y) = (
            two_bridge_tunnels(k(413, 227)),
            two_bridge_tunnels(k(413, 131)),
        );
        assert_eq!(x.upper_simple, y.lower_simple);
        assert_eq!(x.lower_simple, y.upper_simple);
        assert_eq!(x.upper_semisimple, y.lower_semisimple);
        assert_eq!(x.lower_semisimple, y.upper_semisimple);
    }

    #[test]
    fn pinned_words() {
        assert_eq!(
            upper_semisimple_word(k(413, 227)).to_string(),
            "m -1 s -6 m -1 s 6 m -1 s 1 l -1"
        );
        assert_eq!(
            lower_simple_word(k(413, 227)).to_string(),
            "m -1 s 1 l -1 s 6 l -1 s -6 l -1"
        );
        assert_eq!(
            upper_slopes(&lower_simple_word(k(413, 227))),
            seq(&[227, 413])
        );
    }

    #[test]
    fn closed_form_matches_transcript() {
        assert_eq!(
            semisimple_slopes_closed_form(k(413, 227)).to_string(),
            "[ 1/3 ], 15/7, 9/5"
        );
    }

    #[test]
    fn recognizer_transcripts() {
        let m = find_two_bridge(&seq(&[1, 3, 15, 7, 9, 5])).unwrap();
        assert_eq!((m.knot, m.dual), (k(413, 227), k(413, 131)));
        assert_eq!(
            m.to_string(),
            "The tunnel is the upper semisimple tunnel of K( 413, 227 ), or\n\
             equivalently the lower semisimple tunnel of K( 413, 131 )."
        );
        let m = find_two_bridge(&seq(&[1, 3, 15, 8, -9, 5])).unwrap();
        assert_eq!((m.knot, m.dual), (k(493, 222), k(493, 171)));

        let e = find_two_bridge(&seq(&[1, 3, 15, 11, 9, 5])).unwrap_err();
        assert_eq!(e.condition(), "ii");
        assert_eq!(
            e.to_string(),
            "Slopes other than first must be of the form 2 + 1/k or 2 - 1/k."
        );
        let e = find_two_bridge(&seq(&[1, 3, 15, 8, 9, 5])).unwrap_err();
        assert_eq!(
            e,
            Rejection::SignAlternation {
                index: 2,
                k_even: true
            }
        );
        assert_eq!(
            e.to_string(),
            "The ith and (i+1)st slopes must have opposite signs when k sub i is even."
        );
        let e = find_two_bridge(&seq(&[1, 3, 15, 7, -9, 5])).unwrap_err();
        assert_eq!(
            e,
            Rejection::SignAlternation {
                index: 2,
                k_even: false
            }
        );
        let e = find_two_bridge(&seq(&[1, 3, -15, 8, 9, 5])).unwrap_err();
        assert_eq!(e, Rejection::FirstSign);
        assert_eq!(
            e.to_string(),
            "m1 must be positive or negative according as n0 is odd or even."
        );
        let e = find_two_bridge(&seq(&[2, 7, 3, 1])).unwrap_err();
        assert_eq!(e, Rejection::SimpleSlopeShape);
        assert_eq!(
            find_two_bridge(&SlopeSequence::trivial()),
            Err(Rejection::SimpleSlopeShape)
        );
    }

    #[test]
    fn invalid_parameters() {
        assert!(TwoBridge::new(4, 1).is_err());
        assert!(TwoBridge::new(9, 3).is_err());
        assert!(TwoBridge::new(9, 0).is_err());
        assert!(TwoBridge::new(9, 9).is_err());
        assert!(TwoBridge::new(1, 1).is_err());
    }
}
