use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::slopes::SlopeSequence;

/// Whether `n0, n1, ..., nk` are odd and either nondecreasing positive or
/// nonincreasing negative.
///
/// `n0` takes part: the slopes of a toroidal position are
/// `-2(b_j + ... + b_k) - 1` for exponents `b_j` of one sign, so `|n0|` is
/// the smallest. Without it `[2/3], -1` (the knot `K(7, 2)`, not a torus
/// knot) would pass.
fn monotone_odd(odds: &[i64]) -> bool {
    if odds.iter().any(|n| n % 2 == 0) {
        return false;
    }
    let positive = odds.iter().all(|&n| n > 0) && odds.windows(2).all(|w| w[0] <= w[1]);
    let negative = odds.iter().all(|&n| n < 0) && odds.windows(2).all(|w| w[0] >= w[1]);
    positive || negative
}

/// True iff `s` is `[1/n0], n1, ..., nk` with `n0, ..., nk` a
/// nondecreasing sequence of positive odd integers or a nonincreasing
/// sequence of negative odd integers.
pub fn is_toroidal(s: &SlopeSequence) -> bool {
    if s.is_trivial() {
        return false;
    }
    let m0 = s.m0();
    // [1/n0] with n0 = q or n0 = -q
    let n0 = if m0.p() == 1 {
        m0.q()
    } else if m0.p() == m0.q() - 1 {
        -m0.q()
    } else {
        return false;
    };
    let Some(odds) = std::iter::once(Some(n0))
        .chain(s.rest().iter().map(|m| m.is_integer().then_some(m.num())))
        .collect::<Option<Vec<i64>>>()
    else {
        return false;
    };
    monotone_odd(&odds)
}

/// `δm δℓ^(m_k - m_{k-1}) ⋯ δm δℓ^(m_1 - m_0) δm δℓ^(m_0)` with
/// `m_j = -(n_j + 1)/2`, whose upper tunnel has slopes `[1/n0], n1, ..., nk`.
pub fn toroidal_braid_word(odds: &[i64]) -> Result<BraidWord> {
    let &n0 = odds
        .first()
        .ok_or_else(|| Error::domain("a toroidal slope sequence needs n0"))?;
    if n0 % 2 == 0 || n0.abs() < 3 {
        return Err(Error::domain(format!(
            "n0 = {n0} must be odd with |n0| >= 3"
        )));
    }
    if !monotone_odd(odds) {
        return Err(Error::domain(
            "n0, ..., nk must be odd and either positive nondecreasing or negative nonincreasing",
        ));
    }
    let m: Vec<i64> = odds.iter().map(|n| -(n + 1) / 2).collect();
    let mut letters = Vec::with_capacity(2 * m.len());
    for j in (1..m.len()).rev() {
        letters.push(Letter::m(1));
        letters.push(Letter::l(m[j] - m[j - 1]));
    }
    letters.push(Letter::m(1));
    letters.push(Letter::l(m[0]));
    Ok(BraidWord::from_letters(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slopes::upper_slopes;

    fn seq(flat: &[i64]) -> SlopeSequence {
        SlopeSequence::from_flat(flat).unwrap()
    }

    #[test]
    fn recognizes_toroidal_sequences() {
        assert!(is_toroidal(&seq(&[1, 5, 11, 1, 15, 1, 21, 1])));
        assert!(!is_toroidal(&seq(&[3, 7, 7, 2])));
        assert!(is_toroidal(&seq(&[1, 3, 3, 1, 3, 1])));
        assert!(is_toroidal(&seq(&[2, 3, -3, 1, -3, 1])));
        assert!(!is_toroidal(&seq(&[2, 3, 3, 1])));
        assert!(!is_toroidal(&seq(&[2, 3, -1, 1])));
        assert!(!is_toroidal(&seq(&[1, 5, 3, 1])));
        assert!(!is_toroidal(&seq(&[1, 3, 5, 1, 3, 1])));
        assert!(!is_toroidal(&seq(&[1, 3, 3, 1, -3, 1])));
        assert!(!is_toroidal(&seq(&[1, 3, 7, 3])));
        assert!(!is_toroidal(&SlopeSequence::trivial()));
    }

    #[test]
    fn builds_toroidal_words() {
        assert_eq!(
            toroidal_braid_word(&[3, 3]).unwrap().to_string(),
            "m 2 l -2"
        );
        assert_eq!(toroidal_braid_word(&[5]).unwrap().to_string(), "m 1 l -3");
        let w = toroidal_braid_word(&[5, 11, 15, 21]).unwrap();
        assert_eq!(upper_slopes(&w), seq(&[1, 5, 11, 1, 15, 1, 21, 1]));
        assert!(toroidal_braid_word(&[]).is_err());
        assert!(toroidal_braid_word(&[4, 5]).is_err());
        assert!(toroidal_braid_word(&[3, 5, 3]).is_err());
        assert!(toroidal_braid_word(&[-3, -1]).is_err());
    }
}
