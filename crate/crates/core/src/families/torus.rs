use std::fmt;

use num_integer::Integer;

use crate::arith::{Rational, SimpleSlope};
use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::slopes::SlopeSequence;

/// Parameters of the torus knot `K(p, q)`: coprime, both of absolute value
/// at least 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TorusParams {
    p: i64,
    q: i64,
}

impl TorusParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p.abs() < 2 || q.abs() < 2 {
            return Err(Error::domain(format!(
                "({p}, {q}): both parameters need absolute value at least 2"
            )));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::domain(format!("({p}, {q}) are not coprime")));
        }
        Ok(TorusParams { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `K(q, p)`, whose upper tunnel is the lower tunnel of `K(p, q)`.
    pub fn swapped(&self) -> TorusParams {
        TorusParams {
            p: self.q,
            q: self.p,
        }
    }

    /// `K(-p, -q) = K(p, q)`: representative with `p > 0`.
    fn with_positive_p(&self) -> TorusParams {
        if self.p < 0 {
            TorusParams {
                p: -self.p,
                q: -self.q,
            }
        } else {
            *self
        }
    }
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T( {}, {} )", self.p, self.q)
    }
}

fn ceil_div(n: i64, d: i64) -> i64 {
    Integer::div_ceil(&n, &d)
}

/// `p_k = ⌈kp/q⌉` for `k = 0..=q`.
pub fn staircase(p: i64, q: i64) -> Result<Vec<i64>> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::domain(format!(
            "staircase needs coprime p, q >= 2, got ({p}, {q})"
        )));
    }
    Ok((0..=q).map(|k| ceil_div(k * p, q)).collect())
}

/// Braid description of the torus knot.
///
/// For `p, q > 0` this is `δℓ^(p_{q-1}-p_q) δm ⋯ δℓ^(p_0-p_1) δm`; for
/// `p > 0 > q` it is `∏_{k=0}^{p-1} δℓ δm^(q_k - q_{k+1})` with
/// `q_k = ⌈kq/p⌉`.
pub fn torus_braid_word(t: TorusParams) -> BraidWord {
    let TorusParams { p, q } = t.with_positive_p();
    if q > 0 {
        let steps = staircase(p, q).expect("validated parameters");
        (1..=q as usize)
            .rev()
            .flat_map(|k| [Letter::l(steps[k - 1] - steps[k]), Letter::m(1)])
            .collect()
    } else {
        let qk = |k: i64| ceil_div(k * q, p);
        (0..p)
            .flat_map(|k| [Letter::l(1), Letter::m(qk(k) - qk(k + 1))])
            .collect()
    }
}

/// Upper tunnel slopes `[1/(2p_{k0}-1)], 2p_{k0+1}-1, ..., 2p_{q-1}-1`,
/// `k0` being the first index with `p_k > 1`. Mixed signs negate every slope.
pub fn torus_upper_slopes(t: TorusParams) -> SlopeSequence {
    let (p, q) = (t.p.abs(), t.q.abs());
    let steps = staircase(p, q).expect("validated parameters");
    let k0 = steps.iter().position(|&pk| pk > 1).expect("p_q = p >= 2");
    let sign = if (t.p < 0) != (t.q < 0) { -1 } else { 1 };
    let odd = |k: usize| sign * (2 * steps[k] - 1);
    let m0 = SimpleSlope::new(1, odd(k0)).expect("nonzero denominator");
    let rest = (k0 + 1..q as usize)
        .map(|k| Rational::from_int(odd(k)))
        .collect();
    SlopeSequence::new(m0, rest).expect("torus slopes are odd")
}

/// The lower tunnel of `K(p, q)` is the upper tunnel of `K(q, p)`.
pub fn torus_lower_slopes(t: TorusParams) -> SlopeSequence {
    torus_upper_slopes(t.swapped())
}
