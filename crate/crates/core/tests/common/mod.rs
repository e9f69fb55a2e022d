#![allow(dead_code)]

use num_integer::Integer;
use tunnel_slopes::families::{TorusParams, TwoBridge};

/// Every valid `K(a, b)` with `a <= max_a`.
pub fn two_bridge_knots(max_a: i64) -> Vec<TwoBridge> {
    let mut out = Vec::new();
    for a in (3..=max_a).step_by(2) {
        for b in 1..a {
            if a.gcd(&b) == 1 {
                out.push(TwoBridge::new(a, b).unwrap());
            }
        }
    }
    out
}

/// Coprime `2 <= q < p <= max_p`.
pub fn torus_pairs(max_p: i64) -> Vec<TorusParams> {
    let mut out = Vec::new();
    for p in 3..=max_p {
        for q in 2..p {
            if p.gcd(&q) == 1 {
                out.push(TorusParams::new(p, q).unwrap());
            }
        }
    }
    out
}

/// Winding number counted one unit letter at a time.
pub fn winding_by_units(w: &tunnel_slopes::braid::BraidWord) -> i64 {
    use tunnel_slopes::braid::Generator;
    let mut flips = 0;
    let mut t = 0;
    for l in w.units() {
        match l.generator {
            Generator::Sigma => flips += 1,
            Generator::DeltaL if flips % 2 == 0 => t -= l.exponent,
            Generator::DeltaL => t += l.exponent,
            Generator::DeltaM => {}
        }
    }
    t
}
