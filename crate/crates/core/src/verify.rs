//! Seeded generators and small independent oracles for testing.
//!
//! Everything here is deterministic in its seed, so a failing case can be
//! replayed from the seed and the printed word.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{EvenOddCF, Rational, SimpleSlope};
use crate::braid::{BraidWord, Generator, Letter};
use crate::error::Result;
use crate::slopes::SlopeSequence;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn odd_in(rng: &mut ChaCha8Rng, max_abs: i64) -> i64 {
    loop {
        let n = rng.gen_range(-max_abs..=max_abs);
        if n % 2 != 0 {
            return n;
        }
    }
}

/// A valid slope sequence with `d ≤ max_d`: `m0 = [p/q]` with odd
/// `3 ≤ q ≤ 99`, then slopes `n/k` with odd `|n| ≤ 99` and `1 ≤ k ≤ 99`.
pub fn random_valid_slopes(seed: u64, max_d: usize) -> SlopeSequence {
    let mut rng = rng(seed);
    let d = rng.gen_range(0..=max_d);
    let q = 2 * rng.gen_range(1..=49) + 1;
    let p = loop {
        let p = rng.gen_range(1..q);
        if num_integer::gcd(p, q) == 1 {
            break p;
        }
    };
    let rest = (0..d)
        .map(|_| {
            let n = odd_in(&mut rng, 99);
            let k = rng.gen_range(1..=99);
            Rational::new(n, k).expect("nonzero denominator")
        })
        .collect();
    SlopeSequence::new(SimpleSlope::new(p, q).expect("q > 0"), rest)
        .expect("odd numerators and odd q")
}

/// A freely reduced word of `len` letters over `generators`, exponents in
/// `-3..=3`.
pub fn random_word_over(rng: &mut ChaCha8Rng, generators: &[Generator], len: usize) -> BraidWord {
    let mut w = BraidWord::identity();
    let mut last = None;
    for _ in 0..len {
        let choices: Vec<Generator> = generators
            .iter()
            .copied()
            .filter(|&g| Some(g) != last || generators.len() == 1)
            .collect();
        let g = *choices.choose(rng).expect("nonempty generator set");
        let e = loop {
            let e = rng.gen_range(-3..=3);
            if e != 0 {
                break e;
            }
        };
        w.push(Letter::new(g, e));
        last = Some(g);
    }
    w
}

/// A random word in all three generators with up to `max_len` letters.
pub fn random_braid_word(seed: u64, max_len: usize) -> BraidWord {
    let mut rng = rng(seed);
    let len = rng.gen_range(0..=max_len);
    random_word_over(
        &mut rng,
        &[Generator::DeltaM, Generator::DeltaL, Generator::Sigma],
        len,
    )
}

/// The defining relators of the reduced braid group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relator {
    /// `(δm σ)²`
    MeridianSigma,
    /// `(δℓ σ)²`
    LongitudeSigma,
    /// `δm⁻¹ δℓ δm δℓ⁻¹ σ⁻²`
    Commutator,
}

impl Relator {
    pub const ALL: [Relator; 3] = [
        Relator::MeridianSigma,
        Relator::LongitudeSigma,
        Relator::Commutator,
    ];

    pub fn word(self) -> BraidWord {
        let letters = match self {
            Relator::MeridianSigma => vec![Letter::m(1), Letter::s(1), Letter::m(1), Letter::s(1)],
            Relator::LongitudeSigma => vec![Letter::l(1), Letter::s(1), Letter::l(1), Letter::s(1)],
            Relator::Commutator => vec![
                Letter::m(-1),
                Letter::l(1),
                Letter::m(1),
                Letter::l(-1),
                Letter::s(-2),
            ],
        };
        BraidWord::from_letters(letters)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Forward,
    Inverse,
}

/// One relator inserted after `position` unit letters of the current word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Insertion {
    pub position: usize,
    pub relator: Relator,
    pub direction: Direction,
}

/// A sequence of insertions, applied in order; each position refers to the
/// word produced by the insertions before it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FuzzPlan {
    pub seed: u64,
    pub insertions: Vec<Insertion>,
}

impl FuzzPlan {
    /// `count` random insertions valid for `w`. When `count > 0` the
    /// fuzzed word differs from `w` as a string.
    pub fn random(seed: u64, w: &BraidWord, count: usize) -> FuzzPlan {
        let mut rng = rng(seed);
        loop {
            let mut current = w.clone();
            let mut insertions = Vec::with_capacity(count);
            for _ in 0..count {
                let ins = Insertion {
                    position: rng.gen_range(0..=current.unit_len()),
                    relator: *Relator::ALL.choose(&mut rng).unwrap(),
                    direction: if rng.gen_bool(0.5) {
                        Direction::Forward
                    } else {
                        Direction::Inverse
                    },
                };
                current = insert(&current, ins).expect("position drawn within bounds");
                insertions.push(ins);
            }
            // later insertions can cancel earlier ones
            if count == 0 || current != *w {
                return FuzzPlan { seed, insertions };
            }
        }
    }
}

fn insert(w: &BraidWord, ins: Insertion) -> Result<BraidWord> {
    let r = ins.relator.word();
    let r = match ins.direction {
        Direction::Forward => r,
        Direction::Inverse => r.inverse(),
    };
    w.insert_at_unit(ins.position, &r)
}

/// Applies the plan; the result equals `w` in the group.
pub fn apply_fuzz(w: &BraidWord, plan: &FuzzPlan) -> Result<BraidWord> {
    plan.insertions
        .iter()
        .try_fold(w.clone(), |acc, &ins| insert(&acc, ins))
}

/// `0, -1, 1, -2, 2, ...` restricted to `|n| ≤ bound`.
fn centered(bound: i64) -> Vec<i64> {
    let mut v = vec![0];
    for n in 1..=bound {
        v.push(-n);
        v.push(n);
    }
    v
}

/// `[n1, ..., nk]` as a projective pair, evaluated from the right.
fn eval_projective(entries: &[i64]) -> (i128, i128) {
    entries
        .iter()
        .rev()
        .fold((1i128, 0i128), |(p, q), &n| (n as i128 * p + q, p))
}

fn matches(entries: &[i64], x: Rational) -> bool {
    let (p, q) = eval_projective(entries);
    q != 0 && p * x.den() as i128 == q * x.num() as i128
}

fn search(
    x: Rational,
    len: usize,
    evens: &[i64],
    all: &[i64],
    prefix: &mut Vec<i64>,
    out: &mut Vec<EvenOddCF>,
    first_only: bool,
) {
    if first_only && !out.is_empty() {
        return;
    }
    if prefix.len() == len {
        if matches(prefix, x) {
            let pairs = prefix.chunks_exact(2).map(|c| (c[0], c[1])).collect();
            out.push(EvenOddCF::new(pairs).expect("even positions are even"));
        }
        return;
    }
    let choices = if prefix.len().is_multiple_of(2) {
        evens
    } else {
        all
    };
    for &n in choices {
        prefix.push(n);
        search(x, len, evens, all, prefix, out, first_only);
        prefix.pop();
    }
}

fn brute_force(x: Rational, max_len: usize, bound: i64, first_only: bool) -> Vec<EvenOddCF> {
    let all = centered(bound);
    let evens: Vec<i64> = all.iter().copied().filter(|n| n % 2 == 0).collect();
    let mut out = Vec::new();
    for len in (2..=max_len).step_by(2) {
        search(x, len, &evens, &all, &mut Vec::new(), &mut out, first_only);
        if first_only && !out.is_empty() {
            break;
        }
    }
    out
}

/// Every `[2a1, b1, ..., 2an, bn]` with at most `max_len` entries, each of
/// absolute value at most `bound`, that evaluates to `x`.
pub fn brute_force_cf_solutions(x: Rational, max_len: usize, bound: i64) -> Vec<EvenOddCF> {
    brute_force(x, max_len, bound, false)
}

/// The first solution, shortest first and entries in the order
/// `0, -1, 1, -2, 2, ...`.
pub fn brute_force_cf_search(x: Rational, max_len: usize, bound: i64) -> Option<EvenOddCF> {
    brute_force(x, max_len, bound, true).into_iter().next()
}
