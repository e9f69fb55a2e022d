//! Words in the reduced torus braid group
//! `⟨δm, δℓ, σ | (δmσ)² = (δℓσ)² = 1, δm⁻¹δℓδmδℓ⁻¹ = σ²⟩`.
//!
//! Words are kept exponent-merged: adjacent letters never share a generator
//! and no exponent is zero. The text form is a whitespace-separated list of
//! `m|l|s <exponent>` pairs, e.g. `m 3 s -2 l 3`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::arith::{checked, ExtRational, Mat2};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Generator {
    DeltaM,
    DeltaL,
    Sigma,
}

impl Generator {
    pub fn symbol(self) -> char {
        match self {
            Generator::DeltaM => 'm',
            Generator::DeltaL => 'l',
            Generator::Sigma => 's',
        }
    }

    fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "m" => Some(Generator::DeltaM),
            "l" => Some(Generator::DeltaL),
            "s" => Some(Generator::Sigma),
            _ => None,
        }
    }

    /// The generator seen from below: `δm ↔ δℓ`, `σ` fixed.
    pub fn reversed(self) -> Self {
        match self {
            Generator::DeltaM => Generator::DeltaL,
            Generator::DeltaL => Generator::DeltaM,
            Generator::Sigma => Generator::Sigma,
        }
    }
}

/// A generator raised to a nonzero power.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub generator: Generator,
    pub exponent: i64,
}

impl Letter {
    pub fn new(generator: Generator, exponent: i64) -> Self {
        Letter {
            generator,
            exponent,
        }
    }

    pub fn m(exponent: i64) -> Self {
        Letter::new(Generator::DeltaM, exponent)
    }

    pub fn l(exponent: i64) -> Self {
        Letter::new(Generator::DeltaL, exponent)
    }

    pub fn s(exponent: i64) -> Self {
        Letter::new(Generator::Sigma, exponent)
    }
}

/// An element of the reduced braid group, as an exponent-merged word.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord::default()
    }

    /// Builds the canonical word for a product of letters (zero exponents
    /// are allowed and dropped).
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut w = BraidWord::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    pub fn letter(generator: Generator, exponent: i64) -> Self {
        BraidWord::from_letters([Letter::new(generator, exponent)])
    }

    pub fn m(exponent: i64) -> Self {
        BraidWord::letter(Generator::DeltaM, exponent)
    }

    pub fn l(exponent: i64) -> Self {
        BraidWord::letter(Generator::DeltaL, exponent)
    }

    pub fn s(exponent: i64) -> Self {
        BraidWord::letter(Generator::Sigma, exponent)
    }

    /// Multiplies a letter on the right, merging with the last letter.
    pub fn push(&mut self, letter: Letter) {
        if letter.exponent == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some(last) if last.generator == letter.generator => {
                last.exponent = checked(last.exponent.checked_add(letter.exponent));
                if last.exponent == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(letter),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of unit letters, i.e. the sum of absolute exponents.
    pub fn unit_len(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.exponent.unsigned_abs() as usize)
            .sum()
    }

    /// The word spelled out in letters with exponent `±1`.
    pub fn units(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().flat_map(|l| {
            let unit = Letter::new(l.generator, l.exponent.signum());
            std::iter::repeat_n(unit, l.exponent.unsigned_abs() as usize)
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter::new(l.generator, -l.exponent))
                .collect(),
        }
    }

    pub fn pow(&self, n: i64) -> BraidWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = BraidWord::identity();
        for _ in 0..n.unsigned_abs() {
            out = out * &base;
        }
        out
    }

    /// Total exponent of `σ`.
    pub fn sigma_exponent(&self) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == Generator::Sigma)
            .map(|l| l.exponent)
            .sum()
    }

    pub fn uses_only(&self, allowed: &[Generator]) -> bool {
        self.letters.iter().all(|l| allowed.contains(&l.generator))
    }

    /// Inserts `w` after the first `pos` unit letters.
    pub fn insert_at_unit(&self, pos: usize, w: &BraidWord) -> Result<BraidWord> {
        let len = self.unit_len();
        if pos > len {
            return Err(Error::domain(format!(
                "insertion position {pos} is past the end of a word of length {len}"
            )));
        }
        let mut units = self.units();
        let head = BraidWord::from_letters(units.by_ref().take(pos));
        let tail = BraidWord::from_letters(units);
        Ok(head * w * &tail)
    }
}

impl Mul<&BraidWord> for BraidWord {
    type Output = BraidWord;
    fn mul(mut self, rhs: &BraidWord) -> BraidWord {
        for &l in &rhs.letters {
            self.push(l);
        }
        self
    }
}

impl Mul<BraidWord> for BraidWord {
    type Output = BraidWord;
    fn mul(self, rhs: BraidWord) -> BraidWord {
        self * &rhs
    }
}

impl Mul<&BraidWord> for &BraidWord {
    type Output = BraidWord;
    fn mul(self, rhs: &BraidWord) -> BraidWord {
        self.clone() * rhs
    }
}

impl FromIterator<Letter> for BraidWord {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        BraidWord::from_letters(iter)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{} {}", l.generator.symbol(), l.exponent)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(\"{self}\")")
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses `m|l|s <int>` pairs; the result is canonicalized.
pub fn parse_word(text: &str) -> Result<BraidWord> {
    let mut tokens = text.split_whitespace().enumerate();
    let mut word = BraidWord::identity();
    while let Some((pos, tok)) = tokens.next() {
        let generator = Generator::from_symbol(tok).ok_or_else(|| {
            Error::parse(pos, format!("expected one of m, l, s but found {tok:?}"))
        })?;
        let (epos, etok) = tokens
            .next()
            .ok_or_else(|| Error::parse(pos + 1, format!("missing exponent after {tok:?}")))?;
        let exponent: i64 = etok
            .parse()
            .map_err(|_| Error::parse(epos, format!("exponent {etok:?} is not an integer")))?;
        word.push(Letter::new(generator, exponent));
    }
    Ok(word)
}

pub fn format_word(w: &BraidWord) -> String {
    w.to_string()
}

/// The braid seen from below: letters in reverse order with `δm` and `δℓ`
/// exchanged.
pub fn reverse_word(w: &BraidWord) -> BraidWord {
    w.letters
        .iter()
        .rev()
        .map(|l| Letter::new(l.generator.reversed(), l.exponent))
        .collect()
}

/// Algebraic winding number: each `δℓ^e` run contributes `(-1)^(k+1) e`,
/// `k` being the total `σ`-exponent to its left.
pub fn winding_number(w: &BraidWord) -> i64 {
    let mut sigma = 0i64;
    let mut t = 0i64;
    for l in &w.letters {
        match l.generator {
            Generator::Sigma => sigma += l.exponent,
            Generator::DeltaL => {
                if sigma.rem_euclid(2) == 0 {
                    t -= l.exponent;
                } else {
                    t += l.exponent;
                }
            }
            Generator::DeltaM => {}
        }
    }
    t
}

/// `t(AB)` from `t(A)`, `σ`-exponent of `A` and `t(B)`.
pub(crate) fn compose_winding(t_a: i64, sigma_a: i64, t_b: i64) -> i64 {
    if sigma_a.rem_euclid(2) == 0 {
        t_a + t_b
    } else {
        t_a - t_b
    }
}

/// Strips the longest prefix in `⟨δℓ, σ⟩` and the longest suffix in
/// `⟨δm, σ⟩`; these factors do not change the (1,1)-position.
pub fn double_coset_trim(w: &BraidWord) -> BraidWord {
    let ls = &w.letters;
    let start = ls
        .iter()
        .position(|l| l.generator == Generator::DeltaM)
        .unwrap_or(ls.len());
    let end = ls
        .iter()
        .rposition(|l| l.generator == Generator::DeltaL)
        .map_or(start, |i| i + 1)
        .max(start);
    BraidWord {
        letters: ls[start..end].to_vec(),
    }
}

/// A braid word in the form `δmσ·ω_d · δmσ·ω_{d-1} ⋯ δmσ·ω_0` with every
/// `ω_i` in `⟨δℓ, σ⟩`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Segments {
    /// `ω_d, ..., ω_0`, left to right.
    omegas: Vec<BraidWord>,
}

impl Segments {
    pub fn new(omegas: Vec<BraidWord>) -> Result<Self> {
        if let Some(w) = omegas
            .iter()
            .find(|w| !w.uses_only(&[Generator::DeltaL, Generator::Sigma]))
        {
            return Err(Error::domain(format!("segment {w} has a δm letter")));
        }
        Ok(Segments { omegas })
    }

    /// The words `ω_d, ..., ω_0` in reading order.
    pub fn omegas(&self) -> &[BraidWord] {
        &self.omegas
    }

    /// `ω_i`, counted from the right.
    pub fn omega(&self, i: usize) -> &BraidWord {
        &self.omegas[self.omegas.len() - 1 - i]
    }

    /// Number of segments, `d + 1`.
    pub fn len(&self) -> usize {
        self.omegas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omegas.is_empty()
    }

    pub fn into_omegas(self) -> Vec<BraidWord> {
        self.omegas
    }

    /// Reassembles the word `δmσ·ω_d ⋯ δmσ·ω_0`.
    pub fn to_word(&self) -> BraidWord {
        let head = BraidWord::from_letters([Letter::m(1), Letter::s(1)]);
        self.omegas
            .iter()
            .fold(BraidWord::identity(), |acc, w| acc * &head * w)
    }
}

/// Splits a braid description into cabling segments.
///
/// Returns `None` when the double-coset core is empty, i.e. the word
/// describes the trivial knot in its standard position.
pub fn segment(w: &BraidWord) -> Option<Segments> {
    let core = double_coset_trim(w);
    if core.is_identity() {
        return None;
    }
    // δm^-1 = σ δm σ
    let mut expanded = BraidWord::identity();
    for l in core.letters() {
        if l.generator == Generator::DeltaM && l.exponent < 0 {
            for _ in 0..l.exponent.unsigned_abs() {
                expanded.push(Letter::s(1));
                expanded.push(Letter::m(1));
                expanded.push(Letter::s(1));
            }
        } else {
            expanded.push(*l);
        }
    }
    let core = double_coset_trim(&expanded);
    if core.is_identity() {
        return None;
    }
    let mut omegas: Vec<BraidWord> = Vec::new();
    for l in core.letters() {
        if l.generator == Generator::DeltaM {
            debug_assert!(l.exponent > 0);
            for _ in 0..l.exponent {
                omegas.push(BraidWord::s(-1));
            }
        } else {
            omegas
                .last_mut()
                .expect("trimmed word starts with δm")
                .push(*l);
        }
    }
    Some(Segments { omegas })
}

fn require_subgroup(u: &BraidWord) -> Result<()> {
    if u.uses_only(&[Generator::DeltaL, Generator::Sigma]) {
        Ok(())
    } else {
        Err(Error::domain(format!("{u} is not a word in δℓ and σ")))
    }
}

/// The image of `[1, 0]` under the right action `δℓ ↦ L⁻²`, `σ ↦ U`.
pub(crate) fn subgroup_vector(u: &BraidWord) -> (i64, i64) {
    u.letters().iter().fold((1, 0), |v, l| match l.generator {
        Generator::Sigma => Mat2::upper(l.exponent).apply_row(v),
        Generator::DeltaL => Mat2::lower(checked(l.exponent.checked_mul(-2))).apply_row(v),
        Generator::DeltaM => unreachable!("checked by caller"),
    })
}

/// Slope of the coset `⟨δℓ⟩·u` in `Q ∪ {∞}`; the numerator is always odd.
pub fn subgroup_slope(u: &BraidWord) -> Result<ExtRational> {
    require_subgroup(u)?;
    let (x, y) = subgroup_vector(u);
    Ok(ExtRational::from_ratio(x, y))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Syllable {
    /// The involution `δℓσ`.
    Tau,
    Sigma(i64),
}

/// Normal form in `⟨δℓ, σ⟩ = ⟨δℓσ⟩ * ⟨σ⟩ ≅ C₂ * C∞`, written back as a
/// canonical word. Two subgroup words are equal iff their normal forms are.
pub fn subgroup_normal_form(u: &BraidWord) -> Result<BraidWord> {
    require_subgroup(u)?;
    let mut stack: Vec<Syllable> = Vec::new();
    let mut push = |s: Syllable| match (stack.last_mut(), s) {
        (Some(Syllable::Tau), Syllable::Tau) => {
            stack.pop();
        }
        (Some(Syllable::Sigma(k)), Syllable::Sigma(j)) => {
            *k += j;
            if *k == 0 {
                stack.pop();
            }
        }
        (_, s) => stack.push(s),
    };
    for unit in u.units() {
        match (unit.generator, unit.exponent) {
            (Generator::Sigma, e) => push(Syllable::Sigma(e)),
            // δℓ = τσ⁻¹, δℓ⁻¹ = στ
            (Generator::DeltaL, 1) => {
                push(Syllable::Tau);
                push(Syllable::Sigma(-1));
            }
            (Generator::DeltaL, _) => {
                push(Syllable::Sigma(1));
                push(Syllable::Tau);
            }
            (Generator::DeltaM, _) => unreachable!(),
        }
    }
    Ok(stack
        .into_iter()
        .flat_map(|s| match s {
            Syllable::Tau => vec![Letter::l(1), Letter::s(1)],
            Syllable::Sigma(k) => vec![Letter::s(k)],
        })
        .collect())
}

/// Shortens a word with `σxσ → x⁻¹` and `σ⁻¹x⁻¹σ⁻¹ → x` for `x ∈ {δm, δℓ}`
/// (equivalent to the relators `(xσ)² = 1`), repeated to a fixpoint.
pub fn simplify(w: &BraidWord) -> BraidWord {
    let mut out: Vec<Letter> = Vec::new();
    for unit in w.units() {
        push_reducing(&mut out, unit);
    }
    BraidWord::from_letters(out)
}

fn push_reducing(out: &mut Vec<Letter>, unit: Letter) {
    // `out` is kept freely reduced and free of the length-3 patterns, so only
    // the top of the stack can form a new reducible pattern.
    if let Some(top) = out.last() {
        if top.generator == unit.generator && top.exponent == -unit.exponent {
            out.pop();
            return;
        }
    }
    if unit.generator == Generator::Sigma && out.len() >= 2 {
        let x = out[out.len() - 1];
        let s = out[out.len() - 2];
        if s.generator == Generator::Sigma
            && s.exponent == unit.exponent
            && x.generator != Generator::Sigma
            && x.exponent == unit.exponent
        {
            out.truncate(out.len() - 2);
            push_reducing(out, Letter::new(x.generator, -x.exponent));
            return;
        }
    }
    out.push(unit);
}
