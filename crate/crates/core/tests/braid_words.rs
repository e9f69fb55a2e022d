use proptest::prelude::*;
use tunnel_slopes::braid::{
    double_coset_trim, parse_word, reverse_word, subgroup_slope, winding_number, BraidWord,
    Generator,
};
use tunnel_slopes::slopes::{lower_slopes, upper_slopes};
use tunnel_slopes::verify::{apply_fuzz, random_braid_word, random_word_over, rng, FuzzPlan};

mod common;
use common::winding_by_units;

#[test]
fn relator_fuzz_keeps_invariants() {
    for seed in 0..500u64 {
        let w = random_braid_word(seed, 12);
        let plan = FuzzPlan::random(seed, &w, 1 + (seed % 4) as usize);
        let f = apply_fuzz(&w, &plan).unwrap();
        assert_ne!(f, w, "seed {seed}: fuzzing left {w} unchanged");
        assert_eq!(
            upper_slopes(&f),
            upper_slopes(&w),
            "seed {seed}: {w} -> {f}"
        );
        assert_eq!(
            lower_slopes(&f),
            lower_slopes(&w),
            "seed {seed}: {w} -> {f}"
        );
        assert_eq!(
            winding_number(&f),
            winding_number(&w),
            "seed {seed}: {w} -> {f}"
        );
    }
}

#[test]
fn double_coset_factors_do_not_matter() {
    for seed in 0..500u64 {
        let mut r = rng(seed);
        let w = random_braid_word(seed.wrapping_add(10_000), 10);
        let u = random_word_over(&mut r, &[Generator::DeltaL, Generator::Sigma], 4);
        let v = random_word_over(&mut r, &[Generator::DeltaM, Generator::Sigma], 4);
        let uwv = u.clone() * &w * &v;
        assert_eq!(
            upper_slopes(&uwv),
            upper_slopes(&w),
            "seed {seed}: {u} | {w} | {v}"
        );
    }
}

#[test]
fn winding_matches_unit_count() {
    for seed in 0..500u64 {
        let w = random_braid_word(seed, 15);
        assert_eq!(winding_number(&w), winding_by_units(&w), "seed {seed}: {w}");
    }
}

/// Slope of `⟨δℓ⟩·u` by multiplying out the matrices in `i128`.
fn subgroup_slope_oracle(u: &BraidWord) -> (i128, i128) {
    let mut v = (1i128, 0i128);
    for l in u.units() {
        let e = l.exponent as i128;
        v = match l.generator {
            Generator::Sigma => (v.0, v.0 * e + v.1),
            Generator::DeltaL => (v.0 - 2 * e * v.1, v.1),
            Generator::DeltaM => unreachable!(),
        };
    }
    v
}

#[test]
fn subgroup_slopes_follow_the_matrix_action() {
    for seed in 0..500u64 {
        let mut r = rng(seed);
        let u = random_word_over(&mut r, &[Generator::DeltaL, Generator::Sigma], 8);
        let (x, y) = subgroup_slope_oracle(&u);
        assert_eq!(x.rem_euclid(2), 1, "seed {seed}: {u}");
        match subgroup_slope(&u).unwrap().finite() {
            None => assert_eq!(y, 0, "seed {seed}: {u}"),
            Some(s) => assert_eq!(x * s.den() as i128, y * s.num() as i128, "seed {seed}: {u}"),
        }
    }
}

#[test]
fn trimming_leaves_delta_m_first() {
    for seed in 0..200u64 {
        let w = random_braid_word(seed, 12);
        let t = double_coset_trim(&w);
        if let Some(first) = t.letters().first() {
            assert_eq!(first.generator, Generator::DeltaM, "seed {seed}: {w}");
            assert_eq!(t.letters().last().unwrap().generator, Generator::DeltaL);
        }
    }
}

proptest! {
    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let w = random_braid_word(seed, 20);
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn reversal_is_an_involution(seed in any::<u64>()) {
        let w = random_braid_word(seed, 20);
        prop_assert_eq!(reverse_word(&reverse_word(&w)), w.clone());
        prop_assert_eq!(upper_slopes(&reverse_word(&w)), lower_slopes(&w));
    }
}
