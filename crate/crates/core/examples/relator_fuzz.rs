// Inserts relators of the reduced braid group into random words and
// checks that the slope invariants do not move.

use std::fmt::Write;

use tunnel_slopes::braid::winding_number;
use tunnel_slopes::slopes::{lower_slopes, upper_slopes};
use tunnel_slopes::verify::{apply_fuzz, random_braid_word, FuzzPlan};

pub fn run() -> String {
    let mut out = String::new();
    let mut changed = 0;
    for seed in 0..50u64 {
        let w = random_braid_word(seed, 10);
        let plan = FuzzPlan::random(seed, &w, 3);
        let fuzzed = apply_fuzz(&w, &plan).unwrap();
        if seed < 3 {
            writeln!(out, "seed {seed}: {w}\n   -> {fuzzed}").unwrap();
            writeln!(out, "   upper {}", upper_slopes(&fuzzed)).unwrap();
        }
        if upper_slopes(&w) != upper_slopes(&fuzzed)
            || lower_slopes(&w) != lower_slopes(&fuzzed)
            || winding_number(&w) != winding_number(&fuzzed)
        {
            changed += 1;
            writeln!(out, "seed {seed} changed: {w}").unwrap();
        }
    }
    write!(out, "invariants changed in {changed} of 50 cases").unwrap();
    out
}

fn main() {
    println!("{}", run());
}
