// Builds braid words from slope sequences, reads the slopes back, and
// computes dual tunnels.

use std::fmt::Write;

use tunnel_slopes::slopes::{braid_from_slopes, dual_slopes, upper_slopes, SlopeSequence};
use tunnel_slopes::verify::random_valid_slopes;

pub fn run() -> String {
    let mut out = String::new();
    let s = SlopeSequence::from_flat(&[21, 25, 341, 60, -13, 1, -13, 1]).unwrap();
    let w = braid_from_slopes(&s).unwrap();
    writeln!(out, "slopes: {s}").unwrap();
    writeln!(out, "word:   {w}").unwrap();
    writeln!(out, "back:   {}", upper_slopes(&w)).unwrap();
    let dual = dual_slopes(&s).unwrap();
    writeln!(out, "dual:   {dual}").unwrap();
    writeln!(out, "dual of dual: {}", dual_slopes(&dual).unwrap()).unwrap();

    let ok = (0..100u64)
        .filter(|&seed| {
            let s = random_valid_slopes(seed, 5);
            upper_slopes(&braid_from_slopes(&s).unwrap()) == s
        })
        .count();
    write!(out, "random round trips: {ok}/100").unwrap();
    out
}

fn main() {
    println!("{}", run());
}
