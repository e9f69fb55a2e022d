// Slope sequences of tunnels in toroidal position, and braid words that
// realize them.

use std::fmt::Write;

use tunnel_slopes::families::{is_toroidal, toroidal_braid_word};
use tunnel_slopes::slopes::{upper_slopes, SlopeSequence};

pub fn run() -> String {
    let mut out = String::new();
    for odds in [
        vec![3, 3],
        vec![5, 11, 15, 21],
        vec![-3, -3, -5, -5],
        vec![9],
    ] {
        let w = toroidal_braid_word(&odds).unwrap();
        let s = upper_slopes(&w);
        writeln!(out, "{odds:?}: {w}").unwrap();
        writeln!(out, "  slopes {s}, toroidal {}", is_toroidal(&s)).unwrap();
    }
    for flat in [[3, 7, 7, 2], [2, 3, -1, 1]] {
        let s = SlopeSequence::from_flat(&flat).unwrap();
        writeln!(out, "{s}: toroidal {}", is_toroidal(&s)).unwrap();
    }
    write!(
        out,
        "rejected input [5, 3]: {}",
        toroidal_braid_word(&[5, 3]).unwrap_err()
    )
    .unwrap();
    out
}

fn main() {
    println!("{}", run());
}
