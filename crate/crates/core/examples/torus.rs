// Torus knots: the staircase braid word and the slope formulas for both
// tunnels, compared with what the engine reads off the word.

use std::fmt::Write;

use tunnel_slopes::families::{
    is_toroidal, torus_braid_word, torus_lower_slopes, torus_upper_slopes, TorusParams,
};
use tunnel_slopes::slopes::{lower_slopes, upper_slopes};

pub fn run() -> String {
    let mut out = String::new();
    for (p, q) in [(13, 5), (3, 2), (7, 3), (13, -5), (5, -3)] {
        let t = TorusParams::new(p, q).unwrap();
        let w = torus_braid_word(t);
        let upper = torus_upper_slopes(t);
        let lower = torus_lower_slopes(t);
        writeln!(out, "{t}: {w}").unwrap();
        writeln!(
            out,
            "  upper {upper}  (engine agrees: {})",
            upper == upper_slopes(&w)
        )
        .unwrap();
        writeln!(
            out,
            "  lower {lower}  (engine agrees: {})",
            lower == lower_slopes(&w)
        )
        .unwrap();
        writeln!(
            out,
            "  toroidal: {}",
            is_toroidal(&upper) && is_toroidal(&lower)
        )
        .unwrap();
    }
    out.trim_end().to_string()
}

fn main() {
    println!("{}", run());
}
