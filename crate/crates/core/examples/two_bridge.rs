// Tunnels of 2-bridge knots: the four-tunnel report, the braid words
// behind it, and the closed form checked against the slope engine.

use std::fmt::Write;

use tunnel_slopes::families::{
    lower_simple_word, semisimple_slopes_closed_form, two_bridge_tunnels, upper_semisimple_word,
    TwoBridge,
};
use tunnel_slopes::slopes::{lower_slopes, upper_slopes};

pub fn run() -> String {
    let mut out = String::new();
    for (a, b) in [(413, 227), (7, 3), (493, 222)] {
        let k = TwoBridge::new(a, b).unwrap();
        writeln!(out, "{k}, dual {}", k.dual()).unwrap();
        writeln!(out, "{}", two_bridge_tunnels(k)).unwrap();

        let upper = upper_semisimple_word(k);
        let simple = lower_simple_word(k);
        writeln!(out, "  upper semisimple word: {upper}").unwrap();
        writeln!(out, "  lower simple word:     {simple}").unwrap();
        writeln!(out, "  its lower tunnel:      {}", lower_slopes(&upper)).unwrap();

        let closed = semisimple_slopes_closed_form(k);
        let engine = upper_slopes(&upper);
        writeln!(out, "  closed form == engine: {}\n", closed == engine).unwrap();
    }
    out.trim_end().to_string()
}

fn main() {
    println!("{}", run());
}
