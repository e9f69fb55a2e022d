// Decides which slope sequences belong to semisimple tunnels of 2-bridge
// knots.

use std::fmt::Write;

use tunnel_slopes::families::find_two_bridge;
use tunnel_slopes::slopes::SlopeSequence;

pub fn run() -> String {
    let mut out = String::new();
    let cases: [&[i64]; 6] = [
        &[1, 3, 15, 7, 9, 5],
        &[1, 3, 15, 8, -9, 5],
        &[1, 3, 15, 11, 9, 5],
        &[1, 3, 15, 8, 9, 5],
        &[1, 3, -15, 8, 9, 5],
        &[1, 5, 11, 1],
    ];
    for flat in cases {
        let s = SlopeSequence::from_flat(flat).unwrap();
        writeln!(out, "{s}").unwrap();
        match find_two_bridge(&s) {
            Ok(m) => writeln!(out, "  {}", m.to_string().replace('\n', "\n  ")).unwrap(),
            Err(r) => writeln!(out, "  ({}) {r}", r.condition()).unwrap(),
        }
    }
    out.trim_end().to_string()
}

fn main() {
    println!("{}", run());
}
