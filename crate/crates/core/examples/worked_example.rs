// Walks through the slope computation for `δm⁻¹ σ⁻¹ δℓ δm⁻¹ σ³ δℓ⁻¹`:
// segmentation, the subgroup slope of each segment, and both tunnels.

use std::fmt::Write;

use tunnel_slopes::braid::{segment, subgroup_slope, winding_number, BraidWord};
use tunnel_slopes::slopes::{lower_slopes, upper_slopes};

pub fn run() -> String {
    let mut out = String::new();
    let w: BraidWord = "m -1 s -1 l 1 m -1 s 3 l -1".parse().unwrap();
    writeln!(out, "braid word:     {w}").unwrap();
    writeln!(out, "winding number: {}", winding_number(&w)).unwrap();

    let segs = segment(&w).expect("nontrivial position");
    for i in (0..segs.len()).rev() {
        let omega = segs.omega(i);
        let slope = subgroup_slope(omega).unwrap();
        writeln!(out, "omega_{i} = {omega:<16} slope {slope}").unwrap();
    }

    writeln!(out, "upper tunnel:   {}", upper_slopes(&w)).unwrap();
    write!(out, "lower tunnel:   {}", lower_slopes(&w)).unwrap();
    out
}

fn main() {
    println!("{}", run());
}
