// The arithmetic layer: even/odd and all-even continued fraction
// expansions, and modular inverses.

use std::fmt::Write;

use tunnel_slopes::arith::{
    cf_eval, cf_eval_matrix, expand_all_even, expand_odd_numerator, mod_inverse, Rational,
};

pub fn run() -> String {
    let mut out = String::new();
    for (n, d) in [(413, 227), (7, 2), (7, 3), (-195, 31)] {
        let x = Rational::new(n, d).unwrap();
        let cf = expand_odd_numerator(x).unwrap();
        writeln!(out, "{x} = {cf:?}").unwrap();
    }
    let cf = expand_all_even(413, 227).unwrap();
    writeln!(
        out,
        "K( 413, 227 ) in Conway position: {cf:?} = {}",
        cf.eval()
    )
    .unwrap();
    let entries = [2, -6, 2, 6, 2, 1];
    writeln!(
        out,
        "recursive {} / matrix {}",
        cf_eval(&entries).unwrap(),
        cf_eval_matrix(&entries).unwrap()
    )
    .unwrap();
    write!(
        out,
        "227^-1 mod 413 = {}, 222^-1 mod 493 = {}",
        mod_inverse(227, 413).unwrap(),
        mod_inverse(222, 493).unwrap()
    )
    .unwrap();
    out
}

fn main() {
    println!("{}", run());
}
