//! Every example in `examples/` runs and prints what it claims.

#[allow(dead_code)]
mod worked_example {
    include!("../examples/worked_example.rs");
}
#[allow(dead_code)]
mod transcript {
    include!("../examples/transcript.rs");
}
#[allow(dead_code)]
mod two_bridge {
    include!("../examples/two_bridge.rs");
}
#[allow(dead_code)]
mod torus {
    include!("../examples/torus.rs");
}
#[allow(dead_code)]
mod braid_from_slopes {
    include!("../examples/braid_from_slopes.rs");
}
#[allow(dead_code)]
mod recognizer {
    include!("../examples/recognizer.rs");
}
#[allow(dead_code)]
mod toroidal {
    include!("../examples/toroidal.rs");
}
#[allow(dead_code)]
mod relator_fuzz {
    include!("../examples/relator_fuzz.rs");
}
#[allow(dead_code)]
mod continued_fractions {
    include!("../examples/continued_fractions.rs");
}

#[test]
fn worked_example_output() {
    let out = worked_example::run();
    assert!(out.contains("omega_0 = s 3 l -1"));
    assert!(out.contains("upper tunnel:   [ 3/7 ], 7/2"));
    assert!(out.ends_with("lower tunnel:   [ 2/3 ], 1/3"));
}

#[test]
fn transcript_has_no_errors() {
    let out = transcript::run();
    assert!(!out.contains("error:"));
    assert_eq!(out.matches("> ").count(), transcript::SESSION.len());
    assert!(out.contains("K( 493, 171 )."));
}

#[test]
fn family_examples_agree_with_engine() {
    let out = two_bridge::run();
    assert_eq!(out.matches("closed form == engine: true").count(), 3);
    let out = torus::run();
    assert!(!out.contains("false"), "{out}");
}

#[test]
fn round_trip_example() {
    let out = braid_from_slopes::run();
    assert!(out.contains("back:   [ 21/25 ], 341/60, -13, -13"));
    assert!(out.ends_with("random round trips: 100/100"));
}

#[test]
fn recognizer_example() {
    let out = recognizer::run();
    assert!(out.contains("(ii) Slopes other than first"));
    assert!(out.contains("(i) m0 must be"));
}

#[test]
fn toroidal_example() {
    let out = toroidal::run();
    assert_eq!(out.matches("toroidal true").count(), 4);
    assert!(out.contains("[ 2/3 ], -1: toroidal false"));
}

#[test]
fn fuzz_example() {
    assert!(relator_fuzz::run().ends_with("invariants changed in 0 of 50 cases"));
}

#[test]
fn arithmetic_example() {
    let out = continued_fractions::run();
    assert!(out.contains("413/227 = [2, -6, 2, 6, 2, 1]"));
    assert!(out.ends_with("227^-1 mod 413 = 131, 222^-1 mod 493 = 171"));
}
