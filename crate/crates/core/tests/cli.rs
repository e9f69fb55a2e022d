use std::process::Command;

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_tunnel-slopes");

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    stdout.strip_suffix('\n').unwrap().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    serde_json::from_str(&ok(&a)).unwrap()
}

const W: &str = "m 3 s -2 l 3 s -4 m -1 s -4 l 3";

#[test]
fn slope_commands() {
    assert_eq!(ok(&["upperSlopes", W]), "[ 21/25 ], 341/60, -13, -13");
    assert_eq!(
        ok(&["lowerSlopes", W]),
        "[ 16/19 ], -7, -7, -195/31, -5, -5"
    );
    assert_eq!(
        ok(&["dualSlopes", "[16,19,-7,1,-7,1,-195,31,-5,1,-5,1]"]),
        "[ 21/25 ], 341/60, -13, -13"
    );
    assert_eq!(
        ok(&["upperSlopes", ""]),
        "trivial knot (empty slope sequence)"
    );
    assert_eq!(ok(&["upperSlopes"]), "trivial knot (empty slope sequence)");
}

#[test]
fn braid_word_round_trips_through_cli() {
    let w = ok(&["braidWord", "[21,25,341,60,-13,1,-13,1]"]);
    assert_eq!(ok(&["upperSlopes", &w]), "[ 21/25 ], 341/60, -13, -13");
    let rev = ok(&["reverseBraid", W]);
    assert_eq!(ok(&["upperSlopes", &rev]), ok(&["lowerSlopes", W]));
}

#[test]
fn family_commands() {
    assert_eq!(
        ok(&["twoBridge", "413", "227"]),
        "Upper simple tunnel:     [ 131/413 ]\n\
         Upper semisimple tunnel: [ 1/3 ], 15/7, 9/5\n\
         Lower simple tunnel:     [ 227/413 ]\n\
         Lower semisimple tunnel: [ 2/5 ], -1, -3/2, 1, 1, 1, 3"
    );
    assert_eq!(
        ok(&["upperSemisimpleBraidWord", "413, 227"]),
        "m -1 s -6 m -1 s 6 m -1 s 1 l -1"
    );
    assert_eq!(
        ok(&["lowerSimpleBraidWord", "413", "227"]),
        "m -1 s 1 l -1 s 6 l -1 s -6 l -1"
    );
    assert_eq!(ok(&["torusUpperSlopes", "13", "5"]), "[ 1/5 ], 11, 15, 21");
    assert_eq!(
        ok(&["torusLowerSlopes", "13", "5"]),
        "[ 1/3 ], 3, 3, 5, 5, 7, 7, 7, 9, 9"
    );
    assert_eq!(
        ok(&["fullTorusBraidWord", "13", "5"]),
        "l -2 m 1 l -3 m 1 l -2 m 1 l -3 m 1 l -3 m 1"
    );
    assert_eq!(
        ok(&[
            "find2BridgeKnot",
            "[",
            "1,",
            "3,",
            "15,",
            "11,",
            "9,",
            "5",
            "]"
        ]),
        "Slopes other than first must be of the form 2 + 1/k or 2 - 1/k."
    );
}

#[test]
fn errors_and_exit_codes() {
    let (code, stdout, stderr) = run(&["upperSlopes", "m 1 x 2"]);
    assert_eq!((code, stdout.as_str()), (2, ""));
    assert!(stderr.contains("token 2"), "{stderr}");
    assert_eq!(run(&["twoBridge", "8", "3"]).0, 1);
    assert_eq!(run(&["torusUpperSlopes", "4", "6"]).0, 1);
    assert_eq!(run(&["braidWord", "[1,4]"]).0, 1);
    assert_eq!(run(&["braidWord", "[1,3,5]"]).0, 1);
    assert_eq!(run(&["find2BridgeKnot", "[1,a]"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&[]).0, 2);
}

#[test]
fn json_agrees_with_text() {
    let v = json(&["upperSlopes", W]);
    assert_eq!(v["numerators"], serde_json::json!([21, 341, -13, -13]));
    assert_eq!(v["denominators"], serde_json::json!([25, 60, 1, 1]));
    assert_eq!(v["text"], ok(&["upperSlopes", W]));

    let v = json(&["twoBridge", "413", "227"]);
    assert_eq!(
        v["lower_semisimple"]["numerators"],
        serde_json::json!([2, -1, -3, 1, 1, 1, 3])
    );
    assert_eq!(v["upper_simple"]["numerators"], serde_json::json!([131]));

    let v = json(&["fullTorusBraidWord", "13", "5"]);
    assert_eq!(v["word"], ok(&["fullTorusBraidWord", "13", "5"]));
    assert_eq!(v["exponents"].as_array().unwrap().len(), 10);

    let v = json(&["find2BridgeKnot", "[1,3,15,7,9,5]"]);
    assert_eq!(v["knot"], serde_json::json!([413, 227]));
    assert_eq!(v["dual"], serde_json::json!([413, 131]));
    let v = json(&["find2BridgeKnot", "[1,3,-15,8,9,5]"]);
    assert_eq!(v["recognized"], false);
    assert_eq!(v["condition"], "iii");

    let v = json(&["upperSlopes", ""]);
    assert_eq!(v["trivial"], true);
    assert_eq!(v["numerators"], serde_json::json!([]));
}
