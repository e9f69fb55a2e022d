// Runs the command-line front end on a fixed session of commands and
// prints what `tunnel-slopes` would.

use tunnel_slopes::cli::{run_command, CommandRequest};

pub const SESSION: &[(&str, &str)] = &[
    ("upperSlopes", "m 3 s -2 l 3 s -4 m -1 s -4 l 3"),
    ("lowerSlopes", "m 3 s -2 l 3 s -4 m -1 s -4 l 3"),
    ("braidWord", "[21,25,341,60,-13,1,-13,1]"),
    (
        "upperSlopes",
        "m 3 s -3 m -1 l -2 m 1 l -1 s -4 m 1 s -4 m -1 l -2 m 1 l -1",
    ),
    ("dualSlopes", "[21,25,341,60,-13,1,-13,1]"),
    ("dualSlopes", "[16,19,-7,1,-7,1,-195,31,-5,1,-5,1]"),
    ("twoBridge", "413 227"),
    ("upperSemisimpleBraidWord", "413 227"),
    ("lowerSimpleBraidWord", "413 227"),
    ("torusUpperSlopes", "13 5"),
    ("torusLowerSlopes", "13 5"),
    ("fullTorusBraidWord", "13 5"),
    ("find2BridgeKnot", "[ 1, 3, 15, 7, 9, 5 ]"),
    ("find2BridgeKnot", "[ 1, 3, 15, 8, -9, 5 ]"),
    ("find2BridgeKnot", "[ 1, 3, 15, 11, 9, 5 ]"),
    ("find2BridgeKnot", "[ 1, 3, 15, 8, 9, 5 ]"),
    ("find2BridgeKnot", "[ 1, 3, -15, 8, 9, 5 ]"),
];

pub fn run() -> String {
    let mut out = Vec::new();
    for (command, arg) in SESSION {
        let req = CommandRequest {
            command: command.to_string(),
            args: vec![arg.to_string()],
            json: false,
        };
        let result = run_command(&req).unwrap_or_else(|e| format!("error: {e}"));
        out.push(format!("> {command} {arg}\n{result}"));
    }
    out.join("\n\n")
}

fn main() {
    println!("{}", run());
}
