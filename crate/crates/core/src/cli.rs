//! One-shot command front end: `tunnel-slopes <command> [args...] [--json]`.
//!
//! Commands take either a braid word in the `m|l|s <int>` grammar or a
//! flat list of integers. Integer lists may be written with or without
//! brackets and commas, so `"[1, 3, 15, 7, 9, 5]"` and `1 3 15 7 9 5` are
//! the same input.

use std::fmt;

use serde_json::{json, Value};

use crate::arith::SimpleSlope;
use crate::braid::{parse_word, reverse_word, BraidWord};
use crate::error::Error;
use crate::families::{
    find_two_bridge, lower_simple_word, torus_braid_word, torus_lower_slopes, torus_upper_slopes,
    two_bridge_tunnels, upper_semisimple_word, TorusParams, TwoBridge,
};
use crate::slopes::{braid_from_slopes, dual_slopes, lower_slopes, upper_slopes, SlopeSequence};

pub const COMMANDS: [&str; 12] = [
    "upperSlopes",
    "lowerSlopes",
    "braidWord",
    "dualSlopes",
    "twoBridge",
    "upperSemisimpleBraidWord",
    "lowerSimpleBraidWord",
    "torusUpperSlopes",
    "torusLowerSlopes",
    "fullTorusBraidWord",
    "find2BridgeKnot",
    "reverseBraid",
];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommandRequest {
    pub command: String,
    pub args: Vec<String>,
    pub json: bool,
}

impl CommandRequest {
    /// Builds a request from the arguments after the program name. `--json`
    /// may appear anywhere.
    pub fn from_args<I, S>(argv: I) -> Result<Self, CliError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut json = false;
        let mut rest = Vec::new();
        for arg in argv {
            let arg = arg.into();
            if arg == "--json" {
                json = true;
            } else {
                rest.push(arg);
            }
        }
        if rest.is_empty() {
            return Err(CliError::usage(usage()));
        }
        let command = rest.remove(0);
        Ok(CommandRequest {
            command,
            args: rest,
            json,
        })
    }
}

/// A failed command: the message for the error stream and the exit status.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliError {
    pub message: String,
    pub exit_code: i32,
}

impl CliError {
    fn usage(message: String) -> Self {
        CliError {
            message,
            exit_code: 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let exit_code = match e {
            Error::Domain(_) => 1,
            Error::Parse { .. } | Error::Usage(_) => 2,
        };
        CliError {
            message: e.to_string(),
            exit_code,
        }
    }
}

pub fn usage() -> String {
    let mut s = String::from("usage: tunnel-slopes <command> [args...] [--json]\ncommands:");
    for c in COMMANDS {
        s.push_str("\n  ");
        s.push_str(c);
    }
    s
}

/// Reads every integer in `text`, treating brackets, commas and whitespace
/// as separators.
pub fn parse_int_list(text: &str) -> crate::Result<Vec<i64>> {
    text.split(|c: char| c == '[' || c == ']' || c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(pos, tok)| {
            tok.parse()
                .map_err(|_| Error::parse(pos, format!("{tok:?} is not an integer")))
        })
        .collect()
}

fn int_pair(text: &str) -> crate::Result<(i64, i64)> {
    match parse_int_list(text)?[..] {
        [a, b] => Ok((a, b)),
        ref other => Err(Error::Usage(format!(
            "expected two integers, found {}",
            other.len()
        ))),
    }
}

fn slopes_json(s: &SlopeSequence) -> Value {
    let (num, den): (Vec<i64>, Vec<i64>) = s.to_flat().into_iter().unzip();
    json!({
        "trivial": s.is_trivial(),
        "numerators": num,
        "denominators": den,
        "text": s.to_string(),
    })
}

fn simple_json(m: SimpleSlope) -> Value {
    json!({
        "numerators": [m.p()],
        "denominators": [m.q()],
        "text": m.to_string(),
    })
}

fn word_json(w: &BraidWord) -> Value {
    let (generators, exponents): (Vec<String>, Vec<i64>) = w
        .letters()
        .iter()
        .map(|l| (l.generator.symbol().to_string(), l.exponent))
        .unzip();
    json!({
        "word": w.to_string(),
        "generators": generators,
        "exponents": exponents,
    })
}

enum Output {
    Slopes(SlopeSequence),
    Word(BraidWord),
    Text(String, Value),
}

fn dispatch(command: &str, input: &str) -> Result<Output, CliError> {
    let out = match command {
        "upperSlopes" => Output::Slopes(upper_slopes(&parse_word(input)?)),
        "lowerSlopes" => Output::Slopes(lower_slopes(&parse_word(input)?)),
        "reverseBraid" => Output::Word(reverse_word(&parse_word(input)?)),
        "braidWord" => {
            let s = SlopeSequence::from_flat(&parse_int_list(input)?)?;
            Output::Word(braid_from_slopes(&s)?)
        }
        "dualSlopes" => {
            let s = SlopeSequence::from_flat(&parse_int_list(input)?)?;
            Output::Slopes(dual_slopes(&s)?)
        }
        "twoBridge" => {
            let (a, b) = int_pair(input)?;
            let report = two_bridge_tunnels(TwoBridge::new(a, b)?);
            let value = json!({
                "upper_simple": simple_json(report.upper_simple),
                "upper_semisimple": slopes_json(&report.upper_semisimple),
                "lower_simple": simple_json(report.lower_simple),
                "lower_semisimple": slopes_json(&report.lower_semisimple),
            });
            Output::Text(report.to_string(), value)
        }
        "upperSemisimpleBraidWord" => {
            let (a, b) = int_pair(input)?;
            Output::Word(upper_semisimple_word(TwoBridge::new(a, b)?))
        }
        "lowerSimpleBraidWord" => {
            let (a, b) = int_pair(input)?;
            Output::Word(lower_simple_word(TwoBridge::new(a, b)?))
        }
        "torusUpperSlopes" => {
            let (p, q) = int_pair(input)?;
            Output::Slopes(torus_upper_slopes(TorusParams::new(p, q)?))
        }
        "torusLowerSlopes" => {
            let (p, q) = int_pair(input)?;
            Output::Slopes(torus_lower_slopes(TorusParams::new(p, q)?))
        }
        "fullTorusBraidWord" => {
            let (p, q) = int_pair(input)?;
            Output::Word(torus_braid_word(TorusParams::new(p, q)?))
        }
        "find2BridgeKnot" => {
            let s = SlopeSequence::from_flat(&parse_int_list(input)?)?;
            match find_two_bridge(&s) {
                Ok(m) => {
                    let value = json!({
                        "recognized": true,
                        "knot": [m.knot.a(), m.knot.b()],
                        "dual": [m.dual.a(), m.dual.b()],
                        "text": m.to_string(),
                    });
                    Output::Text(m.to_string(), value)
                }
                Err(r) => {
                    let value = json!({
                        "recognized": false,
                        "condition": r.condition(),
                        "text": r.to_string(),
                    });
                    Output::Text(r.to_string(), value)
                }
            }
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown command {other:?}\n{}",
                usage()
            )))
        }
    };
    Ok(out)
}

/// Runs one command and returns what it prints on success.
pub fn run_command(req: &CommandRequest) -> Result<String, CliError> {
    let input = req.args.join(" ");
    let out = dispatch(&req.command, &input)?;
    let (text, mut value) = match out {
        Output::Slopes(s) => (s.to_string(), slopes_json(&s)),
        Output::Word(w) => (w.to_string(), word_json(&w)),
        Output::Text(t, v) => (t, v),
    };
    if !req.json {
        return Ok(text);
    }
    value["command"] = Value::from(req.command.as_str());
    Ok(value.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(cmd: &str, args: &[&str]) -> Result<String, CliError> {
        run_command(&CommandRequest {
            command: cmd.into(),
            args: args.iter().map(|s| s.to_string()).collect(),
            json: false,
        })
    }

    #[test]
    fn int_lists() {
        assert_eq!(
            parse_int_list("[ 1, 3, -15,8 ]").unwrap(),
            vec![1, 3, -15, 8]
        );
        assert_eq!(parse_int_list("").unwrap(), Vec::<i64>::new());
        assert!(matches!(
            parse_int_list("1, x"),
            Err(Error::Parse { position: 1, .. })
        ));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run("upperSlopes", &["m 1 q 2"]).unwrap_err().exit_code, 2);
        assert_eq!(run("twoBridge", &["4", "1"]).unwrap_err().exit_code, 1);
        assert_eq!(run("nope", &[]).unwrap_err().exit_code, 2);
        assert_eq!(run("twoBridge", &["413"]).unwrap_err().exit_code, 2);
    }

    #[test]
    fn request_from_argv() {
        let req = CommandRequest::from_args(["twoBridge", "--json", "413", "227"]).unwrap();
        assert!(req.json);
        assert_eq!(req.args, vec!["413", "227"]);
        assert!(CommandRequest::from_args(["--json"]).is_err());
    }
}
