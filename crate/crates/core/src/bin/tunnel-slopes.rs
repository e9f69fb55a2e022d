use std::process::ExitCode;

use tunnel_slopes::cli::{run_command, CommandRequest};

fn main() -> ExitCode {
    let result =
        CommandRequest::from_args(std::env::args().skip(1)).and_then(|req| run_command(&req));
    match result {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code as u8)
        }
    }
}
