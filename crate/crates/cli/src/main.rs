use std::io::{self, Write};
use std::process::ExitCode;

use seifert_fill_cli::{parse_args, run};

fn main() -> ExitCode {
    let cli = match parse_args(std::env::args_os()) {
        Ok(cli) => cli,
        Err(outcome) => return outcome.emit(),
    };
    let stdin = io::stdin();
    let outcome = run(&cli, &mut stdin.lock());
    let code = outcome.emit();
    io::stdout().flush().ok();
    code
}
