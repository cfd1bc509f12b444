//! Command-line front end: algebra spec parsing, command execution, and the
//! machine-readable JSON report.

pub mod exec;
pub mod report;
pub mod spec;

use std::time::Instant;

use clap::Parser;

use exec::{run_command, Cli};

/// Quote arguments that contain whitespace so the echoed command line in the
/// report round-trips through the manifest tokenizer.
fn echo_of(args: &[String]) -> String {
    args.iter()
        .map(|a| {
            if a.is_empty() || a.chars().any(char::is_whitespace) {
                format!("\"{a}\"")
            } else {
                a.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parse `argv` (including the program name), run the command, print the JSON
/// report to stdout, and return the process exit code. Timing goes to stderr
/// so reports stay byte-identical across runs.
pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let echo = echo_of(&argv[1..]);
    let started = Instant::now();
    match run_command(cli.cmd, &echo, 0) {
        Ok((report, code)) => {
            print!("{}", report.to_json());
            eprintln!("# finished in {:.2?} (exit {code})", started.elapsed());
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::echo_of;

    #[test]
    fn echo_quotes_spaced_arguments() {
        let args = vec![
            "knit".to_string(),
            "nakayama 1 3".to_string(),
            "--max-dim".to_string(),
            "50".to_string(),
        ];
        assert_eq!(echo_of(&args), r#"knit "nakayama 1 3" --max-dim 50"#);
    }
}
