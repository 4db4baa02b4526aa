use std::process::ExitCode;

use hrhlab::cli::{batch_exit_code, batch_lines, evaluate, run_batch, Config, Format};

const USAGE: &str = "usage: hrhlab <command> [--format=text|json]
       hrhlab --batch=FILE [--format=text|json]

commands:
  spectrum EXPR          spectrum, Milnor number and Hodge bins
  hrh EXPR               HRH level
  bsato EXPR             Bernstein-Sato roots and inequality checks
  det CASE k=v ...       determinantal variety (generic m= n= p=, skew-odd m= p=,
                         skew-even m= p=, symmetric n= p=)
  cone n=N h=[[p,q,v],...] | cone file=PATH
  toric rays=[[...],...]
  secant p1=BOOL vanishing=BOOL
  verify [--suite=all|spectrum|det|families]

EXPR := bp(a,b,...) | ts(EXPR,EXPR) | tuple(EXPR,EXPR)

exit codes: 0 ok, 2 invalid input or out of domain, 3 internal inconsistency
HRHLAB_MAX_MU caps the Milnor number of enumerated spectra (default 1000000)";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() || args.iter().any(|a| a == "-h" || a == "--help") {
        let code = if args.is_empty() { 2 } else { 0 };
        eprintln!("{USAGE}");
        return ExitCode::from(code);
    }
    let cfg = match Config::from_env() {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error[E_DOMAIN]: {e}");
            return ExitCode::from(2);
        }
    };

    let batch = args.iter().find_map(|a| a.strip_prefix("--batch="));
    if let Some(path) = batch {
        let mut format = Format::Text;
        for a in &args {
            match a.as_str() {
                "--format=json" => format = Format::Json,
                "--format=text" => format = Format::Text,
                _ if a.starts_with("--batch=") => {}
                _ => {
                    eprintln!("error[E_FLAG]: unexpected argument {a:?} in batch mode");
                    return ExitCode::from(2);
                }
            }
        }
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error[E_IO]: cannot read {path}: {e}");
                return ExitCode::from(2);
            }
        };
        let lines = batch_lines(&text);
        let outcomes = run_batch(&lines, format, &cfg, true);
        let sep = if format == Format::Json { "\n" } else { "\n\n" };
        let body: Vec<&str> = outcomes.iter().map(|o| o.output.as_str()).collect();
        if !body.is_empty() {
            println!("{}", body.join(sep));
        }
        return ExitCode::from(batch_exit_code(&outcomes) as u8);
    }

    let line = args.join(" ");
    let outcome = evaluate(&line, Format::Text, &cfg);
    if outcome.is_error {
        eprintln!("{}", outcome.output);
    } else {
        println!("{}", outcome.output);
    }
    ExitCode::from(outcome.exit_code as u8)
}
