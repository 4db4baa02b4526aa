//! Acceptance criteria 1-10. Prints one line per criterion and fails the
//! target if any criterion fails or the whole run exceeds the time budget.
//! Every comparison is exact (tolerance 0).

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hrhlab::cli::verify::{run_criterion, SEED};
use hrhlab::cli::Config;

const BUDGET: Duration = Duration::from_secs(60);

fn main() -> ExitCode {
    let cfg = Config::default();
    let start = Instant::now();
    let mut failed = 0;
    println!("acceptance (seed {SEED:#x}, tolerance exact)");
    for id in 1..=10 {
        let t = Instant::now();
        let r = run_criterion(id, &cfg);
        let status = if r.passed { "PASS" } else { "FAIL" };
        if !r.passed {
            failed += 1;
        }
        println!(
            "criterion {:>2}: {status} - {} [{}] ({:.2}s)",
            r.id,
            r.name,
            r.detail,
            t.elapsed().as_secs_f64()
        );
    }
    let total = start.elapsed();
    let in_budget = total <= BUDGET;
    println!(
        "total: {:.2}s (budget {}s) {}",
        total.as_secs_f64(),
        BUDGET.as_secs(),
        if in_budget { "PASS" } else { "FAIL" }
    );
    if failed == 0 && in_budget {
        println!("test result: ok. 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("test result: FAILED. {failed} criteria failed");
        ExitCode::FAILURE
    }
}
