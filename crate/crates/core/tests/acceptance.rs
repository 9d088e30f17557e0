use std::process::ExitCode;

use kkmforge::acceptance::{run_criterion, AcceptanceConfig, CRITERIA};

fn main() -> ExitCode {
    let cfg = AcceptanceConfig::default();
    let mut failed = Vec::new();
    for id in 1..=CRITERIA.len() {
        let result = run_criterion(id, &cfg);
        println!("{}", result.line());
        if !result.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", CRITERIA.len(), CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
