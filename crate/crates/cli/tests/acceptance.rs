//! Acceptance criteria A1 to A17, one pass/fail line each.
//!
//! Tolerances: spectral spanning-tree counts 1e-6 relative; cycle and simplex
//! spectra 1e-9; derangement probability 1e-3 from 1/e; density-law moments
//! 1e-8 for k <= 8; Stieltjes inversion 2e-2 at t = 1e-3; closure span
//! containment at rank tolerance 1e-8; heat mass 1e-12. Everything else is
//! exact. Randomized suites use seed 0.

use std::process::ExitCode;

use gsym::corpus::{run_all, select, Corpus};

fn main() -> ExitCode {
    let corpus = Corpus::default();
    let report = run_all(&select(None), &corpus, false);
    println!("acceptance (seed {})", corpus.seed);
    for r in &report.criteria {
        println!("{}", r.line());
    }
    let passed = report.criteria.len() - report.failed.len();
    println!("{passed}/{} criteria pass", report.criteria.len());
    if report.pass {
        ExitCode::SUCCESS
    } else {
        println!("failing: {}", report.failed.join(", "));
        ExitCode::FAILURE
    }
}
