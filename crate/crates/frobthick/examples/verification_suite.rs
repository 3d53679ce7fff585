//! Every named check in one run: closed-form thresholds, uniform bounds on
//! a randomized smooth corpus, sharpness on both sides, and the colon
//! identity, each recomputed and compared rather than assumed.
//!
//! This demo trims the randomized corpus to two samples per cell so it
//! finishes in seconds; `frobthick verify` (or the acceptance test) runs
//! the full default corpus.

use frobthick::verify::{run_check_with, CheckId, CheckParams};

fn main() {
    let params = CheckParams { primes: None, randoms_per_cell: Some(2) };
    let mut all_passed = true;
    for id in CheckId::ALL {
        let outcome = run_check_with(id, 2026, &params);
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} {:<24} {:>6} cases {:>8.1?}  {}",
            id.name(),
            outcome.cases,
            outcome.elapsed,
            if outcome.passed { id.describe() } else { outcome.detail.as_str() }
        );
        all_passed &= outcome.passed;
    }
    if !all_passed {
        std::process::exit(1);
    }
}
