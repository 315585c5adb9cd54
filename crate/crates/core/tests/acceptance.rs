//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are printed as FAIL with their detail
//! and do not stop the run; any other failure exits nonzero.

use embdist::verify::{self, VerifyOptions, TITLES};

/// Reference values that the computation does not reproduce; see the README.
const KNOWN_FAILURES: [u8; 3] = [2, 5, 13];

fn main() {
    let opts = VerifyOptions::default();
    let mut unexpected = Vec::new();
    for id in 1..=TITLES.len() as u8 {
        let check = verify::criterion(id, &opts);
        println!("{check}");
        if !check.passed && !KNOWN_FAILURES.contains(&id) {
            unexpected.push(id);
        }
        if check.passed && KNOWN_FAILURES.contains(&id) {
            println!("        note: criterion {id} is listed as a known failure but passed");
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria outside {KNOWN_FAILURES:?} passed");
    } else {
        println!("acceptance: unexpected failures {unexpected:?}");
        std::process::exit(1);
    }
}
