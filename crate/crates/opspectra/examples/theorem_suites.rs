//! Runs every named verification suite at desk scale and prints one line
//! per check, exactly as `opspectra verify-theorems --suite all` does.
//!
//! Run with `cargo run --release --example theorem_suites`.

use opspectra::report::{run_suite, SuiteParams, SUITES};

fn main() {
    let params = SuiteParams::default();
    let mut all_pass = true;
    for name in SUITES {
        let rep = run_suite(name, &params).unwrap();
        println!("suite {name}: {}", if rep.pass { "PASS" } else { "FAIL" });
        for check in &rep.checks {
            println!(
                "  [{}] {} — {}",
                if check.pass { "ok" } else { "XX" },
                check.name,
                check.detail
            );
        }
        all_pass &= rep.pass;
    }
    if !all_pass {
        println!("\nnote: the g2 lines fail by design of the sweep: the documented");
        println!("range asserts the strict bound for s up to 8 from n = 37, but it");
        println!("provably holds iff n > s^2 + s + 1 (equality exactly at that order).");
        std::process::exit(2);
    }
}
