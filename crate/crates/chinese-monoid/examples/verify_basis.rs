//! Enumerates every ambiguity between the rewrite rules and checks that
//! each composition joins, which makes the rule set a Gröbner–Shirshov
//! basis. Also displays one overlap and both of its reductions.
//!
//! Run with: cargo run --example verify_basis

use chinese_monoid::gsbasis::{composition, enumerate_ambiguities, verify_gs};
use chinese_monoid::rewriting::chinese_rules;
use chinese_monoid::words::Alphabet;

fn main() {
    for n in 2..=5u32 {
        let system = chinese_rules(Alphabet::new(n));
        let report = verify_gs(&system);
        println!(
            "n={n}: {} rules, {report}{}",
            system.rules().len(),
            if report.is_basis() { " (basis)" } else { "" }
        );
    }

    // one ambiguity in detail: both one-step descendants of the overlap
    // reduce to the same word
    let system = chinese_rules(Alphabet::new(3));
    let ambiguity = &enumerate_ambiguities(&system)[0];
    let pair = composition(ambiguity);
    println!("\noverlap {} between {} and {}", ambiguity.overlap, ambiguity.left, ambiguity.right);
    println!("  left first:  {} -> {}", pair.p, system.normalize(&pair.p));
    println!("  right first: {} -> {}", pair.q, system.normalize(&pair.q));
}
