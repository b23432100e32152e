//! Runs bounded completion seeded with only the short defining relations
//! and shows that it re-derives the full rule set, including the
//! length-4 rules the defining relations do not mention.
//!
//! Run with: cargo run --example complete_from_defining_relations

use chinese_monoid::gsbasis::{complete, CompletionBounds};
use chinese_monoid::rewriting::{chinese_rules, defining_rules};
use chinese_monoid::words::Alphabet;

fn main() {
    let alphabet = Alphabet::new(3);
    let seed = defining_rules(alphabet);
    println!("seeding completion with {} defining relations:", seed.rules().len());
    for rule in seed.rules() {
        println!("  {rule}");
    }

    let outcome = complete(&seed, &CompletionBounds::default());
    println!(
        "\ncompletion {} after {} passes, {} rules:",
        if outcome.converged { "converged" } else { "stopped" },
        outcome.passes,
        outcome.system.rules().len()
    );
    for rule in outcome.system.rules() {
        let discovered = !seed.rules().iter().any(|r| r.lhs() == rule.lhs());
        println!("  {rule}{}", if discovered { "   (discovered)" } else { "" });
    }

    let reference = chinese_rules(alphabet);
    let matches = outcome.system.rules().len() == reference.rules().len()
        && outcome
            .system
            .rules()
            .iter()
            .zip(reference.rules())
            .all(|(a, b)| a.lhs() == b.lhs() && a.rhs() == b.rhs());
    println!("\nmatches the built-in rule set: {matches}");
}
