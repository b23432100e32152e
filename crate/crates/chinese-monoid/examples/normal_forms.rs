//! Computes normal forms by leftmost rewriting and prints the full
//! reduction trace for a few words.
//!
//! Run with: cargo run --example normal_forms

use chinese_monoid::rewriting::normalize_chinese_with_steps;
use chinese_monoid::words::{parse_word, Alphabet};

fn main() {
    let alphabet = Alphabet::new(4);
    for text in ["cba", "cab", "dcba", "cbacba", "ddccbbaa"] {
        let word = parse_word(text, alphabet).unwrap();
        let (normal_form, trace) = normalize_chinese_with_steps(&word);
        println!("{word}");
        for step in &trace[1..] {
            println!("  -> {step}");
        }
        println!("  normal form: {normal_form} ({} steps)", trace.len() - 1);
        println!();
    }

    // congruent words reduce to the same normal form
    let u = parse_word("cab", alphabet).unwrap();
    let v = parse_word("cba", alphabet).unwrap();
    let (nf_u, _) = normalize_chinese_with_steps(&u);
    let (nf_v, _) = normalize_chinese_with_steps(&v);
    println!("{u} and {v} are congruent: {}", nf_u == nf_v);
}
