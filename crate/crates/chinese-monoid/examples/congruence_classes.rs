//! Explores congruence classes with the breadth-first oracle: lists the
//! classes of one small layer with their normal forms, then counts classes
//! per length.
//!
//! Run with: cargo run --example congruence_classes

use std::collections::HashSet;

use chinese_monoid::oracle::{congruence_class, count_classes};
use chinese_monoid::rewriting::normalize_chinese;
use chinese_monoid::words::{Alphabet, Letter, Word};

fn main() {
    let alphabet = Alphabet::new(2);
    let len = 3;
    println!("classes of the length-{len} layer over {} letters:", alphabet.size());

    let mut seen: HashSet<Word> = HashSet::new();
    for code in 0..alphabet.size().pow(len) {
        let mut c = code;
        let letters = (0..len)
            .map(|_| {
                let l = Letter(c % alphabet.size() + 1);
                c /= alphabet.size();
                l
            })
            .collect();
        let word = Word::new(letters, alphabet);
        if seen.contains(&word) {
            continue;
        }
        let class = congruence_class(&word).unwrap();
        let members: Vec<String> = class.members().iter().map(|m| m.to_string()).collect();
        println!(
            "  {{{}}} with normal form {}",
            members.join(", "),
            normalize_chinese(&word)
        );
        seen.extend(class.members().iter().cloned());
    }

    println!("\nclass counts over 3 letters:");
    let alphabet = Alphabet::new(3);
    for len in 0..=8 {
        println!("  length {len}: {}", count_classes(alphabet, len).unwrap());
    }
}
