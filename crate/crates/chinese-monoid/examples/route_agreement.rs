//! Cross-checks the three independent routes to a normal form on random
//! words: leftmost rewriting, staircase insertion, and (for short words)
//! the breadth-first congruence oracle.
//!
//! Run with: cargo run --example route_agreement

use chinese_monoid::oracle::congruent;
use chinese_monoid::rewriting::normalize_chinese;
use chinese_monoid::staircase::insertion_normal_form;
use chinese_monoid::words::{Alphabet, Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0u32;
    let mut oracle_checked = 0u32;

    for _ in 0..5_000 {
        let n = rng.random_range(1..=6u32);
        let len = rng.random_range(0..=24usize);
        let alphabet = Alphabet::new(n);
        let letters = (0..len)
            .map(|_| Letter(rng.random_range(1..=n)))
            .collect();
        let word = Word::new(letters, alphabet);

        let by_rewriting = normalize_chinese(&word);
        let by_insertion = insertion_normal_form(&word);
        assert_eq!(by_rewriting, by_insertion, "routes disagree on {word}");
        checked += 1;

        if len <= 9 {
            assert!(
                congruent(&word, &by_rewriting).unwrap(),
                "oracle rejects the normal form of {word}"
            );
            oracle_checked += 1;
        }
    }

    println!("rewriting and insertion agree on {checked} random words");
    println!("the oracle confirmed {oracle_checked} of the short ones");

    let word = Word::from_values(&[4, 2, 4, 1, 3, 3, 2], Alphabet::new(4));
    println!("\nexample: {word}");
    println!("  rewriting: {}", normalize_chinese(&word));
    println!("  insertion: {}", insertion_normal_form(&word));
}
