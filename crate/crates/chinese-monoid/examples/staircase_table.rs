//! Builds a staircase letter by letter and prints the exponent table
//! after every insertion, then spells the normal form back out.
//!
//! Run with: cargo run --example staircase_table

use chinese_monoid::staircase::Staircase;
use chinese_monoid::words::{parse_word, Alphabet};

fn main() {
    let alphabet = Alphabet::new(4);
    let word = parse_word("dbcab", alphabet).unwrap();
    println!("inserting {word} into an empty staircase\n");

    let mut staircase = Staircase::empty(alphabet);
    for (index, letter) in word.letters().iter().enumerate() {
        staircase.insert(*letter);
        println!("after letter {} of {}:", index + 1, word.len());
        print!("{staircase}");
        println!("  spells {}\n", staircase.to_word());
    }

    println!("normal form: {}", staircase.to_word());

    // every row lists the pair counts against earlier chain letters,
    // then the count of the letter standing alone on the diagonal
    let nested = Staircase::from_word(&parse_word("ddccbbaa", alphabet).unwrap());
    println!("\nstaircase of ddccbbaa:");
    print!("{nested}");
    println!("spells {}", nested.to_word());
}
