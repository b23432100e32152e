//! Shared support for the integration tests: the complete catalog of
//! ambiguity shapes between the five rule schemas, a pattern matcher that
//! classifies a concrete ambiguity against the catalog, and small word
//! generators.
#![allow(dead_code)]

use chinese_monoid::rewriting::Rule;
use chinese_monoid::words::{Alphabet, Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Symbolic letters used by the catalog patterns. Order of declaration is
/// arbitrary; only the strict inequalities listed per row relate them.
pub const I: u8 = 0;
pub const J: u8 = 1;
pub const K: u8 = 2;
pub const J1: u8 = 3;
pub const K1: u8 = 4;

/// One overlap shape between two rule schemas: the overlap word as a
/// symbolic pattern plus the strict inequalities its letters satisfy.
/// Symbols not related by a listed inequality are unconstrained, so one
/// concrete ambiguity is matched by unifying the pattern letterwise and
/// then checking only the listed conditions.
pub struct SchemaRow {
    pub id: usize,
    pub left_type: u8,
    pub right_type: u8,
    pub pattern: &'static [u8],
    /// Pairs (greater, lesser), each meaning a strict inequality.
    pub strict: &'static [(u8, u8)],
}

/// Every overlap shape that exists between the five schemas. Rows are
/// grouped by the left rule's schema; within a group the right schema
/// and the overlap length vary. There is no pair of distinct rows with
/// the same schema pair and the same pattern length, so a concrete
/// ambiguity matches exactly one row.
pub const CATALOG: &[SchemaRow] = &[
    SchemaRow { id: 1, left_type: 1, right_type: 1, pattern: &[I, J, K, K1], strict: &[(I, J), (J, K), (K, K1)] },
    SchemaRow { id: 2, left_type: 1, right_type: 1, pattern: &[I, J, K, J1, K1], strict: &[(I, J), (J, K), (K, J1), (J1, K1)] },
    SchemaRow { id: 3, left_type: 1, right_type: 2, pattern: &[I, J, J1, K], strict: &[(I, J), (J, K), (K, J1)] },
    SchemaRow { id: 4, left_type: 1, right_type: 2, pattern: &[I, J, K, J1, K1], strict: &[(I, J), (J, K), (K, K1), (K1, J1)] },
    SchemaRow { id: 5, left_type: 1, right_type: 3, pattern: &[I, J, K, K], strict: &[(I, J), (J, K)] },
    SchemaRow { id: 6, left_type: 1, right_type: 3, pattern: &[I, J, K, J1, J1], strict: &[(I, J), (J, K), (K, J1)] },
    SchemaRow { id: 7, left_type: 1, right_type: 4, pattern: &[I, J, K, K, J1], strict: &[(I, J), (J, K), (K, J1)] },
    SchemaRow { id: 8, left_type: 1, right_type: 5, pattern: &[I, J, K, J, K1], strict: &[(I, J), (J, K), (K, K1)] },
    SchemaRow { id: 9, left_type: 1, right_type: 5, pattern: &[I, J, K, J1, K, K1], strict: &[(I, J), (J, K), (K, J1), (J1, K1)] },
    SchemaRow { id: 10, left_type: 2, right_type: 1, pattern: &[I, K, J, J1, K1], strict: &[(I, J), (J, K), (J, J1), (J1, K1)] },
    SchemaRow { id: 11, left_type: 2, right_type: 2, pattern: &[I, K, J, K1, J1], strict: &[(I, J), (J, K), (J, J1), (J1, K1)] },
    SchemaRow { id: 12, left_type: 2, right_type: 3, pattern: &[I, K, J, J1, J1], strict: &[(I, J), (J, K), (J, J1)] },
    SchemaRow { id: 13, left_type: 2, right_type: 4, pattern: &[I, K, J, J, J1], strict: &[(I, J), (J, K), (J, J1)] },
    SchemaRow { id: 14, left_type: 2, right_type: 5, pattern: &[I, K, J, J1, J, K1], strict: &[(I, J), (J, K), (J, J1), (J1, K1)] },
    SchemaRow { id: 15, left_type: 3, right_type: 1, pattern: &[I, J, J, J1, K1], strict: &[(I, J), (J, J1), (J1, K1)] },
    SchemaRow { id: 16, left_type: 3, right_type: 2, pattern: &[I, J, J, K1, J1], strict: &[(I, J), (J, J1), (J1, K1)] },
    SchemaRow { id: 17, left_type: 3, right_type: 3, pattern: &[I, J, J, J1, J1], strict: &[(I, J), (J, J1)] },
    SchemaRow { id: 18, left_type: 3, right_type: 4, pattern: &[I, J, J, J1], strict: &[(I, J), (J, J1)] },
    SchemaRow { id: 19, left_type: 3, right_type: 5, pattern: &[I, J, J, J1, J, K1], strict: &[(I, J), (J, J1), (J1, K1)] },
    SchemaRow { id: 20, left_type: 4, right_type: 1, pattern: &[I, I, J, K], strict: &[(I, J), (J, K)] },
    SchemaRow { id: 21, left_type: 4, right_type: 1, pattern: &[I, I, J, J1, K1], strict: &[(I, J), (J, J1), (J1, K1)] },
    SchemaRow { id: 22, left_type: 4, right_type: 2, pattern: &[I, I, J, J1], strict: &[(I, J1), (J1, J)] },
    SchemaRow { id: 23, left_type: 4, right_type: 2, pattern: &[I, I, J, K1, J1], strict: &[(I, J), (J, J1), (J1, K1)] },
    SchemaRow { id: 24, left_type: 4, right_type: 3, pattern: &[I, I, J, J], strict: &[(I, J)] },
    SchemaRow { id: 25, left_type: 4, right_type: 3, pattern: &[I, I, J, J1, J1], strict: &[(I, J), (J, J1)] },
    SchemaRow { id: 26, left_type: 4, right_type: 4, pattern: &[I, I, J, J, J1], strict: &[(I, J), (J, J1)] },
    SchemaRow { id: 27, left_type: 4, right_type: 5, pattern: &[I, I, J, I, J1], strict: &[(I, J), (J, J1)] },
    SchemaRow { id: 28, left_type: 4, right_type: 5, pattern: &[I, I, J, K1, J, J1], strict: &[(I, J), (J, K1), (K1, J1)] },
    SchemaRow { id: 29, left_type: 5, right_type: 1, pattern: &[I, J, I, K, K1], strict: &[(I, J), (J, K), (K, K1)] },
    SchemaRow { id: 30, left_type: 5, right_type: 1, pattern: &[I, J, I, K, J1, K1], strict: &[(I, J), (J, K), (K, J1), (J1, K1)] },
    SchemaRow { id: 31, left_type: 5, right_type: 2, pattern: &[I, J, I, K, J1], strict: &[(I, J), (J, K), (I, J1), (J1, K)] },
    SchemaRow { id: 32, left_type: 5, right_type: 2, pattern: &[I, J, I, K, K1, J1], strict: &[(I, J), (J, K), (K, J1), (J1, K1)] },
    SchemaRow { id: 33, left_type: 5, right_type: 3, pattern: &[I, J, I, K, K], strict: &[(I, J), (J, K)] },
    SchemaRow { id: 34, left_type: 5, right_type: 3, pattern: &[I, J, I, K, J1, J1], strict: &[(I, J), (J, K), (K, J1)] },
    SchemaRow { id: 35, left_type: 5, right_type: 4, pattern: &[I, J, I, K, K, J1], strict: &[(I, J), (J, K), (K, J1)] },
    SchemaRow { id: 36, left_type: 5, right_type: 5, pattern: &[I, J, I, K, I, K1], strict: &[(I, J), (J, K), (K, K1)] },
    SchemaRow { id: 37, left_type: 5, right_type: 5, pattern: &[I, J, I, K, J1, K, K1], strict: &[(I, J), (J, K), (K, J1), (J1, K1)] },
    SchemaRow { id: 38, left_type: 3, right_type: 4, pattern: &[I, J, J, J, J1], strict: &[(I, J), (J, J1)] },
];

/// Classifies a rule of the Chinese system by the shape of its left-hand
/// side. Returns 1..=5, panicking on any other shape.
pub fn rule_type(rule: &Rule) -> u8 {
    let p: Vec<Letter> = rule.lhs().letters().to_vec();
    match p.len() {
        3 => {
            if p[0] > p[1] && p[1] > p[2] {
                1
            } else if p[0] > p[2] && p[2] > p[1] {
                2
            } else if p[1] == p[2] && p[0] > p[1] {
                3
            } else if p[0] == p[1] && p[0] > p[2] {
                4
            } else {
                panic!("rule {rule} has no schema shape");
            }
        }
        4 if p[0] == p[2] && p[0] > p[1] && p[1] > p[3] => 5,
        _ => panic!("rule {rule} has no schema shape"),
    }
}

/// Whether the overlap word fits the row's pattern: symbols unify
/// consistently with the letters and every listed inequality holds.
pub fn matches_row(row: &SchemaRow, overlap: &Word) -> bool {
    let letters = overlap.letters();
    if letters.len() != row.pattern.len() {
        return false;
    }
    let mut binding: [Option<Letter>; 5] = [None; 5];
    for (&symbol, &letter) in row.pattern.iter().zip(letters) {
        match binding[symbol as usize] {
            None => binding[symbol as usize] = Some(letter),
            Some(bound) if bound == letter => {}
            Some(_) => return false,
        }
    }
    row.strict.iter().all(|&(greater, lesser)| {
        binding[greater as usize].unwrap() > binding[lesser as usize].unwrap()
    })
}

/// The unique catalog row matching an ambiguity, or None.
pub fn classify_overlap(left: &Rule, right: &Rule, overlap: &Word) -> Option<&'static SchemaRow> {
    let lt = rule_type(left);
    let rt = rule_type(right);
    let mut hits = CATALOG
        .iter()
        .filter(|row| row.left_type == lt && row.right_type == rt && matches_row(row, overlap));
    let first = hits.next()?;
    assert!(
        hits.next().is_none(),
        "overlap {overlap} matched more than one catalog row"
    );
    Some(first)
}

/// All words of exactly `len` letters over the alphabet, in lexicographic
/// order.
pub fn all_words(alphabet: Alphabet, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = vec![Letter(1); len];
    loop {
        out.push(Word::new(current.clone(), alphabet));
        // odometer increment
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if current[pos].0 < alphabet.size() {
                current[pos].0 += 1;
                break;
            }
            current[pos].0 = 1;
        }
    }
}

/// A deterministic random word of exactly `len` letters.
pub fn random_word(rng: &mut ChaCha8Rng, alphabet: Alphabet, len: usize) -> Word {
    let letters = (0..len)
        .map(|_| Letter(rng.random_range(1..=alphabet.size())))
        .collect();
    Word::new(letters, alphabet)
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
