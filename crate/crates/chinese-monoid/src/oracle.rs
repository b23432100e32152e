//! Brute-force ground truth for the Chinese congruence, independent of the
//! rule set and of staircase insertion: breadth-first closure under the
//! defining relations, applied as undirected factor replacements.
//!
//! The defining relations all have length three on both sides, so every
//! class is finite and sits inside one length layer; that bounds the
//! search a priori and is asserted defensively during the walk.

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::words::{Alphabet, Letter, Word};

/// Default cap on the length of words whose class is enumerated.
pub const DEFAULT_MAX_CLASS_WORD_LEN: usize = 10;

/// Default cap on `n^len` for whole-layer enumeration.
pub const DEFAULT_MAX_ENUMERATION: u64 = 10_000_000;

/// Refusals from the oracle; the brute force is deliberately bounded.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("word of length {len} exceeds the class enumeration limit {max}")]
    WordTooLong { len: usize, max: usize },
    #[error("enumerating {n}^{len} words exceeds the budget of {max}")]
    BudgetExceeded { n: u32, len: usize, max: u64 },
}

/// One congruence class: a representative and every word congruent to it,
/// sorted in deg-lex order. All members share one length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CongruenceClass {
    representative: Word,
    members: Vec<Word>,
}

impl CongruenceClass {
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a class always contains its representative
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.members
            .binary_search_by(|m| m.letters().cmp(word.letters()))
            .is_ok()
    }
}

/// The words reachable from `triple` by one defining relation, excluding
/// `triple` itself. The three-letter relation `i j k = i k j = j i k`
/// (`i > j > k`) acts as a 3-clique; the two-letter-shape relations
/// `i j j = j i j` and `i i j = i j i` (`i > j`) act as 2-cliques.
fn triple_partners(triple: [Letter; 3]) -> Vec<[Letter; 3]> {
    let [x, y, z] = triple;
    let partners = if x > y && y > z {
        vec![[x, z, y], [y, x, z]]
    } else if x > z && z > y {
        vec![[x, z, y], [z, x, y]]
    } else if y > x && x > z {
        vec![[y, x, z], [y, z, x]]
    } else if x == y && y > z {
        vec![[x, z, x]]
    } else if x > y && y == z {
        vec![[y, x, y]]
    } else if x == z && x > y {
        vec![[x, x, y]]
    } else if y > x && x == z {
        vec![[y, x, x]]
    } else {
        Vec::new()
    };
    debug_assert!(
        partners.iter().all(|p| {
            let mut a = *p;
            let mut b = triple;
            a.sort_unstable();
            b.sort_unstable();
            a == b && *p != triple
        }),
        "partners must permute the same letters"
    );
    partners
}

fn class_letters(start: &[Letter]) -> HashSet<Vec<Letter>> {
    let mut visited: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue: VecDeque<Vec<Letter>> = VecDeque::new();
    visited.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(current) = queue.pop_front() {
        for p in 0..current.len().saturating_sub(2) {
            let triple = [current[p], current[p + 1], current[p + 2]];
            for partner in triple_partners(triple) {
                let mut next = current.clone();
                next[p..p + 3].copy_from_slice(&partner);
                debug_assert_eq!(next.len(), current.len(), "relations preserve length");
                if !visited.contains(&next) {
                    visited.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    visited
}

/// The congruence class of `word` under the default length limit.
pub fn congruence_class(word: &Word) -> Result<CongruenceClass, OracleError> {
    congruence_class_with_limit(word, DEFAULT_MAX_CLASS_WORD_LEN)
}

/// The congruence class of `word`, refusing words longer than `max_len`.
pub fn congruence_class_with_limit(
    word: &Word,
    max_len: usize,
) -> Result<CongruenceClass, OracleError> {
    if word.len() > max_len {
        return Err(OracleError::WordTooLong {
            len: word.len(),
            max: max_len,
        });
    }
    let mut members: Vec<Word> = class_letters(word.letters())
        .into_iter()
        .map(|letters| Word::new(letters, word.alphabet()))
        .collect();
    // one length layer, so plain letterwise comparison is the deg-lex order
    members.sort_by(|a, b| a.letters().cmp(b.letters()));
    Ok(CongruenceClass {
        representative: word.clone(),
        members,
    })
}

/// Whether `u` and `v` are congruent, under the default length limit.
///
/// Words of different lengths or different letter multisets are reported
/// non-congruent outright (the relations preserve both), without touching
/// the limit.
pub fn congruent(u: &Word, v: &Word) -> Result<bool, OracleError> {
    congruent_with_limit(u, v, DEFAULT_MAX_CLASS_WORD_LEN)
}

/// Like [`congruent`] with an explicit length limit.
pub fn congruent_with_limit(u: &Word, v: &Word, max_len: usize) -> Result<bool, OracleError> {
    assert_eq!(
        u.alphabet(),
        v.alphabet(),
        "cannot compare words over different alphabets"
    );
    if u.len() != v.len() {
        return Ok(false);
    }
    let mut mu = u.letters().to_vec();
    let mut mv = v.letters().to_vec();
    mu.sort_unstable();
    mv.sort_unstable();
    if mu != mv {
        return Ok(false);
    }
    if u.len() > max_len {
        return Err(OracleError::WordTooLong {
            len: u.len(),
            max: max_len,
        });
    }
    // walk from u and stop as soon as v appears
    let target = v.letters();
    let mut visited: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue: VecDeque<Vec<Letter>> = VecDeque::new();
    visited.insert(u.letters().to_vec());
    queue.push_back(u.letters().to_vec());
    if u.letters() == target {
        return Ok(true);
    }
    while let Some(current) = queue.pop_front() {
        for p in 0..current.len().saturating_sub(2) {
            let triple = [current[p], current[p + 1], current[p + 2]];
            for partner in triple_partners(triple) {
                let mut next = current.clone();
                next[p..p + 3].copy_from_slice(&partner);
                if next == target {
                    return Ok(true);
                }
                if !visited.contains(&next) {
                    visited.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(false)
}

/// Counts the congruence classes among all words of length `len` over
/// `alphabet`, under the default enumeration budget.
pub fn count_classes(alphabet: Alphabet, len: usize) -> Result<u64, OracleError> {
    count_classes_with_budget(alphabet, len, DEFAULT_MAX_ENUMERATION)
}

/// Like [`count_classes`] with an explicit budget on `n^len`.
pub fn count_classes_with_budget(
    alphabet: Alphabet,
    len: usize,
    budget: u64,
) -> Result<u64, OracleError> {
    let n = alphabet.size();
    let total = (n as u64)
        .checked_pow(len as u32)
        .filter(|&t| t <= budget)
        .ok_or(OracleError::BudgetExceeded {
            n,
            len,
            max: budget,
        })?;
    // words of one length encode as base-n integers, least position first
    let encode = |letters: &[Letter]| -> u64 {
        letters
            .iter()
            .rev()
            .fold(0u64, |acc, l| acc * n as u64 + (l.0 - 1) as u64)
    };
    let mut visited = vec![false; total as usize];
    let mut classes = 0u64;
    for code in 0..total {
        if visited[code as usize] {
            continue;
        }
        classes += 1;
        let mut c = code;
        let mut letters = Vec::with_capacity(len);
        for _ in 0..len {
            letters.push(Letter((c % n as u64) as u32 + 1));
            c /= n as u64;
        }
        for member in class_letters(&letters) {
            visited[encode(&member) as usize] = true;
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use std::collections::BTreeSet;

    fn w(text: &str, n: u32) -> Word {
        parse_word(text, Alphabet::new(n)).unwrap()
    }

    fn class_set(text: &str, n: u32) -> BTreeSet<String> {
        congruence_class(&w(text, n))
            .unwrap()
            .members()
            .iter()
            .map(|m| m.to_string())
            .collect()
    }

    #[test]
    fn computes_known_classes() {
        let expected: BTreeSet<String> =
            ["cba", "bca", "cab"].iter().map(|s| s.to_string()).collect();
        assert_eq!(class_set("cba", 3), expected);

        let expected: BTreeSet<String> = ["baa", "aba"].iter().map(|s| s.to_string()).collect();
        assert_eq!(class_set("baa", 2), expected);

        let expected: BTreeSet<String> = ["ab"].iter().map(|s| s.to_string()).collect();
        assert_eq!(class_set("ab", 2), expected);
    }

    #[test]
    fn members_are_sorted_and_searchable() {
        let class = congruence_class(&w("cba", 3)).unwrap();
        let members: Vec<String> = class.members().iter().map(|m| m.to_string()).collect();
        assert_eq!(members, vec!["bca", "cab", "cba"]);
        assert!(class.contains(&w("cab", 3)));
        assert!(!class.contains(&w("abc", 3)));
        assert_eq!(class.representative(), &w("cba", 3));
    }

    #[test]
    fn decides_known_pairs() {
        assert_eq!(congruent(&w("bba", 2), &w("bab", 2)), Ok(true));
        assert_eq!(congruent(&w("ab", 2), &w("ba", 2)), Ok(false));
        assert_eq!(congruent(&w("cbca", 3), &w("cacb", 3)), Ok(true));
        assert_eq!(congruent(&w("cba", 3), &w("abc", 3)), Ok(false));
        assert_eq!(congruent(&w("", 3), &w("", 3)), Ok(true));
    }

    #[test]
    fn length_or_multiset_mismatch_is_decided_without_search() {
        // longer than any limit, but the lengths differ
        let long_a = Word::from_values(&[1; 40], Alphabet::new(2));
        let long_b = Word::from_values(&[1; 41], Alphabet::new(2));
        assert_eq!(congruent(&long_a, &long_b), Ok(false));
        // equal length, different multiset
        let u = Word::from_values(&[1; 40], Alphabet::new(2));
        let v = Word::from_values(&[2; 40], Alphabet::new(2));
        assert_eq!(congruent(&u, &v), Ok(false));
    }

    #[test]
    fn refuses_oversized_inputs() {
        let long = Word::from_values(&[1; 11], Alphabet::new(2));
        assert_eq!(
            congruence_class(&long).unwrap_err(),
            OracleError::WordTooLong { len: 11, max: 10 }
        );
        assert_eq!(
            congruent(&long, &long).unwrap_err(),
            OracleError::WordTooLong { len: 11, max: 10 }
        );
        assert_eq!(
            count_classes(Alphabet::new(10), 8).unwrap_err(),
            OracleError::BudgetExceeded {
                n: 10,
                len: 8,
                max: DEFAULT_MAX_ENUMERATION
            }
        );
    }

    #[test]
    fn counts_known_layers() {
        assert_eq!(count_classes(Alphabet::new(2), 3), Ok(6));
        assert_eq!(count_classes(Alphabet::new(2), 2), Ok(4));
        assert_eq!(count_classes(Alphabet::new(1), 5), Ok(1));
        assert_eq!(count_classes(Alphabet::new(3), 0), Ok(1));
    }

    #[test]
    fn classes_partition_and_closure_is_symmetric() {
        // exhaustive over all words of length 4 over three letters
        let alphabet = Alphabet::new(3);
        let mut all = Vec::new();
        for code in 0..81u32 {
            let mut c = code;
            let mut letters = Vec::new();
            for _ in 0..4 {
                letters.push(Letter(c % 3 + 1));
                c /= 3;
            }
            all.push(Word::new(letters, alphabet));
        }
        for u in &all {
            let cu = congruence_class(u).unwrap();
            for m in cu.members() {
                assert_eq!(m.len(), u.len());
                let cm = congruence_class(m).unwrap();
                assert_eq!(cm.members(), cu.members(), "closure from {m} vs {u}");
            }
        }
    }
}
