//! The staircase representation of Chinese normal forms and right
//! insertion, a second route to normal forms that never rewrites.
//!
//! A staircase over a strictly increasing chain of letters `x_1 < … < x_m`
//! holds a triangular array of exponents `t[r][c]` (`c <= r`). It spells
//! the word `w_1 w_2 … w_m` where row `r` contributes
//!
//! ```text
//! w_r = (x_r x_1)^t[r][0] (x_r x_2)^t[r][1] … (x_r x_{r-1})^t[r][r-1] x_r^t[r][r]
//! ```
//!
//! Spelled staircases are exactly the words irreducible under the Chinese
//! rule set, and inserting the letters of any word into an empty staircase
//! yields its normal form.

use std::fmt;

use crate::words::{format_letter, Alphabet, Letter, Word};

/// A canonical staircase: a chain of letters with triangular exponents.
/// Every chain letter occurs in the spelled word, so structural equality
/// coincides with spelled-word equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Staircase {
    alphabet: Alphabet,
    chain: Vec<Letter>,
    /// `rows[r]` has length `r + 1`; `rows[r][c]` with `c < r` counts pairs
    /// `(chain[r], chain[c])`, and `rows[r][r]` counts lone `chain[r]`.
    rows: Vec<Vec<u32>>,
}

impl Staircase {
    pub fn empty(alphabet: Alphabet) -> Self {
        Staircase {
            alphabet,
            chain: Vec::new(),
            rows: Vec::new(),
        }
    }

    /// Builds a staircase from explicit parts. Panics unless the chain is
    /// strictly increasing within the alphabet and row `r` has `r + 1`
    /// entries. The result is not canonicalized; use [`Staircase::insert`]
    /// or [`Staircase::from_word`] for canonical staircases.
    pub fn from_parts(alphabet: Alphabet, chain: Vec<Letter>, rows: Vec<Vec<u32>>) -> Self {
        assert!(
            chain.windows(2).all(|w| w[0] < w[1]),
            "chain must be strictly increasing"
        );
        assert!(
            chain.iter().all(|&l| alphabet.contains(l)),
            "chain letter outside the alphabet"
        );
        assert_eq!(chain.len(), rows.len(), "one row per chain letter");
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), r + 1, "row {r} must have {} entries", r + 1);
        }
        Staircase {
            alphabet,
            chain,
            rows,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn chain(&self) -> &[Letter] {
        &self.chain
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Length of the spelled word: `Σ_r (t[r][r] + Σ_{c<r} 2 t[r][c])`.
    pub fn spelled_len(&self) -> usize {
        self.rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row[..r].iter().map(|&t| 2 * t as usize).sum::<usize>() + row[r] as usize
            })
            .sum()
    }

    /// Spells the staircase word `w_1 w_2 … w_m`.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.spelled_len());
        for (r, row) in self.rows.iter().enumerate() {
            let dominant = self.chain[r];
            for (c, &count) in row.iter().enumerate().take(r) {
                for _ in 0..count {
                    letters.push(dominant);
                    letters.push(self.chain[c]);
                }
            }
            for _ in 0..row[r] {
                letters.push(dominant);
            }
        }
        Word::new(letters, self.alphabet)
    }

    /// Whether every chain letter occurs in the spelled word, through its
    /// own row or as the second letter of a pair in a later row.
    pub fn is_canonical(&self) -> bool {
        (0..self.chain.len()).all(|r| self.letter_occurs(r))
    }

    fn letter_occurs(&self, r: usize) -> bool {
        self.rows[r].iter().any(|&t| t > 0)
            || (r + 1..self.chain.len()).any(|r2| self.rows[r2][r] > 0)
    }

    /// Right insertion: afterwards the staircase spells a word congruent to
    /// the old spelled word followed by `x`, and the spelled length grows
    /// by exactly one.
    ///
    /// If `x` is not on the chain it first joins with an all-zero row at
    /// its sorted position; this one step subsumes both appending a new
    /// maximal letter and prepending a new minimal one, and extends the
    /// insertion to letters lying strictly between chain letters.
    pub fn insert(&mut self, x: Letter) {
        assert!(
            self.alphabet.contains(x),
            "letter {} outside alphabet 1..={}",
            x.0,
            self.alphabet.size()
        );
        let k = match self.chain.binary_search(&x) {
            Ok(k) => k,
            Err(pos) => {
                self.chain.insert(pos, x);
                self.rows.insert(pos, vec![0; pos + 1]);
                for row in &mut self.rows[pos + 1..] {
                    row.insert(pos, 0);
                }
                pos
            }
        };
        self.insert_chain_letter(self.chain.len() - 1, k);
        self.prune();
        debug_assert!(self.is_canonical());
    }

    /// Inserts `chain[k]` into the staircase restricted to rows `0..=last`
    /// (`k <= last`). Rows above `last` are already settled.
    fn insert_chain_letter(&mut self, last: usize, k: usize) {
        if k == last {
            self.rows[last][last] += 1;
            return;
        }
        // the largest column of the last row with a nonzero entry,
        // diagonal included
        let hot = (0..=last).rev().find(|&c| self.rows[last][c] > 0);
        match hot {
            // the last row is empty, or the inserted letter is at least as
            // large as everything recorded there: it slides past this row
            None => self.insert_chain_letter(last - 1, k),
            Some(hot) if k >= hot => self.insert_chain_letter(last - 1, k),
            // the inserted letter displaces the partner of the last pair,
            // which moves one prefix inward
            Some(hot) if hot < last => {
                self.rows[last][hot] -= 1;
                self.rows[last][k] += 1;
                self.insert_chain_letter(last - 1, hot);
            }
            // the trailing pure run donates one dominant to a new pair
            Some(_) => {
                self.rows[last][last] -= 1;
                self.rows[last][k] += 1;
            }
        }
    }

    /// Drops chain letters that no longer occur. Insertion conserves every
    /// letter's multiplicity, so after inserting into a canonical staircase
    /// this is a no-op; it guards staircases built from raw parts.
    fn prune(&mut self) {
        let keep: Vec<bool> = (0..self.chain.len())
            .map(|r| self.letter_occurs(r))
            .collect();
        if keep.iter().all(|&b| b) {
            return;
        }
        let mut chain = Vec::new();
        let mut rows = Vec::new();
        for r in 0..self.chain.len() {
            if !keep[r] {
                continue;
            }
            chain.push(self.chain[r]);
            let row: Vec<u32> = (0..=r).filter(|&c| keep[c]).map(|c| self.rows[r][c]).collect();
            rows.push(row);
        }
        self.chain = chain;
        self.rows = rows;
    }

    /// Folds [`Staircase::insert`] over the letters of `word`, starting
    /// empty. The result spells the Chinese normal form of `word`.
    pub fn from_word(word: &Word) -> Self {
        let mut staircase = Staircase::empty(word.alphabet());
        for &letter in word.letters() {
            staircase.insert(letter);
        }
        staircase
    }
}

/// Renders the triangular exponent table, one row per chain letter.
impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            let entries: Vec<String> = row.iter().map(|t| t.to_string()).collect();
            writeln!(
                f,
                "{}: {}",
                format_letter(self.chain[r], self.alphabet),
                entries.join(" ")
            )?;
        }
        Ok(())
    }
}

/// The normal form of `word` computed purely by staircase insertion.
pub fn insertion_normal_form(word: &Word) -> Word {
    Staircase::from_word(word).to_word()
}

/// Whether `word` already has the staircase shape: blocks with strictly
/// increasing dominant letters, each block some pairs `(d, y)` with `y < d`
/// and the partners non-decreasing left to right, then a pure run of `d`.
/// These are exactly the words irreducible under the Chinese rule set.
pub fn is_staircase_word(word: &Word) -> bool {
    let letters = word.letters();
    let mut p = 0;
    let mut prev_dominant: Option<Letter> = None;
    while p < letters.len() {
        let d = letters[p];
        if prev_dominant.is_some_and(|pd| d <= pd) {
            return false;
        }
        let mut prev_partner: Option<Letter> = None;
        while p < letters.len() && letters[p] == d {
            if p + 1 < letters.len() && letters[p + 1] < d {
                // a pair (d, y); partners must not decrease
                let y = letters[p + 1];
                if prev_partner.is_some_and(|py| y < py) {
                    return false;
                }
                prev_partner = Some(y);
                p += 2;
            } else {
                // the trailing pure run of the dominant ends the block
                while p < letters.len() && letters[p] == d {
                    p += 1;
                }
                break;
            }
        }
        prev_dominant = Some(d);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewriting::{chinese_rules, is_irreducible_chinese};
    use crate::words::parse_word;

    fn w(text: &str, n: u32) -> Word {
        parse_word(text, Alphabet::new(n)).unwrap()
    }

    fn fold(text: &str, n: u32) -> Staircase {
        Staircase::from_word(&w(text, n))
    }

    #[test]
    fn spells_explicit_staircases() {
        let a3 = Alphabet::new(3);
        let single = Staircase::from_parts(a3, vec![Letter(1)], vec![vec![3]]);
        assert_eq!(single.to_word(), w("aaa", 3));

        let pair = Staircase::from_parts(a3, vec![Letter(1), Letter(3)], vec![vec![0], vec![1, 0]]);
        assert_eq!(pair.to_word(), w("ca", 3));
        // the letter a occurs only through the pair (c, a); still canonical
        assert!(pair.is_canonical());

        let two_rows =
            Staircase::from_parts(a3, vec![Letter(2), Letter(3)], vec![vec![1], vec![1, 0]]);
        assert_eq!(two_rows.to_word(), w("bcb", 3));
    }

    #[test]
    fn inserts_into_known_staircases() {
        // spelled "c", insert a: the run donates its dominant to a pair
        let mut s = fold("c", 3);
        s.insert(Letter(1));
        assert_eq!(s.to_word(), w("ca", 3));

        // single-letter inserts grow rows
        let mut s = Staircase::empty(Alphabet::new(2));
        s.insert(Letter(2));
        assert_eq!(s.chain(), &[Letter(2)]);
        assert_eq!(s.rows(), &[vec![1]]);
        assert_eq!(s.to_word(), w("b", 2));
    }

    #[test]
    fn folds_known_words() {
        for (input, expected, n) in [
            ("cba", "bca", 3),
            ("ccb", "cbc", 3),
            ("cab", "bca", 3),
            ("cbca", "cacb", 3),
            ("bcba", "bbca", 3),
            ("aaccb", "aacbc", 3),
            ("bdc", "bdc", 4),
            ("bdcc", "bcdc", 4),
            ("dbb", "bdb", 4),
            ("dac", "cda", 4),
            ("", "", 3),
        ] {
            assert_eq!(fold(input, n).to_word(), w(expected, n), "input {input}");
        }
    }

    #[test]
    fn insertion_matches_rewriting_on_small_words() {
        let n = 3u32;
        let system = chinese_rules(Alphabet::new(n));
        let mut stack = vec![Vec::new()];
        while let Some(letters) = stack.pop() {
            let word = Word::new(
                letters.iter().map(|&v| Letter(v)).collect(),
                Alphabet::new(n),
            );
            assert_eq!(
                insertion_normal_form(&word),
                system.normalize(&word),
                "word {word}"
            );
            if letters.len() < 5 {
                for v in 1..=n {
                    let mut next = letters.clone();
                    next.push(v);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn insert_grows_spelled_length_by_one() {
        let alphabet = Alphabet::new(4);
        let mut s = Staircase::empty(alphabet);
        for (step, &v) in [3, 2, 3, 1, 4, 1, 2, 2, 4, 3].iter().enumerate() {
            s.insert(Letter(v));
            assert_eq!(s.spelled_len(), step + 1);
            assert!(s.is_canonical());
        }
    }

    #[test]
    fn prune_drops_unused_letters() {
        let a3 = Alphabet::new(3);
        let mut padded = Staircase::from_parts(
            a3,
            vec![Letter(1), Letter(2), Letter(3)],
            vec![vec![0], vec![0, 1], vec![0, 0, 0]],
        );
        assert!(!padded.is_canonical());
        // inserting anything canonicalizes on the way out
        padded.insert(Letter(2));
        assert!(padded.is_canonical());
        assert_eq!(padded.chain(), &[Letter(2)]);
        assert_eq!(padded.to_word(), w("bb", 3));
    }

    #[test]
    fn recognizes_staircase_words() {
        for (text, expected) in [
            ("", true),
            ("a", true),
            ("bca", true),
            ("bcb", true),
            ("cacb", true),
            ("caca", true),
            ("abc", true),
            ("acb", true),
            ("cba", false),
            ("cab", false),
            ("cbca", false),
            ("bba", false),
            ("baa", false),
            ("ccb", false),
        ] {
            assert_eq!(is_staircase_word(&w(text, 3)), expected, "word {text}");
        }
    }

    #[test]
    fn staircase_words_are_exactly_the_irreducibles() {
        let n = 3u32;
        let alphabet = Alphabet::new(n);
        let mut stack = vec![Vec::new()];
        while let Some(letters) = stack.pop() {
            let word = Word::new(letters.iter().map(|&v| Letter(v)).collect(), alphabet);
            assert_eq!(
                is_staircase_word(&word),
                is_irreducible_chinese(&word),
                "word {word}"
            );
            if letters.len() < 6 {
                for v in 1..=n {
                    let mut next = letters.clone();
                    next.push(v);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn canonical_staircases_round_trip() {
        // every canonical staircase of spelled length <= 7 over 3 letters
        let n = 3u32;
        let alphabet = Alphabet::new(n);
        let max_len = 7usize;
        let mut checked = 0usize;
        let chains = subsets(n);
        for chain in chains {
            let cells: usize = (1..=chain.len()).sum();
            for assignment in assignments(cells, max_len, &chain) {
                let s = Staircase::from_parts(alphabet, chain.clone(), assignment);
                if !s.is_canonical() || s.spelled_len() > max_len {
                    continue;
                }
                let back = Staircase::from_word(&s.to_word());
                assert_eq!(back, s, "round trip of {}", s.to_word());
                assert!(is_staircase_word(&s.to_word()));
                checked += 1;
            }
        }
        assert!(checked > 100, "enumeration looks too small: {checked}");
    }

    fn subsets(n: u32) -> Vec<Vec<Letter>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let chain: Vec<Letter> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).map(Letter).collect();
            out.push(chain);
        }
        out
    }

    /// All exponent assignments for a chain with `cells` triangular cells,
    /// bounded so the spelled length cannot exceed `budget`.
    fn assignments(cells: usize, budget: usize, chain: &[Letter]) -> Vec<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        let mut flat = vec![0u32; cells];
        fill(&mut flat, 0, budget as u32, chain, &mut out);
        out
    }

    fn fill(
        flat: &mut Vec<u32>,
        idx: usize,
        budget: u32,
        chain: &[Letter],
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if idx == flat.len() {
            let mut rows = Vec::new();
            let mut at = 0;
            for r in 0..chain.len() {
                rows.push(flat[at..at + r + 1].to_vec());
                at += r + 1;
            }
            out.push(rows);
            return;
        }
        for v in 0..=budget {
            flat[idx] = v;
            fill(flat, idx + 1, budget - v, chain, out);
        }
        flat[idx] = 0;
    }
}
