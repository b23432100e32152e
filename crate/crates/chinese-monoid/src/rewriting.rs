//! Rewriting systems over words, the Chinese-monoid rule set, and
//! normalization by leftmost reduction.
//!
//! Two normalizers coexist deliberately. [`RewriteSystem::normalize`] walks
//! an explicit rule list and works for any system, including ones loaded
//! from files or produced by completion. [`normalize_chinese`] recognizes
//! the five Chinese rule schemas directly from letter comparisons and needs
//! no instantiated rules, so it scales to arbitrary alphabet sizes. Their
//! agreement on the instantiated systems is itself a tested invariant.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::words::{deg_lex_cmp, Alphabet, Letter, Word};

/// One oriented rewriting rule `lhs -> rhs` with `lhs` strictly greater
/// than `rhs` in deg-lex, so every application decreases the word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    lhs: Word,
    rhs: Word,
}

impl Rule {
    /// Builds a rule. Panics unless `lhs` and `rhs` share an alphabet,
    /// `lhs` is nonempty, and `lhs` exceeds `rhs` in deg-lex; use
    /// [`Rule::oriented`] when the orientation is not known in advance.
    pub fn new(lhs: Word, rhs: Word) -> Self {
        assert!(!lhs.is_empty(), "rule left-hand side must be nonempty");
        assert_eq!(
            lhs.alphabet(),
            rhs.alphabet(),
            "rule sides must share an alphabet"
        );
        assert_eq!(
            deg_lex_cmp(&lhs, &rhs),
            std::cmp::Ordering::Greater,
            "rule must decrease deg-lex: {} is not greater than {}",
            lhs,
            rhs
        );
        Rule { lhs, rhs }
    }

    /// Orients an equation into a rule with the deg-lex larger side on the
    /// left. Returns `None` when the sides are equal.
    pub fn oriented(u: Word, v: Word) -> Option<Self> {
        match deg_lex_cmp(&u, &v) {
            std::cmp::Ordering::Greater => Some(Rule { lhs: u, rhs: v }),
            std::cmp::Ordering::Less => Some(Rule { lhs: v, rhs: u }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &Word {
        &self.rhs
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rule({} -> {})", self.lhs, self.rhs)
    }
}

/// Error from assembling a [`RewriteSystem`].
#[derive(Debug, Error)]
pub enum RewriteSystemError {
    #[error("conflicting rules share the left-hand side {lhs}")]
    DuplicateLhs { lhs: Word },
}

/// A finite set of rules with distinct left-hand sides, indexed for
/// leftmost-redex search.
#[derive(Clone)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    lhs_index: HashMap<Vec<Letter>, usize>,
    /// Distinct left-hand-side lengths, ascending; at one position the
    /// shortest matching left-hand side wins.
    lhs_lens: Vec<usize>,
    max_lhs_len: usize,
}

impl RewriteSystem {
    /// Assembles a system from rules over `alphabet`. Rules repeated
    /// verbatim collapse to one; two rules with one left-hand side and
    /// different right-hand sides are an error.
    pub fn new(alphabet: Alphabet, rules: Vec<Rule>) -> Result<Self, RewriteSystemError> {
        let mut kept: Vec<Rule> = Vec::with_capacity(rules.len());
        let mut lhs_index: HashMap<Vec<Letter>, usize> = HashMap::new();
        for rule in rules {
            assert_eq!(
                rule.lhs().alphabet(),
                alphabet,
                "rule alphabet does not match the system alphabet"
            );
            match lhs_index.get(rule.lhs().letters()) {
                Some(&idx) => {
                    if kept[idx].rhs() != rule.rhs() {
                        return Err(RewriteSystemError::DuplicateLhs {
                            lhs: rule.lhs().clone(),
                        });
                    }
                }
                None => {
                    lhs_index.insert(rule.lhs().letters().to_vec(), kept.len());
                    kept.push(rule);
                }
            }
        }
        let mut lhs_lens: Vec<usize> = kept.iter().map(|r| r.lhs().len()).collect();
        lhs_lens.sort_unstable();
        lhs_lens.dedup();
        let max_lhs_len = lhs_lens.last().copied().unwrap_or(0);
        Ok(RewriteSystem {
            alphabet,
            rules: kept,
            lhs_index,
            lhs_lens,
            max_lhs_len,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn max_lhs_len(&self) -> usize {
        self.max_lhs_len
    }

    /// The rule matching at `pos`, preferring the shortest left-hand side;
    /// `None` when no rule matches there.
    fn redex_at(&self, letters: &[Letter], pos: usize) -> Option<&Rule> {
        for &len in &self.lhs_lens {
            if pos + len > letters.len() {
                break;
            }
            if let Some(&idx) = self.lhs_index.get(&letters[pos..pos + len]) {
                return Some(&self.rules[idx]);
            }
        }
        None
    }

    /// The leftmost redex: its position and rule. At one position the
    /// shortest matching left-hand side wins.
    pub fn find_redex(&self, word: &Word) -> Option<(usize, &Rule)> {
        let letters = word.letters();
        (0..letters.len()).find_map(|pos| self.redex_at(letters, pos).map(|r| (pos, r)))
    }

    /// Every redex, left to right; positions may overlap.
    pub fn find_redexes(&self, word: &Word) -> Vec<(usize, &Rule)> {
        let letters = word.letters();
        let mut out = Vec::new();
        for pos in 0..letters.len() {
            for &len in &self.lhs_lens {
                if pos + len > letters.len() {
                    break;
                }
                if let Some(&idx) = self.lhs_index.get(&letters[pos..pos + len]) {
                    out.push((pos, &self.rules[idx]));
                }
            }
        }
        out
    }

    /// Replaces the factor at `pos` matching `rule.lhs()` with `rule.rhs()`.
    pub fn apply_rule(&self, word: &Word, pos: usize, rule: &Rule) -> Word {
        let letters = word.letters();
        let llen = rule.lhs().len();
        debug_assert_eq!(
            &letters[pos..pos + llen],
            rule.lhs().letters(),
            "rule does not match at position {pos}"
        );
        let mut out = Vec::with_capacity(letters.len() - llen + rule.rhs().len());
        out.extend_from_slice(&letters[..pos]);
        out.extend_from_slice(rule.rhs().letters());
        out.extend_from_slice(&letters[pos + llen..]);
        Word::new(out, self.alphabet)
    }

    /// The normal form of `word` under leftmost reduction.
    ///
    /// Terminates because every rule strictly decreases deg-lex, which is a
    /// well-order on words over a finite alphabet.
    pub fn normalize(&self, word: &Word) -> Word {
        self.reduce(word, None)
    }

    /// Like [`RewriteSystem::normalize`], also returning the full trace of
    /// words visited, from the input (inclusive) to the normal form.
    pub fn normalize_with_steps(&self, word: &Word) -> (Word, Vec<Word>) {
        let mut trace = vec![word.clone()];
        let nf = self.reduce(word, Some(&mut trace));
        (nf, trace)
    }

    fn reduce(&self, word: &Word, mut trace: Option<&mut Vec<Word>>) -> Word {
        let mut current = word.clone();
        // Positions left of `scan_from` are known redex-free: a window of
        // length at most max_lhs_len starting there cannot reach the last
        // rewritten region.
        let mut scan_from = 0usize;
        loop {
            let letters = current.letters();
            let mut found = None;
            for pos in scan_from..letters.len() {
                if let Some(rule) = self.redex_at(letters, pos) {
                    found = Some((pos, rule.clone()));
                    break;
                }
            }
            let Some((pos, rule)) = found else {
                return current;
            };
            let next = self.apply_rule(&current, pos, &rule);
            debug_assert_eq!(
                deg_lex_cmp(&next, &current),
                std::cmp::Ordering::Less,
                "rewriting must decrease deg-lex"
            );
            if let Some(t) = trace.as_deref_mut() {
                t.push(next.clone());
            }
            current = next;
            scan_from = (pos + 1).saturating_sub(self.max_lhs_len);
        }
    }

    pub fn is_irreducible(&self, word: &Word) -> bool {
        self.find_redex(word).is_none()
    }
}

impl fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RewriteSystem(n={}, {} rules)",
            self.alphabet.size(),
            self.rules.len()
        )
    }
}

fn rule_from_values(lhs: &[u32], rhs: &[u32], alphabet: Alphabet) -> Rule {
    Rule::new(
        Word::from_values(lhs, alphabet),
        Word::from_values(rhs, alphabet),
    )
}

/// The full Chinese rule set over `alphabet`, the deg-lex reduced system
/// whose normal forms are the staircase words. Five schemas, written with
/// letters `i > j > k`:
///
/// 1. `i j k -> j i k`
/// 2. `i k j -> j i k`
/// 3. `i j j -> j i j`
/// 4. `i i j -> i j i`
/// 5. `i j i k -> i k i j`
///
/// The count is `3 C(n,3) + 2 C(n,2)` for `n` letters. Rules come sorted by
/// deg-lex order of their left-hand sides.
pub fn chinese_rules(alphabet: Alphabet) -> RewriteSystem {
    let mut rules = schema_rules(alphabet, true);
    rules.sort_by(|a, b| deg_lex_cmp(a.lhs(), b.lhs()));
    RewriteSystem::new(alphabet, rules).expect("schema left-hand sides are distinct")
}

/// The defining relations of the Chinese monoid oriented by deg-lex:
/// schemas 1 through 4 above, without the length-four schema 5. This system
/// presents the same congruence but is not confluent for three or more
/// letters; completing it re-derives schema 5.
pub fn defining_rules(alphabet: Alphabet) -> RewriteSystem {
    let mut rules = schema_rules(alphabet, false);
    rules.sort_by(|a, b| deg_lex_cmp(a.lhs(), b.lhs()));
    RewriteSystem::new(alphabet, rules).expect("schema left-hand sides are distinct")
}

fn schema_rules(alphabet: Alphabet, include_length_four: bool) -> Vec<Rule> {
    let n = alphabet.size();
    let mut rules = Vec::new();
    for i in 1..=n {
        for j in 1..i {
            // schemas 3 and 4: i > j
            rules.push(rule_from_values(&[i, j, j], &[j, i, j], alphabet));
            rules.push(rule_from_values(&[i, i, j], &[i, j, i], alphabet));
            for k in 1..j {
                // schemas 1, 2, 5: i > j > k
                rules.push(rule_from_values(&[i, j, k], &[j, i, k], alphabet));
                rules.push(rule_from_values(&[i, k, j], &[j, i, k], alphabet));
                if include_length_four {
                    rules.push(rule_from_values(&[i, j, i, k], &[i, k, i, j], alphabet));
                }
            }
        }
    }
    rules
}

/// The redex of the Chinese rule set starting at `pos`, recognized from
/// letter comparisons alone: `Some((lhs_len, replacement))` padded to four
/// letters, or `None`. Shorter left-hand sides are checked first, matching
/// [`RewriteSystem::find_redex`] on the instantiated system.
fn chinese_redex(letters: &[Letter], pos: usize) -> Option<(usize, [Letter; 4])> {
    let rest = &letters[pos..];
    if rest.len() >= 3 {
        let (x, y, z) = (rest[0], rest[1], rest[2]);
        let pad = Letter(0);
        if x > y && y > z {
            // schema 1: i j k -> j i k
            return Some((3, [y, x, z, pad]));
        }
        if x > z && z > y {
            // schema 2: i k j -> j i k
            return Some((3, [z, x, y, pad]));
        }
        if x > y && y == z {
            // schema 3: i j j -> j i j
            return Some((3, [y, x, y, pad]));
        }
        if x == y && y > z {
            // schema 4: i i j -> i j i
            return Some((3, [x, z, x, pad]));
        }
    }
    if rest.len() >= 4 {
        let (x, y, z, t) = (rest[0], rest[1], rest[2], rest[3]);
        if x == z && x > y && y > t {
            // schema 5: i j i k -> i k i j
            return Some((4, [x, t, x, y]));
        }
    }
    None
}

/// The Chinese normal form of `word`, computed by leftmost reduction with
/// the schema recognizer; no instantiated rule set is needed, so any
/// alphabet size works.
pub fn normalize_chinese(word: &Word) -> Word {
    reduce_chinese(word, None)
}

/// Like [`normalize_chinese`], also returning the full trace of words
/// visited, from the input (inclusive) to the normal form.
pub fn normalize_chinese_with_steps(word: &Word) -> (Word, Vec<Word>) {
    let mut trace = vec![word.clone()];
    let nf = reduce_chinese(word, Some(&mut trace));
    (nf, trace)
}

fn reduce_chinese(word: &Word, mut trace: Option<&mut Vec<Word>>) -> Word {
    let mut letters = word.letters().to_vec();
    // positions left of the cursor hold no redex, so the first hit while
    // scanning forward is the leftmost redex of the whole word
    let mut pos = 0usize;
    while pos < letters.len() {
        if let Some((len, replacement)) = chinese_redex(&letters, pos) {
            // every Chinese rule preserves length, so replace in place
            letters[pos..pos + len].copy_from_slice(&replacement[..len]);
            if let Some(t) = trace.as_deref_mut() {
                t.push(Word::new(letters.clone(), word.alphabet()));
            }
            // only windows reaching the changed letters need rechecking
            pos = (pos + 1).saturating_sub(4);
        } else {
            pos += 1;
        }
    }
    Word::new(letters, word.alphabet())
}

/// Whether `word` has no redex of the Chinese rule set.
pub fn is_irreducible_chinese(word: &Word) -> bool {
    let letters = word.letters();
    (0..letters.len()).all(|pos| chinese_redex(letters, pos).is_none())
}
