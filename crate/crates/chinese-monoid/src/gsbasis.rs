//! Ambiguity enumeration, compositions, Gröbner–Shirshov verification,
//! inter-reduction, and bounded completion for word rewriting systems.
//!
//! Relations are represented as oriented word pairs throughout: every
//! polynomial in play is a difference of two words, so coefficients are
//! always plus or minus one and never need tracking.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::rewriting::{Rule, RewriteSystem};
use crate::words::{deg_lex_cmp, parse_word, Alphabet, Letter, ParseWordError, Word};

/// How two left-hand sides share the overlap word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AmbiguityKind {
    /// A proper nonempty suffix of the left lhs equals a proper nonempty
    /// prefix of the right lhs: `overlap = lhs_left · b = a · lhs_right`
    /// with `a`, `b` nonempty.
    Intersection,
    /// The right lhs sits inside the left lhs: `overlap = lhs_left =
    /// a · lhs_right · b`. The whole-word self-match (`a` and `b` both
    /// empty) is excluded.
    Inclusion,
}

/// An overlap of two rule left-hand sides whose composition must be
/// checked. `a_len` and `b_len` are the lengths of the outer pieces `a`
/// and `b` locating the right lhs inside the overlap word.
#[derive(Clone, Debug)]
pub struct Ambiguity {
    pub left: Rule,
    pub right: Rule,
    pub overlap: Word,
    pub kind: AmbiguityKind,
    pub a_len: usize,
    pub b_len: usize,
}

/// The two words obtained by eliminating each lhs occurrence from the
/// overlap word. Both sit strictly below the overlap in deg-lex.
#[derive(Clone, Debug)]
pub struct Composition {
    pub ambiguity: Ambiguity,
    pub p: Word,
    pub q: Word,
}

/// One failed triviality check: the composition's two sides and their
/// distinct normal forms.
#[derive(Clone, Debug)]
pub struct Nontrivial {
    pub ambiguity: Ambiguity,
    pub p_reduced: Word,
    pub q_reduced: Word,
}

/// Outcome of checking every ambiguity of a rule set.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub total_ambiguities: usize,
    pub nontrivial: Vec<Nontrivial>,
}

impl VerificationReport {
    pub fn trivial(&self) -> usize {
        self.total_ambiguities - self.nontrivial.len()
    }

    /// The composition criterion: no nontrivial composition means the rule
    /// set is a Gröbner–Shirshov basis, so its irreducible words form a
    /// transversal of the presented congruence.
    pub fn is_basis(&self) -> bool {
        self.nontrivial.is_empty()
    }
}

/// Every ambiguity of the rule set, in deterministic order: by left rule
/// index, then right rule index, then intersections by ascending `a_len`,
/// then inclusions by ascending `a_len`. A rule can overlap itself; only
/// the whole-word self-inclusion is excluded.
pub fn enumerate_ambiguities(system: &RewriteSystem) -> Vec<Ambiguity> {
    let rules = system.rules();
    let mut out = Vec::new();
    for left in rules {
        let ll = left.lhs().letters();
        for right in rules {
            let rl = right.lhs().letters();
            // intersections: overlap size t runs over proper lengths;
            // descending t is ascending a_len
            for t in (1..ll.len().min(rl.len())).rev() {
                if ll[ll.len() - t..] == rl[..t] {
                    let mut letters = ll.to_vec();
                    letters.extend_from_slice(&rl[t..]);
                    out.push(Ambiguity {
                        left: left.clone(),
                        right: right.clone(),
                        overlap: Word::new(letters, system.alphabet()),
                        kind: AmbiguityKind::Intersection,
                        a_len: ll.len() - t,
                        b_len: rl.len() - t,
                    });
                }
            }
            // inclusions: the right lhs occurs inside the left lhs
            if rl.len() <= ll.len() {
                for a_len in 0..=(ll.len() - rl.len()) {
                    let b_len = ll.len() - a_len - rl.len();
                    if a_len == 0 && b_len == 0 {
                        // a whole-word match is the rule against itself
                        continue;
                    }
                    if &ll[a_len..a_len + rl.len()] == rl {
                        out.push(Ambiguity {
                            left: left.clone(),
                            right: right.clone(),
                            overlap: left.lhs().clone(),
                            kind: AmbiguityKind::Inclusion,
                            a_len,
                            b_len,
                        });
                    }
                }
            }
        }
    }
    out
}

/// Eliminates each lhs occurrence from the overlap word, yielding the two
/// sides whose difference is the composition.
pub fn composition(ambiguity: &Ambiguity) -> Composition {
    let w = &ambiguity.overlap;
    let (p, q) = match ambiguity.kind {
        AmbiguityKind::Intersection => {
            let a = w.factor(0..ambiguity.a_len);
            let b = w.factor(ambiguity.left.lhs().len()..w.len());
            (
                ambiguity.left.rhs().concat(&b),
                a.concat(ambiguity.right.rhs()),
            )
        }
        AmbiguityKind::Inclusion => {
            let a = w.factor(0..ambiguity.a_len);
            let b = w.factor(w.len() - ambiguity.b_len..w.len());
            (
                ambiguity.left.rhs().clone(),
                a.concat(ambiguity.right.rhs()).concat(&b),
            )
        }
    };
    // replacing a factor by a smaller word decreases the whole word
    debug_assert_eq!(deg_lex_cmp(&p, w), Ordering::Less);
    debug_assert_eq!(deg_lex_cmp(&q, w), Ordering::Less);
    Composition {
        ambiguity: ambiguity.clone(),
        p,
        q,
    }
}

/// Joinability check: both sides reduce to one normal form.
///
/// This decides triviality: each rewriting step replaces a factor by a
/// strictly smaller word, and the order is monomial, so every word in both
/// reduction sequences stays strictly below the overlap word. A common
/// endpoint therefore writes the difference `p - q` as a telescoping sum
/// of rule applications all performed below the overlap, which is exactly
/// the triviality condition; conversely distinct normal forms under a
/// terminating system witness a genuinely new consequence.
pub fn is_trivial(composition: &Composition, system: &RewriteSystem) -> bool {
    system.normalize(&composition.p) == system.normalize(&composition.q)
}

/// Checks every ambiguity of `system` and reports the nontrivial ones,
/// with both reduced sides, in enumeration order.
pub fn verify_gs(system: &RewriteSystem) -> VerificationReport {
    let ambiguities = enumerate_ambiguities(system);
    let total_ambiguities = ambiguities.len();
    let mut nontrivial = Vec::new();
    for ambiguity in ambiguities {
        let c = composition(&ambiguity);
        let p_reduced = system.normalize(&c.p);
        let q_reduced = system.normalize(&c.q);
        if p_reduced != q_reduced {
            nontrivial.push(Nontrivial {
                ambiguity,
                p_reduced,
                q_reduced,
            });
        }
    }
    VerificationReport {
        total_ambiguities,
        nontrivial,
    }
}

fn contains_factor(hay: &[Letter], needle: &[Letter]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|win| win == needle)
}

/// Leftmost reduction against a plain rule slice, shortest lhs first at a
/// position; used where the rule set is still in flux.
fn leftmost_reduce(rules: &[Rule], word: &Word) -> Word {
    let mut current = word.clone();
    'outer: loop {
        let letters = current.letters();
        for pos in 0..letters.len() {
            let mut best: Option<&Rule> = None;
            for rule in rules {
                let l = rule.lhs().len();
                if pos + l <= letters.len()
                    && letters[pos..pos + l] == *rule.lhs().letters()
                    && best.is_none_or(|b| l < b.lhs().len())
                {
                    best = Some(rule);
                }
            }
            if let Some(rule) = best {
                let mut next = Vec::with_capacity(letters.len());
                next.extend_from_slice(&letters[..pos]);
                next.extend_from_slice(rule.rhs().letters());
                next.extend_from_slice(&letters[pos + rule.lhs().len()..]);
                let next = Word::new(next, current.alphabet());
                debug_assert_eq!(deg_lex_cmp(&next, &current), Ordering::Less);
                current = next;
                continue 'outer;
            }
        }
        return current;
    }
}

/// A pending equation. Required equations carry congruence content (the
/// input rules, and rules displaced by a newer one) and are never dropped;
/// derived equations are consequences of the live rules (composition
/// sides), so dropping an oversized one loses only completeness.
struct Equation {
    u: Word,
    v: Word,
    required: bool,
}

/// Work-list saturation shared by inter-reduction and completion. The live
/// rules keep pairwise factor-free left-hand sides: a new rule displaces
/// every rule it can reduce, and the displaced rule re-enters the queue as
/// an equation, preserving the presented congruence.
struct Saturator {
    alphabet: Alphabet,
    rules: Vec<Rule>,
    pending: VecDeque<Equation>,
    /// Cap on the lhs length of rules formed from derived equations.
    max_derived_lhs_len: Option<usize>,
    /// Bumped on every change to the live rule set.
    version: u64,
}

impl Saturator {
    fn new(alphabet: Alphabet, max_derived_lhs_len: Option<usize>) -> Self {
        Saturator {
            alphabet,
            rules: Vec::new(),
            pending: VecDeque::new(),
            max_derived_lhs_len,
            version: 0,
        }
    }

    fn push_required(&mut self, u: Word, v: Word) {
        self.pending.push_back(Equation {
            u,
            v,
            required: true,
        });
    }

    fn push_derived(&mut self, u: Word, v: Word) {
        self.pending.push_back(Equation {
            u,
            v,
            required: false,
        });
    }

    fn drain(&mut self) {
        while let Some(Equation { u, v, required }) = self.pending.pop_front() {
            let nu = leftmost_reduce(&self.rules, &u);
            let nv = leftmost_reduce(&self.rules, &v);
            let Some(rule) = Rule::oriented(nu, nv) else {
                continue; // joinable, nothing to add
            };
            if !required {
                if let Some(max) = self.max_derived_lhs_len {
                    if rule.lhs().len() > max {
                        continue;
                    }
                }
            }
            // the new lhs is irreducible by the live rules, so it equals no
            // existing lhs; displace every rule the new one can reduce
            let new_lhs = rule.lhs().letters().to_vec();
            let mut kept = Vec::with_capacity(self.rules.len() + 1);
            for existing in self.rules.drain(..) {
                if contains_factor(existing.lhs().letters(), &new_lhs) {
                    self.pending.push_back(Equation {
                        u: existing.lhs().clone(),
                        v: existing.rhs().clone(),
                        required: true,
                    });
                } else {
                    kept.push(existing);
                }
            }
            kept.push(rule);
            self.rules = kept;
            self.version += 1;
        }
    }

    fn snapshot(&self) -> RewriteSystem {
        RewriteSystem::new(self.alphabet, self.rules.clone())
            .expect("live left-hand sides are pairwise distinct")
    }

    /// Normalizes every right-hand side, sorts by deg-lex lhs, and builds
    /// the final system. Reducibility depends only on the left-hand sides,
    /// so one sweep leaves every rhs irreducible.
    fn finalize(mut self) -> RewriteSystem {
        for i in 0..self.rules.len() {
            let reduced = leftmost_reduce(&self.rules, self.rules[i].rhs());
            if &reduced != self.rules[i].rhs() {
                self.rules[i] = Rule::new(self.rules[i].lhs().clone(), reduced);
            }
        }
        self.rules.sort_by(|a, b| deg_lex_cmp(a.lhs(), b.lhs()));
        RewriteSystem::new(self.alphabet, self.rules)
            .expect("live left-hand sides are pairwise distinct")
    }
}

/// Normalizes a rule set to its reduced form presenting the same
/// congruence: no lhs reducible by another rule, every rhs fully reduced,
/// duplicates folded, output sorted by deg-lex lhs.
pub fn inter_reduce(system: &RewriteSystem) -> RewriteSystem {
    let mut saturator = Saturator::new(system.alphabet(), None);
    for rule in system.rules() {
        saturator.push_required(rule.lhs().clone(), rule.rhs().clone());
    }
    saturator.drain();
    saturator.finalize()
}

/// Resource limits for [`complete`]. `max_word_len` caps the lhs length of
/// rules added from composition equations; `max_rules` caps the live rule
/// count; `max_iterations` caps enumeration passes.
#[derive(Clone, Copy, Debug)]
pub struct CompletionBounds {
    pub max_rules: usize,
    pub max_word_len: usize,
    pub max_iterations: usize,
}

impl Default for CompletionBounds {
    fn default() -> Self {
        CompletionBounds {
            max_rules: 10_000,
            max_word_len: 12,
            max_iterations: 100,
        }
    }
}

/// Result of [`complete`]: the saturated (or partial) system, whether the
/// final pass was clean, and how many passes ran.
#[derive(Clone, Debug)]
pub struct CompletionOutcome {
    pub system: RewriteSystem,
    pub converged: bool,
    pub passes: usize,
}

/// Critical-pair completion: repeatedly enumerate the ambiguities of the
/// current inter-reduced set, turn every nontrivial composition into an
/// equation, and saturate. Converges exactly when a full pass finds no
/// nontrivial composition, at which point the result is a Gröbner–Shirshov
/// basis for the congruence presented by `initial`.
///
/// The result always presents the same congruence as `initial`: every
/// added rule joins two words already congruent, input and displaced rules
/// are never dropped, and only derived equations are subject to
/// `max_word_len`. On a bound stop the partial system is returned with
/// `converged` false; completion need not terminate in general.
pub fn complete(initial: &RewriteSystem, bounds: &CompletionBounds) -> CompletionOutcome {
    let mut saturator = Saturator::new(initial.alphabet(), Some(bounds.max_word_len));
    for rule in initial.rules() {
        saturator.push_required(rule.lhs().clone(), rule.rhs().clone());
    }
    saturator.drain();
    let mut passes = 0;
    let mut converged = false;
    while passes < bounds.max_iterations {
        passes += 1;
        let system = saturator.snapshot();
        let mut found = 0usize;
        for ambiguity in enumerate_ambiguities(&system) {
            let c = composition(&ambiguity);
            let p_reduced = system.normalize(&c.p);
            let q_reduced = system.normalize(&c.q);
            if p_reduced != q_reduced {
                found += 1;
                saturator.push_derived(p_reduced, q_reduced);
            }
        }
        if found == 0 {
            converged = true;
            break;
        }
        let before = saturator.version;
        saturator.drain();
        if saturator.version == before {
            // every new equation was dropped or joined; repeating the pass
            // would find the same compositions again
            break;
        }
        if saturator.rules.len() > bounds.max_rules {
            break;
        }
    }
    CompletionOutcome {
        system: saturator.finalize(),
        converged,
        passes,
    }
}

/// Errors from [`parse_rule_file`], each carrying a 1-based line number.
#[derive(Debug, Error)]
pub enum RuleFileError {
    #[error("line {line}: missing '->' separator")]
    MissingArrow { line: usize },
    #[error("line {line}: {source}")]
    BadWord {
        line: usize,
        #[source]
        source: ParseWordError,
    },
    #[error("line {line}: rule must decrease deg-lex, got {lhs:?} -> {rhs:?}")]
    NotDecreasing {
        line: usize,
        lhs: String,
        rhs: String,
    },
}

/// Parses a rule file: UTF-8 text, one `lhs -> rhs` per line in the word
/// codec of `alphabet`, `#` starting a comment, blank lines ignored. Every
/// rule must strictly decrease deg-lex.
pub fn parse_rule_file(text: &str, alphabet: Alphabet) -> Result<Vec<Rule>, RuleFileError> {
    let mut rules = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((lhs_text, rhs_text)) = content.split_once("->") else {
            return Err(RuleFileError::MissingArrow { line });
        };
        let lhs = parse_word(lhs_text, alphabet)
            .map_err(|source| RuleFileError::BadWord { line, source })?;
        let rhs = parse_word(rhs_text, alphabet)
            .map_err(|source| RuleFileError::BadWord { line, source })?;
        if deg_lex_cmp(&lhs, &rhs) != Ordering::Greater {
            return Err(RuleFileError::NotDecreasing {
                line,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        rules.push(Rule::new(lhs, rhs));
    }
    Ok(rules)
}

/// Renders rules in the rule-file format, one per line.
pub fn format_rules(rules: &[Rule]) -> String {
    let mut out = String::new();
    for rule in rules {
        out.push_str(&rule.to_string());
        out.push('\n');
    }
    out
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} nontrivial / {} ambiguities",
            self.nontrivial.len(),
            self.total_ambiguities
        )
    }
}
