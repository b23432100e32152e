//! Normal forms, Gröbner–Shirshov verification, and completion for the
//! Chinese monoid.
//!
//! The Chinese monoid over an ordered alphabet is the quotient of the free
//! monoid by the relations
//!
//! ```text
//! zyx = zxy = yzx          for x < y < z
//! yxx = xyx,  yyx = yxy    for x < y
//! ```
//!
//! This crate computes canonical representatives of its congruence classes
//! three independent ways and cross-checks them against each other:
//!
//! * [`rewriting`] reduces words with a confluent, terminating rule set
//!   oriented by the degree-lexicographic order, either instantiated as an
//!   explicit [`rewriting::RewriteSystem`] or matched directly against the
//!   rule schemas ([`rewriting::normalize_chinese`]).
//! * [`staircase`] inserts letters one at a time into a staircase-shaped
//!   table whose spelled-out form is the same normal form
//!   ([`staircase::insertion_normal_form`]), and recognizes normal forms
//!   without rewriting ([`staircase::is_staircase_word`]).
//! * [`oracle`] decides congruence by breadth-first search over the
//!   defining relations alone ([`oracle::congruent`]), with no reliance on
//!   the rewriting theory; it is the ground truth the fast routes are
//!   tested against.
//!
//! [`gsbasis`] carries the certification machinery: it enumerates every
//! overlap ambiguity of a rule set, checks that each composition joins
//! ([`gsbasis::verify_gs`]), and re-derives the rule set from the defining
//! relations by bounded completion ([`gsbasis::complete`]).
//!
//! Words print and parse as lowercase letters (`"bca"`) for alphabets of
//! up to 26 letters and as whitespace-separated integers (`"2 3 1"`)
//! beyond that; see [`words`].
//!
//! ```
//! use chinese_monoid::rewriting::normalize_chinese;
//! use chinese_monoid::staircase::insertion_normal_form;
//! use chinese_monoid::words::{parse_word, Alphabet};
//!
//! let alphabet = Alphabet::new(3);
//! let word = parse_word("cba", alphabet).unwrap();
//! assert_eq!(normalize_chinese(&word).to_string(), "bca");
//! assert_eq!(insertion_normal_form(&word), normalize_chinese(&word));
//! ```
//!
//! The `examples/` directory is the guided tour:
//!
//! * `normal_forms` reduces words step by step.
//! * `staircase_table` grows a staircase one insertion at a time.
//! * `verify_basis` checks every ambiguity of the rule set.
//! * `complete_from_defining_relations` re-derives the rules.
//! * `congruence_classes` explores the classes of small layers.
//! * `route_agreement` cross-checks all routes on random words.
//!
//! The same capabilities are scriptable through the `chinese-monoid`
//! binary; see [`cli`] or run it with `--help`.

pub mod cli;
pub mod gsbasis;
pub mod oracle;
pub mod rewriting;
pub mod staircase;
pub mod words;
