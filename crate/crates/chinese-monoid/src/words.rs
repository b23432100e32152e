//! Ordered alphabets, finite words, the deg-lex monomial order, and the
//! text codec used by the command line and by rule files.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// A finite totally ordered alphabet whose letters are the integers `1..=size`.
///
/// Letter `1` is the least letter. Alphabets of size at most 26 also have
/// letter names: `1` prints as `a`, `2` as `b`, and so on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Alphabet {
    size: u32,
}

impl Alphabet {
    /// Creates the alphabet `{1, ..., size}`.
    ///
    /// Panics if `size` is zero; an empty alphabet has no words besides the
    /// empty one and is never useful here.
    pub fn new(size: u32) -> Self {
        assert!(size >= 1, "alphabet must have at least one letter");
        Alphabet { size }
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn contains(&self, letter: Letter) -> bool {
        (1..=self.size).contains(&letter.0)
    }

    /// All letters in increasing order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (1..=self.size).map(Letter)
    }

    /// Whether words over this alphabet are written with letter names
    /// (`a..z`) rather than whitespace-separated integers.
    pub fn uses_letter_names(&self) -> bool {
        self.size <= 26
    }
}

/// A letter of an [`Alphabet`]: an integer in `1..=n`, ordered by value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter(pub u32);

/// Formats one letter in the codec of the given alphabet.
pub fn format_letter(letter: Letter, alphabet: Alphabet) -> String {
    if alphabet.uses_letter_names() {
        ((b'a' + (letter.0 - 1) as u8) as char).to_string()
    } else {
        letter.0.to_string()
    }
}

/// A word over a fixed alphabet. Words form a monoid under concatenation
/// with the empty word as identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Alphabet,
}

impl Word {
    /// Builds a word from letters, which must all lie in the alphabet.
    pub fn new(letters: Vec<Letter>, alphabet: Alphabet) -> Self {
        for &l in &letters {
            assert!(
                alphabet.contains(l),
                "letter {} outside alphabet 1..={}",
                l.0,
                alphabet.size()
            );
        }
        Word { letters, alphabet }
    }

    /// Convenience constructor from raw letter values.
    pub fn from_values(values: &[u32], alphabet: Alphabet) -> Self {
        Word::new(values.iter().map(|&v| Letter(v)).collect(), alphabet)
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            letters: Vec::new(),
            alphabet,
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Concatenation. Both words must share one alphabet.
    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(
            self.alphabet, other.alphabet,
            "cannot concatenate words over different alphabets"
        );
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            alphabet: self.alphabet,
        }
    }

    /// The factor `self[range]` as a word.
    pub fn factor(&self, range: std::ops::Range<usize>) -> Word {
        Word {
            letters: self.letters[range].to_vec(),
            alphabet: self.alphabet,
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?}, n={})", format_word(self), self.alphabet.size())
    }
}

/// The degree-lexicographic order: shorter words come first, words of equal
/// length compare letter by letter from the left with the larger letter
/// winning. The empty word is the minimum.
///
/// This is a monomial order: `u < v` implies `aub < avb` for all `a`, `b`.
///
/// Panics if the words live over different alphabets.
pub fn deg_lex_cmp(u: &Word, v: &Word) -> Ordering {
    assert_eq!(
        u.alphabet, v.alphabet,
        "cannot compare words over different alphabets"
    );
    u.len()
        .cmp(&v.len())
        .then_with(|| u.letters.cmp(&v.letters))
}

/// Errors from [`parse_word`], each carrying a 1-based position.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseWordError {
    #[error("invalid character {ch:?} at position {pos}")]
    InvalidChar { ch: char, pos: usize },
    #[error("letter {letter} at position {pos} is outside the alphabet 1..={max}")]
    OutOfRange { letter: u32, pos: usize, max: u32 },
    #[error("invalid number {token:?} at position {pos}")]
    InvalidNumber { token: String, pos: usize },
}

/// Parses a word. Two input forms exist:
///
/// * a run of letter names `a..z` (`a` is letter 1), accepted when the
///   alphabet has at most 26 letters and the text contains no digit;
/// * whitespace-separated positive integers, accepted always.
///
/// Leading and trailing whitespace is ignored; empty input is the empty word.
pub fn parse_word(text: &str, alphabet: Alphabet) -> Result<Word, ParseWordError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Word::empty(alphabet));
    }
    let integer_form = !alphabet.uses_letter_names() || text.contains(|c: char| c.is_ascii_digit());
    let mut letters = Vec::new();
    if integer_form {
        for (pos, token) in text.split_whitespace().enumerate() {
            let value: u32 = token.parse().map_err(|_| ParseWordError::InvalidNumber {
                token: token.to_string(),
                pos: pos + 1,
            })?;
            if value == 0 || value > alphabet.size() {
                return Err(ParseWordError::OutOfRange {
                    letter: value,
                    pos: pos + 1,
                    max: alphabet.size(),
                });
            }
            letters.push(Letter(value));
        }
    } else {
        for (pos, ch) in text.chars().enumerate() {
            if !ch.is_ascii_lowercase() {
                return Err(ParseWordError::InvalidChar { ch, pos: pos + 1 });
            }
            let value = (ch as u32) - ('a' as u32) + 1;
            if value > alphabet.size() {
                return Err(ParseWordError::OutOfRange {
                    letter: value,
                    pos: pos + 1,
                    max: alphabet.size(),
                });
            }
            letters.push(Letter(value));
        }
    }
    Ok(Word {
        letters,
        alphabet,
    })
}

/// Formats a word in the codec of its alphabet: letter names when the
/// alphabet has at most 26 letters, whitespace-separated integers otherwise.
pub fn format_word(w: &Word) -> String {
    if w.alphabet.uses_letter_names() {
        w.letters
            .iter()
            .map(|l| (b'a' + (l.0 - 1) as u8) as char)
            .collect()
    } else {
        w.letters
            .iter()
            .map(|l| l.0.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}
