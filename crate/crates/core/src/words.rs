//! Words over small indexed alphabets: the carrier type for everything else.
//!
//! A [`Word`] stores letter indices into its [`Alphabet`]. Words are immutable
//! after construction and cheap to slice; all operations are pure functions.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest supported alphabet. Letters fit in a `u8` index with headroom for
/// internal separator sentinels, and enumeration spaces stay bounded.
pub const MAX_ALPHABET_SIZE: usize = 16;

/// Errors from alphabet construction and word parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("alphabet has {size} letters, maximum is {MAX_ALPHABET_SIZE}")]
    AlphabetTooLarge { size: usize },
    #[error("duplicate letter {letter:?} in alphabet")]
    DuplicateLetter { letter: char },
    #[error("letter {letter:?} is not printable")]
    UnprintableLetter { letter: char },
    #[error("letter {letter:?} is not in alphabet {alphabet}")]
    UnknownLetter { letter: char, alphabet: String },
    #[error("letter index {index} out of range for alphabet of size {size}")]
    IndexOutOfRange { index: u8, size: usize },
}

/// An ordered alphabet of distinct printable characters (at most 16).
///
/// Cloning is cheap; the character table is shared.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Arc<[char]>,
}

impl Alphabet {
    /// Builds an alphabet from its letters, in order.
    pub fn new(letters: &str) -> Result<Self, WordError> {
        let names: Vec<char> = letters.chars().collect();
        if names.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        if names.len() > MAX_ALPHABET_SIZE {
            return Err(WordError::AlphabetTooLarge { size: names.len() });
        }
        for (i, &c) in names.iter().enumerate() {
            if c.is_control() || c.is_whitespace() {
                return Err(WordError::UnprintableLetter { letter: c });
            }
            if names[..i].contains(&c) {
                return Err(WordError::DuplicateLetter { letter: c });
            }
        }
        Ok(Alphabet { names: names.into() })
    }

    /// The three-letter alphabet `abc` used by the generators and checkers.
    pub fn ternary() -> Self {
        Alphabet::new("abc").expect("static alphabet")
    }

    /// The binary alphabet `01`, the default search target.
    pub fn binary() -> Self {
        Alphabet::new("01").expect("static alphabet")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    /// Character for a letter index. Panics if the index is out of range.
    pub fn letter_char(&self, index: u8) -> char {
        self.names[index as usize]
    }

    pub fn index_of(&self, letter: char) -> Option<u8> {
        self.names.iter().position(|&c| c == letter).map(|i| i as u8)
    }

    pub fn chars(&self) -> &[char] {
        &self.names
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in self.names.iter() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

/// A finite word: an immutable sequence of letter indices over an alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<u8>,
}

impl Word {
    pub fn empty(alphabet: &Alphabet) -> Self {
        Word { alphabet: alphabet.clone(), letters: Vec::new() }
    }

    /// Parses a word from its character form, validating every letter.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            match alphabet.index_of(c) {
                Some(i) => letters.push(i),
                None => {
                    return Err(WordError::UnknownLetter {
                        letter: c,
                        alphabet: alphabet.to_string(),
                    })
                }
            }
        }
        Ok(Word { alphabet: alphabet.clone(), letters })
    }

    /// Builds a word from raw letter indices, validating each one.
    pub fn from_letters(alphabet: &Alphabet, letters: Vec<u8>) -> Result<Self, WordError> {
        let size = alphabet.size();
        for &l in &letters {
            if l as usize >= size {
                return Err(WordError::IndexOutOfRange { index: l, size });
            }
        }
        Ok(Word { alphabet: alphabet.clone(), letters })
    }

    /// Internal constructor for indices already known to be valid.
    pub(crate) fn from_letters_unchecked(alphabet: &Alphabet, letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| (l as usize) < alphabet.size()));
        Word { alphabet: alphabet.clone(), letters }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Letter index at a position. Panics if out of range.
    pub fn letter(&self, pos: usize) -> u8 {
        self.letters[pos]
    }

    /// Concatenation. Panics if the alphabets differ.
    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(
            self.alphabet, other.alphabet,
            "cannot concatenate words over different alphabets"
        );
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { alphabet: self.alphabet.clone(), letters }
    }

    /// The factor `self[start..end]` as an owned word.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            letters: self.letters[start..end].to_vec(),
        }
    }

    /// The prefix of length `n` (or the whole word when shorter).
    pub fn prefix(&self, n: usize) -> Word {
        self.factor(0, n.min(self.len()))
    }

    /// Every distinct non-empty factor of length at most `max_len`,
    /// ordered by length and then lexicographically by letter indices.
    pub fn factors_up_to(&self, max_len: usize) -> Vec<Word> {
        let w = &self.letters;
        let mut seen: HashSet<&[u8]> = HashSet::new();
        for len in 1..=max_len.min(w.len()) {
            for start in 0..=w.len() - len {
                seen.insert(&w[start..start + len]);
            }
        }
        let mut factors: Vec<&[u8]> = seen.into_iter().collect();
        factors.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        factors
            .into_iter()
            .map(|f| Word::from_letters_unchecked(&self.alphabet, f.to_vec()))
            .collect()
    }

    /// Whether `pattern` occurs contiguously in `self`.
    ///
    /// Panics on an empty pattern or a pattern over a different alphabet;
    /// both indicate caller bugs, not data errors.
    pub fn contains_factor(&self, pattern: &Word) -> bool {
        assert!(!pattern.is_empty(), "contains_factor requires a non-empty pattern");
        assert_eq!(
            self.alphabet, pattern.alphabet,
            "contains_factor requires words over the same alphabet"
        );
        let p = pattern.letters();
        self.letters.len() >= p.len() && self.letters.windows(p.len()).any(|w| w == p)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", self.alphabet.letter_char(l))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

// Words serialize as their single-line character form.
impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_rejects_bad_inputs() {
        assert_eq!(Alphabet::new(""), Err(WordError::EmptyAlphabet));
        assert_eq!(
            Alphabet::new("aa"),
            Err(WordError::DuplicateLetter { letter: 'a' })
        );
        assert!(matches!(
            Alphabet::new("abcdefghijklmnopq"),
            Err(WordError::AlphabetTooLarge { size: 17 })
        ));
        assert!(matches!(
            Alphabet::new("a b"),
            Err(WordError::UnprintableLetter { .. })
        ));
        assert_eq!(Alphabet::new("abc").unwrap().size(), 3);
    }

    #[test]
    fn parse_validates_letters() {
        let sigma = Alphabet::ternary();
        let w = Word::parse(&sigma, "abcacb").unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.to_string(), "abcacb");
        assert!(matches!(
            Word::parse(&sigma, "abd"),
            Err(WordError::UnknownLetter { letter: 'd', .. })
        ));
    }

    #[test]
    fn concat_is_associative_with_empty_identity() {
        let sigma = Alphabet::ternary();
        let a = Word::parse(&sigma, "ab").unwrap();
        let b = Word::parse(&sigma, "ca").unwrap();
        let c = Word::parse(&sigma, "cb").unwrap();
        let e = Word::empty(&sigma);
        assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
        assert_eq!(a.concat(&e), a);
        assert_eq!(e.concat(&a), a);
    }

    #[test]
    fn factors_of_abcacb_up_to_two() {
        let sigma = Alphabet::ternary();
        let w = Word::parse(&sigma, "abcacb").unwrap();
        let factors: Vec<String> = w.factors_up_to(2).iter().map(Word::to_string).collect();
        assert_eq!(factors, ["a", "b", "c", "ab", "ac", "bc", "ca", "cb"]);
    }

    #[test]
    fn factors_of_empty_word() {
        let sigma = Alphabet::ternary();
        assert!(Word::empty(&sigma).factors_up_to(5).is_empty());
    }

    #[test]
    fn contains_factor_examples() {
        let sigma = Alphabet::ternary();
        let w = Word::parse(&sigma, "abcacb").unwrap();
        assert!(w.contains_factor(&Word::parse(&sigma, "cac").unwrap()));
        assert!(!w.contains_factor(&Word::parse(&sigma, "aba").unwrap()));
    }

    #[test]
    #[should_panic(expected = "non-empty pattern")]
    fn contains_factor_rejects_empty_pattern() {
        let sigma = Alphabet::ternary();
        let w = Word::parse(&sigma, "abc").unwrap();
        w.contains_factor(&Word::empty(&sigma));
    }

    #[test]
    fn word_serializes_as_string() {
        let sigma = Alphabet::ternary();
        let w = Word::parse(&sigma, "abc").unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), "\"abc\"");
    }
}
