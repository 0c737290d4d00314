//! Non-erasing morphisms from the ternary alphabet, and two finite tests:
//!
//! * [`theorem1_check`] — is every image of a given factor test set
//!   square-free? For test sets built from words avoiding `s1` or `s2` with
//!   factor length bound 7, a pass is equivalent to the image of the whole
//!   infinite word being square-free.
//! * [`crochemore_check`] — is the image of *every* square-free ternary word
//!   of length at most 5 square-free? A pass means the morphism preserves
//!   square-freeness on all of `abc*`. This is strictly stronger than the
//!   factor test: the substitution `a -> abc, b -> ac, c -> b` passes the
//!   factor test for its own fixed point but fails here, because the image
//!   of `aba` (not a factor of that word) contains `caca`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::squares::SquareOccurrence;
use crate::thue::{TestSet, TestSetSource};
use crate::words::{Alphabet, Word};

/// Default per-letter image length cap for enumeration spaces.
pub const DEFAULT_MAX_IMAGE_LEN: usize = 64;

/// Length bound for [`crochemore_check`].
pub const CROCHEMORE_LEN: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("morphism must define exactly {expected} images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("image of {letter:?} is empty; morphisms must be non-erasing")]
    ErasingImage { letter: char },
    #[error("image of {letter:?} is over alphabet {got}, expected {expected}")]
    ImageAlphabetMismatch { letter: char, got: String, expected: String },
    #[error("word is over alphabet {got}, expected source alphabet {expected}")]
    SourceMismatch { got: String, expected: String },
}

/// Errors from the morphism file format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismParseError {
    #[error("line {line}: expected `<letter>=<image>`, got {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: empty image for {letter:?}; morphisms must be non-erasing")]
    EmptyImage { line: usize, letter: char },
    #[error("line {line}: {letter:?} is not a source letter (expected a, b or c)")]
    UnknownSourceLetter { line: usize, letter: char },
    #[error("line {line}: duplicate definition for {letter:?}")]
    DuplicateDefinition { line: usize, letter: char },
    #[error("missing definition for {letter:?}")]
    MissingDefinition { letter: char },
    #[error("line {line}: image letter {letter:?} is not in the target alphabet {target}")]
    ImageLetterOutsideTarget { line: usize, letter: char, target: String },
    #[error("line {line}: invalid target alphabet: {source}")]
    BadTargetAlphabet { line: usize, source: crate::words::WordError },
    #[error("line {line}: duplicate target declaration")]
    DuplicateTarget { line: usize },
    #[error("line {line}: declared target {declared} conflicts with expected target {expected}")]
    TargetMismatch { line: usize, declared: String, expected: String },
}

/// A non-erasing morphism `f` from `abc` into words over a target alphabet,
/// determined by the images of the three source letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    target: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    /// Validates that there are exactly three non-empty images over `target`.
    pub fn new(target: Alphabet, images: Vec<Word>) -> Result<Self, MorphismError> {
        let source = Alphabet::ternary();
        if images.len() != source.size() {
            return Err(MorphismError::WrongImageCount {
                expected: source.size(),
                got: images.len(),
            });
        }
        for (i, image) in images.iter().enumerate() {
            let letter = source.letter_char(i as u8);
            if image.is_empty() {
                return Err(MorphismError::ErasingImage { letter });
            }
            if image.alphabet() != &target {
                return Err(MorphismError::ImageAlphabetMismatch {
                    letter,
                    got: image.alphabet().to_string(),
                    expected: target.to_string(),
                });
            }
        }
        Ok(Morphism { target, images })
    }

    /// Identity on `abc`.
    pub fn identity() -> Self {
        let sigma = Alphabet::ternary();
        let images = ["a", "b", "c"]
            .iter()
            .map(|t| Word::parse(&sigma, t).expect("static image"))
            .collect();
        Morphism::new(sigma, images).expect("static morphism")
    }

    /// The substitution `a -> abc, b -> ac, c -> b` whose fixed point is the
    /// s1-avoiding word vtm.
    pub fn vtm_substitution() -> Self {
        let sigma = Alphabet::ternary();
        let images = ["abc", "ac", "b"]
            .iter()
            .map(|t| Word::parse(&sigma, t).expect("static image"))
            .collect();
        Morphism::new(sigma, images).expect("static morphism")
    }

    pub fn source(&self) -> Alphabet {
        Alphabet::ternary()
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    /// Image of a source letter index.
    pub fn image(&self, letter: u8) -> &Word {
        &self.images[letter as usize]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Applies the morphism letter by letter.
    pub fn apply(&self, word: &Word) -> Result<Word, MorphismError> {
        let source = self.source();
        if word.alphabet() != &source {
            return Err(MorphismError::SourceMismatch {
                got: word.alphabet().to_string(),
                expected: source.to_string(),
            });
        }
        let total: usize = word.letters().iter().map(|&l| self.images[l as usize].len()).sum();
        let mut letters = Vec::with_capacity(total);
        for &l in word.letters() {
            letters.extend_from_slice(self.images[l as usize].letters());
        }
        Ok(Word::from_letters_unchecked(&self.target, letters))
    }

    /// Parses the morphism file format:
    ///
    /// ```text
    /// # comment
    /// target=01     (optional; otherwise inferred from first use)
    /// a=0110
    /// b=010
    /// c=1
    /// ```
    ///
    /// Each of `a`, `b`, `c` must be defined exactly once with a non-empty
    /// image. When `target` is passed by the caller it overrides inference
    /// and any header must match it.
    pub fn parse(text: &str, target: Option<&Alphabet>) -> Result<Self, MorphismParseError> {
        let mut declared: Option<(usize, Alphabet)> = None;
        let mut defs: [Option<(usize, String)>; 3] = [None, None, None];
        let source = Alphabet::ternary();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((lhs, rhs)) = line.split_once('=') else {
                return Err(MorphismParseError::MalformedLine {
                    line: line_no,
                    text: raw.to_string(),
                });
            };
            let lhs = lhs.trim();
            let rhs = rhs.trim();
            if lhs == "target" {
                if declared.is_some() {
                    return Err(MorphismParseError::DuplicateTarget { line: line_no });
                }
                let alpha = Alphabet::new(rhs).map_err(|source| {
                    MorphismParseError::BadTargetAlphabet { line: line_no, source }
                })?;
                declared = Some((line_no, alpha));
                continue;
            }
            let mut lhs_chars = lhs.chars();
            let (Some(letter), None) = (lhs_chars.next(), lhs_chars.next()) else {
                return Err(MorphismParseError::MalformedLine {
                    line: line_no,
                    text: raw.to_string(),
                });
            };
            let Some(source_idx) = source.index_of(letter) else {
                return Err(MorphismParseError::UnknownSourceLetter { line: line_no, letter });
            };
            let slot = &mut defs[source_idx as usize];
            if slot.is_some() {
                return Err(MorphismParseError::DuplicateDefinition { line: line_no, letter });
            }
            if rhs.is_empty() {
                return Err(MorphismParseError::EmptyImage { line: line_no, letter });
            }
            *slot = Some((line_no, rhs.to_string()));
        }

        for (i, slot) in defs.iter().enumerate() {
            if slot.is_none() {
                return Err(MorphismParseError::MissingDefinition {
                    letter: source.letter_char(i as u8),
                });
            }
        }

        let target_alpha = match (target, &declared) {
            (Some(t), Some((line, d))) => {
                if t != d {
                    return Err(MorphismParseError::TargetMismatch {
                        line: *line,
                        declared: d.to_string(),
                        expected: t.to_string(),
                    });
                }
                t.clone()
            }
            (Some(t), None) => t.clone(),
            (None, Some((_, d))) => d.clone(),
            (None, None) => {
                // infer from first use, in definition order a, b, c
                let mut letters = String::new();
                for slot in &defs {
                    for c in slot.as_ref().expect("checked above").1.chars() {
                        if !letters.contains(c) {
                            letters.push(c);
                        }
                    }
                }
                Alphabet::new(&letters)
                    .map_err(|source| MorphismParseError::BadTargetAlphabet { line: 0, source })?
            }
        };

        let mut images = Vec::with_capacity(3);
        for slot in &defs {
            let (line_no, image_text) = slot.as_ref().expect("checked above");
            let image = Word::parse(&target_alpha, image_text).map_err(|e| match e {
                crate::words::WordError::UnknownLetter { letter, .. } => {
                    MorphismParseError::ImageLetterOutsideTarget {
                        line: *line_no,
                        letter,
                        target: target_alpha.to_string(),
                    }
                }
                other => MorphismParseError::BadTargetAlphabet { line: *line_no, source: other },
            })?;
            images.push(image);
        }
        Morphism::new(target_alpha, images).map_err(|e| match e {
            MorphismError::ErasingImage { letter } => {
                MorphismParseError::EmptyImage { line: 0, letter }
            }
            _ => unreachable!("construction validated during parsing"),
        })
    }

    /// Serializes to the morphism file format, with an explicit target
    /// header so the text is self-describing.
    pub fn to_file_string(&self) -> String {
        let source = self.source();
        let mut out = format!("target={}\n", self.target);
        for (i, image) in self.images.iter().enumerate() {
            out.push_str(&format!("{}={}\n", source.letter_char(i as u8), image));
        }
        out
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let source = self.source();
        for (i, image) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", source.letter_char(i as u8), image)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A test-set factor whose image contains a square, with the minimal
/// occurrence as witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorFailure {
    pub factor: Word,
    pub occurrence: SquareOccurrence,
}

/// Result of checking a morphism on a factor test set. Failures list every
/// violating factor, not just the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TestReport {
    pub verdict: Verdict,
    pub checked_factor_count: usize,
    pub failures: Vec<FactorFailure>,
    pub test_set_source: TestSetSource,
    pub test_set_max_len: usize,
}

impl TestReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Length of the shortest factor whose image contains a square.
    pub fn minimal_failing_len(&self) -> Option<usize> {
        self.failures.iter().map(|f| f.factor.len()).min()
    }

    /// Re-checks every recorded witness against freshly computed images.
    pub fn reverify(&self, f: &Morphism) -> Result<bool, MorphismError> {
        for failure in &self.failures {
            let image = f.apply(&failure.factor)?;
            if !failure.occurrence.verify_in(&image) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Checks that the image of every factor in `test_set` is square-free.
///
/// For a test set of factors of length at most 7 of a word avoiding `s1` or
/// `s2`, a pass is equivalent to the image of the whole word being
/// square-free, and a fail pinpoints every short factor that breaks.
pub fn theorem1_check(f: &Morphism, test_set: &TestSet) -> Result<TestReport, MorphismError> {
    let mut failures = Vec::new();
    for factor in test_set.factors() {
        let image = f.apply(factor)?;
        if let Some(occurrence) = image.find_minimal_square() {
            failures.push(FactorFailure { factor: factor.clone(), occurrence });
        }
    }
    Ok(TestReport {
        verdict: if failures.is_empty() { Verdict::Pass } else { Verdict::Fail },
        checked_factor_count: test_set.len(),
        failures,
        test_set_source: test_set.source().clone(),
        test_set_max_len: test_set.max_len(),
    })
}

/// Every square-free ternary word of a given length, in lexicographic
/// order. Counts by length start 3, 6, 12, 18, 30.
pub fn square_free_ternary_words(len: usize) -> Vec<Word> {
    fn extend(current: &mut Vec<u8>, len: usize, out: &mut Vec<Word>, sigma: &Alphabet) {
        if current.len() == len {
            out.push(Word::from_letters_unchecked(sigma, current.clone()));
            return;
        }
        for letter in 0..3u8 {
            current.push(letter);
            if !ends_with_square(current) {
                extend(current, len, out, sigma);
            }
            current.pop();
        }
    }
    let sigma = Alphabet::ternary();
    let mut out = Vec::new();
    if len > 0 {
        extend(&mut Vec::with_capacity(len), len, &mut out, &sigma);
    }
    out
}

fn ends_with_square(w: &[u8]) -> bool {
    let i = w.len();
    (1..=i / 2).any(|p| w[i - p..] == w[i - 2 * p..i - p])
}

/// The test set for [`crochemore_check`]: all square-free ternary words of
/// length 1 through 5 (69 words).
pub fn crochemore_test_set() -> TestSet {
    let mut factors = Vec::new();
    for len in 1..=CROCHEMORE_LEN {
        factors.extend(square_free_ternary_words(len));
    }
    TestSet::from_factors(factors, CROCHEMORE_LEN, TestSetSource::AllSquareFree)
}

/// Checks whether `f` maps every square-free ternary word of length at most
/// 5 to a square-free word; a pass means `f` preserves square-freeness on
/// ternary words of every length.
pub fn crochemore_check(f: &Morphism) -> TestReport {
    theorem1_check(f, &crochemore_test_set()).expect("internal test set is over the source")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AffixKind {
    Prefix,
    Suffix,
}

/// `image(contained)` is a prefix or suffix of `image(container)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AffixConflict {
    pub contained: u8,
    pub container: u8,
    pub kind: AffixKind,
}

/// Pairs of distinct letters where one image is a prefix or suffix of the
/// other. Empty for every morphism that passes a factor test containing all
/// six square-free words of length 2: if `f(x)` were a prefix of `f(y)`,
/// `f(xy)` would begin with the square `f(x)f(x)`.
pub fn image_affix_conflicts(f: &Morphism) -> Vec<AffixConflict> {
    let mut out = Vec::new();
    for x in 0..3u8 {
        for y in 0..3u8 {
            if x == y {
                continue;
            }
            let (ix, iy) = (f.image(x).letters(), f.image(y).letters());
            if ix.len() > iy.len() {
                continue;
            }
            if iy.starts_with(ix) {
                out.push(AffixConflict { contained: x, container: y, kind: AffixKind::Prefix });
            }
            if iy.ends_with(ix) {
                out.push(AffixConflict { contained: x, container: y, kind: AffixKind::Suffix });
            }
        }
    }
    out
}

/// `image(factor)` occurs inside `image(letter)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentConflict {
    pub factor: Word,
    pub letter: u8,
}

/// Test-set factors of length >= 4 whose image occurs inside the image of a
/// single letter. Empty for every morphism passing the length-7 factor
/// test: a factor long enough to span a letter twice forces a square, and a
/// factor over the other two letters is square-free only up to length 3.
pub fn image_containment_conflicts(
    f: &Morphism,
    test_set: &TestSet,
) -> Result<Vec<ContainmentConflict>, MorphismError> {
    let mut out = Vec::new();
    for factor in test_set.factors() {
        if factor.len() < 4 {
            continue;
        }
        let image = f.apply(factor)?;
        for letter in 0..3u8 {
            let container = f.image(letter);
            if container.len() >= image.len() && container.contains_factor(&image) {
                out.push(ContainmentConflict { factor: factor.clone(), letter });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thue::{saturated_test_set, AvoidanceLabel, GeneratorSpec};

    fn sigma() -> Alphabet {
        Alphabet::ternary()
    }

    fn constant_morphism() -> Morphism {
        let target = Alphabet::binary();
        let zero = Word::parse(&target, "0").unwrap();
        Morphism::new(target, vec![zero.clone(), zero.clone(), zero]).unwrap()
    }

    fn s1_test_set() -> TestSet {
        saturated_test_set(&GeneratorSpec::for_label(AvoidanceLabel::S1), 7).unwrap()
    }

    #[test]
    fn apply_examples() {
        let id = Morphism::identity();
        let u = Word::parse(&sigma(), "abc").unwrap();
        assert_eq!(id.apply(&u).unwrap(), u);

        let f = Morphism::vtm_substitution();
        let ab = Word::parse(&sigma(), "ab").unwrap();
        assert_eq!(f.apply(&ab).unwrap().to_string(), "abcac");

        let target = Alphabet::binary();
        let g = Morphism::new(
            target.clone(),
            vec![
                Word::parse(&target, "01").unwrap(),
                Word::parse(&target, "0").unwrap(),
                Word::parse(&target, "1").unwrap(),
            ],
        )
        .unwrap();
        let aba = Word::parse(&sigma(), "aba").unwrap();
        assert_eq!(g.apply(&aba).unwrap().to_string(), "01001");
    }

    #[test]
    fn apply_rejects_foreign_words() {
        let f = Morphism::identity();
        let other = Alphabet::binary();
        let w = Word::parse(&other, "01").unwrap();
        assert!(matches!(f.apply(&w), Err(MorphismError::SourceMismatch { .. })));
    }

    #[test]
    fn non_erasing_is_enforced() {
        let target = Alphabet::binary();
        let err = Morphism::new(
            target.clone(),
            vec![
                Word::empty(&target),
                Word::parse(&target, "0").unwrap(),
                Word::parse(&target, "1").unwrap(),
            ],
        )
        .unwrap_err();
        assert_eq!(err, MorphismError::ErasingImage { letter: 'a' });
    }

    #[test]
    fn factor_test_passes_identity_and_vtm() {
        let ts = s1_test_set();
        assert!(theorem1_check(&Morphism::identity(), &ts).unwrap().passed());
        assert!(theorem1_check(&Morphism::vtm_substitution(), &ts).unwrap().passed());
    }

    #[test]
    fn factor_test_fails_constant_with_length_2_witness() {
        let report = theorem1_check(&constant_morphism(), &s1_test_set()).unwrap();
        assert!(!report.passed());
        assert_eq!(report.minimal_failing_len(), Some(2));
        assert!(report.reverify(&constant_morphism()).unwrap());
        let shortest = report
            .failures
            .iter()
            .find(|f| f.factor.len() == 2)
            .expect("length-2 failure");
        assert_eq!(shortest.occurrence.root().to_string(), "0");
    }

    #[test]
    fn square_free_word_counts_by_length() {
        let counts: Vec<usize> = (1..=5).map(|l| square_free_ternary_words(l).len()).collect();
        assert_eq!(counts, [3, 6, 12, 18, 30]);
        assert_eq!(crochemore_test_set().len(), 69);
    }

    #[test]
    fn crochemore_passes_identity_and_letter_renamings() {
        assert!(crochemore_check(&Morphism::identity()).passed());
        let renaming = Morphism::new(
            sigma(),
            vec![
                Word::parse(&sigma(), "b").unwrap(),
                Word::parse(&sigma(), "c").unwrap(),
                Word::parse(&sigma(), "a").unwrap(),
            ],
        )
        .unwrap();
        assert!(crochemore_check(&renaming).passed());
    }

    #[test]
    fn crochemore_fails_constant_on_a_pair() {
        let report = crochemore_check(&constant_morphism());
        assert!(!report.passed());
        assert_eq!(report.minimal_failing_len(), Some(2));
    }

    // The vtm substitution does not preserve square-freeness on all ternary
    // words: aba is square-free but its image abc.ac.abc contains (ca)(ca).
    // It still passes the factor test above because aba is not a factor of
    // the word the substitution generates.
    #[test]
    fn crochemore_fails_vtm_substitution_on_aba() {
        let f = Morphism::vtm_substitution();
        let image = f.apply(&Word::parse(&sigma(), "aba").unwrap()).unwrap();
        assert_eq!(image.to_string(), "abcacabc");
        let occ = image.find_minimal_square().unwrap();
        assert_eq!((occ.start(), occ.root().to_string()), (2, "ca".into()));

        let report = crochemore_check(&f);
        assert!(!report.passed());
        assert_eq!(report.minimal_failing_len(), Some(3));
        let shortest = report.failures.iter().find(|x| x.factor.len() == 3).unwrap();
        assert_eq!(shortest.factor.to_string(), "aba");
    }

    #[test]
    fn parse_thue_file() {
        let f = Morphism::parse("a=abc\nb=ac\nc=b", None).unwrap();
        assert_eq!(f, Morphism::vtm_substitution());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Morphism::parse("a=\nb=a\nc=b", None),
            Err(MorphismParseError::EmptyImage { letter: 'a', .. })
        ));
        assert!(matches!(
            Morphism::parse("a=01\nb=0", None),
            Err(MorphismParseError::MissingDefinition { letter: 'c' })
        ));
        assert!(matches!(
            Morphism::parse("a=0\na=1\nb=0\nc=1", None),
            Err(MorphismParseError::DuplicateDefinition { letter: 'a', .. })
        ));
        assert!(matches!(
            Morphism::parse("d=0\nb=0\nc=1", None),
            Err(MorphismParseError::UnknownSourceLetter { letter: 'd', .. })
        ));
        assert!(matches!(
            Morphism::parse("a 0\nb=0\nc=1", None),
            Err(MorphismParseError::MalformedLine { line: 1, .. })
        ));
        let target = Alphabet::binary();
        assert!(matches!(
            Morphism::parse("a=0\nb=1\nc=x", Some(&target)),
            Err(MorphismParseError::ImageLetterOutsideTarget { letter: 'x', .. })
        ));
        assert!(matches!(
            Morphism::parse("target=ab\na=a\nb=b\nc=ab", Some(&target)),
            Err(MorphismParseError::TargetMismatch { .. })
        ));
    }

    #[test]
    fn parse_with_header_comments_and_roundtrip() {
        let text = "# binary example\ntarget=01\na=010\nb=01\nc=1\n";
        let f = Morphism::parse(text, None).unwrap();
        assert_eq!(f.target().to_string(), "01");
        let roundtrip = Morphism::parse(&f.to_file_string(), None).unwrap();
        assert_eq!(f, roundtrip);
    }

    #[test]
    fn inferred_target_follows_first_use() {
        let f = Morphism::parse("a=10\nb=2\nc=0", None).unwrap();
        assert_eq!(f.target().to_string(), "102");
    }

    #[test]
    fn affix_conflicts() {
        assert!(image_affix_conflicts(&Morphism::identity()).is_empty());
        assert!(image_affix_conflicts(&Morphism::vtm_substitution()).is_empty());
        // constant: every ordered pair conflicts as both prefix and suffix
        assert_eq!(image_affix_conflicts(&constant_morphism()).len(), 12);
    }

    #[test]
    fn containment_conflicts_are_empty_on_square_free_factor_sets() {
        // A square-free factor of length >= 4 either uses a letter (image
        // too long to fit inside that letter's image) or lives on two
        // letters (impossible beyond length 3), so nothing can conflict.
        let ts = s1_test_set();
        for f in [Morphism::vtm_substitution(), Morphism::identity(), constant_morphism()] {
            assert!(image_containment_conflicts(&f, &ts).unwrap().is_empty());
        }
    }

    #[test]
    fn containment_detection_fires_on_a_crafted_factor() {
        // abab is not square-free, but a custom test set may carry it; its
        // image 0101 sits inside the long image of c.
        let sigma = sigma();
        let abab = Word::parse(&sigma, "abab").unwrap();
        let ts = TestSet::from_factors(
            vec![abab],
            4,
            TestSetSource::Custom { description: "crafted".into() },
        );
        let target = Alphabet::binary();
        let f = Morphism::new(
            target.clone(),
            vec![
                Word::parse(&target, "0").unwrap(),
                Word::parse(&target, "1").unwrap(),
                Word::parse(&target, "0101010101").unwrap(),
            ],
        )
        .unwrap();
        let conflicts = image_containment_conflicts(&f, &ts).unwrap();
        assert!(conflicts.iter().any(|c| c.letter == 2));
    }
}
