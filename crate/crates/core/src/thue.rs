//! Generators for square-free ternary words avoiding a fixed set of
//! length-3 patterns, and saturated factor test sets built from them.
//!
//! Three classical avoidance sets over `abc` are supported, each of the
//! shape `xyx`:
//!
//! * `s1 = {aba, cbc}` — avoided by *vtm* (the "variation of Thue–Morse"
//!   word), realized here as the fixed point of `a -> abc, b -> ac, c -> b`.
//!   A variant set `{aba, bcb}` is sometimes quoted for vtm; the two are not
//!   equivalent, even up to letter renaming. This library uses `{aba, cbc}`
//!   throughout, which is what the fixed point actually avoids.
//! * `s2 = {aba, aca}` and `s3 = {aba, bab}` — realized as the
//!   lexicographically least square-free word avoiding the set, computed by
//!   depth-first backtracking over `a < b < c`.
//!
//! Every square-free ternary word contains all six square-free words of
//! length 2; the words generated here omit exactly their two forbidden
//! length-3 patterns (see [`crate::analysis::length3_census`]).

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::words::{Alphabet, Word};

/// Default cap on generated prefix length.
pub const DEFAULT_MAX_PREFIX_LEN: usize = 1 << 20;
/// Default cap on backtracking letter-placement attempts.
pub const DEFAULT_MAX_BACKTRACK_STEPS: u64 = 100_000_000;
/// Prefix length the saturation loop starts from (then doubles).
pub const SATURATION_START_LEN: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("requested prefix of {requested} letters exceeds the budget of {budget}")]
    PrefixBudgetExceeded { requested: usize, budget: usize },
    #[error("backtracking exhausted its budget of {budget} steps at length {reached}")]
    BacktrackBudgetExhausted { budget: u64, reached: usize },
    #[error("the morphic generator is only defined for s1")]
    MorphicUnavailable { label: AvoidanceLabel },
    #[error("no factor set saturation within the prefix budget of {budget} letters")]
    SaturationBudgetExceeded { budget: usize },
}

/// Which avoidance set a word is generated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AvoidanceLabel {
    S1,
    S2,
    S3,
}

impl AvoidanceLabel {
    pub fn all() -> [AvoidanceLabel; 3] {
        [AvoidanceLabel::S1, AvoidanceLabel::S2, AvoidanceLabel::S3]
    }
}

impl fmt::Display for AvoidanceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AvoidanceLabel::S1 => write!(f, "s1"),
            AvoidanceLabel::S2 => write!(f, "s2"),
            AvoidanceLabel::S3 => write!(f, "s3"),
        }
    }
}

impl std::str::FromStr for AvoidanceLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "s1" => Ok(AvoidanceLabel::S1),
            "s2" => Ok(AvoidanceLabel::S2),
            "s3" => Ok(AvoidanceLabel::S3),
            other => Err(format!("unknown avoidance set {other:?} (expected s1, s2 or s3)")),
        }
    }
}

/// A labelled set of forbidden length-3 factors of shape `xyx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceSet {
    label: AvoidanceLabel,
    forbidden: Vec<Word>,
}

impl AvoidanceSet {
    /// `{aba, cbc}`, avoided by the morphic word vtm.
    pub fn s1() -> Self {
        AvoidanceSet::for_label(AvoidanceLabel::S1)
    }

    /// `{aba, aca}`.
    pub fn s2() -> Self {
        AvoidanceSet::for_label(AvoidanceLabel::S2)
    }

    /// `{aba, bab}`.
    pub fn s3() -> Self {
        AvoidanceSet::for_label(AvoidanceLabel::S3)
    }

    pub fn for_label(label: AvoidanceLabel) -> Self {
        let sigma = Alphabet::ternary();
        let parse = |texts: [&str; 2]| -> Vec<Word> {
            texts
                .iter()
                .map(|t| Word::parse(&sigma, t).expect("static pattern"))
                .collect()
        };
        let forbidden = match label {
            AvoidanceLabel::S1 => parse(["aba", "cbc"]),
            AvoidanceLabel::S2 => parse(["aba", "aca"]),
            AvoidanceLabel::S3 => parse(["aba", "bab"]),
        };
        debug_assert!(forbidden.iter().all(|w| {
            w.len() == 3 && w.letter(0) == w.letter(2) && w.letter(0) != w.letter(1)
        }));
        AvoidanceSet { label, forbidden }
    }

    pub fn label(&self) -> AvoidanceLabel {
        self.label
    }

    pub fn forbidden(&self) -> &[Word] {
        &self.forbidden
    }
}

/// How a prefix is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorMethod {
    MorphicFixedPoint,
    Backtracking,
}

impl fmt::Display for GeneratorMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorMethod::MorphicFixedPoint => write!(f, "morphic-fixed-point"),
            GeneratorMethod::Backtracking => write!(f, "backtracking"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorBudget {
    pub max_prefix_len: usize,
    pub max_backtrack_steps: u64,
}

impl Default for GeneratorBudget {
    fn default() -> Self {
        GeneratorBudget {
            max_prefix_len: DEFAULT_MAX_PREFIX_LEN,
            max_backtrack_steps: DEFAULT_MAX_BACKTRACK_STEPS,
        }
    }
}

/// A fully specified generator: avoidance set, method and budgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub avoidance: AvoidanceLabel,
    pub method: GeneratorMethod,
    pub budget: GeneratorBudget,
}

impl GeneratorSpec {
    /// The default generator for a label: the morphic fixed point for `s1`,
    /// backtracking for `s2` and `s3`.
    pub fn for_label(label: AvoidanceLabel) -> Self {
        let method = match label {
            AvoidanceLabel::S1 => GeneratorMethod::MorphicFixedPoint,
            _ => GeneratorMethod::Backtracking,
        };
        GeneratorSpec { avoidance: label, method, budget: GeneratorBudget::default() }
    }
}

/// First `n` letters of the fixed point of `a -> abc, b -> ac, c -> b`
/// starting from `a` (the word vtm). Square-free; avoids `aba` and `cbc`.
pub fn s1_word_prefix(n: usize) -> Word {
    let sigma = Alphabet::ternary();
    let mut w: Vec<u8> = vec![0];
    while w.len() < n {
        let mut next = Vec::with_capacity(w.len() * 3);
        for &l in &w {
            match l {
                0 => next.extend_from_slice(&[0, 1, 2]),
                1 => next.extend_from_slice(&[0, 2]),
                _ => next.push(1),
            }
        }
        w = next;
    }
    w.truncate(n);
    Word::from_letters_unchecked(&sigma, w)
}

/// First `n` letters of the lexicographically least square-free word
/// avoiding `{aba, aca}`, under the default budget.
pub fn s2_word_prefix(n: usize) -> Result<Word, GenerateError> {
    backtracking_word_prefix(&AvoidanceSet::s2(), n, GeneratorBudget::default())
}

/// First `n` letters of the lexicographically least square-free word
/// avoiding `{aba, bab}`, under the default budget.
pub fn s3_word_prefix(n: usize) -> Result<Word, GenerateError> {
    backtracking_word_prefix(&AvoidanceSet::s3(), n, GeneratorBudget::default())
}

/// Dispatches on the spec's method and label.
pub fn generate_prefix(spec: &GeneratorSpec, n: usize) -> Result<Word, GenerateError> {
    if n > spec.budget.max_prefix_len {
        return Err(GenerateError::PrefixBudgetExceeded {
            requested: n,
            budget: spec.budget.max_prefix_len,
        });
    }
    match spec.method {
        GeneratorMethod::MorphicFixedPoint => {
            if spec.avoidance != AvoidanceLabel::S1 {
                return Err(GenerateError::MorphicUnavailable { label: spec.avoidance });
            }
            Ok(s1_word_prefix(n))
        }
        GeneratorMethod::Backtracking => backtracking_word_prefix(
            &AvoidanceSet::for_label(spec.avoidance),
            n,
            spec.budget,
        ),
    }
}

/// True iff `word` is square-free and contains none of the forbidden
/// patterns of `set`.
pub fn verify_avoidance(word: &Word, set: &AvoidanceSet) -> bool {
    word.is_square_free() && !set.forbidden().iter().any(|p| word.contains_factor(p))
}

/// Depth-first search for the lexicographically least square-free word of
/// length `n` avoiding `set`, trying letters in order `a < b < c`.
///
/// After each placement the word is square-free and avoids the set, so only
/// squares and patterns *ending at the new letter* need checking. Squares of
/// root `p >= 2` ending at position `i` require the final two letters to
/// recur at distance `p`; candidate distances come from per-bigram position
/// lists, which shrink in LIFO order on backtrack.
pub fn backtracking_word_prefix(
    set: &AvoidanceSet,
    n: usize,
    budget: GeneratorBudget,
) -> Result<Word, GenerateError> {
    if n > budget.max_prefix_len {
        return Err(GenerateError::PrefixBudgetExceeded {
            requested: n,
            budget: budget.max_prefix_len,
        });
    }
    let sigma = Alphabet::ternary();
    let forbidden: Vec<&[u8]> = set.forbidden().iter().map(|w| w.letters()).collect();

    let mut w: Vec<u8> = Vec::with_capacity(n);
    // bigram_positions[x][y] = positions i (ascending) with w[i-1] = x, w[i] = y
    let mut bigram_positions: [[Vec<u32>; 3]; 3] = Default::default();
    // next_try[d] = next letter to try at depth d; for d < w.len() it holds
    // the letter currently placed there
    let mut next_try: Vec<u8> = vec![0];
    let mut steps: u64 = 0;

    while w.len() < n {
        let t = *next_try.last().expect("non-empty try stack");
        if t >= 3 {
            // all letters failed at this depth: retract the previous letter
            next_try.pop();
            let letter = w
                .pop()
                .unwrap_or_else(|| unreachable!("square-free ternary words extend forever"));
            let i = w.len();
            if i >= 1 {
                let popped = bigram_positions[w[i - 1] as usize][letter as usize].pop();
                debug_assert_eq!(popped, Some(i as u32));
            }
            *next_try.last_mut().expect("non-empty try stack") += 1;
            continue;
        }
        steps += 1;
        if steps > budget.max_backtrack_steps {
            return Err(GenerateError::BacktrackBudgetExhausted {
                budget: budget.max_backtrack_steps,
                reached: w.len(),
            });
        }
        w.push(t);
        if extension_is_valid(&w, &forbidden, &bigram_positions) {
            let i = w.len() - 1;
            if i >= 1 {
                bigram_positions[w[i - 1] as usize][t as usize].push(i as u32);
            }
            next_try.push(0);
        } else {
            w.pop();
            *next_try.last_mut().expect("non-empty try stack") += 1;
        }
    }
    Ok(Word::from_letters_unchecked(&sigma, w))
}

/// Where a factor test set came from; recorded in every check report so
/// results name their own assumptions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TestSetSource {
    /// Factors of a saturated prefix of a generated word.
    Saturated {
        label: AvoidanceLabel,
        method: GeneratorMethod,
        saturation_prefix_len: usize,
    },
    /// Every square-free ternary word up to the set's length bound.
    AllSquareFree,
    Custom {
        description: String,
    },
}

impl fmt::Display for TestSetSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestSetSource::Saturated { label, method, saturation_prefix_len } => write!(
                f,
                "factors of the {label} word ({method}, saturated at prefix {saturation_prefix_len})"
            ),
            TestSetSource::AllSquareFree => write!(f, "all square-free ternary words"),
            TestSetSource::Custom { description } => write!(f, "{description}"),
        }
    }
}

/// A finite set of words to check a morphism on, with provenance.
///
/// Factors are kept sorted by length and then lexicographically, so
/// iteration order and serialized reports are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestSet {
    factors: Vec<Word>,
    max_len: usize,
    source: TestSetSource,
}

impl TestSet {
    pub fn from_factors(mut factors: Vec<Word>, max_len: usize, source: TestSetSource) -> Self {
        factors.sort_unstable_by(|a, b| {
            a.len().cmp(&b.len()).then_with(|| a.letters().cmp(b.letters()))
        });
        factors.dedup();
        debug_assert!(factors.iter().all(|w| !w.is_empty() && w.len() <= max_len));
        TestSet { factors, max_len, source }
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Length bound the set was built with.
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn source(&self) -> &TestSetSource {
        &self.source
    }

    pub fn saturation_prefix_len(&self) -> Option<usize> {
        match self.source {
            TestSetSource::Saturated { saturation_prefix_len, .. } => {
                Some(saturation_prefix_len)
            }
            _ => None,
        }
    }

    /// Membership test (binary search over the sorted factors).
    pub fn contains(&self, word: &Word) -> bool {
        self.factors
            .binary_search_by(|f| {
                f.len()
                    .cmp(&word.len())
                    .then_with(|| f.letters().cmp(word.letters()))
            })
            .is_ok()
    }

    /// The subset of factors with length at most `max_len`, keeping
    /// provenance. Used to re-run checks at a smaller length bound.
    pub fn restrict(&self, max_len: usize) -> TestSet {
        let factors = self
            .factors
            .iter()
            .take_while(|f| f.len() <= max_len)
            .cloned()
            .collect();
        TestSet { factors, max_len, source: self.source.clone() }
    }
}

/// Builds the factor test set of a generated word by saturation: factor
/// sets of doubling prefixes (from 1024) are compared until two consecutive
/// doublings agree. Sound for these uniformly recurrent words at the scales
/// involved; the saturation prefix length is recorded for auditing.
pub fn saturated_test_set(spec: &GeneratorSpec, max_len: usize) -> Result<TestSet, GenerateError> {
    let mut prefix_len = SATURATION_START_LEN.min(spec.budget.max_prefix_len);
    let mut prev = generate_prefix(spec, prefix_len)?.factors_up_to(max_len);
    loop {
        let next_len = prefix_len * 2;
        if next_len > spec.budget.max_prefix_len {
            return Err(GenerateError::SaturationBudgetExceeded {
                budget: spec.budget.max_prefix_len,
            });
        }
        let cur = generate_prefix(spec, next_len)?.factors_up_to(max_len);
        if cur == prev {
            let source = TestSetSource::Saturated {
                label: spec.avoidance,
                method: spec.method,
                saturation_prefix_len: next_len,
            };
            return Ok(TestSet::from_factors(cur, max_len, source));
        }
        prev = cur;
        prefix_len = next_len;
    }
}

/// No square ends at the last position and no forbidden factor ends there.
fn extension_is_valid(
    w: &[u8],
    forbidden: &[&[u8]],
    bigram_positions: &[[Vec<u32>; 3]; 3],
) -> bool {
    let i = w.len() - 1;
    if i >= 2 {
        let tail = &w[i - 2..=i];
        if forbidden.contains(&tail) {
            return false;
        }
    }
    // root 1
    if i >= 1 && w[i] == w[i - 1] {
        return false;
    }
    // roots >= 2: the final bigram must recur at distance p = i - q
    if i >= 3 {
        let list = &bigram_positions[w[i - 1] as usize][w[i] as usize];
        // need 2p <= i + 1, i.e. q >= i - (i + 1) / 2
        let q_min = (i / 2) as u32;
        let from = list.partition_point(|&q| q < q_min);
        for &q in &list[from..] {
            let p = i - q as usize;
            debug_assert!(p >= 2);
            // w[i] = w[q] and w[i-1] = w[q-1] already hold; compare the rest
            let mut matches = true;
            for t in 2..p {
                if w[i - t] != w[i - p - t] {
                    matches = false;
                    break;
                }
            }
            if matches {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma() -> Alphabet {
        Alphabet::ternary()
    }

    #[test]
    fn s1_prefix_matches_substitution_iterates() {
        assert_eq!(s1_word_prefix(3).to_string(), "abc");
        assert_eq!(s1_word_prefix(12).to_string(), "abcacbabcbac");
        assert_eq!(
            s1_word_prefix(40).to_string(),
            "abcacbabcbacabcacbacabcbabcacbabcbacabcb"
        );
    }

    #[test]
    fn s1_prefixes_are_nested() {
        let long = s1_word_prefix(4096);
        for n in [1, 2, 3, 100, 1024] {
            assert_eq!(long.prefix(n), s1_word_prefix(n));
        }
    }

    #[test]
    fn s2_prefix_golden() {
        assert_eq!(s2_word_prefix(3).unwrap().to_string(), "abc");
        assert_eq!(s2_word_prefix(10).unwrap().to_string(), "abcacbabca");
        assert_eq!(
            s2_word_prefix(40).unwrap().to_string(),
            "abcacbabcbacbcabcbabcacbabcbacbcacbabcab"
        );
    }

    #[test]
    fn s3_prefix_golden() {
        assert_eq!(s3_word_prefix(2).unwrap().to_string(), "ab");
        assert_eq!(s3_word_prefix(10).unwrap().to_string(), "abcacbacab");
        assert_eq!(
            s3_word_prefix(40).unwrap().to_string(),
            "abcacbacabcacbcabcbacabcacbacabcbacbcabc"
        );
    }

    #[test]
    fn generated_prefixes_pass_their_avoidance_checks() {
        let n = 3000;
        assert!(verify_avoidance(&s1_word_prefix(n), &AvoidanceSet::s1()));
        assert!(verify_avoidance(&s2_word_prefix(n).unwrap(), &AvoidanceSet::s2()));
        assert!(verify_avoidance(&s3_word_prefix(n).unwrap(), &AvoidanceSet::s3()));
    }

    #[test]
    fn verify_avoidance_examples() {
        let w = Word::parse(&sigma(), "abcacb").unwrap();
        assert!(verify_avoidance(&w, &AvoidanceSet::s1()));
        let aba = Word::parse(&sigma(), "aba").unwrap();
        assert!(!verify_avoidance(&aba, &AvoidanceSet::s1()));
        let abab = Word::parse(&sigma(), "abab").unwrap();
        assert!(!verify_avoidance(&abab, &AvoidanceSet::s3()));
    }

    #[test]
    fn backtracking_agrees_with_naive_validity_scan() {
        // Re-derive the s2 word with a per-prefix full validity check.
        let fast = s2_word_prefix(200).unwrap();
        let set = AvoidanceSet::s2();
        for n in 1..=fast.len() {
            assert!(verify_avoidance(&fast.prefix(n), &set), "invalid prefix at {n}");
        }
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(s2_word_prefix(500).unwrap(), s2_word_prefix(500).unwrap());
        assert_eq!(s3_word_prefix(500).unwrap(), s3_word_prefix(500).unwrap());
    }

    #[test]
    fn budget_errors_signal_instead_of_looping() {
        let tight = GeneratorBudget { max_prefix_len: 8, max_backtrack_steps: 1000 };
        let err = backtracking_word_prefix(&AvoidanceSet::s2(), 9, tight).unwrap_err();
        assert!(matches!(err, GenerateError::PrefixBudgetExceeded { .. }));
        let starved = GeneratorBudget { max_prefix_len: 1 << 20, max_backtrack_steps: 10 };
        let err = backtracking_word_prefix(&AvoidanceSet::s2(), 100, starved).unwrap_err();
        assert!(matches!(err, GenerateError::BacktrackBudgetExhausted { .. }));
    }

    #[test]
    fn morphic_method_rejects_other_labels() {
        let spec = GeneratorSpec {
            avoidance: AvoidanceLabel::S2,
            method: GeneratorMethod::MorphicFixedPoint,
            budget: GeneratorBudget::default(),
        };
        assert!(matches!(
            generate_prefix(&spec, 10),
            Err(GenerateError::MorphicUnavailable { label: AvoidanceLabel::S2 })
        ));
    }

    #[test]
    fn saturated_test_set_k2_holds_all_short_square_free_words() {
        let ts = saturated_test_set(&GeneratorSpec::for_label(AvoidanceLabel::S1), 2).unwrap();
        let words: Vec<String> = ts.factors().iter().map(Word::to_string).collect();
        assert_eq!(words, ["a", "b", "c", "ab", "ac", "ba", "bc", "ca", "cb"]);
    }

    #[test]
    fn saturated_test_set_k3_censuses() {
        let ts1 = saturated_test_set(&GeneratorSpec::for_label(AvoidanceLabel::S1), 3).unwrap();
        let len3: Vec<String> = ts1
            .factors()
            .iter()
            .filter(|w| w.len() == 3)
            .map(Word::to_string)
            .collect();
        assert_eq!(len3.len(), 10);
        assert!(!len3.contains(&"aba".to_string()));
        assert!(!len3.contains(&"cbc".to_string()));

        let ts2 = saturated_test_set(&GeneratorSpec::for_label(AvoidanceLabel::S2), 3).unwrap();
        let len3: Vec<String> = ts2
            .factors()
            .iter()
            .filter(|w| w.len() == 3)
            .map(Word::to_string)
            .collect();
        assert_eq!(len3.len(), 10);
        assert!(!len3.contains(&"aba".to_string()));
        assert!(!len3.contains(&"aca".to_string()));
    }

    #[test]
    fn saturation_is_stable_for_longer_prefixes() {
        let spec = GeneratorSpec::for_label(AvoidanceLabel::S1);
        let ts = saturated_test_set(&spec, 7).unwrap();
        let sat = ts.saturation_prefix_len().unwrap();
        let longer = s1_word_prefix(sat * 4).factors_up_to(7);
        assert_eq!(ts.factors(), &longer[..]);
        // Golden sizes for the three saturated k = 7 sets.
        assert_eq!(ts.len(), 89);
        let ts2 = saturated_test_set(&GeneratorSpec::for_label(AvoidanceLabel::S2), 7).unwrap();
        assert_eq!(ts2.len(), 99);
        let ts3 = saturated_test_set(&GeneratorSpec::for_label(AvoidanceLabel::S3), 7).unwrap();
        assert_eq!(ts3.len(), 99);
    }

    #[test]
    fn test_set_membership_and_restriction() {
        let ts = saturated_test_set(&GeneratorSpec::for_label(AvoidanceLabel::S1), 7).unwrap();
        let abc = Word::parse(&sigma(), "abc").unwrap();
        let aba = Word::parse(&sigma(), "aba").unwrap();
        assert!(ts.contains(&abc));
        assert!(!ts.contains(&aba));
        let small = ts.restrict(2);
        assert_eq!(small.max_len(), 2);
        assert_eq!(small.len(), 9);
        assert!(small.factors().iter().all(|f| f.len() <= 2));
        assert_eq!(small.source(), ts.source());
    }
}
