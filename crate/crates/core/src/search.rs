//! Search harnesses over morphism spaces: empirical verification that the
//! length-7 factor test decides image square-freeness, and explorers that
//! gather evidence about how small the length bound could be.
//!
//! Every run is deterministic: exhaustive spaces enumerate in a fixed
//! order, random spaces derive from a seed, and parallel examination
//! reduces in enumeration order. Outcomes serialize to JSON byte-identically
//! across runs of the same build.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{scan_xzyzx, PatternKind};
use crate::morphism::{theorem1_check, Morphism, MorphismError, Verdict};
use crate::squares::SquareOccurrence;
use crate::thue::{
    generate_prefix, saturated_test_set, AvoidanceLabel, GenerateError, GeneratorSpec, TestSet,
};
use crate::words::{Alphabet, Word};

/// Exhaustive spaces larger than this are refused.
pub const MAX_EXHAUSTIVE_SIZE: u128 = 100_000_000;

/// Smallest and largest supported target alphabet for searches.
pub const TARGET_SIZE_RANGE: RangeInclusive<usize> = 2..=4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("target alphabet must have 2 to 4 letters, got {got}")]
    TargetSizeOutOfRange { got: usize },
    #[error("image length bounds must satisfy 1 <= min <= max <= {max_allowed}, got {min}..={max}")]
    BadImageLengthBounds { min: usize, max: usize, max_allowed: usize },
    #[error("exhaustive space has {size} morphisms, above the limit of {MAX_EXHAUSTIVE_SIZE}")]
    SpaceTooLarge { size: u128 },
    #[error("this operation is defined for s1 and s2 only, got {label}")]
    UnsupportedAvoidance { label: AvoidanceLabel },
    #[error("empty k range")]
    EmptyKRange,
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}

/// How a space is traversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum SearchMode {
    /// Every morphism with image lengths in bounds, in lexicographic order
    /// over (image of a, image of b, image of c), images ordered shortlex.
    Exhaustive,
    /// `samples` morphisms drawn reproducibly from `seed`: image lengths
    /// uniform in bounds, letters uniform.
    Random { samples: usize, seed: u64 },
}

/// A space of non-erasing morphisms from `abc` into a target alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpace {
    target: Alphabet,
    min_image_len: usize,
    max_image_len: usize,
    mode: SearchMode,
}

impl SearchSpace {
    pub fn exhaustive(target: Alphabet, max_image_len: usize) -> Result<Self, SearchError> {
        SearchSpace::new(target, 1, max_image_len, SearchMode::Exhaustive)
    }

    pub fn random(
        target: Alphabet,
        max_image_len: usize,
        samples: usize,
        seed: u64,
    ) -> Result<Self, SearchError> {
        SearchSpace::new(target, 1, max_image_len, SearchMode::Random { samples, seed })
    }

    pub fn new(
        target: Alphabet,
        min_image_len: usize,
        max_image_len: usize,
        mode: SearchMode,
    ) -> Result<Self, SearchError> {
        if !TARGET_SIZE_RANGE.contains(&target.size()) {
            return Err(SearchError::TargetSizeOutOfRange { got: target.size() });
        }
        if min_image_len < 1
            || min_image_len > max_image_len
            || max_image_len > crate::morphism::DEFAULT_MAX_IMAGE_LEN
        {
            return Err(SearchError::BadImageLengthBounds {
                min: min_image_len,
                max: max_image_len,
                max_allowed: crate::morphism::DEFAULT_MAX_IMAGE_LEN,
            });
        }
        let space = SearchSpace { target, min_image_len, max_image_len, mode };
        if matches!(mode, SearchMode::Exhaustive) && space.exhaustive_size() > MAX_EXHAUSTIVE_SIZE
        {
            return Err(SearchError::SpaceTooLarge { size: space.exhaustive_size() });
        }
        Ok(space)
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn mode(&self) -> SearchMode {
        self.mode
    }

    /// Number of candidate images per letter.
    pub fn images_per_letter(&self) -> u128 {
        let t = self.target.size() as u128;
        (self.min_image_len..=self.max_image_len).map(|l| t.pow(l as u32)).sum()
    }

    /// Number of morphisms in the exhaustive traversal.
    pub fn exhaustive_size(&self) -> u128 {
        self.images_per_letter().pow(3)
    }

    /// Number of morphisms this space yields.
    pub fn len(&self) -> usize {
        match self.mode {
            SearchMode::Exhaustive => self.exhaustive_size() as usize,
            SearchMode::Random { samples, .. } => samples,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn summary(&self) -> SpaceSummary {
        SpaceSummary {
            target: self.target.to_string(),
            min_image_len: self.min_image_len,
            max_image_len: self.max_image_len,
            mode: self.mode,
        }
    }
}

/// Serialized description of a space, embedded in outcomes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceSummary {
    pub target: String,
    pub min_image_len: usize,
    pub max_image_len: usize,
    #[serde(flatten)]
    pub mode: SearchMode,
}

/// Deterministic stream of the space's morphisms.
pub fn enumerate_morphisms(space: &SearchSpace) -> impl Iterator<Item = Morphism> + '_ {
    MorphismStream::new(space)
}

enum StreamState {
    Exhaustive { all_images: Vec<Word>, next: Option<[usize; 3]> },
    Random { rng: Box<ChaCha8Rng>, remaining: usize },
}

struct MorphismStream<'a> {
    space: &'a SearchSpace,
    state: StreamState,
}

impl<'a> MorphismStream<'a> {
    fn new(space: &'a SearchSpace) -> Self {
        let state = match space.mode {
            SearchMode::Exhaustive => {
                let mut all_images = Vec::with_capacity(space.images_per_letter() as usize);
                for len in space.min_image_len..=space.max_image_len {
                    push_words_of_len(space.target(), len, &mut all_images);
                }
                StreamState::Exhaustive { all_images, next: Some([0, 0, 0]) }
            }
            SearchMode::Random { samples, seed } => StreamState::Random {
                rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
                remaining: samples,
            },
        };
        MorphismStream { space, state }
    }
}

/// Appends every word of exactly `len` letters, lexicographically.
fn push_words_of_len(target: &Alphabet, len: usize, out: &mut Vec<Word>) {
    let t = target.size() as u8;
    let mut letters = vec![0u8; len];
    loop {
        out.push(Word::from_letters_unchecked(target, letters.clone()));
        // odometer increment
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            letters[pos] += 1;
            if letters[pos] < t {
                break;
            }
            letters[pos] = 0;
        }
    }
}

impl Iterator for MorphismStream<'_> {
    type Item = Morphism;

    fn next(&mut self) -> Option<Morphism> {
        match &mut self.state {
            StreamState::Exhaustive { all_images, next } => {
                let indices = (*next)?;
                let images: Vec<Word> =
                    indices.iter().map(|&i| all_images[i].clone()).collect();
                // advance the rightmost index first
                let mut advanced = indices;
                let mut pos = 3;
                *next = loop {
                    if pos == 0 {
                        break None;
                    }
                    pos -= 1;
                    advanced[pos] += 1;
                    if advanced[pos] < all_images.len() {
                        break Some(advanced);
                    }
                    advanced[pos] = 0;
                };
                Some(
                    Morphism::new(self.space.target.clone(), images)
                        .expect("enumerated images are valid"),
                )
            }
            StreamState::Random { rng, remaining } => {
                if *remaining == 0 {
                    return None;
                }
                *remaining -= 1;
                let t = self.space.target.size() as u8;
                let images: Vec<Word> = (0..3)
                    .map(|_| {
                        let len =
                            rng.gen_range(self.space.min_image_len..=self.space.max_image_len);
                        let letters: Vec<u8> = (0..len).map(|_| rng.gen_range(0..t)).collect();
                        Word::from_letters_unchecked(&self.space.target, letters)
                    })
                    .collect();
                Some(
                    Morphism::new(self.space.target.clone(), images)
                        .expect("sampled images are valid"),
                )
            }
        }
    }
}

/// A morphism where the factor-test verdict contradicts the square-freeness
/// of the prefix image. None are expected; any entry is a bug or a genuine
/// discovery and aborts the run it occurred in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub index: usize,
    pub morphism: String,
    pub test_verdict: Verdict,
    pub image_square: Option<SquareOccurrence>,
}

/// A morphism retained for follow-up, serialized in the morphism file
/// format together with its independent re-check result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub index: usize,
    pub morphism: String,
    pub min_failing_len: Option<usize>,
    pub reverified: bool,
}

/// Result of examining a morphism space. Serializes deterministically; the
/// `command` field carries the exact reproduction command line when the run
/// came from the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub command: String,
    pub space: SpaceSummary,
    pub avoidance: Option<AvoidanceLabel>,
    pub test_max_len: usize,
    pub k_range: Option<[usize; 2]>,
    pub saturation_prefix_len: usize,
    pub prefix_len: usize,
    pub examined: usize,
    pub test_pass_count: usize,
    pub image_square_free_count: usize,
    pub agreement_count: usize,
    pub disagreements: Vec<Disagreement>,
    /// minimal failing factor length -> number of failing morphisms
    pub histogram: BTreeMap<usize, usize>,
    pub candidates: Vec<Candidate>,
    pub largest_separated_k: Option<usize>,
}

/// Per-morphism examination record, reduced from the full test report.
struct Examined {
    index: usize,
    morphism: Morphism,
    min_failing_len: Option<usize>,
    image_square: Option<SquareOccurrence>,
}

/// Runs the factor test and the long-prefix square check over the whole
/// space, in parallel, reducing in enumeration order.
fn examine_space(
    space: &SearchSpace,
    test_set: &TestSet,
    prefix: &Word,
) -> Result<Vec<Examined>, SearchError> {
    let morphisms: Vec<Morphism> = enumerate_morphisms(space).collect();
    morphisms
        .into_par_iter()
        .enumerate()
        .map(|(index, morphism)| {
            let report = theorem1_check(&morphism, test_set)?;
            let image = morphism.apply(prefix)?;
            Ok(Examined {
                index,
                morphism,
                min_failing_len: report.minimal_failing_len(),
                image_square: image.find_minimal_square(),
            })
        })
        .collect()
}

/// Independent re-check of a candidate with the naive detector: the factor
/// test restricted to `max_len` must pass and the prefix image must contain
/// a square.
fn reverify_candidate(
    morphism: &Morphism,
    test_set: &TestSet,
    max_len: usize,
    prefix: &Word,
) -> Result<bool, SearchError> {
    for factor in test_set.restrict(max_len).factors() {
        if morphism.apply(factor)?.find_minimal_square_naive().is_some() {
            return Ok(false);
        }
    }
    Ok(morphism.apply(prefix)?.find_minimal_square_naive().is_some())
}

fn outcome_skeleton(space: &SearchSpace, test_set: &TestSet, prefix_len: usize) -> SearchOutcome {
    SearchOutcome {
        command: String::new(),
        space: space.summary(),
        avoidance: match test_set.source() {
            crate::thue::TestSetSource::Saturated { label, .. } => Some(*label),
            _ => None,
        },
        test_max_len: test_set.max_len(),
        k_range: None,
        saturation_prefix_len: test_set.saturation_prefix_len().unwrap_or(0),
        prefix_len,
        examined: 0,
        test_pass_count: 0,
        image_square_free_count: 0,
        agreement_count: 0,
        disagreements: Vec::new(),
        histogram: BTreeMap::new(),
        candidates: Vec::new(),
        largest_separated_k: None,
    }
}

/// For every morphism in the space, compares the length-7 factor-test
/// verdict with the square-freeness of the image of a long prefix of the
/// word; the two must agree on every morphism.
///
/// The effective prefix length is at least the saturation prefix length.
pub fn verify_theorem1(
    space: &SearchSpace,
    label: AvoidanceLabel,
    prefix_len: usize,
) -> Result<SearchOutcome, SearchError> {
    if label == AvoidanceLabel::S3 {
        return Err(SearchError::UnsupportedAvoidance { label });
    }
    let spec = GeneratorSpec::for_label(label);
    let test_set = saturated_test_set(&spec, 7)?;
    let prefix_len = prefix_len.max(test_set.saturation_prefix_len().unwrap_or(0));
    let prefix = generate_prefix(&spec, prefix_len)?;
    let records = examine_space(space, &test_set, &prefix)?;

    let mut outcome = outcome_skeleton(space, &test_set, prefix_len);
    outcome.examined = records.len();
    for r in &records {
        let test_pass = r.min_failing_len.is_none();
        let image_square_free = r.image_square.is_none();
        outcome.test_pass_count += usize::from(test_pass);
        outcome.image_square_free_count += usize::from(image_square_free);
        if test_pass == image_square_free {
            outcome.agreement_count += 1;
        } else {
            outcome.disagreements.push(Disagreement {
                index: r.index,
                morphism: r.morphism.to_file_string(),
                test_verdict: if test_pass { Verdict::Pass } else { Verdict::Fail },
                image_square: r.image_square.clone(),
            });
        }
        if let Some(len) = r.min_failing_len {
            *outcome.histogram.entry(len).or_insert(0) += 1;
        }
    }
    // Disagreements double as counterexample candidates and re-verify
    // against the naive detector.
    for d in &outcome.disagreements {
        let morphism = Morphism::parse(&d.morphism, None).expect("serialized by us");
        let reverified = match d.test_verdict {
            Verdict::Pass => reverify_candidate(&morphism, &test_set, 7, &prefix)?,
            Verdict::Fail => false,
        };
        outcome.candidates.push(Candidate {
            index: d.index,
            morphism: d.morphism.clone(),
            min_failing_len: None,
            reverified,
        });
    }
    Ok(outcome)
}

/// Looks for morphisms that pass the factor test restricted to length 6
/// yet map the long prefix onto a square: each one is evidence that the
/// length bound 7 cannot be lowered. The histogram records, per failing
/// morphism, the smallest factor length that catches it.
pub fn probe_constant_7(
    space: &SearchSpace,
    label: AvoidanceLabel,
    prefix_len: usize,
) -> Result<SearchOutcome, SearchError> {
    if label == AvoidanceLabel::S3 {
        return Err(SearchError::UnsupportedAvoidance { label });
    }
    let spec = GeneratorSpec::for_label(label);
    let test_set = saturated_test_set(&spec, 7)?;
    let prefix_len = prefix_len.max(test_set.saturation_prefix_len().unwrap_or(0));
    let prefix = generate_prefix(&spec, prefix_len)?;
    let records = examine_space(space, &test_set, &prefix)?;

    let mut outcome = outcome_skeleton(space, &test_set, prefix_len);
    outcome.examined = records.len();
    for r in &records {
        let test_pass = r.min_failing_len.is_none();
        let image_square_free = r.image_square.is_none();
        outcome.test_pass_count += usize::from(test_pass);
        outcome.image_square_free_count += usize::from(image_square_free);
        if test_pass == image_square_free {
            outcome.agreement_count += 1;
        } else {
            outcome.disagreements.push(Disagreement {
                index: r.index,
                morphism: r.morphism.to_file_string(),
                test_verdict: if test_pass { Verdict::Pass } else { Verdict::Fail },
                image_square: r.image_square.clone(),
            });
        }
        if r.image_square.is_some() {
            if let Some(len) = r.min_failing_len {
                *outcome.histogram.entry(len).or_insert(0) += 1;
            }
            // Candidate: clean at length <= 6, caught only at length 7.
            if r.min_failing_len == Some(7) {
                let reverified = reverify_candidate(&r.morphism, &test_set, 6, &prefix)?;
                outcome.candidates.push(Candidate {
                    index: r.index,
                    morphism: r.morphism.to_file_string(),
                    min_failing_len: r.min_failing_len,
                    reverified,
                });
            }
        }
    }
    Ok(outcome)
}

/// Facts asserted about the 17-letter pattern word `a.cabcbac.b.cabcbac.a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Remark17Report {
    pub length_is_17: bool,
    pub square_free: bool,
    pub no_aba: bool,
    pub no_bab: bool,
    pub azbza_witness_found: bool,
}

impl Remark17Report {
    pub fn holds(&self) -> bool {
        self.length_is_17
            && self.square_free
            && self.no_aba
            && self.no_bab
            && self.azbza_witness_found
    }
}

/// The word `a z b z a` with `z = cabcbac` and its checked properties.
///
/// The word is square-free and avoids both `aba` and `bab`, so any factor
/// test deciding image square-freeness for `{aba, bab}`-avoiding words by
/// factor length alone must look at factors of length at least 17.
pub fn remark17_report() -> (Word, Remark17Report) {
    let sigma = Alphabet::ternary();
    let z = Word::parse(&sigma, "cabcbac").expect("static word");
    let a = Word::parse(&sigma, "a").expect("static word");
    let b = Word::parse(&sigma, "b").expect("static word");
    let word = a.concat(&z).concat(&b).concat(&z).concat(&a);
    let witnesses = scan_xzyzx(&word, 0, &[PatternKind::AzBzA]).expect("ternary word");
    let report = Remark17Report {
        length_is_17: word.len() == 17,
        square_free: word.is_square_free(),
        no_aba: !word.contains_factor(&Word::parse(&sigma, "aba").expect("static word")),
        no_bab: !word.contains_factor(&Word::parse(&sigma, "bab").expect("static word")),
        azbza_witness_found: witnesses.iter().any(|w| w.z == z),
    };
    (word, report)
}

/// True iff every assertion of [`remark17_report`] holds.
pub fn verify_remark_17() -> bool {
    remark17_report().1.holds()
}

/// Explores the `s3`-avoiding word: for each `k` in `k_range`, looks for
/// morphisms that are square-free on all factors of length at most `k` yet
/// map the long prefix onto a square. Reports the largest `k` so separated
/// (a lower-bound observation for any factor-length test on this word).
pub fn probe_s3_bound(
    space: &SearchSpace,
    prefix_len: usize,
    k_range: RangeInclusive<usize>,
) -> Result<SearchOutcome, SearchError> {
    if k_range.is_empty() {
        return Err(SearchError::EmptyKRange);
    }
    let (k_min, k_max) = (*k_range.start(), *k_range.end());
    let spec = GeneratorSpec::for_label(AvoidanceLabel::S3);
    let test_set = saturated_test_set(&spec, k_max)?;
    let prefix_len = prefix_len.max(test_set.saturation_prefix_len().unwrap_or(0));
    let prefix = generate_prefix(&spec, prefix_len)?;
    let records = examine_space(space, &test_set, &prefix)?;

    let mut outcome = outcome_skeleton(space, &test_set, prefix_len);
    outcome.k_range = Some([k_min, k_max]);
    outcome.examined = records.len();
    let mut best_separated: Option<usize> = None;
    for r in &records {
        let test_pass = r.min_failing_len.is_none();
        let image_square_free = r.image_square.is_none();
        outcome.test_pass_count += usize::from(test_pass);
        outcome.image_square_free_count += usize::from(image_square_free);
        if test_pass == image_square_free {
            outcome.agreement_count += 1;
        }
        if r.image_square.is_some() {
            if let Some(len) = r.min_failing_len {
                *outcome.histogram.entry(len).or_insert(0) += 1;
            }
            // f separates k iff it is clean on factors of length <= k:
            // every k below the minimal failing length (all of them if the
            // test never catches f).
            let separated_up_to = match r.min_failing_len {
                Some(len) if len <= k_min => continue,
                Some(len) => (len - 1).min(k_max),
                None => k_max,
            };
            if best_separated.is_none_or(|b| separated_up_to > b) {
                best_separated = Some(separated_up_to);
            }
        }
    }
    outcome.largest_separated_k = best_separated;
    if let Some(best) = best_separated {
        for r in &records {
            if r.image_square.is_none() {
                continue;
            }
            let separated_up_to = match r.min_failing_len {
                Some(len) if len <= k_min => continue,
                Some(len) => (len - 1).min(k_max),
                None => k_max,
            };
            if separated_up_to == best {
                let reverified = reverify_candidate(&r.morphism, &test_set, best, &prefix)?;
                outcome.candidates.push(Candidate {
                    index: r.index,
                    morphism: r.morphism.to_file_string(),
                    min_failing_len: r.min_failing_len,
                    reverified,
                });
            }
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        let s = SearchSpace::exhaustive(Alphabet::binary(), 2).unwrap();
        assert_eq!(s.exhaustive_size(), 216);
        assert_eq!(enumerate_morphisms(&s).count(), 216);
        let s = SearchSpace::exhaustive(Alphabet::binary(), 3).unwrap();
        assert_eq!(s.exhaustive_size(), 2744);
        assert_eq!(enumerate_morphisms(&s).count(), 2744);
    }

    #[test]
    fn exhaustive_order_is_lexicographic_over_image_tuples() {
        let s = SearchSpace::exhaustive(Alphabet::binary(), 2).unwrap();
        let first: Vec<String> = enumerate_morphisms(&s)
            .take(3)
            .map(|m| m.to_string())
            .collect();
        assert_eq!(first, ["a->0, b->0, c->0", "a->0, b->0, c->1", "a->0, b->0, c->00"]);
        let all: Vec<Morphism> = enumerate_morphisms(&s).collect();
        // no duplicates: each visited exactly once
        let mut serialized: Vec<String> = all.iter().map(|m| m.to_file_string()).collect();
        serialized.sort();
        serialized.dedup();
        assert_eq!(serialized.len(), 216);
    }

    #[test]
    fn random_streams_are_reproducible() {
        let s = SearchSpace::random(Alphabet::ternary(), 4, 100, 7).unwrap();
        let a: Vec<String> = enumerate_morphisms(&s).map(|m| m.to_file_string()).collect();
        let b: Vec<String> = enumerate_morphisms(&s).map(|m| m.to_file_string()).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 100);
        let other_seed = SearchSpace::random(Alphabet::ternary(), 4, 100, 8).unwrap();
        let c: Vec<String> =
            enumerate_morphisms(&other_seed).map(|m| m.to_file_string()).collect();
        assert_ne!(a, c);
    }

    #[test]
    fn space_guards() {
        assert!(matches!(
            SearchSpace::exhaustive(Alphabet::ternary(), 20),
            Err(SearchError::SpaceTooLarge { .. })
        ));
        let huge = Alphabet::new("abcde").unwrap();
        assert!(matches!(
            SearchSpace::exhaustive(huge, 2),
            Err(SearchError::TargetSizeOutOfRange { got: 5 })
        ));
        assert!(matches!(
            SearchSpace::new(Alphabet::binary(), 0, 2, SearchMode::Exhaustive),
            Err(SearchError::BadImageLengthBounds { .. })
        ));
    }

    #[test]
    fn tiny_exhaustive_verification_has_no_disagreements() {
        let space = SearchSpace::exhaustive(Alphabet::binary(), 2).unwrap();
        let outcome = verify_theorem1(&space, AvoidanceLabel::S1, 4096).unwrap();
        assert_eq!(outcome.examined, 216);
        assert!(outcome.disagreements.is_empty());
        assert_eq!(outcome.agreement_count, 216);
        // binary images of length >= 4 always contain a square
        assert_eq!(outcome.test_pass_count, 0);
        assert_eq!(outcome.image_square_free_count, 0);
        assert_eq!(outcome.histogram.values().sum::<usize>(), 216);
    }

    #[test]
    fn verify_rejects_s3() {
        let space = SearchSpace::exhaustive(Alphabet::binary(), 2).unwrap();
        assert!(matches!(
            verify_theorem1(&space, AvoidanceLabel::S3, 1024),
            Err(SearchError::UnsupportedAvoidance { .. })
        ));
    }

    #[test]
    fn remark17_holds() {
        let (word, report) = remark17_report();
        assert_eq!(word.to_string(), "acabcbacbcabcbaca");
        assert_eq!(word.len(), 17);
        assert!(report.length_is_17);
        assert!(report.square_free);
        assert!(report.no_aba);
        assert!(report.no_bab);
        assert!(report.azbza_witness_found);
        assert!(report.holds());
        assert!(verify_remark_17());
    }

    #[test]
    fn probe_s3_finds_separations_in_a_small_space() {
        let space = SearchSpace::random(Alphabet::binary(), 3, 60, 5).unwrap();
        let outcome = probe_s3_bound(&space, 2048, 2..=6).unwrap();
        assert_eq!(outcome.examined, 60);
        assert_eq!(outcome.k_range, Some([2, 6]));
        // binary targets always square somewhere, so every morphism fails
        assert_eq!(outcome.image_square_free_count, 0);
        for c in &outcome.candidates {
            assert!(c.reverified, "candidate must re-verify: {}", c.morphism);
        }
    }

    #[test]
    fn probe_outcomes_serialize_identically_across_runs() {
        let space = SearchSpace::random(Alphabet::ternary(), 4, 40, 42).unwrap();
        let a = probe_constant_7(&space, AvoidanceLabel::S1, 2048).unwrap();
        let b = probe_constant_7(&space, AvoidanceLabel::S1, 2048).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
