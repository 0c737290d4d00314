//! Diagnostics over morphic images: block decomposition of minimal squares,
//! lineup predicates, `x z y z x` pattern scans and factor censuses.
//!
//! A square inside `f(u)` is located against the block structure
//! `f(u) = A_0 A_1 ... A_{m-1}` with `A_l = f(u[l])`. Writing the image as
//! `prefix . x x . suffix` with the minimal square `xx`, three cuts fall at
//! the square's start, midpoint and end; each cut splits a block into a
//! prefix and a suffix fragment. When the cuts land in blocks `i <= j <= k`
//! and the decomposition is non-degenerate, the root satisfies
//!
//! ```text
//! x = suffix(A_i) . A_{i+1} ... A_{j-1} . prefix(A_j)
//!   = suffix(A_j) . A_{j+1} ... A_{k-1} . prefix(A_k)
//! ```
//!
//! The predicates in [`lineup_predicates`] evaluate, without assuming them,
//! the alignment facts that would have to hold for a morphism that is
//! square-free on all short factors yet maps the carrier word onto a square:
//! a span of at least seven blocks, equal cut fragments, and block-by-block
//! alignment of the two root copies.

use serde::Serialize;
use thiserror::Error;

use crate::morphism::{Morphism, MorphismError};
use crate::squares::SquareOccurrence;
use crate::thue::TestSet;
use crate::words::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Morphism(#[from] MorphismError),
    #[error("decomposition does not belong to the given morphism and word")]
    MismatchedDecomposition,
    #[error("this diagnostic requires ternary words, got alphabet {got}")]
    NonTernaryWord { got: String },
}

/// A minimal square in `f(u)` located against the image's block structure.
///
/// `i`, `j`, `k` are the blocks containing the square's start, midpoint and
/// end cuts. `k` may equal `u.len()` when the square ends flush with the
/// image; the end fragment is then empty and there is no block `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareDecomposition {
    pub occurrence: SquareOccurrence,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// Suffix of block `i` from the start cut (non-empty).
    pub start_block_suffix: Word,
    /// Prefix of block `j` up to the midpoint cut.
    pub mid_block_prefix: Word,
    /// Suffix of block `j` from the midpoint cut (non-empty).
    pub mid_block_suffix: Word,
    /// Prefix of block `k` up to the end cut (empty when `k == u.len()`).
    pub end_block_prefix: Word,
    /// Set when `i == j` or `j == k`: the square sits inside too few blocks
    /// for the two root copies to decompose along distinct cuts.
    pub degenerate: bool,
}

impl SquareDecomposition {
    /// Number of blocks the square spans.
    pub fn span(&self) -> usize {
        self.k - self.i
    }

    /// Whether the square ends exactly at the end of the image.
    pub fn is_flush_end(&self) -> bool {
        self.k > self.j && self.end_block_prefix.is_empty()
    }

    /// Re-derives the cuts and fragments and compares: the decomposition
    /// must reconstruct the image around the square exactly.
    pub fn verify(&self, f: &Morphism, u: &Word) -> Result<bool, MorphismError> {
        let image = f.apply(u)?;
        if !self.occurrence.verify_in(&image) {
            return Ok(false);
        }
        let bounds = block_bounds(f, u);
        let start = self.occurrence.start();
        let mid = start + self.occurrence.root_length();
        let end = mid + self.occurrence.root_length();
        let cuts = (cut_block(&bounds, start), cut_block(&bounds, mid), cut_block(&bounds, end));
        if cuts != (self.i, self.j, self.k) || self.degenerate != (self.i == self.j || self.j == self.k) {
            return Ok(false);
        }
        // The image prefix up to the square equals blocks 0..i plus the
        // complement of the recorded start fragment.
        let block_i = f.image(u.letter(self.i));
        let start_prefix_len = block_i.len() - self.start_block_suffix.len();
        let mut rebuilt = Word::empty(image.alphabet());
        for l in 0..self.i {
            rebuilt = rebuilt.concat(f.image(u.letter(l)));
        }
        rebuilt = rebuilt.concat(&block_i.prefix(start_prefix_len));
        if rebuilt != image.prefix(start) {
            return Ok(false);
        }
        // Fragments must match the cut offsets.
        let block_j = f.image(u.letter(self.j));
        let frag_ok = self.start_block_suffix == block_i.factor(start - bounds[self.i], block_i.len())
            && self.mid_block_prefix == block_j.prefix(mid - bounds[self.j])
            && self.mid_block_suffix == block_j.factor(mid - bounds[self.j], block_j.len())
            && if self.k < u.len() {
                let block_k = f.image(u.letter(self.k));
                self.end_block_prefix == block_k.prefix(end - bounds[self.k])
            } else {
                self.end_block_prefix.is_empty()
            };
        if !frag_ok {
            return Ok(false);
        }
        // When non-degenerate, both root decompositions must reconcatenate
        // to the root.
        if !self.degenerate {
            let root = self.occurrence.root();
            let mut first = self.start_block_suffix.clone();
            for l in self.i + 1..self.j {
                first = first.concat(f.image(u.letter(l)));
            }
            first = first.concat(&self.mid_block_prefix);
            let mut second = self.mid_block_suffix.clone();
            for l in self.j + 1..self.k {
                second = second.concat(f.image(u.letter(l)));
            }
            second = second.concat(&self.end_block_prefix);
            if &first != root || &second != root {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Block boundary positions of `f(u)`: `bounds[l]` is where block `l`
/// starts; the final entry is the image length.
fn block_bounds(f: &Morphism, u: &Word) -> Vec<usize> {
    let mut bounds = Vec::with_capacity(u.len() + 1);
    let mut pos = 0;
    bounds.push(0);
    for &l in u.letters() {
        pos += f.image(l).len();
        bounds.push(pos);
    }
    bounds
}

/// Index of the block containing cut position `pos`; `u.len()` when the cut
/// is at the very end of the image.
fn cut_block(bounds: &[usize], pos: usize) -> usize {
    debug_assert!(pos <= *bounds.last().expect("non-empty bounds"));
    match bounds.binary_search(&pos) {
        Ok(exact) => exact,
        Err(insertion) => insertion - 1,
    }
}

/// Locates the minimal square of `f(u)` against the block structure.
/// `None` when the image is square-free. `u` is expected square-free.
pub fn decompose_minimal_square(
    f: &Morphism,
    u: &Word,
) -> Result<Option<SquareDecomposition>, MorphismError> {
    let image = f.apply(u)?;
    let Some(occurrence) = image.find_minimal_square() else {
        return Ok(None);
    };
    let bounds = block_bounds(f, u);
    let start = occurrence.start();
    let mid = start + occurrence.root_length();
    let end = mid + occurrence.root_length();
    let i = cut_block(&bounds, start);
    let j = cut_block(&bounds, mid);
    let k = cut_block(&bounds, end);
    debug_assert!(i < u.len() && j < u.len() && k <= u.len());
    let block = |l: usize| f.image(u.letter(l));
    let decomposition = SquareDecomposition {
        i,
        j,
        k,
        start_block_suffix: block(i).factor(start - bounds[i], block(i).len()),
        mid_block_prefix: block(j).prefix(mid - bounds[j]),
        mid_block_suffix: block(j).factor(mid - bounds[j], block(j).len()),
        end_block_prefix: if k < u.len() {
            block(k).prefix(end - bounds[k])
        } else {
            Word::empty(image.alphabet())
        },
        degenerate: i == j || j == k,
        occurrence,
    };
    Ok(Some(decomposition))
}

/// Three-valued predicate outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tri {
    Holds,
    Fails,
    NotApplicable,
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::Holds
        } else {
            Tri::Fails
        }
    }
}

/// Alignment facts about a decomposition, evaluated rather than assumed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LineupPredicates {
    /// `k - i >= 7`.
    pub span_ge_7: bool,
    /// `i < j < k`.
    pub strict_order: bool,
    /// The midpoint and end cut prefixes are equal words.
    pub mid_eq_end_prefix: bool,
    /// The start and midpoint cut suffixes are equal words.
    pub start_eq_mid_suffix: bool,
    /// `j - i == k - j`.
    pub arithmetic: bool,
    /// `A_{i+l} == A_{j+l}` for `1 <= l <= j-i-1`; not applicable on
    /// degenerate decompositions or when the range would leave the word.
    pub blocks_aligned: Tri,
}

/// Evaluates the lineup predicates of `d` against `(f, u)`. Errors if the
/// decomposition does not verify against the pair.
pub fn lineup_predicates(
    d: &SquareDecomposition,
    f: &Morphism,
    u: &Word,
) -> Result<LineupPredicates, AnalysisError> {
    if !d.verify(f, u)? {
        return Err(AnalysisError::MismatchedDecomposition);
    }
    let blocks_aligned = if d.degenerate {
        Tri::NotApplicable
    } else if d.j == d.i + 1 {
        Tri::Holds // empty range
    } else if d.j + (d.j - d.i - 1) >= u.len() {
        Tri::NotApplicable // comparison blocks would leave the word
    } else {
        Tri::from(
            (1..=d.j - d.i - 1)
                .all(|l| f.image(u.letter(d.i + l)) == f.image(u.letter(d.j + l))),
        )
    };
    Ok(LineupPredicates {
        span_ge_7: d.span() >= 7,
        strict_order: d.i < d.j && d.j < d.k,
        mid_eq_end_prefix: d.mid_block_prefix == d.end_block_prefix,
        start_eq_mid_suffix: d.start_block_suffix == d.mid_block_suffix,
        arithmetic: d.j - d.i == d.k - d.j,
        blocks_aligned,
    })
}

/// Pattern templates `alpha z beta z gamma` over the ternary alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternKind {
    /// `a z b z a`
    AzBzA,
    /// `c z b z c`
    CzBzC,
    /// `a z c z a`
    AzCzA,
    /// Any `alpha z beta z gamma` with `alpha != beta` and `gamma != beta`.
    #[serde(rename = "xzyzx")]
    General,
}

impl PatternKind {
    pub fn all() -> [PatternKind; 4] {
        [PatternKind::AzBzA, PatternKind::CzBzC, PatternKind::AzCzA, PatternKind::General]
    }

    /// Concrete letters for the named templates (indices into `abc`).
    fn letters(self) -> Option<(u8, u8, u8)> {
        match self {
            PatternKind::AzBzA => Some((0, 1, 0)),
            PatternKind::CzBzC => Some((2, 1, 2)),
            PatternKind::AzCzA => Some((0, 2, 0)),
            PatternKind::General => None,
        }
    }

    fn matches(self, alpha: u8, beta: u8, gamma: u8) -> bool {
        match self.letters() {
            Some((a, b, g)) => alpha == a && beta == b && gamma == g,
            None => alpha != beta && gamma != beta,
        }
    }
}

impl std::fmt::Display for PatternKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PatternKind::AzBzA => write!(f, "azbza"),
            PatternKind::CzBzC => write!(f, "czbzc"),
            PatternKind::AzCzA => write!(f, "azcza"),
            PatternKind::General => write!(f, "xzyzx"),
        }
    }
}

impl std::str::FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "azbza" => Ok(PatternKind::AzBzA),
            "czbzc" => Ok(PatternKind::CzBzC),
            "azcza" => Ok(PatternKind::AzCzA),
            "xzyzx" | "general" => Ok(PatternKind::General),
            other => Err(format!(
                "unknown template {other:?} (expected azbza, czbzc, azcza or xzyzx)"
            )),
        }
    }
}

/// An occurrence of `alpha z beta z gamma`: the two `z`-copies start at
/// `z1_start` and `z2_start`, with the flanking letters directly around
/// them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub kind: PatternKind,
    pub z1_start: usize,
    pub z2_start: usize,
    pub alpha: u8,
    pub beta: u8,
    pub gamma: u8,
    pub z: Word,
}

impl PatternWitness {
    /// Position of the flanking `alpha` letter.
    pub fn start(&self) -> usize {
        self.z1_start - 1
    }

    pub fn total_len(&self) -> usize {
        2 * self.z.len() + 3
    }

    pub fn alpha_char(&self) -> char {
        self.z.alphabet().letter_char(self.alpha)
    }

    pub fn beta_char(&self) -> char {
        self.z.alphabet().letter_char(self.beta)
    }

    pub fn gamma_char(&self) -> char {
        self.z.alphabet().letter_char(self.gamma)
    }

    /// Re-checks the witness against a word.
    pub fn verify_in(&self, u: &Word) -> bool {
        let zl = self.z.len();
        let Some(s) = self.z1_start.checked_sub(1) else {
            return false;
        };
        if self.z2_start != self.z1_start + zl + 1 || s + 2 * zl + 3 > u.len() {
            return false;
        }
        let w = u.letters();
        let z = self.z.letters();
        w[s] == self.alpha
            && w[s + zl + 1] == self.beta
            && w[s + 2 * zl + 2] == self.gamma
            && &w[self.z1_start..self.z1_start + zl] == z
            && &w[self.z2_start..self.z2_start + zl] == z
            && self.kind.matches(self.alpha, self.beta, self.gamma)
    }
}

impl Serialize for PatternWitness {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("PatternWitness", 8)?;
        s.serialize_field("kind", &self.kind)?;
        s.serialize_field("start", &self.start())?;
        s.serialize_field("z1_start", &self.z1_start)?;
        s.serialize_field("z2_start", &self.z2_start)?;
        s.serialize_field("alpha", &self.alpha_char().to_string())?;
        s.serialize_field("beta", &self.beta_char().to_string())?;
        s.serialize_field("gamma", &self.gamma_char().to_string())?;
        s.serialize_field("z", &self.z)?;
        s.end()
    }
}

/// Bitset over word positions, used to intersect shifted letter masks: one
/// pass per `z`-length instead of one check per position pair.
struct PositionBits {
    words: Vec<u64>,
    len: usize,
}

impl PositionBits {
    fn letter_mask(w: &[u8], letter: u8) -> Self {
        let mut words = vec![0u64; w.len().div_ceil(64)];
        for (i, &l) in w.iter().enumerate() {
            if l == letter {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        PositionBits { words, len: w.len() }
    }

    fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        PositionBits { words, len: self.len }
    }

    /// Word `idx` of this set shifted right by `shift` bit positions
    /// (bit `s` of the result is bit `s + shift` of `self`).
    fn word_shifted(&self, idx: usize, shift: usize) -> u64 {
        let q = shift / 64;
        let r = shift % 64;
        let lo = self.words.get(idx + q).copied().unwrap_or(0);
        if r == 0 {
            lo
        } else {
            let hi = self.words.get(idx + q + 1).copied().unwrap_or(0);
            (lo >> r) | (hi << (64 - r))
        }
    }
}

/// Collects every position `s` with `a[s] && b[s + d1] && c[s + d2]`.
fn collect_triple_positions(
    a: &PositionBits,
    b: &PositionBits,
    c: &PositionBits,
    d1: usize,
    d2: usize,
    out: &mut Vec<usize>,
) {
    for idx in 0..a.words.len() {
        let mut bits = a.words[idx] & b.word_shifted(idx, d1) & c.word_shifted(idx, d2);
        while bits != 0 {
            let bit = bits.trailing_zeros() as usize;
            out.push(idx * 64 + bit);
            bits &= bits - 1;
        }
    }
}

/// Finds every occurrence of the requested templates with `|z| >= min_z`,
/// over all (position, z-length) pairs. Witnesses are sorted by start
/// position, then z-length, then template.
///
/// Candidate positions per z-length come from intersecting shifted letter
/// bitmasks, so only positions whose three flanking letters already match
/// pay for the z comparison.
pub fn scan_xzyzx(
    u: &Word,
    min_z: usize,
    templates: &[PatternKind],
) -> Result<Vec<PatternWitness>, AnalysisError> {
    if u.alphabet() != &Alphabet::ternary() {
        return Err(AnalysisError::NonTernaryWord { got: u.alphabet().to_string() });
    }
    let w = u.letters();
    let n = w.len();
    let kinds: Vec<PatternKind> = PatternKind::all()
        .into_iter()
        .filter(|k| templates.contains(k))
        .collect();
    let mut out = Vec::new();
    if kinds.is_empty() || n < 2 * min_z + 3 {
        return Ok(out);
    }

    let masks: Vec<PositionBits> = (0..3).map(|l| PositionBits::letter_mask(w, l)).collect();
    let complements: Vec<PositionBits> = masks.iter().map(PositionBits::complement).collect();

    let max_z = (n - 3) / 2;
    let mut candidates = Vec::new();
    for z_len in min_z..=max_z {
        let d1 = z_len + 1;
        let d2 = 2 * z_len + 2;
        for &kind in &kinds {
            candidates.clear();
            match kind.letters() {
                Some((a, b, g)) => collect_triple_positions(
                    &masks[a as usize],
                    &masks[b as usize],
                    &masks[g as usize],
                    d1,
                    d2,
                    &mut candidates,
                ),
                None => {
                    for beta in 0..3usize {
                        collect_triple_positions(
                            &complements[beta],
                            &masks[beta],
                            &complements[beta],
                            d1,
                            d2,
                            &mut candidates,
                        );
                    }
                    candidates.sort_unstable();
                }
            }
            for &s in &candidates {
                debug_assert!(s + d2 < n, "shifted masks bound the end position");
                if w[s + 1..s + 1 + z_len] == w[s + z_len + 2..s + 2 + 2 * z_len] {
                    out.push(PatternWitness {
                        kind,
                        z1_start: s + 1,
                        z2_start: s + z_len + 2,
                        alpha: w[s],
                        beta: w[s + d1],
                        gamma: w[s + d2],
                        z: u.factor(s + 1, s + 1 + z_len),
                    });
                }
            }
        }
    }
    out.sort_by_key(|p| {
        let kind_rank = PatternKind::all().iter().position(|k| *k == p.kind).unwrap_or(4);
        (p.start(), p.z.len(), kind_rank)
    });
    Ok(out)
}

/// Partition of the twelve square-free length-3 ternary words into those
/// occurring in `u` and those missing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub present: Vec<Word>,
    pub missing: Vec<Word>,
}

/// Census of square-free length-3 factors. An infinite square-free ternary
/// word avoiding `{aba, cbc}` (resp. `{aba, aca}`) misses exactly those two
/// and contains the other ten.
pub fn length3_census(u: &Word) -> Result<Census, AnalysisError> {
    if u.alphabet() != &Alphabet::ternary() {
        return Err(AnalysisError::NonTernaryWord { got: u.alphabet().to_string() });
    }
    let mut present = Vec::new();
    let mut missing = Vec::new();
    for word in crate::morphism::square_free_ternary_words(3) {
        if u.len() >= 3 && u.contains_factor(&word) {
            present.push(word);
        } else {
            missing.push(word);
        }
    }
    Ok(Census { present, missing })
}

/// Why a square in `f(u)` could not be converted into a pattern witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessObstruction {
    /// `i == j` or `j == k`: the square comes from too few blocks.
    Degenerate,
    /// `k - i < 7`: the morphism already fails on a short factor.
    ShortSpan,
    /// The square ends flush with the image, so there is no block `k`.
    FlushImageEnd,
    /// `u[i+1..j] != u[j+1..k]`: the root copies do not line up blockwise.
    CopiesMisaligned,
    /// `u[i] == u[j]` or `u[k] == u[j]`.
    MiddleLetterRepeated,
    /// The flanking triple occurs in the reference test set.
    TripleIsFactor,
}

/// Outcome of trying to exhibit an `alpha z beta z gamma` witness from the
/// minimal square of `f(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Theorem2Outcome {
    /// `f(u)` contains no square at all.
    ImageSquareFree,
    /// The decomposition yields the full witness: aligned copies with
    /// `|z| >= 3`, distinct flanking letters, and a triple absent from the
    /// reference set.
    Witness { witness: PatternWitness },
    /// A square exists but some hypothesis fails; the decomposition shows
    /// which one.
    NotExhibited {
        reason: WitnessObstruction,
        decomposition: SquareDecomposition,
    },
}

impl Theorem2Outcome {
    pub fn witness(&self) -> Option<&PatternWitness> {
        match self {
            Theorem2Outcome::Witness { witness } => Some(witness),
            _ => None,
        }
    }
}

/// Attempts to convert the minimal square of `f(u)` into a pattern witness
/// `alpha z beta z gamma` in `u` whose flanking triple is absent from
/// `reference`: `alpha = u[i]`, `beta = u[j]`, `gamma = u[k]`, `z` between.
///
/// For morphisms that fail on a short factor — every failure seen in
/// practice — the span check rejects immediately and the decomposition is
/// returned for inspection.
pub fn theorem2_witness_search(
    f: &Morphism,
    u: &Word,
    reference: &TestSet,
) -> Result<Theorem2Outcome, AnalysisError> {
    let Some(d) = decompose_minimal_square(f, u)? else {
        return Ok(Theorem2Outcome::ImageSquareFree);
    };
    Ok(witness_from_decomposition(d, u, reference))
}

pub(crate) fn witness_from_decomposition(
    d: SquareDecomposition,
    u: &Word,
    reference: &TestSet,
) -> Theorem2Outcome {
    let fail = |reason, d| Theorem2Outcome::NotExhibited { reason, decomposition: d };
    if d.degenerate {
        return fail(WitnessObstruction::Degenerate, d);
    }
    if d.span() < 7 {
        return fail(WitnessObstruction::ShortSpan, d);
    }
    if d.k >= u.len() {
        return fail(WitnessObstruction::FlushImageEnd, d);
    }
    let (i, j, k) = (d.i, d.j, d.k);
    let z1 = u.factor(i + 1, j);
    let z2 = u.factor(j + 1, k);
    if z1 != z2 {
        return fail(WitnessObstruction::CopiesMisaligned, d);
    }
    debug_assert!(z1.len() >= 3, "aligned copies spanning >= 7 blocks have |z| >= 3");
    let (alpha, beta, gamma) = (u.letter(i), u.letter(j), u.letter(k));
    if alpha == beta || gamma == beta {
        return fail(WitnessObstruction::MiddleLetterRepeated, d);
    }
    let triple = Word::from_letters_unchecked(u.alphabet(), vec![alpha, beta, gamma]);
    if reference.contains(&triple) {
        return fail(WitnessObstruction::TripleIsFactor, d);
    }
    let kind = [PatternKind::AzBzA, PatternKind::CzBzC, PatternKind::AzCzA]
        .into_iter()
        .find(|k| k.matches(alpha, beta, gamma))
        .unwrap_or(PatternKind::General);
    Theorem2Outcome::Witness {
        witness: PatternWitness {
            kind,
            z1_start: i + 1,
            z2_start: j + 1,
            alpha,
            beta,
            gamma,
            z: z1,
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AffixSide {
    Suffix,
    Prefix,
}

/// A solution to one of the two boundary equations: an affix of a single
/// image that rewrites as `s . f(core) . p` with `s`, `p` affixes of the
/// images of the flanking letters. No solutions exist for morphisms that
/// pass the length-7 factor test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryEquationSolution {
    /// The test-set factor `alpha . core . beta` that produced the solution.
    pub factor: Word,
    /// Letter whose image hosts the rewritten fragment.
    pub host: u8,
    /// Length of the suffix of `f(alpha)` used.
    pub suffix_len: usize,
    /// Length of the prefix of `f(beta)` used.
    pub prefix_len: usize,
    /// Whether the fragment matched a suffix or a prefix of the host image.
    pub side: AffixSide,
}

/// Searches every test-set factor `alpha . core . beta` (with `|core| >= 3`)
/// for boundary-equation solutions:
///
/// * suffix form: a suffix of some image `f(t)` equals `s . f(core) . p`
///   with `s` a suffix of `f(alpha)` (possibly empty) and `p` a non-empty
///   prefix of `f(beta)`;
/// * prefix form (mirrored): a prefix of some `f(t)` equals the same shape
///   with `s` non-empty and `p` possibly empty.
pub fn boundary_equation_solutions(
    f: &Morphism,
    test_set: &TestSet,
) -> Result<Vec<BoundaryEquationSolution>, AnalysisError> {
    let mut out = Vec::new();
    for factor in test_set.factors() {
        if factor.len() < 5 {
            continue;
        }
        let letters = factor.letters();
        let alpha = letters[0];
        let beta = letters[letters.len() - 1];
        let core_image = f.apply(&factor.factor(1, factor.len() - 1))?;
        let alpha_image = f.image(alpha).letters();
        let beta_image = f.image(beta).letters();
        for host in 0..3u8 {
            let host_image = f.image(host).letters();
            for suffix_len in 0..=alpha_image.len() {
                for prefix_len in 0..=beta_image.len() {
                    let total = suffix_len + core_image.len() + prefix_len;
                    if total > host_image.len() || (suffix_len == 0 && prefix_len == 0) {
                        continue;
                    }
                    let mut candidate = Vec::with_capacity(total);
                    candidate.extend_from_slice(&alpha_image[alpha_image.len() - suffix_len..]);
                    candidate.extend_from_slice(core_image.letters());
                    candidate.extend_from_slice(&beta_image[..prefix_len]);
                    if prefix_len > 0 && host_image.ends_with(&candidate) {
                        out.push(BoundaryEquationSolution {
                            factor: factor.clone(),
                            host,
                            suffix_len,
                            prefix_len,
                            side: AffixSide::Suffix,
                        });
                    }
                    if suffix_len > 0 && host_image.starts_with(&candidate) {
                        out.push(BoundaryEquationSolution {
                            factor: factor.clone(),
                            host,
                            suffix_len,
                            prefix_len,
                            side: AffixSide::Prefix,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}
