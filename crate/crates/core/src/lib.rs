//! Square-free ternary words and finite morphism test sets.
//!
//! This crate builds bounded prefixes of the classical infinite square-free
//! words over `{a, b, c}` that avoid one of the pattern sets
//! `s1 = {aba, cbc}`, `s2 = {aba, aca}` or `s3 = {aba, bab}`, and decides
//! whether a non-erasing morphism `f` maps such a word to a square-free
//! word. For words avoiding `s1` or `s2` it suffices to check `f` on the
//! finitely many factors of length at most 7; [`morphism::theorem1_check`]
//! runs exactly that test, and [`search`] verifies the equivalence
//! empirically over enumerated and sampled morphism spaces.
//!
//! Modules:
//!
//! * [`words`] — alphabets, words, factor extraction.
//! * [`squares`] — square detection (naive reference and O(n log n) detector).
//! * [`thue`] — word generators, avoidance sets, saturated factor test sets.
//! * [`morphism`] — morphisms, the length-7 factor test, the length-5
//!   square-free-morphism test, and the morphism file format.
//! * [`analysis`] — diagnostics: minimal-square block decomposition, lineup
//!   predicates, `xzyzx` pattern scans, factor censuses.
//! * [`search`] — enumeration and sampling harnesses over morphism spaces.

pub mod analysis;
pub mod morphism;
pub mod search;
pub mod squares;
pub mod thue;
pub mod words;

pub use squares::SquareOccurrence;
pub use thue::{AvoidanceLabel, AvoidanceSet, GeneratorSpec, TestSet};
pub use words::{Alphabet, Word, WordError};
