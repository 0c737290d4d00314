//! Square detection: a naive reference scan and an O(n log n) detector.
//!
//! A square is a factor of the form `xx` with `x` non-empty. Both detectors
//! report the occurrence with the smallest root length, breaking ties by the
//! smallest start position. The naive scan is the reference; the fast path is
//! a Main–Lorentz style divide and conquer over z-function tables, fronted by
//! a linear pass for short roots (which catch almost every non-square-free
//! word immediately).

use serde::Serialize;

use crate::words::Word;

/// Roots up to this length are checked by a linear pre-scan before the
/// divide and conquer runs.
const SHORT_ROOT_MAX: usize = 4;

/// Sentinel byte used to separate concatenated fragments in z-function
/// tables. Valid letter indices are below [`crate::words::MAX_ALPHABET_SIZE`].
const SEP: u8 = u8::MAX;

/// A witness that a word contains a square: the factor of length
/// `2 * root.len()` starting at `start` equals `root` repeated twice.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SquareOccurrence {
    start: usize,
    root_length: usize,
    root: Word,
}

impl SquareOccurrence {
    fn new(word: &Word, start: usize, root_length: usize) -> Self {
        let root = word.factor(start, start + root_length);
        SquareOccurrence { start, root_length, root }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn root_length(&self) -> usize {
        self.root_length
    }

    pub fn root(&self) -> &Word {
        &self.root
    }

    /// Re-checks the witness against a word: the claimed factor must exist
    /// and really be `root` twice.
    pub fn verify_in(&self, word: &Word) -> bool {
        let n = self.root_length;
        if n == 0 || self.start + 2 * n > word.len() {
            return false;
        }
        let w = word.letters();
        let r = self.root.letters();
        r.len() == n
            && &w[self.start..self.start + n] == r
            && &w[self.start + n..self.start + 2 * n] == r
    }
}

impl Word {
    /// Whether the word contains no square factor. The empty word is
    /// square-free vacuously.
    pub fn is_square_free(&self) -> bool {
        self.find_minimal_square().is_none()
    }

    /// Minimal square occurrence (smallest root length, then smallest
    /// start), found by the fast detector.
    pub fn find_minimal_square(&self) -> Option<SquareOccurrence> {
        let w = self.letters();
        let found = bounded_root_square(w, SHORT_ROOT_MAX).or_else(|| {
            let mut best = None;
            main_lorentz(w, 0, &mut best);
            best
        });
        found.map(|(root_length, start)| SquareOccurrence::new(self, start, root_length))
    }

    /// Minimal square occurrence by brute force over every root length and
    /// start position. Quadratic on square-free inputs; the reference the
    /// fast detector is checked against.
    pub fn find_minimal_square_naive(&self) -> Option<SquareOccurrence> {
        let w = self.letters();
        let n = w.len();
        for root in 1..=n / 2 {
            for start in 0..=n - 2 * root {
                if w[start..start + root] == w[start + root..start + 2 * root] {
                    return Some(SquareOccurrence::new(self, start, root));
                }
            }
        }
        None
    }
}

/// Linear scan for squares with root length at most `max_root`.
/// Returns `(root_length, start)` minimal by root length, then start.
fn bounded_root_square(w: &[u8], max_root: usize) -> Option<(usize, usize)> {
    let n = w.len();
    for p in 1..=max_root.min(n / 2) {
        let mut run = 0usize;
        for j in 0..n - p {
            if w[j] == w[j + p] {
                run += 1;
                if run >= p {
                    return Some((p, j + 1 - p));
                }
            } else {
                run = 0;
            }
        }
    }
    None
}

/// z[i] = length of the longest common prefix of `s` and `s[i..]`.
fn z_function(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0usize; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0usize, 0usize);
    for i in 1..n {
        let mut k = if i < r { z[i - l].min(r - i) } else { 0 };
        while i + k < n && s[k] == s[i + k] {
            k += 1;
        }
        z[i] = k;
        if i + k > r {
            l = i;
            r = i + k;
        }
    }
    z
}

fn z_at(z: &[usize], i: usize) -> usize {
    z.get(i).copied().unwrap_or(0)
}

fn concat_with_sep(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut s = Vec::with_capacity(a.len() + b.len() + 1);
    s.extend_from_slice(a);
    s.push(SEP);
    s.extend_from_slice(b);
    s
}

fn consider(best: &mut Option<(usize, usize)>, root: usize, start: usize) {
    match best {
        Some(b) if *b <= (root, start) => {}
        _ => *best = Some((root, start)),
    }
}

/// Divide-and-conquer square search. Squares inside a half are found
/// recursively; squares crossing the split are found from four z-function
/// tables. For every candidate root length the matching start positions
/// form an interval, so only the earliest start per candidate is recorded.
fn main_lorentz(s: &[u8], offset: usize, best: &mut Option<(usize, usize)>) {
    let n = s.len();
    if n < 2 {
        return;
    }
    let nu = n / 2;
    let nv = n - nu;
    let (u, v) = s.split_at(nu);
    main_lorentz(u, offset, best);
    main_lorentz(v, offset + nu, best);

    let ru: Vec<u8> = u.iter().rev().copied().collect();
    let rv: Vec<u8> = v.iter().rev().copied().collect();
    let z1 = z_function(&ru);
    let z2 = z_function(&concat_with_sep(v, u));
    let z3 = z_function(&concat_with_sep(&ru, &rv));
    let z4 = z_function(v);

    // Squares of root l whose second copy begins at or before the split.
    // Anchor the pair of positions (nu - l, nu); the agreement window
    // around the anchor extends k1 letters left and k2 letters right.
    for l in 1..=nu {
        let cntr = nu - l;
        let k1 = if cntr == 0 { 0 } else { z_at(&z1, l) };
        let k2 = z_at(&z2, nv + 1 + cntr);
        if k1 + k2 >= l {
            consider(best, l, offset + cntr - k1);
        }
    }
    // Squares of root l whose first copy contains the last letter of the
    // left half. Anchored at the pair (nu - 1, nu - 1 + l).
    for l in 1..=nv {
        let k1 = z_at(&z3, nu + 1 + nv - l);
        let k2 = z_at(&z4, l);
        if k1 + k2 >= l {
            consider(best, l, offset + nu - k1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;
    use proptest::prelude::*;

    fn word(text: &str) -> Word {
        let sigma = Alphabet::new("abcd").unwrap();
        Word::parse(&sigma, text).unwrap()
    }

    type Found = Option<(usize, usize)>;

    fn check_both(text: &str) -> (Found, Found) {
        let w = word(text);
        let fast = w
            .find_minimal_square()
            .map(|o| (o.root_length(), o.start()));
        let naive = w
            .find_minimal_square_naive()
            .map(|o| (o.root_length(), o.start()));
        (fast, naive)
    }

    #[test]
    fn immediate_letter_square() {
        let w = word("aa");
        assert!(!w.is_square_free());
        let occ = w.find_minimal_square().unwrap();
        assert_eq!((occ.root_length(), occ.start()), (1, 0));
    }

    #[test]
    fn aba_is_square_free() {
        assert!(word("aba").is_square_free());
    }

    #[test]
    fn remark_word_is_square_free() {
        assert!(word("acabcbacbcabcbaca").is_square_free());
    }

    #[test]
    fn minimal_square_examples() {
        let w = word("abcabc");
        let occ = w.find_minimal_square().unwrap();
        assert_eq!(occ.start(), 0);
        assert_eq!(occ.root().to_string(), "abc");
        assert!(occ.verify_in(&w));

        let w = word("aabb");
        let occ = w.find_minimal_square().unwrap();
        assert_eq!((occ.start(), occ.root().to_string()), (0, "a".into()));

        let w = word("abaab");
        let occ = w.find_minimal_square().unwrap();
        assert_eq!((occ.start(), occ.root().to_string()), (2, "a".into()));
    }

    #[test]
    fn long_root_squares_cross_the_prescan_bound() {
        // No square with root <= 4; the only square has root 5.
        let (fast, naive) = check_both("abcabacbabcab");
        assert_eq!(fast, naive);
        // Root longer than the word's half is impossible; periodic words.
        let (fast, naive) = check_both("abcbabcba");
        assert_eq!(fast, naive);
    }

    #[test]
    fn empty_and_single_letter_words() {
        let sigma = Alphabet::ternary();
        assert!(Word::empty(&sigma).is_square_free());
        assert!(word("a").is_square_free());
    }

    #[test]
    fn verify_rejects_mismatched_witness() {
        let w = word("abcabc");
        let occ = w.find_minimal_square().unwrap();
        assert!(!occ.verify_in(&word("abcacb")));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(512))]

        #[test]
        fn detectors_agree(letters in prop::collection::vec(0u8..4, 0..128), size in 2u8..=4) {
            let alphabet = Alphabet::new(&"abcd"[..size as usize]).unwrap();
            let letters: Vec<u8> = letters.into_iter().map(|l| l % size).collect();
            let w = Word::from_letters(&alphabet, letters).unwrap();
            let fast = w.find_minimal_square().map(|o| (o.root_length(), o.start()));
            let naive = w.find_minimal_square_naive().map(|o| (o.root_length(), o.start()));
            prop_assert_eq!(fast, naive);
        }

        #[test]
        fn unary_and_periodic_words(n in 1usize..64, period in 1usize..6) {
            // Heavily repetitive inputs exercise the interval bookkeeping.
            let alphabet = Alphabet::new("abcdef").unwrap();
            let letters: Vec<u8> = (0..n).map(|i| (i % period) as u8).collect();
            let w = Word::from_letters(&alphabet, letters).unwrap();
            let fast = w.find_minimal_square().map(|o| (o.root_length(), o.start()));
            let naive = w.find_minimal_square_naive().map(|o| (o.root_length(), o.start()));
            prop_assert_eq!(fast, naive);
        }
    }
}
