//! Words over positive-integer alphabets, the permutation and dense-word
//! subtypes, and the maps between them: reduction, expansion and flattening.
//!
//! Words print as digit strings when every letter is at most 9 (`342421`)
//! and as comma-separated integers otherwise (`3,12,4`). Both forms parse.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{ppart, wpart, IntervalPartition};

pub type Letter = u32;

/// A non-empty word with a declared alphabet bound `q`.
///
/// The bound only matters for density and for the identity of `[q]^n`;
/// every statistic depends on the letters alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
    bound: Letter,
}

impl Word {
    /// Builds a word whose alphabet bound is its largest letter.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let bound = letters.iter().copied().max().unwrap_or(0);
        Self::with_bound(letters, bound)
    }

    pub fn with_bound(letters: Vec<Letter>, bound: Letter) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some((i, &letter)) = letters
            .iter()
            .enumerate()
            .find(|&(_, &a)| a == 0 || a > bound)
        {
            return Err(Error::LetterOutOfRange {
                position: i + 1,
                letter,
                bound,
            });
        }
        Ok(Word { letters, bound })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The declared alphabet bound `q`.
    pub fn bound(&self) -> Letter {
        self.bound
    }

    pub fn first(&self) -> Letter {
        self.letters[0]
    }

    /// Sorted distinct letters occurring in the word.
    pub fn distinct_letters(&self) -> Vec<Letter> {
        distinct_sorted(&self.letters)
    }

    /// Every letter of `[q]` occurs at least once.
    pub fn is_dense(&self) -> bool {
        let mut seen = vec![false; self.bound as usize + 1];
        for &a in &self.letters {
            seen[a as usize] = true;
        }
        seen[1..].iter().all(|&s| s)
    }

    pub fn is_permutation(&self) -> bool {
        let n = self.letters.len();
        let mut seen = vec![false; n + 1];
        for &a in &self.letters {
            let a = a as usize;
            if a > n || seen[a] {
                return false;
            }
            seen[a] = true;
        }
        true
    }

    /// Skips validation; callers guarantee `1 <= letter <= bound`.
    pub(crate) fn from_raw(letters: Vec<Letter>, bound: Letter) -> Self {
        debug_assert!(!letters.is_empty() && letters.iter().all(|&a| a >= 1 && a <= bound));
        Word { letters, bound }
    }

    /// Letter multiplicities, sorted; two words are rearrangements of each
    /// other exactly when these agree.
    pub fn sorted_letters(&self) -> Vec<Letter> {
        let mut s = self.letters.clone();
        s.sort_unstable();
        s
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.letters
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_letters(s)?)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.iter().all(|&a| a <= 9) {
        for a in letters {
            write!(f, "{a}")?;
        }
    } else {
        for (i, a) in letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        if letters.len() == 1 {
            f.write_str(",")?;
        }
    }
    Ok(())
}

/// Parses either the digit-string or the comma-separated form. One trailing
/// comma is allowed, so `"12,"` is the one-letter word `12`. Positions in
/// errors are 1-based character offsets into `s`.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>> {
    let s = s.trim();
    if s.is_empty() || s == "," {
        return Err(Error::EmptyWord);
    }
    let mut letters = Vec::new();
    if s.contains(',') {
        let s = s.strip_suffix(',').unwrap_or(s);
        let mut offset = 0;
        for token in s.split(',') {
            let trimmed = token.trim();
            let lead = token.len() - token.trim_start().len();
            let position = offset + lead + 1;
            match trimmed.parse::<Letter>() {
                Ok(0) => return Err(Error::parse(position, "letters must be at least 1")),
                Ok(a) => letters.push(a),
                Err(_) => {
                    return Err(Error::parse(
                        position,
                        format!("expected a positive integer, found {trimmed:?}"),
                    ))
                }
            }
            offset += token.len() + 1;
        }
    } else {
        for (i, c) in s.chars().enumerate() {
            match c.to_digit(10) {
                Some(0) => return Err(Error::parse(i + 1, "letters must be at least 1")),
                Some(d) => letters.push(d),
                None => return Err(Error::parse(i + 1, format!("unexpected character {c:?}"))),
            }
        }
    }
    Ok(letters)
}

pub(crate) fn distinct_sorted(letters: &[Letter]) -> Vec<Letter> {
    let mut d = letters.to_vec();
    d.sort_unstable();
    d.dedup();
    d
}

/// A permutation of `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Word);

impl Permutation {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        Word::new(letters)?.try_into()
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have length at least 1");
        Permutation(Word {
            letters: (1..=n as Letter).collect(),
            bound: n as Letter,
        })
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0.letters
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `positions()[a - 1]` is the 0-based index of value `a`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &a) in self.letters().iter().enumerate() {
            pos[a as usize - 1] = i;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        let letters = self
            .positions()
            .into_iter()
            .map(|i| i as Letter + 1)
            .collect();
        Permutation(Word {
            letters,
            bound: self.0.bound,
        })
    }

    /// Wraps letters already known to form a permutation.
    pub(crate) fn from_letters_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(Word::new(letters.clone()).unwrap().is_permutation());
        let bound = letters.len() as Letter;
        Permutation(Word { letters, bound })
    }
}

impl TryFrom<Word> for Permutation {
    type Error = Error;

    fn try_from(w: Word) -> Result<Self> {
        if !w.is_permutation() {
            return Err(Error::NotPermutation(w.to_string()));
        }
        let bound = w.len() as Letter;
        Ok(Permutation(Word {
            letters: w.letters,
            bound,
        }))
    }
}

impl AsRef<[Letter]> for Permutation {
    fn as_ref(&self) -> &[Letter] {
        self.letters()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Word>()?.try_into()
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// A word over `[q]` using every letter of `[q]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DenseWord(Word);

impl DenseWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        Word::new(letters)?.try_into()
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0.letters
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of distinct letters, which is also the largest letter.
    pub fn alphabet_size(&self) -> Letter {
        self.0.bound
    }
}

impl TryFrom<Word> for DenseWord {
    type Error = Error;

    fn try_from(w: Word) -> Result<Self> {
        if !w.is_dense() {
            return Err(Error::NotDense {
                word: w.to_string(),
                bound: w.bound,
            });
        }
        Ok(DenseWord(w))
    }
}

impl From<Permutation> for DenseWord {
    fn from(p: Permutation) -> Self {
        DenseWord(p.0)
    }
}

impl AsRef<[Letter]> for DenseWord {
    fn as_ref(&self) -> &[Letter] {
        self.letters()
    }
}

impl fmt::Display for DenseWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for DenseWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Word>()?.try_into()
    }
}

impl Serialize for DenseWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// Replaces the i-th smallest letter by `i`.
pub(crate) fn reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let alphabet = distinct_sorted(letters);
    letters
        .iter()
        .map(|a| alphabet.binary_search(a).unwrap() as Letter + 1)
        .collect()
}

/// `red(v)`, together with the sorted distinct letters of `v` needed to
/// invert it.
pub fn reduce(v: &Word) -> (DenseWord, Vec<Letter>) {
    let alphabet = v.distinct_letters();
    let letters = reduce_letters(v.letters());
    let bound = alphabet.len() as Letter;
    (DenseWord(Word { letters, bound }), alphabet)
}

/// Substitutes letter `i` of `d` by `alphabet[i - 1]`.
pub fn unreduce(d: &DenseWord, alphabet: &[Letter]) -> Result<Word> {
    if alphabet.len() != d.alphabet_size() as usize {
        return Err(Error::AlphabetMismatch {
            given: alphabet.len(),
            needed: d.alphabet_size() as usize,
        });
    }
    if alphabet.first() == Some(&0) || alphabet.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidAlphabet);
    }
    Word::new(
        d.letters()
            .iter()
            .map(|&a| alphabet[a as usize - 1])
            .collect(),
    )
}

/// Standardization of a letter sequence: ranks with ties broken left to right.
pub(crate) fn expand_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by_key(|&i| letters[i]);
    let mut pi = vec![0; letters.len()];
    for (rank, i) in order.into_iter().enumerate() {
        pi[i] = rank as Letter + 1;
    }
    pi
}

/// `exp(v)`: the permutation with `pi_i < pi_j` iff `v_i < v_j`, or
/// `v_i = v_j` and `i < j`.
pub fn expand(v: &Word) -> Permutation {
    Permutation::from_letters_unchecked(expand_letters(v.letters()))
}

/// `flat_P(pi)`: the unique word with expansion `pi` and word partition `P`.
///
/// Position `i` receives the 1-based index of the part of `P` containing
/// `pi_i`. `P` must refine `ppart(pi)`, otherwise no such word exists.
pub fn flatten(pi: &Permutation, parts: &IntervalPartition) -> Result<Word> {
    let coarse = ppart(pi);
    if !parts.is_refinement_of(&coarse)? {
        return Err(Error::NotRefinement {
            fine: parts.to_set_notation(),
            coarse: coarse.to_set_notation(),
        });
    }
    let owner = parts.part_indices();
    let letters: Vec<Letter> = pi
        .letters()
        .iter()
        .map(|&a| owner[a as usize - 1] as Letter + 1)
        .collect();
    let w = Word::new(letters)?;
    debug_assert_eq!(&wpart(&w), parts);
    Ok(w)
}
