//! The involution `p` on permutations and its extension to dense and
//! general words.
//!
//! On a permutation, `p` keeps the first letter, complements every other
//! letter inside the interval on its side of the first letter, then reverses
//! positions `2..n`. It exchanges `MAJ` and `STAT` while keeping `adj`, `des`,
//! `ides` and `F`.
//!
//! On a dense word `v` the image is built in three steps:
//!
//! 1. `pi = exp(v)`, `P = ppart(pi)` and `R = wpart(v)`, a refinement of `P`;
//! 2. `sigma = p(pi)` and `S = ppart(sigma)`, which has as many parts as `P`;
//! 3. `T = psi_{P,S}(R)` and the image is `flat_T(sigma)`.
//!
//! A general word is reduced to a dense word first and the image is mapped
//! back onto the input's alphabet. The image is in general not a
//! rearrangement of the input.

use serde::Serialize;

use crate::error::Result;
use crate::partitions::{
    encode_refinement, ppart, psi, wpart, IntervalPartition, RefinementEncoding,
};
use crate::word::{expand, flatten, reduce, unreduce, DenseWord, Letter, Permutation, Word};

/// Complements each letter after the first within the interval of values on
/// its side of the first letter.
pub fn complement_step(pi: &Permutation) -> Permutation {
    let n = pi.len() as Letter;
    let head = pi.letters()[0];
    let letters = pi
        .letters()
        .iter()
        .enumerate()
        .map(|(i, &x)| match i {
            0 => x,
            _ if x > head => (head + 1) + n - x,
            _ => (head - 1) + 1 - x,
        })
        .collect();
    Permutation::from_letters_unchecked(letters)
}

/// Keeps the first letter and reverses the rest.
pub fn reverse_step(pi: &Permutation) -> Permutation {
    let mut letters = pi.letters().to_vec();
    letters[1..].reverse();
    Permutation::from_letters_unchecked(letters)
}

pub fn p_perm(pi: &Permutation) -> Permutation {
    reverse_step(&complement_step(pi))
}

/// `p` on dense words. Fails on a word that is not dense over its bound.
pub fn p_dense(v: &Word) -> Result<Word> {
    let dense = DenseWord::try_from(v.clone())?;
    Ok(p_dense_parts(&dense)?.output)
}

struct DenseImage {
    pi: Permutation,
    ppart_pi: IntervalPartition,
    sigma: Permutation,
    ppart_sigma: IntervalPartition,
    wpart_v: IntervalPartition,
    encoding: RefinementEncoding,
    t: IntervalPartition,
    output: Word,
}

fn p_dense_parts(v: &DenseWord) -> Result<DenseImage> {
    let pi = expand(v.as_word());
    let ppart_pi = ppart(&pi);
    let wpart_v = wpart(v.as_word());
    let sigma = p_perm(&pi);
    let ppart_sigma = ppart(&sigma);
    let encoding = encode_refinement(&wpart_v, &ppart_pi)?;
    let t = psi(&ppart_pi, &ppart_sigma, &wpart_v)?;
    let output = flatten(&sigma, &t)?;
    Ok(DenseImage {
        pi,
        ppart_pi,
        sigma,
        ppart_sigma,
        wpart_v,
        encoding,
        t,
        output,
    })
}

/// `p` on general words: `red^-1 . p . red`, the inverse reduction using the
/// input's alphabet. The result keeps the input's alphabet bound.
pub fn p_word(v: &Word) -> Word {
    trace(v).output
}

/// Every intermediate object of [`p_word`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WordBijectionTrace {
    pub input: Word,
    pub reduced: DenseWord,
    pub alphabet: Vec<Letter>,
    pub pi: Permutation,
    #[serde(rename = "P")]
    pub ppart_pi: IntervalPartition,
    pub sigma: Permutation,
    #[serde(rename = "S")]
    pub ppart_sigma: IntervalPartition,
    #[serde(rename = "R")]
    pub wpart_v: IntervalPartition,
    pub encoding: RefinementEncoding,
    #[serde(rename = "T")]
    pub t: IntervalPartition,
    /// Image of the reduced word.
    pub reduced_output: Word,
    pub output: Word,
}

impl WordBijectionTrace {
    /// Recomputes the output from `sigma`, `T` and the alphabet alone.
    pub fn replay(&self) -> Result<Word> {
        let w = flatten(&self.sigma, &self.t)?;
        let w = unreduce(&DenseWord::try_from(w)?, &self.alphabet)?;
        Word::with_bound(w.into_letters(), self.input.bound())
    }
}

pub fn trace(v: &Word) -> WordBijectionTrace {
    let (reduced, alphabet) = reduce(v);
    let image = p_dense_parts(&reduced).expect("reduced words are dense");
    let dense_out = DenseWord::try_from(image.output.clone()).expect("flattening onto T is dense");
    let output = unreduce(&dense_out, &alphabet).expect("image uses as many letters as the input");
    let output = Word::with_bound(output.into_letters(), v.bound())
        .expect("image stays inside the alphabet");
    WordBijectionTrace {
        input: v.clone(),
        reduced,
        alphabet,
        pi: image.pi,
        ppart_pi: image.ppart_pi,
        sigma: image.sigma,
        ppart_sigma: image.ppart_sigma,
        wpart_v: image.wpart_v,
        encoding: image.encoding,
        t: image.t,
        reduced_output: image.output,
        output,
    }
}
