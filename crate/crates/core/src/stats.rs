//! Direct (loop-based) evaluation of the word statistics.
//!
//! Every function accepts anything that views as a letter slice: a [`Word`],
//! a [`Permutation`], a [`DenseWord`] or a plain `&[Letter]`. On the empty
//! sequence every statistic is 0.
//!
//! `adj` is computed on the reduction of its argument, so for a general word
//! it is *not* the count taken over the raw letters. `F` is the literal first
//! letter and is the only statistic here that changes under reduction.
//!
//! [`Word`]: crate::word::Word
//! [`Permutation`]: crate::word::Permutation
//! [`DenseWord`]: crate::word::DenseWord

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{distinct_sorted, reduce_letters, Letter};

/// Number of pairs `i < j` with `v_i > v_j`.
pub fn inv<W: AsRef<[Letter]> + ?Sized>(v: &W) -> u64 {
    let v = v.as_ref();
    let mut count = 0;
    for (i, a) in v.iter().enumerate() {
        count += v[i + 1..].iter().filter(|b| a > b).count() as u64;
    }
    count
}

/// Sum of the 1-based descent positions.
pub fn maj<W: AsRef<[Letter]> + ?Sized>(v: &W) -> u64 {
    v.as_ref()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u64 + 1)
        .sum()
}

pub fn des<W: AsRef<[Letter]> + ?Sized>(v: &W) -> u64 {
    v.as_ref().windows(2).filter(|w| w[0] > w[1]).count() as u64
}

/// Number of letters `a` of `v` such that some occurrence of the next larger
/// letter of `v` lies left of some occurrence of `a`.
pub fn ides<W: AsRef<[Letter]> + ?Sized>(v: &W) -> u64 {
    let v = v.as_ref();
    let alphabet = distinct_sorted(v);
    let first = |b: Letter| v.iter().position(|&x| x == b).unwrap();
    let last = |a: Letter| v.iter().rposition(|&x| x == a).unwrap();
    alphabet
        .windows(2)
        .filter(|pair| first(pair[1]) < last(pair[0]))
        .count() as u64
}

/// With `v' = red(v)` followed by `0`, the number of positions `i` such that
/// `v'_i = v'_{i+1} + 1`, `i` is the leftmost occurrence of `v'_i` and `i + 1`
/// the rightmost occurrence of `v'_{i+1}`. On permutations this is the number
/// of `i` with `pi_i = pi_{i+1} + 1` in `pi 0`.
pub fn adj<W: AsRef<[Letter]> + ?Sized>(v: &W) -> u64 {
    let mut r = reduce_letters(v.as_ref());
    let q = r.iter().copied().max().unwrap_or(0) as usize;
    r.push(0);
    let mut leftmost = vec![usize::MAX; q + 1];
    let mut rightmost = vec![0; q + 1];
    for (i, &a) in r.iter().enumerate() {
        let a = a as usize;
        leftmost[a] = leftmost[a].min(i);
        rightmost[a] = i;
    }
    r.windows(2)
        .enumerate()
        .filter(|&(i, w)| {
            w[0] == w[1] + 1 && leftmost[w[0] as usize] == i && rightmost[w[1] as usize] == i + 1
        })
        .count() as u64
}

/// The first letter, literally (no reduction).
pub fn first<W: AsRef<[Letter]> + ?Sized>(v: &W) -> u64 {
    v.as_ref().first().map_or(0, |&a| a as u64)
}

/// `STAT` on words: occurrences of `21-3`, `21-2`, `13-2`, `12-1`, `32-1`
/// and `21`, counted directly. On permutations the `21-2` and `12-1` terms
/// vanish, leaving the classical permutation statistic.
pub fn stat<W: AsRef<[Letter]> + ?Sized>(v: &W) -> u64 {
    let v = v.as_ref();
    let mut total = des(v);
    for i in 0..v.len().saturating_sub(2) {
        let (a, b) = (v[i], v[i + 1]);
        for &c in &v[i + 2..] {
            let hit = (b < a && a < c) // 21-3
                || (b < a && a == c) // 21-2
                || (a < c && c < b) // 13-2
                || (a == c && c < b) // 12-1
                || (c < b && b < a); // 32-1
            total += hit as u64;
        }
    }
    total
}

/// The six statistics jointly transported by the word bijection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StatTuple {
    pub adj: u64,
    pub des: u64,
    pub ides: u64,
    #[serde(rename = "F")]
    pub first: u64,
    #[serde(rename = "MAJ")]
    pub maj: u64,
    #[serde(rename = "STAT")]
    pub stat: u64,
}

impl StatTuple {
    /// The tuple with `MAJ` and `STAT` exchanged.
    pub fn swapped(self) -> StatTuple {
        StatTuple {
            maj: self.stat,
            stat: self.maj,
            ..self
        }
    }
}

impl fmt::Display for StatTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(adj={}, des={}, ides={}, F={}, MAJ={}, STAT={})",
            self.adj, self.des, self.ides, self.first, self.maj, self.stat
        )
    }
}

pub fn stat_tuple<W: AsRef<[Letter]> + ?Sized>(v: &W) -> StatTuple {
    let v = v.as_ref();
    StatTuple {
        adj: adj(v),
        des: des(v),
        ides: ides(v),
        first: first(v),
        maj: maj(v),
        stat: stat(v),
    }
}

/// A named statistic, selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Statistic {
    #[serde(rename = "INV")]
    Inv,
    #[serde(rename = "MAJ")]
    Maj,
    #[serde(rename = "des")]
    Des,
    #[serde(rename = "ides")]
    Ides,
    #[serde(rename = "adj")]
    Adj,
    #[serde(rename = "F")]
    First,
    #[serde(rename = "STAT")]
    Stat,
}

impl Statistic {
    pub const ALL: [Statistic; 7] = [
        Statistic::Adj,
        Statistic::Des,
        Statistic::Ides,
        Statistic::First,
        Statistic::Maj,
        Statistic::Stat,
        Statistic::Inv,
    ];

    pub fn eval<W: AsRef<[Letter]> + ?Sized>(self, v: &W) -> u64 {
        match self {
            Statistic::Inv => inv(v),
            Statistic::Maj => maj(v),
            Statistic::Des => des(v),
            Statistic::Ides => ides(v),
            Statistic::Adj => adj(v),
            Statistic::First => first(v),
            Statistic::Stat => stat(v),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Inv => "INV",
            Statistic::Maj => "MAJ",
            Statistic::Des => "des",
            Statistic::Ides => "ides",
            Statistic::Adj => "adj",
            Statistic::First => "F",
            Statistic::Stat => "STAT",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    /// Case-insensitive; `first` is accepted for `F`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        Statistic::ALL
            .into_iter()
            .find(|st| st.name().to_ascii_lowercase() == lower)
            .or((lower == "first").then_some(Statistic::First))
            .ok_or_else(|| Error::parse(1, format!("unknown statistic {s:?}")))
    }
}
