//! Exhaustive verification over finite universes of words.
//!
//! A universe is split into chunks by first letter. Each chunk is enumerated
//! in lexicographic order into a private accumulator and the accumulators are
//! merged in chunk order, so every result is independent of the number of
//! worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bijection::{p_dense, p_perm, p_word};
use crate::error::{Error, Result};
use crate::patterns::{catalog, extensions_of_combination, PatternCombination};
use crate::stats::{stat_tuple, StatTuple, Statistic};
use crate::word::{Letter, Permutation, Word};

pub const DEFAULT_MAX_ELEMENTS: u128 = 10_000_000;

/// Environment variable overriding [`DEFAULT_MAX_ELEMENTS`].
pub const MAX_ELEMENTS_ENV: &str = "MAHONIAN_MAX_ELEMENTS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub max_elements: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

impl Limits {
    pub fn new(max_elements: u128) -> Self {
        Limits { max_elements }
    }

    /// Reads [`MAX_ELEMENTS_ENV`], falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_ELEMENTS_ENV) {
            Ok(v) => v.trim().parse().map(Limits::new).map_err(|_| {
                Error::parse(1, format!("{MAX_ELEMENTS_ENV}={v:?} is not an integer"))
            }),
            Err(_) => Ok(Limits::default()),
        }
    }

    fn check(&self, u: &Universe) -> Result<()> {
        let size = u.cardinality();
        if size > self.max_elements {
            return Err(Error::TooManyElements {
                size,
                cap: self.max_elements,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Universe {
    Permutations {
        n: usize,
    },
    Words {
        q: Letter,
        n: usize,
    },
    DenseWords {
        q: Letter,
        n: usize,
    },
    /// All rearrangements of a multiset, stored sorted.
    RearrangementClass {
        #[serde(serialize_with = "serialize_letters")]
        letters: Vec<Letter>,
    },
}

fn serialize_letters<S: Serializer>(letters: &[Letter], s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(&Word::new(letters.to_vec()).expect("class letters form a word"))
}

impl Universe {
    pub fn permutations(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidUniverse("n must be at least 1".into()));
        }
        Ok(Universe::Permutations { n })
    }

    pub fn words(q: Letter, n: usize) -> Result<Self> {
        if n == 0 || q == 0 {
            return Err(Error::InvalidUniverse("q and n must be at least 1".into()));
        }
        Ok(Universe::Words { q, n })
    }

    pub fn dense_words(q: Letter, n: usize) -> Result<Self> {
        if n == 0 || q == 0 {
            return Err(Error::InvalidUniverse("q and n must be at least 1".into()));
        }
        if q as usize > n {
            return Err(Error::InvalidUniverse(format!(
                "no dense words of length {n} over {q} letters"
            )));
        }
        Ok(Universe::DenseWords { q, n })
    }

    /// The rearrangements of `v`.
    pub fn rearrangement_class(v: &Word) -> Self {
        Universe::RearrangementClass {
            letters: v.sorted_letters(),
        }
    }

    pub fn word_length(&self) -> usize {
        match self {
            Universe::Permutations { n }
            | Universe::Words { n, .. }
            | Universe::DenseWords { n, .. } => *n,
            Universe::RearrangementClass { letters } => letters.len(),
        }
    }

    /// Alphabet bound carried by the enumerated words.
    pub fn bound(&self) -> Letter {
        match self {
            Universe::Permutations { n } => *n as Letter,
            Universe::Words { q, .. } | Universe::DenseWords { q, .. } => *q,
            Universe::RearrangementClass { letters } => *letters.last().unwrap(),
        }
    }

    /// Number of elements, saturating at `u128::MAX`.
    pub fn cardinality(&self) -> u128 {
        match *self {
            Universe::Permutations { n } => factorial(n),
            Universe::Words { q, n } => (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX),
            Universe::DenseWords { q, n } => surjections(n, q as usize),
            Universe::RearrangementClass { ref letters } => {
                let mut total = 0usize;
                let mut count = 1u128;
                for run in letters.chunk_by(|a, b| a == b) {
                    total += run.len();
                    count = count.saturating_mul(binomial(total, run.len()));
                }
                count
            }
        }
    }

    /// Chunk keys: the possible first letters, increasing.
    pub fn chunks(&self) -> Vec<Letter> {
        match self {
            Universe::Permutations { n } => (1..=*n as Letter).collect(),
            Universe::Words { q, .. } | Universe::DenseWords { q, .. } => (1..=*q).collect(),
            Universe::RearrangementClass { letters } => {
                let mut d = letters.clone();
                d.dedup();
                d
            }
        }
    }

    /// All elements in lexicographic order, without a size check.
    pub fn elements(&self) -> Elements {
        let n = self.word_length();
        let (start, step) = match self {
            Universe::Permutations { n } => ((1..=*n as Letter).collect(), Step::Permute),
            Universe::Words { q, n } => (vec![1; *n], Step::Odometer(*q)),
            Universe::DenseWords { q, n } => (vec![1; *n], Step::Dense(*q)),
            Universe::RearrangementClass { letters } => (letters.clone(), Step::Permute),
        };
        debug_assert_eq!(start.len(), n);
        Elements {
            next: Some(start),
            fixed: 0,
            step,
            bound: self.bound(),
        }
    }

    /// Elements of the universe, refusing universes above the cap.
    pub fn enumerate(&self, limits: &Limits) -> Result<Elements> {
        limits.check(self)?;
        Ok(self.elements())
    }

    /// Elements starting with `first`, in lexicographic order.
    pub fn chunk_elements(&self, first: Letter) -> Elements {
        let n = self.word_length();
        let step = match self {
            Universe::Permutations { .. } | Universe::RearrangementClass { .. } => Step::Permute,
            Universe::Words { q, .. } => Step::Odometer(*q),
            Universe::DenseWords { q, .. } => Step::Dense(*q),
        };
        let start = match self {
            Universe::Permutations { n } => (first >= 1 && first as usize <= *n).then(|| {
                let mut s = vec![first];
                s.extend((1..=*n as Letter).filter(|&a| a != first));
                s
            }),
            Universe::Words { .. } | Universe::DenseWords { .. } => {
                (first >= 1 && first <= self.bound()).then(|| {
                    let mut s = vec![1; n];
                    s[0] = first;
                    s
                })
            }
            Universe::RearrangementClass { letters } => {
                letters.iter().position(|&a| a == first).map(|i| {
                    let mut s = letters.clone();
                    s.remove(i);
                    s.insert(0, first);
                    s
                })
            }
        };
        Elements {
            next: start,
            fixed: 1,
            step,
            bound: self.bound(),
        }
    }

    /// Folds every element into per-chunk accumulators in parallel and merges
    /// them in chunk order.
    pub fn fold<T, I, F, M>(&self, limits: &Limits, init: I, fold: F, merge: M) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync,
        F: Fn(&mut T, &Word) + Sync,
        M: Fn(T, T) -> T,
    {
        limits.check(self)?;
        let parts: Vec<T> = self
            .chunks()
            .into_par_iter()
            .map(|first| {
                let mut acc = init();
                for w in self.chunk_elements(first) {
                    fold(&mut acc, &w);
                }
                acc
            })
            .collect();
        Ok(parts.into_iter().reduce(merge).unwrap_or_else(init))
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Universe::Permutations { n } => write!(f, "S_{n}"),
            Universe::Words { q, n } => write!(f, "[{q}]^{n}"),
            Universe::DenseWords { q, n } => write!(f, "dense [{q}]^{n}"),
            Universe::RearrangementClass { letters } => {
                write!(
                    f,
                    "rearrangements of {}",
                    Word::new(letters.clone()).unwrap()
                )
            }
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .unwrap_or(u128::MAX)
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc = 1u128;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Surjections from `[n]` onto `[q]`, by `s(n, q) = q (s(n-1, q) + s(n-1, q-1))`.
fn surjections(n: usize, q: usize) -> u128 {
    let mut row = vec![0u128; q + 1];
    row[0] = 1;
    for _ in 0..n {
        for k in (1..=q).rev() {
            row[k] = (k as u128).saturating_mul(row[k].saturating_add(row[k - 1]));
        }
        row[0] = 0;
    }
    row[q]
}

#[derive(Clone, Copy, Debug)]
enum Step {
    Odometer(Letter),
    Dense(Letter),
    Permute,
}

/// Lexicographic iterator over a universe or one of its chunks.
#[derive(Clone, Debug)]
pub struct Elements {
    next: Option<Vec<Letter>>,
    /// Leading positions that never change.
    fixed: usize,
    step: Step,
    bound: Letter,
}

impl Iterator for Elements {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let current = self.next.take()?;
            let mut succ = current.clone();
            let more = match self.step {
                Step::Odometer(q) | Step::Dense(q) => increment(&mut succ[self.fixed..], q),
                Step::Permute => next_permutation(&mut succ[self.fixed..]),
            };
            if more {
                self.next = Some(succ);
            }
            if let Step::Dense(q) = self.step {
                if !covers(&current, q) {
                    continue;
                }
            }
            return Some(Word::from_raw(current, self.bound));
        }
    }
}

fn increment(digits: &mut [Letter], q: Letter) -> bool {
    for d in digits.iter_mut().rev() {
        if *d < q {
            *d += 1;
            return true;
        }
        *d = 1;
    }
    false
}

fn next_permutation(a: &mut [Letter]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[i] < a[j]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

fn covers(letters: &[Letter], q: Letter) -> bool {
    let mut seen = vec![false; q as usize + 1];
    for &a in letters {
        seen[a as usize] = true;
    }
    seen[1..].iter().all(|&s| s)
}

/// Counts per value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable<K: Ord> {
    counts: BTreeMap<K, u64>,
}

impl<K: Ord> Default for DistributionTable<K> {
    fn default() -> Self {
        DistributionTable {
            counts: BTreeMap::new(),
        }
    }
}

impl<K: Ord> DistributionTable<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, value: K) {
        self.add(value, 1);
    }

    pub fn add(&mut self, value: K, count: u64) {
        if count > 0 {
            *self.counts.entry(value).or_insert(0) += count;
        }
    }

    /// Value-wise sum of counts.
    pub fn merge(mut self, other: Self) -> Self {
        if self.counts.len() < other.counts.len() {
            return other.merge(self);
        }
        for (k, c) in other.counts {
            self.add(k, c);
        }
        self
    }

    pub fn get(&self, value: &K) -> u64 {
        self.counts.get(value).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Number of distinct values.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, u64)> {
        self.counts.iter().map(|(k, &c)| (k, c))
    }

    /// Smallest value whose counts differ, with both counts.
    pub fn first_difference<'a>(&'a self, other: &'a Self) -> Option<(&'a K, u64, u64)> {
        let mut a = self.counts.iter().peekable();
        let mut b = other.counts.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some(&(k, &c)), None) => return Some((k, c, 0)),
                (None, Some(&(k, &c))) => return Some((k, 0, c)),
                (Some(&(ka, &ca)), Some(&(kb, &cb))) => match ka.cmp(kb) {
                    std::cmp::Ordering::Less => return Some((ka, ca, 0)),
                    std::cmp::Ordering::Greater => return Some((kb, 0, cb)),
                    std::cmp::Ordering::Equal if ca != cb => return Some((ka, ca, cb)),
                    std::cmp::Ordering::Equal => {
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl<K: Ord> FromIterator<K> for DistributionTable<K> {
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut t = DistributionTable::new();
        for k in iter {
            t.record(k);
        }
        t
    }
}

impl<K: Ord> FromIterator<(K, u64)> for DistributionTable<K> {
    fn from_iter<I: IntoIterator<Item = (K, u64)>>(iter: I) -> Self {
        let mut t = DistributionTable::new();
        for (k, c) in iter {
            t.add(k, c);
        }
        t
    }
}

#[derive(Serialize)]
struct Entry<'a, K> {
    value: &'a K,
    count: u64,
}

impl<K: Ord + Serialize> Serialize for DistributionTable<K> {
    /// A list of `{"value": .., "count": ..}` in increasing value order.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|(value, count)| Entry { value, count }))
    }
}

impl fmt::Display for DistributionTable<u64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}:{c}")?;
        }
        f.write_str("}")
    }
}

/// Table of `f` over `u`.
pub fn distribution_by<K, F>(u: &Universe, limits: &Limits, f: F) -> Result<DistributionTable<K>>
where
    K: Ord + Send,
    F: Fn(&Word) -> K + Sync,
{
    u.fold(
        limits,
        DistributionTable::new,
        |t, w| t.record(f(w)),
        DistributionTable::merge,
    )
}

/// Joint table of a tuple of statistics; keys list the values in the order
/// of `stats`.
pub fn distribution(
    u: &Universe,
    stats: &[Statistic],
    limits: &Limits,
) -> Result<DistributionTable<Vec<u64>>> {
    distribution_by(u, limits, |w| stats.iter().map(|s| s.eval(w)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Difference {
    pub value: u64,
    pub left: u64,
    pub right: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquidistributionReport {
    pub universe: Universe,
    pub left: String,
    pub right: String,
    pub elements: u64,
    pub equal: bool,
    pub first_difference: Option<Difference>,
    pub left_table: DistributionTable<u64>,
    pub right_table: DistributionTable<u64>,
}

impl EquidistributionReport {
    fn from_tables(
        universe: &Universe,
        left: String,
        right: String,
        left_table: DistributionTable<u64>,
        right_table: DistributionTable<u64>,
    ) -> Self {
        let first_difference = left_table
            .first_difference(&right_table)
            .map(|(&value, l, r)| Difference {
                value,
                left: l,
                right: r,
            });
        EquidistributionReport {
            universe: universe.clone(),
            left,
            right,
            elements: left_table.total(),
            equal: first_difference.is_none(),
            first_difference,
            left_table,
            right_table,
        }
    }
}

pub fn check_equidistribution(
    u: &Universe,
    left: Statistic,
    right: Statistic,
    limits: &Limits,
) -> Result<EquidistributionReport> {
    check_equidistribution_by(
        u,
        limits,
        (left.name(), |w| left.eval(w)),
        (right.name(), |w| right.eval(w)),
    )
}

/// Like [`check_equidistribution`] for arbitrary named statistics.
pub fn check_equidistribution_by<F, G>(
    u: &Universe,
    limits: &Limits,
    left: (&str, F),
    right: (&str, G),
) -> Result<EquidistributionReport>
where
    F: Fn(&Word) -> u64 + Sync,
    G: Fn(&Word) -> u64 + Sync,
{
    let (lt, rt) = u.fold(
        limits,
        || (DistributionTable::new(), DistributionTable::new()),
        |(lt, rt), w| {
            lt.record((left.1)(w));
            rt.record((right.1)(w));
        },
        |(a, b), (c, d)| (a.merge(c), b.merge(d)),
    )?;
    Ok(EquidistributionReport::from_tables(
        u,
        left.0.to_string(),
        right.0.to_string(),
        lt,
        rt,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: Word,
    pub image: Word,
    pub image_of_image: Word,
    pub input_tuple: StatTuple,
    pub image_tuple: StatTuple,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportReport {
    pub universe: Universe,
    pub checked: u64,
    /// First element with `p(p(v)) != v`.
    pub involution_failure: Option<Counterexample>,
    /// First element whose tuple is not the swapped tuple of its image.
    pub transport_failure: Option<Counterexample>,
    pub passed: bool,
}

#[derive(Default)]
struct TransportAcc {
    checked: u64,
    involution_failure: Option<Counterexample>,
    transport_failure: Option<Counterexample>,
}

/// Checks pointwise that `p` is an involution on `u` and that
/// `stat_tuple(v) == stat_tuple(p(v)).swapped()`.
///
/// Permutations go through the permutation form of `p`, dense words through
/// the dense form, everything else through the general-word form.
pub fn check_involution_and_transport(u: &Universe, limits: &Limits) -> Result<TransportReport> {
    let apply = |w: &Word| -> Word {
        match u {
            Universe::Permutations { .. } => {
                let pi = Permutation::try_from(w.clone()).expect("universe yields permutations");
                p_perm(&pi).into_word()
            }
            Universe::DenseWords { .. } => p_dense(w).expect("universe yields dense words"),
            _ => p_word(w),
        }
    };
    let acc = u.fold(
        limits,
        TransportAcc::default,
        |acc, v| {
            acc.checked += 1;
            if acc.involution_failure.is_some() && acc.transport_failure.is_some() {
                return;
            }
            let image = apply(v);
            let back = apply(&image);
            let input_tuple = stat_tuple(v);
            let image_tuple = stat_tuple(&image);
            let make = || Counterexample {
                input: v.clone(),
                image: image.clone(),
                image_of_image: back.clone(),
                input_tuple,
                image_tuple,
            };
            if acc.involution_failure.is_none() && &back != v {
                acc.involution_failure = Some(make());
            }
            if acc.transport_failure.is_none() && input_tuple != image_tuple.swapped() {
                acc.transport_failure = Some(make());
            }
        },
        |a, b| TransportAcc {
            checked: a.checked + b.checked,
            involution_failure: a.involution_failure.or(b.involution_failure),
            transport_failure: a.transport_failure.or(b.transport_failure),
        },
    )?;
    Ok(TransportReport {
        universe: u.clone(),
        checked: acc.checked,
        passed: acc.involution_failure.is_none() && acc.transport_failure.is_none(),
        involution_failure: acc.involution_failure,
        transport_failure: acc.transport_failure,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateOutcome {
    pub combination: String,
    /// One flag per entry of [`ExtensionSearchReport::lengths`].
    pub equidistributed: Vec<bool>,
    pub survives: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionSearchReport {
    pub q: Letter,
    pub lengths: Vec<usize>,
    /// Lengths that count towards survival; shorter words cannot tell
    /// 3-letter patterns apart.
    pub verdict_lengths: Vec<usize>,
    pub base: String,
    pub reference: String,
    pub target: String,
    pub candidates: Vec<CandidateOutcome>,
    pub survivors: Vec<String>,
    pub conclusive: bool,
    /// Exactly one survivor, and it is the target combination.
    pub unique_survivor_is_target: bool,
}

/// Shortest word length at which a survival verdict is meaningful.
pub const MIN_VERDICT_LENGTH: usize = 3;

/// Runs [`search_extensions`] for `STAT` on permutations against the word
/// form of `MAJ`, expecting the word form of `STAT` as sole survivor.
pub fn search_mahonian_extensions(
    lengths: RangeInclusive<usize>,
    q: Letter,
    limits: &Limits,
) -> Result<ExtensionSearchReport> {
    search_extensions(
        &catalog::stat_permutations(),
        &catalog::maj_words(),
        &catalog::stat_words(),
        lengths,
        q,
        limits,
    )
}

/// Evaluates every extension of `base` on `[q]^n` for each `n` in `lengths`
/// and keeps those equidistributed with `reference` at every length of at
/// least [`MIN_VERDICT_LENGTH`].
pub fn search_extensions(
    base: &PatternCombination,
    reference: &PatternCombination,
    target: &PatternCombination,
    lengths: RangeInclusive<usize>,
    q: Letter,
    limits: &Limits,
) -> Result<ExtensionSearchReport> {
    let lengths: Vec<usize> = lengths.collect();
    let candidates = extensions_of_combination(base)?;
    let mut universes = Vec::with_capacity(lengths.len());
    for &n in &lengths {
        let u = Universe::words(q, n)?;
        limits.check(&u)?;
        universes.push(u);
    }
    let references: Vec<DistributionTable<u64>> = universes
        .iter()
        .map(|u| distribution_by(u, limits, |w| reference.evaluate(w)))
        .collect::<Result<_>>()?;

    let verdict: Vec<bool> = lengths.iter().map(|&n| n >= MIN_VERDICT_LENGTH).collect();
    let conclusive = verdict.iter().any(|&v| v);
    let outcomes: Vec<CandidateOutcome> = candidates
        .par_iter()
        .map(|c| {
            let equidistributed: Vec<bool> = universes
                .iter()
                .zip(&references)
                .map(|(u, r)| {
                    let t: DistributionTable<u64> = u.elements().map(|w| c.evaluate(&w)).collect();
                    &t == r
                })
                .collect();
            let survives = conclusive
                && equidistributed
                    .iter()
                    .zip(&verdict)
                    .all(|(&eq, &counts)| eq || !counts);
            CandidateOutcome {
                combination: c.to_string(),
                equidistributed,
                survives,
            }
        })
        .collect();
    let survivors: Vec<String> = outcomes
        .iter()
        .filter(|o| o.survives)
        .map(|o| o.combination.clone())
        .collect();
    let unique_survivor_is_target = survivors == [target.to_string()];
    Ok(ExtensionSearchReport {
        q,
        verdict_lengths: lengths
            .iter()
            .copied()
            .filter(|&n| n >= MIN_VERDICT_LENGTH)
            .collect(),
        lengths,
        base: base.to_string(),
        reference: reference.to_string(),
        target: target.to_string(),
        candidates: outcomes,
        survivors,
        conclusive,
        unique_survivor_is_target,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassOutcome {
    /// The multiset, written as its non-decreasing word.
    pub class: Word,
    pub size: u64,
    pub maj: DistributionTable<u64>,
    pub stat: DistributionTable<u64>,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassProbeReport {
    pub q: Letter,
    pub n: usize,
    pub classes: Vec<ClassOutcome>,
    pub differing: Vec<Word>,
    pub all_equal: bool,
}

/// Compares `MAJ` and `STAT` on every rearrangement class of length-`n`
/// words over `[q]`.
pub fn probe_rearrangement_classes(
    q: Letter,
    n: usize,
    limits: &Limits,
) -> Result<ClassProbeReport> {
    let whole = Universe::words(q, n)?;
    limits.check(&whole)?;
    let mut classes = Vec::new();
    for counts in compositions(n, q as usize) {
        let letters: Vec<Letter> = counts
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i as Letter + 1, c))
            .collect();
        let class = Word::with_bound(letters, q)?;
        let u = Universe::rearrangement_class(&class);
        let report = check_equidistribution(&u, Statistic::Maj, Statistic::Stat, limits)?;
        classes.push(ClassOutcome {
            class,
            size: report.elements,
            equal: report.equal,
            maj: report.left_table,
            stat: report.right_table,
        });
    }
    classes.sort_by(|a, b| a.class.cmp(&b.class));
    let differing: Vec<Word> = classes
        .iter()
        .filter(|c| !c.equal)
        .map(|c| c.class.clone())
        .collect();
    Ok(ClassProbeReport {
        q,
        n,
        all_equal: differing.is_empty(),
        classes,
        differing,
    })
}

/// Weak compositions of `n` into `parts` parts.
fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == parts {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for c in 0..=left {
            cur.push(c);
            go(left - c, parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(n, parts, &mut Vec::new(), &mut out);
    }
    out
}
