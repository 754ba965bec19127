//! Interval partitions of `[n]`.
//!
//! A partition is stored as its list of part sizes; part `i` is the interval
//! following part `i - 1`. Refinements of a coarse partition `P` of size `k`
//! are encoded by which of its `n - k` breakable gaps they break, the gaps
//! being numbered from 1, left to right.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Permutation, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalPartition {
    sizes: Vec<usize>,
}

impl IntervalPartition {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidPartition("empty part".into()));
        }
        Ok(IntervalPartition { sizes })
    }

    /// `{{1},{2},...,{n}}`.
    pub fn singletons(n: usize) -> Self {
        IntervalPartition { sizes: vec![1; n] }
    }

    /// `{{1,...,n}}`.
    pub fn whole(n: usize) -> Self {
        IntervalPartition { sizes: vec![n] }
    }

    /// Builds the partition of `[n]` whose parts end right before each gap
    /// in `breaks`; gap `g` sits between `g` and `g + 1`.
    pub fn from_breaks(n: usize, breaks: &[usize]) -> Result<Self> {
        let mut sizes = Vec::with_capacity(breaks.len() + 1);
        let mut start = 0;
        for &g in breaks {
            if g <= start || g >= n {
                return Err(Error::InvalidPartition(format!(
                    "gap {g} is out of order or outside 1..{n}"
                )));
            }
            sizes.push(g - start);
            start = g;
        }
        sizes.push(n - start);
        Self::new(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// The ground set size `n`.
    pub fn ground(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn parts(&self) -> Vec<RangeInclusive<usize>> {
        let mut start = 1;
        self.sizes
            .iter()
            .map(|&s| {
                let r = start..=start + s - 1;
                start += s;
                r
            })
            .collect()
    }

    /// Gaps at which a new part starts, increasing.
    pub fn breaks(&self) -> Vec<usize> {
        let mut acc = 0;
        self.sizes[..self.sizes.len() - 1]
            .iter()
            .map(|&s| {
                acc += s;
                acc
            })
            .collect()
    }

    /// Gaps interior to a part, increasing; entry `j - 1` is breakable gap `j`.
    pub fn breakable_gaps(&self) -> Vec<usize> {
        let mut gaps = Vec::with_capacity(self.ground() - self.len());
        let mut start = 0;
        for &s in &self.sizes {
            gaps.extend(start + 1..start + s);
            start += s;
        }
        gaps
    }

    /// `part_indices()[a - 1]` is the 0-based index of the part holding `a`.
    pub fn part_indices(&self) -> Vec<usize> {
        self.sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
            .collect()
    }

    /// Whether every part of `self` lies inside a part of `coarse`.
    pub fn is_refinement_of(&self, coarse: &IntervalPartition) -> Result<bool> {
        self.check_ground(coarse)?;
        let fine = self.breaks();
        Ok(coarse
            .breaks()
            .iter()
            .all(|g| fine.binary_search(g).is_ok()))
    }

    fn check_ground(&self, other: &IntervalPartition) -> Result<()> {
        if self.ground() != other.ground() {
            return Err(Error::GroundSetMismatch {
                left: self.ground(),
                right: other.ground(),
            });
        }
        Ok(())
    }

    /// `{{1},{2,3},{4,5,6}}`.
    pub fn to_set_notation(&self) -> String {
        let parts: Vec<String> = self
            .parts()
            .into_iter()
            .map(|r| {
                let items: Vec<String> = r.map(|x| x.to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for IntervalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.sizes)
    }
}

impl FromStr for IntervalPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let sizes = parse_list(s)?;
        if sizes.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::parse(i + 1, "part sizes must be positive"));
        }
        IntervalPartition::new(sizes)
    }
}

impl Serialize for IntervalPartition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Comma-separated non-negative integers; the empty string is the empty list.
/// Error positions count list items from 1.
fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(i + 1, format!("expected an integer, found {t:?}")))
        })
        .collect()
}

/// Indices of breakable gaps of a coarse partition, strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RefinementEncoding(Vec<usize>);

impl RefinementEncoding {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.first() == Some(&0) {
            return Err(Error::EncodingZeroIndex);
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::EncodingNotIncreasing);
        }
        Ok(RefinementEncoding(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for RefinementEncoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for RefinementEncoding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RefinementEncoding::new(parse_list(s)?)
    }
}

impl Serialize for RefinementEncoding {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `ppart(pi)`: `a` and `a + 1` share a part iff `a` occurs left of `a + 1`.
pub fn ppart(pi: &Permutation) -> IntervalPartition {
    let pos = pi.positions();
    let breaks: Vec<usize> = (1..pi.len()).filter(|&a| pos[a - 1] > pos[a]).collect();
    IntervalPartition::from_breaks(pi.len(), &breaks).expect("breaks are increasing and in range")
}

/// `wpart(v)`: part `i` has as many elements as the `i`-th smallest letter
/// of `v` has occurrences.
pub fn wpart(v: &Word) -> IntervalPartition {
    let sorted = v.sorted_letters();
    let mut sizes = Vec::new();
    for run in sorted.chunk_by(|a, b| a == b) {
        sizes.push(run.len());
    }
    IntervalPartition { sizes }
}

pub fn is_refinement(fine: &IntervalPartition, coarse: &IntervalPartition) -> Result<bool> {
    fine.is_refinement_of(coarse)
}

fn not_refinement(fine: &IntervalPartition, coarse: &IntervalPartition) -> Error {
    Error::NotRefinement {
        fine: fine.to_set_notation(),
        coarse: coarse.to_set_notation(),
    }
}

pub fn encode_refinement(
    fine: &IntervalPartition,
    coarse: &IntervalPartition,
) -> Result<RefinementEncoding> {
    if !fine.is_refinement_of(coarse)? {
        return Err(not_refinement(fine, coarse));
    }
    let fine_breaks = fine.breaks();
    let indices = coarse
        .breakable_gaps()
        .into_iter()
        .enumerate()
        .filter(|(_, g)| fine_breaks.binary_search(g).is_ok())
        .map(|(j, _)| j + 1)
        .collect();
    Ok(RefinementEncoding(indices))
}

pub fn decode_refinement(
    coarse: &IntervalPartition,
    encoding: &RefinementEncoding,
) -> Result<IntervalPartition> {
    let gaps = coarse.breakable_gaps();
    let mut breaks = coarse.breaks();
    for &j in encoding.indices() {
        if j == 0 || j > gaps.len() {
            return Err(Error::EncodingOutOfRange {
                index: j,
                max: gaps.len(),
            });
        }
        breaks.push(gaps[j - 1]);
    }
    breaks.sort_unstable();
    IntervalPartition::from_breaks(coarse.ground(), &breaks)
}

/// `psi_{P,S}(R)`: the refinement of `to` with the same encoding that `fine`
/// has relative to `from`.
pub fn psi(
    from: &IntervalPartition,
    to: &IntervalPartition,
    fine: &IntervalPartition,
) -> Result<IntervalPartition> {
    from.check_ground(to)?;
    if from.len() != to.len() {
        return Err(Error::PartCountMismatch {
            left: from.len(),
            right: to.len(),
        });
    }
    let encoding = encode_refinement(fine, from)?;
    decode_refinement(to, &encoding)
}
