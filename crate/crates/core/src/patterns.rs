//! Vincular patterns over words, their textual notation, occurrence
//! counting, and the weak-relation extension calculus.
//!
//! Notation: digits `1`-`9` are pattern letters; letters written next to each
//! other must occupy adjacent positions of an occurrence, and a `-` between
//! two letters lifts that constraint. A leading `[` pins the occurrence to the
//! first letter of the word and a trailing `]` to the last one.
//!
//! ```
//! use mahonian_core::patterns::VincularPattern;
//!
//! let p: VincularPattern = "2-13".parse().unwrap();
//! // 425, 416, 216 and 516; 426 and 213 fail the adjacency of `13`.
//! assert_eq!(p.count_occurrences(&"425163".parse().unwrap()), 4);
//! let hooked: VincularPattern = "[2-13".parse().unwrap();
//! assert_eq!(hooked.count_occurrences(&"425163".parse().unwrap()), 2);
//! ```
//!
//! On words, an occurrence must reproduce both the strict order and the
//! equalities of the pattern letters, so `1-21` matches `262` in `6214562`
//! but never matches inside a permutation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{expand_letters, reduce_letters, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VincularPattern {
    body: Vec<Letter>,
    /// `adjacent[k]` ties pattern positions `k` and `k + 1` (0-based).
    adjacent: Vec<bool>,
    begin_hook: bool,
    end_hook: bool,
}

impl VincularPattern {
    /// `adjacencies` lists 1-based gaps: gap `k` ties letters `k` and `k + 1`.
    pub fn new(
        body: Vec<Letter>,
        adjacencies: &[usize],
        begin_hook: bool,
        end_hook: bool,
    ) -> Result<Self> {
        if body.is_empty() {
            return Err(Error::InvalidPattern("empty pattern".into()));
        }
        if !is_dense(&body) {
            return Err(Error::InvalidPattern(format!(
                "pattern letters {body:?} are not dense"
            )));
        }
        let mut adjacent = vec![false; body.len() - 1];
        for &k in adjacencies {
            if k == 0 || k >= body.len() {
                return Err(Error::InvalidPattern(format!(
                    "adjacency gap {k} is outside 1..{}",
                    body.len()
                )));
            }
            adjacent[k - 1] = true;
        }
        Ok(VincularPattern {
            body,
            adjacent,
            begin_hook,
            end_hook,
        })
    }

    pub fn body(&self) -> &[Letter] {
        &self.body
    }

    pub fn len(&self) -> usize {
        self.body.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based adjacency gaps.
    pub fn adjacencies(&self) -> Vec<usize> {
        self.adjacent
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(k, _)| k + 1)
            .collect()
    }

    pub fn begin_hook(&self) -> bool {
        self.begin_hook
    }

    pub fn end_hook(&self) -> bool {
        self.end_hook
    }

    /// Same constraints, different letters; `body` gets reduced.
    fn with_body(&self, body: &[Letter]) -> VincularPattern {
        VincularPattern {
            body: reduce_letters(body),
            adjacent: self.adjacent.clone(),
            begin_hook: self.begin_hook,
            end_hook: self.end_hook,
        }
    }

    pub fn count_occurrences(&self, w: &Word) -> u64 {
        self.count_in(w.letters())
    }

    /// Like [`count_occurrences`](Self::count_occurrences) on a raw letter
    /// slice.
    pub fn count_in(&self, w: &[Letter]) -> u64 {
        let mut count = 0;
        self.search(w, &mut |_| count += 1);
        count
    }

    /// 1-based index tuples of all occurrences, in lexicographic order.
    pub fn list_occurrences(&self, w: &Word) -> Vec<Vec<usize>> {
        let mut found = Vec::new();
        self.search(w.letters(), &mut |idx| {
            found.push(idx.iter().map(|i| i + 1).collect())
        });
        found
    }

    fn search(&self, w: &[Letter], visit: &mut dyn FnMut(&[usize])) {
        let m = self.body.len();
        let n = w.len();
        if m > n {
            return;
        }
        let mut chosen = Vec::with_capacity(m);
        self.extend(w, &mut chosen, visit);
    }

    fn extend(&self, w: &[Letter], chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        let m = self.body.len();
        let n = w.len();
        let k = chosen.len();
        if k == m {
            if !self.end_hook || chosen[m - 1] == n - 1 {
                visit(chosen);
            }
            return;
        }
        // Leave room for the remaining m - k - 1 letters.
        let last = n - (m - k);
        let range = match chosen.last() {
            None if self.begin_hook => 0..=0,
            None => 0..=last,
            Some(&prev) if self.adjacent[k - 1] => (prev + 1)..=(prev + 1).min(last),
            Some(&prev) => (prev + 1)..=last,
        };
        for i in range {
            let fits = chosen
                .iter()
                .enumerate()
                .all(|(a, &j)| self.body[a].cmp(&self.body[k]) == w[j].cmp(&w[i]));
            if fits {
                chosen.push(i);
                self.extend(w, chosen, visit);
                chosen.pop();
            }
        }
    }
}

fn is_dense(letters: &[Letter]) -> bool {
    let max = letters.iter().copied().max().unwrap_or(0) as usize;
    let mut seen = vec![false; max + 1];
    for &a in letters {
        seen[a as usize] = true;
    }
    letters.iter().all(|&a| a >= 1) && seen[1..].iter().all(|&s| s)
}

impl fmt::Display for VincularPattern {
    /// Letters above 9 have no notation and render in parentheses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.begin_hook {
            f.write_str("[")?;
        }
        for (k, a) in self.body.iter().enumerate() {
            if k > 0 && !self.adjacent[k - 1] {
                f.write_str("-")?;
            }
            if *a <= 9 {
                write!(f, "{a}")?;
            } else {
                write!(f, "({a})")?;
            }
        }
        if self.end_hook {
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl FromStr for VincularPattern {
    type Err = Error;

    /// Positions in errors are 1-based character offsets.
    fn from_str(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        let begin_hook = chars.first() == Some(&'[');
        if begin_hook {
            i += 1;
        }
        let mut body = Vec::new();
        let mut adjacencies = Vec::new();
        let mut end_hook = false;
        let mut expect_letter = true;
        while i < chars.len() {
            let c = chars[i];
            match c {
                '1'..='9' => {
                    if !expect_letter && !body.is_empty() {
                        adjacencies.push(body.len());
                    }
                    body.push(c.to_digit(10).unwrap());
                    expect_letter = false;
                }
                '-' => {
                    if expect_letter {
                        return Err(Error::parse(i + 1, "empty group before '-'"));
                    }
                    expect_letter = true;
                }
                ']' if i + 1 == chars.len() => {
                    if expect_letter {
                        return Err(Error::parse(i + 1, "empty group before ']'"));
                    }
                    end_hook = true;
                }
                '0' => return Err(Error::parse(i + 1, "pattern letters start at 1")),
                _ => return Err(Error::parse(i + 1, format!("unexpected character {c:?}"))),
            }
            i += 1;
        }
        if expect_letter {
            return Err(Error::parse(chars.len() + 1, "expected a pattern letter"));
        }
        if !is_dense(&body) {
            return Err(Error::parse(
                1,
                "pattern letters must be dense (use every value from 1 to the largest)",
            ));
        }
        VincularPattern::new(body, &adjacencies, begin_hook, end_hook)
    }
}

/// A multiset of patterns, evaluated as the total number of occurrences.
///
/// Members are kept sorted, so two combinations are equal iff they hold the
/// same patterns with the same multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternCombination {
    patterns: Vec<VincularPattern>,
}

impl PatternCombination {
    pub fn new(mut patterns: Vec<VincularPattern>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidPattern("empty combination".into()));
        }
        patterns.sort();
        Ok(PatternCombination { patterns })
    }

    pub fn patterns(&self) -> &[VincularPattern] {
        &self.patterns
    }

    pub fn evaluate(&self, w: &Word) -> u64 {
        self.evaluate_in(w.letters())
    }

    pub fn evaluate_in(&self, w: &[Letter]) -> u64 {
        self.patterns.iter().map(|p| p.count_in(w)).sum()
    }

    fn union(parts: impl IntoIterator<Item = PatternCombination>) -> PatternCombination {
        let mut patterns: Vec<VincularPattern> =
            parts.into_iter().flat_map(|c| c.patterns).collect();
        patterns.sort();
        PatternCombination { patterns }
    }
}

impl From<VincularPattern> for PatternCombination {
    fn from(p: VincularPattern) -> Self {
        PatternCombination { patterns: vec![p] }
    }
}

impl fmt::Display for PatternCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternCombination {
    type Err = Error;

    /// `"p1 + p2 + ..."`, optionally wrapped in parentheses.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let base = text.find(inner).unwrap_or(0);
        let mut offset = 0;
        let mut patterns = Vec::new();
        for term in inner.split('+') {
            let lead = term.len() - term.trim_start().len();
            let p = term
                .trim()
                .parse::<VincularPattern>()
                .map_err(|e| match e {
                    Error::Parse { position, message } => Error::Parse {
                        position: base + offset + lead + position,
                        message,
                    },
                    other => other,
                })?;
            patterns.push(p);
            offset += term.len() + 1;
        }
        PatternCombination::new(patterns)
    }
}

pub fn parse_pattern(text: &str) -> Result<VincularPattern> {
    text.parse()
}

pub fn count_occurrences(p: &VincularPattern, w: &Word) -> u64 {
    p.count_occurrences(w)
}

pub fn list_occurrences(p: &VincularPattern, w: &Word) -> Vec<Vec<usize>> {
    p.list_occurrences(w)
}

pub fn evaluate_combination(c: &PatternCombination, w: &Word) -> u64 {
    c.evaluate(w)
}

/// The permutation-valued or word-valued pattern forms of `MAJ` and `STAT`.
pub mod catalog {
    use super::PatternCombination;

    /// `MAJ` on words.
    pub const MAJ_WORDS: &str = "1-32 + 1-21 + 2-31 + 2-21 + 3-21 + 21";
    /// `MAJ` on permutations; agrees with [`MAJ_WORDS`] there.
    pub const MAJ_PERMUTATIONS: &str = "1-32 + 2-31 + 3-21 + 21";
    /// `STAT` on permutations.
    pub const STAT_PERMUTATIONS: &str = "21-3 + 13-2 + 32-1 + 21";
    /// `STAT` on words, the Mahonian extension of [`STAT_PERMUTATIONS`].
    pub const STAT_WORDS: &str = "21-3 + 21-2 + 13-2 + 12-1 + 32-1 + 21";

    fn parse(s: &str) -> PatternCombination {
        s.parse().expect("catalog entries are well formed")
    }

    pub fn maj_words() -> PatternCombination {
        parse(MAJ_WORDS)
    }

    pub fn maj_permutations() -> PatternCombination {
        parse(MAJ_PERMUTATIONS)
    }

    pub fn stat_permutations() -> PatternCombination {
        parse(STAT_PERMUTATIONS)
    }

    pub fn stat_words() -> PatternCombination {
        parse(STAT_WORDS)
    }
}

/// Extensions of a single pattern of shape `uv-x` (one adjacency) or `uv`
/// with distinct letters, `u` being the first letter.
///
/// Each nonempty set of strict relations between `u` and another letter is
/// weakened to allow equality. Weakening `u ~ y` contributes the pattern where
/// `u` takes the value of `y`, provided `u` keeps its strict relation to every
/// other letter; a variant breaking the remaining relations contributes
/// nothing. Combinations equal to the bare pattern are not extensions. The
/// result is sorted and duplicate-free.
pub fn extensions_of_pattern(p: &VincularPattern) -> Result<Vec<PatternCombination>> {
    let supported = !p.begin_hook
        && !p.end_hook
        && match p.len() {
            2 => p.adjacent == [true],
            3 => p.adjacent.iter().filter(|&&a| a).count() == 1,
            _ => false,
        }
        && expand_letters(&p.body) == p.body;
    if !supported {
        return Err(Error::UnsupportedExtensionShape(p.to_string()));
    }
    let body = &p.body;
    let others: Vec<usize> = (1..body.len()).collect();
    let variants: Vec<Option<VincularPattern>> = others
        .iter()
        .map(|&y| {
            let keeps_order = others
                .iter()
                .filter(|&&z| z != y)
                .all(|&z| body[0].cmp(&body[z]) == body[y].cmp(&body[z]));
            keeps_order.then(|| {
                let mut merged = body.clone();
                merged[0] = body[y];
                p.with_body(&merged)
            })
        })
        .collect();

    let base = PatternCombination::from(p.clone());
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << others.len()) {
        let mut members = vec![p.clone()];
        for (bit, v) in variants.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                if let Some(v) = v {
                    members.push(v.clone());
                }
            }
        }
        let c = PatternCombination::new(members)?;
        if c != base {
            out.insert(c);
        }
    }
    Ok(out.into_iter().collect())
}

/// Every combination obtained by keeping each member or replacing it by one
/// of its extensions, the unextended combination included. Sorted by the
/// combination's natural order and duplicate-free.
pub fn extensions_of_combination(c: &PatternCombination) -> Result<Vec<PatternCombination>> {
    let mut choices = Vec::with_capacity(c.patterns.len());
    for p in &c.patterns {
        let mut options = vec![PatternCombination::from(p.clone())];
        options.extend(extensions_of_pattern(p)?);
        choices.push(options);
    }
    let mut out = BTreeSet::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        out.insert(PatternCombination::union(
            pick.iter()
                .zip(&choices)
                .map(|(&i, options)| options[i].clone()),
        ));
        // Odometer over the choice indices.
        let mut k = choices.len();
        loop {
            if k == 0 {
                return Ok(out.into_iter().collect());
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
        }
    }
}
