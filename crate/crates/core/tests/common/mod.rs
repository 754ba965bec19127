//! Brute-force generators and reference statistics, written independently of
//! the library's enumerators.
#![allow(dead_code)]

use mahonian_core::{IntervalPartition, Letter, Permutation, Word};

pub fn words(q: Letter, n: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=q).map(move |a| {
                    let mut w = prefix.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn bounded_words(q: Letter, n: usize) -> Vec<Word> {
    words(q, n)
        .into_iter()
        .map(|w| Word::with_bound(w, q).unwrap())
        .collect()
}

pub fn dense_words(q: Letter, n: usize) -> Vec<Word> {
    bounded_words(q, n)
        .into_iter()
        .filter(|w| (1..=q).all(|a| w.letters().contains(&a)))
        .collect()
}

pub fn permutations(n: usize) -> Vec<Permutation> {
    fn go(rest: &mut Vec<Letter>, prefix: &mut Vec<Letter>, out: &mut Vec<Permutation>) {
        if rest.is_empty() {
            out.push(Permutation::new(prefix.clone()).unwrap());
            return;
        }
        for i in 0..rest.len() {
            let a = rest.remove(i);
            prefix.push(a);
            go(rest, prefix, out);
            prefix.pop();
            rest.insert(i, a);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n as Letter).collect(), &mut Vec::new(), &mut out);
    out
}

/// Every interval partition of `[n]`, as size vectors.
pub fn compositions(n: usize) -> Vec<IntervalPartition> {
    (0u32..1 << (n - 1))
        .map(|mask| {
            let breaks: Vec<usize> = (1..n).filter(|g| mask >> (g - 1) & 1 == 1).collect();
            IntervalPartition::from_breaks(n, &breaks).unwrap()
        })
        .collect()
}

/// Refinements of `coarse`, found by filtering all interval partitions
/// through set inclusion of the explicit parts.
pub fn refinements(coarse: &IntervalPartition) -> Vec<IntervalPartition> {
    let outer = coarse.parts();
    compositions(coarse.ground())
        .into_iter()
        .filter(|fine| {
            fine.parts().iter().all(|p| {
                outer
                    .iter()
                    .any(|o| o.start() <= p.start() && p.end() <= o.end())
            })
        })
        .collect()
}

pub fn maj_ref(v: &[Letter]) -> u64 {
    (1..v.len())
        .filter(|&i| v[i - 1] > v[i])
        .map(|i| i as u64)
        .sum()
}

pub fn inv_ref(v: &[Letter]) -> u64 {
    let mut c = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            c += (v[i] > v[j]) as u64;
        }
    }
    c
}

/// Coefficients of `[n]_q!` = prod_{k=1..n} (1 + q + ... + q^{k-1}).
pub fn q_factorial(n: usize) -> Vec<u64> {
    let mut poly = vec![1u64];
    for k in 1..=n {
        let mut next = vec![0u64; poly.len() + k - 1];
        for (i, &c) in poly.iter().enumerate() {
            for j in 0..k {
                next[i + j] += c;
            }
        }
        poly = next;
    }
    poly
}

/// Coefficients of the q-multinomial for letter multiplicities `m`, which
/// counts words with these multiplicities by `MAJ`.
pub fn q_multinomial(m: &[usize]) -> Vec<u64> {
    let n: usize = m.iter().sum();
    let mut num = q_factorial(n);
    for &k in m {
        num = poly_div(&num, &q_factorial(k));
    }
    num
}

fn poly_div(num: &[u64], den: &[u64]) -> Vec<u64> {
    let mut rem: Vec<i128> = num.iter().map(|&c| c as i128).collect();
    let d: Vec<i128> = den.iter().map(|&c| c as i128).collect();
    let mut quot = vec![0i128; num.len() - den.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = rem[i + d.len() - 1] / d[d.len() - 1];
        quot[i] = c;
        for (j, &dj) in d.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact division");
    quot.into_iter().map(|c| c as u64).collect()
}
