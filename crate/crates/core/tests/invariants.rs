//! Exhaustive checks of the structural invariants on small universes.

mod common;

use common::*;
use mahonian_core::verify::distribution_by;
use mahonian_core::*;

#[test]
fn round_trip_expand_then_flatten() {
    for q in 1..=4 {
        for n in 1..=6 {
            for v in bounded_words(q, n) {
                let w = flatten(&expand(&v), &wpart(&v)).unwrap();
                let (reduced, alphabet) = reduce(&v);
                assert_eq!(w, reduced.clone().into_word(), "{v}");
                assert_eq!(
                    unreduce(&reduced, &alphabet).unwrap().letters(),
                    v.letters()
                );
                if v.is_dense() {
                    assert_eq!(w.letters(), v.letters());
                }
            }
        }
    }
}

#[test]
fn round_trip_flatten_then_expand() {
    for n in 1..=7 {
        for pi in permutations(n) {
            let coarse = ppart(&pi);
            for fine in refinements(&coarse) {
                let w = flatten(&pi, &fine).unwrap();
                assert_eq!(expand(&w), pi);
                assert_eq!(wpart(&w), fine);
            }
        }
    }
}

#[test]
fn flatten_rejects_non_refinements() {
    for pi in permutations(4) {
        let coarse = ppart(&pi);
        let good = refinements(&coarse);
        for p in compositions(4) {
            assert_eq!(flatten(&pi, &p).is_ok(), good.contains(&p), "{pi} {p}");
        }
    }
}

#[test]
fn reduction_is_idempotent_and_keeps_expansion() {
    for q in 1..=4 {
        for n in 1..=6 {
            for v in bounded_words(q, n) {
                let (r, _) = reduce(&v);
                let (rr, alphabet) = reduce(r.as_word());
                assert_eq!(rr, r);
                assert_eq!(alphabet, (1..=r.alphabet_size()).collect::<Vec<_>>());
                assert_eq!(expand(r.as_word()), expand(&v));
            }
        }
    }
}

#[test]
fn ppart_size_counts_inverse_descents() {
    for n in 1..=7 {
        for pi in permutations(n) {
            assert_eq!(ppart(&pi).len() as u64, ides(&pi) + 1, "{pi}");
            assert_eq!(ppart(&pi).len(), ppart(&p_perm(&pi)).len(), "{pi}");
        }
    }
}

#[test]
fn word_partition_refines_ppart_of_expansion() {
    for q in 1..=4 {
        for n in q as usize..=6 {
            for v in dense_words(q, n) {
                assert!(
                    is_refinement(&wpart(&v), &ppart(&expand(&v))).unwrap(),
                    "{v}"
                );
            }
        }
    }
}

#[test]
fn encoding_round_trips() {
    for n in 1..=8 {
        for coarse in compositions(n) {
            let fines = refinements(&coarse);
            let mut seen = std::collections::BTreeSet::new();
            for fine in fines {
                let e = encode_refinement(&fine, &coarse).unwrap();
                assert_eq!(decode_refinement(&coarse, &e).unwrap(), fine);
                assert!(seen.insert(e.to_string()));
            }
            assert_eq!(seen.len(), 1 << (n - coarse.len()));
        }
    }
}

#[test]
fn psi_round_trips() {
    for n in 1..=7 {
        let all = compositions(n);
        for p in &all {
            for s in all.iter().filter(|s| s.len() == p.len()) {
                for r in refinements(p) {
                    let t = psi(p, s, &r).unwrap();
                    assert!(is_refinement(&t, s).unwrap());
                    assert_eq!(t.len(), r.len());
                    assert_eq!(psi(s, p, &t).unwrap(), r);
                }
            }
        }
    }
}

#[test]
fn ides_is_des_of_inverse() {
    for n in 1..=7 {
        for pi in permutations(n) {
            assert_eq!(ides(&pi), des(&pi.inverse()), "{pi}");
        }
    }
}

#[test]
fn statistics_survive_expansion_and_reduction() {
    for q in 1..=4 {
        for n in 1..=6 {
            for v in bounded_words(q, n) {
                let e = expand(&v);
                assert_eq!(maj(&v), maj(&e));
                assert_eq!(stat(&v), stat(&e));
                let (r, _) = reduce(&v);
                for s in [
                    Statistic::Des,
                    Statistic::Maj,
                    Statistic::Ides,
                    Statistic::Stat,
                    Statistic::Inv,
                ] {
                    assert_eq!(s.eval(&v), s.eval(&r), "{s} {v}");
                }
                assert_eq!(adj(&v), adj(&r));
                assert_eq!(first(&v), v.first() as u64);
                assert_eq!(maj(&v), maj_ref(v.letters()));
                assert_eq!(inv(&v), inv_ref(v.letters()));
            }
        }
    }
}

#[test]
fn combinations_match_direct_statistics_on_words() {
    let maj_c = catalog::maj_words();
    let stat_c = catalog::stat_words();
    for q in 1..=4 {
        for n in 1..=6 {
            for v in bounded_words(q, n) {
                assert_eq!(maj_c.evaluate(&v), maj(&v), "{v}");
                assert_eq!(stat_c.evaluate(&v), stat(&v), "{v}");
            }
        }
    }
}

#[test]
fn combinations_match_direct_statistics_on_permutations() {
    let c1 = catalog::maj_words();
    let c2 = catalog::maj_permutations();
    let s = catalog::stat_permutations();
    for n in 1..=7 {
        for pi in permutations(n) {
            let w = pi.as_word();
            assert_eq!(c2.evaluate(w), maj(w));
            assert_eq!(c1.evaluate(w), maj(w));
            assert_eq!(s.evaluate(w), stat(w));
        }
    }
}

#[test]
fn repeated_letter_patterns_vanish_on_permutations() {
    let patterns: Vec<VincularPattern> = ["1-21", "21-2", "12-1", "2-21", "11", "22-1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for pi in permutations(6) {
        for p in &patterns {
            assert_eq!(p.count_occurrences(pi.as_word()), 0);
        }
    }
}

#[test]
fn count_equals_listed_occurrences() {
    let patterns: Vec<VincularPattern> = [
        "1-2-3-1", "2-13", "[2-13", "1-21]", "21", "[1", "12]", "3-12",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();
    for v in bounded_words(3, 6) {
        for p in &patterns {
            assert_eq!(p.count_occurrences(&v), p.list_occurrences(&v).len() as u64);
        }
    }
}

#[test]
fn involution_on_permutations() {
    for n in 1..=8 {
        for pi in permutations(n) {
            assert_eq!(p_perm(&p_perm(&pi)), pi);
        }
    }
}

#[test]
fn involution_and_transport_on_words() {
    for q in 1..=4 {
        for n in 1..=6 {
            for v in bounded_words(q, n) {
                let w = p_word(&v);
                assert_eq!(p_word(&w), v, "{v}");
                assert_eq!(stat_tuple(&v), stat_tuple(&w).swapped(), "{v} -> {w}");
                assert_eq!(w.first(), v.first());
                assert_eq!(w.bound(), v.bound());
            }
        }
    }
}

#[test]
fn dense_words_map_to_dense_words() {
    for q in 1..=4 {
        for n in q as usize..=6 {
            for v in dense_words(q, n) {
                let w = p_dense(&v).unwrap();
                assert!(w.is_dense());
                assert_eq!(w, p_word(&v));
            }
        }
    }
}

#[test]
fn inverse_descents_below_first_letter_are_preserved() {
    let low_ides = |pi: &Permutation| {
        let pos = pi.positions();
        let head = pi.letters()[0];
        (1..head)
            .filter(|&a| pos[a as usize] < pos[a as usize - 1])
            .count()
    };
    for n in 1..=7 {
        for pi in permutations(n) {
            assert_eq!(low_ides(&pi), low_ides(&p_perm(&pi)), "{pi}");
        }
    }
}

#[test]
fn some_image_is_not_a_rearrangement() {
    let v: Word = "342421".parse().unwrap();
    assert_ne!(p_word(&v).sorted_letters(), v.sorted_letters());
}

#[test]
fn table_totals_equal_cardinalities() {
    let limits = Limits::default();
    for n in 1..=6 {
        let u = Universe::permutations(n).unwrap();
        let t = distribution(&u, &[Statistic::Maj], &limits).unwrap();
        assert_eq!(t.total() as u128, (1..=n as u128).product::<u128>());
    }
    for q in 1..=4 {
        for n in 1..=5 {
            let u = Universe::words(q, n).unwrap();
            assert_eq!(
                distribution(&u, &[Statistic::Des], &limits)
                    .unwrap()
                    .total(),
                (q as u64).pow(n as u32)
            );
            if q as usize <= n {
                let d = Universe::dense_words(q, n).unwrap();
                assert_eq!(
                    distribution(&d, &[Statistic::Des], &limits)
                        .unwrap()
                        .total() as usize,
                    dense_words(q, n).len()
                );
                assert_eq!(d.cardinality() as usize, dense_words(q, n).len());
            }
        }
    }
}

#[test]
fn universes_enumerate_the_oracle_sets() {
    for n in 1..=6 {
        let mine: Vec<Word> = Universe::permutations(n).unwrap().elements().collect();
        let mut oracle: Vec<Word> = permutations(n)
            .into_iter()
            .map(Permutation::into_word)
            .collect();
        oracle.sort();
        assert_eq!(mine, oracle);
    }
    for q in 1..=3 {
        for n in 1..=5 {
            let mine: Vec<Word> = Universe::words(q, n).unwrap().elements().collect();
            assert_eq!(mine, bounded_words(q, n));
        }
    }
}

#[test]
fn mahonian_tables_on_permutations() {
    let limits = Limits::default();
    for n in 1..=7 {
        let u = Universe::permutations(n).unwrap();
        let expected: DistributionTable<u64> = q_factorial(n)
            .into_iter()
            .enumerate()
            .map(|(k, c)| (k as u64, c))
            .collect();
        for s in [Statistic::Maj, Statistic::Inv, Statistic::Stat] {
            let t = distribution_by(&u, &limits, |w| s.eval(w)).unwrap();
            assert_eq!(t, expected, "{s} on S_{n}");
        }
    }
}

#[test]
fn mahonian_tables_on_words() {
    let limits = Limits::default();
    for (q, max_n) in [(1, 7), (2, 7), (3, 7), (4, 6)] {
        for n in 1..=max_n {
            let r = check_equidistribution(
                &Universe::words(q, n).unwrap(),
                Statistic::Maj,
                Statistic::Stat,
                &limits,
            )
            .unwrap();
            assert!(r.equal, "[{q}]^{n}");
        }
    }
}

#[test]
fn class_tables_match_q_multinomials() {
    for m in [vec![2, 1], vec![2, 2], vec![3, 1, 2], vec![1, 1, 1, 1]] {
        let letters: Vec<Letter> = m
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i as Letter + 1, k))
            .collect();
        let u = Universe::rearrangement_class(&Word::new(letters).unwrap());
        let t = distribution_by(&u, &Limits::default(), maj).unwrap();
        let expected: DistributionTable<u64> = q_multinomial(&m)
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(k, c)| (k as u64, c))
            .collect();
        assert_eq!(t, expected, "{m:?}");
    }
}

#[test]
fn chunked_tables_merge_to_single_pass() {
    let u = Universe::words(3, 6).unwrap();
    let single: DistributionTable<u64> = u.elements().map(|w| stat(&w)).collect();
    let chunks: Vec<DistributionTable<u64>> = u
        .chunks()
        .into_iter()
        .map(|a| u.chunk_elements(a).map(|w| stat(&w)).collect())
        .collect();
    let left = chunks
        .iter()
        .cloned()
        .fold(DistributionTable::new(), DistributionTable::merge);
    let right = chunks
        .iter()
        .rev()
        .cloned()
        .fold(DistributionTable::new(), |acc, t| t.merge(acc));
    assert_eq!(left, single);
    assert_eq!(right, single);
    let (a, b, c) = (chunks[0].clone(), chunks[1].clone(), chunks[2].clone());
    assert_eq!(
        a.clone().merge(b.clone()).merge(c.clone()),
        a.merge(b.merge(c))
    );
}
