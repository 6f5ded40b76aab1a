//! Cross-checks against naive reimplementations written straight from the
//! definitions, sharing no code with the library.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;
use rasc::oracle::{bell, catalan, stirling2};
use rasc::pattern::{all_patterns, count_occurrences, Pattern};
use rasc::seqcore::{Enumeration, FamilyTag};
use rasc::Word;

fn positions(x: &[u32], keep: impl Fn(usize) -> bool) -> BTreeSet<usize> {
    (1..=x.len()).filter(|&i| keep(i)).collect()
}

/// Position 1 plus the positions named by each strict comparison.
fn naive_sets(x: &[u32]) -> [BTreeSet<usize>; 4] {
    let n = x.len();
    let at = |i: usize| x[i - 1];
    [
        positions(x, |i| i == 1 || at(i - 1) < at(i)),
        positions(x, |i| i == 1 || (i < n && at(i) < at(i + 1))),
        positions(x, |i| i == 1 || (i < n && at(i) > at(i + 1))),
        positions(x, |i| i == 1 || at(i - 1) > at(i)),
    ]
}

fn naive_nub(x: &[u32]) -> BTreeSet<usize> {
    positions(x, |i| !x[..i - 1].contains(&x[i - 1]))
}

fn naive_cayley(x: &[u32]) -> bool {
    let m = *x.iter().max().unwrap();
    (1..=m).all(|v| x.contains(&v))
}

fn naive_ascent(x: &[u32]) -> bool {
    x[0] == 1
        && (1..x.len()).all(|i| {
            let asc = 1 + (1..i).filter(|&j| x[j - 1] < x[j]).count() as u32;
            x[i] <= asc + 1
        })
}

fn naive_member(x: &[u32], f: FamilyTag) -> bool {
    let [at, ab, dt, db] = naive_sets(x);
    let nub = naive_nub(x);
    match f {
        FamilyTag::AscentSeq => naive_ascent(x),
        FamilyTag::Cayley => naive_cayley(x),
        FamilyTag::ModifiedA => naive_cayley(x) && at == nub,
        FamilyTag::RevisedB => naive_cayley(x) && ab == nub,
        FamilyTag::RevisedC => naive_cayley(x) && dt == nub,
        FamilyTag::RevisedD => naive_cayley(x) && db == nub,
    }
}

/// All words in `[1, n]^n`, lexicographically.
fn all_words(n: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..n).map(|_| 1..=n as u32).multi_cartesian_product()
}

fn naive_occurrences(x: &[u32], p: &[u32]) -> u64 {
    (0..x.len())
        .combinations(p.len())
        .filter(|idx| {
            idx.iter().enumerate().all(|(a, &i)| {
                idx.iter()
                    .enumerate()
                    .all(|(b, &j)| x[i].cmp(&x[j]) == p[a].cmp(&p[b]))
            })
        })
        .count() as u64
}

#[test]
fn backtracking_matches_filtering_all_endofunctions() {
    for n in 1..=6 {
        let words: Vec<Vec<u32>> = all_words(n).collect();
        for f in FamilyTag::ALL {
            let want: Vec<Vec<u32>> = words
                .iter()
                .filter(|x| naive_member(x, f))
                .cloned()
                .collect();
            let got: Vec<Vec<u32>> = Enumeration::new(f, n)
                .collect()
                .unwrap()
                .into_iter()
                .map(Word::into_vec)
                .collect();
            assert_eq!(got, want, "{f} n={n}");
        }
    }
}

#[test]
fn statistic_sets_match_definitions() {
    for n in 1..=5 {
        for x in all_words(n) {
            let word = Word::new(x.clone()).unwrap();
            let s = rasc::seqcore::stat_sets(&word);
            assert_eq!(
                [s.asctop, s.ascbot, s.destop, s.desbot],
                naive_sets(&x),
                "{word}"
            );
            assert_eq!(rasc::seqcore::nub(&word), naive_nub(&x), "{word}");
        }
    }
}

#[test]
fn occurrence_counts_match_subsequence_scan() {
    let patterns: Vec<Pattern> = (1..=3).flat_map(|k| all_patterns(k).unwrap()).collect();
    for n in 1..=6 {
        for x in Enumeration::new(FamilyTag::Cayley, n).collect().unwrap() {
            for p in &patterns {
                assert_eq!(
                    count_occurrences(&x, p),
                    naive_occurrences(x.entries(), p.entries()),
                    "{x} {p}"
                );
            }
        }
    }
}

#[test]
fn containment_of_length_four_patterns_on_long_words() {
    let patterns = all_patterns(4).unwrap();
    for x in Enumeration::new(FamilyTag::RevisedB, 8).collect().unwrap() {
        for p in &patterns {
            let naive = naive_occurrences(x.entries(), p.entries()) > 0;
            assert_eq!(!rasc::avoids(&x, p), naive, "{x} {p}");
        }
    }
}

/// Restricted growth strings of length `n`: set partitions of `[n]`.
fn set_partitions(n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|s: Vec<u32>| {
                let top = s.iter().copied().max().unwrap_or(0);
                (1..=top + 1).map(move |b| {
                    let mut t = s.clone();
                    t.push(b);
                    t
                })
            })
            .collect();
    }
    out
}

#[test]
fn stirling_and_bell_count_set_partitions() {
    for n in 0..=8 {
        let parts = set_partitions(n);
        assert_eq!(bell(n), BigUint::from(parts.len()), "n={n}");
        for k in 0..=n {
            let blocks = parts
                .iter()
                .filter(|s| s.iter().copied().max().unwrap_or(0) as usize == k)
                .count();
            assert_eq!(stirling2(n, k), BigUint::from(blocks), "S({n},{k})");
        }
    }
}

#[test]
fn catalan_counts_dyck_paths() {
    for n in 1..=7 {
        let paths = (0..2 * n)
            .map(|_| [1i32, -1])
            .multi_cartesian_product()
            .filter(|steps| {
                let mut h = 0;
                steps.iter().all(|s| {
                    h += s;
                    h >= 0
                }) && h == 0
            })
            .count();
        assert_eq!(catalan(n), BigUint::from(paths), "n={n}");
    }
}

#[test]
fn lexicographic_order() {
    for f in FamilyTag::ALL {
        let v = Enumeration::new(f, 6).collect().unwrap();
        assert!(
            v.windows(2).all(|p| p[0].cmp(&p[1]) == Ordering::Less),
            "{f}"
        );
    }
}
