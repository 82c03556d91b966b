mod common;

use common::*;
use num_bigint::BigUint;
use pathbij::families::{
    count_class_a, count_class_a_on_line, count_class_b, enumerate_class_a,
    enumerate_class_a_on_line, enumerate_class_b,
};
use pathbij::permutations::{class_b_patterns, count_avoiders};

fn strings(paths: &[pathbij::Path]) -> Vec<String> {
    paths.iter().map(|p| p.to_string()).collect()
}

#[test]
fn frozen_counts_match_brute_force() {
    for (n, &expected) in SMALL_COUNTS.iter().enumerate() {
        assert_eq!(brute_enumerate_a(n, 2).len() as u64, expected, "A, n={n}");
        assert_eq!(brute_enumerate_b(n).len() as u64, expected, "B, n={n}");
    }
}

#[test]
fn enumerators_match_brute_force_exactly() {
    for n in 0..=6 {
        assert_eq!(
            strings(&enumerate_class_a(n)),
            brute_enumerate_a(n, 2),
            "A, n={n}"
        );
        assert_eq!(
            strings(&enumerate_class_b(n)),
            brute_enumerate_b(n),
            "B, n={n}"
        );
    }
}

#[test]
fn flat_line_variants_match_brute_force() {
    for line in [0, 1, 3, -1] {
        for n in 0..=5 {
            assert_eq!(
                strings(&enumerate_class_a_on_line(n, line)),
                brute_enumerate_a(n, line),
                "line={line}, n={n}"
            );
            assert_eq!(
                count_class_a_on_line(n, line),
                BigUint::from(brute_enumerate_a(n, line).len()),
            );
        }
    }
}

#[test]
fn counters_match_frozen_values() {
    for (n, &expected) in SMALL_COUNTS.iter().enumerate() {
        assert_eq!(count_class_a(n), BigUint::from(expected));
        assert_eq!(count_class_b(n), BigUint::from(expected));
    }
}

#[test]
fn counters_match_enumeration_to_ten() {
    for n in 0..=10 {
        assert_eq!(
            count_class_a(n),
            BigUint::from(enumerate_class_a(n).len()),
            "n={n}"
        );
        assert_eq!(
            count_class_b(n),
            BigUint::from(enumerate_class_b(n).len()),
            "n={n}"
        );
    }
}

#[test]
fn enumerations_sorted_and_well_formed() {
    for n in 0..=8 {
        let a = enumerate_class_a(n);
        assert!(
            a.windows(2).all(|w| w[0] < w[1]),
            "A not strictly sorted at n={n}"
        );
        for p in &a {
            assert_eq!(p.size(), n);
            assert_eq!(p.count(pathbij::Step::Up), p.count(pathbij::Step::Down));
            assert!(pathbij::classify(p).flat_heights.iter().all(|h| *h == 2));
        }
        let b = enumerate_class_b(n);
        assert!(
            b.windows(2).all(|w| w[0] < w[1]),
            "B not strictly sorted at n={n}"
        );
        assert!(b.iter().all(|q| q.size() == n && pathbij::in_class_b(q)));
    }
}

#[test]
fn counts_agree_to_two_hundred() {
    for n in 0..=200 {
        assert_eq!(count_class_a(n), count_class_b(n), "n={n}");
    }
}

#[test]
fn avoiders_match_brute_force_small() {
    // independent check of the avoiders for m <= 6 with a direct scan
    fn avoids(p: &[usize]) -> bool {
        let pats = [[3, 2, 4, 1], [3, 4, 2, 1], [4, 3, 2, 1]];
        let m = p.len();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    for d in c + 1..m {
                        let sub = [p[a], p[b], p[c], p[d]];
                        let st: Vec<usize> = sub
                            .iter()
                            .map(|x| 1 + sub.iter().filter(|y| *y < x).count())
                            .collect();
                        if pats.iter().any(|pat| pat[..] == st[..]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    fn perms(m: usize) -> Vec<Vec<usize>> {
        if m == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(m - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, m);
                out.push(q);
            }
        }
        out
    }
    let pats = class_b_patterns();
    for m in 0..=6 {
        let brute = perms(m).iter().filter(|p| avoids(p)).count() as u64;
        assert_eq!(count_avoiders(m, &pats).unwrap(), brute, "m={m}");
        if m >= 1 {
            assert_eq!(brute, SMALL_COUNTS[m - 1]);
        }
    }
}
