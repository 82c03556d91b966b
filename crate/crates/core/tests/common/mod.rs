//! Brute-force reference predicates working on raw step strings.
//!
//! Nothing here calls into the library: every string of total width `2n` is
//! generated and tested against the definitions directly.

#![allow(dead_code)]

/// Every `U`/`F`/`D` string whose horizontal width (U, D = 1, F = 2) is `width`.
pub fn all_strings(width: usize) -> Vec<String> {
    fn go(width: usize, prefix: &mut String, out: &mut Vec<String>) {
        if width == 0 {
            out.push(prefix.clone());
            return;
        }
        for (c, w) in [('D', 1), ('F', 2), ('U', 1)] {
            if w <= width {
                prefix.push(c);
                go(width - w, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(width, &mut String::new(), &mut out);
    out
}

pub fn heights(s: &str) -> Vec<i32> {
    let mut h = vec![0];
    for c in s.chars() {
        let last = *h.last().unwrap();
        h.push(match c {
            'U' => last + 1,
            'D' => last - 1,
            _ => last,
        });
    }
    h
}

pub fn brute_class_a(s: &str, line: i32) -> bool {
    let h = heights(s);
    h[h.len() - 1] == 0 && s.chars().enumerate().all(|(i, c)| c != 'F' || h[i] == line)
}

pub fn brute_class_b(s: &str) -> bool {
    let h = heights(s);
    if h[h.len() - 1] != 0 || h.iter().any(|x| *x < 0) {
        return false;
    }
    let b = s.as_bytes();
    let mut peaks = 0;
    for i in 0..b.len() {
        if i > 0 && b[i - 1] == b'U' && b[i] == b'D' {
            peaks += 1;
            if peaks > 1 {
                return false;
            }
        }
        if h[i + 1] == 0 {
            peaks = 0;
        }
    }
    true
}

/// Size-`n` class-A strings in ASCII order, by exhaustive filtering.
pub fn brute_enumerate_a(n: usize, line: i32) -> Vec<String> {
    let mut v: Vec<String> = all_strings(2 * n)
        .into_iter()
        .filter(|s| brute_class_a(s, line))
        .collect();
    v.sort();
    v
}

pub fn brute_enumerate_b(n: usize) -> Vec<String> {
    let mut v: Vec<String> = all_strings(2 * n)
        .into_iter()
        .filter(|s| brute_class_b(s))
        .collect();
    v.sort();
    v
}

/// Counts for n = 0..=6 obtained from `brute_enumerate_a` / `brute_enumerate_b`
/// (the two agree), frozen here.
pub const SMALL_COUNTS: [u64; 7] = [1, 2, 6, 21, 79, 309, 1237];
