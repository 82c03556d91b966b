//! Exhaustive enumeration and exact counting of the two path classes.
//!
//! Enumerators walk a depth-first tree in `D < F < U` order, so paths come
//! out in ASCII order of their text form. Every branch is pruned as soon as
//! the remaining horizontal budget cannot bring the path back to ground, so
//! no dead prefixes are explored.
//!
//! Counters run a dynamic program over horizontal position in half-units
//! (flats advance two) with arbitrary-precision integers.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bijection::FLAT_LINE;
use crate::path::{peak_apexes, Path, PathClass, Step};

/// Visit every size-`n` class-A path (flats on `flat_line`) in ASCII order.
pub fn for_each_class_a<F: FnMut(&Path)>(n: usize, flat_line: i32, mut visit: F) {
    let mut steps = Vec::with_capacity(2 * n);
    walk_a(&mut steps, 0, 2 * n, flat_line, &mut visit);
}

fn walk_a<F: FnMut(&Path)>(
    steps: &mut Vec<Step>,
    h: i32,
    budget: usize,
    flat_line: i32,
    visit: &mut F,
) {
    if budget == 0 {
        // the pruning below guarantees h == 0 here
        visit(&Path::new(steps.clone()));
        return;
    }
    let fits = |h: i32, budget: usize| h.unsigned_abs() as usize <= budget;
    if fits(h - 1, budget - 1) {
        steps.push(Step::Down);
        walk_a(steps, h - 1, budget - 1, flat_line, visit);
        steps.pop();
    }
    if h == flat_line && budget >= 2 && fits(h, budget - 2) {
        steps.push(Step::Flat);
        walk_a(steps, h, budget - 2, flat_line, visit);
        steps.pop();
    }
    if fits(h + 1, budget - 1) {
        steps.push(Step::Up);
        walk_a(steps, h + 1, budget - 1, flat_line, visit);
        steps.pop();
    }
}

/// Per-component peak bookkeeping for class-B walks and counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct PeakState {
    last_was_up: bool,
    peak_used: bool,
}

impl PeakState {
    const FRESH: PeakState = PeakState {
        last_was_up: false,
        peak_used: false,
    };

    fn index(self) -> usize {
        (self.last_was_up as usize) << 1 | self.peak_used as usize
    }

    fn from_index(i: usize) -> Self {
        PeakState {
            last_was_up: i & 2 != 0,
            peak_used: i & 1 != 0,
        }
    }

    /// State after `step` lands at height `h`, or `None` if it would create a
    /// second peak in the current component.
    fn after(self, step: Step, h: i32) -> Option<PeakState> {
        let next = match step {
            Step::Up => PeakState {
                last_was_up: true,
                ..self
            },
            Step::Flat => PeakState {
                last_was_up: false,
                ..self
            },
            Step::Down if self.last_was_up && self.peak_used => return None,
            Step::Down => PeakState {
                last_was_up: false,
                peak_used: self.peak_used || self.last_was_up,
            },
        };
        Some(if h == 0 { PeakState::FRESH } else { next })
    }
}

/// Visit every size-`n` class-B path in ASCII order.
pub fn for_each_class_b<F: FnMut(&Path)>(n: usize, mut visit: F) {
    let mut steps = Vec::with_capacity(2 * n);
    walk_b(&mut steps, 0, 2 * n, PeakState::FRESH, &mut visit);
}

fn walk_b<F: FnMut(&Path)>(
    steps: &mut Vec<Step>,
    h: i32,
    budget: usize,
    state: PeakState,
    visit: &mut F,
) {
    if budget == 0 {
        visit(&Path::new(steps.clone()));
        return;
    }
    let fits = |h: i32, budget: usize| h >= 0 && h as usize <= budget;
    let mut go = |step: Step, h: i32, budget: usize, steps: &mut Vec<Step>| {
        if let Some(next) = state.after(step, h) {
            steps.push(step);
            walk_b(steps, h, budget, next, visit);
            steps.pop();
        }
    };
    if fits(h - 1, budget - 1) {
        go(Step::Down, h - 1, budget - 1, steps);
    }
    if budget >= 2 && fits(h, budget - 2) {
        go(Step::Flat, h, budget - 2, steps);
    }
    if fits(h + 1, budget - 1) {
        go(Step::Up, h + 1, budget - 1, steps);
    }
}

pub fn enumerate_class_a(n: usize) -> Vec<Path> {
    enumerate_class_a_on_line(n, FLAT_LINE)
}

/// Class-A enumeration with the flat line moved to `flat_line`.
pub fn enumerate_class_a_on_line(n: usize, flat_line: i32) -> Vec<Path> {
    let mut out = Vec::new();
    for_each_class_a(n, flat_line, |p| out.push(p.clone()));
    out
}

pub fn enumerate_class_b(n: usize) -> Vec<Path> {
    let mut out = Vec::new();
    for_each_class_b(n, |p| out.push(p.clone()));
    out
}

pub fn enumerate(class: PathClass, n: usize) -> Vec<Path> {
    match class {
        PathClass::A => enumerate_class_a(n),
        PathClass::B => enumerate_class_b(n),
    }
}

pub fn count_class_a(n: usize) -> BigUint {
    count_class_a_on_line(n, FLAT_LINE)
}

/// Number of size-`n` Grand Schröder paths whose flats lie on `flat_line`.
pub fn count_class_a_on_line(n: usize, flat_line: i32) -> BigUint {
    let width = 2 * n;
    let offset = n as i32;
    let slot = |h: i32| (h + offset) as usize;
    let reachable = |x: usize, h: i32| (h.unsigned_abs() as usize) <= x.min(width - x);

    let mut table: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); 2 * n + 1]; width + 1];
    table[0][slot(0)] = BigUint::from(1u32);
    for x in 0..width {
        for h in -offset..=offset {
            if table[x][slot(h)].is_zero() {
                continue;
            }
            let ways = table[x][slot(h)].clone();
            for next in [h - 1, h + 1] {
                if reachable(x + 1, next) {
                    table[x + 1][slot(next)] += &ways;
                }
            }
            if h == flat_line && x + 2 <= width && reachable(x + 2, h) {
                table[x + 2][slot(h)] += &ways;
            }
        }
    }
    std::mem::take(&mut table[width][slot(0)])
}

/// Number of size-`n` Schröder paths with at most one peak per component.
pub fn count_class_b(n: usize) -> BigUint {
    let width = 2 * n;
    // table[x][h][state]
    let mut table: Vec<Vec<[BigUint; 4]>> = vec![vec![Default::default(); n + 1]; width + 1];
    table[0][0][PeakState::FRESH.index()] = BigUint::from(1u32);
    for x in 0..width {
        for h in 0..=n as i32 {
            for s in 0..4 {
                if table[x][h as usize][s].is_zero() {
                    continue;
                }
                let ways = table[x][h as usize][s].clone();
                let state = PeakState::from_index(s);
                let moves = [
                    (Step::Down, h - 1, 1),
                    (Step::Flat, h, 2),
                    (Step::Up, h + 1, 1),
                ];
                for (step, next_h, dx) in moves {
                    let next_x = x + dx;
                    if next_x > width || next_h < 0 || next_h as usize > width - next_x {
                        continue;
                    }
                    if let Some(next) = state.after(step, next_h) {
                        table[next_x][next_h as usize][next.index()] += &ways;
                    }
                }
            }
        }
    }
    let mut total = BigUint::zero();
    for ways in &table[width][0] {
        total += ways;
    }
    total
}

pub fn count(class: PathClass, n: usize) -> BigUint {
    match class {
        PathClass::A => count_class_a(n),
        PathClass::B => count_class_b(n),
    }
}

/// Indecomposable paths of one size, split by side (class A) and by number
/// of peaks (class B).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Census {
    pub below_a: u64,
    pub above_a: u64,
    pub nopeak_b: u64,
    pub onepeak_b: u64,
}

impl Census {
    /// The side/peak-count correspondence holds.
    pub fn balanced(&self) -> bool {
        self.below_a == self.nopeak_b && self.above_a == self.onepeak_b
    }
}

pub fn indec_census(n: usize) -> Census {
    let mut census = Census::default();
    for_each_class_a(n, FLAT_LINE, |p| {
        if p.is_indecomposable() {
            match p.steps()[0] {
                Step::Down => census.below_a += 1,
                _ => census.above_a += 1,
            }
        }
    });
    for_each_class_b(n, |q| {
        if q.is_indecomposable() {
            match peak_apexes(q).len() {
                0 => census.nopeak_b += 1,
                1 => census.onepeak_b += 1,
                _ => unreachable!("class-B component with two peaks"),
            }
        }
    });
    census
}
