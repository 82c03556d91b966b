//! Exhaustive checking of the bijection and the counters, one size at a time.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bijection::{phi, phi_inverse};
use crate::families::{
    count_class_a, count_class_b, enumerate_class_a, enumerate_class_b, indec_census, Census,
};
use crate::path::{components, in_class_b, peak_apexes, Path};

const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeReport {
    pub n: usize,
    pub enumerated_a: usize,
    pub enumerated_b: usize,
    pub count_a: BigUint,
    pub count_b: BigUint,
    pub census: Option<Census>,
    /// Total number of failed checks.
    pub failure_count: usize,
    /// The first few failures, described.
    pub failures: Vec<String>,
}

impl SizeReport {
    pub fn ok(&self) -> bool {
        self.failure_count == 0
    }

    fn fail(&mut self, msg: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(msg);
        }
    }
}

impl fmt::Display for SizeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}: |A|={} |B|={} ",
            self.n, self.enumerated_a, self.enumerated_b
        )?;
        if self.ok() {
            write!(f, "bijection OK")?;
        } else {
            write!(f, "FAILED ({} checks)", self.failure_count)?;
        }
        if let Some(c) = &self.census {
            write!(
                f,
                "\n  census: belowA={} aboveA={} nopeakB={} onepeakB={}",
                c.below_a, c.above_a, c.nopeak_b, c.onepeak_b
            )?;
        }
        for msg in &self.failures {
            write!(f, "\n  {msg}")?;
        }
        Ok(())
    }
}

/// Per-component shape: size, and whether it is below ground (class A) or
/// peakless (class B). The bijection must preserve this list.
fn shape(p: &Path, class_b: bool) -> Vec<(usize, bool)> {
    components(p)
        .map(|view| {
            view.iter()
                .map(|c| {
                    let flag = if class_b {
                        peak_apexes(&c.path).is_empty()
                    } else {
                        c.is_below()
                    };
                    (c.path.size(), flag)
                })
                .collect()
        })
        .unwrap_or_default()
}

/// Check every invariant of the bijection and the counters at size `n`.
pub fn verify_size(n: usize, with_census: bool) -> SizeReport {
    let class_a = enumerate_class_a(n);
    let class_b = enumerate_class_b(n);
    let mut report = SizeReport {
        n,
        enumerated_a: class_a.len(),
        enumerated_b: class_b.len(),
        count_a: count_class_a(n),
        count_b: count_class_b(n),
        census: None,
        failure_count: 0,
        failures: Vec::new(),
    };

    if BigUint::from(class_a.len()) != report.count_a {
        let msg = format!(
            "enumerated |A|={} but counted {}",
            class_a.len(),
            report.count_a
        );
        report.fail(msg);
    }
    if BigUint::from(class_b.len()) != report.count_b {
        let msg = format!(
            "enumerated |B|={} but counted {}",
            class_b.len(),
            report.count_b
        );
        report.fail(msg);
    }
    if class_a.len() != class_b.len() {
        report.fail(format!(
            "|A|={} differs from |B|={}",
            class_a.len(),
            class_b.len()
        ));
    }

    let mut images = Vec::with_capacity(class_a.len());
    for p in &class_a {
        let q = match phi(p) {
            Ok(q) => q,
            Err(e) => {
                report.fail(format!("phi({p}) failed: {e}"));
                continue;
            }
        };
        if !in_class_b(&q) {
            report.fail(format!("phi({p}) = {q} is not in class B"));
        }
        if q.size() != p.size() {
            report.fail(format!("phi({p}) = {q} changes the size"));
        }
        if shape(p, false) != shape(&q, true) {
            report.fail(format!(
                "phi({p}) = {q} does not preserve component structure"
            ));
        }
        match phi_inverse(&q) {
            Ok(back) if back == *p => {}
            Ok(back) => report.fail(format!("phi_inverse(phi({p})) = {back}")),
            Err(e) => report.fail(format!("phi_inverse({q}) failed: {e}")),
        }
        images.push(q);
    }

    let distinct: HashSet<&Path> = images.iter().collect();
    if distinct.len() != images.len() {
        report.fail(format!(
            "phi is not injective: {} images, {} distinct",
            images.len(),
            distinct.len()
        ));
    }
    images.sort();
    if images != class_b {
        report.fail("image of class A is not class B".to_string());
    }

    for q in &class_b {
        match phi_inverse(q).and_then(|p| phi(&p)) {
            Ok(again) if again == *q => {}
            Ok(again) => report.fail(format!("phi(phi_inverse({q})) = {again}")),
            Err(e) => report.fail(format!("phi(phi_inverse({q})) failed: {e}")),
        }
    }

    if with_census && n >= 1 {
        let census = indec_census(n);
        if !census.balanced() {
            report.fail(format!("unbalanced census {census:?}"));
        }
        report.census = Some(census);
    }
    report
}

/// [`verify_size`] for every `n` in `0..=max_size`, in size order.
pub fn verify_up_to(max_size: usize, with_census: bool) -> Vec<SizeReport> {
    (0..=max_size)
        .into_par_iter()
        .map(|n| verify_size(n, with_census))
        .collect()
}
