//! Every stage of the above-ground pipeline, checked against its inverse on
//! every intermediate value reachable from class A up to size 8.

use std::collections::BTreeSet;

use pathbij::bijection::{
    contract_marks, expand_flats, flatten_peaks, flip_marked, interchange, landmarks,
    map_indecomposable, recover_marks, reverse_interchange, unflatten_flats,
    unflatten_flats_tracking, unmap_indecomposable,
};
use pathbij::families::{enumerate_class_a, enumerate_class_b};
use pathbij::{components, peak_apexes, phi, Path, Step};

const N_VERIFY: usize = 8;

fn indecomposable_a(n: usize) -> impl Iterator<Item = Path> {
    enumerate_class_a(n)
        .into_iter()
        .filter(|p| p.is_indecomposable())
}

#[test]
fn above_pipeline_stages_are_reversible() {
    let mut checked = 0;
    for n in 2..=N_VERIFY {
        for p in indecomposable_a(n).filter(|p| p.steps()[0] == Step::Up) {
            let inner = p.slice(1..p.len() - 1);

            let expanded = expand_flats(&inner).unwrap();
            assert!(!expanded.path().has_flats());
            assert_eq!(expanded.path().size(), inner.size());
            assert_eq!(
                contract_marks(&expanded).unwrap(),
                inner,
                "expand/contract on {p}"
            );

            let flipped = flip_marked(&expanded).unwrap();
            assert_eq!(
                recover_marks(&flipped).unwrap(),
                expanded,
                "flip/recover on {p}"
            );

            let marks = landmarks(&flipped).unwrap();
            assert!(0 < marks.v1 && marks.v1 < marks.v2 && marks.v2 <= flipped.len());
            let swapped = interchange(&flipped, marks.v1, marks.v2).unwrap();
            assert!(swapped.path.heights().iter().all(|h| *h >= 0), "{p}");
            assert!(peak_apexes(&swapped.path).contains(&swapped.w));
            assert_eq!(swapped.path.steps()[swapped.w], Step::Down);
            assert_eq!(
                reverse_interchange(&swapped.path, swapped.w).unwrap(),
                flipped,
                "interchange/reverse on {p}"
            );

            let flat = flatten_peaks(&swapped.path, &BTreeSet::from([swapped.w])).unwrap();
            // each flattened peak left of w shortens the path by one vertex
            let shift = peak_apexes(&swapped.path)
                .iter()
                .filter(|a| **a < swapped.w)
                .count();
            assert_eq!(peak_apexes(&flat), vec![swapped.w - shift]);
            let (back, w) = unflatten_flats_tracking(&flat, peak_apexes(&flat)[0]);
            assert_eq!(back, swapped.path);
            assert_eq!(w, swapped.w);

            let image = flat.lifted();
            assert!(image.is_indecomposable());
            assert_eq!(map_indecomposable(&p).unwrap(), image);
            assert_eq!(unmap_indecomposable(&image).unwrap(), p);
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn below_branch_is_reversible() {
    for n in 1..=N_VERIFY {
        for p in indecomposable_a(n).filter(|p| p.steps()[0] == Step::Down) {
            let q = map_indecomposable(&p).unwrap();
            assert!(q.is_indecomposable());
            assert!(peak_apexes(&q).is_empty());
            assert_eq!(q.size(), p.size());
            assert_eq!(unmap_indecomposable(&q).unwrap(), p);
        }
    }
}

#[test]
fn flatten_and_unflatten_are_inverse() {
    for n in 0..=N_VERIFY {
        // the flat-free nonnegative class-A paths are exactly the Dyck paths
        let dyck = enumerate_class_a(n)
            .into_iter()
            .filter(|p| !p.has_flats() && p.heights().iter().all(|h| *h >= 0));
        for d in dyck {
            let s = flatten_peaks(&d, &BTreeSet::new()).unwrap();
            assert!(peak_apexes(&s).is_empty());
            assert_eq!(unflatten_flats(&s), d);
        }
        let peakless = enumerate_class_b(n)
            .into_iter()
            .filter(|q| peak_apexes(q).is_empty());
        for s in peakless {
            assert_eq!(
                flatten_peaks(&unflatten_flats(&s), &BTreeSet::new()).unwrap(),
                s
            );
        }
    }
}

#[test]
fn component_correspondence() {
    for n in 0..=N_VERIFY {
        for p in enumerate_class_a(n) {
            let q = phi(&p).unwrap();
            let pc = components(&p).unwrap();
            let qc = components(&q).unwrap();
            assert_eq!(pc.sizes(), qc.sizes(), "{p} -> {q}");
            for (a, b) in pc.iter().zip(qc.iter()) {
                let peaks = peak_apexes(&b.path).len();
                if a.is_below() {
                    assert_eq!(peaks, 0, "{p} -> {q}");
                } else {
                    assert_eq!(peaks, 1, "{p} -> {q}");
                }
            }
        }
    }
}
