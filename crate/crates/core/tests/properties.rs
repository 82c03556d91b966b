use std::collections::BTreeSet;

use pathbij::bijection::{flatten_peaks, unflatten_flats};
use pathbij::families::{enumerate_class_a, enumerate_class_b};
use pathbij::{
    components, in_class_b, parse_path, peak_apexes, phi, phi_inverse, reflect, Path, Step,
};
use proptest::prelude::*;

fn any_step() -> impl Strategy<Value = Step> {
    prop_oneof![Just(Step::Up), Just(Step::Flat), Just(Step::Down)]
}

fn any_path() -> impl Strategy<Value = Path> {
    prop::collection::vec(any_step(), 0..40).prop_map(Path::new)
}

/// Ground-terminated path: a random walk closed off with the steps needed to
/// return to height 0.
fn grounded_path() -> impl Strategy<Value = Path> {
    any_path().prop_map(|p| {
        let end = p.end_height();
        let mut steps = p.into_steps();
        let fix = if end > 0 { Step::Down } else { Step::Up };
        steps.extend(std::iter::repeat_n(fix, end.unsigned_abs() as usize));
        Path::new(steps)
    })
}

/// Dyck path of semilength `n` driven by random choices.
fn dyck_path() -> impl Strategy<Value = Path> {
    prop::collection::vec(any::<bool>(), 0..40).prop_map(|choices| {
        let n = choices.len() / 2;
        let mut steps = Vec::with_capacity(2 * n);
        let (mut ups, mut h) = (0, 0);
        for &up in choices.iter().take(2 * n) {
            let must_up = h == 0;
            let must_down = ups == n;
            if must_up || (up && !must_down) {
                steps.push(Step::Up);
                ups += 1;
                h += 1;
            } else {
                steps.push(Step::Down);
                h -= 1;
            }
        }
        steps.extend(std::iter::repeat_n(Step::Down, h as usize));
        Path::new(steps)
    })
}

proptest! {
    #[test]
    fn text_roundtrip(p in any_path()) {
        let text = p.to_string();
        prop_assert_eq!(parse_path(&text).unwrap(), p);
        prop_assert_eq!(parse_path(&text).unwrap().to_string(), text);
    }

    #[test]
    fn reflect_is_involution(p in any_path()) {
        let r = reflect(&p);
        prop_assert_eq!(reflect(&r), p.clone());
        let negated: Vec<i32> = p.heights().iter().map(|h| -h).collect();
        prop_assert_eq!(r.heights(), negated);
    }

    #[test]
    fn components_reassemble(p in grounded_path()) {
        let view = components(&p).unwrap();
        prop_assert_eq!(view.joined(), p.clone());
        prop_assert_eq!(view.sizes().iter().sum::<usize>(), p.size());
        for c in view.iter() {
            prop_assert!(c.path.is_indecomposable());
        }
    }

    #[test]
    fn apexes_are_disjoint(p in any_path()) {
        let apexes = peak_apexes(&p);
        prop_assert!(apexes.windows(2).all(|w| w[1] >= w[0] + 2));
    }

    #[test]
    fn class_b_is_componentwise(p in grounded_path()) {
        let view = components(&p).unwrap();
        let all = view.iter().all(|c| in_class_b(&c.path));
        prop_assert_eq!(in_class_b(&p), all);
    }

    #[test]
    fn flattening_dyck_paths_is_reversible(d in dyck_path()) {
        let s = flatten_peaks(&d, &BTreeSet::new()).unwrap();
        prop_assert!(peak_apexes(&s).is_empty());
        prop_assert_eq!(unflatten_flats(&s), d);
    }

    #[test]
    fn flatten_keeps_chosen_peaks(d in dyck_path(), pick in any::<prop::sample::Index>()) {
        let apexes = peak_apexes(&d);
        prop_assume!(!apexes.is_empty());
        let keep = apexes[pick.index(apexes.len())];
        let s = flatten_peaks(&d, &BTreeSet::from([keep])).unwrap();
        prop_assert_eq!(peak_apexes(&s).len(), 1);
        prop_assert_eq!(unflatten_flats(&s), d);
    }

    #[test]
    fn bijection_roundtrip_sampled(n in 0usize..=7, pick in any::<prop::sample::Index>()) {
        let a = enumerate_class_a(n);
        let p = &a[pick.index(a.len())];
        let q = phi(p).unwrap();
        prop_assert!(in_class_b(&q));
        prop_assert_eq!(phi_inverse(&q).unwrap(), p.clone());

        let b = enumerate_class_b(n);
        let q = &b[pick.index(b.len())];
        prop_assert_eq!(phi(&phi_inverse(q).unwrap()).unwrap(), q.clone());
    }
}
