use latdim::corpus::random_presentation;
use latdim::lattice::{free_lattice, MeetTerm};
use latdim::{Element, Lattice};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn presentation(seed: u64) -> Lattice {
    random_presentation(&mut ChaCha8Rng::seed_from_u64(seed), 4, 3)
}

/// Raw DNF over the first `n` generators; bits beyond `n` are dropped.
fn element(n: usize, masks: &[u64]) -> Element {
    let keep = (1u64 << n) - 1;
    Element::from_terms(masks.iter().map(|m| MeetTerm(m & keep)))
}

fn masks() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..16, 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lattice_laws(seed in any::<u64>(), a in masks(), b in masks(), c in masks()) {
        let t = presentation(seed);
        let n = t.num_generators();
        let (a, b, c) = (element(n, &a), element(n, &b), element(n, &c));
        let eq = |x: &Element, y: &Element| t.equal(x, y).unwrap();
        let m = |x: &Element, y: &Element| t.meet(x, y).unwrap();
        let j = |x: &Element, y: &Element| t.join(x, y).unwrap();
        prop_assert!(eq(&m(&a, &b), &m(&b, &a)));
        prop_assert!(eq(&j(&a, &b), &j(&b, &a)));
        prop_assert!(eq(&m(&m(&a, &b), &c), &m(&a, &m(&b, &c))));
        prop_assert!(eq(&j(&j(&a, &b), &c), &j(&a, &j(&b, &c))));
        prop_assert!(eq(&m(&a, &j(&a, &b)), &a));
        prop_assert!(eq(&j(&a, &m(&a, &b)), &a));
        prop_assert!(eq(&m(&a, &j(&b, &c)), &j(&m(&a, &b), &m(&a, &c))));
        prop_assert!(eq(&m(&a, &t.top()), &a));
        prop_assert!(eq(&j(&a, &t.bottom()), &a));
    }

    #[test]
    fn leq_agrees_with_meet_and_join(seed in any::<u64>(), a in masks(), b in masks()) {
        let t = presentation(seed);
        let n = t.num_generators();
        let (a, b) = (element(n, &a), element(n, &b));
        let leq = t.leq(&a, &b).unwrap();
        prop_assert_eq!(leq, t.equal(&t.meet(&a, &b).unwrap(), &a).unwrap());
        prop_assert_eq!(leq, t.equal(&t.join(&a, &b).unwrap(), &b).unwrap());
        prop_assert!(t.leq(&t.bottom(), &a).unwrap());
        prop_assert!(t.leq(&a, &t.top()).unwrap());
    }

    #[test]
    fn canonical_form_is_idempotent(seed in any::<u64>(), a in masks()) {
        let t = presentation(seed);
        let a = element(t.num_generators(), &a);
        let c = t.canonical(&a).unwrap();
        prop_assert!(t.equal(&a, &c).unwrap());
        prop_assert_eq!(t.canonical(&c).unwrap(), c.clone());
        let tab = t.enumerate_elements().unwrap();
        prop_assert_eq!(tab.element(tab.id_of(&t, &a).unwrap()), &c);
    }

    #[test]
    fn opposite_reverses_order(seed in any::<u64>(), a in masks(), b in masks()) {
        let t = presentation(seed);
        let n = t.num_generators();
        let (a, b) = (element(n, &a), element(n, &b));
        let op = t.opposite();
        prop_assert_eq!(t.leq(&a, &b).unwrap(), op.leq(&b.dual(), &a.dual()).unwrap());
    }
}

#[test]
fn display_parses_back() {
    let t = free_lattice(3);
    let tab = t.enumerate_elements().unwrap();
    for e in tab.elements() {
        let back = t.parse_element(&t.display(e)).unwrap();
        assert!(t.equal(e, &back).unwrap(), "{}", t.display(e));
    }
}
