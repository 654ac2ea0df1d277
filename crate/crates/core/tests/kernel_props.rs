mod common;

use common::{ai, domain, magmas_in, mi, tag};
use magma_core::kernel::{equal, intersect, level, member, member_magma, pr, pr_atom, subset, union};
use magma_core::{Element, Kind, MagmaError, Ordinal};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn subset_is_a_partial_order_on_canonical_forms((_, v) in magmas_in(domain(), 3, 3)) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert!(subset(x, x));
        if subset(x, y) && subset(y, z) {
            prop_assert!(subset(x, z));
        }
        prop_assert_eq!(subset(x, y) && subset(y, x), x == y);
        prop_assert_eq!(equal(x, y), x.to_string() == y.to_string());
    }

    #[test]
    fn pr_is_an_order_embedding((_, v) in magmas_in(domain(), 2, 3)) {
        let (x, y) = (&v[0], &v[1]);
        prop_assert_eq!(subset(&pr(x), &pr(y)), subset(x, y));
        prop_assert_eq!(equal(&pr(x), &pr(y)), equal(x, y));
        prop_assert!(member_magma(x, &pr(x)));
        prop_assert_eq!(level(&pr(x)), level(x).successor().unwrap());
    }

    #[test]
    fn union_is_the_join_within_a_kind((_, v) in magmas_in(domain(), 3, 3)) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        match union(x, y) {
            Ok(u) => {
                prop_assert_eq!(x.kind(), y.kind());
                prop_assert!(subset(x, &u) && subset(y, &u));
                if z.kind() == x.kind() && subset(x, z) && subset(y, z) {
                    prop_assert!(subset(&u, z));
                }
            }
            Err(e) => {
                prop_assert_eq!(e, MagmaError::KindMismatch);
                prop_assert_ne!(x.kind(), y.kind());
            }
        }
    }

    #[test]
    fn intersection_is_the_meet((_, v) in magmas_in(domain(), 3, 3)) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let below_both = subset(z, x) && subset(z, y);
        match intersect(x, y) {
            Some(m) => {
                prop_assert!(subset(&m, x) && subset(&m, y));
                prop_assert_eq!(below_both, subset(z, &m));
            }
            None => prop_assert!(!below_both),
        }
    }

    #[test]
    fn members_of_a_union_come_from_a_side((_, v) in magmas_in(domain(), 3, 3)) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        if let Ok(u) = union(x, y) {
            let e = Element::Magma(z.clone());
            prop_assert_eq!(member(&e, &u), member(&e, x) || member(&e, y));
        }
    }
}

#[test]
fn atom_ideal_drops_dominated_generators() {
    let x = ai(&[tag(0, 1), tag(0, 3), tag(1, 0)]);
    assert_eq!(x.to_string(), "(ai (at tag 0 3) (at tag 1 0))");
    assert_eq!(x.kind(), Kind::AtomIdeal);
}

#[test]
fn pr_of_an_atom_and_of_its_magma_differ() {
    let a = tag(0, 0);
    assert_eq!(union(&pr_atom(&a), &pr(&pr_atom(&a))), Err(MagmaError::KindMismatch));
    assert!(!equal(&pr_atom(&a), &pr(&pr_atom(&a))));
}

#[test]
fn levels() {
    let x = ai(&[tag(0, 0)]);
    assert_eq!(level(&x), Ordinal::finite(1));
    assert_eq!(level(&pr(&pr(&x))), Ordinal::finite(3));
    let mixed = mi(&[x.clone(), pr(&pr(&x))]);
    assert_eq!(level(&mixed), Ordinal::new(1, 1));
}

#[test]
fn subset_across_kinds_is_false() {
    let x = ai(&[tag(0, 0)]);
    assert!(!subset(&x, &pr(&x)));
    assert!(!subset(&pr(&x), &x));
}
