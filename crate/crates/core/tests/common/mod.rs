#![allow(dead_code)]

use magma_core::{Atom, DomainKind, Magma};
use proptest::prelude::*;

pub fn atom(d: DomainKind) -> BoxedStrategy<Atom> {
    match d {
        DomainKind::TaggedInt => (0i64..3, -3i64..4).prop_map(|(t, v)| Atom::tag(t, v)).boxed(),
        DomainKind::Plane => (-2i64..4, -2i64..4).prop_map(|(x, y)| Atom::plane(x, y)).boxed(),
        DomainKind::QDup => (-4i64..5, 1i64..3, 0u8..2).prop_map(|(n, q, c)| Atom::qdup(n, q, c)).boxed(),
    }
}

/// Generator trees up to `depth` levels deep, at most two generators per node.
pub fn magma(d: DomainKind, depth: u32) -> BoxedStrategy<Magma> {
    let leaf = prop::collection::vec(atom(d), 1..=2).prop_map(|a| Magma::atom_ideal(a).unwrap());
    leaf.prop_recursive(depth.saturating_sub(1), 24, 2, |inner| {
        prop::collection::vec(inner, 1..=2).prop_map(|g| Magma::magma_ideal(g).unwrap())
    })
    .boxed()
}

pub fn domain() -> impl Strategy<Value = DomainKind> {
    prop::sample::select(DomainKind::ALL.to_vec())
}

pub fn pair_domain() -> impl Strategy<Value = DomainKind> {
    prop::sample::select(vec![DomainKind::TaggedInt, DomainKind::Plane])
}

/// A domain together with `n` magmas over it.
pub fn magmas_in(
    domains: impl Strategy<Value = DomainKind>,
    n: usize,
    depth: u32,
) -> impl Strategy<Value = (DomainKind, Vec<Magma>)> {
    domains.prop_flat_map(move |d| (Just(d), prop::collection::vec(magma(d, depth), n)))
}

pub fn tag(t: i64, v: i64) -> Atom {
    Atom::tag(t, v)
}

pub fn ai(atoms: &[Atom]) -> Magma {
    Magma::atom_ideal(atoms.iter().copied()).unwrap()
}

pub fn mi(gens: &[Magma]) -> Magma {
    Magma::magma_ideal(gens.iter().cloned()).unwrap()
}
