//! Finitely generated magmas and their decision procedures.
//!
//! A magma is presented by a nonempty antichain of generators: atoms for an
//! atom-ideal, magmas for a magma-ideal. The magma denoted is the union of
//! the principal down-sets `pr(g)` of its generators. Presentations are kept
//! canonical (equivalent atoms collapsed to their representative, dominated
//! generators removed, generators sorted), so two magmas are equal exactly
//! when their presentations are identical.
//!
//! Inclusion reduces to generators: `x ⊆ y` iff every generator of `x` lies
//! below some generator of `y`. Intersections use atom meet covers at the
//! bottom and recurse through generator pairs above it.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::domain::{self, Atom, DomainKind};
use crate::error::{MagmaError, Result};
use crate::ordinal::{Level, Ordinal, MAX_OMEGA_COEFF};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    AtomIdeal,
    MagmaIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generators {
    Atoms(Vec<Atom>),
    Magmas(Vec<Magma>),
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Node {
    gens: Generators,
    level: Level,
    domain: DomainKind,
}

/// A canonical finitely generated magma. Cloning is cheap.
#[derive(Clone)]
pub struct Magma(Arc<Node>);

/// Anything that can sit inside a magma: an atom or another magma.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Atom(Atom),
    Magma(Magma),
}

impl From<Atom> for Element {
    fn from(a: Atom) -> Self {
        Element::Atom(a)
    }
}

impl From<Magma> for Element {
    fn from(m: Magma) -> Self {
        Element::Magma(m)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Atom(a) => a.fmt(f),
            Element::Magma(m) => m.fmt(f),
        }
    }
}

impl Magma {
    /// The ideal generated by a nonempty set of atoms of one domain.
    pub fn atom_ideal<I: IntoIterator<Item = Atom>>(atoms: I) -> Result<Magma> {
        let mut reps: Vec<Atom> = atoms.into_iter().map(|a| domain::canonical_rep(&a)).collect();
        let first = *reps.first().ok_or(MagmaError::EmptyGenerators)?;
        if let Some(other) = reps.iter().find(|a| a.kind() != first.kind()) {
            return Err(MagmaError::DomainMismatch(first.kind(), other.kind()));
        }
        reps.sort();
        reps.dedup();
        let d = first.domain();
        let keep: Vec<Atom> = reps.iter().filter(|a| !reps.iter().any(|b| b != *a && d.leq(a, b))).copied().collect();
        Ok(Magma(Arc::new(Node { gens: Generators::Atoms(keep), level: Ordinal::finite(1), domain: first.kind() })))
    }

    /// The ideal generated by a nonempty set of magmas of one domain.
    pub fn magma_ideal<I: IntoIterator<Item = Magma>>(gens: I) -> Result<Magma> {
        let mut gens: Vec<Magma> = gens.into_iter().collect();
        let first = gens.first().ok_or(MagmaError::EmptyGenerators)?.domain();
        if let Some(other) = gens.iter().find(|g| g.domain() != first) {
            return Err(MagmaError::DomainMismatch(first, other.domain()));
        }
        gens.sort();
        gens.dedup();
        let keep: Vec<Magma> = gens.iter().filter(|g| !gens.iter().any(|h| h != *g && subset(g, h))).cloned().collect();
        let level = ideal_level(&keep)?;
        Ok(Magma(Arc::new(Node { gens: Generators::Magmas(keep), level, domain: first })))
    }

    pub fn kind(&self) -> Kind {
        match self.0.gens {
            Generators::Atoms(_) => Kind::AtomIdeal,
            Generators::Magmas(_) => Kind::MagmaIdeal,
        }
    }

    pub fn generators(&self) -> &Generators {
        &self.0.gens
    }

    pub fn atoms(&self) -> Option<&[Atom]> {
        match &self.0.gens {
            Generators::Atoms(a) => Some(a),
            Generators::Magmas(_) => None,
        }
    }

    pub fn magmas(&self) -> Option<&[Magma]> {
        match &self.0.gens {
            Generators::Atoms(_) => None,
            Generators::Magmas(m) => Some(m),
        }
    }

    pub fn generator_count(&self) -> usize {
        match &self.0.gens {
            Generators::Atoms(a) => a.len(),
            Generators::Magmas(m) => m.len(),
        }
    }

    /// Generators as elements, in canonical order.
    pub fn elements(&self) -> Vec<Element> {
        match &self.0.gens {
            Generators::Atoms(a) => a.iter().copied().map(Element::Atom).collect(),
            Generators::Magmas(m) => m.iter().cloned().map(Element::Magma).collect(),
        }
    }

    /// For a principal magma-ideal `pr(u)`, returns `u`.
    pub fn principal(&self) -> Option<&Magma> {
        match &self.0.gens {
            Generators::Magmas(m) if m.len() == 1 => Some(&m[0]),
            _ => None,
        }
    }

    pub fn level(&self) -> Level {
        self.0.level
    }

    pub fn domain(&self) -> DomainKind {
        self.0.domain
    }

    /// Height of the generator tree; atom-ideals have depth 1.
    pub fn depth(&self) -> usize {
        match &self.0.gens {
            Generators::Atoms(_) => 1,
            Generators::Magmas(m) => 1 + m.iter().map(Magma::depth).max().unwrap_or(0),
        }
    }
}

/// Level of an ideal over magma generators: one above a common generator
/// level, otherwise one above the least limit level exceeding all of them.
fn ideal_level(gens: &[Magma]) -> Result<Level> {
    let first = gens[0].level();
    if gens.iter().all(|g| g.level() == first) {
        return first.successor().map_err(|_| MagmaError::LevelOverflow);
    }
    let q_max = gens.iter().map(|g| g.level().q).max().unwrap_or(0);
    if q_max + 1 > MAX_OMEGA_COEFF {
        return Err(MagmaError::LevelOverflow);
    }
    Ok(Ordinal::new(q_max + 1, 1))
}

impl PartialEq for Magma {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Magma {}

impl Hash for Magma {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl Ord for Magma {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.kind()
            .cmp(&other.kind())
            .then_with(|| self.level().cmp(&other.level()))
            .then_with(|| match (&self.0.gens, &other.0.gens) {
                (Generators::Atoms(a), Generators::Atoms(b)) => a.cmp(b),
                (Generators::Magmas(a), Generators::Magmas(b)) => a.cmp(b),
                _ => unreachable!("kinds already compared"),
            })
            .then_with(|| self.domain().cmp(&other.domain()))
    }
}

impl PartialOrd for Magma {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.gens {
            Generators::Atoms(atoms) => {
                f.write_str("(ai")?;
                for a in atoms {
                    write!(f, " {a}")?;
                }
            }
            Generators::Magmas(gens) => {
                f.write_str("(mi")?;
                for g in gens {
                    write!(f, " {g}")?;
                }
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `pr` of an atom: its principal down-set.
pub fn pr_atom(a: &Atom) -> Magma {
    Magma::atom_ideal([*a]).expect("single atom")
}

/// `pr` of a magma: the principal magma-ideal `{x}`.
pub fn pr(x: &Magma) -> Magma {
    Magma::magma_ideal([x.clone()]).expect("single generator")
}

pub fn pr_element(e: &Element) -> Magma {
    match e {
        Element::Atom(a) => pr_atom(a),
        Element::Magma(m) => pr(m),
    }
}

/// `n`-fold `pr`; `pr_iter(0, x)` is `x` itself.
pub fn pr_iter(n: usize, x: &Magma) -> Magma {
    (0..n).fold(x.clone(), |acc, _| pr(&acc))
}

/// `pr^n(a)` for an atom, `n ≥ 1`.
pub fn pr_iter_atom(n: usize, a: &Atom) -> Magma {
    assert!(n >= 1, "pr^0 of an atom is not a magma");
    pr_iter(n - 1, &pr_atom(a))
}

/// `⟦x⟧ ⊆ ⟦y⟧`.
pub fn subset(x: &Magma, y: &Magma) -> bool {
    if x == y {
        return true;
    }
    match (&x.0.gens, &y.0.gens) {
        (Generators::Atoms(xs), Generators::Atoms(ys)) => {
            if x.domain() != y.domain() {
                return false;
            }
            let d = x.domain().domain();
            xs.iter().all(|a| ys.iter().any(|b| d.leq(a, b)))
        }
        (Generators::Magmas(xs), Generators::Magmas(ys)) => xs.iter().all(|g| ys.iter().any(|h| subset(g, h))),
        _ => false,
    }
}

pub fn proper_subset(x: &Magma, y: &Magma) -> bool {
    subset(x, y) && !subset(y, x)
}

/// Mutual inclusion. On canonical presentations this coincides with `==`.
pub fn equal(x: &Magma, y: &Magma) -> bool {
    subset(x, y) && subset(y, x)
}

/// `z ∈ x`: an atom below an atom generator, or a magma inside a magma
/// generator.
pub fn member(z: &Element, x: &Magma) -> bool {
    match (z, &x.0.gens) {
        (Element::Atom(a), Generators::Atoms(gs)) => a.kind() == x.domain() && gs.iter().any(|g| a.domain().leq(a, g)),
        (Element::Magma(m), Generators::Magmas(gs)) => gs.iter().any(|g| subset(m, g)),
        _ => false,
    }
}

pub fn member_magma(z: &Magma, x: &Magma) -> bool {
    match &x.0.gens {
        Generators::Magmas(gs) => gs.iter().any(|g| subset(z, g)),
        Generators::Atoms(_) => false,
    }
}

/// Union of two magmas of the same kind. Mixing an atom-ideal with a
/// magma-ideal is rejected: that union is not a magma.
pub fn union(x: &Magma, y: &Magma) -> Result<Magma> {
    match (&x.0.gens, &y.0.gens) {
        (Generators::Atoms(xs), Generators::Atoms(ys)) => Magma::atom_ideal(xs.iter().chain(ys.iter()).copied()),
        (Generators::Magmas(xs), Generators::Magmas(ys)) => Magma::magma_ideal(xs.iter().chain(ys.iter()).cloned()),
        _ => Err(MagmaError::KindMismatch),
    }
}

/// Union of a nonempty list of magmas of one kind.
pub fn union_all<'a, I: IntoIterator<Item = &'a Magma>>(items: I) -> Result<Magma> {
    let mut it = items.into_iter();
    let first = it.next().ok_or(MagmaError::EmptyGenerators)?.clone();
    it.try_fold(first, |acc, m| union(&acc, m))
}

/// `⟦x⟧ ∩ ⟦y⟧`, or `None` when the intersection is empty (and therefore not
/// a magma).
pub fn intersect(x: &Magma, y: &Magma) -> Option<Magma> {
    if x == y {
        return Some(x.clone());
    }
    if x.domain() != y.domain() {
        return None;
    }
    match (&x.0.gens, &y.0.gens) {
        (Generators::Atoms(xs), Generators::Atoms(ys)) => {
            let mut bounds = Vec::new();
            for a in xs {
                for b in ys {
                    bounds.extend(domain::common_lower_bounds(a, b).expect("same domain"));
                }
            }
            if bounds.is_empty() {
                None
            } else {
                Some(Magma::atom_ideal(bounds).expect("nonempty, one domain"))
            }
        }
        (Generators::Magmas(xs), Generators::Magmas(ys)) => {
            let meets: Vec<Magma> = xs.iter().flat_map(|g| ys.iter().filter_map(move |h| intersect(g, h))).collect();
            if meets.is_empty() {
                None
            } else {
                Some(Magma::magma_ideal(meets).expect("nonempty, one domain"))
            }
        }
        _ => None,
    }
}

pub fn level(x: &Magma) -> Level {
    x.level()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(tag: i64, v: i64) -> Atom {
        Atom::tag(tag, v)
    }

    fn ai(atoms: &[Atom]) -> Magma {
        Magma::atom_ideal(atoms.iter().copied()).unwrap()
    }

    #[test]
    fn atom_ideal_canonicalizes() {
        assert_eq!(ai(&[t(0, 3), t(0, 5)]), ai(&[t(0, 5)]));
        assert_eq!(ai(&[t(0, 3), t(0, 5)]).to_string(), "(ai (at tag 0 5))");
        assert_eq!(ai(&[t(1, 0), t(0, 0)]).to_string(), "(ai (at tag 0 0) (at tag 1 0))");
        let q = ai(&[Atom::qdup(1, 2, 0), Atom::qdup(1, 2, 1)]);
        assert_eq!(q.to_string(), "(ai (at qdup 1/2 0))");
        assert_eq!(Magma::atom_ideal(Vec::<Atom>::new()), Err(MagmaError::EmptyGenerators));
        assert!(matches!(Magma::atom_ideal([t(0, 0), Atom::plane(0, 0)]), Err(MagmaError::DomainMismatch(..))));
    }

    #[test]
    fn pr_examples() {
        let a = pr_atom(&t(0, 0));
        assert_eq!(a.to_string(), "(ai (at tag 0 0))");
        assert_eq!(pr(&a).to_string(), "(mi (ai (at tag 0 0)))");
        assert_eq!(pr_iter_atom(3, &t(0, 0)), pr(&pr(&a)));
    }

    #[test]
    fn subset_examples() {
        assert!(subset(&pr_atom(&t(0, 3)), &pr_atom(&t(0, 5))));
        assert!(!subset(&pr_atom(&t(0, 5)), &pr_atom(&t(0, 3))));
        let a = pr_atom(&t(0, 0));
        assert!(!subset(&pr(&a), &a));
        assert!(!subset(&a, &pr(&a)));
    }

    #[test]
    fn member_examples() {
        let x = pr_atom(&t(0, 0));
        assert!(member(&Element::Atom(t(0, -5)), &x));
        assert!(!member(&Element::Atom(t(0, 1)), &x));
        assert!(!member(&Element::Atom(t(1, -1)), &x));
        assert!(member(&Element::Magma(x.clone()), &pr(&x)));
        assert!(!member(&Element::Magma(x.clone()), &x));
    }

    #[test]
    fn union_examples() {
        let a = pr_atom(&t(0, 0));
        let b = pr_atom(&t(1, 0));
        assert_eq!(union(&a, &b).unwrap().to_string(), "(ai (at tag 0 0) (at tag 1 0))");
        assert_eq!(union(&a, &pr(&a)), Err(MagmaError::KindMismatch));
        assert_eq!(union(&a, &a).unwrap(), a);
    }

    #[test]
    fn intersect_examples() {
        let a0 = t(0, 0);
        let a1 = t(1, 0);
        for n in 1..=4 {
            assert!(intersect(&pr_iter_atom(n, &a0), &pr_iter_atom(n, &a1)).is_none(), "n={n}");
        }
        let p = intersect(&pr_atom(&Atom::plane(0, 3)), &pr_atom(&Atom::plane(2, 1))).unwrap();
        assert_eq!(p, pr_atom(&Atom::plane(0, 1)));
        let x = ai(&[t(0, 2), t(1, 7)]);
        let y = ai(&[t(0, 5), t(1, 3), t(2, 0)]);
        assert_eq!(intersect(&x, &y).unwrap(), ai(&[t(0, 2), t(1, 3)]));
        assert!(intersect(&x, &pr(&x)).is_none());
    }

    #[test]
    fn level_examples() {
        let a = t(0, 0);
        assert_eq!(level(&pr_atom(&a)), Ordinal::finite(1));
        for n in 0..6 {
            assert_eq!(level(&pr_iter_atom(n + 2, &a)), Ordinal::finite(n as u64 + 2));
        }
        // generators of levels 1 and 2
        let mixed = Magma::magma_ideal([pr_atom(&a), pr_iter_atom(2, &t(1, 0))]).unwrap();
        assert_eq!(level(&mixed), Ordinal::new(1, 1));
        assert_eq!(level(&pr(&mixed)), Ordinal::new(1, 2));
        let deeper = Magma::magma_ideal([mixed.clone(), pr_atom(&a)]).unwrap();
        assert_eq!(level(&deeper), Ordinal::new(2, 1));
    }

    #[test]
    fn magma_ideal_drops_dominated_generators() {
        let small = pr_atom(&t(0, 1));
        let big = pr_atom(&t(0, 4));
        let m = Magma::magma_ideal([small, big.clone()]).unwrap();
        assert_eq!(m, pr(&big));
        assert_eq!(m.generator_count(), 1);
    }
}
