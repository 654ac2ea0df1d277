//! Atom domains: decidable preorders without minimal elements.
//!
//! Three domains are built in. `TaggedInt` is a disjoint family of integer
//! chains, one per tag, so atoms under different tags share no lower bound.
//! `Plane` is the integer lattice under the componentwise order, where every
//! two atoms have a meet. `QDup` doubles the rationals: the copy bit is
//! ignored by the order, which gives equivalence classes of size two.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Rational64;
use rand::Rng;

use crate::error::{MagmaError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainKind {
    TaggedInt,
    Plane,
    QDup,
}

impl DomainKind {
    pub const ALL: [DomainKind; 3] = [DomainKind::TaggedInt, DomainKind::Plane, DomainKind::QDup];

    pub fn name(self) -> &'static str {
        match self {
            DomainKind::TaggedInt => "tag",
            DomainKind::Plane => "plane",
            DomainKind::QDup => "qdup",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "tag" | "tagged" | "taggedint" => Some(DomainKind::TaggedInt),
            "plane" => Some(DomainKind::Plane),
            "qdup" => Some(DomainKind::QDup),
            _ => None,
        }
    }

    pub fn domain(self) -> &'static dyn AtomDomain {
        match self {
            DomainKind::TaggedInt => &TaggedInt,
            DomainKind::Plane => &Plane,
            DomainKind::QDup => &QDup,
        }
    }
}

impl fmt::Display for DomainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An atom together with its domain. The derived order (domain first, then
/// payload lexicographically) is the canonical atom order used for sorting
/// generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Tag { tag: i64, value: i64 },
    Plane { x: i64, y: i64 },
    QDup { q: Rational64, copy: u8 },
}

impl Atom {
    pub fn tag(tag: i64, value: i64) -> Self {
        Atom::Tag { tag, value }
    }

    pub fn plane(x: i64, y: i64) -> Self {
        Atom::Plane { x, y }
    }

    pub fn qdup(numer: i64, denom: i64, copy: u8) -> Self {
        Atom::QDup { q: Rational64::new(numer, denom), copy: copy & 1 }
    }

    pub fn kind(&self) -> DomainKind {
        match self {
            Atom::Tag { .. } => DomainKind::TaggedInt,
            Atom::Plane { .. } => DomainKind::Plane,
            Atom::QDup { .. } => DomainKind::QDup,
        }
    }

    pub fn domain(&self) -> &'static dyn AtomDomain {
        self.kind().domain()
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Tag { tag, value } => write!(f, "(at tag {tag} {value})"),
            Atom::Plane { x, y } => write!(f, "(at plane {x} {y})"),
            Atom::QDup { q, copy } => write!(f, "(at qdup {}/{} {copy})", q.numer(), q.denom()),
        }
    }
}

/// The contract every atom domain satisfies. Methods may assume their
/// arguments belong to the domain; the free functions in this module check
/// that and report [`MagmaError::DomainMismatch`].
pub trait AtomDomain: Sync {
    fn kind(&self) -> DomainKind;

    fn name(&self) -> &'static str {
        self.kind().name()
    }

    fn leq(&self, a: &Atom, b: &Atom) -> bool;

    /// Some `b` with `b ≼ a` and not `a ≼ b`.
    fn strictly_below(&self, a: &Atom) -> Atom;

    /// Distinguished incomparable atoms, when the domain has any.
    fn seeds(&self) -> Option<(Atom, Atom)>;

    /// A finite set `L` such that `c` is below both `a` and `b` exactly when
    /// `c` is below some element of `L`.
    fn common_lower_bounds(&self, a: &Atom, b: &Atom) -> Vec<Atom>;

    fn canonical_rep(&self, a: &Atom) -> Atom;

    /// Two incomparable atoms strictly below `a`, if the domain has them.
    fn incomparable_below(&self, a: &Atom) -> Option<(Atom, Atom)>;

    /// A random atom with a small payload.
    fn random_atom(&self, rng: &mut dyn rand::RngCore) -> Atom;

    /// A random atom strictly below `a`.
    fn random_below(&self, a: &Atom, rng: &mut dyn rand::RngCore) -> Atom;
}

pub struct TaggedInt;
pub struct Plane;
pub struct QDup;

impl AtomDomain for TaggedInt {
    fn kind(&self) -> DomainKind {
        DomainKind::TaggedInt
    }

    fn leq(&self, a: &Atom, b: &Atom) -> bool {
        match (a, b) {
            (Atom::Tag { tag: t1, value: v1 }, Atom::Tag { tag: t2, value: v2 }) => t1 == t2 && v1 <= v2,
            _ => false,
        }
    }

    fn strictly_below(&self, a: &Atom) -> Atom {
        match *a {
            Atom::Tag { tag, value } => Atom::tag(tag, value - 1),
            _ => unreachable!("foreign atom in TaggedInt"),
        }
    }

    fn seeds(&self) -> Option<(Atom, Atom)> {
        Some((Atom::tag(0, 0), Atom::tag(1, 0)))
    }

    fn common_lower_bounds(&self, a: &Atom, b: &Atom) -> Vec<Atom> {
        match (*a, *b) {
            (Atom::Tag { tag: t1, value: v1 }, Atom::Tag { tag: t2, value: v2 }) if t1 == t2 => {
                vec![Atom::tag(t1, v1.min(v2))]
            }
            _ => Vec::new(),
        }
    }

    fn canonical_rep(&self, a: &Atom) -> Atom {
        *a
    }

    fn incomparable_below(&self, _a: &Atom) -> Option<(Atom, Atom)> {
        None
    }

    fn random_atom(&self, rng: &mut dyn rand::RngCore) -> Atom {
        Atom::tag(rng.gen_range(0..=2), rng.gen_range(-3..=3))
    }

    fn random_below(&self, a: &Atom, rng: &mut dyn rand::RngCore) -> Atom {
        match *a {
            Atom::Tag { tag, value } => Atom::tag(tag, value - rng.gen_range(1..=3)),
            _ => unreachable!("foreign atom in TaggedInt"),
        }
    }
}

impl AtomDomain for Plane {
    fn kind(&self) -> DomainKind {
        DomainKind::Plane
    }

    fn leq(&self, a: &Atom, b: &Atom) -> bool {
        match (a, b) {
            (Atom::Plane { x: x1, y: y1 }, Atom::Plane { x: x2, y: y2 }) => x1 <= x2 && y1 <= y2,
            _ => false,
        }
    }

    fn strictly_below(&self, a: &Atom) -> Atom {
        match *a {
            Atom::Plane { x, y } => Atom::plane(x - 1, y - 1),
            _ => unreachable!("foreign atom in Plane"),
        }
    }

    fn seeds(&self) -> Option<(Atom, Atom)> {
        Some((Atom::plane(0, 1), Atom::plane(1, 0)))
    }

    fn common_lower_bounds(&self, a: &Atom, b: &Atom) -> Vec<Atom> {
        match (*a, *b) {
            (Atom::Plane { x: x1, y: y1 }, Atom::Plane { x: x2, y: y2 }) => {
                vec![Atom::plane(x1.min(x2), y1.min(y2))]
            }
            _ => Vec::new(),
        }
    }

    fn canonical_rep(&self, a: &Atom) -> Atom {
        *a
    }

    fn incomparable_below(&self, a: &Atom) -> Option<(Atom, Atom)> {
        match *a {
            Atom::Plane { x, y } => Some((Atom::plane(x - 1, y), Atom::plane(x, y - 1))),
            _ => None,
        }
    }

    fn random_atom(&self, rng: &mut dyn rand::RngCore) -> Atom {
        Atom::plane(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
    }

    fn random_below(&self, a: &Atom, rng: &mut dyn rand::RngCore) -> Atom {
        match *a {
            Atom::Plane { x, y } => {
                let dx = rng.gen_range(1..=2);
                let dy = rng.gen_range(1..=2);
                match rng.gen_range(0..3) {
                    0 => Atom::plane(x - dx, y),
                    1 => Atom::plane(x, y - dy),
                    _ => Atom::plane(x - dx, y - dy),
                }
            }
            _ => unreachable!("foreign atom in Plane"),
        }
    }
}

impl AtomDomain for QDup {
    fn kind(&self) -> DomainKind {
        DomainKind::QDup
    }

    fn leq(&self, a: &Atom, b: &Atom) -> bool {
        match (a, b) {
            (Atom::QDup { q: q1, .. }, Atom::QDup { q: q2, .. }) => q1 <= q2,
            _ => false,
        }
    }

    fn strictly_below(&self, a: &Atom) -> Atom {
        match *a {
            Atom::QDup { q, copy } => {
                let below = if q.is_integer() { q - 1 } else { q.floor() };
                Atom::QDup { q: below, copy }
            }
            _ => unreachable!("foreign atom in QDup"),
        }
    }

    // The order is total up to equivalence.
    fn seeds(&self) -> Option<(Atom, Atom)> {
        None
    }

    fn common_lower_bounds(&self, a: &Atom, b: &Atom) -> Vec<Atom> {
        match (*a, *b) {
            (Atom::QDup { q: q1, .. }, Atom::QDup { q: q2, .. }) => {
                vec![Atom::QDup { q: q1.min(q2), copy: 0 }]
            }
            _ => Vec::new(),
        }
    }

    fn canonical_rep(&self, a: &Atom) -> Atom {
        match *a {
            Atom::QDup { q, .. } => Atom::QDup { q, copy: 0 },
            _ => unreachable!("foreign atom in QDup"),
        }
    }

    fn incomparable_below(&self, _a: &Atom) -> Option<(Atom, Atom)> {
        None
    }

    fn random_atom(&self, rng: &mut dyn rand::RngCore) -> Atom {
        Atom::qdup(rng.gen_range(-8..=8), rng.gen_range(1..=4), rng.gen_range(0..=1))
    }

    fn random_below(&self, a: &Atom, rng: &mut dyn rand::RngCore) -> Atom {
        match *a {
            Atom::QDup { q, copy } => {
                let step = Rational64::new(rng.gen_range(1..=4), rng.gen_range(1..=4));
                Atom::QDup { q: q - step, copy }
            }
            _ => unreachable!("foreign atom in QDup"),
        }
    }
}

fn same_domain(a: &Atom, b: &Atom) -> Result<&'static dyn AtomDomain> {
    if a.kind() == b.kind() {
        Ok(a.domain())
    } else {
        Err(MagmaError::DomainMismatch(a.kind(), b.kind()))
    }
}

pub fn leq(a: &Atom, b: &Atom) -> Result<bool> {
    Ok(same_domain(a, b)?.leq(a, b))
}

/// `a ∼ b`: each is below the other.
pub fn equivalent(a: &Atom, b: &Atom) -> Result<bool> {
    let d = same_domain(a, b)?;
    Ok(d.leq(a, b) && d.leq(b, a))
}

pub fn strictly_below(a: &Atom) -> Atom {
    a.domain().strictly_below(a)
}

pub fn common_lower_bounds(a: &Atom, b: &Atom) -> Result<Vec<Atom>> {
    let d = same_domain(a, b)?;
    let mut out: Vec<Atom> = d.common_lower_bounds(a, b).iter().map(|c| d.canonical_rep(c)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn canonical_rep(a: &Atom) -> Atom {
    a.domain().canonical_rep(a)
}

/// Compare two atoms of one domain under the preorder; `None` when
/// incomparable.
pub fn compare(a: &Atom, b: &Atom) -> Result<Option<Ordering>> {
    let d = same_domain(a, b)?;
    Ok(match (d.leq(a, b), d.leq(b, a)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    })
}
