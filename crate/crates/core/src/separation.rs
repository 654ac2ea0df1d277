//! Down-closed classes, separation against them, a refutation sampler for
//! down-closure of arbitrary predicates, and constructive Replacement
//! failures.

use std::fmt;

use crate::domain::{self, Atom};
use crate::error::{MagmaError, Result};
use crate::gen::MagmaGen;
use crate::kernel::{self, equal, intersect, pr, pr_atom, proper_subset, subset, union, Element, Generators, Magma};
use crate::pair::Seeds;

/// The class of all submagmas of some root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDescriptor {
    roots: Vec<Magma>,
}

impl ClassDescriptor {
    pub fn new(roots: Vec<Magma>) -> Result<ClassDescriptor> {
        if roots.is_empty() {
            return Err(MagmaError::EmptyGenerators);
        }
        Ok(ClassDescriptor { roots })
    }

    pub fn roots(&self) -> &[Magma] {
        &self.roots
    }

    pub fn contains(&self, x: &Magma) -> bool {
        self.roots.iter().any(|r| subset(x, r))
    }

    /// The completion written as one magma: `x` is in the class iff
    /// `x ∈ ∪ pr(r)`.
    pub fn as_magma(&self) -> Magma {
        Magma::magma_ideal(self.roots.iter().cloned()).expect("nonempty roots")
    }

    /// `X ∩ u`, or `None` when it is empty. Atom-ideals meet no class of
    /// magmas.
    pub fn separate(&self, u: &Magma) -> Option<Magma> {
        let gens = u.magmas()?;
        let pieces: Vec<Magma> =
            self.roots.iter().flat_map(|r| gens.iter().filter_map(move |g| intersect(r, g))).collect();
        if pieces.is_empty() {
            None
        } else {
            Some(Magma::magma_ideal(pieces).expect("nonempty"))
        }
    }
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(class (roots")?;
        for r in &self.roots {
            write!(f, " {r}")?;
        }
        write!(f, "))")
    }
}

/// Predicates the down-closure sampler understands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    InClass(ClassDescriptor),
    EqualTo(Magma),
    IsPair(Seeds),
}

impl Predicate {
    pub fn holds(&self, x: &Magma) -> bool {
        match self {
            Predicate::InClass(c) => c.contains(x),
            Predicate::EqualTo(y0) => equal(x, y0),
            Predicate::IsPair(s) => s.is_pair(x),
        }
    }

    fn domain(&self) -> domain::DomainKind {
        match self {
            Predicate::InClass(c) => c.roots[0].domain(),
            Predicate::EqualTo(y0) => y0.domain(),
            Predicate::IsPair(s) => s.domain(),
        }
    }

    /// A magma satisfying the predicate.
    fn probe(&self, g: &mut MagmaGen) -> Magma {
        match self {
            Predicate::InClass(c) => {
                let r = c.roots[g.rng_index(c.roots.len())].clone();
                g.submagma(&r)
            }
            Predicate::EqualTo(y0) => y0.clone(),
            Predicate::IsPair(s) => {
                let x = g.magma(2, 2);
                let y = g.magma(2, 2);
                s.pair(&x, &y).expect("same domain").whole
            }
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::InClass(c) => write!(f, "(in-class {c})"),
            Predicate::EqualTo(y) => write!(f, "(equal-to {y})"),
            Predicate::IsPair(_) => write!(f, "pair?"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `x` satisfies the predicate and its submagma `y` does not.
    Refuted { x: Magma, y: Magma },
    /// No counterexample within the budget; never a proof of closure.
    Unrefuted { budget: usize },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Refuted { x, y } => write!(f, "(refuted {x} {y})"),
            Verdict::Unrefuted { budget } => write!(f, "(unrefuted {budget})"),
        }
    }
}

/// Search for `x` with `P(x)` and a submagma `y ⊆ x` with `¬P(y)`.
pub fn magmatic_condition_sampler(p: &Predicate, budget: usize, seed: u64) -> Verdict {
    let mut g = MagmaGen::new(p.domain(), seed);
    for _ in 0..budget {
        let x = p.probe(&mut g);
        if !p.holds(&x) {
            continue;
        }
        let y = g.strict_submagma(&x);
        if !p.holds(&y) {
            return Verdict::Refuted { x, y };
        }
    }
    Verdict::Unrefuted { budget }
}

/// One checked claim of a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub claim: String,
    pub holds: bool,
}

impl Fact {
    pub fn new(claim: impl Into<String>, holds: bool) -> Fact {
        Fact { claim: claim.into(), holds }
    }
}

/// Named objects plus facts re-derived through the kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub name: &'static str,
    pub bindings: Vec<(&'static str, Element)>,
    pub facts: Vec<Fact>,
}

impl Witness {
    pub fn verified(&self) -> bool {
        self.facts.iter().all(|f| f.holds)
    }

    pub fn get(&self, key: &str) -> Option<&Element> {
        self.bindings.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn magma(&self, key: &str) -> Option<&Magma> {
        match self.get(key)? {
            Element::Magma(m) => Some(m),
            Element::Atom(_) => None,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "witness {}", self.name)?;
        for (k, v) in &self.bindings {
            writeln!(f, "  {k} = {v}")?;
        }
        for fact in &self.facts {
            writeln!(f, "  [{}] {}", if fact.holds { "ok" } else { "FAILED" }, fact.claim)?;
        }
        write!(f, "  verified {}", self.verified())
    }
}

/// Two incomparable strict submagmas of `x`, if the domain supplies them.
fn incomparable_submagmas(x: &Magma) -> Option<(Magma, Magma)> {
    match x.generators() {
        Generators::Atoms(atoms) if atoms.len() >= 2 => Some((pr_atom(&atoms[0]), pr_atom(&atoms[1]))),
        Generators::Magmas(gens) if gens.len() >= 2 => Some((pr(&gens[0]), pr(&gens[1]))),
        Generators::Atoms(atoms) => {
            let (b, c) = x.domain().domain().incomparable_below(&atoms[0])?;
            Some((pr_atom(&b), pr_atom(&c)))
        }
        Generators::Magmas(gens) => {
            let (h1, h2) = incomparable_submagmas(&gens[0])?;
            Some((pr(&h1), pr(&h2)))
        }
    }
}

/// The image of `u` under `pr` is not a magma: some `z ⊆ pr(x)` with
/// `x ∈ u` has two maximal generators and so is no `pr(y)`.
pub fn replacement_pr_witness(u: &Magma) -> Result<Witness> {
    let none = || MagmaError::NoIncomparableSubmagmas(u.to_string());
    let (x, x1, x2) = match u.generators() {
        Generators::Atoms(atoms) => {
            let dom = u.domain().domain();
            atoms
                .iter()
                .find_map(|a| {
                    dom.incomparable_below(a).map(|(b, c)| (Element::Atom(*a), Element::Atom(b), Element::Atom(c)))
                })
                .ok_or_else(none)?
        }
        Generators::Magmas(gens) => gens
            .iter()
            .find_map(|g| {
                incomparable_submagmas(g)
                    .map(|(h1, h2)| (Element::Magma(g.clone()), Element::Magma(h1), Element::Magma(h2)))
            })
            .ok_or_else(none)?,
    };
    let (p, p1, p2) = (kernel::pr_element(&x), kernel::pr_element(&x1), kernel::pr_element(&x2));
    let z = union(&p1, &p2).expect("same kind");
    let facts = vec![
        Fact::new("x is an element of u", kernel::member(&x, u)),
        Fact::new("pr(x1) is strictly inside pr(x)", proper_subset(&p1, &p)),
        Fact::new("pr(x2) is strictly inside pr(x)", proper_subset(&p2, &p)),
        Fact::new("x1 and x2 are incomparable", !subset(&p1, &p2) && !subset(&p2, &p1)),
        Fact::new("z is a submagma of pr(x)", subset(&z, &p)),
        Fact::new("z has two maximal generators, so z is no pr(y)", z.generator_count() == 2),
    ];
    Ok(Witness {
        name: "replacement-pr",
        bindings: vec![("u", Element::Magma(u.clone())), ("x", x), ("x1", x1), ("x2", x2), ("z", Element::Magma(z))],
        facts,
    })
}

/// The image of any `u` under the constant map `x ↦ y₀` is `{y₀}`, which
/// misses the strict submagmas of `y₀`.
pub fn replacement_const_witness(u: &Magma, y0: &Magma) -> Witness {
    let below = strict_below(y0);
    let facts = vec![
        Fact::new("y0' is a strict submagma of y0", proper_subset(&below, y0)),
        Fact::new("y0' is not in the image {y0}", !equal(&below, y0)),
    ];
    Witness {
        name: "replacement-const",
        bindings: vec![
            ("u", Element::Magma(u.clone())),
            ("y0", Element::Magma(y0.clone())),
            ("y0'", Element::Magma(below)),
        ],
        facts,
    }
}

/// A fixed strict submagma: every atom moves strictly down, recursively.
pub fn strict_below(x: &Magma) -> Magma {
    match x.generators() {
        Generators::Atoms(atoms) => Magma::atom_ideal(atoms.iter().map(domain::strictly_below)).expect("nonempty"),
        Generators::Magmas(gens) => Magma::magma_ideal(gens.iter().map(strict_below)).expect("nonempty"),
    }
}

/// Completing `y = pr(x)` downward relates `x` to a strict submagma of
/// `pr(x)` as well, so the completion is not single-valued.
pub fn completion_not_functional_demo(seeds: &Seeds) -> Witness {
    let a0: Atom = seeds.a0();
    let x = pr_atom(&a0);
    let y = pr(&x);
    let y1 = pr(&pr_atom(&domain::strictly_below(&a0)));
    let big = seeds.pair(&x, &y).expect("seed domain").whole;
    let small = seeds.pair(&x, &y1).expect("seed domain").whole;
    let facts = vec![
        Fact::new("pr(x) = y", equal(&pr(&x), &y)),
        Fact::new("y1 is a strict submagma of y", proper_subset(&y1, &y)),
        Fact::new("<<x,y1>> is inside <<x,y>>", subset(&small, &big)),
        Fact::new("<<x,y1>> differs from <<x,y>>", !equal(&small, &big)),
        Fact::new("y and y1 are distinct images of x", !equal(&y, &y1)),
    ];
    Witness {
        name: "completion-not-functional",
        bindings: vec![("x", Element::Magma(x)), ("y", Element::Magma(y)), ("y1", Element::Magma(y1))],
        facts,
    }
}
