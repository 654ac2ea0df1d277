//! Seeded random magmas and submagmas for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domain::{Atom, DomainKind};
use crate::kernel::{self, Generators, Magma};

/// A deterministic source of random magmas over one domain.
pub struct MagmaGen {
    domain: DomainKind,
    rng: ChaCha8Rng,
}

impl MagmaGen {
    pub fn new(domain: DomainKind, seed: u64) -> Self {
        MagmaGen { domain, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn rng_index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    pub fn atom(&mut self) -> Atom {
        self.domain.domain().random_atom(&mut self.rng)
    }

    /// A magma whose generator tree is at most `depth` deep with at most
    /// `width` generators per node. Depth 1 always yields an atom-ideal.
    pub fn magma(&mut self, depth: usize, width: usize) -> Magma {
        assert!(depth >= 1 && width >= 1, "depth and width must be positive");
        if depth == 1 || self.rng.gen_bool(0.25) {
            let n = self.rng.gen_range(1..=width);
            let atoms: Vec<Atom> = (0..n).map(|_| self.atom()).collect();
            return Magma::atom_ideal(atoms).expect("nonempty, one domain");
        }
        let n = self.rng.gen_range(1..=width);
        let gens: Vec<Magma> = (0..n)
            .map(|_| {
                let d = self.rng.gen_range(1..depth);
                self.magma(d, width)
            })
            .collect();
        Magma::magma_ideal(gens).expect("nonempty, one domain")
    }

    /// A magma-ideal (never an atom-ideal) of depth at most `depth >= 2`.
    pub fn magma_ideal(&mut self, depth: usize, width: usize) -> Magma {
        assert!(depth >= 2);
        loop {
            let m = self.magma(depth, width);
            if m.magmas().is_some() {
                return m;
            }
        }
    }

    /// A submagma of `x`, possibly `x` itself.
    pub fn submagma(&mut self, x: &Magma) -> Magma {
        if self.rng.gen_bool(0.2) {
            x.clone()
        } else {
            self.strict_submagma(x)
        }
    }

    /// A proper submagma of `x`. One generator is shrunk strictly or dropped;
    /// the others are kept or shrunk.
    pub fn strict_submagma(&mut self, x: &Magma) -> Magma {
        let domain = self.domain_of(x);
        match x.generators() {
            Generators::Atoms(atoms) => {
                let pick = self.rng.gen_range(0..atoms.len());
                let mut out = Vec::with_capacity(atoms.len() + 1);
                for (i, a) in atoms.iter().enumerate() {
                    if i == pick {
                        if atoms.len() > 1 && self.rng.gen_bool(0.3) {
                            continue;
                        }
                        match domain.incomparable_below(a) {
                            Some((b, c)) if self.rng.gen_bool(0.3) => {
                                out.push(b);
                                out.push(c);
                            }
                            _ => out.push(domain.random_below(a, &mut self.rng)),
                        }
                    } else if self.rng.gen_bool(0.3) {
                        out.push(domain.random_below(a, &mut self.rng));
                    } else {
                        out.push(*a);
                    }
                }
                Magma::atom_ideal(out).expect("nonempty")
            }
            Generators::Magmas(gens) => {
                let pick = self.rng.gen_range(0..gens.len());
                let mut out = Vec::with_capacity(gens.len());
                for (i, g) in gens.iter().enumerate() {
                    if i == pick {
                        if gens.len() > 1 && self.rng.gen_bool(0.3) {
                            continue;
                        }
                        out.push(self.strict_submagma(g));
                    } else if self.rng.gen_bool(0.3) {
                        out.push(self.submagma(g));
                    } else {
                        out.push(g.clone());
                    }
                }
                Magma::magma_ideal(out).expect("nonempty")
            }
        }
    }

    /// A random element of `x`: an atom below a generator of an atom-ideal,
    /// or a submagma of a generator of a magma-ideal.
    pub fn element_of(&mut self, x: &Magma) -> kernel::Element {
        match x.generators() {
            Generators::Atoms(atoms) => {
                let a = *atoms.choose(&mut self.rng).expect("nonempty");
                if self.rng.gen_bool(0.3) {
                    kernel::Element::Atom(a)
                } else {
                    kernel::Element::Atom(self.domain_of(x).random_below(&a, &mut self.rng))
                }
            }
            Generators::Magmas(gens) => {
                let g = gens.choose(&mut self.rng).expect("nonempty").clone();
                kernel::Element::Magma(self.submagma(&g))
            }
        }
    }

    /// A magma over atoms of a tag nobody else uses, so it is incomparable
    /// with (and disjoint from) anything built by [`MagmaGen::magma`].
    /// Only meaningful for the tagged domain.
    pub fn fresh_tag_magma(&mut self, tag: i64, depth: usize) -> Magma {
        let base = Atom::tag(tag, self.rng.gen_range(-3..=3));
        let mut m = kernel::pr_atom(&base);
        for _ in 1..depth {
            m = kernel::pr(&m);
        }
        m
    }

    fn domain_of(&self, x: &Magma) -> &'static dyn crate::domain::AtomDomain {
        x.domain().domain()
    }
}

/// Convenience wrapper: one random magma from a seed.
pub fn random_magma(domain: DomainKind, depth: usize, width: usize, seed: u64) -> Magma {
    MagmaGen::new(domain, seed).magma(depth, width)
}

/// Convenience wrapper: one random submagma of `x` from a seed.
pub fn random_submagma(x: &Magma, seed: u64) -> Magma {
    MagmaGen::new(x.domain(), seed).submagma(x)
}
