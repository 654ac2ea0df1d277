//! Magmatic naturals, their order and disjointness, and countably generated
//! functions over the pairwise disjoint naturals.

use std::fmt;

use crate::domain::Atom;
use crate::error::{MagmaError, Result};
use crate::kernel::{self, equal, intersect, pr, subset, union, Magma};
use crate::ordinal::Ordinal;
use crate::pair::Seeds;
use crate::relation::Relation;

pub const DEFAULT_DEPTH_CAP: u64 = 8;

/// `Primary`: `0 = pr²(a₀)`, `n+1 = n ∪ pr(n)`.
/// `Alt`: `n = pr^{n+2}(a₀)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Primary,
    Alt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagNat {
    pub n: u64,
    pub variant: Variant,
    pub value: Magma,
}

impl fmt::Display for MagNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            Variant::Primary => write!(f, "(nat {})", self.n),
            Variant::Alt => write!(f, "(nat* {})", self.n),
        }
    }
}

/// Builds naturals over a fixed base atom.
#[derive(Debug, Clone)]
pub struct Tower {
    a0: Atom,
    cap: u64,
}

impl Tower {
    pub fn new(a0: Atom) -> Tower {
        Tower::with_cap(a0, DEFAULT_DEPTH_CAP)
    }

    pub fn with_cap(a0: Atom, cap: u64) -> Tower {
        Tower { a0, cap }
    }

    pub fn a0(&self) -> Atom {
        self.a0
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn nat(&self, n: u64, variant: Variant) -> Result<MagNat> {
        if n > self.cap {
            return Err(MagmaError::DepthCap(n, self.cap));
        }
        let value = match variant {
            Variant::Alt => alt_value(&self.a0, n),
            Variant::Primary => {
                let mut v = kernel::pr_iter_atom(2, &self.a0);
                for _ in 0..n {
                    v = successor(&v);
                }
                v
            }
        };
        Ok(MagNat { n, variant, value })
    }

    /// Strict order as strict inclusion; Primary naturals only.
    pub fn ord_less(&self, a: &MagNat, b: &MagNat) -> Result<bool> {
        if a.variant != Variant::Primary || b.variant != Variant::Primary {
            return Err(MagmaError::VariantMismatch);
        }
        Ok(subset(&a.value, &b.value) && !equal(&a.value, &b.value))
    }

    /// Whether the Alt naturals `m` and `n` have empty intersection.
    pub fn alt_disjoint(&self, m: u64, n: u64) -> Result<bool> {
        let x = self.nat(m, Variant::Alt)?;
        let y = self.nat(n, Variant::Alt)?;
        Ok(intersect(&x.value, &y.value).is_none())
    }

    /// Ordinal sum, cross-checked for finite operands against the successor
    /// recursion `a + (b+1) = (a+b) ∪ pr(a+b)` unfolded from `a`.
    pub fn ord_add(&self, a: Ordinal, b: Ordinal) -> Result<OrdSum> {
        let sum = a.checked_add(b)?;
        let concrete = if a.is_finite() && b.is_finite() && sum.r <= self.cap {
            let mut v = self.nat(a.r, Variant::Primary)?.value;
            for _ in 0..b.r {
                v = successor(&v);
            }
            let direct = self.nat(sum.r, Variant::Primary)?.value;
            Some(equal(&v, &direct))
        } else {
            None
        };
        Ok(OrdSum { sum, concrete })
    }
}

/// Result of `ord_add`; `concrete` is the magma cross-check when one applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrdSum {
    pub sum: Ordinal,
    pub concrete: Option<bool>,
}

fn successor(v: &Magma) -> Magma {
    union(v, &pr(v)).expect("naturals are magma-ideals")
}

fn alt_value(a0: &Atom, n: u64) -> Magma {
    kernel::pr_iter_atom(n as usize + 2, a0)
}

/// Tail of a countably generated sequence after its explicit prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TailRule {
    /// `y_n = m`.
    Constant(Magma),
    /// `y_{p+j} = pr^j(base)` for a prefix of length `p`.
    PrTower(Magma),
    /// `y_n = nat*(n + k)`.
    Shift(u64),
}

/// `F = ∪ pr(⟨⟨n*, y_n⟩⟩)` over `n ≥ 1`, with `y_1..y_p` given explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountGenFun {
    seeds: Seeds,
    prefix: Vec<Magma>,
    tail: TailRule,
}

impl CountGenFun {
    pub fn new(seeds: &Seeds, prefix: Vec<Magma>, tail: TailRule) -> Result<CountGenFun> {
        let domain = seeds.domain();
        let tail_magma = match &tail {
            TailRule::Constant(m) | TailRule::PrTower(m) => Some(m),
            TailRule::Shift(_) => None,
        };
        for m in prefix.iter().chain(tail_magma) {
            if m.domain() != domain {
                return Err(MagmaError::DomainMismatch(domain, m.domain()));
            }
        }
        Ok(CountGenFun { seeds: seeds.clone(), prefix, tail })
    }

    pub fn seeds(&self) -> &Seeds {
        &self.seeds
    }

    /// `y_n` for `n ≥ 1`.
    pub fn image(&self, n: u64) -> Result<Magma> {
        if n == 0 {
            return Err(MagmaError::OutOfRange("countably generated sequences start at 1".into()));
        }
        let p = self.prefix.len() as u64;
        if n <= p {
            return Ok(self.prefix[n as usize - 1].clone());
        }
        Ok(match &self.tail {
            TailRule::Constant(m) => m.clone(),
            TailRule::PrTower(base) => kernel::pr_iter((n - p) as usize, base),
            TailRule::Shift(k) => alt_value(&self.seeds.a0(), n + k),
        })
    }

    /// Level dispatch: `z` can only lie below `n*` for `n = level(z) - 2`.
    pub fn apply(&self, z: &Magma) -> Result<Magma> {
        let level = z.level();
        let not_in_domain = || MagmaError::NotInDomain(z.to_string());
        if !level.is_finite() || level.r < 3 {
            return Err(not_in_domain());
        }
        let n = level.r - 2;
        if subset(z, &alt_value(&self.seeds.a0(), n)) {
            self.image(n)
        } else {
            Err(not_in_domain())
        }
    }

    /// The relation generated by the first `k` pairs.
    pub fn truncation(&self, k: u64) -> Result<Relation> {
        let pairs =
            (1..=k).map(|n| Ok((alt_value(&self.seeds.a0(), n), self.image(n)?))).collect::<Result<Vec<_>>>()?;
        Relation::new(&self.seeds, pairs)
    }
}

impl fmt::Display for CountGenFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(cg (prefix")?;
        for m in &self.prefix {
            write!(f, " {m}")?;
        }
        match &self.tail {
            TailRule::Constant(m) => write!(f, ") (const {m}))"),
            TailRule::PrTower(m) => write!(f, ") (pr-tower {m}))"),
            TailRule::Shift(k) => write!(f, ") (shift {k}))"),
        }
    }
}
