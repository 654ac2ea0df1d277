//! Relations as unions of pair down-sets, with their intended presentation.

use std::fmt;

use crate::error::{MagmaError, Result};
use crate::kernel::{self, equal, intersect, member_magma, subset, Kind, Magma};
use crate::pair::Seeds;

/// Largest intended presentation `is_function` will enumerate.
pub const DEFAULT_FUNCTION_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    seeds: Seeds,
    intended: Vec<(Magma, Magma)>,
    pair_wholes: Vec<Magma>,
    whole: Magma,
}

/// Role of a magma relative to a relation's presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Intended,
    CollateralPair,
    CollateralNonPair,
    NotElement,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::Intended => "intended",
            Classification::CollateralPair => "collateral-pair",
            Classification::CollateralNonPair => "collateral-non-pair",
            Classification::NotElement => "not-element",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Relation {
    /// `∪ pr(⟨⟨zᵢ,wᵢ⟩⟩)`; duplicates stay in the presentation.
    pub fn new(seeds: &Seeds, pairs: Vec<(Magma, Magma)>) -> Result<Relation> {
        if pairs.is_empty() {
            return Err(MagmaError::EmptyPresentation);
        }
        let pair_wholes = pairs.iter().map(|(z, w)| seeds.pair(z, w).map(|p| p.whole)).collect::<Result<Vec<_>>>()?;
        let whole = Magma::magma_ideal(pair_wholes.iter().cloned())?;
        Ok(Relation { seeds: seeds.clone(), intended: pairs, pair_wholes, whole })
    }

    pub fn seeds(&self) -> &Seeds {
        &self.seeds
    }

    pub fn intended(&self) -> &[(Magma, Magma)] {
        &self.intended
    }

    pub fn intended_pairs(&self) -> &[Magma] {
        &self.pair_wholes
    }

    pub fn whole(&self) -> &Magma {
        &self.whole
    }

    pub fn dom(&self) -> Magma {
        Magma::magma_ideal(self.intended.iter().map(|(z, _)| z.clone())).expect("nonempty presentation")
    }

    pub fn ran(&self) -> Magma {
        Magma::magma_ideal(self.intended.iter().map(|(_, w)| w.clone())).expect("nonempty presentation")
    }

    pub fn classify(&self, e: &Magma) -> Classification {
        if self.pair_wholes.iter().any(|p| equal(p, e)) {
            Classification::Intended
        } else if !member_magma(e, &self.whole) {
            Classification::NotElement
        } else if self.seeds.is_pair(e) {
            Classification::CollateralPair
        } else {
            Classification::CollateralNonPair
        }
    }

    fn triggered(&self, z: &Magma) -> Vec<usize> {
        (0..self.intended.len()).filter(|&i| subset(z, &self.intended[i].0)).collect()
    }

    /// `R[z]`: the ideal of the images triggered by `z`, or `None` off the domain.
    pub fn slice(&self, z: &Magma) -> Option<Magma> {
        let images: Vec<Magma> = self.triggered(z).into_iter().map(|i| self.intended[i].1.clone()).collect();
        if images.is_empty() {
            None
        } else {
            Some(Magma::magma_ideal(images).expect("nonempty"))
        }
    }

    pub fn is_semifunction(&self) -> bool {
        let n = self.intended.len();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                !equal(&self.intended[i].0, &self.intended[j].0) || equal(&self.intended[i].1, &self.intended[j].1)
            })
        })
    }

    /// Index of the ⊆-greatest image among `idx`, if there is one.
    fn greatest(&self, idx: &[usize]) -> Option<usize> {
        idx.iter().copied().find(|&i| idx.iter().all(|&j| subset(&self.intended[j].1, &self.intended[i].1)))
    }

    pub fn is_function(&self) -> Result<bool> {
        self.is_function_capped(DEFAULT_FUNCTION_CAP)
    }

    pub fn is_function_capped(&self, cap: usize) -> Result<bool> {
        Ok(self.function_counterexample(cap)?.is_none())
    }

    /// A domain element whose slice has no greatest image, if any exists.
    ///
    /// Every domain element `z` triggers `T(z) = {i : z ⊆ zᵢ}`, and the
    /// intersection of the triggered `zᵢ` triggers the same set, so closing
    /// every nonempty index set covers all realizable trigger sets.
    pub fn function_counterexample(&self, cap: usize) -> Result<Option<Magma>> {
        let n = self.intended.len();
        if n > cap {
            return Err(MagmaError::PresentationTooLarge(n, cap));
        }
        if !self.is_semifunction() {
            let (i, _) = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| {
                    let (a, b) = (&self.intended[i], &self.intended[j]);
                    equal(&a.0, &b.0) && !equal(&a.1, &b.1)
                })
                .expect("semifunction failure has a witness");
            return Ok(Some(self.intended[i].0.clone()));
        }
        let mut seen = std::collections::HashSet::new();
        for mask in 1u32..(1 << n) {
            let mut members = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &self.intended[i].0);
            let first = members.next().expect("nonempty mask").clone();
            let Some(meet) = members.try_fold(first, |m, z| intersect(&m, z)) else {
                continue;
            };
            let closed = self.triggered(&meet);
            if seen.insert(closed.clone()) && self.greatest(&closed).is_none() {
                return Ok(Some(meet));
            }
        }
        Ok(None)
    }

    /// The greatest image of `z`.
    pub fn apply(&self, z: &Magma) -> Result<Magma> {
        let t = self.triggered(z);
        if t.is_empty() {
            return Err(MagmaError::NotInDomain(z.to_string()));
        }
        self.greatest(&t).map(|i| self.intended[i].1.clone()).ok_or_else(|| MagmaError::NoGreatestImage(z.to_string()))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(rel (")?;
        for (i, (z, w)) in self.intended.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({z} {w})")?;
        }
        write!(f, "))")
    }
}

/// `x ⊡ y`, the bare set of pairs over two magma-ideals. Query-only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakProduct {
    pub left: Magma,
    pub right: Magma,
}

impl WeakProduct {
    pub fn new(left: &Magma, right: &Magma) -> Result<WeakProduct> {
        require_magma_ideal(left)?;
        require_magma_ideal(right)?;
        Ok(WeakProduct { left: left.clone(), right: right.clone() })
    }

    pub fn contains(&self, seeds: &Seeds, p: &Magma) -> bool {
        match seeds.extract_pair(p) {
            Ok((z, w)) => member_magma(&z, &self.left) && member_magma(&w, &self.right),
            Err(_) => false,
        }
    }
}

fn require_magma_ideal(x: &Magma) -> Result<()> {
    if x.kind() == Kind::MagmaIdeal {
        Ok(())
    } else {
        Err(MagmaError::KindError(format!("expected a magma-ideal, got {x}")))
    }
}

/// `x ⊠ y`, presented by all generator pairs.
pub fn product(seeds: &Seeds, x: &Magma, y: &Magma) -> Result<Relation> {
    require_magma_ideal(x)?;
    require_magma_ideal(y)?;
    let xs = x.magmas().expect("checked");
    let ys = y.magmas().expect("checked");
    let pairs = xs.iter().flat_map(|g| ys.iter().map(move |h| (g.clone(), h.clone()))).collect();
    Relation::new(seeds, pairs)
}

pub fn weak_member(seeds: &Seeds, p: &Magma, wp: &WeakProduct) -> bool {
    wp.contains(seeds, p)
}

/// `pr(⟨⟨x,y⟩⟩)` as a magma, for comparison with `pr(x) ⊠ pr(y)`.
pub fn pr_of_pair(seeds: &Seeds, x: &Magma, y: &Magma) -> Result<Magma> {
    Ok(kernel::pr(&seeds.pair(x, y)?.whole))
}
