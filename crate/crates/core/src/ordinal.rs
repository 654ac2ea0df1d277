//! Ordinals below ω², written ω·q + r.
//!
//! Used both for magma levels and for ordinal arithmetic on notations that
//! have no concrete finitely generated magma.

use std::fmt;

use crate::error::{MagmaError, Result};

/// Largest ω-coefficient a level may carry.
pub const MAX_OMEGA_COEFF: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Ordinal {
    pub q: u64,
    pub r: u64,
}

/// Magma levels share the ordinal notation.
pub type Level = Ordinal;

impl Ordinal {
    pub const ZERO: Ordinal = Ordinal { q: 0, r: 0 };
    pub const OMEGA: Ordinal = Ordinal { q: 1, r: 0 };

    pub const fn new(q: u64, r: u64) -> Self {
        Ordinal { q, r }
    }

    pub const fn finite(n: u64) -> Self {
        Ordinal { q: 0, r: n }
    }

    pub fn is_finite(self) -> bool {
        self.q == 0
    }

    pub fn is_limit(self) -> bool {
        self.q > 0 && self.r == 0
    }

    pub fn successor(self) -> Result<Self> {
        let r = self.r.checked_add(1).ok_or(MagmaError::NotRepresentable)?;
        Ok(Ordinal { q: self.q, r })
    }

    /// Ordinal addition: `(ω·q1 + r1) + (ω·q2 + r2)` absorbs `r1` when `q2 > 0`.
    pub fn checked_add(self, other: Ordinal) -> Result<Self> {
        if other.q > 0 {
            let q = self.q.checked_add(other.q).ok_or(MagmaError::NotRepresentable)?;
            Ok(Ordinal { q, r: other.r })
        } else {
            let r = self.r.checked_add(other.r).ok_or(MagmaError::NotRepresentable)?;
            Ok(Ordinal { q: self.q, r })
        }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(ord {} {})", self.q, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_examples() {
        assert_eq!(Ordinal::finite(2).checked_add(Ordinal::finite(3)).unwrap(), Ordinal::finite(5));
        let a = Ordinal::new(1, 4);
        assert_eq!(a.checked_add(Ordinal::ZERO).unwrap(), a);
        assert_eq!(Ordinal::finite(1).checked_add(Ordinal::OMEGA).unwrap(), Ordinal::OMEGA);
        assert_eq!(Ordinal::OMEGA.checked_add(Ordinal::finite(1)).unwrap(), Ordinal::new(1, 1));
        assert_eq!(Ordinal::new(0, u64::MAX).checked_add(Ordinal::finite(1)), Err(MagmaError::NotRepresentable));
    }

    #[test]
    fn lexicographic_order_matches_ordinals() {
        assert!(Ordinal::finite(1_000_000) < Ordinal::OMEGA);
        assert!(Ordinal::new(1, 7) < Ordinal::new(2, 0));
        assert!(Ordinal::new(2, 0).is_limit());
        assert!(!Ordinal::ZERO.is_limit());
    }
}
