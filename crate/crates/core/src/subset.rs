use std::fmt;

use serde::Serialize;

use crate::algebra::{ElementId, MAX_ORDER};
use crate::error::{Error, Result};

/// A set of carrier elements stored as a fixed-width bit vector.
///
/// Bit `i` is set iff element `i` belongs to the subset. Ordering is by the
/// bit pattern read as an integer, which is the canonical enumeration order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Subset {
    bits: u64,
    width: u8,
}

impl Subset {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_ORDER);
        Subset { bits: 0, width: width as u8 }
    }

    pub fn full(width: usize) -> Self {
        let bits = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        Subset { bits, width: width as u8 }
    }

    pub fn from_bits(width: usize, bits: u64) -> Self {
        let full = Self::full(width).bits;
        Subset { bits: bits & full, width: width as u8 }
    }

    pub fn singleton(width: usize, x: ElementId) -> Self {
        let mut s = Self::empty(width);
        s.insert(x);
        s
    }

    pub fn from_elements(width: usize, xs: impl IntoIterator<Item = ElementId>) -> Self {
        let mut s = Self::empty(width);
        for x in xs {
            s.insert(x);
        }
        s
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        self.bits >> x.index() & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: ElementId) -> bool {
        debug_assert!(x.index() < self.width());
        let fresh = !self.contains(x);
        self.bits |= 1 << x.index();
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: ElementId) {
        self.bits &= !(1 << x.index());
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == Self::full(self.width()).bits
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset { bits: self.bits | other.bits, width: self.width }
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset { bits: self.bits & other.bits, width: self.width }
    }

    pub fn complement(&self) -> Subset {
        Subset::from_bits(self.width(), !self.bits)
    }

    pub fn iter(&self) -> SubsetIter {
        SubsetIter { bits: self.bits }
    }

    /// Errors unless the subset is sized for a carrier of `n` elements.
    pub fn check_width(&self, n: usize) -> Result<()> {
        if self.width() == n {
            Ok(())
        } else {
            Err(Error::WidthMismatch { expected: n, got: self.width() })
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.width, self.bits).cmp(&(other.width, other.bits))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|x| x.index())).finish()
    }
}

impl IntoIterator for Subset {
    type Item = ElementId;
    type IntoIter = SubsetIter;
    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

impl IntoIterator for &Subset {
    type Item = ElementId;
    type IntoIter = SubsetIter;
    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

/// Ascending iterator over set bits.
#[derive(Clone)]
pub struct SubsetIter {
    bits: u64,
}

impl Iterator for SubsetIter {
    type Item = ElementId;

    fn next(&mut self) -> Option<ElementId> {
        if self.bits == 0 {
            return None;
        }
        let i = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(ElementId::new(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.bits.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_width_64() {
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::full(0).len(), 0);
        assert!(Subset::full(5).is_full());
    }

    #[test]
    fn width_check() {
        let s = Subset::empty(4);
        assert!(s.check_width(4).is_ok());
        assert_eq!(s.check_width(5), Err(Error::WidthMismatch { expected: 5, got: 4 }));
    }

    proptest! {
        #[test]
        fn iter_matches_bits(width in 1usize..=64, raw in any::<u64>()) {
            let s = Subset::from_bits(width, raw);
            let rebuilt = Subset::from_elements(width, s.iter());
            prop_assert_eq!(rebuilt, s);
            prop_assert_eq!(s.iter().count(), s.len());
            prop_assert!(s.iter().all(|x| x.index() < width));
            prop_assert_eq!(s.union(&s.complement()), Subset::full(width));
            prop_assert!(s.intersection(&s.complement()).is_empty());
        }
    }
}
