//! Fixed-width bitmask subsets over ground-set positions.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

const WORDS: usize = 8;

/// Largest ground set a [`Subset`] can index.
pub const MAX_ELEMENTS: usize = WORDS * 64;

/// A subset of a ground set, stored as a bitmask over element positions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset([u64; WORDS]);

impl Subset {
    pub const EMPTY: Subset = Subset([0; WORDS]);

    pub fn empty() -> Self {
        Self::EMPTY
    }

    /// The first `n` positions.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set too large for a bitmask");
        let mut s = Self::EMPTY;
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.0[w] = u64::MAX;
            } else if n > lo {
                s.0[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(i: usize) -> Self {
        Self::EMPTY.with(i)
    }

    /// Interprets the low bits of `bits` as positions 0..64; used for enumeration.
    pub fn from_bits(bits: u64) -> Self {
        let mut s = Self::EMPTY;
        s.0[0] = bits;
        s
    }

    /// Low 64 bits of the mask.
    pub fn low_bits(&self) -> u64 {
        self.0[0]
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = Self::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < MAX_ELEMENTS, "element position {i} out of range");
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        if i < MAX_ELEMENTS {
            self.0[i / 64] &= !(1 << (i % 64));
        }
    }

    #[inline]
    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    #[inline]
    pub fn without(mut self, i: usize) -> Self {
        self.remove(i);
        self
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & b == 0)
    }

    /// Lowest position in the set.
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Positions in increasing order.
    pub fn iter(&self) -> Iter {
        Iter { set: *self }
    }

    /// Every subset of `self`, in increasing order of the induced mask.
    ///
    /// Only meaningful for small sets; panics above 63 elements.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        let elems: Vec<usize> = self.iter().collect();
        assert!(elems.len() < 64, "too many elements to enumerate subsets");
        let count = 1u64 << elems.len();
        (0..count).map(move |bits| {
            let mut s = Subset::EMPTY;
            for (j, &e) in elems.iter().enumerate() {
                if bits >> j & 1 == 1 {
                    s.insert(e);
                }
            }
            s
        })
    }

    fn zip_with(self, other: Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let mut out = [0u64; WORDS];
        for (w, o) in out.iter_mut().enumerate() {
            *o = f(self.0[w], other.0[w]);
        }
        Subset(out)
    }
}

pub struct Iter {
    set: Subset,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let i = self.set.first()?;
        self.set.remove(i);
        Some(i)
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Subset::from_indices(iter)
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.zip_with(rhs, |a, b| a | b)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.zip_with(rhs, |a, b| a & b)
    }
}

impl BitXor for Subset {
    type Output = Subset;
    fn bitxor(self, rhs: Subset) -> Subset {
        self.zip_with(rhs, |a, b| a ^ b)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.zip_with(rhs, |a, b| a & !b)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(self.0.map(|w| !w))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
