use std::fmt;

/// Largest order a structure may have; subsets are stored as 64-bit masks.
pub const MAX_ORDER: usize = 64;

/// A subset of the elements `0..len` of some structure.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSubset {
    bits: u64,
    len: u8,
}

impl ElementSubset {
    pub fn empty(len: usize) -> Self {
        debug_assert!(len <= MAX_ORDER);
        ElementSubset {
            bits: 0,
            len: len as u8,
        }
    }

    pub fn full(len: usize) -> Self {
        ElementSubset {
            bits: full_mask(len),
            len: len as u8,
        }
    }

    pub fn singleton(len: usize, a: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(a);
        s
    }

    /// Builds a subset from a raw mask; bits at or above `len` are dropped.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        ElementSubset {
            bits: bits & full_mask(len),
            len: len as u8,
        }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(len: usize, elems: I) -> Self {
        let mut s = Self::empty(len);
        for a in elems {
            s.insert(a);
        }
        s
    }

    pub fn from_bools(mask: &[bool]) -> Self {
        Self::from_elements(mask.len(), mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Order of the parent structure.
    #[inline]
    pub fn universe(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        a < self.universe() && self.bits >> a & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: usize) {
        assert!(a < self.universe(), "element {a} out of range 0..{}", self.len);
        self.bits |= 1 << a;
    }

    #[inline]
    pub fn remove(&mut self, a: usize) {
        self.bits &= !(1u64 << a);
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.universe())
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        ElementSubset {
            bits: self.bits | other.bits,
            len: self.len,
        }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        ElementSubset {
            bits: self.bits & other.bits,
            len: self.len,
        }
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        ElementSubset {
            bits: self.bits & !other.bits,
            len: self.len,
        }
    }

    #[inline]
    pub fn complement(&self) -> Self {
        ElementSubset {
            bits: !self.bits & full_mask(self.universe()),
            len: self.len,
        }
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.bits & other.bits != 0
    }

    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Elements {
        Elements { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub(crate) fn full_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Iterator over the members of an [`ElementSubset`] in increasing order.
#[derive(Clone)]
pub struct Elements {
    bits: u64,
}

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let a = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(a)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.bits.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

impl IntoIterator for &ElementSubset {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}
