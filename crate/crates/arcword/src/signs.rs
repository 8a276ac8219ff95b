//! Sign sequences: basis labels for tensor powers of the two-dimensional
//! module, written as strings of `+` and `-`.

use std::fmt;

/// A sequence in `{+,-}^len`, at most 32 long. Position 1 is the leftmost
/// tensor slot. The derived order compares sequences of equal length
/// lexicographically with `+ > -`, matching the leading-term order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignSeq {
    len: u8,
    mask: u32,
}

impl SignSeq {
    pub fn new(len: usize) -> Self {
        assert!(len <= 32);
        SignSeq {
            len: len as u8,
            mask: 0,
        }
    }

    pub fn from_plus_positions(len: usize, plus: &[usize]) -> Self {
        let mut s = SignSeq::new(len);
        for &p in plus {
            s = s.with_plus(p);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn bit(&self, pos: usize) -> u32 {
        debug_assert!(pos >= 1 && pos <= self.len());
        1 << (self.len() - pos)
    }

    /// Is position `pos` (1-based) a `+`?
    pub fn is_plus(&self, pos: usize) -> bool {
        self.mask & self.bit(pos) != 0
    }

    pub fn with_plus(&self, pos: usize) -> Self {
        SignSeq {
            len: self.len,
            mask: self.mask | self.bit(pos),
        }
    }

    pub fn with_minus(&self, pos: usize) -> Self {
        SignSeq {
            len: self.len,
            mask: self.mask & !self.bit(pos),
        }
    }

    pub fn flipped(&self, pos: usize) -> Self {
        SignSeq {
            len: self.len,
            mask: self.mask ^ self.bit(pos),
        }
    }

    pub fn plus_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// `#(+) - #(-)`.
    pub fn weight(&self) -> i64 {
        2 * self.plus_count() as i64 - self.len() as i64
    }

    pub fn plus_positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&p| self.is_plus(p)).collect()
    }

    /// Swap the signs at two positions.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let (a, b) = (self.is_plus(i), self.is_plus(j));
        let mut s = *self;
        if a != b {
            s = s.flipped(i).flipped(j);
        }
        s
    }
}

impl fmt::Debug for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 1..=self.len() {
            write!(f, "{}", if self.is_plus(p) { '+' } else { '-' })?;
        }
        Ok(())
    }
}
