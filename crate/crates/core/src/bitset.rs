//! Fixed-length bitset backed by `u64` blocks.
//!
//! Edge sets and candidate sets in the search code are indexed by dense
//! combinatorial ranks, so a flat bit vector beats hashing by a wide margin.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVec {
    blocks: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            blocks: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.blocks[i / 64] &= !(1 << (i % 64));
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn intersect_with(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    /// Clears every bit at or below `i`.
    pub fn clear_through(&mut self, i: usize) {
        debug_assert!(i < self.len);
        let block = i / 64;
        for b in &mut self.blocks[..block] {
            *b = 0;
        }
        let keep_from = i % 64 + 1;
        if keep_from < 64 {
            self.blocks[block] &= !0 << keep_from;
        } else {
            self.blocks[block] = 0;
        }
    }

    pub fn ones(&self) -> Ones<'_> {
        Ones {
            bits: self,
            block: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }
}

pub struct Ones<'a> {
    bits: &'a BitVec,
    block: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.block += 1;
            if self.block >= self.bits.blocks.len() {
                return None;
            }
            self.current = self.bits.blocks[self.block];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.block * 64 + bit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_count() {
        let mut b = BitVec::zeros(130);
        b.set(0);
        b.set(64);
        b.set(129);
        assert!(b.get(0) && b.get(64) && b.get(129));
        assert!(!b.get(1));
        assert_eq!(b.count_ones(), 3);
        b.clear(64);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![0, 129]);
    }

    #[test]
    fn clear_through_drops_prefix() {
        let mut b = BitVec::zeros(200);
        for i in [3, 64, 100, 150] {
            b.set(i);
        }
        b.clear_through(100);
        assert_eq!(b.ones().collect::<Vec<_>>(), vec![150]);
    }
}
