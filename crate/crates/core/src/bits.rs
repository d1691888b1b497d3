//! Small fixed-capacity bitsets backing the homomorphism search domains.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn empty(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Bits::empty(len);
        for w in b.words.iter_mut() {
            *w = u64::MAX;
        }
        b.trim();
        b
    }

    fn trim(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    /// True when `self ∩ other` is nonempty.
    pub fn intersects(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// True when `self ∩ a ∩ b` is nonempty.
    pub fn intersects2(&self, a: &Bits, b: &Bits) -> bool {
        self.words
            .iter()
            .zip(a.words.iter())
            .zip(b.words.iter())
            .any(|((x, y), z)| x & y & z != 0)
    }

    pub fn keep_only(&mut self, i: usize) {
        debug_assert!(self.contains(i));
        for w in self.words.iter_mut() {
            *w = 0;
        }
        self.insert(i);
    }

    pub fn iter(&self) -> BitsIter<'_> {
        BitsIter {
            bits: self,
            word: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub(crate) struct BitsIter<'a> {
    bits: &'a Bits,
    word: usize,
    cur: u64,
}

impl Iterator for BitsIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.word += 1;
            if self.word >= self.bits.words.len() {
                return None;
            }
            self.cur = self.bits.words[self.word];
        }
        let tz = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.word * 64 + tz)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_iteration() {
        let mut b = Bits::empty(130);
        for i in [0, 1, 63, 64, 65, 129] {
            b.insert(i);
        }
        assert!(b.contains(64) && !b.contains(2));
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 1, 63, 64, 65, 129]);
        b.remove(64);
        assert_eq!(b.iter().count(), 5);
        b.keep_only(63);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![63]);
    }

    #[test]
    fn full_respects_length() {
        let b = Bits::full(70);
        assert_eq!(b.iter().count(), 70);
        assert!(!b.contains(70));
    }
}
