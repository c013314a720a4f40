//! Fixed-length bitsets used for model sets and element subsets.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Bits { len, words: vec![!0; len.div_ceil(64)] };
        b.trim();
        b
    }

    pub fn from_indices(len: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut b = Bits::new(len);
        for i in idx {
            b.set(i);
        }
        b
    }

    fn trim(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            if let Some(w) = self.words.last_mut() {
                *w &= (1u64 << r) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, o: &Bits) -> Bits {
        debug_assert_eq!(self.len, o.len);
        Bits { len: self.len, words: self.words.iter().zip(&o.words).map(|(a, b)| a & b).collect() }
    }

    pub fn or(&self, o: &Bits) -> Bits {
        debug_assert_eq!(self.len, o.len);
        Bits { len: self.len, words: self.words.iter().zip(&o.words).map(|(a, b)| a | b).collect() }
    }

    pub fn and_not(&self, o: &Bits) -> Bits {
        Bits { len: self.len, words: self.words.iter().zip(&o.words).map(|(a, b)| a & !b).collect() }
    }

    pub fn not(&self) -> Bits {
        let mut b = Bits { len: self.len, words: self.words.iter().map(|w| !w).collect() };
        b.trim();
        b
    }

    pub fn is_subset(&self, o: &Bits) -> bool {
        self.words.iter().zip(&o.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, o: &Bits) -> bool {
        self.words.iter().zip(&o.words).any(|(a, b)| a & b != 0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    /// Keep only the positions listed in `keep`, renumbered in order.
    pub fn select(&self, keep: &[usize]) -> Bits {
        Bits::from_indices(keep.len(), keep.iter().enumerate().filter(|(_, &k)| self.get(k)).map(|(i, _)| i))
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.ones().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}/{}", self.len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = Bits::from_indices(70, [0, 3, 65]);
        let b = Bits::from_indices(70, [3, 69]);
        assert_eq!(a.and(&b).ones().collect::<Vec<_>>(), vec![3]);
        assert_eq!(a.or(&b).count(), 4);
        assert_eq!(a.not().count(), 67);
        assert!(Bits::new(70).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert!(Bits::full(70).is_full());
        assert_eq!(a.select(&[3, 4, 65]).ones().collect::<Vec<_>>(), vec![0, 2]);
    }
}
