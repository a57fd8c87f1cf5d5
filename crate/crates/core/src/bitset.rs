//! Fixed-size bitset over element ids `0..len`, used by every coverage kernel.

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bitset {
    words: Vec<u64>,
    len: usize,
}

impl Bitset {
    pub fn new(len: usize) -> Self {
        Bitset {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_ids(len: usize, ids: &[usize]) -> Self {
        let mut set = Bitset::new(len);
        for &id in ids {
            set.insert(id);
        }
        set
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn insert(&mut self, id: usize) {
        debug_assert!(id < self.len);
        self.words[id / 64] |= 1 << (id % 64);
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        id < self.len && self.words[id / 64] & (1 << (id % 64)) != 0
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    /// Number of set bits.
    #[inline]
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `|self ∖ other|`
    #[inline]
    pub fn difference_count(&self, other: &Bitset) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }

    #[inline]
    pub fn union_with(&mut self, other: &Bitset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &Bitset) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Overwrites `self` with `a ∪ b`.
    #[inline]
    pub fn assign_union(&mut self, a: &Bitset, b: &Bitset) {
        for ((dst, x), y) in self.words.iter_mut().zip(&a.words).zip(&b.words) {
            *dst = x | y;
        }
    }

    /// Complement within `0..len`.
    pub fn complement(&self) -> Bitset {
        let mut out = Bitset {
            words: self.words.iter().map(|w| !w).collect(),
            len: self.len,
        };
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = out.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        out
    }

    /// Id of the `rank`-th set bit (0-based), if any.
    pub fn select(&self, mut rank: usize) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            let ones = w.count_ones() as usize;
            if rank < ones {
                let mut word = w;
                for _ in 0..rank {
                    word &= word - 1;
                }
                return Some(wi * 64 + word.trailing_zeros() as usize);
            }
            rank -= ones;
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}
