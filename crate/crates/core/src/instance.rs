//! Instance data model and coverage evaluation.
//!
//! Element ids and set indices are 0-based here; the text formats in
//! [`crate::io`] shift them to 1-based.

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// A MaxCover / MinNonCovered instance: `n` elements, a family of sets over
/// `0..n`, and a budget `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    sets: Vec<Vec<usize>>,
    k: usize,
}

impl Instance {
    /// Builds an instance, sorting and deduplicating each set.
    pub fn new(n: usize, sets: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        let mut sets = sets;
        for (i, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if let Some(&e) = set.last() {
                if e >= n {
                    return Err(Error::InvalidInstance(format!(
                        "set {} contains element {} but n={}",
                        i + 1,
                        e + 1,
                        n
                    )));
                }
            }
        }
        Ok(Instance { n, sets, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Budget actually usable: `min(k, m)`.
    pub fn effective_k(&self) -> usize {
        self.k.min(self.sets.len())
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.sets[i]
    }

    pub fn with_k(&self, k: usize) -> Instance {
        Instance {
            n: self.n,
            sets: self.sets.clone(),
            k,
        }
    }

    /// One bitset per set.
    pub fn masks(&self) -> Vec<Bitset> {
        self.sets
            .iter()
            .map(|s| Bitset::from_ids(self.n, s))
            .collect()
    }

    /// For every element, the ascending list of sets containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, set) in self.sets.iter().enumerate() {
            for &e in set {
                inc[e].push(i);
            }
        }
        inc
    }

    pub fn frequency_profile(&self) -> FrequencyProfile {
        let mut freq = vec![0usize; self.n];
        for set in &self.sets {
            for &e in set {
                freq[e] += 1;
            }
        }
        let p_min = freq.iter().copied().min().unwrap_or(0);
        let p_max = freq.iter().copied().max().unwrap_or(0);
        FrequencyProfile { freq, p_min, p_max }
    }

    /// Rejects with the first element whose frequency exceeds `bound`.
    pub fn check_frequency_bound(&self, bound: usize) -> Result<()> {
        let profile = self.frequency_profile();
        match profile.freq.iter().position(|&f| f > bound) {
            Some(e) => Err(Error::FrequencyExceeded {
                element: e + 1,
                frequency: profile.freq[e],
                bound,
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn check_chosen(&self, chosen: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.m()];
        for &i in chosen {
            if i >= self.m() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    m: self.m(),
                });
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::DuplicateIndex(i));
            }
        }
        Ok(())
    }

    /// Size of the union of the chosen sets.
    pub fn coverage(&self, chosen: &[usize]) -> Result<usize> {
        self.check_chosen(chosen)?;
        Ok(self.union_of(chosen).count())
    }

    pub(crate) fn union_of(&self, chosen: &[usize]) -> Bitset {
        let mut union = Bitset::new(self.n);
        for &i in chosen {
            for &e in &self.sets[i] {
                union.insert(e);
            }
        }
        union
    }

    /// Coverage via inclusion-exclusion truncated at intersections of `p`
    /// sets. Exact whenever every element frequency is at most `p`, because
    /// any `p + 1` of the sets then have an empty intersection.
    pub fn coverage_inclusion_exclusion(&self, chosen: &[usize], p: usize) -> Result<usize> {
        self.check_chosen(chosen)?;
        self.check_frequency_bound(p)?;
        let mut total: i64 = 0;
        for (pos, &i) in chosen.iter().enumerate() {
            self.inclusion_exclusion_terms(chosen, pos + 1, &self.sets[i], 1, p, &mut total);
        }
        Ok(usize::try_from(total).expect("inclusion-exclusion sum is a cardinality"))
    }

    /// Adds the term for the current intersection, then extends it by every
    /// later chosen set while the subset size stays at most `p`.
    fn inclusion_exclusion_terms(
        &self,
        chosen: &[usize],
        next: usize,
        intersection: &[usize],
        depth: usize,
        p: usize,
        total: &mut i64,
    ) {
        let sign = if depth % 2 == 1 { 1 } else { -1 };
        *total += sign * intersection.len() as i64;
        if depth == p || intersection.is_empty() {
            return;
        }
        for pos in next..chosen.len() {
            let mut narrowed = Vec::with_capacity(intersection.len());
            intersect_sorted(intersection, &self.sets[chosen[pos]], &mut narrowed);
            self.inclusion_exclusion_terms(chosen, pos + 1, &narrowed, depth + 1, p, total);
        }
    }

    /// Adds `p - 1` singleton copies `{e}` for every element, lifting every
    /// frequency to at least `p`.
    pub fn pad_frequencies(&self, p: usize) -> Result<Instance> {
        if p == 0 {
            return Err(Error::param("padding target p must be at least 1"));
        }
        let profile = self.frequency_profile();
        if let Some(e) = profile.freq.iter().position(|&f| f == 0) {
            return Err(Error::UncoverableElement { element: e + 1 });
        }
        let mut sets = self.sets.clone();
        sets.reserve(self.n * (p - 1));
        for e in 0..self.n {
            for _ in 1..p {
                sets.push(vec![e]);
            }
        }
        Ok(Instance {
            n: self.n,
            sets,
            k: self.k,
        })
    }

    /// Validates `chosen` and wraps it as a [`Solution`].
    pub fn solution(&self, chosen: Vec<usize>) -> Result<Solution> {
        self.check_chosen(&chosen)?;
        Ok(Solution::new(self, chosen))
    }
}

fn intersect_sorted(a: &[usize], b: &[usize], out: &mut Vec<usize>) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

/// Per-element set-membership counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyProfile {
    pub freq: Vec<usize>,
    pub p_min: usize,
    pub p_max: usize,
}

/// A set of chosen indices (sorted, 0-based) with its coverage.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Solution {
    pub chosen: Vec<usize>,
    pub covered: usize,
    pub uncovered: usize,
}

impl Solution {
    pub fn empty(inst: &Instance) -> Solution {
        Solution {
            chosen: Vec::new(),
            covered: 0,
            uncovered: inst.n(),
        }
    }

    /// `chosen` must already be valid for `inst`.
    pub(crate) fn new(inst: &Instance, mut chosen: Vec<usize>) -> Solution {
        chosen.sort_unstable();
        let covered = inst.union_of(&chosen).count();
        Solution {
            chosen,
            covered,
            uncovered: inst.n() - covered,
        }
    }

    /// Chosen indices shifted to 1-based, as written in reports.
    pub fn chosen_one_based(&self) -> Vec<usize> {
        self.chosen.iter().map(|i| i + 1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: usize, sets: &[&[usize]], k: usize) -> Instance {
        Instance::new(n, sets.iter().map(|s| s.to_vec()).collect(), k).unwrap()
    }

    #[test]
    fn frequency_profile_counts_memberships() {
        let i = inst(3, &[&[0, 1], &[1, 2]], 1);
        let p = i.frequency_profile();
        assert_eq!(p.freq, vec![1, 2, 1]);
        assert_eq!((p.p_min, p.p_max), (1, 2));

        let empty = inst(2, &[], 0);
        let p = empty.frequency_profile();
        assert_eq!(p.freq, vec![0, 0]);
        assert_eq!((p.p_min, p.p_max), (0, 0));
    }

    #[test]
    fn coverage_examples() {
        let i = inst(3, &[&[0, 1], &[1, 2]], 2);
        assert_eq!(i.coverage(&[0, 1]).unwrap(), 3);
        assert_eq!(i.coverage(&[]).unwrap(), 0);
        let dup = inst(2, &[&[0, 1], &[0, 1]], 2);
        assert_eq!(dup.coverage(&[0, 1]).unwrap(), 2);
    }

    #[test]
    fn coverage_rejects_bad_indices() {
        let i = inst(3, &[&[0, 1], &[1, 2]], 2);
        assert_eq!(
            i.coverage(&[2]),
            Err(Error::IndexOutOfRange { index: 2, m: 2 })
        );
        assert_eq!(i.coverage(&[1, 1]), Err(Error::DuplicateIndex(1)));
    }

    #[test]
    fn inclusion_exclusion_two_sets() {
        let i = inst(3, &[&[0, 1], &[1, 2]], 2);
        assert_eq!(i.coverage_inclusion_exclusion(&[0, 1], 2).unwrap(), 3);
        assert_eq!(
            i.coverage_inclusion_exclusion(&[1], 1).unwrap_err(),
            Error::FrequencyExceeded {
                element: 2,
                frequency: 2,
                bound: 1
            }
        );
        let single = inst(3, &[&[0, 1, 2]], 1);
        assert_eq!(single.coverage_inclusion_exclusion(&[0], 1).unwrap(), 3);
    }

    #[test]
    fn padding_adds_singletons() {
        let i = inst(2, &[&[0, 1]], 1);
        let padded = i.pad_frequencies(2).unwrap();
        assert_eq!(padded.sets(), &[vec![0, 1], vec![0], vec![1]]);
        assert_eq!(padded.k(), 1);
        assert_eq!(i.pad_frequencies(1).unwrap(), i);
        assert!(padded.frequency_profile().p_min >= 2);
    }

    #[test]
    fn padding_rejects_uncoverable_element() {
        let i = inst(3, &[&[0, 1]], 1);
        assert_eq!(
            i.pad_frequencies(2),
            Err(Error::UncoverableElement { element: 3 })
        );
        assert!(matches!(
            i.pad_frequencies(0),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn new_normalizes_and_validates() {
        let i = Instance::new(3, vec![vec![2, 0, 2]], 5).unwrap();
        assert_eq!(i.set(0), &[0, 2]);
        assert_eq!(i.effective_k(), 1);
        assert!(Instance::new(2, vec![vec![2]], 1).is_err());
    }
}
