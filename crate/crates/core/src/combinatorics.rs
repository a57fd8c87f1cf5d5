//! Binomial coefficients, colexicographic ranking of k-subsets, and
//! lexicographic k-combination stepping.

use crate::error::{Error, Result};

/// `C(n, k)` in checked 128-bit arithmetic. `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        let num = u128::from(n - i);
        let den = u128::from(i + 1);
        let g = gcd(acc, den);
        let (a, d) = (acc / g, den / g);
        acc = a.checked_mul(num / d)?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Like [`binomial`], but reports overflow as an error.
pub fn binomial_checked(n: u64, k: u64) -> Result<u128> {
    binomial(n, k).ok_or_else(|| Error::Overflow(format!("C({n}, {k}) exceeds 128 bits")))
}

/// Ceiling that first snaps values within floating noise of an integer, so
/// that e.g. `4.000000000000001` computed from an exact 4 stays 4.
pub(crate) fn ceil_snapped(v: f64) -> f64 {
    let r = v.round();
    if (v - r).abs() <= 1e-9 * v.abs().max(1.0) {
        r
    } else {
        v.ceil()
    }
}

/// Colexicographic rank of a strictly increasing combination: `Σ C(c_i, i+1)`.
pub fn colex_rank(combo: &[usize]) -> u128 {
    combo
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial(c as u64, i as u64 + 1).expect("rank overflow"))
        .sum()
}

/// Inverse of [`colex_rank`] for k-subsets of `0..`.
pub fn colex_unrank(mut rank: u128, k: usize) -> Vec<usize> {
    let mut combo = vec![0; k];
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= rank; c >= i - 1
        let mut c = i - 1;
        while binomial(c as u64 + 1, i as u64).is_some_and(|b| b <= rank) {
            c += 1;
        }
        rank -= binomial(c as u64, i as u64).unwrap_or(0);
        combo[i - 1] = c;
    }
    combo
}

/// Advances `combo` (a k-subset of `0..n`, increasing) to its lexicographic
/// successor. Returns `false` once the last combination has been passed.
pub fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Iterator over all k-subsets of `0..n` in lexicographic order.
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut succ = out.clone();
        if next_combination(&mut succ, self.n) {
            self.current = Some(succ);
        }
        Some(out)
    }
}
