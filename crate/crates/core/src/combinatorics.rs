//! Exact binomials and lexicographic k-subset enumeration.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// `C(n, k)` as an arbitrary-precision integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // acc = C(n-k+i, i) after step i, always an integer
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `C(a, b)` over signed arguments, zero whenever `a < 0`, `b < 0` or `b > a`.
///
/// Closed-form bounds subtract parameters freely (`n - omega - 2`, ...), and the
/// formulas they come from treat every out-of-range binomial as an empty count.
pub fn binomial_signed(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        BigUint::zero()
    } else {
        binomial(a as u64, b as u64)
    }
}

/// Convenience for small values that are known to fit.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    let value = binomial(n, k);
    let digits = value.to_u64_digits();
    match digits.len() {
        0 => Some(0),
        1 => Some(digits[0] as u128),
        2 => Some(digits[0] as u128 | (digits[1] as u128) << 64),
        _ => None,
    }
}

/// Iterator over the k-subsets of `{0..n-1}` in lexicographic order of their
/// sorted element lists.
#[derive(Clone, Debug)]
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::invalid(format!(
                "n = {n} exceeds the supported maximum of {MAX_VERTICES} vertices"
            )));
        }
        if k > n {
            return Err(Error::invalid(format!("k = {k} must satisfy 0 <= k <= n = {n}")));
        }
        Ok(KSubsets {
            n,
            current: Some((0..k).collect()),
        })
    }
}

impl Iterator for KSubsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let current = self.current.as_mut()?;
        let out: VertexSet = current.iter().copied().collect();

        let k = current.len();
        let n = self.n;
        // rightmost position that can still move up
        match (0..k).rev().find(|&i| current[i] < n - k + i) {
            Some(i) => {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// All k-subsets of `{0..n-1}`; position in the returned vector is the
/// canonical subset id.
pub fn enumerate_ksubsets(n: usize, k: usize) -> Result<Vec<VertexSet>> {
    Ok(KSubsets::new(n, k)?.collect())
}
