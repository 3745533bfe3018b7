//! Exact integer helpers shared across modules.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `(n)↓_k = n (n-1) ⋯ (n-k+1)`, with `(n)↓_0 = 1`.
pub fn falling_factorial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    ((n - k + 1)..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    falling_factorial(n, k) / factorial(k)
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Motzkin numbers `M_0, …, M_{len-1}` by the three-term recurrence
/// `(n + 2) M_n = (2n + 1) M_{n-1} + 3(n - 1) M_{n-2}`.
pub fn motzkin_numbers(len: usize) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = Vec::with_capacity(len);
    for n in 0..len {
        let value = match n {
            0 | 1 => BigUint::one(),
            _ => {
                let n64 = n as u64;
                (&out[n - 1] * (2 * n64 + 1) + &out[n - 2] * (3 * (n64 - 1))) / (n64 + 2)
            }
        };
        out.push(value);
    }
    out
}

/// Number of words with the given letter multiplicities.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let total: u64 = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, &p| acc / factorial(p))
}

/// Calls `f` on every `k`-element submask of `mask`, in increasing order of
/// the submask read as a sorted tuple of bit positions.
pub fn for_each_k_subset<F: FnMut(u64)>(mask: u64, k: usize, mut f: F) {
    let bits: Vec<u64> = BitIter(mask).collect();
    let m = bits.len();
    if k > m {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(idx.iter().fold(0u64, |acc, &i| acc | bits[i]));
        // advance to the next combination
        let mut pos = k;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if idx[pos] < m - k + pos {
                break;
            }
        }
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Iterates the single-bit masks of a `u64`, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.0 == 0 {
            return None;
        }
        let low = self.0 & self.0.wrapping_neg();
        self.0 ^= low;
        Some(low)
    }
}
