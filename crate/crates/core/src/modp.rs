//! Matrices over the prime fields `F_p`, `p <= 13`, and their packed
//! encodings used as hash keys during subgroup enumeration.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

const SUPPORTED_PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

pub(crate) fn check_prime(p: u32) -> Result<()> {
    if SUPPORTED_PRIMES.contains(&p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Order of `Sp(2n, F_q)`: `q^{n^2} * prod_{i=1..n} (q^{2i} - 1)`.
/// `None` on overflow.
pub fn symplectic_group_order(n: u32, q: u64) -> Option<u128> {
    let q = u128::from(q);
    let mut order = q.checked_pow(n * n)?;
    for i in 1..=n {
        order = order.checked_mul(q.checked_pow(2 * i)? - 1)?;
    }
    Some(order)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u8,
    n: usize,
    entries: Vec<u8>,
}

impl FpMatrix {
    pub(crate) fn from_raw(p: u8, n: usize, entries: Vec<u8>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Self { p, n, entries }
    }

    pub fn identity(p: u32, n: usize) -> Result<Self> {
        check_prime(p)?;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Ok(Self { p: p as u8, n, entries })
    }

    pub fn prime(&self) -> u32 {
        u32::from(self.p)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.entries.iter().enumerate().all(|(k, &e)| e == u8::from(k / n == k % n))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!((self.p, self.n), (rhs.p, rhs.n), "mod-p matrix shape mismatch");
        let n = self.n;
        let p = u32::from(self.p);
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                let s: u32 =
                    (0..n).map(|k| u32::from(self.entries[i * n + k]) * u32::from(rhs.entries[k * n + j])).sum();
                entries[i * n + j] = (s % p) as u8;
            }
        }
        Self { p: self.p, n, entries }
    }

    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        let n = self.n;
        let p = u32::from(self.p);
        (0..n)
            .map(|i| {
                let s: u32 = (0..n).map(|j| u32::from(self.entries[i * n + j]) * u32::from(v[j])).sum();
                (s % p) as u8
            })
            .collect()
    }

    /// `M^T J M = J` over `F_p`.
    pub fn is_symplectic(&self) -> bool {
        let n = self.n;
        if !n.is_multiple_of(2) {
            return false;
        }
        let g = n / 2;
        let p = i64::from(self.p);
        for j in 0..n {
            for k in 0..n {
                let mut acc = 0i64;
                for i in 0..g {
                    acc += i64::from(self.get(i, j)) * i64::from(self.get(g + i, k))
                        - i64::from(self.get(g + i, j)) * i64::from(self.get(i, k));
                }
                let expected = if j < g && k == j + g {
                    1
                } else if k < g && j == k + g {
                    -1
                } else {
                    0
                };
                if (acc - expected).rem_euclid(p) != 0 {
                    return false;
                }
            }
        }
        true
    }

    fn bits_per_entry(&self) -> u32 {
        u32::BITS - u32::from(self.p - 1).leading_zeros()
    }

    /// Packs the entries into a `u128`, row-major, fixed width per entry.
    pub fn pack(&self) -> Result<u128> {
        let bits = self.bits_per_entry();
        if (self.n * self.n) as u32 * bits > 128 {
            return Err(Error::EncodingTooLarge { prime: self.prime(), size: self.n });
        }
        Ok(self.entries.iter().rev().fold(0u128, |acc, &e| (acc << bits) | u128::from(e)))
    }

    pub fn unpack(p: u32, n: usize, mut key: u128) -> Self {
        let mut m = Self { p: p as u8, n, entries: vec![0; n * n] };
        let bits = m.bits_per_entry();
        let mask = (1u128 << bits) - 1;
        for e in m.entries.iter_mut() {
            *e = (key & mask) as u8;
            key >>= bits;
        }
        m
    }
}

/// A square matrix over `F_2` of size at most 8, one byte per row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct F2Matrix {
    rows: u64,
    n: usize,
}

impl F2Matrix {
    pub(crate) fn from_fp(m: &FpMatrix) -> Option<Self> {
        if m.p != 2 || m.n > 8 {
            return None;
        }
        let mut rows = 0u64;
        for i in 0..m.n {
            let mut r = 0u64;
            for j in 0..m.n {
                r |= u64::from(m.get(i, j)) << j;
            }
            rows |= r << (8 * i);
        }
        Some(Self { rows, n: m.n })
    }

    pub(crate) fn identity(n: usize) -> Self {
        let rows = (0..n).fold(0u64, |acc, i| acc | (1u64 << (9 * i)));
        Self { rows, n }
    }

    pub(crate) fn key(self) -> u64 {
        self.rows
    }

    pub(crate) fn from_key(n: usize, rows: u64) -> Self {
        Self { rows, n }
    }

    fn row(self, i: usize) -> u64 {
        (self.rows >> (8 * i)) & 0xff
    }

    pub(crate) fn mul(self, rhs: Self) -> Self {
        let mut rows = 0u64;
        for i in 0..self.n {
            let a = self.row(i);
            let mut r = 0u64;
            for k in 0..self.n {
                if (a >> k) & 1 == 1 {
                    r ^= rhs.row(k);
                }
            }
            rows |= r << (8 * i);
        }
        Self { rows, n: self.n }
    }

    #[cfg(test)]
    pub(crate) fn to_fp(self) -> FpMatrix {
        let n = self.n;
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = ((self.row(i) >> j) & 1) as u8;
            }
        }
        FpMatrix { p: 2, n, entries }
    }
}
