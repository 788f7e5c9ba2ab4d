//! Integer symplectic linear algebra: the intersection form, Dehn twist
//! transvections and exact matrix arithmetic with overflow detection.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::modp::{check_prime, FpMatrix};
use crate::{Error, Result};

/// Homology class of an oriented curve, in the basis
/// `(alpha_1..alpha_g, beta_1..beta_g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass {
    coords: Vec<i64>,
}

impl HomologyClass {
    pub fn new(genus: usize, coords: Vec<i64>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::GenusTooSmall { required: 1, found: 0 });
        }
        if coords.len() != 2 * genus {
            return Err(Error::DimensionMismatch { expected: 2 * genus, found: coords.len() });
        }
        Ok(Self { coords })
    }

    pub fn zero(genus: usize) -> Self {
        Self { coords: vec![0; 2 * genus] }
    }

    /// `alpha_i`, 1-indexed.
    pub fn alpha(genus: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= genus, "alpha index {i} out of range for genus {genus}");
        let mut c = Self::zero(genus);
        c.coords[i - 1] = 1;
        c
    }

    /// `beta_i`, 1-indexed.
    pub fn beta(genus: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= genus, "beta index {i} out of range for genus {genus}");
        let mut c = Self::zero(genus);
        c.coords[genus + i - 1] = 1;
        c
    }

    pub fn genus(&self) -> usize {
        self.coords.len() / 2
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }

    /// gcd of the coordinates is 1.
    pub fn is_primitive(&self) -> bool {
        self.coords.iter().fold(0u64, |acc, &x| gcd(acc, x.unsigned_abs())) == 1
    }

    pub fn neg(&self) -> Self {
        Self { coords: self.coords.iter().map(|x| -x).collect() }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(1, other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(-1, other)
    }

    pub fn checked_scale(&self, k: i64) -> Result<Self> {
        let coords = self.coords.iter().map(|&x| x.checked_mul(k).ok_or(Error::Overflow)).collect::<Result<_>>()?;
        Ok(Self { coords })
    }

    /// `self + k * other`.
    pub fn combine(&self, k: i64, other: &Self) -> Result<Self> {
        same_genus(self.genus(), other.genus())?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&x, &y)| y.checked_mul(k).and_then(|t| x.checked_add(t)).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Self { coords })
    }

    /// Representative with first nonzero coordinate positive. Curves are
    /// unoriented, so `c` and `-c` name the same curve class.
    pub fn canonical(&self) -> Self {
        match self.coords.iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => self.neg(),
            _ => self.clone(),
        }
    }

    /// Returns `Some(s)` if `self == s * other` with `s = +-1`.
    pub fn sign_relative_to(&self, other: &Self) -> Option<i64> {
        if self == other {
            Some(1)
        } else if self.coords.iter().zip(&other.coords).all(|(a, b)| *a == -*b) {
            Some(-1)
        } else {
            None
        }
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.genus();
        let mut first = true;
        for (idx, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (letter, i) = if idx < g { ("A", idx + 1) } else { ("B", idx - g + 1) };
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}{letter}{i}")?;
            } else {
                write!(f, "{sign}{mag}{letter}{i}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn same_genus(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: 2 * a, found: 2 * b })
    }
}

/// The algebraic intersection pairing `x^T J y`.
pub fn symplectic_form(x: &HomologyClass, y: &HomologyClass) -> Result<i64> {
    same_genus(x.genus(), y.genus())?;
    let g = x.genus();
    let mut acc: i64 = 0;
    for i in 0..g {
        let t = x.coords[i]
            .checked_mul(y.coords[g + i])
            .and_then(|p| p.checked_sub(x.coords[g + i].checked_mul(y.coords[i])?))
            .ok_or(Error::Overflow)?;
        acc = acc.checked_add(t).ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Homology action of the Dehn twist about a curve of class `c`:
/// `x -> x + <x, c> c`. A zero class (separating curve) gives the identity.
pub fn transvection(c: &HomologyClass) -> Result<SympMatrix> {
    let g = c.genus();
    let n = 2 * g;
    let mut m = SympMatrix::identity(g);
    // column j is the image of basis vector e_j; <e_j, c> is read off J c.
    for j in 0..n {
        let pairing = if j < g { c.coords[g + j] } else { -c.coords[j - g] };
        if pairing == 0 {
            continue;
        }
        for i in 0..n {
            let delta = pairing.checked_mul(c.coords[i]).ok_or(Error::Overflow)?;
            let e = &mut m.entries[i * n + j];
            *e = e.checked_add(delta).ok_or(Error::Overflow)?;
        }
    }
    Ok(m)
}

/// A `2g x 2g` integer matrix with `M^T J M = J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SympMatrix {
    genus: usize,
    entries: Vec<i64>,
}

/// Outcome of [`SympMatrix::element_order`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(u64),
    ExceedsBound,
}

impl SympMatrix {
    pub fn identity(genus: usize) -> Self {
        let n = 2 * genus;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { genus, entries }
    }

    /// Builds a matrix from row-major rows, rejecting anything that is not
    /// square of even size or fails the symplectic condition.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::DimensionMismatch { expected: n + n % 2, found: n });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            entries.extend_from_slice(row);
        }
        Self::from_entries(n / 2, entries)
    }

    pub fn from_entries(genus: usize, entries: Vec<i64>) -> Result<Self> {
        let n = 2 * genus;
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: entries.len() });
        }
        let m = Self { genus, entries };
        if !m.is_symplectic()? {
            return Err(Error::NotSymplectic);
        }
        Ok(m)
    }

    /// Matrix whose columns are the images of the basis vectors.
    pub fn from_columns(genus: usize, columns: &[HomologyClass]) -> Result<Self> {
        let n = 2 * genus;
        if columns.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: columns.len() });
        }
        let mut entries = vec![0; n * n];
        for (j, col) in columns.iter().enumerate() {
            same_genus(genus, col.genus())?;
            for i in 0..n {
                entries[i * n + j] = col.coords[i];
            }
        }
        Self::from_entries(genus, entries)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.dim() + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim()).map(<[i64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim();
        self.entries.iter().enumerate().all(|(k, &e)| e == i64::from(k / n == k % n))
    }

    pub fn is_symplectic(&self) -> Result<bool> {
        let g = self.genus;
        let n = self.dim();
        // <M e_j, M e_k> must equal <e_j, e_k>.
        for j in 0..n {
            for k in j..n {
                let mut acc: i64 = 0;
                for i in 0..g {
                    let t = self
                        .get(i, j)
                        .checked_mul(self.get(g + i, k))
                        .and_then(|p| p.checked_sub(self.get(g + i, j).checked_mul(self.get(i, k))?))
                        .ok_or(Error::Overflow)?;
                    acc = acc.checked_add(t).ok_or(Error::Overflow)?;
                }
                let expected = if j < g && k == j + g { 1 } else { 0 };
                if acc != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        same_genus(self.genus, rhs.genus)?;
        let n = self.dim();
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.entries[k * n + j];
                    if b == 0 {
                        continue;
                    }
                    let e = &mut entries[i * n + j];
                    *e = a.checked_mul(b).and_then(|p| e.checked_add(p)).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(Self { genus: self.genus, entries })
    }

    /// Exact inverse `J^{-1} M^T J`: for blocks `[[A, B], [C, D]]` this is
    /// `[[D^T, -B^T], [-C^T, A^T]]`.
    pub fn inverse(&self) -> Self {
        let g = self.genus;
        let n = self.dim();
        let mut entries = vec![0i64; n * n];
        for i in 0..g {
            for j in 0..g {
                entries[i * n + j] = self.get(g + j, g + i);
                entries[i * n + g + j] = -self.get(j, g + i);
                entries[(g + i) * n + j] = -self.get(g + j, i);
                entries[(g + i) * n + g + j] = self.get(j, i);
            }
        }
        Self { genus: g, entries }
    }

    /// `self^k` by repeated squaring; negative exponents use the inverse.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.genus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `f h f^{-1}`.
    pub fn conjugate(&self, h: &Self) -> Result<Self> {
        self.mul(h)?.mul(&self.inverse())
    }

    pub fn apply(&self, x: &HomologyClass) -> Result<HomologyClass> {
        same_genus(self.genus, x.genus())?;
        let n = self.dim();
        let coords = (0..n)
            .map(|i| {
                (0..n).try_fold(0i64, |acc, j| {
                    self.entries[i * n + j]
                        .checked_mul(x.coords[j])
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::Overflow)
                })
            })
            .collect::<Result<_>>()?;
        Ok(HomologyClass { coords })
    }

    /// Smallest `k <= bound` with `self^k = I`, by plain repeated
    /// multiplication.
    pub fn element_order(&self, bound: u64) -> Result<ElementOrder> {
        let mut power = self.clone();
        for k in 1..=bound {
            if power.is_identity() {
                return Ok(ElementOrder::Finite(k));
            }
            if k < bound {
                power = power.mul(self)?;
            }
        }
        Ok(ElementOrder::ExceedsBound)
    }

    pub fn reduce_mod_p(&self, p: u32) -> Result<FpMatrix> {
        check_prime(p)?;
        let modulus = i64::from(p);
        let entries = self.entries.iter().map(|&e| e.rem_euclid(modulus) as u8).collect();
        Ok(FpMatrix::from_raw(p as u8, self.dim(), entries))
    }
}

impl fmt::Display for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| if *e < 0 { 2 } else { 1 } + e.unsigned_abs().checked_ilog10().unwrap_or(0) as usize)
            .max()
            .unwrap_or(1);
        for row in self.entries.chunks(self.dim()) {
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
