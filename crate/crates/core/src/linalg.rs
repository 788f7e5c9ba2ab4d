//! Small exact linear algebra over Q for the configuration solvers.
//! Sizes here are tiny (at most 16x16), so plain reduced row echelon form
//! on normalized rationals is enough.

use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Q {
    num: i128,
    den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Q {
    const ZERO: Q = Q { num: 0, den: 1 };

    fn int(n: i64) -> Q {
        Q { num: i128::from(n), den: 1 }
    }

    fn new(num: i128, den: i128) -> Result<Q> {
        let g = gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Ok(Q { num: s * num / g, den: s * den / g })
    }

    fn is_zero(self) -> bool {
        self.num == 0
    }

    fn sub(self, o: Q) -> Result<Q> {
        let num = self
            .num
            .checked_mul(o.den)
            .and_then(|x| x.checked_sub(o.num.checked_mul(self.den)?))
            .ok_or(Error::Overflow)?;
        Q::new(num, self.den.checked_mul(o.den).ok_or(Error::Overflow)?)
    }

    fn mul(self, o: Q) -> Result<Q> {
        Q::new(self.num.checked_mul(o.num).ok_or(Error::Overflow)?, self.den.checked_mul(o.den).ok_or(Error::Overflow)?)
    }

    fn div(self, o: Q) -> Result<Q> {
        Q::new(self.num.checked_mul(o.den).ok_or(Error::Overflow)?, self.den.checked_mul(o.num).ok_or(Error::Overflow)?)
    }
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [Vec<Q>]) -> Result<Vec<usize>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c];
        for x in m[r].iter_mut() {
            *x = x.div(piv)?;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot_row).take(cols) {
                    *x = x.sub(f.mul(y)?)?;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

/// Basis of the integer kernel `{v : A v = 0}`, each vector primitive.
pub(crate) fn integer_kernel(a: &[Vec<i64>], cols: usize) -> Result<Vec<Vec<i64>>> {
    let mut m: Vec<Vec<Q>> = a.iter().map(|row| row.iter().map(|&x| Q::int(x)).collect()).collect();
    let pivots = rref(&mut m)?;
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![Q::ZERO; cols];
        v[free] = Q::int(1);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = Q::ZERO.sub(m[r][free])?;
        }
        let lcm =
            v.iter().try_fold(1i128, |acc, q| (acc / gcd(acc, q.den)).checked_mul(q.den).ok_or(Error::Overflow))?;
        let ints: Vec<i128> = v.iter().map(|q| q.num * (lcm / q.den)).collect();
        let g = ints.iter().fold(0, |acc, &x| gcd(acc, x)).max(1);
        basis.push(ints.iter().map(|&x| i64::try_from(x / g).map_err(|_| Error::Overflow)).collect::<Result<_>>()?);
    }
    Ok(basis)
}

/// Exact inverse of a square integer matrix, `None` unless it is unimodular.
pub(crate) fn integer_inverse(a: &[Vec<i64>]) -> Result<Option<Vec<Vec<i64>>>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::int(x)).collect();
            r.extend((0..n).map(|j| Q::int(i64::from(i == j))));
            r
        })
        .collect();
    let pivots = rref(&mut m)?;
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Ok(None);
    }
    let mut inv = Vec::with_capacity(n);
    for row in &m {
        let mut out = Vec::with_capacity(n);
        for q in &row[n..] {
            if q.den != 1 {
                return Ok(None);
            }
            out.push(i64::try_from(q.num).map_err(|_| Error::Overflow)?);
        }
        inv.push(out);
    }
    Ok(Some(inv))
}
