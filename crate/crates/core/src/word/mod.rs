//! Words over the generator alphabet and their evaluation in `Sp(2g, Z)`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::curves::{CurveName, CurveSystem};
use crate::symplectic::SympMatrix;
use crate::{Error, Result};

mod parse;
mod relations;

pub use parse::parse_word;
pub use relations::{check_braid, check_chain, check_commuting, check_conjugacy, check_lantern, IdentityCheck};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorSymbol {
    TwistOf(CurveName),
    F1,
    F2,
    F3,
    Sigma,
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSymbol::TwistOf(c) => write!(f, "T{c}"),
            GeneratorSymbol::F1 => write!(f, "F1"),
            GeneratorSymbol::F2 => write!(f, "F2"),
            GeneratorSymbol::F3 => write!(f, "F3"),
            GeneratorSymbol::Sigma => write!(f, "S"),
        }
    }
}

/// Symbol-to-matrix assignment used by [`evaluate`].
pub type Assignment = BTreeMap<GeneratorSymbol, SympMatrix>;

/// Assigns every curve of `system` its twist.
pub fn twist_assignment(system: &CurveSystem) -> Result<Assignment> {
    system.curves().iter().map(|c| Ok((GeneratorSymbol::TwistOf(c.name()), c.twist()?))).collect()
}

/// A finite product of generator powers, written left to right; the
/// rightmost factor acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MappingWord {
    letters: Vec<(GeneratorSymbol, i64)>,
}

impl MappingWord {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Zero exponents are dropped on construction.
    pub fn new(letters: impl IntoIterator<Item = (GeneratorSymbol, i64)>) -> Self {
        Self { letters: letters.into_iter().filter(|&(_, e)| e != 0).collect() }
    }

    pub fn letter(s: GeneratorSymbol, e: i64) -> Self {
        Self::new([(s, e)])
    }

    pub fn twist(c: CurveName, e: i64) -> Self {
        Self::letter(GeneratorSymbol::TwistOf(c), e)
    }

    pub fn letters(&self) -> &[(GeneratorSymbol, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Concatenation `self * rhs`.
    pub fn then(&self, rhs: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Self { letters }
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|&(s, e)| (s, -e)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * k as usize);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Self { letters }
    }

    /// `u w u^{-1}`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.then(self).then(&u.inverse())
    }

    /// Free reduction: merge adjacent equal symbols and drop zero exponents.
    pub fn reduce(&self) -> Self {
        let mut out: Vec<(GeneratorSymbol, i64)> = Vec::with_capacity(self.letters.len());
        for &(s, e) in &self.letters {
            match out.last_mut() {
                Some((t, f)) if *t == s => {
                    *f += e;
                    if *f == 0 {
                        out.pop();
                    }
                }
                _ if e != 0 => out.push((s, e)),
                _ => {}
            }
        }
        Self { letters: out }
    }

    pub fn symbols(&self) -> impl Iterator<Item = GeneratorSymbol> + '_ {
        self.letters.iter().map(|&(s, _)| s)
    }
}

impl fmt::Display for MappingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, (s, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Product of the assigned matrices in word order. `genus` fixes the size
/// of the identity returned for the empty word.
pub fn evaluate(word: &MappingWord, assignment: &Assignment, genus: usize) -> Result<SympMatrix> {
    let mut acc = SympMatrix::identity(genus);
    for &(s, e) in &word.letters {
        let m = assignment.get(&s).ok_or_else(|| Error::UnassignedSymbol(s.to_string()))?;
        acc = acc.mul(&m.pow(e)?)?;
    }
    Ok(acc)
}
