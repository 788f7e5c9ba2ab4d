//! Exact integer verification of torsion generating sets for the mapping
//! class group of a closed orientable surface, carried out in the
//! symplectic representation `Mod(S_g) -> Sp(2g, Z)`.
//!
//! Everything here is a necessary-condition check: mapping classes that act
//! trivially on first homology (the Torelli group) are invisible.
//!
//! Conventions used throughout:
//!
//! * homology basis `(alpha_1..alpha_g, beta_1..beta_g)` with
//!   `<alpha_i, beta_i> = +1` and every other basis pairing zero;
//! * a Dehn twist acts as the transvection `x -> x + <x, c> c`;
//! * products compose right to left, so `f h` applies `h` first.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod curves;
mod error;
mod linalg;
pub mod modp;
pub mod symplectic;
pub mod torsion;
pub mod verify;
pub mod word;

pub use crate::curves::{CurveName, CurveSystem, IntersectionTable, NamedCurve};
pub use crate::error::Error;
pub use crate::modp::FpMatrix;
pub use crate::symplectic::{symplectic_form, transvection, ElementOrder, HomologyClass, SympMatrix};
pub use crate::torsion::{TorsionCertificate, TorsionGenerators};
pub use crate::word::{GeneratorSymbol, IdentityCheck, MappingWord};

pub type Result<T, E = Error> = core::result::Result<T, E>;
