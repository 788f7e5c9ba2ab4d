//! The torsion generators as explicit symplectic matrices.
//!
//! * `f1`, `f2`: pi-rotations acting on the ring of handles like the
//!   reflections `i -> 2 - i` and `i -> 3 - i` (mod g), so that `f2 f1` is the
//!   cyclic handle shift and `f2` carries `a_1` to `a_2`.
//! * `f3`: the order-3 rotation of the lantern sphere (`a_1 -> c_2 -> a_3`,
//!   fixing `c_1`), extended over every complementary handle `i >= 4` by the
//!   order-3 block `alpha_i -> beta_i -> -alpha_i - beta_i`.
//! * genus 3 only: `tau = sigma^-1 f1 sigma`, where `sigma` fixes handles 1
//!   and 2 and sends `alpha_3` to `beta_3`.
//!
//! Remaining sign freedoms are resolved by enumerating candidates in a fixed
//! order; a candidate is accepted only if it satisfies every certificate
//! contract.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::curves::{lantern_configuration, lickorish_curves, CurveName, CurveSystem, LanternConfiguration};
use crate::linalg::integer_inverse;
use crate::symplectic::{ElementOrder, HomologyClass, SympMatrix};
use crate::verify::lantern_assembly_check;
use crate::word::{Assignment, GeneratorSymbol};
use crate::{Error, Result};

/// `matrix * [from] = sign * [to]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveAction {
    pub from: CurveName,
    pub to: CurveName,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionCertificate {
    name: String,
    matrix: SympMatrix,
    claimed_order: u64,
    curve_action: Vec<CurveAction>,
}

impl TorsionCertificate {
    /// Records the action on every named curve whose image is again a named
    /// curve, then checks the certificate.
    pub fn certify(name: &str, matrix: SympMatrix, claimed_order: u64, curves: &CurveSystem) -> Result<Self> {
        let mut curve_action = Vec::new();
        for c in curves.curves().iter().filter(|c| !c.is_separating()) {
            let image = matrix.apply(c.class())?;
            if let Some((to, sign)) = curves.find_class(&image) {
                curve_action.push(CurveAction { from: c.name(), to, sign });
            }
        }
        let cert = Self { name: name.to_string(), matrix, claimed_order, curve_action };
        cert.verify(curves)?;
        Ok(cert)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &SympMatrix {
        &self.matrix
    }

    pub fn claimed_order(&self) -> u64 {
        self.claimed_order
    }

    pub fn curve_action(&self) -> &[CurveAction] {
        &self.curve_action
    }

    /// Image of `from`, if it was recorded.
    pub fn image_of(&self, from: CurveName) -> Option<(CurveName, i64)> {
        self.curve_action.iter().find(|a| a.from == from).map(|a| (a.to, a.sign))
    }

    pub fn maps(&self, from: CurveName, to: CurveName) -> bool {
        self.image_of(from).is_some_and(|(t, _)| t == to)
    }

    /// Exact order equals the claimed order, and every recorded action holds.
    pub fn verify(&self, curves: &CurveSystem) -> Result<()> {
        let order = self.matrix.element_order(self.claimed_order)?;
        if order != ElementOrder::Finite(self.claimed_order) {
            return Err(Error::Precondition(format!(
                "{} has order {:?}, claimed {}",
                self.name, order, self.claimed_order
            )));
        }
        for a in &self.curve_action {
            let image = self.matrix.apply(curves.class(a.from)?)?;
            if image != curves.class(a.to)?.checked_scale(a.sign)? {
                return Err(Error::Precondition(format!(
                    "{} does not send {} to {}{}",
                    self.name,
                    a.from,
                    if a.sign < 0 { "-" } else { "" },
                    a.to
                )));
            }
        }
        Ok(())
    }
}

fn handle_target(i: usize, offset: i64, g: usize) -> usize {
    let t = (offset - i as i64).rem_euclid(g as i64) as usize;
    if t == 0 {
        g
    } else {
        t
    }
}

/// Signed handle permutation: `alpha_i -> s_i alpha_{p(i)}`,
/// `beta_i -> s_i beta_{p(i)}`.
fn handle_permutation(g: usize, offset: i64, signs: &[i64]) -> Result<SympMatrix> {
    let mut cols = vec![HomologyClass::zero(g); 2 * g];
    for i in 1..=g {
        let t = handle_target(i, offset, g);
        cols[i - 1] = HomologyClass::alpha(g, t).checked_scale(signs[i - 1])?;
        cols[g + i - 1] = HomologyClass::beta(g, t).checked_scale(signs[i - 1])?;
    }
    SympMatrix::from_columns(g, &cols)
}

fn sign_patterns(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (0u64..(1 << n)).map(move |mask| (0..n).map(|i| if mask >> (n - 1 - i) & 1 == 0 { 1 } else { -1 }).collect())
}

fn is_involution(m: &SympMatrix) -> Result<bool> {
    Ok(m.element_order(2)? == ElementOrder::Finite(2))
}

/// `f2 f1` is the handle shift `alpha_i -> e alpha_{i+1}`, `beta_i -> e beta_{i+1}`
/// for a single sign `e`.
fn is_global_shift(m: &SympMatrix) -> Result<bool> {
    let g = m.genus();
    let first = m.apply(&HomologyClass::alpha(g, 1))?;
    let Some(e) = first.sign_relative_to(&HomologyClass::alpha(g, 1 % g + 1)) else {
        return Ok(false);
    };
    for i in 1..=g {
        let next = i % g + 1;
        if m.apply(&HomologyClass::alpha(g, i))? != HomologyClass::alpha(g, next).checked_scale(e)?
            || m.apply(&HomologyClass::beta(g, i))? != HomologyClass::beta(g, next).checked_scale(e)?
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn rotation_pair(g: usize) -> Result<(SympMatrix, SympMatrix)> {
    if g < 2 {
        return Err(Error::GenusTooSmall { required: 2, found: g });
    }
    for s1 in sign_patterns(g) {
        let f1 = handle_permutation(g, 2, &s1)?;
        if !is_involution(&f1)? {
            continue;
        }
        for s2 in sign_patterns(g) {
            let f2 = handle_permutation(g, 3, &s2)?;
            if !is_involution(&f2)? {
                continue;
            }
            let a2 = f2.apply(&HomologyClass::alpha(g, 1))?;
            if a2.sign_relative_to(&HomologyClass::alpha(g, 2)).is_none() {
                continue;
            }
            let shift = f2.mul(&f1)?;
            if shift.element_order(g as u64)? == ElementOrder::Finite(g as u64) && is_global_shift(&shift)? {
                return Ok((f1, f2));
            }
        }
    }
    Err(Error::ConstructionFailed(format!("f1, f2 in genus {g}")))
}

/// Curves the certificates are read against: Lickorish curves, plus the
/// lantern curves `y`, `z` from genus 3 on.
pub fn certificate_curves(g: usize) -> Result<CurveSystem> {
    if g >= 3 {
        Ok(lantern_configuration(g)?.system)
    } else {
        lickorish_curves(g)
    }
}

pub fn build_f1(g: usize) -> Result<TorsionCertificate> {
    let (f1, _) = rotation_pair(g)?;
    TorsionCertificate::certify("f1", f1, 2, &certificate_curves(g)?)
}

pub fn build_f2(g: usize) -> Result<TorsionCertificate> {
    let (_, f2) = rotation_pair(g)?;
    TorsionCertificate::certify("f2", f2, 2, &certificate_curves(g)?)
}

fn column_matrix(cols: &[&HomologyClass]) -> Vec<Vec<i64>> {
    (0..3).map(|i| cols.iter().map(|c| c.coords()[i]).collect()).collect()
}

fn mul3(x: &[Vec<i64>], y: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    (0..3).try_fold(0i64, |acc, k| {
                        x[i][k].checked_mul(y[k][j]).and_then(|p| acc.checked_add(p)).ok_or(Error::Overflow)
                    })
                })
                .collect()
        })
        .collect()
}

/// Candidate with `a -> s0 b`, `b -> s1 c`, `c -> s2 a` on the lantern span
/// `<alpha_1, alpha_2, alpha_3>`, the contragredient action on
/// `<beta_1, beta_2, beta_3>`, and the order-3 block on handles `4..=g` when
/// `with_handles` is set (identity there otherwise).
fn f3_candidate(l: &LanternConfiguration, signs: [i64; 3], with_handles: bool) -> Result<Option<SympMatrix>> {
    let g = l.system.genus();
    let cls: Vec<&HomologyClass> = l.boundary[..3].iter().map(|&n| l.system.class(n)).collect::<Result<_>>()?;
    let images = [cls[1].checked_scale(signs[0])?, cls[2].checked_scale(signs[1])?, cls[0].checked_scale(signs[2])?];
    let basis = column_matrix(&cls);
    let target = column_matrix(&[&images[0], &images[1], &images[2]]);
    let Some(basis_inv) = integer_inverse(&basis)? else {
        return Ok(None);
    };
    let p = mul3(&target, &basis_inv)?;
    let Some(p_inv) = integer_inverse(&p)? else {
        return Ok(None);
    };
    let n = 2 * g;
    let mut entries = vec![0i64; n * n];
    for i in 0..n {
        entries[i * n + i] = 1;
    }
    for i in 0..3 {
        for j in 0..3 {
            entries[i * n + j] = p[i][j];
            // (P^{-1})^T on the beta block
            entries[(g + i) * n + g + j] = p_inv[j][i];
        }
    }
    if with_handles {
        for h in 3..g {
            entries[h * n + h] = 0;
            entries[(g + h) * n + h] = 1;
            entries[h * n + g + h] = -1;
            entries[(g + h) * n + g + h] = -1;
        }
    }
    match SympMatrix::from_entries(g, entries) {
        Ok(m) => Ok(Some(m)),
        Err(Error::NotSymplectic) => Ok(None),
        Err(e) => Err(e),
    }
}

fn f3_contracts_hold(m: &SympMatrix, l: &LanternConfiguration, with_handles: bool) -> Result<bool> {
    let sys = &l.system;
    let g = sys.genus();
    if m.element_order(3)? != ElementOrder::Finite(3) {
        return Ok(false);
    }
    let sends = |u: CurveName, v: CurveName| -> Result<bool> {
        Ok(m.apply(sys.class(u)?)?.sign_relative_to(sys.class(v)?).is_some())
    };
    let [a, b, c, d] = l.boundary;
    let [x, y, z] = l.interior;
    let cycles = [(a, b), (b, c), (c, a), (d, d), (x, y), (y, z), (z, x)];
    for (u, v) in cycles {
        if !sends(u, v)? {
            return Ok(false);
        }
    }
    if with_handles {
        for i in 4..=g {
            if !sends(CurveName::A(i), CurveName::B(i))? {
                return Ok(false);
            }
        }
    }
    Ok(lantern_assembly_check(l, m)?.holds())
}

fn search_f3(l: &LanternConfiguration, with_handles: bool) -> Result<SympMatrix> {
    for s in sign_patterns(3) {
        if let Some(m) = f3_candidate(l, [s[0], s[1], s[2]], with_handles)? {
            if f3_contracts_hold(&m, l, with_handles)? {
                return Ok(m);
            }
        }
    }
    Err(Error::ConstructionFailed(format!("f3 in genus {}", l.system.genus())))
}

/// The global order-3 map for `g >= 4`.
pub fn build_f3(g: usize) -> Result<TorsionCertificate> {
    if g < 4 {
        return Err(Error::GenusTooSmall { required: 4, found: g });
    }
    let l = lantern_configuration(g)?;
    let m = search_f3(&l, true)?;
    TorsionCertificate::certify("f3", m, 3, &l.system)
}

/// Genus-3 replacements: the order-3 map has only the lantern form, and the
/// extra involution `tau = sigma^-1 f1 sigma` supplies an `a -> b` move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genus3Extras {
    pub f3_local: TorsionCertificate,
    pub sigma: SympMatrix,
    pub tau: TorsionCertificate,
    /// The `b_j` with `tau [a_3] = +-[b_j]`.
    pub tau_target: CurveName,
}

pub fn build_genus3_extras() -> Result<Genus3Extras> {
    let g = 3;
    let l = lantern_configuration(g)?;
    let f3_local = TorsionCertificate::certify("f3", search_f3(&l, false)?, 3, &l.system)?;
    let (f1, _) = rotation_pair(g)?;
    for s in [1i64, -1] {
        let mut cols: Vec<HomologyClass> =
            (1..=g).map(|i| HomologyClass::alpha(g, i)).chain((1..=g).map(|i| HomologyClass::beta(g, i))).collect();
        cols[2] = HomologyClass::beta(g, 3).checked_scale(s)?;
        cols[5] = HomologyClass::alpha(g, 3).checked_scale(-s)?;
        let sigma = SympMatrix::from_columns(g, &cols)?;
        let tau = sigma.inverse().mul(&f1)?.mul(&sigma)?;
        if !is_involution(&tau)? {
            continue;
        }
        let image = tau.apply(&HomologyClass::alpha(g, 3))?;
        let target = (1..=g)
            .map(CurveName::B)
            .find(|&b| l.system.class(b).is_ok_and(|cls| image.sign_relative_to(cls).is_some()));
        if let Some(tau_target) = target {
            let tau = TorsionCertificate::certify("tau", tau, 2, &l.system)?;
            return Ok(Genus3Extras { f3_local, sigma, tau, tau_target });
        }
    }
    Err(Error::ConstructionFailed("sigma and tau in genus 3".into()))
}

/// The full torsion generating set for genus `g >= 3`: `f1`, `f2`,
/// `T_{a1} f2 T_{a1}^-1`, `f3`, and for `g = 3` also `tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionGenerators {
    pub genus: usize,
    pub f1: TorsionCertificate,
    pub f2: TorsionCertificate,
    pub f2_conjugate: TorsionCertificate,
    pub f3: TorsionCertificate,
    pub genus3: Option<Genus3Extras>,
}

impl TorsionGenerators {
    pub fn build(g: usize) -> Result<Self> {
        if g < 3 {
            return Err(Error::GenusTooSmall { required: 3, found: g });
        }
        let curves = certificate_curves(g)?;
        let (f1, f2) = rotation_pair(g)?;
        let ta1 = curves.twist(CurveName::A(1))?;
        let conj = ta1.conjugate(&f2)?;
        let f1 = TorsionCertificate::certify("f1", f1, 2, &curves)?;
        let f2 = TorsionCertificate::certify("f2", f2, 2, &curves)?;
        let f2_conjugate = TorsionCertificate::certify("Ta1 f2 Ta1^-1", conj, 2, &curves)?;
        let (f3, genus3) = if g == 3 {
            let extras = build_genus3_extras()?;
            (extras.f3_local.clone(), Some(extras))
        } else {
            (build_f3(g)?, None)
        };
        Ok(Self { genus: g, f1, f2, f2_conjugate, f3, genus3 })
    }

    /// Generators in a fixed order; 4 for `g >= 4`, 5 for `g = 3`.
    pub fn certificates(&self) -> Vec<&TorsionCertificate> {
        let mut v = vec![&self.f1, &self.f2, &self.f2_conjugate, &self.f3];
        if let Some(x) = &self.genus3 {
            v.push(&x.tau);
        }
        v
    }

    pub fn matrices(&self) -> Vec<SympMatrix> {
        self.certificates().into_iter().map(|c| c.matrix().clone()).collect()
    }

    pub fn involution_count(&self) -> usize {
        self.certificates().iter().filter(|c| c.claimed_order() == 2).count()
    }

    /// `F1`, `F2`, `F3` (and `S` for `sigma` in genus 3).
    pub fn assignment(&self) -> Assignment {
        let mut a = Assignment::new();
        a.insert(GeneratorSymbol::F1, self.f1.matrix().clone());
        a.insert(GeneratorSymbol::F2, self.f2.matrix().clone());
        a.insert(GeneratorSymbol::F3, self.f3.matrix().clone());
        if let Some(x) = &self.genus3 {
            a.insert(GeneratorSymbol::Sigma, x.sigma.clone());
        }
        a
    }
}
