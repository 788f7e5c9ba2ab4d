//! Instantiated relation checks. Each check evaluates both sides of a
//! matrix identity exactly; nothing is rewritten symbolically.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{evaluate, twist_assignment, MappingWord};
use crate::curves::{chain_configuration, lantern_configuration, CurveName, CurveSystem, NamedCurve};
use crate::symplectic::{transvection, SympMatrix};
use crate::{Error, Result};

/// Both sides of one exact identity, kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub lhs_value: SympMatrix,
    pub rhs_value: SympMatrix,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs_value == self.rhs_value
    }

    pub(crate) fn from_words(
        label: String,
        lhs: &MappingWord,
        rhs: &MappingWord,
        assignment: &super::Assignment,
        genus: usize,
    ) -> Result<Self> {
        Ok(Self {
            label,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            lhs_value: evaluate(lhs, assignment, genus)?,
            rhs_value: evaluate(rhs, assignment, genus)?,
        })
    }
}

fn declared(system: &CurveSystem, u: CurveName, v: CurveName, want: u32, what: &str) -> Result<()> {
    system.curve(u)?;
    system.curve(v)?;
    match system.table().get(u, v) {
        Some(n) if n == want => Ok(()),
        Some(n) => Err(Error::Precondition(format!("{what} needs i({u}, {v}) = {want}, declared {n}"))),
        None => Err(Error::Precondition(format!("{what}: no intersection declared for ({u}, {v})"))),
    }
}

/// `T_u T_v = T_v T_u` for curves declared disjoint.
pub fn check_commuting(system: &CurveSystem, u: CurveName, v: CurveName) -> Result<IdentityCheck> {
    declared(system, u, v, 0, "commutation")?;
    let asg = twist_assignment(system)?;
    let (tu, tv) = (MappingWord::twist(u, 1), MappingWord::twist(v, 1));
    IdentityCheck::from_words(format!("commute {u} {v}"), &tu.then(&tv), &tv.then(&tu), &asg, system.genus())
}

/// `T_u T_v T_u = T_v T_u T_v` for curves meeting once.
pub fn check_braid(system: &CurveSystem, u: CurveName, v: CurveName) -> Result<IdentityCheck> {
    declared(system, u, v, 1, "braid relation")?;
    let asg = twist_assignment(system)?;
    let (tu, tv) = (MappingWord::twist(u, 1), MappingWord::twist(v, 1));
    IdentityCheck::from_words(
        format!("braid {u} {v}"),
        &tu.then(&tv).then(&tu),
        &tv.then(&tu).then(&tv),
        &asg,
        system.genus(),
    )
}

/// Chain relation: `(T_1..T_t)^{2t+2} = T_d` for even `t`,
/// `(T_1..T_t)^{t+1} = T_{d1} T_{d2}` for odd `t`.
pub fn check_chain(t: usize, g: usize) -> Result<IdentityCheck> {
    let config = chain_configuration(t, g)?;
    let asg = twist_assignment(&config.system)?;
    let product = config.chain.iter().fold(MappingWord::empty(), |w, &c| w.then(&MappingWord::twist(c, 1)));
    let power = if t.is_multiple_of(2) { 2 * t + 2 } else { t + 1 };
    let rhs = config.boundary.iter().fold(MappingWord::empty(), |w, &d| w.then(&MappingWord::twist(d, 1)));
    let mut check = IdentityCheck::from_words(format!("chain t={t} g={g}"), &product.pow(power as u32), &rhs, &asg, g)?;
    check.lhs = format!("({product})^{power}");
    Ok(check)
}

/// Lantern relation in product form `T_a T_b T_c T_d = T_x T_y T_z`, in the
/// rewritten form `T_d = (T_x T_a^-1)(T_y T_b^-1)(T_z T_c^-1)`, and the
/// commutations between boundary and interior twists that the rewriting
/// uses.
pub fn check_lantern(g: usize) -> Result<Vec<IdentityCheck>> {
    let config = lantern_configuration(g)?;
    let sys = &config.system;
    let asg = twist_assignment(sys)?;
    let [a, b, c, d] = config.boundary.map(|n| MappingWord::twist(n, 1));
    let [x, y, z] = config.interior.map(|n| MappingWord::twist(n, 1));

    let mut checks = Vec::new();
    checks.push(IdentityCheck::from_words(
        format!("lantern product g={g}"),
        &a.then(&b).then(&c).then(&d),
        &x.then(&y).then(&z),
        &asg,
        g,
    )?);
    let rewritten = x.then(&a.inverse()).then(&y).then(&b.inverse()).then(&z).then(&c.inverse());
    checks.push(IdentityCheck::from_words(format!("lantern rewritten g={g}"), &d, &rewritten, &asg, g)?);
    for &u in &config.boundary {
        for &v in &config.interior {
            if sys.table().get(u, v) == Some(0) {
                let mut chk = check_commuting(sys, u, v)?;
                chk.label = format!("lantern disjoint {u} {v} g={g}");
                checks.push(chk);
            }
        }
    }
    Ok(checks)
}

/// `f T_c f^{-1} = T_{f(c)}`.
pub fn check_conjugacy(f: &SympMatrix, c: &NamedCurve) -> Result<IdentityCheck> {
    let image = f.apply(c.class())?;
    Ok(IdentityCheck {
        label: format!("conjugacy {}", c.name()),
        lhs: format!("f T{} f^-1", c.name()),
        rhs: format!("T[{image}]"),
        lhs_value: f.conjugate(&c.twist()?)?,
        rhs_value: transvection(&image)?,
    })
}
