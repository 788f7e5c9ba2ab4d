//! Named curve configurations: the Lickorish curves `a_i, b_i, c_i`, the
//! lantern embedded in the four-holed sphere bounded by `a_1, c_1, c_2, a_3`,
//! and chains drawn along `a_1, b_1, c_1, b_2, c_2, ...`.
//!
//! Curves are only known up to isotopy and orientation. Orientation choices
//! become signs in homology classes; each constructor enumerates the finite
//! space of sign assignments in a fixed order and keeps the first one that
//! satisfies every declared constraint. The chosen assignment is recorded in
//! [`CurveSystem::conventions`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::linalg::integer_kernel;
use crate::symplectic::{symplectic_form, transvection, HomologyClass, SympMatrix};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveName {
    A(usize),
    B(usize),
    C(usize),
    LanternX,
    LanternY,
    LanternZ,
    ChainBoundary(usize),
}

impl fmt::Display for CurveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveName::A(i) => write!(f, "a{i}"),
            CurveName::B(i) => write!(f, "b{i}"),
            CurveName::C(i) => write!(f, "c{i}"),
            CurveName::LanternX => write!(f, "x"),
            CurveName::LanternY => write!(f, "y"),
            CurveName::LanternZ => write!(f, "z"),
            CurveName::ChainBoundary(k) => write!(f, "d{k}"),
        }
    }
}

impl FromStr for CurveName {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "x" => return Ok(CurveName::LanternX),
            "y" => return Ok(CurveName::LanternY),
            "z" => return Ok(CurveName::LanternZ),
            _ => {}
        }
        let mut chars = s.chars();
        let head = chars.next().ok_or(())?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) || rest.starts_with('0') {
            return Err(());
        }
        let idx: usize = rest.parse().map_err(|_| ())?;
        match head {
            'a' => Ok(CurveName::A(idx)),
            'b' => Ok(CurveName::B(idx)),
            'c' => Ok(CurveName::C(idx)),
            'd' => Ok(CurveName::ChainBoundary(idx)),
            _ => Err(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCurve {
    name: CurveName,
    cls: HomologyClass,
    separating: bool,
}

impl NamedCurve {
    /// A curve is separating exactly when its class is zero; otherwise the
    /// class must be primitive.
    pub fn new(name: CurveName, cls: HomologyClass) -> Result<Self> {
        let separating = cls.is_zero();
        if !separating && !cls.is_primitive() {
            return Err(Error::InvalidCurve { name: name.to_string(), reason: "class is not primitive" });
        }
        Ok(Self { name, cls, separating })
    }

    pub fn name(&self) -> CurveName {
        self.name
    }

    pub fn class(&self) -> &HomologyClass {
        &self.cls
    }

    pub fn is_separating(&self) -> bool {
        self.separating
    }

    pub fn twist(&self) -> Result<SympMatrix> {
        transvection(&self.cls)
    }
}

/// Declared geometric intersection numbers, keyed by unordered pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntersectionTable {
    entries: BTreeMap<(CurveName, CurveName), u32>,
}

impl IntersectionTable {
    fn key(u: CurveName, v: CurveName) -> (CurveName, CurveName) {
        if u <= v {
            (u, v)
        } else {
            (v, u)
        }
    }

    pub fn declare(&mut self, u: CurveName, v: CurveName, n: u32) {
        if u != v {
            self.entries.insert(Self::key(u, v), n);
        }
    }

    /// A curve never meets itself; undeclared pairs return `None`.
    pub fn get(&self, u: CurveName, v: CurveName) -> Option<u32> {
        if u == v {
            Some(0)
        } else {
            self.entries.get(&Self::key(u, v)).copied()
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (CurveName, CurveName, u32)> + '_ {
        self.entries.iter().map(|(&(u, v), &n)| (u, v, n))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A set of named curves in `S_g` with declared intersection data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSystem {
    genus: usize,
    curves: Vec<NamedCurve>,
    table: IntersectionTable,
    conventions: Vec<String>,
}

impl CurveSystem {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn curves(&self) -> &[NamedCurve] {
        &self.curves
    }

    pub fn table(&self) -> &IntersectionTable {
        &self.table
    }

    /// Human-readable record of every sign choice the solvers made.
    pub fn conventions(&self) -> &[String] {
        &self.conventions
    }

    pub fn curve(&self, name: CurveName) -> Result<&NamedCurve> {
        self.curves.iter().find(|c| c.name == name).ok_or_else(|| Error::UnknownCurve(name.to_string()))
    }

    pub fn class(&self, name: CurveName) -> Result<&HomologyClass> {
        self.curve(name).map(NamedCurve::class)
    }

    pub fn twist(&self, name: CurveName) -> Result<SympMatrix> {
        self.curve(name)?.twist()
    }

    pub fn contains(&self, name: CurveName) -> bool {
        self.curves.iter().any(|c| c.name == name)
    }

    /// First curve whose class equals `+-cls`, with the sign.
    pub fn find_class(&self, cls: &HomologyClass) -> Option<(CurveName, i64)> {
        self.curves.iter().filter(|c| !c.separating).find_map(|c| cls.sign_relative_to(&c.cls).map(|s| (c.name, s)))
    }

    /// Every declared pair satisfies `|<u, v>| <= i(u, v)`, with equality
    /// when `i(u, v)` is 0 or 1.
    pub fn validate(&self) -> Result<()> {
        for (u, v, n) in self.table.iter() {
            let f = symplectic_form(self.class(u)?, self.class(v)?)?.unsigned_abs();
            let ok = if n <= 1 { f == u64::from(n) } else { f <= u64::from(n) };
            if !ok {
                return Err(Error::Precondition(format!(
                    "algebraic pairing {f} of {u} and {v} contradicts declared intersection {n}"
                )));
            }
        }
        Ok(())
    }

    fn push(&mut self, name: CurveName, cls: HomologyClass) -> Result<()> {
        self.curves.push(NamedCurve::new(name, cls)?);
        Ok(())
    }
}

fn lickorish_table(g: usize) -> IntersectionTable {
    let mut names: Vec<CurveName> = Vec::new();
    names.extend((1..=g).map(CurveName::A));
    names.extend((1..=g).map(CurveName::B));
    names.extend((1..g).map(CurveName::C));
    let mut t = IntersectionTable::default();
    for (k, &u) in names.iter().enumerate() {
        for &v in &names[k + 1..] {
            t.declare(u, v, 0);
        }
    }
    for i in 1..=g {
        t.declare(CurveName::A(i), CurveName::B(i), 1);
    }
    for i in 1..g {
        t.declare(CurveName::B(i), CurveName::C(i), 1);
        t.declare(CurveName::C(i), CurveName::B(i + 1), 1);
    }
    t
}

/// The `3g - 1` Lickorish curves with `[a_i] = alpha_i`, `[b_i] = beta_i` and
/// `[c_i] = alpha_i + s_i alpha_{i+1}`, the signs `s_i` chosen by the solver.
pub fn lickorish_curves(g: usize) -> Result<CurveSystem> {
    if g < 2 {
        return Err(Error::GenusTooSmall { required: 2, found: g });
    }
    let table = lickorish_table(g);
    let n_signs = g - 1;
    // Sign patterns in lexicographic order with -1 before +1.
    for mask in 0u32..(1 << n_signs) {
        let signs: Vec<i64> = (0..n_signs).map(|i| if mask >> (n_signs - 1 - i) & 1 == 0 { -1 } else { 1 }).collect();
        let mut sys = CurveSystem { genus: g, curves: Vec::new(), table: table.clone(), conventions: Vec::new() };
        for i in 1..=g {
            sys.push(CurveName::A(i), HomologyClass::alpha(g, i))?;
        }
        for i in 1..=g {
            sys.push(CurveName::B(i), HomologyClass::beta(g, i))?;
        }
        for i in 1..g {
            let cls = HomologyClass::alpha(g, i).combine(signs[i - 1], &HomologyClass::alpha(g, i + 1))?;
            sys.push(CurveName::C(i), cls)?;
        }
        if sys.validate().is_ok() {
            for i in 1..g {
                let c = sys.class(CurveName::C(i))?.clone();
                sys.conventions.push(format!("c{i} = {c}"));
            }
            return Ok(sys);
        }
    }
    Err(Error::ConstructionFailed("Lickorish curve classes".into()))
}

/// Lantern relation data on the four-holed sphere bounded by
/// `a = a_1, b = c_2, c = a_3, d = c_1`, with interior curves `x = a_2, y, z`.
///
/// `x` encloses `{a, d}`, `y` encloses `{b, d}` and `z` encloses `{c, d}`, so
/// the order-3 rotation `a -> b -> c` fixing `d` carries `x -> y -> z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanternConfiguration {
    pub system: CurveSystem,
    /// `[a, b, c, d]`.
    pub boundary: [CurveName; 4],
    /// `[x, y, z]`.
    pub interior: [CurveName; 3],
    /// Signs making the boundary classes sum to zero (boundary orientation).
    pub orientation: [i64; 4],
}

impl LanternConfiguration {
    /// Boundary class as oriented by the subsurface.
    pub fn oriented_boundary(&self, k: usize) -> Result<HomologyClass> {
        self.system.class(self.boundary[k])?.checked_scale(self.orientation[k])
    }
}

fn lantern_product_holds(a: &[&HomologyClass; 4], interior: &[&HomologyClass; 3]) -> Result<bool> {
    let mut lhs = SympMatrix::identity(a[0].genus());
    for c in a {
        lhs = lhs.mul(&transvection(c)?)?;
    }
    let mut rhs = SympMatrix::identity(a[0].genus());
    for c in interior {
        rhs = rhs.mul(&transvection(c)?)?;
    }
    Ok(lhs == rhs)
}

fn ternary_candidates(g: usize, support: &[usize]) -> Vec<HomologyClass> {
    let k = support.len();
    let mut out = Vec::new();
    for code in 0..3usize.pow(k as u32) {
        let mut coeffs = vec![0i64; k];
        let mut c = code;
        for slot in (0..k).rev() {
            coeffs[slot] = (c % 3) as i64 - 1;
            c /= 3;
        }
        let mut v = HomologyClass::zero(g);
        for (&i, &co) in support.iter().zip(&coeffs) {
            v = v.combine(co, &HomologyClass::alpha(g, i)).expect("small coefficients");
        }
        if !v.is_zero() && v.canonical() == v {
            out.push(v);
        }
    }
    out
}

pub fn lantern_configuration(g: usize) -> Result<LanternConfiguration> {
    if g < 3 {
        return Err(Error::GenusTooSmall { required: 3, found: g });
    }
    let mut system = lickorish_curves(g)?;
    let boundary = [CurveName::A(1), CurveName::C(2), CurveName::A(3), CurveName::C(1)];
    let x_name = CurveName::A(2);
    let bcls: Vec<HomologyClass> = boundary.iter().map(|&n| system.class(n).cloned()).collect::<Result<_>>()?;
    let x = system.class(x_name)?.clone();
    let candidates = ternary_candidates(g, &[1, 2, 3]);

    for mask in 0u32..8 {
        let orientation = [
            1,
            if mask & 4 == 0 { -1 } else { 1 },
            if mask & 2 == 0 { -1 } else { 1 },
            if mask & 1 == 0 { -1 } else { 1 },
        ];
        let oriented: Vec<HomologyClass> =
            bcls.iter().zip(orientation).map(|(c, s)| c.checked_scale(s)).collect::<Result<_>>()?;
        let mut total = HomologyClass::zero(g);
        for c in &oriented {
            total = total.checked_add(c)?;
        }
        if !total.is_zero() {
            continue;
        }
        let encloses = |v: &HomologyClass, i: usize, j: usize| -> Result<bool> {
            Ok(v.sign_relative_to(&oriented[i].checked_add(&oriented[j])?).is_some())
        };
        if !encloses(&x, 0, 3)? {
            continue;
        }
        for y in &candidates {
            if !encloses(y, 1, 3)? {
                continue;
            }
            for z in &candidates {
                if z == y || !encloses(z, 2, 3)? {
                    continue;
                }
                let bref = [&bcls[0], &bcls[1], &bcls[2], &bcls[3]];
                if !lantern_product_holds(&bref, &[&x, y, z])? {
                    continue;
                }
                system.push(CurveName::LanternY, y.clone())?;
                system.push(CurveName::LanternZ, z.clone())?;
                let interior = [x_name, CurveName::LanternY, CurveName::LanternZ];
                for (k, &u) in boundary.iter().enumerate() {
                    for &v in &boundary[k + 1..] {
                        system.table.declare(u, v, 0);
                    }
                    for &v in &interior {
                        system.table.declare(u, v, 0);
                    }
                }
                system.table.declare(interior[0], interior[1], 2);
                system.table.declare(interior[0], interior[2], 2);
                system.table.declare(interior[1], interior[2], 2);
                system.validate()?;
                let letters = ["a", "b", "c", "d"];
                for k in 0..4 {
                    system.conventions.push(format!(
                        "lantern {} = {} oriented {}",
                        letters[k],
                        boundary[k],
                        if orientation[k] > 0 { "+" } else { "-" }
                    ));
                }
                system.conventions.push(format!("lantern x = a2 = {x}"));
                system.conventions.push(format!("lantern y = {y}"));
                system.conventions.push(format!("lantern z = {z}"));
                return Ok(LanternConfiguration { system, boundary, interior, orientation });
            }
        }
    }
    Err(Error::ConstructionFailed("lantern configuration".into()))
}

/// A chain `c_1..c_t` taken from `a_1, b_1, c_1, b_2, c_2, ..., b_g` with
/// its neighbourhood boundary: one separating curve `d1` for even `t`, two
/// homologous curves `d1`, `d2` for odd `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainConfiguration {
    pub system: CurveSystem,
    pub chain: Vec<CurveName>,
    pub boundary: Vec<CurveName>,
}

impl ChainConfiguration {
    pub fn length(&self) -> usize {
        self.chain.len()
    }
}

fn chain_sequence(g: usize) -> Vec<CurveName> {
    let mut seq = vec![CurveName::A(1), CurveName::B(1)];
    for i in 1..g {
        seq.push(CurveName::C(i));
        seq.push(CurveName::B(i + 1));
    }
    seq
}

pub fn chain_configuration(t: usize, g: usize) -> Result<ChainConfiguration> {
    if g < 1 {
        return Err(Error::GenusTooSmall { required: 1, found: g });
    }
    let seq = chain_sequence(g);
    if t == 0 || t > seq.len() {
        return Err(Error::ChainDoesNotFit { length: t, genus: g });
    }
    let base = if g >= 2 {
        lickorish_curves(g)?
    } else {
        let mut s =
            CurveSystem { genus: 1, curves: Vec::new(), table: IntersectionTable::default(), conventions: Vec::new() };
        s.push(CurveName::A(1), HomologyClass::alpha(1, 1))?;
        s.push(CurveName::B(1), HomologyClass::beta(1, 1))?;
        s
    };
    let chain: Vec<CurveName> = seq[..t].to_vec();
    let classes: Vec<HomologyClass> = chain.iter().map(|&n| base.class(n).cloned()).collect::<Result<_>>()?;

    let mut system = CurveSystem {
        genus: g,
        curves: Vec::new(),
        table: IntersectionTable::default(),
        conventions: base.conventions.clone(),
    };
    for (&n, c) in chain.iter().zip(&classes) {
        system.push(n, c.clone())?;
    }

    // Boundary curves are disjoint from the chain and lie in its
    // neighbourhood, so their class spans the radical of the Gram matrix.
    let gram: Vec<Vec<i64>> = classes
        .iter()
        .map(|u| classes.iter().map(|v| symplectic_form(u, v)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let kernel = integer_kernel(&gram, t)?;
    let boundary_class = match (t % 2, kernel.as_slice()) {
        (0, []) => HomologyClass::zero(g),
        (1, [k]) => {
            let mut v = HomologyClass::zero(g);
            for (&coef, c) in k.iter().zip(&classes) {
                v = v.combine(coef, c)?;
            }
            v.canonical()
        }
        _ => return Err(Error::ConstructionFailed(format!("boundary of chain of length {t}"))),
    };
    let n_boundary = if t.is_multiple_of(2) { 1 } else { 2 };
    let boundary: Vec<CurveName> = (1..=n_boundary).map(CurveName::ChainBoundary).collect();
    for &d in &boundary {
        system.push(d, boundary_class.clone())?;
    }

    for (k, &u) in chain.iter().enumerate() {
        for (l, &v) in chain.iter().enumerate().skip(k + 1) {
            system.table.declare(u, v, u32::from(l == k + 1));
        }
        for &d in &boundary {
            system.table.declare(u, d, 0);
        }
    }
    if n_boundary == 2 {
        system.table.declare(boundary[0], boundary[1], 0);
    }
    system.validate()?;
    system.conventions.push(format!("chain length {t}: boundary class {boundary_class}"));
    Ok(ChainConfiguration { system, chain, boundary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_name_round_trip() {
        for name in [
            CurveName::A(1),
            CurveName::B(12),
            CurveName::C(3),
            CurveName::LanternX,
            CurveName::LanternY,
            CurveName::LanternZ,
            CurveName::ChainBoundary(2),
        ] {
            assert_eq!(name.to_string().parse::<CurveName>(), Ok(name));
        }
        assert!("a0".parse::<CurveName>().is_err());
        assert!("q1".parse::<CurveName>().is_err());
        assert!("a".parse::<CurveName>().is_err());
    }

    #[test]
    fn named_curve_invariants() {
        assert!(NamedCurve::new(CurveName::A(1), HomologyClass::zero(2)).unwrap().is_separating());
        let bad = HomologyClass::new(2, vec![2, 0, 0, 0]).unwrap();
        assert!(NamedCurve::new(CurveName::A(1), bad).is_err());
    }

    #[test]
    fn lickorish_sizes_and_pairings() {
        let s2 = lickorish_curves(2).unwrap();
        assert_eq!(s2.curves().len(), 5);
        let f = symplectic_form(s2.class(CurveName::A(1)).unwrap(), s2.class(CurveName::B(1)).unwrap()).unwrap();
        assert_eq!(f.abs(), 1);

        let s3 = lickorish_curves(3).unwrap();
        assert_eq!(s3.curves().len(), 8);
        let cls = |n| s3.class(n).unwrap();
        assert_eq!(symplectic_form(cls(CurveName::A(1)), cls(CurveName::A(2))).unwrap(), 0);
        assert_eq!(symplectic_form(cls(CurveName::C(1)), cls(CurveName::B(1))).unwrap().abs(), 1);
        assert_eq!(symplectic_form(cls(CurveName::C(1)), cls(CurveName::B(2))).unwrap().abs(), 1);
        assert_eq!(s3.table().get(CurveName::C(1), CurveName::B(2)), Some(1));
        assert_eq!(s3.table().get(CurveName::A(1), CurveName::C(2)), Some(0));
        assert!(lickorish_curves(1).is_err());
    }

    #[test]
    fn lickorish_solver_prefers_difference_classes() {
        let s = lickorish_curves(4).unwrap();
        assert_eq!(s.class(CurveName::C(2)).unwrap().coords(), &[0, 1, -1, 0, 0, 0, 0, 0]);
        assert_eq!(s.conventions().len(), 3);
    }

    #[test]
    fn lantern_boundary_sums_to_zero() {
        let l = lantern_configuration(3).unwrap();
        let mut total = HomologyClass::zero(3);
        for k in 0..4 {
            total = total.checked_add(&l.oriented_boundary(k).unwrap()).unwrap();
        }
        assert!(total.is_zero());
        assert_eq!(l.system.class(CurveName::A(2)).unwrap(), &HomologyClass::alpha(3, 2));
        assert!(lantern_configuration(2).is_err());
    }

    #[test]
    fn chain_boundaries() {
        let c2 = chain_configuration(2, 2).unwrap();
        assert_eq!(c2.boundary.len(), 1);
        assert!(c2.system.curve(CurveName::ChainBoundary(1)).unwrap().is_separating());

        let c3 = chain_configuration(3, 2).unwrap();
        assert_eq!(c3.boundary.len(), 2);
        for &d in &c3.boundary {
            assert_eq!(c3.system.class(d).unwrap(), &HomologyClass::alpha(2, 2));
        }
        assert!(chain_configuration(4, 2).unwrap().system.class(CurveName::ChainBoundary(1)).unwrap().is_zero());
        assert!(matches!(chain_configuration(5, 2), Err(Error::ChainDoesNotFit { .. })));
        assert!(matches!(chain_configuration(0, 3), Err(Error::ChainDoesNotFit { .. })));
    }
}
