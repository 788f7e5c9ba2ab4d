//! Replays the generation argument: the Luo decomposition, the lantern
//! assembly of `T_{c1}`, the single-orbit property of the Lickorish classes,
//! and finite mod-p generation certificates.
//!
//! All of these are homology-level necessary conditions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::curves::{CurveName, CurveSystem, LanternConfiguration};
use crate::modp::{check_prime, F2Matrix, FpMatrix};
use crate::symplectic::{HomologyClass, SympMatrix};
use crate::word::{twist_assignment, GeneratorSymbol, IdentityCheck, MappingWord};
use crate::{Error, Result};

/// `T_{a2} T_{a1}^-1 = (f2 T_{a1} f2) T_{a1}^-1 = f2 (T_{a1} f2 T_{a1}^-1)` and
/// `(T_{a1} f2 T_{a1}^-1)^2 = I`, evaluated with the given matrix for `f2`.
pub fn luo_decomposition_check(curves: &CurveSystem, f2: &SympMatrix) -> Result<Vec<IdentityCheck>> {
    let g = curves.genus();
    let ta1 = curves.twist(CurveName::A(1))?;
    let ta2 = curves.twist(CurveName::A(2))?;
    let ta1_inv = ta1.inverse();
    let conjugated = ta1.mul(f2)?.mul(&ta1_inv)?;
    let direct = ta2.mul(&ta1_inv)?;
    let pushed = f2.mul(&ta1)?.mul(f2)?.mul(&ta1_inv)?;
    let split = f2.mul(&conjugated)?;
    Ok(vec![
        IdentityCheck {
            label: format!("luo twist conjugation g={g}"),
            lhs: "Ta2 Ta1^-1".into(),
            rhs: "(F2 Ta1 F2) Ta1^-1".into(),
            lhs_value: direct,
            rhs_value: pushed.clone(),
        },
        IdentityCheck {
            label: format!("luo involution split g={g}"),
            lhs: "(F2 Ta1 F2) Ta1^-1".into(),
            rhs: "F2 (Ta1 F2 Ta1^-1)".into(),
            lhs_value: pushed,
            rhs_value: split,
        },
        IdentityCheck {
            label: format!("luo conjugate is involution g={g}"),
            lhs: "(Ta1 F2 Ta1^-1)^2".into(),
            rhs: "1".into(),
            lhs_value: conjugated.pow(2)?,
            rhs_value: SympMatrix::identity(g),
        },
    ])
}

/// `T_d = (T_x T_a^-1)(f3 T_x T_a^-1 f3^-1)(f3^2 T_x T_a^-1 f3^-2)`, which for
/// the lantern in `S_g` reads `T_{c1}` in terms of `T_{a2} T_{a1}^-1` and `f3`.
pub fn lantern_assembly_check(lantern: &LanternConfiguration, f3: &SympMatrix) -> Result<IdentityCheck> {
    let g = lantern.system.genus();
    let mut asg = twist_assignment(&lantern.system)?;
    asg.insert(GeneratorSymbol::F3, f3.clone());
    let d = MappingWord::twist(lantern.boundary[3], 1);
    let step = MappingWord::twist(lantern.interior[0], 1).then(&MappingWord::twist(lantern.boundary[0], -1));
    let h = MappingWord::letter(GeneratorSymbol::F3, 1);
    let h2 = MappingWord::letter(GeneratorSymbol::F3, 2);
    let rhs = step.then(&step.conjugate_by(&h)).then(&step.conjugate_by(&h2));
    IdentityCheck::from_words(format!("lantern assembly g={g}"), &d, &rhs, &asg, g)
}

/// Default orbit cap `10 (3g - 1) g`.
pub fn default_orbit_cap(g: usize) -> usize {
    10 * (3 * g - 1) * g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitVerdict {
    /// Every target was reached.
    Contained,
    /// The orbit closed without reaching every target.
    NotContained,
    /// The cap was hit before a decision.
    Inconclusive,
}

/// Breadth-first closure of a set of curve classes, identified up to sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSet {
    /// Canonical representatives in discovery order.
    pub members: Vec<HomologyClass>,
    /// Number of distinct generator actions used (generators and inverses).
    pub generator_count: usize,
    /// Completed BFS levels.
    pub depth: usize,
    /// True when no new class appeared at the last level.
    pub closed: bool,
    pub missing: Vec<HomologyClass>,
    pub verdict: OrbitVerdict,
}

impl OrbitSet {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, c: &HomologyClass) -> bool {
        self.members.contains(&c.canonical())
    }
}

/// Expands the seeds level by level under the generators and their inverses
/// until every target is reached (at a level boundary), the orbit closes, or
/// more than `cap` classes are held. On hitting the cap the unfinished level
/// is discarded. Either way the reported set is a word-metric ball, so it
/// does not depend on the order of the generators.
pub fn orbit_closure(
    generators: &[SympMatrix],
    seeds: &[HomologyClass],
    targets: &[HomologyClass],
    cap: usize,
) -> Result<OrbitSet> {
    let mut actions: Vec<SympMatrix> = Vec::new();
    for m in generators.iter().flat_map(|m| [m.clone(), m.inverse()]) {
        if !actions.contains(&m) {
            actions.push(m);
        }
    }
    let targets: Vec<HomologyClass> = targets.iter().map(HomologyClass::canonical).collect();
    let mut seen: HashSet<HomologyClass> = HashSet::new();
    let mut members = Vec::new();
    let mut frontier = Vec::new();
    for s in seeds {
        let c = s.canonical();
        if seen.insert(c.clone()) {
            members.push(c.clone());
            frontier.push(c);
        }
    }
    let missing = |seen: &HashSet<HomologyClass>| -> Vec<HomologyClass> {
        targets.iter().filter(|t| !seen.contains(*t)).cloned().collect()
    };
    let mut depth = 0;
    loop {
        if missing(&seen).is_empty() {
            return Ok(OrbitSet {
                members,
                generator_count: actions.len(),
                depth,
                closed: frontier.is_empty(),
                missing: Vec::new(),
                verdict: OrbitVerdict::Contained,
            });
        }
        let mut next = Vec::new();
        let level_start = members.len();
        for v in &frontier {
            for m in &actions {
                let w = m.apply(v)?.canonical();
                if seen.insert(w.clone()) {
                    if seen.len() > cap {
                        // drop the partial level; what remains is a full ball
                        members.truncate(level_start);
                        let held: HashSet<HomologyClass> = members.iter().cloned().collect();
                        return Ok(OrbitSet {
                            missing: missing(&held),
                            members,
                            generator_count: actions.len(),
                            depth,
                            closed: false,
                            verdict: OrbitVerdict::Inconclusive,
                        });
                    }
                    members.push(w.clone());
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            return Ok(OrbitSet {
                missing: missing(&seen),
                members,
                generator_count: actions.len(),
                depth,
                closed: true,
                verdict: OrbitVerdict::NotContained,
            });
        }
        frontier = next;
        depth += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupOrder {
    Exact(u64),
    ExceedsCap { explored: u64 },
}

enum Arith {
    F2 { n: usize, gens: Vec<F2Matrix> },
    Generic { p: u32, n: usize, gens: Vec<FpMatrix> },
}

impl Arith {
    fn new(generators: &[FpMatrix], p: u32, n: usize) -> Result<Self> {
        if p == 2 && n <= 8 {
            let gens = generators.iter().map(|m| F2Matrix::from_fp(m).expect("checked shape")).collect();
            return Ok(Arith::F2 { n, gens });
        }
        // every element is packed, so the identity's encoding decides
        FpMatrix::identity(p, n)?.pack()?;
        Ok(Arith::Generic { p, n, gens: generators.to_vec() })
    }

    fn identity_key(&self) -> u128 {
        match self {
            Arith::F2 { n, .. } => u128::from(F2Matrix::identity(*n).key()),
            Arith::Generic { p, n, .. } => FpMatrix::identity(*p, *n).and_then(|m| m.pack()).expect("checked"),
        }
    }

    fn len(&self) -> usize {
        match self {
            Arith::F2 { gens, .. } => gens.len(),
            Arith::Generic { gens, .. } => gens.len(),
        }
    }

    fn step(&self, key: u128, gi: usize) -> u128 {
        match self {
            Arith::F2 { n, gens } => u128::from(F2Matrix::from_key(*n, key as u64).mul(gens[gi]).key()),
            Arith::Generic { p, n, gens } => FpMatrix::unpack(*p, *n, key).mul(&gens[gi]).pack().expect("checked"),
        }
    }

    fn key_of(&self, m: &FpMatrix) -> Result<u128> {
        match self {
            Arith::F2 { .. } => Ok(u128::from(F2Matrix::from_fp(m).expect("checked shape").key())),
            Arith::Generic { .. } => m.pack(),
        }
    }
}

/// The subgroup of `Sp(2g, F_p)` generated by some matrices, enumerated by
/// hash-set BFS over right multiplication by the generators.
pub struct SubgroupEnumeration {
    arith: Arith,
    order: SubgroupOrder,
    elements: HashSet<u128>,
    parents: Option<HashMap<u128, (u128, u32)>>,
}

impl SubgroupEnumeration {
    pub fn order(&self) -> SubgroupOrder {
        self.order
    }

    pub fn contains(&self, m: &FpMatrix) -> bool {
        self.arith.key_of(m).is_ok_and(|k| self.elements.contains(&k))
    }

    /// Generator indices `i_1..i_k` with `m = g_{i_1} ... g_{i_k}`, when
    /// witnesses were recorded.
    pub fn witness(&self, m: &FpMatrix) -> Option<Vec<usize>> {
        let parents = self.parents.as_ref()?;
        let id = self.arith.identity_key();
        let mut key = self.arith.key_of(m).ok()?;
        let mut path = Vec::new();
        while key != id {
            let &(parent, gi) = parents.get(&key)?;
            path.push(gi as usize);
            key = parent;
        }
        path.reverse();
        Some(path)
    }
}

pub fn enumerate_subgroup(generators: &[FpMatrix], cap: u64, witness: bool) -> Result<SubgroupEnumeration> {
    let (p, n) = match generators.first() {
        Some(m) => (m.prime(), m.dim()),
        None => return Err(Error::Precondition("no generators".into())),
    };
    if let Some(bad) = generators.iter().find(|m| (m.prime(), m.dim()) != (p, n)) {
        return Err(Error::DimensionMismatch { expected: n, found: bad.dim() });
    }
    let arith = Arith::new(generators, p, n)?;
    let id = arith.identity_key();
    let mut elements = HashSet::new();
    let mut parents = witness.then(HashMap::new);
    elements.insert(id);
    let mut queue = vec![id];
    let mut head = 0;
    let mut order = None;
    'bfs: while head < queue.len() {
        let x = queue[head];
        head += 1;
        for gi in 0..arith.len() {
            let y = arith.step(x, gi);
            if elements.insert(y) {
                if let Some(par) = parents.as_mut() {
                    par.insert(y, (x, gi as u32));
                }
                if elements.len() as u64 > cap {
                    order = Some(SubgroupOrder::ExceedsCap { explored: elements.len() as u64 });
                    break 'bfs;
                }
                queue.push(y);
            }
        }
    }
    let order = order.unwrap_or(SubgroupOrder::Exact(elements.len() as u64));
    Ok(SubgroupEnumeration { arith, order, elements, parents })
}

/// Order of the subgroup generated by the mod-p images of `generators`.
pub fn modp_subgroup_order(generators: &[SympMatrix], p: u32, cap: u64) -> Result<SubgroupOrder> {
    let reduced: Vec<FpMatrix> = generators.iter().map(|m| m.reduce_mod_p(p)).collect::<Result<_>>()?;
    Ok(enumerate_subgroup(&reduced, cap, false)?.order())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transitivity {
    pub orbit_size: u64,
    /// `p^{2g} - 1`.
    pub nonzero_vectors: u64,
}

impl Transitivity {
    pub fn is_transitive(&self) -> bool {
        self.orbit_size == self.nonzero_vectors
    }
}

const MAX_VECTOR_SPACE: u64 = 1 << 28;

/// Orbit of `alpha_1` among the nonzero vectors of `F_p^{2g}`.
pub fn modp_transitivity(generators: &[SympMatrix], p: u32) -> Result<Transitivity> {
    check_prime(p)?;
    let Some(first) = generators.first() else {
        return Err(Error::Precondition("no generators".into()));
    };
    let n = first.dim();
    let total = u64::from(p)
        .checked_pow(n as u32)
        .filter(|&t| t <= MAX_VECTOR_SPACE)
        .ok_or(Error::EncodingTooLarge { prime: p, size: n })?;
    let reduced: Vec<FpMatrix> = generators.iter().map(|m| m.reduce_mod_p(p)).collect::<Result<_>>()?;
    let encode = |v: &[u8]| v.iter().rev().fold(0u64, |acc, &x| acc * u64::from(p) + u64::from(x));
    let decode = |mut k: u64| -> Vec<u8> {
        (0..n)
            .map(|_| {
                let d = (k % u64::from(p)) as u8;
                k /= u64::from(p);
                d
            })
            .collect()
    };
    let mut seen = vec![false; total as usize];
    let mut start = vec![0u8; n];
    start[0] = 1;
    let s = encode(&start);
    seen[s as usize] = true;
    let mut queue = vec![s];
    let mut head = 0;
    while head < queue.len() {
        let v = decode(queue[head]);
        head += 1;
        for m in &reduced {
            let w = encode(&m.apply(&v));
            if !seen[w as usize] {
                seen[w as usize] = true;
                queue.push(w);
            }
        }
    }
    Ok(Transitivity { orbit_size: queue.len() as u64, nonzero_vectors: total - 1 })
}
