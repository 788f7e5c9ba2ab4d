use std::time::Instant;

use serde_json::Value;
use torsion_mcg::curves::{lantern_configuration, lickorish_curves, CurveName};
use torsion_mcg::modp::{symplectic_group_order, FpMatrix};
use torsion_mcg::torsion::{certificate_curves, TorsionCertificate, TorsionGenerators};
use torsion_mcg::verify::{
    enumerate_subgroup, lantern_assembly_check, luo_decomposition_check, modp_transitivity, orbit_closure,
    OrbitVerdict, SubgroupOrder,
};
use torsion_mcg::word::{check_braid, check_chain, check_commuting, check_lantern};
use torsion_mcg::{ElementOrder, HomologyClass, SympMatrix};

use crate::config::{Check, RunConfig};
use crate::report::{CheckReport, Item, Section, Verdict};
use crate::VerifyError;

type Result<T> = std::result::Result<T, VerifyError>;

/// Commutation and braid relations among the Lickorish curves, chain
/// relations of every length that fits, and the lantern in both forms.
pub fn relations(g: usize) -> Result<Section> {
    let sys = lickorish_curves(g)?;
    let mut items = Vec::new();
    let names: Vec<CurveName> = sys.curves().iter().map(|c| c.name()).collect();
    for (k, &u) in names.iter().enumerate() {
        for &v in &names[k + 1..] {
            match sys.table().get(u, v) {
                Some(0) => items.push(Item::identity(&check_commuting(&sys, u, v)?)),
                Some(1) => items.push(Item::identity(&check_braid(&sys, u, v)?)),
                _ => {}
            }
        }
    }
    for t in 2..=2 * g {
        items.push(Item::identity(&check_chain(t, g)?));
    }
    if g >= 3 {
        items.extend(check_lantern(g)?.iter().map(Item::identity));
    }
    Ok(Section::new("relations", items))
}

fn certificate_item(cert: &TorsionCertificate) -> Item {
    let action: Vec<Value> = cert
        .curve_action()
        .iter()
        .map(|a| Value::from(format!("{} -> {}{}", a.from, if a.sign < 0 { "-" } else { "" }, a.to)))
        .collect();
    Item::new(format!("{} has order {}", cert.name(), cert.claimed_order()), Verdict::Pass)
        .fact("order", cert.claimed_order())
        .fact("curve_action", action)
}

fn order_item(label: String, m: &SympMatrix, expected: u64) -> Result<Item> {
    let order = m.element_order(expected)?;
    let found = match order {
        ElementOrder::Finite(n) => Value::from(n),
        ElementOrder::ExceedsBound => Value::from(format!("> {expected}")),
    };
    Ok(Item::new(label, Verdict::from_bool(order == ElementOrder::Finite(expected))).fact("order", found))
}

/// Orders and curve actions of the torsion generators. Certificates are
/// re-verified against the curve system they were built on.
pub fn torsion(g: usize) -> Result<Section> {
    let gens = TorsionGenerators::build(g)?;
    let curves = certificate_curves(g)?;
    let mut items = Vec::new();
    for cert in gens.certificates() {
        let mut item = certificate_item(cert);
        if let Err(e) = cert.verify(&curves) {
            item.verdict = Verdict::Fail;
            item.facts.insert("error".into(), Value::from(e.to_string()));
        }
        items.push(item);
    }
    let shift = gens.f2.matrix().mul(gens.f1.matrix())?;
    items.push(order_item(format!("f2 f1 has order {g}"), &shift, g as u64)?);
    let f3 = gens.f3.matrix();
    items.push(Item::new("f3 is not the identity", Verdict::from_bool(!f3.is_identity())));
    if let Some(x) = &gens.genus3 {
        let image = x.tau.matrix().apply(&HomologyClass::alpha(g, 3))?;
        let target = curves.class(x.tau_target)?;
        let ok = x.tau.claimed_order() == 2 && image.sign_relative_to(target).is_some();
        items.push(
            Item::new("tau = S^-1 f1 S is an involution sending a3 to a b curve", Verdict::from_bool(ok))
                .fact("tau_a3", format!("{image}"))
                .fact("target", x.tau_target.to_string()),
        );
    }
    Ok(Section::new("torsion", items))
}

fn twist_classes(g: usize) -> Result<Vec<HomologyClass>> {
    Ok(lickorish_curves(g)?.curves().iter().map(|c| c.class().clone()).collect())
}

/// Replays the generation argument: the Luo decomposition of
/// `T_{a2} T_{a1}^-1`, the lantern assembly of `T_{c1}`, the single orbit of
/// the Lickorish classes, and the size of the generating set.
pub fn theorem(g: usize, orbit_cap: usize) -> Result<Section> {
    let gens = TorsionGenerators::build(g)?;
    let lickorish = lickorish_curves(g)?;
    let lantern = lantern_configuration(g)?;
    let identity = SympMatrix::identity(g);
    let mut items = Vec::new();

    let names: Vec<Value> = gens.certificates().iter().map(|c| Value::from(c.name())).collect();
    let expected = if g == 3 { 5 } else { 4 };
    items.push(
        Item::new(format!("{} torsion generators", names.len()), Verdict::from_bool(names.len() == expected))
            .fact("generators", names)
            .fact("involutions", gens.involution_count()),
    );

    items.extend(luo_decomposition_check(&lickorish, gens.f2.matrix())?.iter().map(Item::identity));
    let control = &luo_decomposition_check(&lickorish, &identity)?[0];
    items.push(Item::negative_control("luo with f2 = 1", control));

    items.push(Item::identity(&lantern_assembly_check(&lantern, gens.f3.matrix())?));
    let control = lantern_assembly_check(&lantern, &identity)?;
    items.push(Item::negative_control("lantern assembly with f3 = 1", &control));

    let targets = twist_classes(g)?;
    let orbit = orbit_closure(&gens.matrices(), &[HomologyClass::alpha(g, 1)], &targets, orbit_cap)?;
    let verdict = match orbit.verdict {
        OrbitVerdict::Contained => Verdict::Pass,
        OrbitVerdict::NotContained => Verdict::Fail,
        OrbitVerdict::Inconclusive => Verdict::Inconclusive,
    };
    let mut item = Item::new(
        format!("orbit of a1 contains all {} Lickorish classes (necessary condition)", targets.len()),
        verdict,
    )
    .fact("orbit_size", orbit.size())
    .fact("depth", orbit.depth)
    .fact("cap", orbit_cap)
    .fact("closed", orbit.closed);
    if !orbit.missing.is_empty() {
        let missing: Vec<Value> = orbit.missing.iter().map(|c| Value::from(c.to_string())).collect();
        item = item.fact("missing", missing);
    }
    items.push(item);
    Ok(Section::new("theorem", items))
}

fn order_value(o: SubgroupOrder) -> Value {
    match o {
        SubgroupOrder::Exact(n) => Value::from(n),
        SubgroupOrder::ExceedsCap { explored } => Value::from(format!("more than {} (cap)", explored - 1)),
    }
}

fn words(path: &[usize], names: &[String]) -> Vec<String> {
    if path.is_empty() {
        return vec!["1".into()];
    }
    path.iter().map(|&i| if names[i].contains(' ') { format!("({})", names[i]) } else { names[i].clone() }).collect()
}

/// Mod-p generation. When `|Sp(2g, p)|` is within the enumeration cap both
/// the torsion images and the Lickorish twist images are enumerated and
/// compared with the order formula; otherwise the weaker transitivity
/// certificate is reported.
pub fn modp(g: usize, p: u32, enum_cap: u64, witness: bool) -> Result<Section> {
    let gens = TorsionGenerators::build(g)?;
    let sys = lickorish_curves(g)?;
    let torsion_names: Vec<String> = gens.certificates().iter().map(|c| c.name().to_string()).collect();
    let twist_names: Vec<String> = sys.curves().iter().map(|c| format!("T{}", c.name())).collect();
    let reduce = |ms: &[SympMatrix]| -> Result<Vec<FpMatrix>> {
        Ok(ms.iter().map(|m| m.reduce_mod_p(p)).collect::<std::result::Result<_, _>>()?)
    };
    let torsion = reduce(&gens.matrices())?;
    let twists = reduce(&sys.curves().iter().map(|c| c.twist()).collect::<std::result::Result<Vec<_>, _>>()?)?;

    let target = symplectic_group_order(g as u32, u64::from(p));
    let mut items = Vec::new();
    match target {
        Some(order) if order <= u128::from(enum_cap) => {
            let order = order as u64;
            let by_torsion = enumerate_subgroup(&torsion, enum_cap, witness)?;
            let by_twists = enumerate_subgroup(&twists, enum_cap, witness)?;
            let mut a = Item::new(
                format!("torsion images generate Sp({}, {p})", 2 * g),
                Verdict::from_bool(by_torsion.order() == SubgroupOrder::Exact(order)),
            )
            .fact("order", order_value(by_torsion.order()))
            .fact("expected", order);
            let mut b = Item::new(
                format!("twist images generate Sp({}, {p})", 2 * g),
                Verdict::from_bool(by_twists.order() == SubgroupOrder::Exact(order)),
            )
            .fact("order", order_value(by_twists.order()))
            .fact("expected", order);
            let same = torsion.iter().all(|m| by_twists.contains(m)) && twists.iter().all(|m| by_torsion.contains(m));
            if witness {
                for (m, name) in twists.iter().zip(&twist_names) {
                    if let Some(path) = by_torsion.witness(m) {
                        a.witnesses.insert(name.clone(), words(&path, &torsion_names));
                    }
                }
                for (m, name) in torsion.iter().zip(&torsion_names) {
                    if let Some(path) = by_twists.witness(m) {
                        b.witnesses.insert(name.clone(), words(&path, &twist_names));
                    }
                }
            }
            items.push(a);
            items.push(b);
            items.push(Item::new("each set lies in the group of the other", Verdict::from_bool(same)));
        }
        _ => {
            let t = modp_transitivity(&gens.matrices(), p)?;
            items.push(
                Item::new(
                    format!(
                        "torsion images act transitively on nonzero vectors of F_{p}^{} (weaker certificate)",
                        2 * g
                    ),
                    Verdict::from_bool(t.is_transitive()),
                )
                .fact("orbit_size", t.orbit_size)
                .fact("nonzero_vectors", t.nonzero_vectors)
                .fact("group_order", target.map_or(Value::from("overflow"), |o| Value::from(o.to_string())))
                .fact("enum_cap", enum_cap),
            );
        }
    }
    Ok(Section::new("modp", items))
}

fn conventions(config: &RunConfig) -> Result<Vec<String>> {
    let g = config.genus;
    let mut out = vec![
        "basis A1..Ag, B1..Bg with <Ai, Bi> = 1".to_string(),
        "twist about c acts as x -> x + <x, c> c".to_string(),
        "products compose right to left".to_string(),
        "curve classes compared up to sign, first nonzero coordinate positive".to_string(),
    ];
    let curves = if g >= 3 { certificate_curves(g)? } else { lickorish_curves(g)? };
    out.extend(curves.conventions().iter().cloned());
    if config.checks.iter().any(|c| *c != Check::Relations) {
        let gens = TorsionGenerators::build(g)?;
        for cert in gens.certificates() {
            let images: Vec<String> = (1..=g)
                .map(|i| {
                    let a = CurveName::A(i);
                    match cert.image_of(a) {
                        Some((to, s)) => format!("{a}->{}{to}", if s < 0 { "-" } else { "" }),
                        None => format!("{a}->?"),
                    }
                })
                .collect();
            out.push(format!("{}: {}", cert.name(), images.join(" ")));
        }
    }
    Ok(out)
}

pub fn run(config: &RunConfig) -> Result<CheckReport> {
    let g = config.genus;
    let mut sections = Vec::new();
    let mut timings = Vec::new();
    for &check in &config.checks {
        let start = Instant::now();
        let section = match check {
            Check::Relations => relations(g)?,
            Check::Torsion => torsion(g)?,
            Check::Theorem => theorem(g, config.orbit_cap())?,
            Check::Modp => {
                let p = config.prime.ok_or_else(|| VerifyError::Config("modp needs a prime".into()))?;
                modp(g, p, config.enum_cap, config.witness)?
            }
        };
        timings.push((section.name.clone(), start.elapsed().as_micros() as u64));
        sections.push(section);
    }
    let checks = config.checks.iter().map(|c| c.name().to_string()).collect();
    let mut report = CheckReport::new(g, checks, conventions(config)?, sections);
    report.timings_us = timings.into_iter().collect();
    Ok(report)
}

/// Every check for genus `g >= 3`, with mod-2 certificates.
pub fn full_theorem_report(g: usize) -> Result<CheckReport> {
    if g < 3 {
        return Err(VerifyError::Config(format!("the theorem needs genus at least 3, got {g}")));
    }
    run(&RunConfig::new(g, &[], Some(2))?)
}
