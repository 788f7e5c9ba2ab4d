//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use mcg_verify::suite;
use mcg_verify::{full_theorem_report, Verdict};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use torsion_mcg::curves::{lantern_configuration, lickorish_curves, CurveName, NamedCurve};
use torsion_mcg::torsion::TorsionGenerators;
use torsion_mcg::verify::{
    default_orbit_cap, lantern_assembly_check, luo_decomposition_check, modp_subgroup_order, modp_transitivity,
    orbit_closure, OrbitVerdict, SubgroupOrder,
};
use torsion_mcg::word::{
    check_chain, check_conjugacy, check_lantern, evaluate, twist_assignment, GeneratorSymbol, MappingWord,
};
use torsion_mcg::{ElementOrder, HomologyClass, SympMatrix};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn relation_suite() -> Outcome {
    let mut count = 0;
    for g in 2..=6 {
        let section = suite::relations(g).map_err(|e| e.to_string())?;
        if let Some(bad) = section.failures().next() {
            return Err(format!("g={g}: {}", bad.label));
        }
        count += section.items.len();
    }
    for t in 2..=4 {
        let chk = check_chain(t, 2).map_err(|e| e.to_string())?;
        ensure(chk.holds(), || format!("chain t={t} g=2"))?;
    }
    let sys = lickorish_curves(2).map_err(|e| e.to_string())?;
    let ta2 = sys.twist(CurveName::A(2)).map_err(|e| e.to_string())?;
    let abc = ["a1", "b1", "c1"]
        .iter()
        .map(|n| sys.twist(n.parse().unwrap()).unwrap())
        .fold(SympMatrix::identity(2), |acc, m| acc.mul(&m).unwrap());
    ensure(abc.pow(4).unwrap() == ta2.pow(2).unwrap(), || "(Ta1 Tb1 Tc1)^4 != Ta2^2".into())?;
    for g in 3..=8 {
        let checks = check_lantern(g).map_err(|e| e.to_string())?;
        ensure(checks.iter().all(|c| c.holds()), || format!("lantern g={g}"))?;
        count += checks.len();
    }
    Ok(format!("{count} identities"))
}

fn torsion_certificates() -> Outcome {
    for g in 3..=8 {
        let gens = TorsionGenerators::build(g).map_err(|e| e.to_string())?;
        let (f1, f2, f3) = (gens.f1.matrix(), gens.f2.matrix(), gens.f3.matrix());
        ensure(f1.pow(2).unwrap().is_identity() && f2.pow(2).unwrap().is_identity(), || {
            format!("g={g}: f1 or f2 not an involution")
        })?;
        let shift = f2.mul(f1).unwrap();
        ensure(shift.element_order(g as u64).unwrap() == ElementOrder::Finite(g as u64), || {
            format!("g={g}: f2 f1 does not have order {g}")
        })?;
        ensure(f3.pow(3).unwrap().is_identity() && !f3.is_identity(), || format!("g={g}: f3 order"))?;
    }
    let gens = TorsionGenerators::build(3).map_err(|e| e.to_string())?;
    let x = gens.genus3.as_ref().ok_or("no genus-3 extras")?;
    let tau = x.tau.matrix();
    let expect = x.sigma.inverse().mul(gens.f1.matrix()).unwrap().mul(&x.sigma).unwrap();
    ensure(*tau == expect && tau.pow(2).unwrap().is_identity() && !tau.is_identity(), || {
        "tau is not the involution S^-1 f1 S".into()
    })?;
    let image = tau.apply(&HomologyClass::alpha(3, 3)).unwrap();
    let target = lickorish_curves(3).unwrap().class(x.tau_target).unwrap().clone();
    ensure(image.sign_relative_to(&target).is_some(), || format!("tau(a3) = {image}"))?;
    Ok(format!("g=3..8; tau(a3) = {image} = +-{}", x.tau_target))
}

fn proof_replay() -> Outcome {
    for g in 3..=8 {
        let gens = TorsionGenerators::build(g).map_err(|e| e.to_string())?;
        let sys = lickorish_curves(g).unwrap();
        let lantern = lantern_configuration(g).unwrap();
        let id = SympMatrix::identity(g);
        let luo = luo_decomposition_check(&sys, gens.f2.matrix()).unwrap();
        ensure(luo.iter().all(|c| c.holds()), || format!("g={g}: Luo decomposition"))?;
        ensure(!luo_decomposition_check(&sys, &id).unwrap()[0].holds(), || format!("g={g}: Luo control holds"))?;
        ensure(lantern_assembly_check(&lantern, gens.f3.matrix()).unwrap().holds(), || {
            format!("g={g}: lantern assembly")
        })?;
        ensure(!lantern_assembly_check(&lantern, &id).unwrap().holds(), || format!("g={g}: lantern control holds"))?;
    }
    Ok("g=3..8, both controls fail".into())
}

fn single_orbit() -> Outcome {
    let mut sizes = Vec::new();
    for g in 3..=8 {
        let gens = TorsionGenerators::build(g).map_err(|e| e.to_string())?;
        let targets: Vec<HomologyClass> =
            lickorish_curves(g).unwrap().curves().iter().map(|c| c.class().clone()).collect();
        ensure(targets.len() == 3 * g - 1, || "wrong class count".into())?;
        let orbit = orbit_closure(&gens.matrices(), &[HomologyClass::alpha(g, 1)], &targets, default_orbit_cap(g))
            .map_err(|e| e.to_string())?;
        ensure(orbit.verdict == OrbitVerdict::Contained, || format!("g={g}: {:?}", orbit.verdict))?;
        sizes.push(format!("g{g}:{}", orbit.size()));
    }
    Ok(format!("orbit sizes {}", sizes.join(" ")))
}

fn mod_two_generation() -> Outcome {
    const SP6_2: u64 = 512 * 3 * 15 * 63;
    let gens = TorsionGenerators::build(3).map_err(|e| e.to_string())?;
    let twists: Vec<SympMatrix> = lickorish_curves(3).unwrap().curves().iter().map(|c| c.twist().unwrap()).collect();
    let a = modp_subgroup_order(&gens.matrices(), 2, 2_000_000).map_err(|e| e.to_string())?;
    let b = modp_subgroup_order(&twists, 2, 2_000_000).map_err(|e| e.to_string())?;
    ensure(a == SubgroupOrder::Exact(SP6_2) && b == a, || format!("torsion {a:?}, twists {b:?}"))?;
    Ok(format!("both orders {SP6_2}"))
}

fn mod_two_transitivity() -> Outcome {
    let mut out = Vec::new();
    for g in 4..=6 {
        let gens = TorsionGenerators::build(g).map_err(|e| e.to_string())?;
        let t = modp_transitivity(&gens.matrices(), 2).map_err(|e| e.to_string())?;
        ensure(t.is_transitive() && t.nonzero_vectors == (1 << (2 * g)) - 1, || format!("g={g}: {t:?}"))?;
        out.push(format!("g{g}:{}", t.orbit_size));
    }
    Ok(out.join(" "))
}

fn infrastructure() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for g in 2..=6 {
        let sys = lickorish_curves(g).unwrap();
        let asg = twist_assignment(&sys).unwrap();
        let names: Vec<CurveName> = sys.curves().iter().map(|c| c.name()).collect();
        for _ in 0..100 {
            let len = rng.random_range(0..=20);
            let w = MappingWord::new((0..len).map(|_| {
                let c = names[rng.random_range(0..names.len())];
                (GeneratorSymbol::TwistOf(c), if rng.random_bool(0.5) { 1 } else { -1 })
            }));
            let cut = rng.random_range(0..=w.len());
            let (u, v) = w.letters().split_at(cut);
            let (u, v) = (MappingWord::new(u.iter().copied()), MappingWord::new(v.iter().copied()));
            let m = evaluate(&w, &asg, g).unwrap();
            let mu = evaluate(&u, &asg, g).unwrap();
            let mv = evaluate(&v, &asg, g).unwrap();
            ensure(m.is_symplectic().unwrap() && mu.mul(&mv).unwrap() == m, || format!("g={g}: word {w}"))?;
            ensure(evaluate(&w.inverse(), &asg, g).unwrap() == m.inverse(), || format!("g={g}: inverse of {w}"))?;
        }
        let pool: Vec<SympMatrix> = match TorsionGenerators::build(g) {
            Ok(t) => t.matrices(),
            Err(_) => names.iter().map(|&n| sys.twist(n).unwrap()).collect(),
        };
        let mut done = 0;
        while done < 100 {
            let f = (0..rng.random_range(1..=5))
                .fold(SympMatrix::identity(g), |acc, _| acc.mul(&pool[rng.random_range(0..pool.len())]).unwrap());
            let coords: Vec<i64> = (0..2 * g).map(|_| rng.random_range(-3..=3)).collect();
            let cls = HomologyClass::new(g, coords).unwrap();
            if !cls.is_primitive() {
                continue;
            }
            let c = NamedCurve::new(CurveName::A(1), cls).unwrap();
            ensure(check_conjugacy(&f, &c).unwrap().holds(), || format!("g={g}: conjugacy"))?;
            done += 1;
        }
    }
    let first = full_theorem_report(4).map_err(|e| e.to_string())?;
    let second = full_theorem_report(4).map_err(|e| e.to_string())?;
    ensure(first.verdict == Verdict::Pass, || "genus-4 report did not pass".into())?;
    ensure(first.comparable().to_json() == second.comparable().to_json(), || "reports differ".into())?;
    Ok("100 words and 100 conjugacy pairs per genus 2..6, stable report".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 relation suite", relation_suite, Duration::from_secs(10)),
        ("2 torsion certificates", torsion_certificates, Duration::from_secs(10)),
        ("3 proof replay", proof_replay, Duration::from_secs(5)),
        ("4 single orbit", single_orbit, Duration::from_secs(10)),
        ("5 mod-2 generation, genus 3", mod_two_generation, Duration::from_secs(120)),
        ("6 mod-2 transitivity", mod_two_transitivity, Duration::from_secs(10)),
        ("7 infrastructure properties", infrastructure, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (name, check, budget) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (verdict, detail) = match outcome {
            Ok(_) if elapsed > budget => ("FAIL", format!("took longer than {budget:?}")),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {name}: {verdict} ({:.2} s) {detail}", elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
