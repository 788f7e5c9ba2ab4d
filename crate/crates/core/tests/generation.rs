use std::time::Instant;

use torsion_mcg::curves::lickorish_curves;
use torsion_mcg::modp::FpMatrix;
use torsion_mcg::symplectic::{HomologyClass, SympMatrix};
use torsion_mcg::torsion::TorsionGenerators;
use torsion_mcg::verify::{
    default_orbit_cap, enumerate_subgroup, modp_subgroup_order, modp_transitivity, orbit_closure, OrbitVerdict,
    SubgroupOrder,
};

fn lickorish_classes(g: usize) -> Vec<HomologyClass> {
    lickorish_curves(g).unwrap().curves().iter().map(|c| c.class().clone()).collect()
}

#[test]
fn single_orbit_with_default_cap() {
    for g in 3..=8 {
        let start = Instant::now();
        let gens = TorsionGenerators::build(g).unwrap();
        let targets = lickorish_classes(g);
        let seed = [HomologyClass::alpha(g, 1)];
        let orbit = orbit_closure(&gens.matrices(), &seed, &targets, default_orbit_cap(g)).unwrap();
        println!("g={g} orbit size {} depth {} in {:?}", orbit.size(), orbit.depth, start.elapsed());
        assert_eq!(orbit.verdict, OrbitVerdict::Contained, "g={g} missing {:?}", orbit.missing);
        assert!(targets.iter().all(|t| orbit.contains(t)));
    }
}

#[test]
fn identity_orbit_is_the_seed() {
    let g = 4;
    let seed = [HomologyClass::alpha(g, 1)];
    let orbit = orbit_closure(&[SympMatrix::identity(g)], &seed, &lickorish_classes(g), 100).unwrap();
    assert!(orbit.closed);
    assert_eq!(orbit.members, vec![HomologyClass::alpha(g, 1)]);
    assert_eq!(orbit.verdict, OrbitVerdict::NotContained);
}

#[test]
fn orbit_ignores_generator_order_and_grows_with_cap() {
    let g = 5;
    let gens = TorsionGenerators::build(g).unwrap().matrices();
    let mut rev = gens.clone();
    rev.reverse();
    let seed = [HomologyClass::alpha(g, 1)];
    let targets = lickorish_classes(g);
    let mut previous: Option<usize> = None;
    for cap in [1, 5, 20, 60, default_orbit_cap(g)] {
        let a = orbit_closure(&gens, &seed, &targets, cap).unwrap();
        let b = orbit_closure(&rev, &seed, &targets, cap).unwrap();
        let mut am = a.members.clone();
        let mut bm = b.members.clone();
        am.sort();
        bm.sort();
        assert_eq!(am, bm, "cap {cap}");
        assert_eq!(a.verdict, b.verdict);
        if a.verdict == OrbitVerdict::Contained {
            assert!(previous.is_none_or(|p| p <= a.size()));
        }
        previous = Some(a.size());
    }
    // too small a cap never claims containment
    let tiny = orbit_closure(&gens, &seed, &targets, 1).unwrap();
    assert_eq!(tiny.verdict, OrbitVerdict::Inconclusive);
}

#[test]
fn transitivity_mod_two() {
    for (g, vectors) in [(4, 255), (5, 1023), (6, 4095)] {
        let gens = TorsionGenerators::build(g).unwrap().matrices();
        let t = modp_transitivity(&gens, 2).unwrap();
        assert_eq!(t.nonzero_vectors, vectors);
        assert!(t.is_transitive(), "g={g}");
        assert!(!modp_transitivity(&[SympMatrix::identity(g)], 2).unwrap().is_transitive());
    }
}

#[test]
fn subgroup_orders_divide() {
    // genus 2 mod 2: Sp(4, 2) has order 720
    let g = 2;
    let twists: Vec<SympMatrix> = lickorish_curves(g).unwrap().curves().iter().map(|c| c.twist().unwrap()).collect();
    let full = modp_subgroup_order(&twists, 2, 10_000).unwrap();
    assert_eq!(full, SubgroupOrder::Exact(720));
    for k in 1..twists.len() {
        let SubgroupOrder::Exact(part) = modp_subgroup_order(&twists[..k], 2, 10_000).unwrap() else {
            panic!("cap hit");
        };
        assert_eq!(720 % part, 0, "{k} generators gave {part}");
    }
    assert_eq!(modp_subgroup_order(&[SympMatrix::identity(g)], 2, 10).unwrap(), SubgroupOrder::Exact(1));
    assert_eq!(modp_subgroup_order(&twists, 3, 10).unwrap(), SubgroupOrder::ExceedsCap { explored: 11 });
}

#[test]
fn genus_three_generating_sets_agree_mod_two() {
    let g = 3;
    let torsion: Vec<_> =
        TorsionGenerators::build(g).unwrap().matrices().iter().map(|m| m.reduce_mod_p(2).unwrap()).collect();
    let twists: Vec<_> =
        lickorish_curves(g).unwrap().curves().iter().map(|c| c.twist().unwrap().reduce_mod_p(2).unwrap()).collect();
    let by_torsion = enumerate_subgroup(&torsion, 2_000_000, true).unwrap();
    let by_twists = enumerate_subgroup(&twists, 2_000_000, true).unwrap();
    assert_eq!(by_torsion.order(), SubgroupOrder::Exact(1_451_520));
    assert_eq!(by_twists.order(), SubgroupOrder::Exact(1_451_520));
    let id = FpMatrix::identity(2, 2 * g).unwrap();
    let replay = |gens: &[FpMatrix], path: Vec<usize>| path.iter().fold(id.clone(), |acc, &i| acc.mul(&gens[i]));
    for t in &twists {
        let path = by_torsion.witness(t).expect("twist reached by torsion generators");
        assert_eq!(&replay(&torsion, path), t);
    }
    for f in &torsion {
        let path = by_twists.witness(f).expect("torsion generator reached by twists");
        assert_eq!(&replay(&twists, path), f);
    }
}
