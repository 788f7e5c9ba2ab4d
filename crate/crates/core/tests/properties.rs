use proptest::prelude::*;
use torsion_mcg::curves::{lickorish_curves, CurveName, NamedCurve};
use torsion_mcg::symplectic::{symplectic_form, transvection, HomologyClass, SympMatrix};
use torsion_mcg::torsion::TorsionGenerators;
use torsion_mcg::word::{check_braid, check_commuting, check_conjugacy, evaluate, GeneratorSymbol, MappingWord};

fn class(g: usize, coords: Vec<i64>) -> HomologyClass {
    HomologyClass::new(g, coords).unwrap()
}

fn small_class(g: usize) -> impl Strategy<Value = HomologyClass> {
    prop::collection::vec(-2i64..=2, 2 * g).prop_map(move |v| class(g, v))
}

/// Random words over the Lickorish twists of genus `g`.
fn lickorish_word(g: usize) -> impl Strategy<Value = MappingWord> {
    let names: Vec<CurveName> = lickorish_curves(g).unwrap().curves().iter().map(|c| c.name()).collect();
    prop::collection::vec((0..names.len(), prop_oneof![Just(-1i64), Just(1), Just(2), Just(-2)]), 0..=20)
        .prop_map(move |v| MappingWord::new(v.into_iter().map(|(i, e)| (GeneratorSymbol::TwistOf(names[i]), e))))
}

fn genus_and_word() -> impl Strategy<Value = (usize, MappingWord)> {
    (2usize..=4).prop_flat_map(|g| (Just(g), lickorish_word(g)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn form_is_antisymmetric((x, y) in (1usize..=4).prop_flat_map(|g| (small_class(g), small_class(g)))) {
        prop_assert_eq!(symplectic_form(&x, &y).unwrap(), -symplectic_form(&y, &x).unwrap());
        prop_assert_eq!(symplectic_form(&x, &x).unwrap(), 0);
    }

    #[test]
    fn transvections_preserve_the_form((c, x, y) in (1usize..=4).prop_flat_map(|g| (small_class(g), small_class(g), small_class(g)))) {
        let t = transvection(&c).unwrap();
        prop_assert!(t.is_symplectic().unwrap());
        let tx = t.apply(&x).unwrap();
        let ty = t.apply(&y).unwrap();
        prop_assert_eq!(symplectic_form(&tx, &ty).unwrap(), symplectic_form(&x, &y).unwrap());
        prop_assert_eq!(t.apply(&c).unwrap(), c);
    }

    #[test]
    fn word_evaluation_is_a_homomorphism((g, w) in genus_and_word(), k in 0usize..=20) {
        let asg = torsion_mcg::word::twist_assignment(&lickorish_curves(g).unwrap()).unwrap();
        let m = evaluate(&w, &asg, g).unwrap();
        prop_assert!(m.is_symplectic().unwrap());
        prop_assert_eq!(evaluate(&w.reduce(), &asg, g).unwrap(), m.clone());
        prop_assert!(evaluate(&w.then(&w.inverse()), &asg, g).unwrap().is_identity());
        prop_assert_eq!(evaluate(&w.inverse(), &asg, g).unwrap(), m.inverse());

        let cut = k.min(w.len());
        let (u, v) = w.letters().split_at(cut);
        let (u, v) = (MappingWord::new(u.iter().copied()), MappingWord::new(v.iter().copied()));
        let (mu, mv) = (evaluate(&u, &asg, g).unwrap(), evaluate(&v, &asg, g).unwrap());
        prop_assert_eq!(mu.mul(&mv).unwrap(), m.clone());
        // (uv)^-1 = v^-1 u^-1
        prop_assert_eq!(m.inverse(), mv.inverse().mul(&mu.inverse()).unwrap());
    }

    #[test]
    fn conjugacy_relation_holds(g in 3usize..=6, picks in prop::collection::vec(0usize..64, 1..6), coords in prop::collection::vec(-3i64..=3, 12)) {
        let gens = TorsionGenerators::build(g).unwrap();
        let curves = lickorish_curves(g).unwrap();
        // f: a short product of torsion generators and twists
        let pool: Vec<SympMatrix> = gens.matrices().into_iter()
            .chain(curves.curves().iter().map(|c| c.twist().unwrap()))
            .collect();
        let f = picks.iter().fold(SympMatrix::identity(g), |acc, &k| acc.mul(&pool[k % pool.len()]).unwrap());
        let cls = class(g, coords[..2 * g].to_vec());
        prop_assume!(cls.is_primitive());
        let c = NamedCurve::new(CurveName::A(1), cls).unwrap();
        prop_assert!(check_conjugacy(&f, &c).unwrap().holds());
    }

    #[test]
    fn pairing_decides_commute_or_braid(g in 2usize..=4, i in 0usize..12, j in 0usize..12) {
        let sys = lickorish_curves(g).unwrap();
        let names: Vec<CurveName> = sys.curves().iter().map(|c| c.name()).collect();
        let (u, v) = (names[i % names.len()], names[j % names.len()]);
        match symplectic_form(sys.class(u).unwrap(), sys.class(v).unwrap()).unwrap().abs() {
            0 => prop_assert!(check_commuting(&sys, u, v).unwrap().holds()),
            1 => prop_assert!(check_braid(&sys, u, v).unwrap().holds()),
            n => prop_assert!(false, "unexpected pairing {}", n),
        }
    }
}

#[test]
fn matrix_inverse_reverses_products() {
    let g = 3;
    let sys = lickorish_curves(g).unwrap();
    let ms: Vec<SympMatrix> = sys.curves().iter().map(|c| c.twist().unwrap()).collect();
    let prod = ms.iter().fold(SympMatrix::identity(g), |a, m| a.mul(m).unwrap());
    let rev = ms.iter().rev().fold(SympMatrix::identity(g), |a, m| a.mul(&m.inverse()).unwrap());
    assert_eq!(prod.inverse(), rev);
}
