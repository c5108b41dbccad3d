use chain_algebra::{boundary, parse_chain, Chain, GradedTerm, XSet};
use cocycle_lib::{mochizuki_value, parse_triple_points, weight_sum, CocycleError, Sign, ThreeCocycle, TriplePoint};
use proptest::prelude::*;
use quandle_core::FiniteQuandle;

fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

// plain i128 evaluation of the formula, fine for n <= 11
fn zeta_oracle(n: i128, a: i128, b: i128, c: i128) -> u64 {
    let p = n as u32;
    let num = (a - b) * (b.pow(p) + (2 * c - b).pow(p) - 2 * c.pow(p));
    assert_eq!(num % n, 0);
    (num / n).rem_euclid(n) as u64
}

#[test]
fn mochizuki_matches_direct_formula() {
    for n in [3u64, 5, 7, 11] {
        let z = ThreeCocycle::mochizuki(n as usize).unwrap();
        for a in 0..n as u8 {
            for b in 0..n as u8 {
                for c in 0..n as u8 {
                    let expected = if a == b || b == c { 0 } else { zeta_oracle(n as i128, a as i128, b as i128, c as i128) };
                    assert_eq!(z.value(a, b, c), expected, "n={n} ({a},{b},{c})");
                }
            }
        }
    }
}

#[test]
fn mochizuki_degenerate_and_invalid() {
    for a in 0..7 {
        for b in 0..7 {
            assert_eq!(mochizuki_value(7, a, b, b).unwrap(), 0);
        }
    }
    for n in [1, 2, 4, 9, 15] {
        assert!(matches!(ThreeCocycle::mochizuki(n), Err(CocycleError::InvalidParameter(_))));
    }
}

#[test]
fn conditions_hold() {
    for n in [3, 5, 7, 11] {
        let report = ThreeCocycle::mochizuki(n).unwrap().verify_cocycle_condition().unwrap();
        assert!(report.passed(), "zeta{n}: {:?}", &report.failures[..1]);
        assert_eq!(report.checked, n * (n - 1).pow(3));
    }
    let report = ThreeCocycle::octahedral_eta().unwrap().verify_cocycle_condition().unwrap();
    assert!(report.passed());
    assert_eq!(report.checked, 750);
}

#[test]
fn perturbed_eta_fails() {
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    let bad = eta.with_value([0, 1, 2], 2);
    let report = bad.verify_cocycle_condition().unwrap();
    assert!(!report.passed());
    // the witness really pairs nontrivially with the perturbed table
    let (w, r) = report.failures[0];
    let gen = Chain::from_terms(4, XSet::Trivial, [(GradedTerm::trivial(&w).unwrap(), 1)]).unwrap();
    assert_eq!(bad.evaluate(&boundary(&gen, bad.quandle()).unwrap()).unwrap(), r);
}

#[test]
fn eta_values() {
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    assert_eq!(eta.value(0, 1, 2), 1);
    assert_eq!(eta.value(1, 0, 1), 2);
    let q = FiniteQuandle::octahedral();
    let h = &q.inner_subgroup(0).unwrap()[1];
    let image = [0, 1, 2].map(|x| h.apply(x));
    assert_eq!(image, [0, 2, 4]);
    assert_eq!(eta.value(image[0], image[1], image[2]), 1);
    let support = eta.support();
    assert_eq!(support.iter().filter(|(_, v)| *v == 1).count(), 20);
    assert_eq!(support.iter().filter(|(_, v)| *v == 2).count(), 44);
}

#[test]
fn eta_stabilizer_invariant() {
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    let q = eta.quandle().clone();
    for h in q.inner_subgroup(0).unwrap() {
        for a in q.elements() {
            for b in q.elements() {
                for c in q.elements() {
                    assert_eq!(eta.value(h.apply(a), h.apply(b), h.apply(c)), eta.value(a, b, c));
                }
            }
        }
    }
}

#[test]
fn explicit_cycle_values() {
    let z = ThreeCocycle::mochizuki(7).unwrap();
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    assert_eq!(z.evaluate(&parse_chain(&fixture("zeta8.chain")).unwrap()).unwrap(), 6);
    assert_eq!(eta.evaluate(&parse_chain(&fixture("eta8.chain")).unwrap()).unwrap(), 1);
    assert_eq!(z.evaluate(&Chain::zero(3, XSet::Graded)).unwrap(), 0);
    let wrong = Chain::trivial(&[(1, &[0, 1])]).unwrap();
    assert!(z.evaluate(&wrong).is_err());
    let outside = Chain::trivial(&[(1, &[0, 1, 6])]).unwrap();
    assert!(eta.evaluate(&outside).is_err());
}

#[test]
fn r3_pair_chain() {
    let q = FiniteQuandle::dihedral(3).unwrap();
    let c = parse_chain(&fixture("r3_pair.chain")).unwrap();
    assert!(boundary(&c, &q).unwrap().is_zero());
    assert_eq!(ThreeCocycle::mochizuki(3).unwrap().evaluate(&c).unwrap(), 2);
}

#[test]
fn weight_sums_of_fixtures() {
    let z = ThreeCocycle::mochizuki(7).unwrap();
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    let five_two = parse_triple_points(&fixture("twistspun_5_2_2.tp")).unwrap();
    let trefoil = parse_triple_points(&fixture("twistspun_trefoil_4.tp")).unwrap();
    assert_eq!(five_two.len(), 8);
    assert_eq!(weight_sum(&z, &five_two).unwrap(), 6);
    assert_eq!(weight_sum(&eta, &trefoil).unwrap(), 1);
    let mut doubled = trefoil.clone();
    doubled.extend(trefoil.iter().map(|p| TriplePoint { sign: p.sign.flip(), ..*p }));
    assert_eq!(weight_sum(&eta, &doubled).unwrap(), 0);
    assert!(parse_triple_points("* 0 1 2\n").is_err());
    assert!(parse_triple_points("+ 0 0 2\n").is_err());
    assert!(TriplePoint::new(Sign::Plus, [1, 1, 0]).is_err());
}

fn arb_four_chain() -> impl Strategy<Value = Chain> {
    proptest::collection::vec((proptest::collection::vec(0u8..6, 4), -2i64..3), 0..6).prop_map(|ts| {
        let mut c = Chain::zero(4, XSet::Trivial);
        for (cols, k) in ts {
            if let Ok(t) = GradedTerm::trivial(&cols) {
                c.add_term(t, k).unwrap();
            }
        }
        c
    })
}

proptest! {
    #[test]
    fn representative_independent(a in 0i64..7, b in 0i64..7, c in 0i64..7, la in -2i64..3, lb in -2i64..3, lc in -2i64..3) {
        let base = mochizuki_value(7, a, b, c).unwrap();
        prop_assert_eq!(mochizuki_value(7, a + 7 * la, b + 7 * lb, c + 7 * lc).unwrap(), base);
    }

    #[test]
    fn boundaries_pair_to_zero(c in arb_four_chain()) {
        let eta = ThreeCocycle::octahedral_eta().unwrap();
        let d = boundary(&c, eta.quandle()).unwrap();
        prop_assert_eq!(eta.evaluate(&d).unwrap(), 0);
    }
}
