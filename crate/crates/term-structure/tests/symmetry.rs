use chain_algebra::{f_map, g_map, Chain, GradedTerm, XSet};
use proptest::prelude::*;
use quandle_core::{Elem, FiniteQuandle, OCTAHEDRAL_DUAL_ISO};
use term_structure::{
    classify_type, connected_components, is_connected, reflect_dihedral, relabel, reverse, reverse_octahedral,
    sigma_shift, Components, FaceMode, TermType,
};

fn term(n: i32, u: Elem, cols: &[Elem]) -> GradedTerm {
    GradedTerm::new(n, u, cols).unwrap()
}

#[test]
fn types_over_dihedral_and_octahedral() {
    let r7 = FiniteQuandle::dihedral(7).unwrap();
    let o = FiniteQuandle::octahedral();
    for a in 0..7 {
        for b in (0..7).filter(|&b| b != a) {
            assert_eq!(classify_type(&term(0, 0, &[a, b, a]), &r7).unwrap(), TermType::One);
        }
    }
    for a in 0..6 {
        for b in (0..6).filter(|&b| b != a) {
            let t = classify_type(&term(0, 0, &[a, b, a]), &o).unwrap();
            assert_eq!(t == TermType::Zero, b == (a + 3) % 6);
        }
    }
    let expected = if o.op(0, 1) == 2 { TermType::Two } else { TermType::Three };
    assert_eq!(classify_type(&term(0, 0, &[0, 1, 2]), &o).unwrap(), expected);
    assert_eq!(expected, TermType::Three);
    assert_eq!(classify_type(&term(0, 0, &[0, 1, 5]), &o).unwrap(), TermType::Two);
    assert!(classify_type(&term(0, 0, &[0, 1]), &o).is_err());
}

#[test]
fn reverse_swaps_types_one_and_two() {
    for q in [FiniteQuandle::dihedral(7).unwrap(), FiniteQuandle::octahedral()] {
        let dual = q.dual().unwrap();
        for a in q.elements() {
            for b in q.elements().filter(|&b| b != a) {
                for c in q.elements().filter(|&c| c != b) {
                    let c0 = Chain::graded(&[(1, 0, 0, &[a, b, c])]).unwrap();
                    let r = reverse(&c0, &q).unwrap();
                    let rt = r.terms().next().unwrap();
                    let before = classify_type(&term(0, 0, &[a, b, c]), &q).unwrap();
                    let after = classify_type(rt, &dual).unwrap();
                    let swapped = match before {
                        TermType::One => TermType::Two,
                        TermType::Two => TermType::One,
                        other => other,
                    };
                    assert_eq!(after, swapped);
                }
            }
        }
    }
}

#[test]
fn octahedral_reverse_stays_in_octahedral() {
    let o = FiniteQuandle::octahedral();
    let c = Chain::graded(&[(1, 2, 1, &[0, 1, 2]), (-1, 0, 4, &[3, 5, 0])]).unwrap();
    let r = reverse_octahedral(&c).unwrap();
    assert_eq!(reverse_octahedral(&r).unwrap(), c);
    // relabelling by the isomorphism carries a chain over the dual back to O6
    let plain = reverse(&c, &o).unwrap();
    assert_eq!(relabel(&plain, &OCTAHEDRAL_DUAL_ISO).unwrap(), r);
}

#[test]
fn bigon_pair_component() {
    let q = FiniteQuandle::dihedral(7).unwrap();
    let terms = vec![(1, term(0, 0, &[1, 2, 1])), (-1, term(0, 0, &[2, 1, 2]))];
    assert_eq!(
        connected_components(&terms, FaceMode::F, &q).unwrap(),
        Components::Split(vec![vec![0, 1]])
    );
    let bad = vec![(1, term(0, 0, &[1, 2, 1])), (-1, term(0, 0, &[1, 2, 1]))];
    assert!(connected_components(&bad, FaceMode::F, &q).is_err());
    let single = vec![(1, term(0, 0, &[1, 2, 3]))];
    assert!(matches!(connected_components(&single, FaceMode::F, &q).unwrap(), Components::Residual(_)));
}

#[test]
fn lowest_layer_of_two_degree_cycle_is_f_null() {
    let q = FiniteQuandle::dihedral(7).unwrap();
    let low: Vec<(i64, GradedTerm)> = vec![
        (1, term(0, 0, &[0, 6, 1])),
        (-1, term(0, 0, &[1, 6, 0])),
        (1, term(0, 0, &[0, 1, 6])),
        (-1, term(0, 0, &[6, 1, 0])),
    ];
    let direct = Chain::from_signed(3, XSet::Graded, low.clone()).unwrap();
    assert!(f_map(&direct, &q).unwrap().is_zero());
    assert!(matches!(connected_components(&low, FaceMode::F, &q).unwrap(), Components::Split(_)));
}

#[test]
fn two_blocks_split_into_two_components() {
    let q = FiniteQuandle::octahedral();
    let terms = vec![
        (1, term(0, 2, &[0, 1, 0])),
        (-1, term(0, 2, &[1, 0, 1])),
        (1, term(0, 2, &[2, 4, 2])),
        (-1, term(0, 2, &[4, 2, 4])),
    ];
    match connected_components(&terms, FaceMode::F, &q).unwrap() {
        Components::Split(parts) => assert_eq!(parts, vec![vec![0, 1], vec![2, 3]]),
        other => panic!("{other:?}"),
    }
}

#[test]
fn g_connected_iff_reverse_f_connected() {
    for q in [FiniteQuandle::dihedral(7).unwrap(), FiniteQuandle::octahedral()] {
        let dual = q.dual().unwrap();
        for u in q.elements() {
            for a in q.elements() {
                for b in q.elements().filter(|&b| b != a) {
                    let pair = vec![(1, term(0, u, &[a, b, a])), (-1, term(0, u, &[b, a, b]))];
                    let g_conn = is_connected(&pair, FaceMode::G, &q).unwrap();
                    let rev: Vec<(i64, GradedTerm)> = pair
                        .iter()
                        .map(|(k, t)| (*k, term_structure::reverse_term(t, &q)))
                        .collect();
                    let f_conn_rev = is_connected(&rev, FaceMode::F, &dual).unwrap();
                    assert_eq!(g_conn, f_conn_rev, "{} u={u} a={a} b={b}", q.name());
                }
            }
        }
    }
}

#[test]
fn sigma_basics() {
    let q = FiniteQuandle::dihedral(7).unwrap();
    let c = Chain::graded(&[(1, 0, 3, &[0, 1, 2]), (2, 1, 4, &[5, 1, 2])]).unwrap();
    assert_eq!(sigma_shift(&c, 0).unwrap(), c);
    assert_eq!(sigma_shift(&sigma_shift(&c, 1).unwrap(), -1).unwrap(), c);
    assert_eq!(
        f_map(&sigma_shift(&c, 2).unwrap(), &q).unwrap(),
        sigma_shift(&f_map(&c, &q).unwrap(), 2).unwrap()
    );
    assert!(sigma_shift(&c.project_pi(), 1).is_err());
}

#[test]
fn reflection_needs_dihedral() {
    let o = FiniteQuandle::octahedral();
    let c = Chain::graded(&[(1, 0, 0, &[0, 1, 2])]).unwrap();
    assert!(reflect_dihedral(&c, &o).is_err());
}

#[test]
fn reflection_parity_on_even_arity() {
    // f and g pick up (-1)^{m+1} under reflection; exact only for odd arity
    let q = FiniteQuandle::dihedral(7).unwrap();
    let c = Chain::graded(&[(1, 1, 3, &[0, 2, 5, 1])]).unwrap();
    let lhs = f_map(&reflect_dihedral(&c, &q).unwrap(), &q).unwrap();
    let rhs = reflect_dihedral(&f_map(&c, &q).unwrap(), &q).unwrap();
    assert_eq!(lhs, rhs.negated());
}

fn arb_chain(n: u8, arity: std::ops::Range<usize>) -> impl Strategy<Value = Chain> {
    arity.prop_flat_map(move |m| {
        let term = (-3i32..4, 0..n, proptest::collection::vec(0..n, m), -2i64..3);
        proptest::collection::vec(term, 1..5).prop_map(move |ts| {
            let mut c = Chain::zero(m, XSet::Graded);
            for (d, u, cols, k) in ts {
                if let Ok(t) = GradedTerm::new(d, u, &cols) {
                    c.add_term(t, k).unwrap();
                }
            }
            c
        })
    })
}

fn reverse_identities(c: &Chain, q: &FiniteQuandle) -> Result<(), TestCaseError> {
    let dual = q.dual().unwrap();
    let r = reverse(c, q).unwrap();
    prop_assert_eq!(&reverse(&r, &dual).unwrap(), c);
    let shifted = sigma_shift(c, -1).unwrap();
    let lhs = f_map(&r, &dual).unwrap();
    let rhs = reverse(&g_map(&shifted, q).unwrap(), q).unwrap().negated();
    prop_assert_eq!(lhs, rhs);
    let lhs = g_map(&r, &dual).unwrap();
    let rhs = reverse(&f_map(&shifted, q).unwrap(), q).unwrap().negated();
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reverse_intertwines_dihedral(c in arb_chain(7, 2..5)) {
        reverse_identities(&c, &FiniteQuandle::dihedral(7).unwrap())?;
    }

    #[test]
    fn reverse_intertwines_octahedral(c in arb_chain(6, 2..5)) {
        reverse_identities(&c, &FiniteQuandle::octahedral())?;
        prop_assert_eq!(reverse_octahedral(&reverse_octahedral(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn reflection_commutes_on_three_chains(c in arb_chain(7, 3..4)) {
        let q = FiniteQuandle::dihedral(7).unwrap();
        let star = reflect_dihedral(&c, &q).unwrap();
        prop_assert_eq!(&reflect_dihedral(&star, &q).unwrap(), &c);
        prop_assert_eq!(f_map(&star, &q).unwrap(), reflect_dihedral(&f_map(&c, &q).unwrap(), &q).unwrap());
        prop_assert_eq!(g_map(&star, &q).unwrap(), reflect_dihedral(&g_map(&c, &q).unwrap(), &q).unwrap());
        for (t, _) in c.iter() {
            let single = Chain::from_terms(3, XSet::Graded, [(t.clone(), 1)]).unwrap();
            let image = reflect_dihedral(&single, &q).unwrap();
            let it = image.terms().next().unwrap();
            prop_assert_eq!(classify_type(t, &q).unwrap(), classify_type(it, &q).unwrap());
        }
    }

    #[test]
    fn reflection_preserves_connectedness(a in 0u8..7, b in 1u8..7, c in 1u8..7, u in 0u8..7, deg in -2i32..3) {
        let q = FiniteQuandle::dihedral(7).unwrap();
        let (b, c) = ((a + b) % 7, (a + b + c) % 7);
        prop_assume!(a != c && b != c);
        let fam = vec![(1, term(deg, u, &[a, b, a])), (-1, term(deg, u, &[c, a, b])), (-1, term(deg, u, &[c, b, a]))];
        let chain = Chain::from_signed(3, XSet::Graded, fam.clone()).unwrap();
        let star: Vec<(i64, GradedTerm)> = reflect_dihedral(&chain, &q).unwrap().iter().map(|(t, k)| (k, t.clone())).collect();
        prop_assert_eq!(is_connected(&fam, FaceMode::F, &q).unwrap(), is_connected(&star, FaceMode::F, &q).unwrap());
        prop_assert!(is_connected(&star, FaceMode::F, &q).unwrap());
    }
}
