use std::collections::BTreeSet;

use chain_algebra::{f_map, g_map, Chain};
use cocycle_lib::ThreeCocycle;
use cycle_lab::families::{block_coordinates, block_supports, o6_gamma_chains, r7_blocks, r7_kernel_element};
use cycle_lab::{hermite_normal_form, kernel_fg, lattice_coords, IndexFilter, SliceBasis};
use num_bigint::BigInt;
use proptest::prelude::*;
use quandle_core::FiniteQuandle;

fn assert_in_kernel(c: &Chain, q: &FiniteQuandle) {
    assert!(f_map(c, q).unwrap().is_zero(), "f != 0 on {c:?}");
    assert!(g_map(c, q).unwrap().is_zero(), "g != 0 on {c:?}");
}

fn r7_slice(w: u8, a0: u8, s: u8) -> (FiniteQuandle, [Chain; 3], SliceBasis) {
    let q = FiniteQuandle::dihedral(7).unwrap();
    let blocks = r7_blocks(&q, 0, w, a0, s).unwrap();
    let v = blocks[0].terms().next().unwrap().terminal_index(&q);
    let slice = SliceBasis::new(&q, 0, IndexFilter::One(w), Some(v)).unwrap();
    (q, blocks, slice)
}

#[test]
fn r7_slice_kernel_is_the_block_lattice() {
    for (w, a0, s) in [(0, 0, 1), (3, 2, 5), (6, 4, 3)] {
        let (q, blocks, slice) = r7_slice(w, a0, s);
        let k = kernel_fg(&slice);
        assert_eq!(k.rank(), 2);
        assert_eq!(k.rational.len(), 2);
        for b in &blocks {
            assert_eq!(b.support(), 8);
        }
        for v in &k.lattice {
            let c = slice.chain_of(v).unwrap();
            assert_in_kernel(&c, &q);
            assert!(block_coordinates(&blocks, &c).unwrap().is_some(), "{c:?}");
        }
        // the block combinations with unit weights generate the same lattice
        let gens: Vec<Vec<BigInt>> = [(1, 0), (0, 1)]
            .iter()
            .map(|&(a, b)| slice.coords_of(&r7_kernel_element(&blocks, a, b).unwrap()).unwrap())
            .collect();
        for g in &gens {
            assert!(lattice_coords(&k.lattice, g).is_some());
        }
        assert_eq!(hermite_normal_form(gens), k.lattice);
    }
}

#[test]
fn r7_every_terminal_slice_has_rank_two() {
    let q = FiniteQuandle::dihedral(7).unwrap();
    for v in q.elements() {
        let slice = SliceBasis::new(&q, 0, IndexFilter::One(0), Some(v)).unwrap();
        assert_eq!(kernel_fg(&slice).rank(), 2, "terminal {v}");
    }
}

#[test]
fn r7_small_weights_have_support_sixteen_or_twentyfour() {
    let (_, blocks, _) = r7_slice(0, 0, 1);
    assert_eq!(block_supports(&blocks, 3).unwrap(), BTreeSet::from([16, 24]));
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            let zeros = [a, b, a + b].iter().filter(|&&x| x == 0).count();
            assert!(zeros == 3 || zeros <= 1, "({a}, {b})");
            if (a, b) != (0, 0) {
                let c = r7_kernel_element(&blocks, a, b).unwrap();
                assert_eq!(block_coordinates(&blocks, &c).unwrap(), Some((a, b)));
            }
        }
    }
}

#[test]
fn o6_slices_are_spanned_by_the_gamma_chains() {
    let q = FiniteQuandle::octahedral();
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    let gammas = o6_gamma_chains(&q, 0).unwrap();
    assert_eq!(gammas.len(), 18);
    for v in q.elements() {
        let slice = SliceBasis::new(&q, 0, IndexFilter::One(0), Some(v)).unwrap();
        let k = kernel_fg(&slice);
        let expected_rank = match v {
            0 => 6,
            3 => 0,
            _ => 3,
        };
        assert_eq!(k.rank(), expected_rank, "terminal {v}");
        let mine: Vec<&Chain> = gammas.iter().filter(|(t, _, _)| *t == v).map(|(_, _, c)| c).collect();
        assert_eq!(mine.len(), expected_rank);
        let coords: Vec<Vec<BigInt>> = mine.iter().map(|c| slice.coords_of(c).unwrap()).collect();
        for (c, x) in mine.iter().zip(&coords) {
            assert_in_kernel(c, &q);
            assert!(lattice_coords(&k.lattice, x).is_some());
        }
        assert_eq!(hermite_normal_form(coords), k.lattice, "terminal {v}");
        for b in &k.lattice {
            let c = slice.chain_of(b).unwrap();
            assert_in_kernel(&c, &q);
            assert_eq!(eta.evaluate(&c.project_pi()).unwrap(), 0);
        }
    }
}

#[test]
fn o6_whole_index_slice_carries_eta() {
    // without the terminal filter the kernel is much larger and no longer
    // pairs to zero
    let q = FiniteQuandle::octahedral();
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    let slice = SliceBasis::new(&q, 0, IndexFilter::One(0), None).unwrap();
    let k = kernel_fg(&slice);
    assert_eq!(k.rank(), 44);
    let values: BTreeSet<u64> =
        k.lattice.iter().map(|b| eta.evaluate(&slice.chain_of(b).unwrap().project_pi()).unwrap()).collect();
    assert!(values.iter().any(|&x| x != 0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_combinations_stay_in_the_kernel(
        v in 0u8..6,
        weights in proptest::collection::vec(-4i64..=4, 6),
    ) {
        let q = FiniteQuandle::octahedral();
        let eta = ThreeCocycle::octahedral_eta().unwrap();
        let slice = SliceBasis::new(&q, 0, IndexFilter::One(0), Some(v)).unwrap();
        let k = kernel_fg(&slice);
        let mut sum = vec![BigInt::from(0); slice.generators().len()];
        for (b, &w) in k.lattice.iter().zip(&weights) {
            for (s, x) in sum.iter_mut().zip(b) {
                *s += x * w;
            }
        }
        let c = slice.chain_of(&sum).unwrap();
        prop_assert!(f_map(&c, &q).unwrap().is_zero());
        prop_assert!(g_map(&c, &q).unwrap().is_zero());
        prop_assert_eq!(eta.evaluate(&c.project_pi()).unwrap(), 0);
        prop_assert_eq!(lattice_coords(&k.lattice, &sum).map(|x| x.len()), Some(k.rank()));
    }
}
