use std::collections::BTreeSet;

use quandle_core::FiniteQuandle;
use term_structure::{
    catalogue, connected_components, enumerate_f_connected, f_connected_types, identify, index_pattern_tables,
    is_valid_family, Components, FaceMode, StructureError,
};

fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn golden_rows(name: &str) -> Vec<String> {
    fixture(name)
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(str::to_string)
        .collect()
}

#[test]
fn template_counts() {
    let counts: Vec<usize> = (1..=5).map(|k| enumerate_f_connected(k).unwrap().len()).collect();
    assert_eq!(counts, vec![0, 1, 2, 5, 10]);
    assert!(matches!(enumerate_f_connected(6), Err(StructureError::Unsupported(_))));
}

#[test]
fn raw_types_before_folding() {
    let counts: Vec<usize> = (1..=5).map(|k| f_connected_types(k).unwrap().len()).collect();
    assert_eq!(counts, vec![0, 1, 2, 6, 11]);
}

#[test]
fn templates_match_catalogue_one_to_one() {
    for k in 2..=5 {
        let found = enumerate_f_connected(k).unwrap();
        let mut names = BTreeSet::new();
        for t in &found {
            let named = identify(t).unwrap_or_else(|| panic!("unmatched template {t}"));
            assert_eq!(named.coincidences.len(), t.coincidences.len(), "{t} vs {named}");
            names.insert(named.id);
        }
        let expected: BTreeSet<String> = catalogue().into_iter().filter(|c| c.size() == k).map(|c| c.id).collect();
        assert_eq!(names, expected);
    }
}

#[test]
fn catalogue_entries_are_valid() {
    for t in catalogue() {
        assert!(is_valid_family(&t.terms), "{t}");
        for &(x, y) in &t.coincidences {
            let merged = t.merge_symbols(x, y);
            assert!(is_valid_family(&merged), "{t} with {x}={y}");
        }
    }
}

#[test]
fn instantiations_are_connected_with_constant_index() {
    for q in [FiniteQuandle::dihedral(7).unwrap(), FiniteQuandle::octahedral()] {
        for t in catalogue() {
            let n = t.symbols as usize;
            let mut values = vec![0u8; n];
            let mut checked = 0;
            'outer: loop {
                if t.admits(&values) {
                    for flips in 0..(1u32 << t.bigons()) {
                        let terms = t.instantiate(&values, 3, 2, flips).unwrap();
                        // a flipped bigon can cancel another term outright
                        match connected_components(&terms, FaceMode::F, &q) {
                            Ok(Components::Split(parts)) => assert_eq!(parts.len(), 1, "{t} {values:?}"),
                            Ok(Components::Residual(r)) => panic!("{t} {values:?}: {r:?}"),
                            Err(e) => {
                                assert!(flips != 0, "{t} {values:?}: {e}");
                                continue;
                            }
                        }
                        assert!(terms.iter().all(|(_, x)| x.index == 2));
                        checked += 1;
                    }
                }
                for slot in values.iter_mut() {
                    *slot += 1;
                    if (*slot as usize) < q.size() {
                        continue 'outer;
                    }
                    *slot = 0;
                }
                break;
            }
            assert!(checked > 0);
        }
    }
}

#[test]
fn index_tables_match_goldens() {
    let o = FiniteQuandle::octahedral();
    let k4: Vec<String> = index_pattern_tables(&o, 4).unwrap().iter().map(|r| r.to_string()).collect();
    assert_eq!(k4, golden_rows("index_patterns_k4.txt"));
    let k5 = index_pattern_tables(&o, 5).unwrap();
    let listed: Vec<String> = k5.iter().filter(|r| r.shape != [5]).map(|r| r.to_string()).collect();
    assert_eq!(listed, golden_rows("index_patterns_k5.txt"));
}

#[test]
fn five_term_single_index_instances() {
    let o = FiniteQuandle::octahedral();
    let single: Vec<String> = index_pattern_tables(&o, 5)
        .unwrap()
        .iter()
        .filter(|r| r.shape == [5])
        .map(|r| format!("{} {:?} {} {} {:?}", r.family, r.us, r.b, r.c, r.ds))
        .collect();
    assert_eq!(single, vec!["5-v [0, 3] 1 5 Some([3])", "5-vi [0, 3] 1 5 Some([2])"]);
}
