use std::collections::BTreeSet;

use chain_algebra::{is_cycle, parse_chain};
use cocycle_lib::ThreeCocycle;
use cycle_lab::{
    canonical_form, dfs_single_degree_cycles, join_single_degree, search_min_cycles, CaseProfile, SearchConfig,
    SearchOutcome,
};
use cycle_lab::search::is_primitive;

fn cross_check(cocycle: ThreeCocycle) {
    let q = cocycle.quandle().clone();
    let group = q.inner_group();
    let dfs: BTreeSet<_> = dfs_single_degree_cycles(&q, &cocycle, 5)
        .unwrap()
        .into_iter()
        .filter(|c| is_primitive(c, &q).unwrap())
        .map(|c| canonical_form(&c, &group))
        .collect();
    let join = join_single_degree(&q, 5).unwrap();
    assert_eq!(dfs, join.cycles, "{}", q.name());
}

#[test]
fn join_agrees_with_dfs_up_to_length_five() {
    cross_check(ThreeCocycle::octahedral_eta().unwrap());
    cross_check(ThreeCocycle::mochizuki(7).unwrap());
}

fn run(cocycle: ThreeCocycle, profile: CaseProfile, len: usize, first: bool) -> SearchOutcome {
    let mut cfg = SearchConfig::new(cocycle, profile, len);
    cfg.stop_at_first = first;
    search_min_cycles(&cfg).unwrap()
}

fn exhausted(outcome: SearchOutcome) -> cycle_lab::Certificate {
    match outcome {
        SearchOutcome::Exhausted(cert) => cert,
        other => panic!("expected exhaustion, got {other:?}"),
    }
}

#[test]
fn r7_has_no_nonzero_cycle_up_to_seven() {
    for profile in [CaseProfile::A, CaseProfile::B, CaseProfile::C] {
        let cert = exhausted(run(ThreeCocycle::mochizuki(7).unwrap(), profile, 7, false));
        assert_eq!(cert.nonzero, 0);
        assert_eq!(cert.roots, 126);
        assert!(cert.probes > 0);
        let text = cert.to_string();
        assert!(text.starts_with("# search certificate\n# scope: "));
        assert!(text.contains(&format!("profile {}", profile.label())));
    }
}

#[test]
fn o6_has_no_nonzero_cycle_up_to_six() {
    for profile in [CaseProfile::A, CaseProfile::B, CaseProfile::C] {
        let cert = exhausted(run(ThreeCocycle::octahedral_eta().unwrap(), profile, 6, false));
        assert_eq!(cert.nonzero, 0);
        assert_eq!(cert.roots, 39);
    }
}

const O6_SEVEN: &str = "arity 3 graded
1 0 0 0 1 0
1 0 0 0 2 1
-1 0 0 0 2 4
-1 0 0 1 0 4
-1 0 0 2 1 4
-1 0 2 1 2 1
1 0 2 2 1 2
";

#[test]
fn o6_single_degree_has_a_length_seven_cycle() {
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    let q = eta.quandle().clone();
    let c = parse_chain(O6_SEVEN).unwrap();
    assert!(is_cycle(&c, &q).unwrap());
    assert_eq!(c.length(), 7);
    assert_eq!(eta.evaluate(&c.project_pi()).unwrap(), 1);
    assert!(is_primitive(&c, &q).unwrap());
    match run(eta, CaseProfile::A, 7, false) {
        SearchOutcome::Found { cycles, certificate } => {
            assert!(cycles.iter().all(|f| f.chain.length() == 7 && f.value != 0));
            assert_eq!(certificate.nonzero, cycles.len());
            let group = q.inner_group();
            let forms: BTreeSet<_> = cycles.iter().map(|f| canonical_form(&f.chain, &group)).collect();
            assert!(forms.contains(&canonical_form(&c, &group)) || forms.contains(&canonical_form(&c.negated(), &group)));
        }
        other => panic!("expected a cycle, got {other:?}"),
    }
}

#[test]
fn o6_length_eight_search_finds_a_cycle() {
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    let q = eta.quandle().clone();
    match run(eta.clone(), CaseProfile::A, 8, true) {
        SearchOutcome::Found { cycles, .. } => {
            assert_eq!(cycles.len(), 1);
            let f = &cycles[0];
            assert!(is_cycle(&f.chain, &q).unwrap());
            assert_ne!(f.value, 0);
            assert_eq!(eta.evaluate(&f.chain.project_pi()).unwrap(), f.value);
        }
        other => panic!("expected a cycle, got {other:?}"),
    }
}

#[test]
fn tiny_budget_is_refused_with_coverage() {
    let mut cfg = SearchConfig::new(ThreeCocycle::mochizuki(7).unwrap(), CaseProfile::A, 7);
    cfg.budget = 1000;
    match search_min_cycles(&cfg).unwrap() {
        SearchOutcome::Refused(report) => {
            assert!(report.partial.estimated_nodes > 1000.0);
            assert!(report.to_string().contains("budget exceeded"));
        }
        other => panic!("expected a refusal, got {other:?}"),
    }
}

#[test]
fn bad_configs_are_rejected() {
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    for len in [0, 9] {
        assert!(search_min_cycles(&SearchConfig::new(eta.clone(), CaseProfile::A, len)).is_err());
    }
    let mut cfg = SearchConfig::new(eta, CaseProfile::B, 5);
    cfg.budget = 0;
    assert!(search_min_cycles(&cfg).is_err());
}

#[test]
fn threads_do_not_change_the_certificate() {
    let zeta = ThreeCocycle::mochizuki(7).unwrap();
    let mut one = SearchConfig::new(zeta.clone(), CaseProfile::B, 6);
    one.threads = 1;
    let mut many = SearchConfig::new(zeta, CaseProfile::B, 6);
    many.threads = 4;
    let a = exhausted(search_min_cycles(&one).unwrap());
    let b = exhausted(search_min_cycles(&many).unwrap());
    assert_eq!(a, b);
}

const O6_TWO_FIVE: &str = "arity 3 graded
1 0 0 0 1 0
-1 0 0 1 0 1
1 1 0 0 1 0
1 1 0 0 2 1
-1 1 5 0 1 4
-1 1 5 1 5 4
-1 1 5 5 0 4
";

#[test]
fn o6_two_degree_window_has_a_length_seven_cycle() {
    let eta = ThreeCocycle::octahedral_eta().unwrap();
    let q = eta.quandle().clone();
    let c = parse_chain(O6_TWO_FIVE).unwrap();
    assert!(is_cycle(&c, &q).unwrap());
    assert_eq!(eta.evaluate(&c.project_pi()).unwrap(), 1);
    assert_eq!(c.degree_bucket(0).unwrap().length(), 2);
    for profile in [CaseProfile::B, CaseProfile::C] {
        match run(eta.clone(), profile, 7, false) {
            SearchOutcome::Found { cycles, .. } => {
                assert!(cycles.iter().any(|f| f.chain == c || f.chain == c.negated()), "{profile:?}");
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
    }
}
