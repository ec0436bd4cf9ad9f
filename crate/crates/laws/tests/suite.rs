use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tp_core::StateSpace;
use tp_laws::engine::fails_on_domain;
use tp_laws::slots::{random_in, random_refinement};
use tp_laws::*;

#[test]
fn registry_covers_p6_to_p80_with_unique_ids() {
    let laws = registry();
    let ids: BTreeSet<&str> = laws.iter().map(|l| l.id).collect();
    assert_eq!(ids.len(), laws.len(), "duplicate law ids");
    let bases: BTreeSet<String> = laws.iter().map(|l| l.base_id().to_string()).collect();
    let wanted: BTreeSet<String> = (6..=80).map(|n| format!("P{n}")).collect();
    assert_eq!(bases, wanted);
}

#[test]
fn every_law_is_confirmed_exhaustively_at_two_atoms() {
    let mut bad = Vec::new();
    for law in registry() {
        let report = check(law, &Config::exhaustive(2)).unwrap();
        if !report.confirmed() {
            bad.push(format!("{}: {:?}", law.id, report.verdict));
        }
        if law.expects_holds() {
            assert!(report.cases > report.vacuous, "{} only met vacuous cases", law.id);
        }
    }
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn every_law_is_confirmed_on_random_samples_at_four_atoms() {
    let mut bad = Vec::new();
    for seed in [0, 1, 2, 3, 4] {
        for law in registry() {
            let report = check(law, &Config::random(4, 1000, seed)).unwrap();
            if !report.confirmed() {
                bad.push(format!("seed {seed} {}: {:?}", law.id, report.verdict));
            }
            if law.expects_holds() {
                assert!(report.cases > report.vacuous, "{} seed {seed}: all vacuous", law.id);
            }
        }
    }
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn domain_hypotheses_are_necessary() {
    for law in registry().iter().filter(|l| l.expects_holds() && l.domain != Domain::Any) {
        let found = fails_on_domain(law, Domain::Any, 2).unwrap();
        assert!(found.is_some(), "{} also holds without its {} hypothesis", law.id, law.domain.name());
    }
}

#[test]
fn refuted_laws_replay_their_witness() {
    for law in registry().iter().filter(|l| !l.expects_holds()) {
        let report = check(law, &Config::exhaustive(2)).unwrap();
        let replay = report.replay.as_ref().expect("refuted laws replay a witness");
        assert!(replay.admissible && replay.refutes, "{}", law.id);
        assert!(!replay.counterexample.detail.is_empty());
    }
}

#[test]
fn reports_are_reproducible() {
    for id in ["P11", "P32.commutative", "P63", "P68"] {
        let a = check_law(id, &Config::random(4, 300, 7)).unwrap();
        let b = check_law(id, &Config::random(4, 300, 7)).unwrap();
        assert_eq!((a.cases, a.vacuous, a.failure_count), (b.cases, b.vacuous, b.failure_count));
    }
}

#[test]
fn skip_is_a_unit_on_every_feasible_normalized_program() {
    let report = check_law("P13", &Config::exhaustive(2)).unwrap();
    assert_eq!(report.cases, 16);
    assert_eq!(report.failure_count, 0);
}

#[test]
fn selection_by_id_and_base_id() {
    let picked = select(&["P37".into(), "P38".into(), "P41".into()]).unwrap();
    assert_eq!(picked.iter().map(|l| l.id).collect::<Vec<_>>(), ["P37", "P38", "P41"]);
    let family = select(&["P32".into()]).unwrap();
    assert_eq!(family.len(), 3);
    assert!(matches!(select(&["P99".into()]), Err(LawError::UnknownLaw { .. })));
    assert!(check_law("P99", &Config::exhaustive(2)).is_err());
    let reports = run_suite(&picked, &default_configs(0)).unwrap();
    assert_eq!(reports.len(), 6);
}

#[test]
fn five_atoms_are_not_enumerated() {
    let err = check_law("P6", &Config::exhaustive(5)).unwrap_err();
    assert!(matches!(err, LawError::TooLarge(_)));
    assert!(enumerate_programs(&StateSpace::numbered(5).unwrap()).is_err());
}

#[test]
fn random_programs_are_seeded() {
    let s = StateSpace::numbered(4).unwrap();
    assert_eq!(random_program(&s, 42), random_program(&s, 42));
    let (mut feasible, mut infeasible) = (0, 0);
    for seed in 0..10_000 {
        if random_program(&s, seed).is_feasible() {
            feasible += 1;
        } else {
            infeasible += 1;
        }
        assert!(random_feasible_program(&s, seed).is_feasible());
    }
    assert!(feasible > 0 && infeasible > 0);
}

fn domain() -> impl Strategy<Value = Domain> {
    prop_oneof![
        Just(Domain::Any),
        Just(Domain::Feasible),
        Just(Domain::Normalized),
        Just(Domain::FeasibleNormalized),
    ]
}

proptest! {
    #[test]
    fn draws_stay_in_their_domain(seed in any::<u64>(), n in 1usize..=6, d in domain()) {
        let s = StateSpace::numbered(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_in(&mut rng, &s, d);
        prop_assert!(d.admits(&p));
        let q = random_refinement(&mut rng, &p, d);
        prop_assert!(d.admits(&q));
        prop_assert!(q.refines(&p));
    }
}
