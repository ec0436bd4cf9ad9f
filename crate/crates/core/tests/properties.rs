use std::sync::Arc;

use proptest::prelude::*;
use tp_core::contracts::{sp, wp, ContractedProgram};
use tp_core::loops::{arbitrary_repetition, fixed_repetition};
use tp_core::{Condition, Program, Relation, StateSpace};

fn space(n: usize) -> Arc<StateSpace> {
    StateSpace::numbered(n).unwrap()
}

fn program_in(s: &Arc<StateSpace>, rows: &[u64], pre: u64) -> Program {
    let mask = s.full_mask();
    let rows: Vec<u64> = rows.iter().take(s.len()).map(|r| r & mask).collect();
    Program::new(
        Relation::from_rows(s, &rows).unwrap(),
        Condition::from_bits(s, pre & mask).unwrap(),
    )
    .unwrap()
}

/// Up to three programs and two conditions over one space of 1 to 4 atoms.
fn world() -> impl Strategy<Value = (Arc<StateSpace>, Vec<Program>, Condition, Condition)> {
    (1usize..=4, prop::collection::vec(any::<u64>(), 15), prop::array::uniform5(any::<u64>()))
        .prop_map(|(n, rows, bits)| {
            let s = space(n);
            let progs = (0..3)
                .map(|i| program_in(&s, &rows[i * 4..i * 4 + 4], bits[i]))
                .collect();
            let c = Condition::from_bits(&s, bits[3] & s.full_mask()).unwrap();
            let d = Condition::from_bits(&s, bits[4] & s.full_mask()).unwrap();
            (s, progs, c, d)
        })
}

proptest! {
    #[test]
    fn sequence_is_associative((_s, ps, _c, _d) in world()) {
        let left = ps[0].seq(&ps[1]).unwrap().seq(&ps[2]).unwrap();
        let right = ps[0].seq(&ps[1].seq(&ps[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn choice_is_a_semilattice((_s, ps, _c, _d) in world()) {
        prop_assert_eq!(ps[0].choice(&ps[1]).unwrap(), ps[1].choice(&ps[0]).unwrap());
        prop_assert_eq!(ps[0].choice(&ps[0]).unwrap(), ps[0].clone());
        let a = ps[0].choice(&ps[1]).unwrap().choice(&ps[2]).unwrap();
        let b = ps[0].choice(&ps[1].choice(&ps[2]).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn units_and_zeros((s, ps, _c, _d) in world()) {
        let p = &ps[0];
        // Skip on the left normalizes, on the right it drops infeasible states
        prop_assert_eq!(Program::skip(&s).seq(p).unwrap(), p.normalized());
        let feasible = Program::new(p.post().clone(), p.pre().and(&p.post().domain()).unwrap()).unwrap();
        prop_assert_eq!(p.seq(&Program::skip(&s)).unwrap(), feasible.clone());
        prop_assert_eq!(p.choice(&Program::fail(&s)).unwrap(), p.clone());
        let tidy = feasible.normalized();
        prop_assert!(Program::skip(&s).commutes(&tidy).unwrap());
    }

    #[test]
    fn normalization_is_canonical((_s, ps, c, _d) in world()) {
        let n = ps[0].normalized();
        prop_assert!(n.is_normalized());
        prop_assert!(n.equivalent(&ps[0]).unwrap());
        prop_assert_eq!(n.normalized(), n.clone());
        let m = ps[1].normalized();
        prop_assert!(n.choice(&m).unwrap().is_normalized());
        prop_assert!(n.seq(&m).unwrap().is_normalized());
        prop_assert!(n.restrict(&c).unwrap().is_normalized());
        prop_assert!(n.corestrict(&c).unwrap().is_normalized());
        prop_assert!(n.concurrent(&m).unwrap().is_normalized());
    }

    #[test]
    fn refinement_is_a_preorder((_s, ps, _c, _d) in world()) {
        for p in &ps {
            prop_assert!(p.refines(p));
        }
        if ps[0].refines(&ps[1]) && ps[1].refines(&ps[2]) {
            prop_assert!(ps[0].refines(&ps[2]));
        }
        if ps[0].refines(&ps[1]) && ps[1].refines(&ps[0]) {
            prop_assert!(ps[0].equivalent(&ps[1]).unwrap());
        }
    }

    #[test]
    fn conditions_form_a_boolean_algebra((_s, _ps, c, d) in world()) {
        prop_assert_eq!(c.not().not(), c.clone());
        prop_assert_eq!(c.and(&d).unwrap().not(), c.not().or(&d.not()).unwrap());
        prop_assert_eq!(c.diff(&d).unwrap(), c.and(&d.not()).unwrap());
        prop_assert_eq!(c.implies(&d).unwrap(), c.or(&d).unwrap() == d);
    }

    #[test]
    fn image_distributes_over_union((_s, ps, c, d) in world()) {
        let r = ps[0].post();
        prop_assert_eq!(
            r.image(&c.or(&d).unwrap()).unwrap(),
            r.image(&c).unwrap().or(&r.image(&d).unwrap()).unwrap()
        );
        prop_assert!(r.image(&c.and(&d).unwrap()).unwrap()
            .implies(&r.image(&c).unwrap().and(&r.image(&d).unwrap()).unwrap()).unwrap());
        prop_assert!(c.and(&r.range()).unwrap()
            .implies(&r.image(&r.preimage(&c).unwrap()).unwrap()).unwrap());
    }

    #[test]
    fn well_foundedness_matches_nilpotence((s, ps, _c, _d) in world()) {
        let r = ps[0].post();
        let mut power = r.clone();
        for _ in 1..s.len() {
            power = power.compose(r).unwrap();
        }
        prop_assert_eq!(r.is_well_founded(), power.is_empty());
    }

    #[test]
    fn repetition_unfolds((s, ps, _c, _d) in world()) {
        let p = &ps[0].normalized();
        let star = arbitrary_repetition(p);
        let unfolded = Program::skip(&s).choice(&p.seq(&star).unwrap()).unwrap();
        prop_assert_eq!(unfolded, star.clone());
        for i in 0..5 {
            prop_assert!(fixed_repetition(p, i).post().is_subset(star.post()).unwrap());
        }
    }

    #[test]
    fn correct_contracts_bound_wp_and_sp((_s, ps, c, _d) in world()) {
        let b = &ps[0];
        let post = ps[1].post().clone();
        let cp = ContractedProgram::new(c.clone(), b.clone(), post.clone()).unwrap();
        let v = cp.check();
        if v.correct {
            prop_assert!(sp(b, &c).unwrap().is_subset(&post).unwrap());
            prop_assert!(c.implies(&wp(b, &post).unwrap()).unwrap());
        }
        if b.is_feasible() {
            prop_assert!(v.formulations_agree());
        }
    }
}
