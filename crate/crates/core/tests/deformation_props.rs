//! Properties of the deformation search: agreement with a brute-force
//! enumeration oracle on every small base, soundness of found witnesses, and
//! soundness of the obstruction certificate.

mod common;

use multimult::catalog;
use multimult::deformation::{
    find_obstruction, is_deformation, search_deformation, DeformationOutcome, DeformationProblem,
};
use multimult::multisemigroup::{ElemSet, Multisemigroup};
use multimult::Carrier;

/// All 256 multioperation tables on two elements, as bitset tables.
fn all_two_element_tables() -> Vec<Multisemigroup> {
    let mut out = Vec::new();
    for code in 0..256u32 {
        let carrier = Carrier::new(["a", "b"]).unwrap();
        let mut sets = Vec::with_capacity(4);
        for pair in 0..4 {
            let bits = (code >> (2 * pair)) & 3;
            let mut set = ElemSet::empty(2);
            if bits & 1 != 0 {
                set.insert(0);
            }
            if bits & 2 != 0 {
                set.insert(1);
            }
            sets.push(set);
        }
        out.push(Multisemigroup::from_sets(carrier, sets).unwrap());
    }
    out
}

/// On every associative two-element base, the pruned search and the
/// unpruned brute-force oracle agree on deformability within bound 3, and
/// every found witness really is a deformation. Also: whenever the
/// obstruction fires, both report that nothing exists.
#[test]
fn search_matches_brute_force_on_all_two_element_bases() {
    let start = std::time::Instant::now();
    let mut associative = 0;
    let mut found = 0;
    let mut obstructed = 0;
    for base in all_two_element_tables() {
        if !base.is_associative() {
            continue;
        }
        associative += 1;
        let oracle = common::brute_force_deformation_exists(&base, 3);
        let problem = DeformationProblem::new(base.clone(), 3).without_obstruction_check();
        let result = search_deformation(&problem).unwrap();
        match result.outcome {
            DeformationOutcome::Found(witness) => {
                found += 1;
                assert!(oracle, "search found a witness the oracle says cannot exist");
                let check = is_deformation(&witness, &base).unwrap();
                assert!(check.is_deformation, "{:?}", check.reasons);
            }
            DeformationOutcome::NoneWithinBound => {
                assert!(!oracle, "oracle found a witness the search missed");
            }
            DeformationOutcome::Obstructed { .. } => {
                panic!("obstruction check was disabled")
            }
        }
        if find_obstruction(&base).is_some() {
            obstructed += 1;
            assert!(
                !oracle,
                "an obstructed base cannot have a deformation at any bound"
            );
        }
    }
    assert!(associative > 0 && found > 0 && obstructed > 0);
    assert!(
        start.elapsed().as_secs() < 1,
        "two-element sweep took {:?}",
        start.elapsed()
    );
}

/// The enabled obstruction check and the disabled exhaustive search tell a
/// consistent story on the two-element fixture for every bound up to 4.
#[test]
fn obstruction_certificate_is_confirmed_by_search() {
    let base = catalog::obstructed_fixture();
    for max in 1..=4 {
        let with_check = search_deformation(&DeformationProblem::new(base.clone(), max)).unwrap();
        assert!(matches!(
            with_check.outcome,
            DeformationOutcome::Obstructed { .. }
        ));
        let without = search_deformation(
            &DeformationProblem::new(base.clone(), max).without_obstruction_check(),
        )
        .unwrap();
        assert_eq!(without.outcome, DeformationOutcome::NoneWithinBound);
    }
}

/// Node counts are stable across repeated runs and across worker counts for
/// exhaustive (none-found) searches.
#[test]
fn node_counts_are_deterministic() {
    let base = catalog::obstructed_fixture();
    let problem = DeformationProblem::new(base, 4).without_obstruction_check();
    let a = search_deformation(&problem).unwrap();
    let b = search_deformation(&problem).unwrap();
    assert_eq!(a.nodes, b.nodes);
    // A fully explored search visits every assignment the brute force does,
    // minus pruned subtrees; with 7 entries and 4 values the unpruned count
    // is 4^7 plus interior assignments.
    assert!(a.nodes > 0);
    let parallel = search_deformation(
        &DeformationProblem::new(catalog::obstructed_fixture(), 4)
            .without_obstruction_check()
            .with_parallelism(2),
    )
    .unwrap();
    assert_eq!(parallel.outcome, DeformationOutcome::NoneWithinBound);
    assert_eq!(parallel.nodes, a.nodes, "exhaustive searches visit the same nodes");
}

/// Found witnesses from larger bases remain sound.
#[test]
fn found_witnesses_are_deformations() {
    let mut rng = <rand::rngs::StdRng as rand::SeedableRng>::seed_from_u64(11);
    let mut bases = vec![catalog::s3_multisemigroup()];
    for _ in 0..5 {
        let base = common::random_transformation_semigroup(&mut rng);
        if base.carrier().len() <= 6 {
            bases.push(base);
        }
    }
    for base in bases {
        let result = search_deformation(&DeformationProblem::new(base.clone(), 6)).unwrap();
        match result.outcome {
            DeformationOutcome::Found(witness) => {
                let check = is_deformation(&witness, &base).unwrap();
                assert!(check.is_deformation, "{:?}", check.reasons);
            }
            DeformationOutcome::Obstructed { a, b } => {
                // The certificate must actually hold on the base.
                let aa = base.product(&a, &a).unwrap();
                assert_eq!(aa, vec![a.clone()]);
                let ab = base.product(&a, &b).unwrap();
                let ba = base.product(&b, &a).unwrap();
                let holds = |set: &Vec<String>| set.contains(&a) && set.contains(&b);
                assert!(holds(&ab) || holds(&ba));
            }
            DeformationOutcome::NoneWithinBound => {}
        }
    }
}
