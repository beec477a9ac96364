use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sombor_core::oracle::random_tree_with_degrees;
use sombor_core::{
    attach, build_greedy_tree, check_path_condition, decompose, enumerate_trees, incremental_sombor, local_search,
    strip_last, DecompositionError, Degree, DegreeSequence, SearchConfig, Tree,
};

fn seq(s: &str) -> DegreeSequence {
    s.parse().unwrap()
}

fn check_decomposition(t: &Tree) {
    let dec = decompose(t).unwrap_or_else(|e| panic!("{e} on {:?}", t.edges()));
    let k = t.internal_degree_sequence().len();
    assert_eq!(dec.steps.len(), k.saturating_sub(1));
    assert_eq!(dec.trees.len(), k.max(1));
    assert_eq!(dec.trees.last().unwrap(), t);
    for (i, tt) in dec.trees.iter().enumerate() {
        assert!(check_path_condition(tt).holds(), "T_{} of {:?}", i + 1, t.edges());
        if k > 0 {
            let expected = t.internal_degree_sequence().as_slice()[..=i].to_vec();
            assert_eq!(tt.internal_degree_sequence().as_slice(), expected.as_slice());
        }
    }
    let diff = (dec.replayed_value() - t.sombor()).abs();
    assert!(diff <= 1e-12, "replay off by {diff:e} on {:?}", t.edges());
}

#[test]
fn examples() {
    let dec = decompose(&build_greedy_tree(&seq("4,3,2")).into_tree()).unwrap();
    assert_eq!(dec.steps.len(), 2);
    assert_eq!(dec.base.canonical_form(), Tree::star(4).canonical_form());
    assert!((dec.base_value - 4.0 * 17f64.sqrt()).abs() < 1e-12);

    let star = decompose(&Tree::star(5)).unwrap();
    assert!(star.steps.is_empty());

    let (prev, _) = strip_last(&build_greedy_tree(&seq("3,3,2")).into_tree()).unwrap();
    assert_eq!(prev.canonical_form(), build_greedy_tree(&seq("3,3")).tree().canonical_form());

    let chain = Tree::new(7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)]).unwrap();
    assert!(matches!(decompose(&chain), Err(DecompositionError::PathConditionViolated(_))));
}

#[test]
fn incremental_formula_examples() {
    let so = incremental_sombor(3.0 * 10f64.sqrt(), Degree::new(2).unwrap(), Degree::new(3).unwrap());
    let direct = build_greedy_tree(&seq("3,2")).tree().sombor();
    assert!((so - direct).abs() < 1e-12);

    let k2 = 2f64.sqrt();
    let so = incremental_sombor(k2, Degree::new(2).unwrap(), Degree::ONE);
    assert!((so - (k2 + 2.0 * 5f64.sqrt() - k2)).abs() < 1e-12);
    assert!((so - Tree::path(3).sombor()).abs() < 1e-12);
}

#[test]
fn attach_examples() {
    let star = Tree::star(3);
    let t = attach(&star, 1, Degree::new(2).unwrap()).unwrap();
    assert_eq!(t.vertex_count(), 5);
    assert_eq!(t.degree(1), 2);
    assert_eq!(t.canonical_form(), build_greedy_tree(&seq("3,2")).tree().canonical_form());
    assert!(matches!(attach(&star, 0, Degree::new(2).unwrap()), Err(DecompositionError::NotPendant(0))));
}

#[test]
fn every_small_path_condition_tree_decomposes() {
    let mut checked = 0;
    for d in DegreeSequence::all_up_to(10) {
        if d.len() > 8 {
            continue;
        }
        for t in enumerate_trees(&d, u64::MAX).unwrap() {
            if check_path_condition(&t).holds() {
                check_decomposition(&t);
                checked += 1;
            }
        }
    }
    assert!(checked > 1000, "{checked}");
}

#[test]
fn local_search_fixed_points_decompose() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for d in DegreeSequence::all_up_to(22).into_iter().filter(|d| d.len() <= 8).step_by(7) {
        for _ in 0..3 {
            let start = random_tree_with_degrees(&d, &mut rng);
            let fixed = local_search(&start, SearchConfig::default()).unwrap().tree;
            check_decomposition(&fixed);
        }
    }
}

#[test]
fn attach_then_strip_round_trips_on_greedy_trees() {
    for d in DegreeSequence::all_up_to(14).into_iter().filter(|d| !d.is_empty()) {
        let t = build_greedy_tree(&d).into_tree();
        let (prev, step) = strip_last(&t).unwrap();
        let rebuilt = attach(&prev, step.attached_at, Degree::new(step.d_t).unwrap()).unwrap();
        assert_eq!(rebuilt.canonical_form(), t.canonical_form(), "{d}");
        let so = incremental_sombor(prev.sombor(), Degree::new(step.d_t).unwrap(), Degree::new(step.d_p).unwrap());
        assert!((so - t.sombor()).abs() <= 1e-12, "{d}");
    }
}
