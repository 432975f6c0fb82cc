mod common;

use common::props::*;
use mobius_tsg_core::decoration::{stabilizer, Decoration};
use mobius_tsg_core::graph::k33;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn stabilizer_shrinks_under_extension(case in extension_case()) {
        check_monotone(case)?;
    }

    #[test]
    fn relabeling_is_equivariant(case in relabel_case()) {
        check_equivariance(case)?;
    }

    #[test]
    fn backtracking_matches_naive(case in random_graph()) {
        check_against_naive(case)?;
    }

    #[test]
    fn cycle_notation_round_trips(p in random_perm()) {
        check_round_trip(p)?;
    }
}

#[test]
fn reused_label_can_enlarge_stabilizer() {
    let g = k33();
    let mut one = Decoration::new(g.clone());
    one.set_knot(g.edges()[0].id, label(0), None);
    let mut every = one.clone();
    for e in g.edges() {
        every.set_knot(e.id, label(0), None);
    }
    assert!(every.extends(&one));
    assert_eq!(stabilizer(&one).unwrap().order(), 8);
    assert_eq!(stabilizer(&every).unwrap().order(), 72);
}
