//! Randomized properties, shared by the proptest suite and the acceptance runner.

use std::collections::BTreeSet;

use mobius_tsg_core::decoration::{stabilizer, Decoration, KnotLabel};
use mobius_tsg_core::graph::{automorphisms, automorphisms_bounded, k33, mobius_ladder, Graph};
use mobius_tsg_core::perm::Permutation;
use proptest::prelude::*;
use proptest::sample::subsequence;
use proptest::test_runner::TestCaseError;

use super::{naive_automorphisms, P};

const LABELS: [&str; 4] = ["A", "B", "N", "M"];

/// Labels A and B are invertible, N and M are not.
pub fn label(i: usize) -> KnotLabel {
    if i < 2 {
        KnotLabel::invertible(LABELS[i])
    } else {
        KnotLabel::non_invertible(LABELS[i])
    }
}

#[derive(Debug, Clone)]
pub struct KnotChoice {
    edge: usize,
    label: usize,
    flip: bool,
}

fn base_graph(choice: usize) -> Graph {
    match choice {
        0 => k33(),
        n => mobius_ladder(n + 3).unwrap(),
    }
}

fn decorate(g: &Graph, knots: &[KnotChoice], arounds: &[(usize, usize)]) -> Decoration {
    let mut d = Decoration::new(g.clone());
    for k in knots {
        let e = &g.edges()[k.edge % g.edges().len()];
        let l = label(k.label);
        let orientation = (!l.invertible).then_some(if k.flip { (e.v, e.u) } else { (e.u, e.v) });
        d.set_knot(e.id, l, orientation);
    }
    for &(a, b) in arounds {
        let (ea, eb) = (
            &g.edges()[a % g.edges().len()],
            &g.edges()[b % g.edges().len()],
        );
        if ea.id != eb.id && ea.shared_endpoint(eb).is_some() {
            d.add_knotted_around(ea.id, eb.id);
        }
    }
    d
}

fn knot_choice() -> impl Strategy<Value = KnotChoice> {
    (0..32usize, 0..4usize, any::<bool>()).prop_map(|(edge, label, flip)| KnotChoice {
        edge,
        label,
        flip,
    })
}

fn knot_list(max: usize) -> impl Strategy<Value = Vec<KnotChoice>> {
    prop::collection::vec(knot_choice(), 0..max)
}

fn around_list() -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0..32usize, 0..32usize), 0..3)
}

pub type ExtensionCase = (usize, Vec<KnotChoice>, Vec<KnotChoice>, Vec<(usize, usize)>);

pub fn extension_case() -> impl Strategy<Value = ExtensionCase> {
    (0..3usize, knot_list(4), knot_list(4), around_list())
}

/// New knots go on unknotted edges and use labels the base does not use;
/// reusing a label can enlarge the symmetry.
pub fn check_monotone((graph, base, extra, arounds): ExtensionCase) -> Result<(), TestCaseError> {
    let g = base_graph(graph);
    let small = decorate(&g, &base, &arounds);
    let mut big = small.clone();
    for k in &extra {
        let e = &g.edges()[k.edge % g.edges().len()];
        if big.knots().contains_key(&e.id) {
            continue;
        }
        let l = label(k.label);
        let fresh = KnotLabel {
            name: format!("new-{}", l.name),
            invertible: l.invertible,
        };
        let orientation = (!l.invertible).then_some(if k.flip { (e.v, e.u) } else { (e.u, e.v) });
        big.set_knot(e.id, fresh, orientation);
    }
    prop_assert!(big.extends(&small));
    let (s, b) = (stabilizer(&small).unwrap(), stabilizer(&big).unwrap());
    prop_assert!(b.is_subgroup_of(&s));
    Ok(())
}

pub type RelabelCase = (usize, Vec<KnotChoice>, Vec<(usize, usize)>, u64);

pub fn relabel_case() -> impl Strategy<Value = RelabelCase> {
    (0..3usize, knot_list(5), around_list(), any::<u64>())
}

pub fn check_equivariance((graph, knots, arounds, seed): RelabelCase) -> Result<(), TestCaseError> {
    use rand::{seq::SliceRandom, SeedableRng};
    let g = base_graph(graph);
    let mut images: Vec<usize> = (1..=g.vertex_count()).collect();
    images.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
    let pi = Permutation::from_images(&images).unwrap();

    let aut = automorphisms(&g).unwrap();
    let moved = automorphisms(&g.relabel(&pi).unwrap()).unwrap();
    prop_assert_eq!(moved, aut.conjugate_by(&pi).unwrap());

    let d = decorate(&g, &knots, &arounds);
    let stab = stabilizer(&d).unwrap();
    let moved = stabilizer(&d.relabel(&pi).unwrap()).unwrap();
    prop_assert_eq!(moved, stab.conjugate_by(&pi).unwrap());
    Ok(())
}

pub fn random_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=8usize).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .collect();
        let len = pairs.len();
        (Just(n), subsequence(pairs, 0..=len))
    })
}

pub fn check_against_naive((n, edges): (usize, Vec<(usize, usize)>)) -> Result<(), TestCaseError> {
    let g = Graph::new(n, &edges).unwrap();
    let got: BTreeSet<P> = automorphisms_bounded(&g, 8, 40320)
        .unwrap()
        .elements()
        .iter()
        .map(|p| super::from_images(&p.images()))
        .collect();
    let zero_based: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    prop_assert_eq!(got, naive_automorphisms(n, &zero_based));
    Ok(())
}

pub fn random_perm() -> impl Strategy<Value = Permutation> {
    (1..=12usize).prop_flat_map(|degree| {
        Just((1..=degree).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_images(&images).unwrap())
    })
}

pub fn check_round_trip(p: Permutation) -> Result<(), TestCaseError> {
    let text = p.to_string();
    prop_assert_eq!(Permutation::parse(&text, p.degree()).unwrap(), p);
    Ok(())
}
