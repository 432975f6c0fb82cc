mod common;

use std::collections::BTreeSet;

use common::{closure, order, subgroups, P};
use mobius_tsg_core::decoration::{catalog, ladder_decoration, stabilizer};
use mobius_tsg_core::graph::{automorphisms, k33, mobius_ladder};
use mobius_tsg_core::perm::{recognize, GroupName};
use mobius_tsg_core::realizability::{
    admissible_subgroup, classify, is_admissible, witness_decoration, RealizabilityReport,
};

fn codes(r: &RealizabilityReport) -> Vec<String> {
    r.groups.iter().map(|g| g.name.code()).collect()
}

/// Names a subgroup of a dihedral group from its order and whether it is cyclic.
fn dihedral_subgroup_code(h: &BTreeSet<P>) -> String {
    let m = h.len();
    if m == 1 {
        "1".to_string()
    } else if h.iter().any(|p| order(p) == m) {
        format!("Z{m}")
    } else {
        format!("D{}", m / 2)
    }
}

#[test]
fn ladder_classification_matches_subgroups_of_dihedral() {
    for n in 4..=8 {
        let aut = automorphisms(&mobius_ladder(n).unwrap()).unwrap();
        assert_eq!(aut.order(), 4 * n);
        let elements: BTreeSet<P> = aut
            .elements()
            .iter()
            .map(|p| common::from_images(&p.images()))
            .collect();
        let mut oracle: Vec<(usize, String)> = subgroups(&elements)
            .iter()
            .map(|h| (h.len(), dihedral_subgroup_code(h)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        // Two generated names coincide: D1 is Z2.
        oracle.iter_mut().for_each(|(_, c)| {
            if c == "D1" {
                *c = "Z2".into()
            }
        });
        oracle.sort();
        oracle.dedup();
        let got: Vec<(usize, String)> = classify(n)
            .unwrap()
            .groups
            .iter()
            .map(|g| (g.order, g.name.code()))
            .collect();
        assert_eq!(got, oracle, "n = {n}");
    }
}

#[test]
fn ladder_stabilizer_orders() {
    for n in 4..=8 {
        for k in (2..=2 * n).filter(|k| 2 * n % k == 0) {
            let inv = stabilizer(&ladder_decoration(n, k, true).unwrap()).unwrap();
            let dir = stabilizer(&ladder_decoration(n, k, false).unwrap()).unwrap();
            assert_eq!(inv.order(), 2 * k, "n={n} k={k}");
            assert_eq!(dir.order(), k, "n={n} k={k}");
            assert_eq!(recognize(&dir), GroupName::Cyclic(k));
        }
    }
}

#[test]
fn catalog_groups() {
    let orders: Vec<usize> = catalog()
        .iter()
        .map(|e| e.evaluate().unwrap().order())
        .collect();
    assert_eq!(orders, vec![12, 6, 6, 3, 4, 2, 36, 18, 18, 9, 1]);
    for e in catalog() {
        assert_eq!(recognize(&e.evaluate().unwrap()), e.expected, "{}", e.name);
    }
}

#[test]
fn admissible_set_by_brute_force() {
    let allowed: [&[usize]; 6] = [
        &[1; 6],
        &[3, 1, 1, 1],
        &[2, 2, 1, 1],
        &[3, 3],
        &[2, 2, 2],
        &[6],
    ];
    let aut = automorphisms(&k33()).unwrap();
    let filtered: Vec<_> = aut
        .elements()
        .iter()
        .filter(|p| allowed.contains(&p.cycle_type().as_slice()))
        .collect();
    assert_eq!(filtered.len(), 36);
    for p in aut.elements() {
        assert_eq!(is_admissible(p).unwrap(), filtered.contains(&p), "{p}");
    }
    let naive: BTreeSet<P> = filtered
        .iter()
        .map(|p| common::from_images(&p.images()))
        .collect();
    let gens: Vec<P> = naive.iter().cloned().collect();
    assert_eq!(closure(6, &gens), naive);
    assert_eq!(admissible_subgroup().unwrap().order(), 36);
}

#[test]
fn three_has_eleven_classes() {
    let r = classify(3).unwrap();
    assert_eq!(
        codes(&r),
        vec![
            "1",
            "Z2",
            "Z3",
            "D2",
            "D3",
            "Z6",
            "Z3xZ3",
            "D6",
            "(Z3xZ3):Z2",
            "D3xZ3",
            "D3xD3"
        ]
    );
    for g in &r.groups {
        let (d, _) = witness_decoration(g.witness.as_deref().unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(d.graph(), &k33());
    }
}

#[test]
fn small_ladders() {
    assert_eq!(codes(&classify(1).unwrap()), vec!["1", "Z2"]);
    assert_eq!(classify(2).unwrap().groups.len(), 9);
    assert!(classify(0).is_err());
}

#[test]
fn report_json_schema() {
    let r = classify(3).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["n"], 3);
    let groups = v["groups"].as_array().unwrap();
    assert_eq!(groups.len(), 11);
    assert_eq!(groups[10]["name"], "D3xD3");
    assert_eq!(groups[10]["order"], 36);
    assert_eq!(groups[10]["witness"], "fan-D3xD3");
    let r2 = classify(2).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r2.to_json()).unwrap();
    assert!(v["groups"][0]["witness"].is_null());
}

/// The alternating group on four of the six points has no transposition and no
/// element of order 4 or 5, yet it is not among the groups realized for M_3
/// (it does not embed in the admissible subgroup).
#[test]
fn a4_passes_the_s6_filter_but_is_not_realized() {
    use mobius_tsg_core::perm::{PermGroup, Permutation};
    let a4 = PermGroup::generate(&[
        Permutation::parse("(1 2 3)", 6).unwrap(),
        Permutation::parse("(1 2)(3 4)", 6).unwrap(),
    ])
    .unwrap();
    assert_eq!(recognize(&a4), GroupName::Alternating(4));
    assert!(a4
        .elements()
        .iter()
        .all(|p| !p.is_transposition() && p.order() != 4 && p.order() != 5));
    assert!(!classify(3)
        .unwrap()
        .names()
        .contains(&GroupName::Alternating(4)));
    let admissible = admissible_subgroup().unwrap();
    for h in mobius_tsg_core::perm::all_subgroups(&admissible).unwrap() {
        if h.order() == 12 {
            assert!(mobius_tsg_core::perm::are_isomorphic(&h, &a4)
                .unwrap()
                .is_none());
        }
    }
}
