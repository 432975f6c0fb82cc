//! Golden checks shared by the command line `verify` verb and the test suite.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::decoration::{catalog, ladder_decoration, stabilizer};
use crate::error::{Error, Result};
use crate::graph::{automorphisms, mobius_ladder};
use crate::perm::named::{counter_rotation, paired_flip, side_swap, twin_rotation};
use crate::perm::{all_subgroups, recognize, GroupName, PermGroup, Permutation};
use crate::realizability::{
    admissible_subgroup, admissible_subgroups, classify, corollary_scan_s6, iso_classes,
    k33_automorphisms, lemma_z2cubed, ScanProgress,
};

const GOLDEN_JSON: &str = include_str!("../golden/values.json");

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct Golden {
    pub subgroup_counts: BTreeMap<String, usize>,
    pub z2cubed_subgroups_of_aut_k33: usize,
    pub automorphism_orders: BTreeMap<String, usize>,
    pub catalog_orders: BTreeMap<String, usize>,
    pub s6_scan_survivors: BTreeMap<String, usize>,
}

/// The pinned values shipped with the crate.
pub fn golden() -> Golden {
    serde_json::from_str(GOLDEN_JSON).expect("golden file is valid")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    Check {
        name,
        passed,
        detail,
    }
}

fn codes(names: &[GroupName]) -> Vec<String> {
    names.iter().map(|n| n.code()).collect()
}

fn automorphism_orders(g: &Golden) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for n in 1..=8 {
        let aut = automorphisms(&mobius_ladder(n)?)?;
        let name = recognize(&aut);
        let expected_name = match n {
            1 => GroupName::Cyclic(2),
            2 => GroupName::Symmetric(4),
            3 => GroupName::WreathS3Z2,
            _ => GroupName::Dihedral(2 * n),
        };
        let key = format!("mobius:{n}");
        if Some(&aut.order()) != g.automorphism_orders.get(&key) || name != expected_name {
            bad.push(format!("{key}: order {}, {name}", aut.order()));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "M_1..M_8".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn relations() -> Result<(bool, String)> {
    let (f, g, psi, phi) = (
        twin_rotation(),
        counter_rotation(),
        side_swap(),
        paired_flip(),
    );
    let c = |a: &Permutation, b: &Permutation| a.compose(b);
    let fpsi = c(&f, &psi)?;
    let holds = [
        ("fg = gf", c(&f, &g)? == c(&g, &f)?),
        ("f psi = psi f", fpsi == c(&psi, &f)?),
        ("psi g psi = g^-1", c(&c(&psi, &g)?, &psi)? == g.inverse()),
        ("phi f phi = f^-1", c(&c(&phi, &f)?, &phi)? == f.inverse()),
        ("phi g phi = g^-1", c(&c(&phi, &g)?, &phi)? == g.inverse()),
        (
            "phi (f psi) phi = (f psi)^-1",
            c(&c(&phi, &fpsi)?, &phi)? == fpsi.inverse(),
        ),
    ];
    let failed: Vec<&str> = holds
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(n, _)| *n)
        .collect();
    Ok((
        failed.is_empty(),
        if failed.is_empty() {
            "6 relations".into()
        } else {
            failed.join("; ")
        },
    ))
}

/// The generating sets drawn from f, g, psi, phi and the group each one generates.
pub fn generated_group_table() -> Vec<(&'static str, Vec<Permutation>, GroupName)> {
    use GroupName::*;
    let (f, g, psi, phi) = (
        twin_rotation(),
        counter_rotation(),
        side_swap(),
        paired_flip(),
    );
    let fpsi = f.compose(&psi).expect("same degree");
    vec![
        ("<f psi, phi>", vec![fpsi.clone(), phi.clone()], Dihedral(6)),
        ("<f psi>", vec![fpsi], Cyclic(6)),
        ("<f, phi>", vec![f.clone(), phi.clone()], Dihedral(3)),
        ("<f>", vec![f.clone()], Cyclic(3)),
        ("<psi, phi>", vec![psi.clone(), phi.clone()], Dihedral(2)),
        ("<psi>", vec![psi.clone()], Cyclic(2)),
        (
            "<f, g>",
            vec![f.clone(), g.clone()],
            DirectProduct(vec![Cyclic(3), Cyclic(3)]),
        ),
        (
            "<f, g, phi>",
            vec![f.clone(), g.clone(), phi.clone()],
            GeneralizedDihedralOverZ3xZ3,
        ),
        (
            "<f, g, psi>",
            vec![f.clone(), g.clone(), psi.clone()],
            DirectProduct(vec![Dihedral(3), Cyclic(3)]),
        ),
        (
            "<f, g, phi, psi>",
            vec![f, g, phi, psi],
            DirectProduct(vec![Dihedral(3), Dihedral(3)]),
        ),
    ]
}

fn generated_groups() -> Result<(bool, String)> {
    let admissible = admissible_subgroup()?;
    let mut bad = Vec::new();
    for (label, gens, expected) in generated_group_table() {
        let h = PermGroup::generate(&gens)?;
        let name = recognize(&h);
        if name != expected || h.order() != expected.order() || !h.is_subgroup_of(&admissible) {
            bad.push(format!("{label}: order {}, {name}", h.order()));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "10 groups".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn catalog_check(g: &Golden) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let entries = catalog();
    for e in &entries {
        let h = e.evaluate()?;
        let name = recognize(&h);
        if name != e.expected || Some(&h.order()) != g.catalog_orders.get(e.name) {
            bad.push(format!("{}: order {}, {name}", e.name, h.order()));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} entries", entries.len())
        } else {
            bad.join("; ")
        },
    ))
}

fn ladder_family() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for n in 4..=8 {
        for k in (2..=2 * n).filter(|k| 2 * n % k == 0) {
            let inv = stabilizer(&ladder_decoration(n, k, true)?)?.order();
            let dir = stabilizer(&ladder_decoration(n, k, false)?)?.order();
            if inv != 2 * k || dir != k {
                bad.push(format!("n={n} k={k}: {inv}/{dir}"));
            }
        }
        let aut = automorphisms(&mobius_ladder(n)?)?;
        let brute: Vec<GroupName> = iso_classes(&all_subgroups(&aut)?)?
            .into_iter()
            .map(|(n, _)| n)
            .collect();
        if classify(n)?.names() != brute {
            bad.push(format!(
                "classify({n}) differs from subgroups of Aut(M_{n})"
            ));
        }
    }
    Ok((
        bad.is_empty(),
        if bad.is_empty() {
            "n = 4..8".into()
        } else {
            bad.join("; ")
        },
    ))
}

fn admissibility() -> Result<(bool, String)> {
    let a = admissible_subgroup()?;
    let name = recognize(&a);
    let classes: Vec<GroupName> = iso_classes(&admissible_subgroups()?)?
        .into_iter()
        .map(|(n, _)| n)
        .collect();
    let three = classify(3)?.names();
    let ok = a.order() == 36
        && name == GroupName::DirectProduct(vec![GroupName::Dihedral(3), GroupName::Dihedral(3)])
        && classes == three
        && three.len() == 11;
    Ok((
        ok,
        format!(
            "order {}, {name}, {} classes: {}",
            a.order(),
            classes.len(),
            codes(&classes).join(" ")
        ),
    ))
}

fn lemma(g: &Golden) -> Result<(bool, String)> {
    let r = lemma_z2cubed()?;
    let ok = r.all_contain_transposition && r.subgroups_found == g.z2cubed_subgroups_of_aut_k33;
    let how = if r.vacuous { " (vacuously)" } else { "" };
    Ok((
        ok,
        format!(
            "{} subgroups, all contain a transposition{how}",
            r.subgroups_found
        ),
    ))
}

fn subgroup_counts(g: &Golden) -> Result<(bool, String)> {
    let s4 = automorphisms(&mobius_ladder(2)?)?;
    let counts = [
        ("S4", all_subgroups(&s4)?.len()),
        ("Aut(K3,3)", all_subgroups(k33_automorphisms())?.len()),
    ];
    let ok = counts
        .iter()
        .all(|(k, v)| g.subgroup_counts.get(*k) == Some(v));
    let detail = counts
        .iter()
        .map(|(k, v)| format!("{k}: {v}"))
        .collect::<Vec<_>>()
        .join(", ");
    Ok((ok, detail))
}

fn corollary(g: &Golden, progress: &mut dyn FnMut(ScanProgress)) -> Result<(bool, String)> {
    let r = corollary_scan_s6(progress)?;
    let total_ok = g.subgroup_counts.get("S6") == Some(&r.total_subgroups);
    if r.by_class != g.s6_scan_survivors {
        return Err(Error::Inconsistent(format!(
            "survivor counts changed: {:?}",
            r.by_class
        )));
    }
    let mut detail = format!("{} subgroups, {} survivors", r.total_subgroups, r.survivors);
    if !r.holds() {
        let counts: Vec<String> = r
            .exception_counts()
            .iter()
            .map(|(k, v)| format!("{v} x {k}"))
            .collect();
        detail.push_str(&format!(", exceptions: {}", counts.join(", ")));
    }
    Ok((total_ok && r.holds(), detail))
}

/// Runs every golden check; `deep` adds the S6 subgroup scan.
pub fn run_checks(deep: bool, mut progress: impl FnMut(ScanProgress)) -> Vec<Check> {
    let g = golden();
    let mut out = vec![
        check("automorphism groups", || automorphism_orders(&g)),
        check("relations", relations),
        check("generated groups", generated_groups),
        check("catalog", || catalog_check(&g)),
        check("ladder family", ladder_family),
        check("admissibility", admissibility),
        check("z2 cubed lemma", || lemma(&g)),
        check("subgroup counts", || subgroup_counts(&g)),
    ];
    if deep {
        out.push(check("s6 scan", || corollary(&g, &mut progress)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_parses() {
        let g = golden();
        assert_eq!(g.catalog_orders.len(), 11);
        assert_eq!(g.subgroup_counts["S6"], 1455);
    }

    #[test]
    fn shallow_checks_pass() {
        for c in run_checks(false, |_| {}) {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
