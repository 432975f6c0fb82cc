//! Which groups occur as orientation-preserving symmetry groups of embedded
//! Möbius ladders.
//!
//! For `K3,3` only five conjugacy classes of non-trivial automorphisms can be
//! induced by orientation-preserving homeomorphisms. The elements of those
//! classes together with the identity are the *admissible* elements; they
//! happen to form a subgroup of order 36, which is checked on first use.

mod corollary;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

pub use corollary::{corollary_scan_s6, CorollaryReport, ScanException, ScanProgress};

use crate::decoration::{
    catalog, catalog_entry, ladder_decoration, Decoration, Evaluation, KnotLabel,
};
use crate::error::{Error, Result};
use crate::graph::{automorphisms, k33, mobius_ladder, EdgeId, Graph};
use crate::perm::{all_subgroups, are_isomorphic, recognize, GroupName, PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleClass {
    pub representative: Permutation,
    pub cycle_type: Vec<usize>,
}

const REPRESENTATIVES: [&str; 5] = [
    "(1 2 3)",
    "(1 2)(4 5)",
    "(1 2 3)(4 5 6)",
    "(1 4)(2 5)(3 6)",
    "(1 4 2 5 3 6)",
];

/// One representative per admissible conjugacy class of non-trivial automorphisms of K3,3.
pub fn admissible_representatives() -> Vec<AdmissibleClass> {
    REPRESENTATIVES
        .iter()
        .map(|s| {
            let representative = Permutation::parse(s, 6).expect("valid representative");
            let cycle_type = representative.cycle_type();
            AdmissibleClass {
                representative,
                cycle_type,
            }
        })
        .collect()
}

/// Aut(K3,3), computed once.
pub fn k33_automorphisms() -> &'static PermGroup {
    static AUT: OnceLock<PermGroup> = OnceLock::new();
    AUT.get_or_init(|| automorphisms(&k33()).expect("K3,3 is within the default bounds"))
}

fn admissible_cycle_types() -> BTreeSet<Vec<usize>> {
    let mut types: BTreeSet<Vec<usize>> = admissible_representatives()
        .into_iter()
        .map(|c| c.cycle_type)
        .collect();
    types.insert(vec![1; 6]);
    types
}

/// Compares cycle-type membership with conjugacy within Aut(K3,3) over all 72 elements.
pub fn check_cycle_type_agreement() -> Result<()> {
    let aut = k33_automorphisms();
    let mut by_conjugacy: BTreeSet<Permutation> = BTreeSet::new();
    by_conjugacy.insert(aut.identity().clone());
    for class in admissible_representatives() {
        by_conjugacy.extend(aut.conjugacy_class(&class.representative)?);
    }
    let types = admissible_cycle_types();
    let by_type: BTreeSet<Permutation> = aut
        .elements()
        .iter()
        .filter(|p| types.contains(&p.cycle_type()))
        .cloned()
        .collect();
    if by_conjugacy == by_type {
        Ok(())
    } else {
        let differ: Vec<String> = by_conjugacy
            .symmetric_difference(&by_type)
            .map(|p| p.to_string())
            .collect();
        Err(Error::Inconsistent(format!(
            "cycle-type and conjugacy admissibility disagree on {}",
            differ.join(", ")
        )))
    }
}

fn cycle_type_agreement() -> Result<()> {
    static CHECK: OnceLock<Result<()>> = OnceLock::new();
    CHECK.get_or_init(check_cycle_type_agreement).clone()
}

/// Whether `p`, an automorphism of K3,3, is the identity or conjugate to an admissible representative.
pub fn is_admissible(p: &Permutation) -> Result<bool> {
    if p.degree() != 6 || !k33_automorphisms().contains(p) {
        return Err(Error::NotInGroup(p.to_string()));
    }
    cycle_type_agreement()?;
    Ok(admissible_cycle_types().contains(&p.cycle_type()))
}

/// The elements of `group` satisfying `keep`, provided they form a subgroup.
pub fn closed_subset(group: &PermGroup, keep: impl Fn(&Permutation) -> bool) -> Result<PermGroup> {
    let elements: Vec<Permutation> = group
        .elements()
        .iter()
        .filter(|p| keep(p))
        .cloned()
        .collect();
    PermGroup::from_elements(group.degree(), elements)
}

/// The admissible elements of Aut(K3,3) as a group of order 36.
///
/// Fails with [`Error::ClosureFailure`] if the admissible elements are not closed.
pub fn admissible_subgroup() -> Result<PermGroup> {
    static GROUP: OnceLock<Result<PermGroup>> = OnceLock::new();
    GROUP
        .get_or_init(|| {
            cycle_type_agreement()?;
            let types = admissible_cycle_types();
            closed_subset(k33_automorphisms(), |p| types.contains(&p.cycle_type()))
        })
        .clone()
}

/// Subgroups of `group` all of whose elements satisfy `keep`.
///
/// This is the slow path used when the kept elements do not form a subgroup.
pub fn subgroups_within(
    group: &PermGroup,
    keep: impl Fn(&Permutation) -> bool,
) -> Result<Vec<PermGroup>> {
    Ok(all_subgroups(group)?
        .into_iter()
        .filter(|h| h.elements().iter().all(&keep))
        .collect())
}

/// Subgroups of Aut(K3,3) consisting of admissible elements only.
pub fn admissible_subgroups() -> Result<Vec<PermGroup>> {
    match admissible_subgroup() {
        Ok(g) => all_subgroups(&g),
        Err(Error::ClosureFailure(_)) => {
            let types = admissible_cycle_types();
            subgroups_within(k33_automorphisms(), |p| types.contains(&p.cycle_type()))
        }
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub subgroups_found: usize,
    pub all_contain_transposition: bool,
    /// True when no such subgroup exists, so the statement holds trivially.
    pub vacuous: bool,
}

/// Checks that every subgroup of Aut(K3,3) isomorphic to Z2 x Z2 x Z2 contains a transposition.
pub fn lemma_z2cubed() -> Result<LemmaReport> {
    let found: Vec<PermGroup> = all_subgroups(k33_automorphisms())?
        .into_iter()
        .filter(|h| h.order() == 8 && h.is_abelian() && h.elements().iter().all(|p| p.order() <= 2))
        .collect();
    let all_contain_transposition = found
        .iter()
        .all(|h| h.elements().iter().any(|p| p.is_transposition()));
    Ok(LemmaReport {
        subgroups_found: found.len(),
        all_contain_transposition,
        vacuous: found.is_empty(),
    })
}

/// Representatives of the isomorphism classes among `groups`, sorted by (order, code).
pub fn iso_classes<'a>(
    groups: impl IntoIterator<Item = &'a PermGroup>,
) -> Result<Vec<(GroupName, PermGroup)>> {
    let mut out: Vec<(GroupName, PermGroup)> = Vec::new();
    for g in groups {
        let name = recognize(g);
        let mut seen = false;
        for (n, h) in &out {
            let same = match (&name, n) {
                (GroupName::Unrecognized(_), GroupName::Unrecognized(_)) => {
                    are_isomorphic(g, h)?.is_some()
                }
                _ => *n == name,
            };
            if same {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push((name, g.clone()));
        }
    }
    out.sort_by_key(|(n, _)| n.sort_key());
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizedGroup {
    pub name: GroupName,
    pub order: usize,
    /// Name of a decoration realizing the group, see [`witness_decoration`].
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityReport {
    pub n: usize,
    pub groups: Vec<RealizedGroup>,
    pub provenance: String,
}

#[derive(Serialize)]
struct GroupJson<'a> {
    name: String,
    order: usize,
    witness: Option<&'a str>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    n: usize,
    groups: Vec<GroupJson<'a>>,
}

impl RealizabilityReport {
    pub fn names(&self) -> Vec<GroupName> {
        self.groups.iter().map(|g| g.name.clone()).collect()
    }

    pub fn to_json(&self) -> String {
        let report = ReportJson {
            n: self.n,
            groups: self
                .groups
                .iter()
                .map(|g| GroupJson {
                    name: g.name.code(),
                    order: g.order,
                    witness: g.witness.as_deref(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&report).expect("report serializes")
    }
}

impl fmt::Display for RealizabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n = {}: {} groups ({})",
            self.n,
            self.groups.len(),
            self.provenance
        )?;
        for g in &self.groups {
            write!(f, "  {:<17} order {:>3}", g.name.to_string(), g.order)?;
            if let Some(w) = &g.witness {
                write!(f, "  witness {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn realized(name: GroupName, witness: Option<String>) -> RealizedGroup {
    RealizedGroup {
        order: name.order(),
        name,
        witness,
    }
}

/// The groups positively realizable for embeddings of `M_n`.
pub fn classify(n: usize) -> Result<RealizabilityReport> {
    let (groups, provenance) = match n {
        0 => return Err(Error::LadderTooSmall { n, min: 1 }),
        1 => (
            vec![
                realized(GroupName::Trivial, Some("theta-knotted".into())),
                realized(GroupName::Cyclic(2), Some("theta-planar".into())),
            ],
            "embeddings of the theta graph",
        ),
        2 => {
            let aut = automorphisms(&mobius_ladder(2)?)?;
            let subs = all_subgroups(&aut)?;
            let groups = iso_classes(&subs)?
                .into_iter()
                .map(|(name, _)| realized(name, None))
                .collect();
            (groups, "subgroups of Aut(K4) = S4")
        }
        3 => {
            let subs = admissible_subgroups()?;
            let witnesses = catalog();
            let groups = iso_classes(&subs)?
                .into_iter()
                .map(|(name, _)| {
                    let w = witnesses
                        .iter()
                        .find(|e| e.expected == name)
                        .map(|e| e.name.to_string());
                    realized(name, w)
                })
                .collect();
            (groups, "subgroups of the admissible subgroup of Aut(K3,3)")
        }
        _ => {
            let two_n = 2 * n;
            let mut groups = vec![realized(
                GroupName::Trivial,
                Some(format!("ladder-n{n}-distinct")),
            )];
            for k in (2..=two_n).filter(|k| two_n.is_multiple_of(*k)) {
                groups.push(realized(
                    GroupName::Cyclic(k),
                    Some(format!("ladder-n{n}-k{k}-oriented")),
                ));
                let dihedral_witness = if k == two_n {
                    format!("ladder-n{n}-plain")
                } else {
                    format!("ladder-n{n}-k{k}-invertible")
                };
                groups.push(realized(GroupName::Dihedral(k), Some(dihedral_witness)));
            }
            groups.sort_by_key(|g| g.name.sort_key());
            groups.dedup_by(|a, b| a.name == b.name);
            (groups, "subgroups of Aut(M_n) = D_2n")
        }
    };
    Ok(RealizabilityReport {
        n,
        groups,
        provenance: provenance.to_string(),
    })
}

/// A different invertible knot on every edge.
fn distinct_knots(graph: Graph) -> Decoration {
    let mut d = Decoration::new(graph.clone());
    for e in graph.edges() {
        d.set_knot(
            e.id,
            KnotLabel::invertible(&format!("K{}", e.id.0 + 1)),
            None,
        );
    }
    d
}

/// Resolves a witness name from a [`RealizabilityReport`] to its decoration.
pub fn witness_decoration(witness: &str) -> Option<Result<(Decoration, Evaluation)>> {
    if let Some(entry) = catalog_entry(witness) {
        return Some(Ok((entry.decoration, entry.evaluation)));
    }
    let theta = || mobius_ladder(1);
    match witness {
        "theta-planar" => {
            return Some(theta().map(|g| (Decoration::new(g), Evaluation::Stabilizer)))
        }
        "theta-knotted" => {
            return Some(theta().map(|g| {
                let mut d = Decoration::new(g);
                d.set_knot(EdgeId(0), KnotLabel::non_invertible("N"), Some((1, 2)));
                (d, Evaluation::Stabilizer)
            }))
        }
        _ => {}
    }
    let rest = witness.strip_prefix("ladder-n")?;
    let mut parts = rest.split('-');
    let n: usize = parts.next()?.parse().ok()?;
    let result = match (parts.next()?, parts.next(), parts.next()) {
        ("plain", None, None) => mobius_ladder(n).map(Decoration::new),
        ("distinct", None, None) => mobius_ladder(n).map(distinct_knots),
        (k, Some(kind), None) => {
            let k: usize = k.strip_prefix('k')?.parse().ok()?;
            match kind {
                "invertible" => ladder_decoration(n, k, true),
                "oriented" => ladder_decoration(n, k, false),
                _ => return None,
            }
        }
        _ => return None,
    };
    Some(result.map(|d| (d, Evaluation::Stabilizer)))
}
