use std::collections::BTreeMap;

use serde::Serialize;

use super::group::{small_generating_set, PermGroup, Table, DEFAULT_ORDER_BOUND};
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Isomorphism invariants used to prune isomorphism searches.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    /// element order -> number of elements of that order
    pub order_spectrum: BTreeMap<usize, usize>,
    pub abelian: bool,
    pub center_order: usize,
    /// conjugacy class sizes, ascending
    pub conj_class_sizes: Vec<usize>,
    pub derived_subgroup_order: usize,
}

impl Fingerprint {
    pub fn of(group: &PermGroup) -> Self {
        Self::from_table(&group.table())
    }

    pub(crate) fn from_table(t: &Table) -> Self {
        let n = t.n;
        let mut order_spectrum = BTreeMap::new();
        for &o in &t.orders {
            *order_spectrum.entry(o as usize).or_insert(0) += 1;
        }
        let class_of = conjugacy_classes(t);
        let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
        for &c in &class_of {
            *sizes.entry(c).or_insert(0) += 1;
        }
        let mut conj_class_sizes: Vec<usize> = sizes.into_values().collect();
        conj_class_sizes.sort_unstable();
        let center_order = conj_class_sizes.iter().filter(|&&s| s == 1).count();

        // The commutator set is closed under conjugation, so its span is the derived subgroup.
        let mut commutators = vec![false; n];
        for a in 0..n {
            for b in 0..n {
                let ab = t.m(a, b);
                let ba = t.m(b, a);
                commutators[t.m(ab, t.inv[ba] as usize)] = true;
            }
        }
        let gens: Vec<usize> = (1..n).filter(|&i| commutators[i]).collect();
        let derived_subgroup_order = t.span(&gens).iter().filter(|&&m| m).count();

        Self {
            order: n,
            order_spectrum,
            abelian: center_order == n,
            center_order,
            conj_class_sizes,
            derived_subgroup_order,
        }
    }
}

/// Class id per element index.
pub(crate) fn conjugacy_classes(t: &Table) -> Vec<usize> {
    let n = t.n;
    let mut class_of = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        for g in 0..n {
            let y = t.m(t.m(g, x), t.inv[g] as usize);
            class_of[y] = next;
        }
        next += 1;
    }
    class_of
}

fn class_sizes(t: &Table) -> Vec<usize> {
    let class_of = conjugacy_classes(t);
    let mut counts = vec![0usize; t.n];
    for &c in &class_of {
        counts[c] += 1;
    }
    class_of.iter().map(|&c| counts[c]).collect()
}

/// An isomorphism given by images of a generating set of the source group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoMap {
    pub generator_images: Vec<(Permutation, Permutation)>,
}

/// Searches for an isomorphism `g -> h`, backtracking over generator images.
///
/// Returns `None` without search when fingerprints differ. A returned map
/// has been checked to extend to a bijective homomorphism.
pub fn are_isomorphic(g: &PermGroup, h: &PermGroup) -> Result<Option<IsoMap>> {
    for grp in [g, h] {
        if grp.order() > DEFAULT_ORDER_BOUND {
            return Err(Error::OrderBoundExceeded {
                order: grp.order(),
                bound: DEFAULT_ORDER_BOUND,
            });
        }
    }
    if g.order() != h.order() {
        return Ok(None);
    }
    let tg = g.table();
    let th = h.table();
    if Fingerprint::from_table(&tg) != Fingerprint::from_table(&th) {
        return Ok(None);
    }
    Ok(isomorphism_with_tables(g, &tg, h, &th))
}

pub(crate) fn isomorphism_with_tables(
    g: &PermGroup,
    tg: &Table,
    h: &PermGroup,
    th: &Table,
) -> Option<IsoMap> {
    let gens: Vec<usize> = small_generating_set(g.elements())
        .iter()
        .map(|p| g.index_of(p).expect("generator in group"))
        .collect();
    if gens.is_empty() {
        return Some(IsoMap {
            generator_images: Vec::new(),
        });
    }
    let cs_g = class_sizes(tg);
    let cs_h = class_sizes(th);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            (0..th.n)
                .filter(|&y| th.orders[y] == tg.orders[x] && cs_h[y] == cs_g[x])
                .collect()
        })
        .collect();

    let mut images = Vec::with_capacity(gens.len());
    if !search(tg, th, &gens, &candidates, &mut images) {
        return None;
    }
    let map = extend(tg, th, &gens, &images).expect("search only accepts consistent maps");
    debug_assert!(is_bijective_hom(tg, th, &map));
    Some(IsoMap {
        generator_images: gens
            .iter()
            .zip(&images)
            .map(|(&x, &y)| (g.elements()[x].clone(), h.elements()[y].clone()))
            .collect(),
    })
}

fn search(
    tg: &Table,
    th: &Table,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> bool {
    let depth = images.len();
    if depth == gens.len() {
        return extend(tg, th, gens, images).is_some();
    }
    for &y in &candidates[depth] {
        images.push(y);
        if extend(tg, th, &gens[..=depth], images).is_some()
            && search(tg, th, gens, candidates, images)
        {
            return true;
        }
        images.pop();
    }
    false
}

/// Extends generator images along the Cayley graph of `⟨gens⟩`. Fails on an
/// inconsistent edge or when two elements collide on the same image.
fn extend(tg: &Table, th: &Table, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; tg.n];
    let mut used = vec![false; th.n];
    map[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for (&gx, &gy) in gens.iter().zip(images) {
            let y = tg.m(gx, x);
            let img = th.m(gy, map[x]);
            if map[y] == UNSET {
                if used[img] {
                    return None;
                }
                used[img] = true;
                map[y] = img;
                queue.push(y);
            } else if map[y] != img {
                return None;
            }
        }
    }
    Some(map)
}

fn is_bijective_hom(tg: &Table, th: &Table, map: &[usize]) -> bool {
    let mut seen = vec![false; th.n];
    for &m in map {
        if m >= th.n || std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    (0..tg.n).all(|a| (0..tg.n).all(|b| map[tg.m(a, b)] == th.m(map[a], map[b])))
}

/// Applies a verified isomorphism to an element of the source group.
pub fn apply_iso(
    g: &PermGroup,
    h: &PermGroup,
    iso: &IsoMap,
    x: &Permutation,
) -> Option<Permutation> {
    let tg = g.table();
    let th = h.table();
    let gens: Vec<usize> = iso
        .generator_images
        .iter()
        .map(|(a, _)| g.index_of(a))
        .collect::<Option<_>>()?;
    let imgs: Vec<usize> = iso
        .generator_images
        .iter()
        .map(|(_, b)| h.index_of(b))
        .collect::<Option<_>>()?;
    let map = extend(&tg, &th, &gens, &imgs)?;
    let xi = g.index_of(x)?;
    let y = map.get(xi).copied().filter(|&m| m != usize::MAX)?;
    Some(h.elements()[y].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(gens: &[&str], degree: usize) -> PermGroup {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse(s, degree).unwrap())
            .collect();
        PermGroup::generate(&gens).unwrap()
    }

    #[test]
    fn trivial_groups_are_isomorphic() {
        let a = PermGroup::trivial(3).unwrap();
        let b = PermGroup::trivial(6).unwrap();
        assert!(are_isomorphic(&a, &b).unwrap().is_some());
    }

    #[test]
    fn six_cycle_matches_reference_cyclic_group() {
        let z6 = grp(&["(1 5 3 4 2 6)"], 6);
        let reference = grp(&["(1 2)(3 4 5)"], 5);
        let iso = are_isomorphic(&z6, &reference).unwrap().unwrap();
        for x in z6.elements() {
            let y = apply_iso(&z6, &reference, &iso, x).unwrap();
            assert_eq!(x.order(), y.order());
        }
    }

    #[test]
    fn s3_and_z6_differ() {
        let s3 = grp(&["(1 2 3)", "(1 2)"], 3);
        let z6 = grp(&["(1 2)(3 4 5)"], 5);
        assert_ne!(Fingerprint::of(&s3), Fingerprint::of(&z6));
        assert!(are_isomorphic(&s3, &z6).unwrap().is_none());
    }

    #[test]
    fn fingerprint_of_s4() {
        let s4 = grp(&["(1 2 3 4)", "(1 2)"], 4);
        let fp = Fingerprint::of(&s4);
        assert_eq!(fp.order, 24);
        assert!(!fp.abelian);
        assert_eq!(fp.center_order, 1);
        assert_eq!(fp.conj_class_sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(fp.derived_subgroup_order, 12);
        assert_eq!(fp.order_spectrum[&2], 9);
    }

    #[test]
    fn different_abelian_types_are_rejected() {
        let z8 = grp(&["(1 2 3 4 5 6 7 8)"], 8);
        let z2z4 = grp(&["(1 2 3 4)", "(5 6)"], 6);
        assert!(are_isomorphic(&z8, &z2z4).unwrap().is_none());
    }
}
