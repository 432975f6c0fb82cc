//! Subgroup lattice enumeration by cyclic seeds and layered joins.
//!
//! Every subgroup is the join of the cyclic subgroups it contains, so
//! starting from all cyclic subgroups and repeatedly joining each newly
//! found subgroup with every cyclic subgroup it does not contain reaches
//! the whole lattice.

use std::collections::HashSet;

use rayon::prelude::*;

use super::group::{PermGroup, Table, DEFAULT_ORDER_BOUND};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    #[inline]
    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

struct Found {
    bits: Bits,
    gens: Vec<usize>,
}

/// All subgroups of `group`, each exactly once, ordered by order and then by element list.
pub fn all_subgroups(group: &PermGroup) -> Result<Vec<PermGroup>> {
    all_subgroups_bounded(group, DEFAULT_ORDER_BOUND)
}

pub fn all_subgroups_bounded(group: &PermGroup, bound: usize) -> Result<Vec<PermGroup>> {
    if group.order() > bound {
        return Err(Error::OrderBoundExceeded {
            order: group.order(),
            bound,
        });
    }
    let table = group.table();
    let n = table.n;

    // Cyclic seeds, one per distinct element set.
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut cyclic: Vec<Found> = Vec::new();
    for x in 0..n {
        let mut bits = Bits::empty(n);
        let mut y = 0usize;
        loop {
            bits.set(y);
            y = table.m(x, y);
            if y == 0 {
                break;
            }
        }
        if seen.insert(bits.clone()) {
            let gens = if x == 0 { Vec::new() } else { vec![x] };
            cyclic.push(Found { bits, gens });
        }
    }

    let mut all: Vec<Found> = cyclic
        .iter()
        .map(|c| Found {
            bits: c.bits.clone(),
            gens: c.gens.clone(),
        })
        .collect();
    let mut frontier: Vec<usize> = (0..all.len()).collect();

    while !frontier.is_empty() {
        let joins: Vec<Found> = frontier
            .par_iter()
            .flat_map_iter(|&h| {
                let sub = &all[h];
                cyclic
                    .iter()
                    .filter(|c| c.gens.first().is_some_and(|&g| !sub.bits.has(g)))
                    .map(|c| join(&table, sub, c.gens[0]))
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut next = Vec::new();
        for found in joins {
            if seen.insert(found.bits.clone()) {
                next.push(all.len());
                all.push(found);
            }
        }
        frontier = next;
    }

    let els = group.elements();
    let mut out: Vec<PermGroup> = all
        .into_iter()
        .map(|f| {
            let elements = f.bits.ones().map(|i| els[i].clone()).collect();
            let gens = f.gens.iter().map(|&i| els[i].clone()).collect();
            PermGroup::from_sorted(group.degree(), gens, elements)
        })
        .collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    Ok(out)
}

/// `⟨sub, x⟩`, closing from the already-known subgroup elements.
fn join(table: &Table, sub: &Found, x: usize) -> Found {
    let mut gens = sub.gens.clone();
    gens.push(x);
    let mut bits = sub.bits.clone();
    let mut queue: Vec<usize> = sub.bits.ones().collect();
    while let Some(y) = queue.pop() {
        for &g in &gens {
            let z = table.m(g, y);
            if !bits.has(z) {
                bits.set(z);
                queue.push(z);
            }
        }
    }
    debug_assert!(bits.count().is_multiple_of(sub.bits.count()));
    Found { bits, gens }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    #[test]
    fn cyclic_of_order_two_has_two_subgroups() {
        let g = PermGroup::generate(&[Permutation::parse("(1 2)(4 5)", 6).unwrap()]).unwrap();
        let subs = all_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 2);
        assert_eq!(subs[0].order(), 1);
        assert_eq!(subs[1].order(), 2);
    }

    #[test]
    fn bound_is_enforced() {
        let s4 = PermGroup::generate(&[
            Permutation::parse("(1 2 3 4)", 4).unwrap(),
            Permutation::parse("(1 2)", 4).unwrap(),
        ])
        .unwrap();
        assert!(matches!(
            all_subgroups_bounded(&s4, 20),
            Err(Error::OrderBoundExceeded {
                order: 24,
                bound: 20
            })
        ));
    }

    #[test]
    fn every_result_is_closed_and_unique() {
        let s4 = PermGroup::generate(&[
            Permutation::parse("(1 2 3 4)", 4).unwrap(),
            Permutation::parse("(1 2)", 4).unwrap(),
        ])
        .unwrap();
        let subs = all_subgroups(&s4).unwrap();
        assert_eq!(subs.len(), 30);
        let mut sets = HashSet::new();
        for s in &subs {
            assert!(s.check_closure());
            assert!(s.is_subgroup_of(&s4));
            assert_eq!(24 % s.order(), 0);
            assert!(sets.insert(s.elements().to_vec()));
            if s.order() > 1 {
                assert!(PermGroup::generate(s.generators())
                    .unwrap()
                    .same_elements(s));
            }
        }
    }
}
