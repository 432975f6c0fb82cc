//! Naming finite groups by matching them against reference permutation groups.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::group::{PermGroup, Table, DEFAULT_ORDER_BOUND};
use super::iso::{isomorphism_with_tables, Fingerprint};
use super::permutation::Permutation;

/// A recognized isomorphism type.
///
/// Abelian groups are named by invariant factors in ascending order
/// (`Z2xZ4`), except the Klein four-group, which is `Dihedral(2)`. Direct
/// products list non-abelian factors first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupName {
    Trivial,
    Cyclic(usize),
    /// Symmetries of a k-gon, order 2k.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    DirectProduct(Vec<GroupName>),
    /// (Z3 x Z3) ⋊ Z2 with the inverting action.
    GeneralizedDihedralOverZ3xZ3,
    WreathS3Z2,
    Unrecognized(Box<Fingerprint>),
}

impl GroupName {
    pub fn order(&self) -> usize {
        match self {
            GroupName::Trivial => 1,
            GroupName::Cyclic(k) => *k,
            GroupName::Dihedral(k) => 2 * k,
            GroupName::Symmetric(k) => factorial(*k),
            GroupName::Alternating(k) => factorial(*k) / 2,
            GroupName::DirectProduct(fs) => fs.iter().map(GroupName::order).product(),
            GroupName::GeneralizedDihedralOverZ3xZ3 => 18,
            GroupName::WreathS3Z2 => 72,
            GroupName::Unrecognized(fp) => fp.order,
        }
    }

    /// Compact ASCII code used in JSON reports, e.g. `D3xD3`, `Z6`, `(Z3xZ3):Z2`.
    pub fn code(&self) -> String {
        match self {
            GroupName::Trivial => "1".into(),
            GroupName::Cyclic(k) => format!("Z{k}"),
            GroupName::Dihedral(k) => format!("D{k}"),
            GroupName::Symmetric(k) => format!("S{k}"),
            GroupName::Alternating(k) => format!("A{k}"),
            GroupName::DirectProduct(fs) => {
                fs.iter().map(GroupName::code).collect::<Vec<_>>().join("x")
            }
            GroupName::GeneralizedDihedralOverZ3xZ3 => "(Z3xZ3):Z2".into(),
            GroupName::WreathS3Z2 => "S3wrZ2".into(),
            GroupName::Unrecognized(fp) => format!("?{}", fp.order),
        }
    }

    /// Parses a code produced by [`code`](Self::code). Unrecognized codes are rejected.
    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "1" => return Some(GroupName::Trivial),
            "(Z3xZ3):Z2" => return Some(GroupName::GeneralizedDihedralOverZ3xZ3),
            "S3wrZ2" => return Some(GroupName::WreathS3Z2),
            _ => {}
        }
        let parts: Vec<&str> = code.split('x').collect();
        if parts.len() > 1 {
            return parts
                .iter()
                .map(|p| Self::from_code(p))
                .collect::<Option<Vec<_>>>()
                .map(GroupName::DirectProduct);
        }
        let mut chars = code.chars();
        let head = chars.next()?;
        let k: usize = chars.as_str().parse().ok()?;
        match head {
            'Z' => Some(GroupName::Cyclic(k)),
            'D' => Some(GroupName::Dihedral(k)),
            'S' => Some(GroupName::Symmetric(k)),
            'A' => Some(GroupName::Alternating(k)),
            _ => None,
        }
    }

    /// Sort key for reports: by order, then code.
    pub fn sort_key(&self) -> (usize, String) {
        (self.order(), self.code())
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Trivial => f.write_str("1"),
            GroupName::Cyclic(k) => write!(f, "Z_{k}"),
            GroupName::Dihedral(k) => write!(f, "D_{k}"),
            GroupName::Symmetric(k) => write!(f, "S_{k}"),
            GroupName::Alternating(k) => write!(f, "A_{k}"),
            GroupName::DirectProduct(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            GroupName::GeneralizedDihedralOverZ3xZ3 => f.write_str("(Z_3 x Z_3) : Z_2"),
            GroupName::WreathS3Z2 => f.write_str("S_3 wr Z_2"),
            GroupName::Unrecognized(fp) => write!(f, "unrecognized group of order {}", fp.order),
        }
    }
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Invariant-factor lists (ascending, each dividing the next) of all abelian groups of order `n`.
fn abelian_types(n: usize) -> Vec<Vec<usize>> {
    let mut types: Vec<Vec<usize>> = vec![vec![]];
    for (p, e) in prime_factors(n) {
        let mut next = Vec::new();
        for part in partitions(e, e) {
            for t in &types {
                // Largest prime powers combine into the largest invariant factor.
                let len = t.len().max(part.len());
                let mut merged = vec![1usize; len];
                for (i, v) in t.iter().rev().enumerate() {
                    merged[len - 1 - i] *= v;
                }
                for (i, &k) in part.iter().enumerate() {
                    merged[len - 1 - i] *= p.pow(k);
                }
                next.push(merged);
            }
        }
        types = next;
    }
    types
}

fn abelian_name(factors: &[usize]) -> GroupName {
    let fs: Vec<usize> = factors.iter().copied().filter(|&k| k > 1).collect();
    match fs.len() {
        _ if fs == [2, 2] => GroupName::Dihedral(2),
        0 => GroupName::Trivial,
        1 => GroupName::Cyclic(fs[0]),
        _ => GroupName::DirectProduct(fs.into_iter().map(GroupName::Cyclic).collect()),
    }
}

/// Non-abelian families that are tried before direct products, in priority order.
fn nonabelian_atoms(n: usize) -> Vec<GroupName> {
    let mut out = Vec::new();
    if n.is_multiple_of(2) && n / 2 >= 3 {
        out.push(GroupName::Dihedral(n / 2));
    }
    for k in 4..=6 {
        if factorial(k) / 2 == n {
            out.push(GroupName::Alternating(k));
        }
        if factorial(k) == n {
            out.push(GroupName::Symmetric(k));
        }
    }
    if n == 18 {
        out.push(GroupName::GeneralizedDihedralOverZ3xZ3);
    }
    if n == 72 {
        out.push(GroupName::WreathS3Z2);
    }
    out
}

/// Candidate names of order `n`, in the priority order that makes names canonical.
pub fn candidate_names(n: usize, abelian: bool) -> Vec<GroupName> {
    if n == 1 {
        return vec![GroupName::Trivial];
    }
    if abelian {
        return abelian_types(n).iter().map(|t| abelian_name(t)).collect();
    }
    let mut out = nonabelian_atoms(n);
    // X x A with X a non-abelian atom and A abelian, then X x Y with both non-abelian.
    for a in divisors(n) {
        if a < 6 || a == n {
            continue;
        }
        for x in nonabelian_atoms(a) {
            for t in abelian_types(n / a) {
                let mut fs = vec![x.clone()];
                let cyclic: Vec<GroupName> = t
                    .iter()
                    .filter(|&&k| k > 1)
                    .map(|&k| GroupName::Cyclic(k))
                    .collect();
                if cyclic.is_empty() {
                    continue;
                }
                fs.extend(cyclic);
                out.push(GroupName::DirectProduct(fs));
            }
        }
    }
    for a in divisors(n) {
        let b = n / a;
        if a < 6 || b < a {
            continue;
        }
        for x in nonabelian_atoms(a) {
            for y in nonabelian_atoms(b) {
                if a == b && y.code() < x.code() {
                    continue;
                }
                out.push(GroupName::DirectProduct(vec![x.clone(), y]));
            }
        }
    }
    out
}

/// A permutation group realizing `name`, built from first principles.
pub fn reference_group(name: &GroupName) -> Option<PermGroup> {
    let gens = reference_generators(name)?;
    let degree = gens.first().map(|(d, _)| *d)?;
    let perms: Vec<Permutation> = gens
        .iter()
        .map(|(_, cycles)| {
            Permutation::from_cycles(cycles, degree).expect("valid reference cycles")
        })
        .collect();
    let g = PermGroup::generate_bounded(&perms, DEFAULT_ORDER_BOUND).ok()?;
    debug_assert_eq!(g.order(), name.order());
    Some(g)
}

type Gens = Vec<(usize, Vec<Vec<usize>>)>;

fn reference_generators(name: &GroupName) -> Option<Gens> {
    let with_degree =
        |d: usize, cs: Vec<Vec<Vec<usize>>>| -> Gens { cs.into_iter().map(|c| (d, c)).collect() };
    Some(match name {
        GroupName::Trivial => with_degree(1, vec![vec![]]),
        GroupName::Cyclic(k) => {
            // Disjoint prime-power cycles keep the degree small.
            let mut cycles = Vec::new();
            let mut next = 1;
            for (p, e) in prime_factors(*k) {
                let len = p.pow(e);
                cycles.push((next..next + len).collect::<Vec<_>>());
                next += len;
            }
            with_degree((next - 1).max(1), vec![cycles])
        }
        GroupName::Dihedral(2) => with_degree(4, vec![vec![vec![1, 2]], vec![vec![3, 4]]]),
        GroupName::Dihedral(k) if *k >= 3 => {
            let rot = vec![(1..=*k).collect::<Vec<_>>()];
            let refl: Vec<Vec<usize>> = (2..=*k)
                .filter_map(|i| {
                    let j = *k + 2 - i;
                    (i < j).then(|| vec![i, j])
                })
                .collect();
            with_degree(*k, vec![rot, refl])
        }
        GroupName::Symmetric(k) if *k >= 2 => {
            with_degree(*k, vec![vec![(1..=*k).collect()], vec![vec![1, 2]]])
        }
        GroupName::Alternating(k) if *k >= 3 => {
            let gens = (3..=*k).map(|i| vec![vec![1, 2, i]]).collect();
            with_degree(*k, gens)
        }
        GroupName::GeneralizedDihedralOverZ3xZ3 => with_degree(
            6,
            vec![
                vec![vec![1, 2, 3]],
                vec![vec![4, 5, 6]],
                vec![vec![2, 3], vec![5, 6]],
            ],
        ),
        GroupName::WreathS3Z2 => with_degree(
            6,
            vec![
                vec![vec![1, 2, 3]],
                vec![vec![1, 2]],
                vec![vec![1, 4], vec![2, 5], vec![3, 6]],
            ],
        ),
        GroupName::DirectProduct(fs) => {
            let parts: Vec<Gens> = fs.iter().map(reference_generators).collect::<Option<_>>()?;
            let total: usize = parts.iter().map(|g| g[0].0).sum();
            let mut out = Vec::new();
            let mut offset = 0;
            for part in parts {
                let d = part[0].0;
                for (_, cycles) in part {
                    let shifted = cycles
                        .into_iter()
                        .map(|c| c.into_iter().map(|p| p + offset).collect())
                        .collect();
                    out.push((total, shifted));
                }
                offset += d;
            }
            out
        }
        _ => return None,
    })
}

struct Reference {
    group: PermGroup,
    table: Table,
    fingerprint: Fingerprint,
}

fn reference_cache() -> &'static Mutex<HashMap<GroupName, Option<Arc<Reference>>>> {
    static CACHE: OnceLock<Mutex<HashMap<GroupName, Option<Arc<Reference>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached_reference(name: &GroupName) -> Option<Arc<Reference>> {
    if let Some(hit) = reference_cache().lock().unwrap().get(name) {
        return hit.clone();
    }
    let built = reference_group(name).map(|group| {
        let table = group.table();
        let fingerprint = Fingerprint::from_table(&table);
        Arc::new(Reference {
            group,
            table,
            fingerprint,
        })
    });
    reference_cache()
        .lock()
        .unwrap()
        .insert(name.clone(), built.clone());
    built
}

/// Names `group` by matching it against reference groups; falls back to
/// [`GroupName::Unrecognized`] with the fingerprint.
pub fn recognize(group: &PermGroup) -> GroupName {
    if group.order() > DEFAULT_ORDER_BOUND {
        let table_free = Fingerprint {
            order: group.order(),
            order_spectrum: Default::default(),
            abelian: group.is_abelian(),
            center_order: 0,
            conj_class_sizes: Vec::new(),
            derived_subgroup_order: 0,
        };
        return GroupName::Unrecognized(Box::new(table_free));
    }
    let table = group.table();
    let fp = Fingerprint::from_table(&table);
    for name in candidate_names(group.order(), fp.abelian) {
        let Some(reference) = cached_reference(&name) else {
            continue;
        };
        if reference.fingerprint != fp {
            continue;
        }
        if isomorphism_with_tables(group, &table, &reference.group, &reference.table).is_some() {
            return name;
        }
    }
    GroupName::Unrecognized(Box::new(fp))
}
