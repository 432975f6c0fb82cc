use std::collections::{HashMap, VecDeque};

use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Largest group order any search in this crate will materialize.
pub const DEFAULT_ORDER_BOUND: usize = 720;

/// A finite permutation group with its full element set materialized.
///
/// Elements are kept sorted lexicographically on image sequences, so the
/// identity is always `elements()[0]` and iteration order is reproducible.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Result<Self> {
        let id = Permutation::identity(degree)?;
        Ok(Self::from_sorted(degree, Vec::new(), vec![id]))
    }

    /// Closure of `generators` under composition.
    pub fn generate(generators: &[Permutation]) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut gens: Vec<Permutation> = generators.to_vec();
        gens.sort();
        gens.dedup();
        let elements = closure(degree, &gens, usize::MAX).expect("unbounded closure");
        Ok(Self::from_sorted(degree, gens, elements))
    }

    /// Like [`generate`](Self::generate) but stops once the closure exceeds `bound` elements.
    pub fn generate_bounded(generators: &[Permutation], bound: usize) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let mut gens: Vec<Permutation> = generators.to_vec();
        gens.sort();
        gens.dedup();
        let elements = closure(degree, &gens, bound).ok_or(Error::OrderBoundExceeded {
            order: bound + 1,
            bound,
        })?;
        Ok(Self::from_sorted(degree, gens, elements))
    }

    /// Builds a group from an element set, checking that it contains the
    /// identity and is closed under composition.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        if let Some(p) = elements.iter().find(|p| p.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: p.degree(),
            });
        }
        if elements.is_empty() || !elements[0].is_identity() {
            return Err(Error::ClosureFailure("identity missing".into()));
        }
        let set: std::collections::HashSet<&Permutation> = elements.iter().collect();
        for a in &elements {
            for b in &elements {
                let ab = a.compose_unchecked(b);
                if !set.contains(&ab) {
                    return Err(Error::ClosureFailure(format!("{a} * {b} = {ab}")));
                }
            }
        }
        let gens = small_generating_set(&elements);
        Ok(Self::from_sorted(degree, gens, elements))
    }

    /// Trusted constructor: `elements` must already be a sorted, closed set.
    pub(crate) fn from_sorted(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Self {
            degree,
            generators,
            elements,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub(crate) fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    /// Same element set, regardless of generators.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.elements == other.elements
    }

    pub fn is_abelian(&self) -> bool {
        let gens = if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        };
        gens.iter().all(|a| {
            gens.iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }

    /// Returns some `c` in the group with `c ∘ a ∘ c⁻¹ = b`.
    pub fn conjugator(&self, a: &Permutation, b: &Permutation) -> Result<Option<Permutation>> {
        for p in [a, b] {
            if !self.contains(p) {
                return Err(Error::NotInGroup(p.to_string()));
            }
        }
        if a.cycle_type() != b.cycle_type() {
            return Ok(None);
        }
        Ok(self
            .elements
            .iter()
            .find(|c| &c.compose_unchecked(a).compose_unchecked(&c.inverse()) == b)
            .cloned())
    }

    /// Conjugacy class of `a` in this group, sorted.
    pub fn conjugacy_class(&self, a: &Permutation) -> Result<Vec<Permutation>> {
        if !self.contains(a) {
            return Err(Error::NotInGroup(a.to_string()));
        }
        let mut out: Vec<Permutation> = self
            .elements
            .iter()
            .map(|c| c.compose_unchecked(a).compose_unchecked(&c.inverse()))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Intersection with another group on the same points.
    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let elements: Vec<Permutation> = self
            .elements
            .iter()
            .filter(|p| other.contains(p))
            .cloned()
            .collect();
        let gens = small_generating_set(&elements);
        Ok(Self::from_sorted(self.degree, gens, elements))
    }

    /// Subgroup of elements satisfying `keep`; the caller guarantees closure.
    pub(crate) fn filtered(&self, keep: impl Fn(&Permutation) -> bool) -> PermGroup {
        let elements: Vec<Permutation> =
            self.elements.iter().filter(|p| keep(p)).cloned().collect();
        let gens = small_generating_set(&elements);
        Self::from_sorted(self.degree, gens, elements)
    }

    /// The group `pi G pi⁻¹`.
    pub fn conjugate_by(&self, pi: &Permutation) -> Result<PermGroup> {
        if pi.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: pi.degree(),
            });
        }
        let inv = pi.inverse();
        let conj = |p: &Permutation| pi.compose_unchecked(p).compose_unchecked(&inv);
        let mut elements: Vec<Permutation> = self.elements.iter().map(conj).collect();
        elements.sort();
        let gens = self.generators.iter().map(conj).collect();
        Ok(Self::from_sorted(self.degree, gens, elements))
    }

    /// Checks identity membership and closure under composition and inverse.
    pub fn check_closure(&self) -> bool {
        if !self.elements[0].is_identity() {
            return false;
        }
        self.elements.iter().all(|a| {
            self.contains(&a.inverse())
                && self
                    .elements
                    .iter()
                    .all(|b| self.contains(&a.compose_unchecked(b)))
        })
    }

    pub(crate) fn table(&self) -> Table {
        Table::new(self)
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

/// Sorted closure of `gens`; `None` if it grows past `bound`.
fn closure(degree: usize, gens: &[Permutation], bound: usize) -> Option<Vec<Permutation>> {
    let id = Permutation::identity_unchecked(degree);
    let mut seen: std::collections::HashSet<Permutation> = std::collections::HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose_unchecked(&x);
            if !seen.contains(&y) {
                if seen.len() >= bound {
                    return None;
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Some(out)
}

/// Greedy generating set: repeatedly adds the highest-order element not yet
/// covered, ties broken by the canonical order.
pub(crate) fn small_generating_set(elements: &[Permutation]) -> Vec<Permutation> {
    if elements.len() <= 1 {
        return Vec::new();
    }
    let degree = elements[0].degree();
    let mut ranked: Vec<&Permutation> = elements.iter().collect();
    ranked.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.cmp(b)));
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span: std::collections::HashSet<Permutation> = std::collections::HashSet::new();
    span.insert(Permutation::identity_unchecked(degree));
    for p in ranked {
        if span.len() == elements.len() {
            break;
        }
        if span.contains(p) {
            continue;
        }
        gens.push(p.clone());
        span = closure(degree, &gens, usize::MAX)
            .expect("unbounded closure")
            .into_iter()
            .collect();
    }
    gens
}

/// Cayley table over element indices of a materialized group.
pub(crate) struct Table {
    pub n: usize,
    /// `mul[a * n + b]` is the index of `elements[a] ∘ elements[b]`.
    pub mul: Vec<u16>,
    pub inv: Vec<u16>,
    pub orders: Vec<u32>,
}

impl Table {
    pub fn new(group: &PermGroup) -> Self {
        let n = group.order();
        let els = group.elements();
        let mut mul = vec![0u16; n * n];
        // Reuse a scratch buffer; hashing a fresh boxed slice per product dominates otherwise.
        let mut scratch = Permutation::identity_unchecked(group.degree());
        for (a, pa) in els.iter().enumerate() {
            for (b, pb) in els.iter().enumerate() {
                compose_into(pa, pb, &mut scratch);
                mul[a * n + b] = group.index[&scratch] as u16;
            }
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        let orders = els.iter().map(|p| p.order() as u32).collect();
        Self {
            n,
            mul,
            inv,
            orders,
        }
    }

    #[inline]
    pub fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    /// Elements of the subgroup generated by `gens`, as a membership vector.
    pub fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.n];
        member[0] = true;
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.m(g, x);
                if !member[y] {
                    member[y] = true;
                    queue.push(y);
                }
            }
        }
        member
    }
}

fn compose_into(a: &Permutation, b: &Permutation, out: &mut Permutation) {
    let dst = out.images_mut();
    for (slot, &i) in dst.iter_mut().zip(b.raw()) {
        *slot = a.raw()[i as usize];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s, 6).unwrap()
    }

    #[test]
    fn single_involution_generates_order_two() {
        let g = PermGroup::generate(&[p("(1 2)(4 5)")]).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.identity().is_identity());
        assert!(g.check_closure());
    }

    #[test]
    fn generate_errors() {
        assert_eq!(
            PermGroup::generate(&[]).unwrap_err(),
            Error::EmptyGenerators
        );
        let q = Permutation::parse("(1 2)", 3).unwrap();
        assert!(matches!(
            PermGroup::generate(&[p("(1 2)"), q]),
            Err(Error::DegreeMismatch { .. })
        ));
        let s6 = [p("(1 2 3 4 5 6)"), p("(1 2)")];
        assert!(matches!(
            PermGroup::generate_bounded(&s6, 100),
            Err(Error::OrderBoundExceeded { .. })
        ));
        assert_eq!(PermGroup::generate_bounded(&s6, 720).unwrap().order(), 720);
    }

    #[test]
    fn from_elements_rejects_non_closed_sets() {
        let bad = vec![Permutation::identity(6).unwrap(), p("(1 2 3)")];
        assert!(matches!(
            PermGroup::from_elements(6, bad),
            Err(Error::ClosureFailure(_))
        ));
        let good = vec![Permutation::identity(6).unwrap(), p("(1 2)")];
        assert_eq!(PermGroup::from_elements(6, good).unwrap().order(), 2);
    }

    #[test]
    fn conjugator_search() {
        let g = PermGroup::generate(&[p("(1 2 3)"), p("(1 2)"), p("(1 4)(2 5)(3 6)")]).unwrap();
        assert_eq!(g.order(), 72);
        let psi = p("(1 4)(2 5)(3 6)");
        let c = g.conjugator(&psi, &psi).unwrap().unwrap();
        assert_eq!(psi.conjugate_by(&c).unwrap(), psi);
        assert!(g.conjugator(&p("(1 2)(4 5)"), &psi).unwrap().is_none());
        assert!(g.conjugator(&p("(1 2)(3 4)"), &psi).is_err());
    }

    #[test]
    fn table_matches_composition() {
        let g = PermGroup::generate(&[p("(1 2 3)"), p("(1 2)")]).unwrap();
        let t = g.table();
        for a in 0..g.order() {
            assert_eq!(t.m(a, t.inv[a] as usize), 0);
            for b in 0..g.order() {
                let ab = g.elements()[a].compose_unchecked(&g.elements()[b]);
                assert_eq!(g.elements()[t.m(a, b)], ab);
            }
        }
    }
}
