//! Combinatorial stand-ins for knot-decorated embeddings.
//!
//! A decoration records, per edge, an optional local knot label with its
//! invertibility, an orientation for non-invertible knots, and a directed
//! "knotted around" relation between edges sharing a vertex. The
//! [`stabilizer`] of a decoration is the subgroup of graph automorphisms
//! that carries all of this data onto itself. It bounds the group of
//! symmetries induced by orientation-preserving homeomorphisms from above;
//! it does not certify that the bound is attained.

mod catalog;
mod json;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use catalog::{catalog, catalog_entry, ladder_decoration, CatalogEntry, Evaluation};
pub use json::{decoration_from_json, decoration_to_json};

use crate::error::{Error, Result};
use crate::graph::{automorphisms, is_k33, sorted_pair, EdgeId, Graph, Vertex};
use crate::perm::{PermGroup, Permutation};
use crate::realizability::admissible_subgroup;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnotLabel {
    pub name: String,
    pub invertible: bool,
}

impl KnotLabel {
    pub fn invertible(name: &str) -> Self {
        Self {
            name: name.to_string(),
            invertible: true,
        }
    }

    pub fn non_invertible(name: &str) -> Self {
        Self {
            name: name.to_string(),
            invertible: false,
        }
    }
}

/// A local knot on one edge. `orientation` is `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeKnot {
    pub label: KnotLabel,
    pub orientation: Option<(Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoration {
    graph: Graph,
    knots: BTreeMap<EdgeId, EdgeKnot>,
    /// `(outer, around)`: the knot in `outer` links `around`.
    knotted_around: BTreeSet<(EdgeId, EdgeId)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnknownEdge(EdgeId),
    MissingOrientation(EdgeId),
    UnexpectedOrientation(EdgeId),
    OrientationMismatch(EdgeId),
    InconsistentInvertibility(String),
    SelfKnottedAround(EdgeId),
    NoSharedVertex(EdgeId, EdgeId),
    AmbiguousParallelEdge(EdgeId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownEdge(e) => write!(f, "unknown edge: edge {}", e.0),
            Violation::MissingOrientation(e) => write!(f, "missing orientation: edge {}", e.0),
            Violation::UnexpectedOrientation(e) => {
                write!(f, "orientation on invertible knot: edge {}", e.0)
            }
            Violation::OrientationMismatch(e) => {
                write!(f, "orientation does not match endpoints: edge {}", e.0)
            }
            Violation::InconsistentInvertibility(name) => {
                write!(
                    f,
                    "label {name:?} used as both invertible and non-invertible"
                )
            }
            Violation::SelfKnottedAround(e) => {
                write!(f, "edge knotted around itself: edge {}", e.0)
            }
            Violation::NoSharedVertex(a, b) => {
                write!(f, "no shared vertex: edges {} and {}", a.0, b.0)
            }
            Violation::AmbiguousParallelEdge(e) => {
                write!(f, "knotted-around edge has parallel copies: edge {}", e.0)
            }
        }
    }
}

/// What an automorphism must carry onto itself for one edge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct EdgeMark<'a> {
    ends: (Vertex, Vertex),
    label: Option<&'a KnotLabel>,
    orientation: Option<(Vertex, Vertex)>,
}

impl Decoration {
    pub fn new(graph: Graph) -> Self {
        Self {
            graph,
            knots: BTreeMap::new(),
            knotted_around: BTreeSet::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn knots(&self) -> &BTreeMap<EdgeId, EdgeKnot> {
        &self.knots
    }

    pub fn knotted_around(&self) -> &BTreeSet<(EdgeId, EdgeId)> {
        &self.knotted_around
    }

    /// Places a knot on an edge, replacing any previous one. Not validated here.
    pub fn set_knot(
        &mut self,
        edge: EdgeId,
        label: KnotLabel,
        orientation: Option<(Vertex, Vertex)>,
    ) {
        self.knots.insert(edge, EdgeKnot { label, orientation });
    }

    /// Places a knot on the unique edge `a -- b`. Non-invertible knots are oriented `a -> b`.
    pub fn knot_between(&mut self, a: Vertex, b: Vertex, label: KnotLabel) -> Result<&mut Self> {
        let id = self.edge_id(a, b)?;
        let orientation = (!label.invertible).then_some((a, b));
        self.set_knot(id, label, orientation);
        Ok(self)
    }

    pub fn add_knotted_around(&mut self, outer: EdgeId, around: EdgeId) {
        self.knotted_around.insert((outer, around));
    }

    /// Records that the knot in `outer = a--b` links `around = c--d`.
    pub fn knot_around_between(
        &mut self,
        outer: (Vertex, Vertex),
        around: (Vertex, Vertex),
    ) -> Result<&mut Self> {
        let o = self.edge_id(outer.0, outer.1)?;
        let a = self.edge_id(around.0, around.1)?;
        self.add_knotted_around(o, a);
        Ok(self)
    }

    fn edge_id(&self, a: Vertex, b: Vertex) -> Result<EdgeId> {
        self.graph
            .edge_between(a, b)
            .ok_or_else(|| Error::InvalidGraph(format!("no unique edge between {a} and {b}")))
    }

    /// Whether `self` carries every knot and knotted-around pair of `other` on the same graph.
    pub fn extends(&self, other: &Decoration) -> bool {
        self.graph == other.graph
            && other
                .knots
                .iter()
                .all(|(e, k)| self.knots.get(e) == Some(k))
            && other.knotted_around.is_subset(&self.knotted_around)
    }

    /// The same decoration with every vertex `x` renamed to `pi(x)`.
    pub fn relabel(&self, pi: &Permutation) -> Result<Decoration> {
        let graph = self.graph.relabel(pi)?;
        let knots = self
            .knots
            .iter()
            .map(|(&e, k)| {
                let orientation = k.orientation.map(|(t, h)| (pi.apply(t), pi.apply(h)));
                (
                    e,
                    EdgeKnot {
                        label: k.label.clone(),
                        orientation,
                    },
                )
            })
            .collect();
        Ok(Decoration {
            graph,
            knots,
            knotted_around: self.knotted_around.clone(),
        })
    }

    fn marks(&self) -> Vec<EdgeMark<'_>> {
        let mut out: Vec<EdgeMark<'_>> = self
            .graph
            .edges()
            .iter()
            .map(|e| {
                let knot = self.knots.get(&e.id);
                EdgeMark {
                    ends: e.endpoints(),
                    label: knot.map(|k| &k.label),
                    orientation: knot.and_then(|k| k.orientation),
                }
            })
            .collect();
        out.sort();
        out
    }

    fn around_pairs(&self) -> Vec<((Vertex, Vertex), (Vertex, Vertex))> {
        let mut out: Vec<_> = self
            .knotted_around
            .iter()
            .filter_map(|(a, b)| {
                Some((
                    self.graph.edge(*a)?.endpoints(),
                    self.graph.edge(*b)?.endpoints(),
                ))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether `p` carries labels, orientations and knotted-around pairs onto themselves.
    pub fn is_preserved_by(&self, p: &Permutation) -> bool {
        let marks = self.marks();
        let mut mapped: Vec<EdgeMark<'_>> = marks
            .iter()
            .map(|m| EdgeMark {
                ends: sorted_pair(p.apply(m.ends.0), p.apply(m.ends.1)),
                label: m.label,
                orientation: m.orientation.map(|(t, h)| (p.apply(t), p.apply(h))),
            })
            .collect();
        mapped.sort();
        if mapped != marks {
            return false;
        }
        let pairs = self.around_pairs();
        let map_pair = |(a, b): (Vertex, Vertex)| sorted_pair(p.apply(a), p.apply(b));
        let mut mapped_pairs: Vec<_> = pairs
            .iter()
            .map(|&(o, a)| (map_pair(o), map_pair(a)))
            .collect();
        mapped_pairs.sort_unstable();
        mapped_pairs == pairs
    }
}

/// Checks every decoration invariant, collecting all violations.
pub fn validate(d: &Decoration) -> std::result::Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let mut invertibility: BTreeMap<&str, bool> = BTreeMap::new();
    let mut reported: BTreeSet<&str> = BTreeSet::new();
    for (&id, knot) in &d.knots {
        let Some(edge) = d.graph.edge(id) else {
            out.push(Violation::UnknownEdge(id));
            continue;
        };
        match (knot.label.invertible, knot.orientation) {
            (false, None) => out.push(Violation::MissingOrientation(id)),
            (true, Some(_)) => out.push(Violation::UnexpectedOrientation(id)),
            (false, Some((t, h))) => {
                if sorted_pair(t, h) != edge.endpoints() {
                    out.push(Violation::OrientationMismatch(id));
                }
            }
            (true, None) => {}
        }
        let name = knot.label.name.as_str();
        match invertibility.get(name) {
            Some(&inv) if inv != knot.label.invertible => {
                if reported.insert(name) {
                    out.push(Violation::InconsistentInvertibility(name.to_string()));
                }
            }
            Some(_) => {}
            None => {
                invertibility.insert(name, knot.label.invertible);
            }
        }
    }
    for &(a, b) in &d.knotted_around {
        let (Some(ea), Some(eb)) = (d.graph.edge(a), d.graph.edge(b)) else {
            for e in [a, b] {
                if d.graph.edge(e).is_none() {
                    out.push(Violation::UnknownEdge(e));
                }
            }
            continue;
        };
        if a == b {
            out.push(Violation::SelfKnottedAround(a));
            continue;
        }
        if ea.shared_endpoint(eb).is_none() {
            out.push(Violation::NoSharedVertex(a, b));
        }
        for e in [ea, eb] {
            if d.graph.multiplicity(e.u, e.v) > 1 {
                out.push(Violation::AmbiguousParallelEdge(e.id));
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

fn ensure_valid(d: &Decoration) -> Result<()> {
    validate(d).map_err(|vs| Error::InvalidDecoration(vs.iter().map(|v| v.to_string()).collect()))
}

/// Automorphisms of the underlying graph that preserve every piece of decoration data.
pub fn stabilizer(d: &Decoration) -> Result<PermGroup> {
    ensure_valid(d)?;
    let aut = automorphisms(&d.graph)?;
    Ok(aut.filtered(|p| d.is_preserved_by(p)))
}

/// The stabilizer intersected with the admissible subgroup of Aut(K3,3).
pub fn refined_upper_bound(d: &Decoration) -> Result<PermGroup> {
    if !is_k33(&d.graph) {
        return Err(Error::NotK33);
    }
    let stab = stabilizer(d)?;
    stab.intersection(&admissible_subgroup()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{k33, mobius_ladder};

    #[test]
    fn empty_decoration_is_valid_and_unconstrained() {
        let d = Decoration::new(k33());
        assert!(validate(&d).is_ok());
        assert_eq!(stabilizer(&d).unwrap().order(), 72);
    }

    #[test]
    fn missing_orientation_is_reported() {
        let mut d = Decoration::new(k33());
        let e = d.graph().edge_between(1, 4).unwrap();
        d.set_knot(e, KnotLabel::non_invertible("K"), None);
        let vs = validate(&d).unwrap_err();
        assert_eq!(vs, vec![Violation::MissingOrientation(e)]);
        assert!(vs[0].to_string().starts_with("missing orientation"));
        assert!(matches!(stabilizer(&d), Err(Error::InvalidDecoration(_))));
    }

    #[test]
    fn disjoint_knotted_around_is_reported() {
        let mut d = Decoration::new(k33());
        d.knot_around_between((1, 4), (2, 5)).unwrap();
        let vs = validate(&d).unwrap_err();
        assert_eq!(vs.len(), 1);
        assert!(vs[0].to_string().starts_with("no shared vertex"));
    }

    #[test]
    fn other_violations() {
        let mut d = Decoration::new(k33());
        let e14 = d.graph().edge_between(1, 4).unwrap();
        let e25 = d.graph().edge_between(2, 5).unwrap();
        let e36 = d.graph().edge_between(3, 6).unwrap();
        d.set_knot(e14, KnotLabel::invertible("A"), Some((1, 4)));
        d.set_knot(e25, KnotLabel::non_invertible("B"), Some((1, 5)));
        d.set_knot(e36, KnotLabel::non_invertible("A"), Some((3, 6)));
        d.add_knotted_around(e14, e14);
        d.add_knotted_around(EdgeId(40), e14);
        let vs = validate(&d).unwrap_err();
        assert!(vs.contains(&Violation::UnexpectedOrientation(e14)));
        assert!(vs.contains(&Violation::OrientationMismatch(e25)));
        assert!(vs.contains(&Violation::InconsistentInvertibility("A".into())));
        assert!(vs.contains(&Violation::SelfKnottedAround(e14)));
        assert!(vs.contains(&Violation::UnknownEdge(EdgeId(40))));
    }

    #[test]
    fn theta_graph_decorations() {
        let theta = mobius_ladder(1).unwrap();
        let planar = Decoration::new(theta.clone());
        assert_eq!(stabilizer(&planar).unwrap().order(), 2);
        let mut knotted = Decoration::new(theta);
        knotted.set_knot(EdgeId(0), KnotLabel::non_invertible("K"), Some((1, 2)));
        assert_eq!(stabilizer(&knotted).unwrap().order(), 1);
        let mut around = knotted.clone();
        around.add_knotted_around(EdgeId(0), EdgeId(1));
        assert!(validate(&around)
            .unwrap_err()
            .contains(&Violation::AmbiguousParallelEdge(EdgeId(0))));
    }

    #[test]
    fn distinct_labels_on_ladder_kill_everything() {
        let m4 = mobius_ladder(4).unwrap();
        let mut d = Decoration::new(m4.clone());
        for e in m4.edges() {
            d.set_knot(e.id, KnotLabel::invertible(&format!("K{}", e.id.0)), None);
        }
        assert_eq!(stabilizer(&d).unwrap().order(), 1);
    }

    #[test]
    fn refined_bound_requires_k33() {
        let d = Decoration::new(mobius_ladder(4).unwrap());
        assert_eq!(refined_upper_bound(&d), Err(Error::NotK33));
        assert_eq!(
            refined_upper_bound(&Decoration::new(k33()))
                .unwrap()
                .order(),
            36
        );
    }
}
