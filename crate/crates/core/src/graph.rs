//! Finite multigraphs, Möbius ladders, K3,3 and vertex automorphism search.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{small_generating_set, PermGroup, Permutation, DEFAULT_ORDER_BOUND};

/// Largest vertex count [`automorphisms`] accepts by default.
pub const DEFAULT_VERTEX_BOUND: usize = 16;

pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

/// An undirected edge; `u <= v` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn has_endpoint(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn shared_endpoint(&self, other: &Edge) -> Option<Vertex> {
        let (a, b) = (self.endpoints(), other.endpoints());
        let shared: Vec<Vertex> = [a.0, a.1]
            .into_iter()
            .filter(|&x| x == b.0 || x == b.1)
            .collect();
        match shared.as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }
}

/// A cycle in a graph, as a cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<Vertex>,
}

impl CycleWitness {
    /// Consecutive pairs, including the closing pair, normalized to `(min, max)`.
    pub fn edge_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| sorted_pair(self.vertices[i], self.vertices[(i + 1) % n]))
            .collect()
    }
}

/// Vertices `1..=vertex_count`, edges with stable ids. Parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    cycle: Option<CycleWitness>,
}

pub(crate) fn sorted_pair(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Graph {
    pub fn new(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            for x in [a, b] {
                if x == 0 || x > vertex_count {
                    return Err(Error::InvalidGraph(format!(
                        "edge {i}: vertex {x} outside 1..={vertex_count}"
                    )));
                }
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("edge {i}: self-loop at {a}")));
            }
            let (u, v) = sorted_pair(a, b);
            out.push(Edge {
                id: EdgeId(i),
                u,
                v,
            });
        }
        Ok(Self {
            vertex_count,
            edges: out,
            cycle: None,
        })
    }

    pub fn with_cycle(mut self, cycle: CycleWitness) -> Result<Self> {
        let n = cycle.vertices.len();
        let mut seen = vec![false; self.vertex_count + 1];
        for &v in &cycle.vertices {
            if v == 0 || v > self.vertex_count || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidGraph(format!("bad cycle vertex {v}")));
            }
        }
        if n < 3 {
            return Err(Error::InvalidGraph(
                "cycle needs at least 3 vertices".into(),
            ));
        }
        for (a, b) in cycle.edge_pairs() {
            if self.multiplicity(a, b) == 0 {
                return Err(Error::InvalidGraph(format!(
                    "cycle uses missing edge {a}-{b}"
                )));
            }
        }
        self.cycle = Some(cycle);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.get(id.0)
    }

    pub fn cycle(&self) -> Option<&CycleWitness> {
        self.cycle.as_ref()
    }

    pub fn multiplicity(&self, a: Vertex, b: Vertex) -> usize {
        let key = sorted_pair(a, b);
        self.edges.iter().filter(|e| e.endpoints() == key).count()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.multiplicity(a, b) > 0
    }

    /// The unique edge between `a` and `b`, or `None` if absent or parallel.
    pub fn edge_between(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        let key = sorted_pair(a, b);
        let mut hits = self.edges.iter().filter(|e| e.endpoints() == key);
        match (hits.next(), hits.next()) {
            (Some(e), None) => Some(e.id),
            _ => None,
        }
    }

    pub fn is_simple(&self) -> bool {
        let mut pairs: Vec<_> = self.edges.iter().map(Edge::endpoints).collect();
        pairs.sort_unstable();
        pairs.windows(2).all(|w| w[0] != w[1])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.has_endpoint(v)).count()
    }

    fn adjacency(&self) -> Vec<Vec<u8>> {
        let n = self.vertex_count;
        let mut adj = vec![vec![0u8; n]; n];
        for e in &self.edges {
            adj[e.u - 1][e.v - 1] += 1;
            adj[e.v - 1][e.u - 1] += 1;
        }
        adj
    }

    /// Whether `p` maps the edge multiset onto itself.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.degree() != self.vertex_count {
            return false;
        }
        let mut before: Vec<_> = self.edges.iter().map(Edge::endpoints).collect();
        let mut after: Vec<_> = self
            .edges
            .iter()
            .map(|e| sorted_pair(p.apply(e.u), p.apply(e.v)))
            .collect();
        before.sort_unstable();
        after.sort_unstable();
        before == after
    }

    /// The graph with every vertex `x` renamed to `pi(x)`; edge ids are kept.
    pub fn relabel(&self, pi: &Permutation) -> Result<Graph> {
        if pi.degree() != self.vertex_count {
            return Err(Error::DegreeMismatch {
                left: self.vertex_count,
                right: pi.degree(),
            });
        }
        let pairs: Vec<_> = self
            .edges
            .iter()
            .map(|e| (pi.apply(e.u), pi.apply(e.v)))
            .collect();
        let mut g = Graph::new(self.vertex_count, &pairs)?;
        if let Some(c) = &self.cycle {
            g.cycle = Some(CycleWitness {
                vertices: c.vertices.iter().map(|&v| pi.apply(v)).collect(),
            });
        }
        Ok(g)
    }

    /// Parses the text format: `vertices N` followed by `edge u v` lines.
    /// Blank lines and `#` comments are ignored.
    pub fn parse_text(text: &str) -> Result<Graph> {
        let mut vertices: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let words: Vec<&str> = line.split_whitespace().collect();
            let num = |w: &str| {
                w.parse::<usize>()
                    .map_err(|_| at(format!("expected a number, got {w:?}")))
            };
            match words.as_slice() {
                ["vertices", n] => {
                    if vertices.is_some() {
                        return Err(at("duplicate 'vertices' line".into()));
                    }
                    vertices = Some(num(n)?);
                }
                ["edge", a, b] => {
                    let Some(n) = vertices else {
                        return Err(at("'edge' before 'vertices'".into()));
                    };
                    let (a, b) = (num(a)?, num(b)?);
                    for x in [a, b] {
                        if x == 0 || x > n {
                            return Err(at(format!("vertex {x} outside 1..={n}")));
                        }
                    }
                    if a == b {
                        return Err(at(format!("self-loop at {a}")));
                    }
                    edges.push((a, b));
                }
                _ => return Err(at(format!("unrecognized line {line:?}"))),
            }
        }
        let n = vertices.ok_or_else(|| Error::Parse("missing 'vertices' line".into()))?;
        Graph::new(n, &edges)
    }

    /// Resolves `k33` or `mobius:<n>`.
    pub fn builtin(name: &str) -> Option<Result<Graph>> {
        if name == "k33" {
            return Some(Ok(k33()));
        }
        let n = name.strip_prefix("mobius:")?;
        Some(
            n.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad ladder size {n:?}")))
                .and_then(mobius_ladder),
        )
    }
}

impl fmt::Display for Graph {
    /// Writes the text format read by [`Graph::parse_text`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.vertex_count)?;
        for e in &self.edges {
            writeln!(f, "edge {} {}", e.u, e.v)?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_text(s)
    }
}

/// The Möbius ladder with `n` rungs.
///
/// For `n >= 2`: vertices `1..=2n`, cycle edges `i -- i+1` (edge id `i - 1`,
/// wrapping at `2n`) followed by rungs `i -- i+n`, with the `2n`-gon as the
/// distinguished cycle. For `n = 1`: the theta graph on two vertices.
pub fn mobius_ladder(n: usize) -> Result<Graph> {
    match n {
        0 => Err(Error::LadderTooSmall { n, min: 1 }),
        1 => Graph::new(2, &[(1, 2), (1, 2), (1, 2)]),
        _ => {
            let m = 2 * n;
            let mut edges: Vec<(Vertex, Vertex)> = (1..=m).map(|i| (i, i % m + 1)).collect();
            edges.extend((1..=n).map(|i| (i, i + n)));
            Graph::new(m, &edges)?.with_cycle(CycleWitness {
                vertices: (1..=m).collect(),
            })
        }
    }
}

/// Hexagon of K3,3 seen as a Möbius ladder; its rungs are 1-4, 2-5, 3-6.
pub const K33_HEXAGON: [Vertex; 6] = [1, 6, 2, 4, 3, 5];

/// K3,3 with sides {1,2,3} and {4,5,6}; edges listed as `i -- j` for `i` in
/// the first side, `j` in the second, in lexicographic order.
pub fn k33() -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (1..=3).flat_map(|i| (4..=6).map(move |j| (i, j))).collect();
    Graph::new(6, &edges)
        .and_then(|g| {
            g.with_cycle(CycleWitness {
                vertices: K33_HEXAGON.to_vec(),
            })
        })
        .expect("K3,3 is well formed")
}

pub fn is_k33(g: &Graph) -> bool {
    let reference = k33();
    let mut a: Vec<_> = g.edges().iter().map(Edge::endpoints).collect();
    let mut b: Vec<_> = reference.edges().iter().map(Edge::endpoints).collect();
    a.sort_unstable();
    b.sort_unstable();
    g.vertex_count() == 6 && a == b
}

/// Vertex automorphism group, with the default vertex and order bounds.
pub fn automorphisms(g: &Graph) -> Result<PermGroup> {
    automorphisms_bounded(g, DEFAULT_VERTEX_BOUND, DEFAULT_ORDER_BOUND)
}

/// Enumerates every vertex permutation preserving edge multiplicities.
///
/// Vertices are assigned in breadth-first order; a candidate image must
/// have the same degree and agree on multiplicity with every vertex
/// already placed.
pub fn automorphisms_bounded(
    g: &Graph,
    vertex_bound: usize,
    order_bound: usize,
) -> Result<PermGroup> {
    let n = g.vertex_count();
    if n > vertex_bound {
        return Err(Error::VertexBoundExceeded {
            vertices: n,
            bound: vertex_bound,
        });
    }
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let adj = g.adjacency();
    let degree: Vec<usize> = adj
        .iter()
        .map(|r| r.iter().map(|&m| m as usize).sum())
        .collect();
    let order = search_order(&adj);

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found: Vec<Permutation> = Vec::new();
    let mut state = Search {
        adj: &adj,
        degree: &degree,
        order: &order,
        image: &mut image,
        used: &mut used,
        found: &mut found,
        limit: order_bound,
    };
    if !state.extend(0) {
        return Err(Error::OrderBoundExceeded {
            order: order_bound + 1,
            bound: order_bound,
        });
    }
    found.sort();
    debug_assert!(found.iter().all(|p| g.is_automorphism(p)));
    // Automorphisms of a graph always form a group, so closure is not re-checked.
    let gens = small_generating_set(&found);
    Ok(PermGroup::from_sorted(n, gens, found))
}

fn search_order(adj: &[Vec<u8>]) -> Vec<usize> {
    let n = adj.len();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in 0..n {
                if adj[x][y] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    adj: &'a [Vec<u8>],
    degree: &'a [usize],
    order: &'a [usize],
    image: &'a mut Vec<usize>,
    used: &'a mut Vec<bool>,
    found: &'a mut Vec<Permutation>,
    limit: usize,
}

impl Search<'_> {
    /// Returns false once more than `limit` automorphisms have been found.
    fn extend(&mut self, depth: usize) -> bool {
        let n = self.adj.len();
        if depth == n {
            if self.found.len() >= self.limit {
                return false;
            }
            let images: Vec<usize> = self.image.iter().map(|&i| i + 1).collect();
            self.found
                .push(Permutation::from_images(&images).expect("search builds bijections"));
            return true;
        }
        let v = self.order[depth];
        for w in 0..n {
            if self.used[w] || self.degree[w] != self.degree[v] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.adj[u][v] == self.adj[self.image[u]][w]);
            if !consistent {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            let ok = self.extend(depth + 1);
            self.used[w] = false;
            self.image[v] = usize::MAX;
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Whether every element maps the cycle's edge set onto itself.
pub fn preserves_cycle(group: &PermGroup, cycle: &CycleWitness) -> bool {
    let mut edges = cycle.edge_pairs();
    edges.sort_unstable();
    if cycle.vertices.iter().any(|&v| v == 0 || v > group.degree()) {
        return false;
    }
    group.elements().iter().all(|p| {
        let mut mapped: Vec<_> = edges
            .iter()
            .map(|&(a, b)| sorted_pair(p.apply(a), p.apply(b)))
            .collect();
        mapped.sort_unstable();
        mapped == edges
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{recognize, GroupName};

    #[test]
    fn ladder_sizes() {
        let m1 = mobius_ladder(1).unwrap();
        assert_eq!((m1.vertex_count(), m1.edges().len()), (2, 3));
        assert!(m1.cycle().is_none());
        let m2 = mobius_ladder(2).unwrap();
        assert_eq!((m2.vertex_count(), m2.edges().len()), (4, 6));
        for a in 1..=4 {
            for b in a + 1..=4 {
                assert!(m2.has_edge(a, b), "K4 misses {a}-{b}");
            }
        }
        let m4 = mobius_ladder(4).unwrap();
        assert_eq!((m4.vertex_count(), m4.edges().len()), (8, 12));
        assert_eq!(
            mobius_ladder(0),
            Err(Error::LadderTooSmall { n: 0, min: 1 })
        );
    }

    #[test]
    fn k33_structure() {
        let g = k33();
        assert!(g.has_edge(1, 4));
        assert!(!g.has_edge(1, 2));
        assert_eq!(g.edges().len(), 9);
        assert!(g.has_edge(1, 6));
        let c = g.cycle().unwrap();
        assert!(c.edge_pairs().iter().all(|&(a, b)| g.has_edge(a, b)));
    }

    #[test]
    fn small_automorphism_groups() {
        assert_eq!(
            automorphisms(&mobius_ladder(1).unwrap()).unwrap().order(),
            2
        );
        assert_eq!(automorphisms(&k33()).unwrap().order(), 72);
        let m5 = automorphisms(&mobius_ladder(5).unwrap()).unwrap();
        assert_eq!(m5.order(), 20);
        assert_eq!(recognize(&m5), GroupName::Dihedral(10));
    }

    #[test]
    fn cycle_preservation() {
        let m4 = mobius_ladder(4).unwrap();
        let aut = automorphisms(&m4).unwrap();
        assert!(preserves_cycle(&aut, m4.cycle().unwrap()));
        let k = k33();
        assert!(!preserves_cycle(
            &automorphisms(&k).unwrap(),
            k.cycle().unwrap()
        ));
        let trivial = PermGroup::trivial(6).unwrap();
        assert!(preserves_cycle(&trivial, k.cycle().unwrap()));
    }

    #[test]
    fn bounds() {
        let big = Graph::new(17, &[]).unwrap();
        assert!(matches!(
            automorphisms(&big),
            Err(Error::VertexBoundExceeded {
                vertices: 17,
                bound: 16
            })
        ));
        let empty7 = Graph::new(7, &[]).unwrap();
        assert!(matches!(
            automorphisms(&empty7),
            Err(Error::OrderBoundExceeded { .. })
        ));
    }

    #[test]
    fn text_format() {
        let g: Graph = "# triangle\nvertices 3\nedge 1 2\nedge 2 3\n\nedge 3 1\n"
            .parse()
            .unwrap();
        assert_eq!(g.edges().len(), 3);
        assert_eq!(Graph::parse_text(&g.to_string()).unwrap(), g);
        let err = Graph::parse_text("vertices 3\nedge 1 x\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!(Graph::parse_text("edge 1 2\n").is_err());
        assert!(Graph::parse_text("vertices 2\nedge 1 1\n").is_err());
        assert!(Graph::parse_text("vertices 2\nedge 1 3\n").is_err());
        assert_eq!(
            Graph::builtin("mobius:3").unwrap().unwrap().edges().len(),
            9
        );
        assert!(Graph::builtin("mobius:0").unwrap().is_err());
        assert!(Graph::builtin("petersen").is_none());
    }

    #[test]
    fn shared_endpoints() {
        let g = k33();
        let e14 = g.edge(g.edge_between(1, 4).unwrap()).unwrap();
        let e15 = g.edge(g.edge_between(1, 5).unwrap()).unwrap();
        let e25 = g.edge(g.edge_between(2, 5).unwrap()).unwrap();
        let e26 = g.edge(g.edge_between(2, 6).unwrap()).unwrap();
        assert_eq!(e14.shared_endpoint(e15), Some(1));
        assert_eq!(e14.shared_endpoint(e26), None);
        assert_eq!(e15.shared_endpoint(e25), Some(5));
        assert!(mobius_ladder(1).unwrap().edge_between(1, 2).is_none());
    }
}
