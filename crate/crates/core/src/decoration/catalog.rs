use super::{refined_upper_bound, stabilizer, Decoration, KnotLabel};
use crate::error::{Error, Result};
use crate::graph::{k33, mobius_ladder, EdgeId, K33_HEXAGON};
use crate::perm::{GroupName, PermGroup};

/// Which bound a catalog entry is evaluated through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evaluation {
    Stabilizer,
    /// Stabilizer intersected with the admissible subgroup of Aut(K3,3).
    RefinedBound,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub decoration: Decoration,
    pub expected: GroupName,
    pub evaluation: Evaluation,
    /// Construction family: `"hexagon"`, `"fan"` or `"distinct knots"`.
    pub family: &'static str,
    pub description: &'static str,
}

impl CatalogEntry {
    pub fn evaluate(&self) -> Result<PermGroup> {
        match self.evaluation {
            Evaluation::Stabilizer => stabilizer(&self.decoration),
            Evaluation::RefinedBound => refined_upper_bound(&self.decoration),
        }
    }
}

fn hexagon_edges() -> [(usize, usize); 6] {
    let h = K33_HEXAGON;
    std::array::from_fn(|i| (h[i], h[(i + 1) % 6]))
}

fn knot_all(d: &mut Decoration, edges: &[(usize, usize)], label: &KnotLabel) {
    for &(a, b) in edges {
        d.knot_between(a, b, label.clone()).expect("edge of K3,3");
    }
}

const RUNGS_TOWARD_SMALL_SIDE: [(usize, usize); 3] = [(4, 1), (5, 2), (6, 3)];

/// Every K3,3 edge oriented from {4,5,6} towards {1,2,3}.
fn all_edges_toward_small_side() -> Vec<(usize, usize)> {
    (4..=6).flat_map(|a| (1..=3).map(move |x| (a, x))).collect()
}

fn fan_knotted_around(d: &mut Decoration) {
    for x in 1..=3 {
        for (o, a) in [(4, 5), (5, 6), (6, 4)] {
            d.knot_around_between((x, o), (x, a)).expect("edge of K3,3");
        }
    }
    for a in 4..=6 {
        for (o, t) in [(1, 2), (2, 3), (3, 1)] {
            d.knot_around_between((a, o), (a, t)).expect("edge of K3,3");
        }
    }
}

fn entry(
    name: &'static str,
    decoration: Decoration,
    expected: GroupName,
    evaluation: Evaluation,
    family: &'static str,
    description: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        name,
        decoration,
        expected,
        evaluation,
        family,
        description,
    }
}

/// Decorated K3,3 embeddings realizing each group of the M3 classification.
pub fn catalog() -> Vec<CatalogEntry> {
    use Evaluation::*;
    use GroupName::*;
    let hex = hexagon_edges();
    let mut out = Vec::new();

    let mut d = Decoration::new(k33());
    knot_all(&mut d, &hex, &KnotLabel::invertible("A"));
    out.push(entry(
        "hex-D6",
        d,
        Dihedral(6),
        Stabilizer,
        "hexagon",
        "one invertible knot on every hexagon edge",
    ));

    let mut d = Decoration::new(k33());
    knot_all(&mut d, &hex, &KnotLabel::non_invertible("N"));
    out.push(entry(
        "hex-Z6",
        d,
        Cyclic(6),
        Stabilizer,
        "hexagon",
        "one non-invertible knot on every hexagon edge, oriented around the hexagon",
    ));

    let mut d3 = Decoration::new(k33());
    knot_all(
        &mut d3,
        &RUNGS_TOWARD_SMALL_SIDE,
        &KnotLabel::non_invertible("N"),
    );
    out.push(entry(
        "hex-D3",
        d3.clone(),
        Dihedral(3),
        Stabilizer,
        "hexagon",
        "non-invertible knots on the rungs, oriented 4->1, 5->2, 6->3",
    ));

    let mut d = d3;
    let alternating: Vec<_> = hex.iter().step_by(2).copied().collect();
    knot_all(&mut d, &alternating, &KnotLabel::non_invertible("M"));
    out.push(entry(
        "hex-Z3",
        d,
        Cyclic(3),
        Stabilizer,
        "hexagon",
        "hex-D3 plus non-invertible knots on alternate hexagon edges, oriented around the hexagon",
    ));

    let mut d = Decoration::new(k33());
    for &(a, b) in &hex {
        let label = if [(1, 5), (5, 1), (2, 4), (4, 2)].contains(&(a, b)) {
            "A"
        } else {
            "B"
        };
        d.knot_between(a, b, KnotLabel::invertible(label))
            .expect("edge of K3,3");
    }
    out.push(entry(
        "hex-D2",
        d,
        Dihedral(2),
        Stabilizer,
        "hexagon",
        "invertible knot A on 1-5 and 2-4, invertible knot B on the other hexagon edges",
    ));

    let mut d = Decoration::new(k33());
    for (i, &(a, b)) in hex.iter().enumerate() {
        let label = ["A", "B", "C"][i % 3];
        d.knot_between(a, b, KnotLabel::invertible(label))
            .expect("edge of K3,3");
    }
    out.push(entry(
        "hex-Z2",
        d,
        Cyclic(2),
        Stabilizer,
        "hexagon",
        "three invertible knots, each on a pair of opposite hexagon edges",
    ));

    out.push(entry(
        "fan-D3xD3",
        Decoration::new(k33()),
        DirectProduct(vec![Dihedral(3), Dihedral(3)]),
        RefinedBound,
        "fan",
        "three-bladed fan, no knots",
    ));

    let mut oriented = Decoration::new(k33());
    knot_all(
        &mut oriented,
        &all_edges_toward_small_side(),
        &KnotLabel::non_invertible("N"),
    );
    out.push(entry(
        "fan-Z3Z3-semidirect-Z2",
        oriented,
        GeneralizedDihedralOverZ3xZ3,
        RefinedBound,
        "fan",
        "one non-invertible knot on every edge, oriented from {4,5,6} to {1,2,3}",
    ));

    let mut around = Decoration::new(k33());
    fan_knotted_around(&mut around);
    out.push(entry(
        "fan-D3xZ3",
        around.clone(),
        DirectProduct(vec![Dihedral(3), Cyclic(3)]),
        Stabilizer,
        "fan",
        "at every vertex the three edges are knotted around each other cyclically",
    ));

    let mut d = around;
    knot_all(
        &mut d,
        &all_edges_toward_small_side(),
        &KnotLabel::non_invertible("N"),
    );
    out.push(entry(
        "fan-Z3xZ3",
        d,
        DirectProduct(vec![Cyclic(3), Cyclic(3)]),
        RefinedBound,
        "fan",
        "fan-D3xZ3 plus the oriented knots of fan-Z3Z3-semidirect-Z2",
    ));

    let g = k33();
    let mut d = Decoration::new(g.clone());
    for e in g.edges() {
        d.set_knot(
            e.id,
            KnotLabel::invertible(&format!("K{}", e.id.0 + 1)),
            None,
        );
    }
    out.push(entry(
        "trivial",
        d,
        Trivial,
        Stabilizer,
        "distinct knots",
        "a different invertible knot on every edge",
    ));

    out
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// Knots the `2n`-gon edges `e_1, e_{1+m}, ..., e_{1+(k-1)m}` of `M_n`, where
/// `m = 2n / k` and `e_i` joins `i` to `i + 1`. Non-invertible knots are
/// oriented `i -> i + 1`.
pub fn ladder_decoration(n: usize, k: usize, invertible: bool) -> Result<Decoration> {
    if n < 4 {
        return Err(Error::LadderTooSmall { n, min: 4 });
    }
    let two_n = 2 * n;
    if k < 2 || !two_n.is_multiple_of(k) {
        return Err(Error::BadDivisor { k, two_n });
    }
    let m = two_n / k;
    let graph = mobius_ladder(n)?;
    let mut d = Decoration::new(graph);
    let label = KnotLabel {
        name: "K".into(),
        invertible,
    };
    for j in 0..k {
        let i = 1 + j * m;
        let orientation = (!invertible).then_some((i, i % two_n + 1));
        // Cycle edge e_i has id i - 1.
        d.set_knot(EdgeId(i - 1), label.clone(), orientation);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoration::validate;
    use crate::perm::recognize;

    #[test]
    fn catalog_names_and_validity() {
        let cat = catalog();
        assert_eq!(cat.len(), 11);
        for e in &cat {
            assert!(validate(&e.decoration).is_ok(), "{}", e.name);
        }
        assert_eq!(
            catalog_entry("hex-D6").unwrap().expected,
            GroupName::Dihedral(6)
        );
        assert_eq!(catalog_entry("fan-D3xZ3").unwrap().expected.order(), 18);
        assert!(catalog_entry("nope").is_none());
    }

    #[test]
    fn hexagon_entries_match() {
        for name in ["hex-D6", "hex-Z6", "hex-D3", "hex-Z3", "hex-D2", "hex-Z2"] {
            let e = catalog_entry(name).unwrap();
            let g = e.evaluate().unwrap();
            assert_eq!(recognize(&g), e.expected, "{name}");
        }
    }

    #[test]
    fn ladder_knot_positions() {
        let d = ladder_decoration(4, 2, true).unwrap();
        let knotted: Vec<_> = d
            .knots()
            .keys()
            .map(|&id| d.graph().edge(id).unwrap().endpoints())
            .collect();
        assert_eq!(knotted, vec![(1, 2), (5, 6)]);
        let d = ladder_decoration(5, 5, false).unwrap();
        let tails: Vec<_> = d.knots().values().map(|k| k.orientation.unwrap()).collect();
        assert_eq!(tails, vec![(1, 2), (3, 4), (5, 6), (7, 8), (9, 10)]);
        let d = ladder_decoration(4, 8, false).unwrap();
        assert_eq!(d.knots()[&EdgeId(7)].orientation, Some((8, 1)));
    }

    #[test]
    fn ladder_errors() {
        assert_eq!(
            ladder_decoration(3, 2, true).unwrap_err(),
            Error::LadderTooSmall { n: 3, min: 4 }
        );
        assert_eq!(
            ladder_decoration(4, 3, true).unwrap_err(),
            Error::BadDivisor { k: 3, two_n: 8 }
        );
        assert_eq!(
            ladder_decoration(4, 1, true).unwrap_err(),
            Error::BadDivisor { k: 1, two_n: 8 }
        );
    }
}
