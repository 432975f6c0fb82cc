//! Decoration files:
//!
//! ```json
//! {"graph": "k33" | "mobius:<n>" | {"vertices": N, "edges": [[u, v], ...]},
//!  "knots": [{"edge": [u, v], "label": "A", "invertible": false, "orientation": [u, v]}],
//!  "knotted_around": [{"outer": [u, v], "around": [u, w]}]}
//! ```
//!
//! Edges are named by endpoints, so only simple graphs are accepted.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{validate, Decoration, KnotLabel, Violation};
use crate::error::{Error, Result};
use crate::graph::{is_k33, EdgeId, Graph, Vertex};

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum GraphSpec {
    Builtin(String),
    Explicit {
        vertices: usize,
        edges: Vec<[Vertex; 2]>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct KnotSpec {
    edge: [Vertex; 2],
    label: String,
    invertible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orientation: Option<[Vertex; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AroundSpec {
    outer: [Vertex; 2],
    around: [Vertex; 2],
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecorationFile {
    graph: GraphSpec,
    #[serde(default)]
    knots: Vec<KnotSpec>,
    #[serde(default)]
    knotted_around: Vec<AroundSpec>,
}

fn field_err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {msg}"))
}

/// Parses and validates a decoration file.
pub fn decoration_from_json(text: &str) -> Result<Decoration> {
    let file: DecorationFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;

    let graph = match &file.graph {
        GraphSpec::Builtin(name) => Graph::builtin(name)
            .ok_or_else(|| field_err("graph", format!("unknown built-in graph {name:?}")))?
            .map_err(|e| field_err("graph", e))?,
        GraphSpec::Explicit { vertices, edges } => {
            let pairs: Vec<(Vertex, Vertex)> = edges.iter().map(|&[a, b]| (a, b)).collect();
            Graph::new(*vertices, &pairs).map_err(|e| field_err("graph", e))?
        }
    };
    if !graph.is_simple() {
        return Err(field_err(
            "graph",
            "decoration files require a simple graph",
        ));
    }

    let lookup = |path: String, [a, b]: [Vertex; 2]| -> Result<EdgeId> {
        graph
            .edge_between(a, b)
            .ok_or_else(|| field_err(&path, format!("no edge {a}-{b}")))
    };

    let mut d = Decoration::new(graph.clone());
    let mut knot_paths: HashMap<EdgeId, String> = HashMap::new();
    for (i, k) in file.knots.iter().enumerate() {
        let path = format!("knots[{i}]");
        let id = lookup(format!("{path}.edge"), k.edge)?;
        if knot_paths.insert(id, path.clone()).is_some() {
            return Err(field_err(
                &format!("{path}.edge"),
                format!("edge {}-{} already carries a knot", k.edge[0], k.edge[1]),
            ));
        }
        let label = KnotLabel {
            name: k.label.clone(),
            invertible: k.invertible,
        };
        d.set_knot(id, label, k.orientation.map(|[t, h]| (t, h)));
    }
    let mut around_paths: HashMap<EdgeId, String> = HashMap::new();
    for (i, a) in file.knotted_around.iter().enumerate() {
        let path = format!("knotted_around[{i}]");
        let outer = lookup(format!("{path}.outer"), a.outer)?;
        let around = lookup(format!("{path}.around"), a.around)?;
        around_paths.entry(outer).or_insert_with(|| path.clone());
        around_paths.entry(around).or_insert(path);
        d.add_knotted_around(outer, around);
    }

    validate(&d).map_err(|violations| {
        let located = violations
            .iter()
            .map(|v| {
                let path = match v {
                    Violation::MissingOrientation(e)
                    | Violation::UnexpectedOrientation(e)
                    | Violation::OrientationMismatch(e) => {
                        knot_paths.get(e).map(|p| format!("{p}.orientation"))
                    }
                    Violation::SelfKnottedAround(e) | Violation::NoSharedVertex(e, _) => {
                        around_paths.get(e).cloned()
                    }
                    _ => None,
                };
                match path {
                    Some(p) => format!("{p}: {v}"),
                    None => v.to_string(),
                }
            })
            .collect();
        Error::InvalidDecoration(located)
    })?;
    Ok(d)
}

/// Serializes a decoration in the file format read by [`decoration_from_json`].
pub fn decoration_to_json(d: &Decoration) -> Result<String> {
    let g = d.graph();
    if !g.is_simple() {
        return Err(Error::InvalidGraph(
            "decoration files require a simple graph".into(),
        ));
    }
    let graph = if is_k33(g) {
        GraphSpec::Builtin("k33".into())
    } else {
        GraphSpec::Explicit {
            vertices: g.vertex_count(),
            edges: g.edges().iter().map(|e| [e.u, e.v]).collect(),
        }
    };
    let ends = |id: &EdgeId| -> [Vertex; 2] {
        let e = g.edge(*id).expect("decoration edges exist");
        [e.u, e.v]
    };
    let file = DecorationFile {
        graph,
        knots: d
            .knots()
            .iter()
            .map(|(id, k)| KnotSpec {
                edge: ends(id),
                label: k.label.name.clone(),
                invertible: k.label.invertible,
                orientation: k.orientation.map(|(t, h)| [t, h]),
            })
            .collect(),
        knotted_around: d
            .knotted_around()
            .iter()
            .map(|(o, a)| AroundSpec {
                outer: ends(o),
                around: ends(a),
            })
            .collect(),
    };
    // One knot or pair per line keeps files short and diffable.
    let lines = |items: Vec<String>| -> String {
        if items.is_empty() {
            "[]".to_string()
        } else {
            format!("[\n    {}\n  ]", items.join(",\n    "))
        }
    };
    Ok(format!(
        "{{\n  \"graph\": {},\n  \"knots\": {},\n  \"knotted_around\": {}\n}}",
        compact(&file.graph),
        lines(file.knots.iter().map(compact).collect()),
        lines(file.knotted_around.iter().map(compact).collect()),
    ))
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoration::{catalog, stabilizer};

    #[test]
    fn reads_builtin_graph_with_knots() {
        let text = r#"{"graph": "k33",
            "knots": [{"edge": [1, 4], "label": "A", "invertible": false, "orientation": [4, 1]}],
            "knotted_around": [{"outer": [1, 5], "around": [1, 6]}]}"#;
        let d = decoration_from_json(text).unwrap();
        assert_eq!(d.knots().len(), 1);
        assert_eq!(d.knotted_around().len(), 1);
    }

    #[test]
    fn explicit_graph() {
        let text = r#"{"graph": {"vertices": 3, "edges": [[1, 2], [2, 3], [3, 1]]}}"#;
        let d = decoration_from_json(text).unwrap();
        assert_eq!(stabilizer(&d).unwrap().order(), 6);
    }

    #[test]
    fn errors_carry_context() {
        let syntax =
            decoration_from_json("{\n  \"graph\": \"k33\",\n  \"knots\": [\n}").unwrap_err();
        assert!(syntax.to_string().contains("line 4"), "{syntax}");

        let missing = r#"{"graph": "k33", "knots": [
            {"edge": [1, 4], "label": "A", "invertible": true},
            {"edge": [2, 5], "label": "B", "invertible": false}]}"#;
        let err = decoration_from_json(missing).unwrap_err().to_string();
        assert!(
            err.contains("knots[1].orientation: missing orientation"),
            "{err}"
        );

        let no_edge =
            r#"{"graph": "k33", "knots": [{"edge": [1, 2], "label": "A", "invertible": true}]}"#;
        let err = decoration_from_json(no_edge).unwrap_err().to_string();
        assert!(err.contains("knots[0].edge: no edge 1-2"), "{err}");

        let disjoint =
            r#"{"graph": "k33", "knotted_around": [{"outer": [1, 4], "around": [2, 5]}]}"#;
        let err = decoration_from_json(disjoint).unwrap_err().to_string();
        assert!(err.contains("knotted_around[0]: no shared vertex"), "{err}");

        let multi = r#"{"graph": "mobius:1"}"#;
        assert!(decoration_from_json(multi)
            .unwrap_err()
            .to_string()
            .contains("simple graph"));

        let unknown = r#"{"graph": "petersen"}"#;
        assert!(decoration_from_json(unknown).is_err());

        let twice = r#"{"graph": "k33", "knots": [
            {"edge": [1, 4], "label": "A", "invertible": true},
            {"edge": [4, 1], "label": "B", "invertible": true}]}"#;
        assert!(decoration_from_json(twice)
            .unwrap_err()
            .to_string()
            .contains("knots[1].edge"));
    }

    #[test]
    fn catalog_entries_survive_a_file_round_trip() {
        for entry in catalog() {
            let text = decoration_to_json(&entry.decoration).unwrap();
            let back = decoration_from_json(&text).unwrap();
            assert_eq!(back, entry.decoration, "{}", entry.name);
        }
    }
}
