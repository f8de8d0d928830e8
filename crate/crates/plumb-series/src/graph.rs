//! Plumbing trees: decorated graphs with integer self-intersection weights.
//!
//! A [`ResolutionGraph`] is a finite connected tree whose vertices carry an
//! integer Euler number (self-intersection) and optionally some *arrows* —
//! markers for transverse curve components used by the relative series and
//! the zeta function. Key items:
//!
//! * [`ResolutionGraph::parse`] / [`ResolutionGraph::to_text`] — plain-text
//!   format (`vertex`, `edge`, `arrow` lines, `#` comments);
//! * [`ResolutionGraph::from_json`] / [`ResolutionGraph::to_json`] — the
//!   canonical machine interchange form;
//! * [`ResolutionGraph::validate`] — [`ValidationReport`] with exact
//!   determinant and negative-definiteness verdict;
//! * [`ResolutionGraph::blow_up_free`] — attach a fresh `-1` vertex and drop
//!   the host's weight by one (the series-preserving graph move);
//! * [`ResolutionGraph::induced_subgraph`] — restriction to a connected
//!   vertex subset.
//!
//! Structural invariants (nonempty, connected, acyclic, unique ids, no
//! self-loops or duplicate edges) are enforced at construction; genus or
//! other extra decorations are rejected by the parser. Negative definiteness
//! is *not* required to build a graph — `validate` reports it, and the
//! lattice layer refuses indefinite forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// One vertex of a plumbing tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    /// User-chosen identifier (any whitespace-free token).
    pub id: String,
    /// Euler number (self-intersection weight).
    pub euler: i64,
}

/// A decorated plumbing tree. Vertex indices follow declaration order; every
/// index-based API below uses those positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionGraph {
    vertices: Vec<Vertex>,
    /// Edges as index pairs `(min, max)`, in declaration order.
    edges: Vec<(usize, usize)>,
    /// Arrow count per vertex (same indexing as `vertices`).
    arrows: Vec<u64>,
    /// Adjacency lists, each sorted ascending.
    adjacency: Vec<Vec<usize>>,
    /// Id -> index lookup.
    index: BTreeMap<String, usize>,
}

/// Outcome of the structural + arithmetic checks on a graph.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    /// Whether the edge set connects all vertices (true by construction).
    pub connected: bool,
    /// Whether the edge set is acyclic (true by construction).
    pub tree: bool,
    /// Whether the intersection form is negative definite.
    pub negative_definite: bool,
    /// Exact determinant of the intersection matrix, as a decimal string.
    pub determinant: String,
    /// Description of the first failed check, if any.
    pub failure_witness: Option<String>,
}

impl ValidationReport {
    /// True when every check passed.
    pub fn ok(&self) -> bool {
        self.connected && self.tree && self.negative_definite
    }
}

#[derive(Serialize, Deserialize)]
struct VertexDoc {
    id: String,
    euler: i64,
}

/// Serde document for the JSON interchange form.
#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    arrows: BTreeMap<String, u64>,
}

impl ResolutionGraph {
    /// Builds a graph from parts, enforcing the structural invariants.
    pub fn new(
        vertices: Vec<Vertex>,
        edge_ids: &[(String, String)],
        arrow_counts: &BTreeMap<String, u64>,
    ) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::DuplicateVertex { id: v.id.clone() });
            }
        }
        let lookup = |id: &str| -> Result<usize> {
            index.get(id).copied().ok_or_else(|| Error::UnknownVertex {
                id: id.to_string(),
            })
        };

        let n = vertices.len();
        let mut edges = Vec::with_capacity(edge_ids.len());
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in edge_ids {
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(Error::SelfLoop { id: a.clone() });
            }
            let key = (i.min(j), i.max(j));
            if edges.contains(&key) {
                return Err(Error::DuplicateEdge {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
            edges.push(key);
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        // A connected graph on n vertices with n-1 edges is a tree; check
        // connectivity explicitly and infer acyclicity from the edge count.
        if edges.len() + 1 != n {
            return Err(if edges.len() + 1 > n {
                Error::NotATree
            } else {
                Error::NotConnected
            });
        }
        if !connected(n, &adjacency) {
            return Err(Error::NotConnected);
        }

        let mut arrows = vec![0u64; n];
        for (id, count) in arrow_counts {
            arrows[lookup(id)?] += count;
        }

        Ok(ResolutionGraph {
            vertices,
            edges,
            arrows,
            adjacency,
            index,
        })
    }

    /// Parses the plain-text format. Lines are `vertex <id> <euler>`,
    /// `edge <id> <id>`, `arrow <id> [count]`; `#` starts a comment. Extra
    /// tokens (genus or other decorations) are rejected.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut arrows: BTreeMap<String, u64> = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = match raw.split_once('#') {
                Some((head, _)) => head,
                None => raw,
            };
            let mut tokens = content.split_whitespace();
            let Some(keyword) = tokens.next() else {
                continue;
            };
            let rest: Vec<&str> = tokens.collect();
            let err = |msg: String| Error::Parse { line, msg };
            match keyword {
                "vertex" => {
                    if rest.len() < 2 {
                        return Err(err("expected: vertex <id> <euler>".into()));
                    }
                    if rest.len() > 2 {
                        return Err(err(format!(
                            "unexpected trailing tokens {:?} (genus or other extra \
                             decorations are not supported)",
                            &rest[2..]
                        )));
                    }
                    let euler: i64 = rest[1].parse().map_err(|_| {
                        err(format!("Euler number {:?} is not an integer", rest[1]))
                    })?;
                    vertices.push(Vertex {
                        id: rest[0].to_string(),
                        euler,
                    });
                }
                "edge" => {
                    if rest.len() != 2 {
                        return Err(err("expected: edge <id> <id>".into()));
                    }
                    edges.push((rest[0].to_string(), rest[1].to_string()));
                }
                "arrow" => {
                    if rest.is_empty() || rest.len() > 2 {
                        return Err(err("expected: arrow <id> [count]".into()));
                    }
                    let count: u64 = match rest.get(1) {
                        Some(c) => c.parse().map_err(|_| {
                            err(format!("arrow count {:?} is not a positive integer", c))
                        })?,
                        None => 1,
                    };
                    if count == 0 {
                        return Err(err("arrow count must be at least 1".into()));
                    }
                    *arrows.entry(rest[0].to_string()).or_insert(0) += count;
                }
                other => {
                    return Err(err(format!(
                        "unknown keyword {other:?} (expected vertex, edge, or arrow)"
                    )));
                }
            }
        }
        ResolutionGraph::new(vertices, &edges, &arrows)
    }

    /// Renders the plain-text format; `parse` of the output reproduces the
    /// graph exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("vertex {} {}\n", v.id, v.euler));
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!(
                "edge {} {}\n",
                self.vertices[i].id, self.vertices[j].id
            ));
        }
        for (j, &count) in self.arrows.iter().enumerate() {
            if count > 0 {
                out.push_str(&format!("arrow {} {}\n", self.vertices[j].id, count));
            }
        }
        out
    }

    /// Parses the JSON interchange form.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDoc =
            serde_json::from_str(text).map_err(|e| Error::GraphJson(e.to_string()))?;
        let vertices = doc
            .vertices
            .into_iter()
            .map(|v| Vertex {
                id: v.id,
                euler: v.euler,
            })
            .collect();
        let edges: Vec<(String, String)> = doc
            .edges
            .into_iter()
            .map(|[a, b]| (a, b))
            .collect();
        ResolutionGraph::new(vertices, &edges, &doc.arrows)
    }

    /// Serializes to the JSON interchange form.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = GraphDoc {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexDoc {
                    id: v.id.clone(),
                    euler: v.euler,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(i, j)| [self.vertices[i].id.clone(), self.vertices[j].id.clone()])
                .collect(),
            arrows: self
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(j, &c)| (self.vertices[j].id.clone(), c))
                .collect(),
        };
        serde_json::to_value(doc).expect("graph document serializes")
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// True iff the graph has no vertices (never, by construction).
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex by index (declaration order).
    pub fn vertex(&self, j: usize) -> &Vertex {
        &self.vertices[j]
    }

    /// All vertices in declaration order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Index of a vertex id.
    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex { id: id.to_string() })
    }

    /// Edges as index pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor indices of vertex `j`.
    pub fn neighbors(&self, j: usize) -> &[usize] {
        &self.adjacency[j]
    }

    /// Arrow count at vertex `j`.
    pub fn arrow_count(&self, j: usize) -> u64 {
        self.arrows[j]
    }

    /// Total number of arrows on the graph.
    pub fn total_arrows(&self) -> u64 {
        self.arrows.iter().sum()
    }

    /// Returns a copy with `count` extra arrows on the vertex named `id`.
    pub fn with_arrows(&self, id: &str, count: u64) -> Result<Self> {
        let j = self.index_of(id)?;
        let mut g = self.clone();
        g.arrows[j] += count;
        Ok(g)
    }

    /// Valency of vertex `j`: its tree degree, plus its arrow count when
    /// `relative` is set (arrows count as extra branches for the relative
    /// series and the zeta function).
    pub fn valency(&self, j: usize, relative: bool) -> u64 {
        let deg = self.adjacency[j].len() as u64;
        if relative {
            deg + self.arrows[j]
        } else {
            deg
        }
    }

    /// Intersection matrix: diagonal = Euler numbers, entry 1 per edge.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0i64; n]; n];
        for (j, v) in self.vertices.iter().enumerate() {
            m[j][j] = v.euler;
        }
        for &(i, j) in &self.edges {
            m[i][j] = 1;
            m[j][i] = 1;
        }
        m
    }

    /// Structural and arithmetic report: connectivity and acyclicity (true
    /// by construction), exact determinant, negative definiteness.
    pub fn validate(&self) -> ValidationReport {
        let m: Vec<Vec<BigInt>> = self
            .intersection_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(BigInt::from).collect())
            .collect();
        let minors = linalg::leading_principal_minors(&m);
        let witness = linalg::negative_definite_witness(&minors);
        let det = minors.last().cloned().unwrap_or_else(|| BigInt::from(1));
        ValidationReport {
            connected: true,
            tree: true,
            negative_definite: witness.is_none(),
            determinant: det.to_string(),
            failure_witness: witness.map(|k| {
                format!(
                    "leading principal minor {k} is {}, expected sign {}",
                    minors[k - 1],
                    if k % 2 == 1 { "negative" } else { "positive" }
                )
            }),
        }
    }

    /// Blows up a free point of the curve at vertex `j`: appends a new `-1`
    /// vertex joined to `j` and lowers the weight of `j` by one. The new
    /// vertex is named `new_id` if given (must be unused), else the first
    /// free name `b1`, `b2`, ....
    pub fn blow_up_free(&self, j: usize, new_id: Option<&str>) -> Result<Self> {
        assert!(j < self.len(), "vertex index out of range");
        let id = match new_id {
            Some(id) => {
                if self.index.contains_key(id) {
                    return Err(Error::DuplicateVertex { id: id.to_string() });
                }
                id.to_string()
            }
            None => (1..)
                .map(|k| format!("b{k}"))
                .find(|cand| !self.index.contains_key(cand))
                .expect("unbounded name search"),
        };
        let mut vertices = self.vertices.clone();
        vertices[j].euler -= 1;
        vertices.push(Vertex {
            id: id.clone(),
            euler: -1,
        });
        let mut edge_ids: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(a, b)| (self.vertices[a].id.clone(), self.vertices[b].id.clone()))
            .collect();
        edge_ids.push((self.vertices[j].id.clone(), id));
        let arrows: BTreeMap<String, u64> = self
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(v, &c)| (self.vertices[v].id.clone(), c))
            .collect();
        ResolutionGraph::new(vertices, &edge_ids, &arrows)
    }

    /// Induced subgraph on the given vertex indices (kept in declaration
    /// order, with their arrows). Errors if the subset is empty or the
    /// restriction is disconnected.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Self> {
        let mut keep = vec![false; self.len()];
        for &j in subset {
            assert!(j < self.len(), "vertex index out of range");
            keep[j] = true;
        }
        let vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(j, _)| keep[*j])
            .map(|(_, v)| v.clone())
            .collect();
        let edge_ids: Vec<(String, String)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep[a] && keep[b])
            .map(|&(a, b)| (self.vertices[a].id.clone(), self.vertices[b].id.clone()))
            .collect();
        let arrows: BTreeMap<String, u64> = self
            .arrows
            .iter()
            .enumerate()
            .filter(|(j, &c)| keep[*j] && c > 0)
            .map(|(j, &c)| (self.vertices[j].id.clone(), c))
            .collect();
        ResolutionGraph::new(vertices, &edge_ids, &arrows)
    }
}

fn connected(n: usize, adjacency: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN3: &str = "
# three -2 vertices in a row
vertex a -2
vertex m -2
vertex c -2
edge a m
edge m c
arrow m
";

    #[test]
    fn parse_chain_with_arrow() {
        let g = ResolutionGraph::parse(CHAIN3).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.vertex(1).id, "m");
        assert_eq!(g.vertex(1).euler, -2);
        assert_eq!(g.arrow_count(1), 1);
        assert_eq!(g.total_arrows(), 1);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.valency(1, false), 2);
        assert_eq!(g.valency(1, true), 3);
    }

    #[test]
    fn text_round_trip_is_identity() {
        let g = ResolutionGraph::parse(CHAIN3).unwrap();
        let again = ResolutionGraph::parse(&g.to_text()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn json_round_trip_is_identity() {
        let g = ResolutionGraph::parse(CHAIN3).unwrap();
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let again = ResolutionGraph::from_json(&json).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn genus_decorations_are_rejected() {
        let err = ResolutionGraph::parse("vertex a -2 1\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 1"), "{msg}");
        assert!(msg.contains("genus"), "{msg}");
    }

    #[test]
    fn structural_errors_are_specific() {
        use crate::error::Error::*;
        let dup = ResolutionGraph::parse("vertex a -2\nvertex a -3\n").unwrap_err();
        assert!(matches!(dup, DuplicateVertex { .. }));
        let unknown = ResolutionGraph::parse("vertex a -2\nedge a b\n").unwrap_err();
        assert!(matches!(unknown, UnknownVertex { .. }));
        let disconnected = ResolutionGraph::parse("vertex a -2\nvertex b -2\n").unwrap_err();
        assert!(matches!(disconnected, NotConnected));
        let cyclic = ResolutionGraph::parse(
            "vertex a -2\nvertex b -2\nvertex c -2\nedge a b\nedge b c\nedge c a\n",
        )
        .unwrap_err();
        assert!(matches!(cyclic, NotATree));
        let empty = ResolutionGraph::parse("# nothing\n").unwrap_err();
        assert!(matches!(empty, EmptyGraph));
        let loop_err = ResolutionGraph::parse("vertex a -2\nedge a a\n").unwrap_err();
        assert!(matches!(loop_err, SelfLoop { .. }));
    }

    #[test]
    fn validation_flags_indefinite_forms() {
        let good = ResolutionGraph::parse(CHAIN3).unwrap().validate();
        assert!(good.ok());
        assert_eq!(good.determinant, "-4");

        let bad = ResolutionGraph::parse("vertex a 1\n").unwrap().validate();
        assert!(!bad.ok());
        assert!(!bad.negative_definite);
        assert_eq!(bad.determinant, "1");
        assert!(bad.failure_witness.as_deref().unwrap().contains("minor 1"));
    }

    #[test]
    fn blow_up_appends_minus_one_vertex() {
        let g = ResolutionGraph::parse(CHAIN3).unwrap();
        let b = g.blow_up_free(0, Some("e")).unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b.vertex(0).euler, -3);
        assert_eq!(b.vertex(3).id, "e");
        assert_eq!(b.vertex(3).euler, -1);
        assert_eq!(b.neighbors(3), &[0]);
        // Default naming picks the first free b<k>.
        let b2 = g.blow_up_free(2, None).unwrap();
        assert_eq!(b2.vertex(3).id, "b1");
    }

    #[test]
    fn induced_subgraph_keeps_order_and_arrows() {
        let g = ResolutionGraph::parse(CHAIN3).unwrap();
        let sub = g.induced_subgraph(&[1, 2]).unwrap();
        assert_eq!(sub.len(), 2);
        assert_eq!(sub.vertex(0).id, "m");
        assert_eq!(sub.arrow_count(0), 1);
        assert!(g.induced_subgraph(&[0, 2]).is_err());
        assert!(g.induced_subgraph(&[]).is_err());
    }
}
