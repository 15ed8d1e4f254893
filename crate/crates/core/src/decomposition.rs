//! Vertex splitting along non-trivial minimum cuts and extraction of
//! degree-`k` witnesses.
//!
//! An exactly `k`-edge-connected graph with a non-trivial minimum cut
//! `<V1, V2>` splits into `G1` (the subgraph induced by `V1` plus a fresh
//! vertex `x1` attached to the `V1` end of every cut edge) and `G2` built the
//! same way. Repeating until no non-trivial minimum cut remains yields a
//! [`SplitTree`] whose leaves have at most one vertex of degree other than
//! `k`. Degree-`k` vertices of the leaves, minus the added vertices, are
//! degree-`k` vertices of the original graph.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::connectivity::{global_edge_connectivity, is_exactly_k_edge_connected, min_edge_cut};
use crate::error::{Error, Result};
use crate::graph::{EdgeCut, EdgeId, Multigraph, VertexId};
use crate::mgraph::to_mgraph;
use crate::minimality::is_edge_minimal;
use crate::quotient::quotient_graph;

/// Largest vertex count accepted by the exhaustive bipartition scans.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 16;

/// A cut is trivial when one side is a single vertex.
pub fn is_trivial_cut(g: &Multigraph, cut: &EdgeCut) -> Result<bool> {
    cut.validate(g)?;
    Ok(cut.side1().len() == 1 || cut.side2().len() == 1)
}

/// At most one vertex has degree different from `k`.
pub fn is_quasi_k_regular(g: &Multigraph, k: usize) -> bool {
    g.degrees().iter().filter(|&&d| d != k).count() <= 1
}

fn check_size(g: &Multigraph, limit: usize) -> Result<()> {
    let n = g.vertex_count();
    if n > limit.min(32) {
        return Err(Error::TooLarge {
            what: "vertex count",
            size: n,
            limit: limit.min(32),
        });
    }
    Ok(())
}

/// Side masks (always containing vertex 0) of every bipartition with both
/// sides of size at least two and exactly `value` crossing edges.
fn nontrivial_cuts_of_value(g: &Multigraph, value: usize) -> Vec<u32> {
    let n = g.vertex_count();
    if n < 4 {
        return Vec::new();
    }
    let ends: Vec<(u32, u32)> = g.edges().iter().map(|e| (e.u.0 as u32, e.v.0 as u32)).collect();
    let mut out = Vec::new();
    for rest in 0u32..(1u32 << (n - 1)) {
        let side = (rest << 1) | 1;
        let size = side.count_ones() as usize;
        if size < 2 || n - size < 2 {
            continue;
        }
        let crossing = ends
            .iter()
            .filter(|&&(u, v)| ((side >> u) ^ (side >> v)) & 1 == 1)
            .count();
        if crossing == value {
            out.push(side);
        }
    }
    out
}

fn mask_to_vertices(mask: u32, n: usize) -> Vec<VertexId> {
    (0..n).filter(|&v| mask >> v & 1 == 1).map(VertexId).collect()
}

/// Non-trivial cut of value `k` with the lexicographically smallest side,
/// found by scanning every bipartition.
pub fn find_nontrivial_min_cut(g: &Multigraph, k: usize) -> Result<Option<EdgeCut>> {
    find_nontrivial_min_cut_bounded(g, k, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn find_nontrivial_min_cut_bounded(
    g: &Multigraph,
    k: usize,
    limit: usize,
) -> Result<Option<EdgeCut>> {
    check_size(g, limit)?;
    if !is_exactly_k_edge_connected(g, k)? {
        return Err(Error::NotExactlyK(k));
    }
    Ok(smallest_nontrivial_cut(g, k))
}

fn smallest_nontrivial_cut(g: &Multigraph, k: usize) -> Option<EdgeCut> {
    let n = g.vertex_count();
    nontrivial_cuts_of_value(g, k)
        .into_iter()
        .map(|m| mask_to_vertices(m, n))
        .min()
        .map(|side| EdgeCut::from_side(g, side).expect("side is a proper subset"))
}

/// Number of non-trivial minimum cuts, counted as bipartitions.
pub fn count_nontrivial_min_cuts(g: &Multigraph) -> Result<usize> {
    check_size(g, DEFAULT_EXHAUSTIVE_LIMIT)?;
    let lambda = global_edge_connectivity(g)?;
    Ok(nontrivial_cuts_of_value(g, lambda).len())
}

/// Flow-based search for a non-trivial minimum cut: any minimum cut between
/// two vertices of degree above `k` cannot isolate either of them.
///
/// `None` only means this shortcut found nothing; the exhaustive scan in
/// [`find_nontrivial_min_cut`] is authoritative.
pub fn flow_nontrivial_cut(g: &Multigraph, k: usize) -> Result<Option<EdgeCut>> {
    let mut heavy = g.vertices().filter(|v| g.degrees()[v.0] > k);
    let (Some(u), Some(v)) = (heavy.next(), heavy.next()) else {
        return Ok(None);
    };
    let cut = min_edge_cut(g, u, v)?;
    if cut.value() == k && cut.side1().len() >= 2 && cut.side2().len() >= 2 {
        Ok(Some(cut))
    } else {
        Ok(None)
    }
}

/// The two halves of a vertex splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSplit {
    pub left: Half,
    pub right: Half,
}

/// One side of a vertex splitting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Half {
    #[serde(serialize_with = "as_mgraph")]
    pub graph: Multigraph,
    /// The added vertex; always the highest-numbered vertex of `graph`.
    pub added: VertexId,
    /// Parent vertex of each child vertex other than `added`.
    pub vertex_origin: Vec<VertexId>,
    /// `(child edge at added, parent cut edge)`, both ascending.
    pub correspondence: Vec<(EdgeId, EdgeId)>,
}

fn as_mgraph<S: Serializer>(g: &Multigraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_mgraph(g))
}

fn build_half(g: &Multigraph, side: &[VertexId], cut_edges: &[EdgeId]) -> Half {
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, v) in side.iter().enumerate() {
        index[v.0] = i;
    }
    let inside = |v: VertexId| index[v.0] != usize::MAX;
    let mut graph = Multigraph::new(side.len());
    for e in g.edges() {
        if inside(e.u) && inside(e.v) {
            graph
                .push_edge(VertexId(index[e.u.0]), VertexId(index[e.v.0]))
                .expect("induced edge");
        }
    }
    let added = graph.push_vertex();
    let mut correspondence = Vec::with_capacity(cut_edges.len());
    for &c in cut_edges {
        let e = g.edge(c).expect("validated cut edge");
        let end = if inside(e.u) { e.u } else { e.v };
        let new = graph
            .push_edge(added, VertexId(index[end.0]))
            .expect("distinct endpoints");
        correspondence.push((new, c));
    }
    Half {
        graph,
        added,
        vertex_origin: side.to_vec(),
        correspondence,
    }
}

/// Splits `g` along a non-trivial minimum cut.
pub fn vertex_split(g: &Multigraph, cut: &EdgeCut) -> Result<VertexSplit> {
    if is_trivial_cut(g, cut)? {
        return Err(Error::TrivialCut);
    }
    let lambda = global_edge_connectivity(g)?;
    if cut.value() != lambda {
        return Err(Error::NotMinCut {
            value: cut.value(),
            lambda,
        });
    }
    let mut cut_edges = cut.cut_edges().to_vec();
    cut_edges.sort();
    Ok(VertexSplit {
        left: build_half(g, cut.side1(), &cut_edges),
        right: build_half(g, cut.side2(), &cut_edges),
    })
}

/// Recursive vertex-splitting record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitTree {
    Leaf {
        graph: Multigraph,
    },
    Split {
        graph: Multigraph,
        cut: EdgeCut,
        left: Box<(Half, SplitTree)>,
        right: Box<(Half, SplitTree)>,
    },
}

impl SplitTree {
    pub fn graph(&self) -> &Multigraph {
        match self {
            SplitTree::Leaf { graph } | SplitTree::Split { graph, .. } => graph,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, SplitTree::Leaf { .. })
    }

    /// Leaf graphs, left to right.
    pub fn leaves(&self) -> Vec<&Multigraph> {
        match self {
            SplitTree::Leaf { graph } => vec![graph],
            SplitTree::Split { left, right, .. } => {
                let mut out = left.1.leaves();
                out.extend(right.1.leaves());
                out
            }
        }
    }

    pub fn split_count(&self) -> usize {
        match self {
            SplitTree::Leaf { .. } => 0,
            SplitTree::Split { left, right, .. } => 1 + left.1.split_count() + right.1.split_count(),
        }
    }
}

impl Serialize for SplitTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SplitTree::Leaf { graph } => {
                let mut st = s.serialize_struct("SplitTree", 3)?;
                st.serialize_field("kind", "leaf")?;
                st.serialize_field("mgraph", &to_mgraph(graph))?;
                st.serialize_field("degrees", graph.degrees())?;
                st.end()
            }
            SplitTree::Split {
                graph,
                cut,
                left,
                right,
            } => {
                let mut st = s.serialize_struct("SplitTree", 9)?;
                st.serialize_field("kind", "split")?;
                st.serialize_field("mgraph", &to_mgraph(graph))?;
                st.serialize_field("side1", cut.side1())?;
                st.serialize_field("side2", cut.side2())?;
                st.serialize_field("cut_edges", cut.cut_edges())?;
                st.serialize_field("added_left", &left.0.added)?;
                st.serialize_field("added_right", &right.0.added)?;
                st.serialize_field("left", &Child(&left.0, &left.1))?;
                st.serialize_field("right", &Child(&right.0, &right.1))?;
                st.end()
            }
        }
    }
}

struct Child<'a>(&'a Half, &'a SplitTree);

impl Serialize for Child<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Child", 3)?;
        st.serialize_field("vertex_origin", &self.0.vertex_origin)?;
        st.serialize_field("correspondence", &self.0.correspondence)?;
        st.serialize_field("tree", self.1)?;
        st.end()
    }
}

/// Splits an exactly `k`-edge-connected graph until no non-trivial minimum
/// cut remains.
///
/// Every child must again be exactly `k`-edge-connected and every leaf
/// quasi-`k`-regular; a violation is reported as [`Error::ClaimViolated`]
/// rather than assumed away.
pub fn decompose(g: &Multigraph, k: usize) -> Result<SplitTree> {
    decompose_bounded(g, k, DEFAULT_EXHAUSTIVE_LIMIT)
}

pub fn decompose_bounded(g: &Multigraph, k: usize, limit: usize) -> Result<SplitTree> {
    check_size(g, limit)?;
    if !is_exactly_k_edge_connected(g, k)? {
        return Err(Error::NotExactlyK(k));
    }
    grow(g.clone(), k)
}

fn grow(graph: Multigraph, k: usize) -> Result<SplitTree> {
    let Some(cut) = smallest_nontrivial_cut(&graph, k) else {
        if !is_quasi_k_regular(&graph, k) {
            return Err(Error::ClaimViolated {
                claim: "leaf-quasi-regular",
                detail: format!("leaf has degrees {:?}\n{}", graph.degrees(), to_mgraph(&graph)),
            });
        }
        return Ok(SplitTree::Leaf { graph });
    };
    let VertexSplit { left, right } = vertex_split(&graph, &cut)?;
    let mut children = Vec::with_capacity(2);
    for half in [left, right] {
        if !is_exactly_k_edge_connected(&half.graph, k)? {
            return Err(Error::ClaimViolated {
                claim: "split-exact",
                detail: format!(
                    "part of split along {:?} is not exactly {k}-edge-connected\n{}",
                    cut.side1(),
                    to_mgraph(&half.graph)
                ),
            });
        }
        let sub = grow(half.graph.clone(), k)?;
        children.push(Box::new((half, sub)));
    }
    let right = children.pop().unwrap();
    let left = children.pop().unwrap();
    Ok(SplitTree::Split {
        graph,
        cut,
        left,
        right,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Scan,
    Constructive,
}

/// Vertices of degree `k` together with how they were found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessPair {
    pub witnesses: Vec<VertexId>,
    pub provenance: Provenance,
}

/// Every vertex of degree exactly `k`.
pub fn scan_witnesses(g: &Multigraph, k: usize) -> WitnessPair {
    WitnessPair {
        witnesses: g.vertices().filter(|v| g.degrees()[v.0] == k).collect(),
        provenance: Provenance::Scan,
    }
}

fn tree_witnesses(tree: &SplitTree, k: usize) -> Result<Vec<VertexId>> {
    match tree {
        SplitTree::Leaf { graph } => Ok(scan_witnesses(graph, k).witnesses),
        SplitTree::Split { left, right, .. } => {
            let mut out = Vec::new();
            for (half, sub) in [&**left, &**right] {
                let before = out.len();
                out.extend(
                    tree_witnesses(sub, k)?
                        .into_iter()
                        .filter(|&w| w != half.added)
                        .map(|w| half.vertex_origin[w.0]),
                );
                if out.len() == before {
                    return Err(Error::ClaimViolated {
                        claim: "two-degree-k",
                        detail: format!(
                            "split part has no degree-{k} vertex besides the added one\n{}",
                            to_mgraph(&half.graph)
                        ),
                    });
                }
            }
            out.sort();
            Ok(out)
        }
    }
}

/// Degree-`k` vertices of an exactly `k`-edge-connected graph, collected
/// from the leaves of its [`SplitTree`].
pub fn constructive_witnesses(g: &Multigraph, k: usize) -> Result<WitnessPair> {
    let tree = decompose(g, k)?;
    let witnesses = tree_witnesses(&tree, k)?;
    if witnesses.len() < 2 || witnesses.iter().any(|w| g.degrees()[w.0] != k) {
        return Err(Error::ClaimViolated {
            claim: "two-degree-k",
            detail: format!("constructive witnesses {witnesses:?}\n{}", to_mgraph(g)),
        });
    }
    Ok(WitnessPair {
        witnesses,
        provenance: Provenance::Constructive,
    })
}

/// Degree-`k` vertices of an edge-minimal `k`-edge-connected graph, found
/// through its quotient: each degree-`k` class of the quotient is a single
/// vertex of `g` whose degree is `k`.
pub fn theorem_witnesses(g: &Multigraph, k: usize) -> Result<WitnessPair> {
    if !is_edge_minimal(g, k)?.is_minimal {
        return Err(Error::NotEdgeMinimal(k));
    }
    let q = quotient_graph(g, k)?;
    let classes = match constructive_witnesses(&q.graph, k) {
        Ok(w) => w.witnesses,
        Err(Error::NotExactlyK(_)) => {
            return Err(Error::ClaimViolated {
                claim: "quotient-exact",
                detail: format!("quotient is not exactly {k}-edge-connected\n{}", to_mgraph(g)),
            })
        }
        Err(e) => return Err(e),
    };
    let mut witnesses = Vec::with_capacity(classes.len());
    for c in classes {
        let members = &q.partition.classes()[c.0];
        match members.as_slice() {
            [u] if g.degrees()[u.0] == k => witnesses.push(*u),
            _ => {
                return Err(Error::ClaimViolated {
                    claim: "witness-class",
                    detail: format!(
                        "degree-{k} class {members:?} is not a single degree-{k} vertex\n{}",
                        to_mgraph(g)
                    ),
                })
            }
        }
    }
    witnesses.sort();
    Ok(WitnessPair {
        witnesses,
        provenance: Provenance::Constructive,
    })
}
