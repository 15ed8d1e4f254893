use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quotient::ClassPartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One undirected edge record. Endpoints keep their insertion order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// The endpoint opposite to `x`. `x` must be an endpoint.
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }

    /// Endpoints as an ordered pair, smaller id first.
    pub fn key(&self) -> (VertexId, VertexId) {
        if self.u < self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

/// Undirected multigraph without self-loops.
///
/// Vertices are the dense range `0..vertex_count()`. Edge ids are handed out
/// in increasing order and never reused, so removing an edge leaves every
/// other id untouched. All transforms return a new graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    // sorted by id
    edges: Vec<Edge>,
    next_edge: usize,
    degrees: Vec<usize>,
}

impl Multigraph {
    /// Graph with `n` isolated vertices.
    pub fn new(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            next_edge: 0,
            degrees: vec![0; n],
        }
    }

    /// Builds a graph on `n` vertices; edge `i` of the slice gets id `i`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.push_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = VertexId> + ExactSizeIterator {
        (0..self.n).map(VertexId)
    }

    /// Edge records in ascending id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.0 < self.n
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn add_vertex(&self) -> (Multigraph, VertexId) {
        let mut g = self.clone();
        let v = g.push_vertex();
        (g, v)
    }

    pub fn add_edge(&self, u: VertexId, v: VertexId) -> Result<(Multigraph, EdgeId)> {
        let mut g = self.clone();
        let e = g.push_edge(u, v)?;
        Ok((g, e))
    }

    pub fn remove_edge(&self, e: EdgeId) -> Result<Multigraph> {
        let mut g = self.clone();
        g.pop_edge(e)?;
        Ok(g)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.degrees[v.0])
    }

    /// Degree of every vertex, indexed by vertex id.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Edges incident to `v` in ascending id order.
    pub fn incident(&self, v: VertexId) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(move |e| e.touches(v))
    }

    /// Number of parallel edges joining `u` and `v`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|e| (e.u == u && e.v == v) || (e.u == v && e.v == u))
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.components().iter().all(|&c| c == 0)
    }

    /// Connected component index per vertex, numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(x) = stack.pop() {
                for &(_, y) in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Adjacency lists of `(edge index, neighbour)` pairs, ascending by edge id.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u.0].push((i, e.v.0));
            adj[e.v.0].push((i, e.u.0));
        }
        adj
    }

    /// Ids of edges with exactly one endpoint in `side`.
    pub fn crossing_edges(&self, side: &[bool]) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|e| side[e.u.0] != side[e.v.0])
            .map(|e| e.id)
            .collect()
    }

    pub(crate) fn push_vertex(&mut self) -> VertexId {
        self.n += 1;
        self.degrees.push(0);
        VertexId(self.n - 1)
    }

    pub(crate) fn push_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoopRejected(u));
        }
        let id = EdgeId(self.next_edge);
        self.next_edge += 1;
        self.edges.push(Edge { id, u, v });
        self.degrees[u.0] += 1;
        self.degrees[v.0] += 1;
        Ok(id)
    }

    pub(crate) fn pop_edge(&mut self, id: EdgeId) -> Result<Edge> {
        let i = self
            .edges
            .binary_search_by_key(&id, |e| e.id)
            .map_err(|_| Error::UnknownEdge(id))?;
        let e = self.edges.remove(i);
        self.degrees[e.u.0] -= 1;
        self.degrees[e.v.0] -= 1;
        Ok(e)
    }

    /// Replaces every parallel copy after the first (lowest id) in each class
    /// by a path of length two through a fresh midpoint vertex.
    ///
    /// The result is a simple graph on the original vertices plus the
    /// midpoints. Each original edge maps to the one or two edges that now
    /// carry it, so edge-disjoint path systems correspond one to one.
    pub fn subdivide_parallel_edges(&self) -> Subdivision {
        let mut out = Multigraph::new(self.n);
        let mut paths = BTreeMap::new();
        let mut seen = std::collections::HashSet::new();
        for e in &self.edges {
            let path = if seen.insert(e.key()) {
                vec![out.push_edge(e.u, e.v).expect("endpoints exist")]
            } else {
                let mid = out.push_vertex();
                vec![
                    out.push_edge(e.u, mid).expect("endpoints exist"),
                    out.push_edge(mid, e.v).expect("endpoints exist"),
                ]
            };
            paths.insert(e.id, path);
        }
        Subdivision { graph: out, paths }
    }

    /// Collapses every class of `partition` to one vertex. Edges between
    /// different classes survive one for one; edges inside a class vanish.
    pub fn contract_vertex_sets(&self, partition: &ClassPartition) -> Result<Multigraph> {
        if partition.class_of().len() != self.n {
            return Err(Error::PartitionNotCover);
        }
        Ok(self
            .contract_with_origin(partition.class_of(), partition.len())
            .0)
    }

    /// Contraction by a class map; also returns the original id of each
    /// surviving edge, indexed by the new edge id.
    pub(crate) fn contract_with_origin(
        &self,
        class_of: &[usize],
        classes: usize,
    ) -> (Multigraph, Vec<EdgeId>) {
        let mut out = Multigraph::new(classes);
        let mut origin = Vec::new();
        for e in &self.edges {
            let (a, b) = (class_of[e.u.0], class_of[e.v.0]);
            if a != b {
                out.push_edge(VertexId(a), VertexId(b))
                    .expect("class indices are in range");
                origin.push(e.id);
            }
        }
        (out, origin)
    }
}

/// Output of [`Multigraph::subdivide_parallel_edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Multigraph,
    /// Original edge id to the edges of its replacement path, in order from
    /// the edge's `u` endpoint to its `v` endpoint.
    pub paths: BTreeMap<EdgeId, Vec<EdgeId>>,
}

/// An edge cut together with the bipartition it induces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeCut {
    cut_edges: Vec<EdgeId>,
    side1: Vec<VertexId>,
    side2: Vec<VertexId>,
}

impl EdgeCut {
    /// The cut `<side1, V \ side1>` of `g`: every edge crossing the bipartition.
    pub fn from_side(g: &Multigraph, side1: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut mask = vec![false; g.vertex_count()];
        for v in side1 {
            g.check_vertex(v)?;
            mask[v.0] = true;
        }
        Self::from_mask(g, &mask)
    }

    pub(crate) fn from_mask(g: &Multigraph, mask: &[bool]) -> Result<Self> {
        let side1: Vec<VertexId> = g.vertices().filter(|v| mask[v.0]).collect();
        let side2: Vec<VertexId> = g.vertices().filter(|v| !mask[v.0]).collect();
        if side1.is_empty() || side2.is_empty() {
            return Err(Error::InvalidCut("both sides must be nonempty".into()));
        }
        Ok(EdgeCut {
            cut_edges: g.crossing_edges(mask),
            side1,
            side2,
        })
    }

    pub fn cut_edges(&self) -> &[EdgeId] {
        &self.cut_edges
    }

    pub fn side1(&self) -> &[VertexId] {
        &self.side1
    }

    pub fn side2(&self) -> &[VertexId] {
        &self.side2
    }

    pub fn value(&self) -> usize {
        self.cut_edges.len()
    }

    /// Checks that the sides partition the vertices of `g` and that the cut
    /// edges are exactly the edges crossing between them.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let n = g.vertex_count();
        let mut side = vec![None; n];
        for (s, vs) in [(true, &self.side1), (false, &self.side2)] {
            if vs.is_empty() {
                return Err(Error::InvalidCut("empty side".into()));
            }
            for &v in vs {
                if v.0 >= n {
                    return Err(Error::InvalidCut(format!("{v} is not a vertex")));
                }
                if side[v.0].replace(s).is_some() {
                    return Err(Error::InvalidCut(format!("{v} listed twice")));
                }
            }
        }
        let mask: Vec<bool> = match side.into_iter().collect::<Option<Vec<_>>>() {
            Some(mask) => mask,
            None => return Err(Error::InvalidCut("sides do not cover the graph".into())),
        };
        let mut expected = g.crossing_edges(&mask);
        let mut given = self.cut_edges.clone();
        expected.sort();
        given.sort();
        if expected != given {
            return Err(Error::InvalidCut(
                "cut edges differ from the edges crossing the bipartition".into(),
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> VertexId {
        VertexId(i)
    }

    #[test]
    fn add_vertex_numbers_densely() {
        let (g, a) = Multigraph::default().add_vertex();
        assert_eq!(a, v(0));
        let (g, b) = g.add_vertex();
        let (g, c) = g.add_vertex();
        assert_eq!((b, c), (v(1), v(2)));
        assert_eq!(g.degree(c), Ok(0));
    }

    #[test]
    fn parallel_edges_get_distinct_ids() {
        let g = Multigraph::new(2);
        let (g, e1) = g.add_edge(v(0), v(1)).unwrap();
        let (g, e2) = g.add_edge(v(0), v(1)).unwrap();
        assert_ne!(e1, e2);
        assert_eq!(g.degree(v(0)), Ok(2));
        assert_eq!(g.add_edge(v(0), v(0)), Err(Error::SelfLoopRejected(v(0))));
        assert_eq!(g.add_edge(v(0), v(5)), Err(Error::UnknownVertex(v(5))));
    }

    #[test]
    fn k_parallel_edges_give_degree_k() {
        for k in 1..6 {
            let g = Multigraph::from_edges(2, &vec![(0, 1); k]).unwrap();
            assert_eq!(g.degrees(), &[k, k]);
        }
    }

    #[test]
    fn remove_edge_keeps_other_ids() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p4 = c4.remove_edge(EdgeId(3)).unwrap();
        let ids: Vec<_> = p4.edges().iter().map(|e| e.id.0).collect();
        assert_eq!(ids, vec![0, 1, 2]);
        assert_eq!(p4.degrees(), &[1, 2, 2, 1]);
        assert!(p4.is_connected());
        assert_eq!(p4.remove_edge(EdgeId(3)), Err(Error::UnknownEdge(EdgeId(3))));

        let k2 = Multigraph::from_edges(2, &[(0, 1); 3]).unwrap();
        let k2 = k2.remove_edge(EdgeId(1)).unwrap();
        assert_eq!(k2.multiplicity(v(0), v(1)), 2);
        assert_eq!(k2.edge(EdgeId(2)).map(|e| e.id), Some(EdgeId(2)));
    }

    #[test]
    fn degree_of_k23() {
        // a=0, b=1, w1..w3 = 2..4; counted by hand
        let g = Multigraph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
            .unwrap();
        assert_eq!(g.degree(v(0)), Ok(3));
        assert_eq!(g.degree(v(2)), Ok(2));
        assert_eq!(Multigraph::new(3).degree(v(1)), Ok(0));
        assert_eq!(g.degree(v(9)), Err(Error::UnknownVertex(v(9))));
    }

    #[test]
    fn subdividing_a_double_edge_gives_a_triangle() {
        let g = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let s = g.subdivide_parallel_edges();
        assert_eq!(s.graph.vertex_count(), 3);
        assert_eq!(s.graph.edge_count(), 3);
        assert_eq!(s.graph.degrees(), &[2, 2, 2]);
        assert_eq!(s.paths[&EdgeId(0)].len(), 1);
        assert_eq!(s.paths[&EdgeId(1)].len(), 2);
    }

    #[test]
    fn subdividing_a_simple_graph_is_identity() {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let s = g.subdivide_parallel_edges();
        assert_eq!(s.graph, g);
        assert!(s.paths.iter().all(|(k, p)| p == &vec![*k]));
    }

    #[test]
    fn cut_validation() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let cut = EdgeCut::from_side(&c4, [v(0), v(1)]).unwrap();
        assert_eq!(cut.cut_edges(), &[EdgeId(1), EdgeId(3)]);
        assert_eq!(cut.side2(), &[v(2), v(3)]);
        assert!(cut.validate(&c4).is_ok());

        let bogus = EdgeCut {
            cut_edges: vec![EdgeId(1)],
            ..cut.clone()
        };
        assert!(matches!(bogus.validate(&c4), Err(Error::InvalidCut(_))));
        assert!(EdgeCut::from_side(&c4, c4.vertices()).is_err());
    }
}
