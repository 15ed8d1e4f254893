//! Edge-disjoint paths and minimum edge cuts by unit-capacity maximum flow.
//!
//! Each undirected edge is one unit of capacity usable in either direction:
//! its flow is `-1`, `0` or `+1`, so an integral flow never sends a unit
//! both ways along the same edge. Augmenting paths are found by breadth-first
//! search that scans incident edges in ascending id order, which makes flows,
//! path systems and cuts deterministic.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeCut, EdgeId, Multigraph, VertexId};

/// A maximum flow between two vertices with its min-cut certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowResult {
    pub value: usize,
    /// Pairwise edge-disjoint paths, each listed as edge ids from source to sink.
    pub paths: Vec<Vec<EdgeId>>,
    pub cut: EdgeCut,
}

/// Reusable flow scratch space over a fixed graph.
///
/// Building the network once and asking many `(s, t)` questions is much
/// cheaper than rebuilding per query, which matters for the exhaustive runs.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    n: usize,
    ends: Vec<(usize, usize)>,
    ids: Vec<EdgeId>,
    adj: Vec<Vec<(usize, usize)>>,
    flow: Vec<i8>,
    disabled: Vec<bool>,
    parent: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl FlowNetwork {
    pub fn new(g: &Multigraph) -> Self {
        let n = g.vertex_count();
        FlowNetwork {
            n,
            ends: g.edges().iter().map(|e| (e.u.0, e.v.0)).collect(),
            ids: g.edges().iter().map(|e| e.id).collect(),
            adj: g.adjacency(),
            flow: vec![0; g.edge_count()],
            disabled: vec![false; g.edge_count()],
            parent: vec![NONE; n],
            stamp: vec![0; n],
            epoch: 0,
            queue: Vec::with_capacity(n),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    /// Endpoints of the edge at position `index` (ascending id order).
    pub fn endpoints(&self, index: usize) -> (usize, usize) {
        self.ends[index]
    }

    /// Temporarily removes (or restores) the edge at position `index`.
    pub fn set_disabled(&mut self, index: usize, disabled: bool) {
        self.disabled[index] = disabled;
    }

    fn has_residual(&self, edge: usize, from: usize) -> bool {
        if self.disabled[edge] {
            return false;
        }
        let f = self.flow[edge];
        if self.ends[edge].0 == from {
            f < 1
        } else {
            f > -1
        }
    }

    fn push(&mut self, edge: usize, from: usize) {
        if self.ends[edge].0 == from {
            self.flow[edge] += 1;
        } else {
            self.flow[edge] -= 1;
        }
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.epoch
    }

    /// Breadth-first search in the residual graph. Returns whether `t` was
    /// reached; with `t = None` it only marks the reachable set.
    fn search(&mut self, s: usize, t: Option<usize>) -> bool {
        let epoch = self.next_epoch();
        self.queue.clear();
        self.queue.push(s);
        self.stamp[s] = epoch;
        self.parent[s] = NONE;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for i in 0..self.adj[x].len() {
                let (edge, y) = self.adj[x][i];
                if self.stamp[y] == epoch || !self.has_residual(edge, x) {
                    continue;
                }
                self.stamp[y] = epoch;
                self.parent[y] = edge;
                if Some(y) == t {
                    return true;
                }
                self.queue.push(y);
            }
        }
        false
    }

    /// Maximum flow from `s` to `t`, stopping early once it reaches `limit`.
    /// The flow is left in place for [`Self::paths`] and [`Self::source_side`].
    pub fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.flow.iter_mut().for_each(|f| *f = 0);
        let mut value = 0;
        while value < limit && self.search(s, Some(t)) {
            let mut y = t;
            while y != s {
                let edge = self.parent[y];
                let (a, b) = self.ends[edge];
                let x = if a == y { b } else { a };
                self.push(edge, x);
                y = x;
            }
            value += 1;
        }
        value
    }

    /// Vertices reachable from `s` in the residual graph of the current flow.
    pub fn source_side(&mut self, s: usize) -> Vec<bool> {
        self.search(s, None);
        let epoch = self.epoch;
        self.stamp.iter().map(|&st| st == epoch).collect()
    }

    /// Decomposes the current flow into edge-disjoint simple `s`-`t` paths,
    /// as edge positions. Flow on cycles is discarded.
    pub fn paths(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        // Remaining flow leaving each vertex, per edge.
        let mut left: Vec<bool> = self.flow.iter().map(|&f| f != 0).collect();
        let leaves = |edge: usize, x: usize| {
            let (a, _) = self.ends[edge];
            let f = self.flow[edge];
            (a == x && f > 0) || (a != x && f < 0)
        };
        let mut out = Vec::new();
        loop {
            let mut path: Vec<usize> = Vec::new();
            let mut at: Vec<usize> = vec![s];
            let mut x = s;
            while x != t {
                let Some(&(edge, y)) = self.adj[x]
                    .iter()
                    .find(|&&(edge, _)| left[edge] && leaves(edge, x))
                else {
                    return out;
                };
                left[edge] = false;
                if let Some(pos) = at.iter().position(|&w| w == y) {
                    // loop erasure
                    at.truncate(pos + 1);
                    path.truncate(pos);
                } else {
                    at.push(y);
                    path.push(edge);
                }
                x = y;
            }
            out.push(path);
        }
    }

    /// Global edge connectivity, capped at `limit`: the minimum over `v` of
    /// the flow between vertex 0 and `v`.
    pub fn global_connectivity(&mut self, limit: usize) -> usize {
        let mut best = limit;
        for v in 1..self.n {
            if best == 0 {
                break;
            }
            best = best.min(self.max_flow(0, v, best));
        }
        best
    }
}

fn check_pair(g: &Multigraph, u: VertexId, v: VertexId) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(())
}

fn check_k(g: &Multigraph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::BadK(k));
    }
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices(g.vertex_count()));
    }
    Ok(())
}

/// Maximum number of pairwise edge-disjoint `u`-`v` paths, with the paths
/// themselves and a minimum cut of the same size.
pub fn local_edge_connectivity(g: &Multigraph, u: VertexId, v: VertexId) -> Result<FlowResult> {
    check_pair(g, u, v)?;
    let mut net = FlowNetwork::new(g);
    let value = net.max_flow(u.0, v.0, usize::MAX);
    let paths = net
        .paths(u.0, v.0)
        .into_iter()
        .map(|p| p.into_iter().map(|i| net.ids[i]).collect())
        .collect();
    let side = net.source_side(u.0);
    let cut = EdgeCut::from_mask(g, &side)?;
    Ok(FlowResult { value, paths, cut })
}

/// Minimum `u`-`v` edge cut whose `u` side is everything reachable from `u`
/// in the final residual graph.
pub fn min_edge_cut(g: &Multigraph, u: VertexId, v: VertexId) -> Result<EdgeCut> {
    Ok(local_edge_connectivity(g, u, v)?.cut)
}

/// Size of a minimum edge cut of `g`; 0 when disconnected.
pub fn global_edge_connectivity(g: &Multigraph) -> Result<usize> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices(g.vertex_count()));
    }
    Ok(FlowNetwork::new(g).global_connectivity(usize::MAX))
}

pub fn is_k_edge_connected(g: &Multigraph, k: usize) -> Result<bool> {
    check_k(g, k)?;
    Ok(FlowNetwork::new(g).global_connectivity(k) >= k)
}

/// Whether every pair of distinct vertices has exactly `k` edge-disjoint paths.
pub fn is_exactly_k_edge_connected(g: &Multigraph, k: usize) -> Result<bool> {
    check_k(g, k)?;
    let mut net = FlowNetwork::new(g);
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if net.max_flow(u, v, k + 1) != k {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Edge connectivity of every pair, as a symmetric matrix with zero diagonal.
pub fn lambda_matrix(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut net = FlowNetwork::new(g);
    let mut m = vec![vec![0; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            let l = net.max_flow(u, v, usize::MAX);
            m[u][v] = l;
            m[v][u] = l;
        }
    }
    m
}

/// Maximum number of edge-disjoint paths starting in `a` and ending in `b`.
///
/// Computed by contracting each set to a single vertex and running a flow
/// between the two contracted vertices.
pub fn class_connectivity(g: &Multigraph, a: &[VertexId], b: &[VertexId]) -> Result<usize> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    const FREE: usize = usize::MAX;
    let mut class_of = vec![FREE; g.vertex_count()];
    for (set, class) in [(a, 0), (b, 1)] {
        for &x in set {
            g.check_vertex(x)?;
            match class_of[x.0] {
                FREE => class_of[x.0] = class,
                c if c == class => {}
                _ => return Err(Error::OverlappingSets),
            }
        }
    }
    let mut next = 2;
    for c in class_of.iter_mut().filter(|c| **c == FREE) {
        *c = next;
        next += 1;
    }
    let (h, _) = g.contract_with_origin(&class_of, next);
    Ok(FlowNetwork::new(&h).max_flow(0, 1, usize::MAX))
}
