//! Edge-minimality of `k`-edge-connected graphs.
//!
//! A `k`-edge-connected graph is edge-minimal exactly when no edge has more
//! than `k` edge-disjoint paths between its endpoints. [`is_edge_minimal`]
//! uses that adjacency test; [`cross_check_minimality`] deletes each edge in
//! turn and re-tests connectivity, independent of the adjacency test.

use serde::Serialize;

use crate::connectivity::FlowNetwork;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub k: usize,
    pub is_minimal: bool,
    /// Every edge with the edge connectivity of its endpoints.
    pub per_edge: Vec<(EdgeId, usize)>,
    /// Edges whose endpoints have more than `k` edge-disjoint paths.
    pub violating_edges: Vec<EdgeId>,
}

fn require_k_connected(net: &mut FlowNetwork, g: &Multigraph, k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::BadK(k));
    }
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices(g.vertex_count()));
    }
    if net.global_connectivity(k) < k {
        return Err(Error::NotKConnected(k));
    }
    Ok(())
}

pub fn is_edge_minimal(g: &Multigraph, k: usize) -> Result<MinimalityReport> {
    let mut net = FlowNetwork::new(g);
    require_k_connected(&mut net, g, k)?;
    let per_edge: Vec<(EdgeId, usize)> = g
        .edges()
        .iter()
        .map(|e| (e.id, net.max_flow(e.u.0, e.v.0, usize::MAX)))
        .collect();
    let violating_edges: Vec<EdgeId> = per_edge
        .iter()
        .filter(|&&(_, l)| l > k)
        .map(|&(e, _)| e)
        .collect();
    Ok(MinimalityReport {
        k,
        is_minimal: violating_edges.is_empty(),
        per_edge,
        violating_edges,
    })
}

/// Definitional minimality test: every single-edge deletion breaks
/// `k`-edge-connectivity.
pub fn cross_check_minimality(g: &Multigraph, k: usize) -> Result<bool> {
    let mut net = FlowNetwork::new(g);
    require_k_connected(&mut net, g, k)?;
    for i in 0..net.edge_count() {
        net.set_disabled(i, true);
        let still = net.global_connectivity(k) >= k;
        net.set_disabled(i, false);
        if still {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Deletes edges in ascending id order whenever the deletion keeps the graph
/// `k`-edge-connected. Returns the minimal graph and the deleted ids.
///
/// One ascending pass suffices: an edge that could not be deleted earlier
/// still cannot be deleted after further deletions.
pub fn reduce_to_edge_minimal(g: &Multigraph, k: usize) -> Result<(Multigraph, Vec<EdgeId>)> {
    let mut net = FlowNetwork::new(g);
    require_k_connected(&mut net, g, k)?;
    let mut removed = Vec::new();
    for (i, e) in g.edges().iter().enumerate() {
        net.set_disabled(i, true);
        if net.global_connectivity(k) >= k {
            removed.push(e.id);
        } else {
            net.set_disabled(i, false);
        }
    }
    let mut out = g.clone();
    for &e in &removed {
        out.pop_edge(e)?;
    }
    Ok((out, removed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::is_k_edge_connected;

    fn c4() -> Multigraph {
        Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    /// u=0 and v=1 joined directly and through 2 and 3.
    fn theta() -> Multigraph {
        Multigraph::from_edges(4, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)]).unwrap()
    }

    #[test]
    fn c4_is_minimal() {
        let r = is_edge_minimal(&c4(), 2).unwrap();
        assert!(r.is_minimal);
        assert_eq!(r.per_edge.len(), 4);
        assert!(r.per_edge.iter().all(|&(_, l)| l == 2));
        assert_eq!(cross_check_minimality(&c4(), 2), Ok(true));
    }

    #[test]
    fn theta_chord_violates() {
        let r = is_edge_minimal(&theta(), 2).unwrap();
        assert!(!r.is_minimal);
        assert_eq!(r.violating_edges, vec![EdgeId(0)]);
        assert_eq!(r.per_edge[0], (EdgeId(0), 3));
        assert_eq!(cross_check_minimality(&theta(), 2), Ok(false));
    }

    #[test]
    fn trees_are_minimal() {
        let t = Multigraph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert!(is_edge_minimal(&t, 1).unwrap().is_minimal);
        assert_eq!(cross_check_minimality(&t, 1), Ok(true));
    }

    #[test]
    fn k_parallel_edges_are_minimal() {
        for k in 1..5 {
            let g = Multigraph::from_edges(2, &vec![(0, 1); k]).unwrap();
            assert_eq!(cross_check_minimality(&g, k), Ok(true));
            assert!(is_edge_minimal(&g, k).unwrap().is_minimal);
        }
    }

    #[test]
    fn reduce_theta_to_c4() {
        let (g, removed) = reduce_to_edge_minimal(&theta(), 2).unwrap();
        assert_eq!(removed, vec![EdgeId(0)]);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degrees(), &[2, 2, 2, 2]);
        assert_eq!(is_k_edge_connected(&g, 2), Ok(true));
        assert!(is_edge_minimal(&g, 2).unwrap().is_minimal);
    }

    #[test]
    fn reduce_fixed_point_and_k4_plus_parallel() {
        let (g, removed) = reduce_to_edge_minimal(&c4(), 2).unwrap();
        assert_eq!(g, c4());
        assert!(removed.is_empty());

        let k4p = Multigraph::from_edges(
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 1)],
        )
        .unwrap();
        let (g, removed) = reduce_to_edge_minimal(&k4p, 3).unwrap();
        // the first copy of 0-1 goes, leaving a relabelled K4
        assert_eq!(removed.len(), 1);
        assert_eq!(g.degrees(), &[3, 3, 3, 3]);
        assert_eq!(cross_check_minimality(&g, 3), Ok(true));
    }

    #[test]
    fn precondition_is_checked() {
        let g = Multigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_edge_minimal(&g, 1), Err(Error::NotKConnected(1)));
        assert_eq!(cross_check_minimality(&c4(), 3), Err(Error::NotKConnected(3)));
        assert_eq!(
            reduce_to_edge_minimal(&c4(), 3).map(|_| ()),
            Err(Error::NotKConnected(3))
        );
    }
}
