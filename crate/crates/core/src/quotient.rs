//! Edge-connectivity classes and the quotient graph.
//!
//! Two vertices are related at threshold `k` when they coincide or are
//! joined by at least `k` edge-disjoint paths. The relation is transitive,
//! so its classes can be grown with a disjoint-set forest, skipping pairs
//! that are already merged. The quotient of a `k`-edge-connected graph
//! contracts the classes at threshold `k + 1`.

use serde::Serialize;

use crate::connectivity::{class_connectivity, is_exactly_k_edge_connected, FlowNetwork};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, VertexId};
use crate::mgraph::to_mgraph;
use crate::minimality::is_edge_minimal;

/// Disjoint vertex classes covering a graph, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPartition {
    classes: Vec<Vec<VertexId>>,
    #[serde(skip)]
    class_of: Vec<usize>,
    threshold: usize,
}

impl ClassPartition {
    /// Normalizes and validates a partition of `0..n`.
    pub fn new(n: usize, mut classes: Vec<Vec<VertexId>>, threshold: usize) -> Result<Self> {
        let mut class_of = vec![usize::MAX; n];
        for class in &mut classes {
            if class.is_empty() {
                return Err(Error::PartitionNotCover);
            }
            class.sort();
        }
        classes.sort_by_key(|c| c[0]);
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                match class_of.get_mut(v.0) {
                    Some(slot) if *slot == usize::MAX => *slot = i,
                    _ => return Err(Error::PartitionNotCover),
                }
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::PartitionNotCover);
        }
        Ok(ClassPartition {
            classes,
            class_of,
            threshold,
        })
    }

    fn from_class_map(raw: &[usize], threshold: usize) -> Self {
        let mut relabel = vec![usize::MAX; raw.len()];
        let mut classes: Vec<Vec<VertexId>> = Vec::new();
        let mut class_of = Vec::with_capacity(raw.len());
        for (v, &r) in raw.iter().enumerate() {
            if relabel[r] == usize::MAX {
                relabel[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[relabel[r]].push(VertexId(v));
            class_of.push(relabel[r]);
        }
        ClassPartition {
            classes,
            class_of,
            threshold,
        }
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    /// Class index of each vertex.
    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn threshold(&self) -> usize {
        self.threshold
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        // smaller root wins so roots stay class minima
        if a < b {
            self.0[b] = a;
        } else {
            self.0[a] = b;
        }
    }
}

/// Classes of vertices pairwise joined by at least `k` edge-disjoint paths.
pub fn r_k_classes(g: &Multigraph, k: usize) -> Result<ClassPartition> {
    if k == 0 {
        return Err(Error::BadK(k));
    }
    let n = g.vertex_count();
    let mut net = FlowNetwork::new(g);
    let mut dsu = Dsu::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if dsu.find(u) != dsu.find(v) && net.max_flow(u, v, k) >= k {
                dsu.union(u, v);
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|v| dsu.find(v)).collect();
    Ok(ClassPartition::from_class_map(&roots, k))
}

/// The quotient of a `k`-edge-connected graph by its classes at threshold `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub graph: Multigraph,
    pub partition: ClassPartition,
    /// Original edge id for each quotient edge, indexed by quotient edge id.
    pub edge_origin: Vec<EdgeId>,
}

impl Serialize for QuotientGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuotientGraph", 5)?;
        st.serialize_field("threshold", &self.partition.threshold())?;
        st.serialize_field("classes", self.partition.classes())?;
        st.serialize_field("degrees", self.graph.degrees())?;
        st.serialize_field("edge_origin", &self.edge_origin)?;
        st.serialize_field("mgraph", &to_mgraph(&self.graph))?;
        st.end()
    }
}

pub fn quotient_graph(g: &Multigraph, k: usize) -> Result<QuotientGraph> {
    if k == 0 {
        return Err(Error::BadK(k));
    }
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices(g.vertex_count()));
    }
    if FlowNetwork::new(g).global_connectivity(k) < k {
        return Err(Error::NotKConnected(k));
    }
    let partition = r_k_classes(g, k + 1)?;
    let (graph, edge_origin) = g.contract_with_origin(partition.class_of(), partition.len());
    Ok(QuotientGraph {
        graph,
        partition,
        edge_origin,
    })
}

/// Outcome of the structural checks on a quotient graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    /// The quotient has at least two vertices and is exactly `k`-edge-connected.
    pub nontrivial_exact: bool,
    /// Each class has quotient degree at least the degree of each member.
    pub degree_dominance: bool,
    /// No edge joins two members of the same class.
    pub no_intra_class_edges: bool,
    /// Distinct classes at threshold `k` have at most `k - 1` edge-disjoint
    /// paths between them.
    pub class_separation: bool,
    pub details: Vec<String>,
}

impl QuotientCheck {
    pub fn all_pass(&self) -> bool {
        self.nontrivial_exact
            && self.degree_dominance
            && self.no_intra_class_edges
            && self.class_separation
    }
}

/// Checks every pair of distinct classes at threshold `k`; returns the first
/// offending pair and its path count.
pub fn class_separation_violation(
    g: &Multigraph,
    k: usize,
) -> Result<Option<(usize, usize, usize)>> {
    let p = r_k_classes(g, k)?;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            let l = class_connectivity(g, &p.classes()[a], &p.classes()[b])?;
            if l + 1 > k {
                return Ok(Some((a, b, l)));
            }
        }
    }
    Ok(None)
}

/// Runs the quotient checks on an edge-minimal `k`-edge-connected graph.
pub fn check_quotient_properties(g: &Multigraph, k: usize) -> Result<QuotientCheck> {
    if !is_edge_minimal(g, k)?.is_minimal {
        return Err(Error::NotEdgeMinimal(k));
    }
    let q = quotient_graph(g, k)?;
    let mut report = QuotientCheck {
        nontrivial_exact: q.graph.vertex_count() >= 2
            && is_exactly_k_edge_connected(&q.graph, k)?,
        ..QuotientCheck::default()
    };
    if !report.nontrivial_exact {
        report.details.push(format!(
            "quotient on {} vertices is not exactly {k}-edge-connected",
            q.graph.vertex_count()
        ));
    }

    report.degree_dominance = true;
    for (c, members) in q.partition.classes().iter().enumerate() {
        let dq = q.graph.degrees()[c];
        if let Some(&u) = members.iter().find(|u| g.degrees()[u.0] > dq) {
            report.degree_dominance = false;
            report.details.push(format!(
                "class {c} has quotient degree {dq} below deg({u}) = {}",
                g.degrees()[u.0]
            ));
        }
    }

    let class_of = q.partition.class_of();
    let inner: Vec<EdgeId> = g
        .edges()
        .iter()
        .filter(|e| class_of[e.u.0] == class_of[e.v.0])
        .map(|e| e.id)
        .collect();
    report.no_intra_class_edges = inner.is_empty();
    if !inner.is_empty() {
        report
            .details
            .push(format!("edges inside a class: {inner:?}"));
    }

    let sep = class_separation_violation(g, k)?;
    report.class_separation = sep.is_none();
    if let Some((a, b, l)) = sep {
        report.details.push(format!(
            "classes {a} and {b} at threshold {k} have {l} edge-disjoint paths"
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> VertexId {
        VertexId(i)
    }

    fn c4() -> Multigraph {
        Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    // a=0, b=1, w1..w3 = 2..4
    fn k23() -> Multigraph {
        Multigraph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn ids(p: &ClassPartition) -> Vec<Vec<usize>> {
        p.classes()
            .iter()
            .map(|c| c.iter().map(|v| v.0).collect())
            .collect()
    }

    #[test]
    fn classes_of_small_graphs() {
        assert_eq!(ids(&r_k_classes(&c4(), 3).unwrap()), vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(
            ids(&r_k_classes(&k23(), 3).unwrap()),
            vec![vec![0, 1], vec![2], vec![3], vec![4]]
        );
        let forest = Multigraph::from_edges(5, &[(0, 3), (1, 2), (3, 4)]).unwrap();
        assert_eq!(ids(&r_k_classes(&forest, 1).unwrap()), vec![vec![0, 3, 4], vec![1, 2]]);
        assert_eq!(r_k_classes(&c4(), 0), Err(Error::BadK(0)));
    }

    #[test]
    fn contraction_examples() {
        let g = k23();
        let singles = ClassPartition::new(5, (0..5).map(|i| vec![v(i)]).collect(), 1).unwrap();
        assert_eq!(g.contract_vertex_sets(&singles).unwrap(), g);

        let p = ClassPartition::new(5, vec![vec![v(1), v(0)], vec![v(2)], vec![v(3)], vec![v(4)]], 3)
            .unwrap();
        let h = g.contract_vertex_sets(&p).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.degrees(), &[6, 2, 2, 2]);
        for w in 1..4 {
            assert_eq!(h.multiplicity(v(0), v(w)), 2);
        }

        let all = ClassPartition::new(5, vec![(0..5).map(v).collect()], 1).unwrap();
        let h = g.contract_vertex_sets(&all).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (1, 0));

        let short = ClassPartition::new(4, vec![(0..4).map(v).collect()], 1).unwrap();
        assert_eq!(g.contract_vertex_sets(&short), Err(Error::PartitionNotCover));
    }

    #[test]
    fn partition_validation() {
        assert_eq!(
            ClassPartition::new(3, vec![vec![v(0)], vec![v(1)]], 1),
            Err(Error::PartitionNotCover)
        );
        assert_eq!(
            ClassPartition::new(2, vec![vec![v(0), v(1)], vec![v(1)]], 1),
            Err(Error::PartitionNotCover)
        );
        assert_eq!(
            ClassPartition::new(2, vec![vec![v(0), v(2)], vec![v(1)]], 1),
            Err(Error::PartitionNotCover)
        );
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_graph(&c4(), 2).unwrap();
        assert_eq!(q.graph, c4());

        let q = quotient_graph(&k23(), 2).unwrap();
        assert_eq!(q.graph.degrees(), &[6, 2, 2, 2]);
        assert_eq!(q.edge_origin.len(), 6);

        for k in 1..4 {
            let g = Multigraph::from_edges(2, &vec![(0, 1); k]).unwrap();
            let q = quotient_graph(&g, k).unwrap();
            assert_eq!(q.graph, g);
        }

        let split = Multigraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(quotient_graph(&split, 1), Err(Error::NotKConnected(1)));
    }

    #[test]
    fn quotient_checks_pass_on_examples() {
        let r = check_quotient_properties(&k23(), 2).unwrap();
        assert!(r.all_pass(), "{r:?}");
        let r = check_quotient_properties(&c4(), 2).unwrap();
        assert!(r.all_pass(), "{r:?}");
        let p3 = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(quotient_graph(&p3, 1).unwrap().graph, p3);
        assert!(check_quotient_properties(&p3, 1).unwrap().all_pass());

        let theta = Multigraph::from_edges(4, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)]).unwrap();
        assert_eq!(check_quotient_properties(&theta, 2), Err(Error::NotEdgeMinimal(2)));
    }
}
