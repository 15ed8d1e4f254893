//! Exhaustive and seeded graph generation, brute-force oracles, and batch
//! verification of the connectivity claims over enumerated graphs.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::connectivity::{
    global_edge_connectivity, is_exactly_k_edge_connected, lambda_matrix,
    local_edge_connectivity, FlowNetwork,
};
use crate::decomposition::{
    count_nontrivial_min_cuts, decompose, is_quasi_k_regular, scan_witnesses, theorem_witnesses,
    SplitTree,
};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexId};
use crate::mgraph::to_mgraph;
use crate::minimality::{cross_check_minimality, is_edge_minimal};
use crate::quotient::{check_quotient_properties, class_separation_violation, r_k_classes};

/// Edge budget of [`brute_force_lambda`] unless overridden.
pub const DEFAULT_BRUTE_FORCE_EDGES: usize = 8;

/// Parameters of an exhaustive enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumSpec {
    pub n_max: usize,
    pub m_max: usize,
    pub mult_max: usize,
    pub k_set: Vec<usize>,
    pub require_connected: bool,
}

impl EnumSpec {
    pub fn new(
        n_max: usize,
        m_max: usize,
        mult_max: usize,
        k_set: Vec<usize>,
        require_connected: bool,
    ) -> Result<Self> {
        let spec = EnumSpec {
            n_max,
            m_max,
            mult_max,
            k_set,
            require_connected,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Connected graphs, `n <= 6`, `m <= 9`, multiplicity `<= 3`, `k` in 1..=3.
    pub fn desk() -> Self {
        EnumSpec {
            n_max: 6,
            m_max: 9,
            mult_max: 3,
            k_set: vec![1, 2, 3],
            require_connected: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max < 2 {
            return Err(Error::InvalidSpec("n_max must be at least 2".into()));
        }
        if self.n_max > 16 {
            return Err(Error::InvalidSpec("n_max above 16 is not desk scale".into()));
        }
        if self.mult_max == 0 {
            return Err(Error::InvalidSpec("mult_max must be at least 1".into()));
        }
        if self.k_set.is_empty() {
            return Err(Error::InvalidSpec("k_set must be nonempty".into()));
        }
        if self.k_set.contains(&0) {
            return Err(Error::InvalidSpec("every k must be at least 1".into()));
        }
        Ok(())
    }
}

/// Every labelled multigraph of an [`EnumSpec`], in a fixed order: by vertex
/// count, then lexicographically by the multiplicity vector over the vertex
/// pairs `(0,1), (0,2), ..., (n-2,n-1)`.
#[derive(Clone, Debug)]
pub struct MultigraphEnumerator {
    n_max: usize,
    m_max: usize,
    mult_max: usize,
    connected: bool,
    n: usize,
    pairs: Vec<(usize, usize)>,
    mult: Vec<usize>,
    sum: usize,
    fresh: bool,
}

impl MultigraphEnumerator {
    fn start(&mut self, n: usize) {
        self.n = n;
        self.pairs = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        self.mult = vec![0; self.pairs.len()];
        self.sum = 0;
        self.fresh = true;
    }

    /// Steps to the lexicographic successor: bump the rightmost position
    /// that can grow within both bounds and clear everything after it.
    fn advance(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            return true;
        }
        let mut prefix = self.sum;
        for i in (0..self.mult.len()).rev() {
            prefix -= self.mult[i];
            if self.mult[i] < self.mult_max && prefix + self.mult[i] < self.m_max {
                self.mult[i] += 1;
                self.mult[i + 1..].iter_mut().for_each(|m| *m = 0);
                self.sum = prefix + self.mult[i];
                return true;
            }
        }
        false
    }

    fn current(&self) -> Multigraph {
        let mut g = Multigraph::new(self.n);
        for (&(u, v), &m) in self.pairs.iter().zip(&self.mult) {
            for _ in 0..m {
                g.push_edge(VertexId(u), VertexId(v)).expect("valid pair");
            }
        }
        g
    }

    fn current_connected(&self) -> bool {
        let mut reach = 1u32;
        loop {
            let before = reach;
            for (&(u, v), &m) in self.pairs.iter().zip(&self.mult) {
                if m > 0 && ((reach >> u) ^ (reach >> v)) & 1 == 1 {
                    reach |= (1 << u) | (1 << v);
                }
            }
            if reach == before {
                break;
            }
        }
        reach.count_ones() as usize == self.n
    }
}

impl Iterator for MultigraphEnumerator {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        while self.n <= self.n_max {
            while self.advance() {
                if !self.connected || self.current_connected() {
                    return Some(self.current());
                }
            }
            let next = self.n + 1;
            self.start(next);
        }
        None
    }
}

pub fn enumerate_multigraphs(spec: &EnumSpec) -> MultigraphEnumerator {
    let mut it = MultigraphEnumerator {
        n_max: spec.n_max,
        m_max: spec.m_max,
        mult_max: spec.mult_max,
        connected: spec.require_connected,
        n: 0,
        pairs: Vec::new(),
        mult: Vec::new(),
        sum: 0,
        fresh: true,
    };
    it.start(2);
    it
}

/// Every labelled tree on `n` vertices, decoded from Prüfer sequences.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Multigraph> {
    let len = n.saturating_sub(2);
    let total = if n < 2 { 0 } else { n.pow(len as u32) };
    (0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for s in seq.iter_mut().rev() {
            *s = code % n;
            code /= n;
        }
        prufer_tree(n, &seq)
    })
}

fn prufer_tree(n: usize, seq: &[usize]) -> Multigraph {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Multigraph::new(n);
    for &s in seq {
        let leaf = (0..n).find(|&x| degree[x] == 1).expect("a leaf remains");
        g.push_edge(VertexId(leaf), VertexId(s)).expect("distinct");
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&x| degree[x] == 1).collect();
    g.push_edge(VertexId(rest[0]), VertexId(rest[1]))
        .expect("two vertices remain");
    g
}

/// Maximum number of edge-disjoint `u`-`v` paths by exhaustive search over
/// packings of simple paths. Independent of the flow code.
pub fn brute_force_lambda(
    g: &Multigraph,
    u: VertexId,
    v: VertexId,
    max_edges: usize,
) -> Result<usize> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let limit = max_edges.min(63);
    if g.edge_count() > limit {
        return Err(Error::TooLarge {
            what: "edge count",
            size: g.edge_count(),
            limit,
        });
    }
    let mut paths = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    on_path[u.0] = true;
    simple_paths(g, u, v, 0, &mut on_path, &mut paths);
    let all = (1u64 << g.edge_count()) - 1;
    Ok(best_packing(all, &paths, &mut HashMap::new()))
}

fn simple_paths(
    g: &Multigraph,
    at: VertexId,
    target: VertexId,
    used: u64,
    on_path: &mut [bool],
    out: &mut Vec<u64>,
) {
    for (i, e) in g.edges().iter().enumerate() {
        if !e.touches(at) {
            continue;
        }
        let next = e.other(at);
        if on_path[next.0] {
            continue;
        }
        let used = used | 1 << i;
        if next == target {
            out.push(used);
            continue;
        }
        on_path[next.0] = true;
        simple_paths(g, next, target, used, on_path, out);
        on_path[next.0] = false;
    }
}

fn best_packing(avail: u64, paths: &[u64], memo: &mut HashMap<u64, usize>) -> usize {
    if let Some(&b) = memo.get(&avail) {
        return b;
    }
    let mut best = 0;
    for &p in paths {
        if p & avail == p {
            best = best.max(1 + best_packing(avail & !p, paths, memo));
        }
    }
    memo.insert(avail, best);
    best
}

/// A seeded `k`-edge-connected multigraph on `n` vertices.
///
/// For `n = 2` this is `k` parallel edges. Otherwise it is `ceil(k/2)`
/// copies of the Hamiltonian cycle `0, 1, ..., n-1` plus a random number
/// (at most `n`) of random extra edges.
pub fn random_k_edge_connected(n: usize, k: usize, seed: u64) -> Result<Multigraph> {
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    if k == 0 {
        return Err(Error::BadK(k));
    }
    let mut g = Multigraph::new(n);
    if n == 2 {
        for _ in 0..k {
            g.push_edge(VertexId(0), VertexId(1))?;
        }
        return Ok(g);
    }
    for _ in 0..k.div_ceil(2) {
        for i in 0..n {
            g.push_edge(VertexId(i), VertexId((i + 1) % n))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let extra = rng.random_range(0..=n);
    for _ in 0..extra {
        let a = rng.random_range(0..n);
        let b = (a + rng.random_range(1..n)) % n;
        g.push_edge(VertexId(a), VertexId(b))?;
    }
    debug_assert!(FlowNetwork::new(&g).global_connectivity(k) >= k);
    Ok(g)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimTally {
    pub id: String,
    pub passes: u64,
    pub failures: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph_mgraph: String,
    pub claim: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: EnumSpec,
    pub graphs_examined: u64,
    pub claims: Vec<ClaimTally>,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.claims.iter().all(|c| c.failures == 0)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimTally> {
        self.claims.iter().find(|c| c.id == id)
    }
}

/// Per-graph tallies; merging is associative and commutative on the counts.
#[derive(Debug, Default)]
struct Tally {
    graphs: u64,
    claims: BTreeMap<&'static str, (u64, u64)>,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn register(&mut self, claim: &'static str) {
        self.claims.entry(claim).or_default();
    }

    fn pass(&mut self, claim: &'static str) {
        self.claims.entry(claim).or_default().0 += 1;
    }

    fn fail(&mut self, g: &Multigraph, claim: &'static str, detail: String) {
        self.claims.entry(claim).or_default().1 += 1;
        self.counterexamples.push(Counterexample {
            graph_mgraph: to_mgraph(g),
            claim: claim.to_string(),
            detail,
        });
    }

    fn check(&mut self, g: &Multigraph, claim: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.pass(claim);
        } else {
            self.fail(g, claim, detail());
        }
    }

    fn merge(&mut self, other: Tally) {
        self.graphs += other.graphs;
        for (id, (p, f)) in other.claims {
            let e = self.claims.entry(id).or_default();
            e.0 += p;
            e.1 += f;
        }
        self.counterexamples.extend(other.counterexamples);
    }

    fn into_report(self, spec: &EnumSpec, started: Instant) -> VerificationReport {
        VerificationReport {
            spec: spec.clone(),
            graphs_examined: self.graphs,
            claims: self
                .claims
                .into_iter()
                .map(|(id, (passes, failures))| ClaimTally {
                    id: id.to_string(),
                    passes,
                    failures,
                })
                .collect(),
            counterexamples: self.counterexamples,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}

const CHUNK: usize = 4096;

/// Runs `check` over every graph, `jobs` graphs at a time (all cores when
/// `None`), merging results in enumeration order.
fn run_batch<I, F>(graphs: I, jobs: Option<usize>, check: F) -> Tally
where
    I: Iterator<Item = Multigraph>,
    F: Fn(&Multigraph, &mut Tally) + Sync,
{
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().expect("thread pool");
    let mut total = Tally::default();
    let mut graphs = graphs.peekable();
    while graphs.peek().is_some() {
        let chunk: Vec<Multigraph> = graphs.by_ref().take(CHUNK).collect();
        let parts: Vec<Tally> = pool.install(|| {
            chunk
                .par_iter()
                .map(|g| {
                    let mut t = Tally {
                        graphs: 1,
                        ..Tally::default()
                    };
                    check(g, &mut t);
                    t
                })
                .collect()
        });
        for p in parts {
            total.merge(p);
        }
    }
    total
}

pub mod claims {
    pub const TWO_DEGREE_K: &str = "two-degree-k";
    pub const CONSTRUCTIVE_SUBSET: &str = "constructive-subset";
    pub const K1_TREES: &str = "k1-minimal-is-tree";
    pub const TREE_MINIMAL: &str = "tree-edge-minimal";
    pub const TREE_LEAVES: &str = "tree-witnesses-are-leaves";
    pub const FLOW_ORACLE: &str = "flow-vs-brute-force";
    pub const FLOW_CERTIFICATE: &str = "flow-certificate";
    pub const SUBDIVISION: &str = "subdivision-preserves-lambda";
    pub const MONOTONE: &str = "edge-removal-monotone";
    pub const TRANSITIVITY: &str = "rk-transitivity";
    pub const PARTITION: &str = "rk-partition-wellformed";
    pub const CLASS_SEPARATION: &str = "class-separation";
    pub const CRITERION_EQUIVALENCE: &str = "criterion-equivalence";
    pub const QUOTIENT_EXACT: &str = "quotient-exact";
    pub const DEGREE_DOMINANCE: &str = "degree-dominance";
    pub const NO_INTRA_CLASS_EDGE: &str = "no-intra-class-edge";
    pub const SPLIT_EXACT: &str = "split-exact";
    pub const LEAF_QUASI_REGULAR: &str = "leaf-quasi-regular";
    pub const DESCENT: &str = "cut-count-descent";
    pub const ERRORS: &str = "no-unexpected-errors";
}

/// Every edge-minimal `k`-edge-connected graph of the spec has at least two
/// vertices of degree `k`, and the quotient-based witnesses are among them.
pub fn verify_theorem(spec: &EnumSpec, jobs: Option<usize>) -> VerificationReport {
    let started = Instant::now();
    let mut tally = run_batch(enumerate_multigraphs(spec), jobs, |g, t| {
        for c in [claims::TWO_DEGREE_K, claims::CONSTRUCTIVE_SUBSET] {
            t.register(c);
        }
        if spec.k_set.contains(&1) {
            t.register(claims::K1_TREES);
        }
        let lambda = FlowNetwork::new(g).global_connectivity(usize::MAX);
        for &k in &spec.k_set {
            if lambda < k {
                continue;
            }
            let minimal = match is_edge_minimal(g, k) {
                Ok(r) => r.is_minimal,
                Err(e) => {
                    t.fail(g, claims::ERRORS, format!("k={k}: {e}"));
                    continue;
                }
            };
            if !minimal {
                continue;
            }
            theorem_checks(g, k, t);
        }
    });
    tally.register(claims::ERRORS);
    tally.into_report(spec, started)
}

fn theorem_checks(g: &Multigraph, k: usize, t: &mut Tally) {
    let scan = scan_witnesses(g, k).witnesses;
    t.check(g, claims::TWO_DEGREE_K, scan.len() >= 2, || {
        format!("k={k}: degree-{k} vertices {scan:?}")
    });
    match theorem_witnesses(g, k) {
        Ok(w) => {
            let ok = w.witnesses.len() >= 2 && w.witnesses.iter().all(|x| scan.contains(x));
            t.check(g, claims::CONSTRUCTIVE_SUBSET, ok, || {
                format!("k={k}: constructive {:?} vs scan {scan:?}", w.witnesses)
            });
        }
        Err(e) => t.fail(g, claims::CONSTRUCTIVE_SUBSET, format!("k={k}: {e}")),
    }
    if k == 1 {
        let leaves: Vec<VertexId> = g.vertices().filter(|v| g.degrees()[v.0] == 1).collect();
        let ok = g.edge_count() + 1 == g.vertex_count() && scan == leaves;
        t.check(g, claims::K1_TREES, ok, || {
            format!("minimal 1-edge-connected graph with {} edges", g.edge_count())
        });
    }
}

/// The `k = 1` case on every labelled tree with up to `n_max` vertices.
pub fn verify_trees(n_max: usize, jobs: Option<usize>) -> VerificationReport {
    let started = Instant::now();
    let spec = EnumSpec {
        n_max,
        m_max: n_max.saturating_sub(1),
        mult_max: 1,
        k_set: vec![1],
        require_connected: true,
    };
    let trees = (2..=n_max).flat_map(labeled_trees);
    let tally = run_batch(trees, jobs, |g, t| {
        let minimal = is_edge_minimal(g, 1).map(|r| r.is_minimal);
        let cross = cross_check_minimality(g, 1);
        t.check(g, claims::TREE_MINIMAL, minimal == Ok(true) && cross == Ok(true), || {
            format!("criterion {minimal:?}, definition {cross:?}")
        });
        let leaves: Vec<VertexId> = g.vertices().filter(|v| g.degrees()[v.0] == 1).collect();
        let scan = scan_witnesses(g, 1).witnesses;
        t.check(g, claims::TREE_LEAVES, scan == leaves && scan.len() >= 2, || {
            format!("scan {scan:?} vs leaves {leaves:?}")
        });
        match theorem_witnesses(g, 1) {
            Ok(w) => {
                let ok = w.witnesses.len() >= 2 && w.witnesses.iter().all(|x| leaves.contains(x));
                t.check(g, claims::CONSTRUCTIVE_SUBSET, ok, || {
                    format!("constructive {:?} vs leaves {leaves:?}", w.witnesses)
                });
            }
            Err(e) => t.fail(g, claims::CONSTRUCTIVE_SUBSET, e.to_string()),
        }
    });
    tally.into_report(&spec, started)
}

/// Runs every structural check of the library over the spec's graphs.
pub fn verify_propositions(spec: &EnumSpec, jobs: Option<usize>) -> VerificationReport {
    let started = Instant::now();
    let mut tally = run_batch(enumerate_multigraphs(spec), jobs, |g, t| {
        if let Err(e) = proposition_checks(spec, g, t) {
            t.fail(g, claims::ERRORS, e.to_string());
        }
    });
    tally.register(claims::ERRORS);
    tally.into_report(spec, started)
}

fn proposition_checks(spec: &EnumSpec, g: &Multigraph, t: &mut Tally) -> Result<()> {
    let n = g.vertex_count();
    let lambda = lambda_matrix(g);

    if g.edge_count() <= DEFAULT_BRUTE_FORCE_EDGES {
        flow_checks(g, &lambda, t)?;
    }

    let mut transitive = true;
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                if u != v && v != w && u != w && lambda[u][v].min(lambda[v][w]) > lambda[u][w] {
                    transitive = false;
                }
            }
        }
    }
    t.check(g, claims::TRANSITIVITY, transitive, || "min(l(u,v), l(v,w)) > l(u,w)".into());

    for &k in &spec.k_set {
        let p = r_k_classes(g, k)?;
        let ok = (0..n).all(|u| {
            (0..n).all(|v| u == v || (p.class_of()[u] == p.class_of()[v]) == (lambda[u][v] >= k))
        });
        t.check(g, claims::PARTITION, ok, || format!("k={k}: classes {:?}", p.classes()));

        let sep = class_separation_violation(g, k)?;
        t.check(g, claims::CLASS_SEPARATION, sep.is_none(), || {
            format!("threshold {k}: classes/paths {sep:?}")
        });
    }

    let global = global_edge_connectivity(g)?;
    for &k in &spec.k_set {
        if global < k {
            continue;
        }
        let report = is_edge_minimal(g, k)?;
        let cross = cross_check_minimality(g, k)?;
        t.check(g, claims::CRITERION_EQUIVALENCE, report.is_minimal == cross, || {
            format!("k={k}: criterion says {}, definition says {cross}", report.is_minimal)
        });
        if report.is_minimal {
            let q = check_quotient_properties(g, k)?;
            let details = || format!("k={k}: {:?}", q.details);
            t.check(g, claims::QUOTIENT_EXACT, q.nontrivial_exact, details);
            t.check(g, claims::DEGREE_DOMINANCE, q.degree_dominance, details);
            t.check(g, claims::NO_INTRA_CLASS_EDGE, q.no_intra_class_edges, details);
        }
        if is_exactly_k_edge_connected(g, k)? {
            split_checks(g, k, t)?;
        }
    }
    Ok(())
}

fn flow_checks(g: &Multigraph, lambda: &[Vec<usize>], t: &mut Tally) -> Result<()> {
    let n = g.vertex_count();
    let sub = g.subdivide_parallel_edges();
    let sub_lambda = lambda_matrix(&sub.graph);
    let mut net = FlowNetwork::new(g);
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (VertexId(u), VertexId(v));
            let brute = brute_force_lambda(g, a, b, DEFAULT_BRUTE_FORCE_EDGES)?;
            t.check(g, claims::FLOW_ORACLE, brute == lambda[u][v], || {
                format!("pair ({u},{v}): flow {} vs brute force {brute}", lambda[u][v])
            });

            let r = local_edge_connectivity(g, a, b)?;
            let back = local_edge_connectivity(g, b, a)?.value;
            t.check(g, claims::FLOW_CERTIFICATE, certificate_ok(g, a, b, &r) && back == r.value, || {
                format!("pair ({u},{v}): {r:?}")
            });

            t.check(g, claims::SUBDIVISION, sub_lambda[u][v] == lambda[u][v], || {
                format!("pair ({u},{v}): {} after subdivision", sub_lambda[u][v])
            });

            let mut monotone = true;
            for i in 0..net.edge_count() {
                net.set_disabled(i, true);
                let l = net.max_flow(u, v, usize::MAX);
                net.set_disabled(i, false);
                monotone &= l <= lambda[u][v] && l + 1 >= lambda[u][v];
            }
            t.check(g, claims::MONOTONE, monotone, || format!("pair ({u},{v})"));
        }
    }
    Ok(())
}

fn certificate_ok(
    g: &Multigraph,
    u: VertexId,
    v: VertexId,
    r: &crate::connectivity::FlowResult,
) -> bool {
    if r.paths.len() != r.value || r.cut.value() != r.value || r.cut.validate(g).is_err() {
        return false;
    }
    if !r.cut.side1().contains(&u) || !r.cut.side2().contains(&v) {
        return false;
    }
    let mut used = std::collections::HashSet::new();
    r.paths.iter().all(|p| {
        let mut at = u;
        for e in p {
            let Some(edge) = g.edge(*e) else { return false };
            if !edge.touches(at) || !used.insert(*e) {
                return false;
            }
            at = edge.other(at);
        }
        at == v
    })
}

fn split_checks(g: &Multigraph, k: usize, t: &mut Tally) -> Result<()> {
    let tree = match decompose(g, k) {
        Ok(tree) => tree,
        Err(Error::ClaimViolated { claim, detail }) => {
            let id = match claim {
                "split-exact" => claims::SPLIT_EXACT,
                _ => claims::LEAF_QUASI_REGULAR,
            };
            t.fail(g, id, format!("k={k}: {detail}"));
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    walk(&tree, k, g, t)
}

fn walk(tree: &SplitTree, k: usize, root: &Multigraph, t: &mut Tally) -> Result<()> {
    match tree {
        SplitTree::Leaf { graph } => {
            t.check(root, claims::LEAF_QUASI_REGULAR, is_quasi_k_regular(graph, k), || {
                format!("k={k}: leaf degrees {:?}", graph.degrees())
            });
        }
        SplitTree::Split {
            graph, left, right, ..
        } => {
            let parent_cuts = count_nontrivial_min_cuts(graph)?;
            for (half, sub) in [&**left, &**right] {
                let exact = is_exactly_k_edge_connected(&half.graph, k)?;
                t.check(root, claims::SPLIT_EXACT, exact, || {
                    format!("k={k}: part\n{}", to_mgraph(&half.graph))
                });
                let child_cuts = count_nontrivial_min_cuts(&half.graph)?;
                t.check(root, claims::DESCENT, child_cuts < parent_cuts, || {
                    format!("k={k}: child has {child_cuts} non-trivial min cuts, parent {parent_cuts}")
                });
                walk(sub, k, root, t)?;
            }
        }
    }
    Ok(())
}
