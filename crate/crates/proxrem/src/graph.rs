//! Graph representation and the BFS-based metric machinery.
//!
//! Distances come from plain breadth-first search; the averaged invariants
//! (proximity, remoteness) are exact rationals. Connectivity is not a
//! structural invariant: operations that need it check it and return
//! `GraphError::Disconnected` otherwise.

use num_rational::Ratio;
use std::collections::VecDeque;
use thiserror::Error;

use crate::bounds::Rational;
use crate::seq::DistSeq;

/// Tree-path depth from which the "related" predicate starts looking.
pub const RELATED_MIN_DEPTH: usize = 9;
/// Graph distance up to which two deep path vertices count as close.
pub const RELATED_MAX_DIST: u32 = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (order {1})")]
    InvalidVertex(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("operation requires order >= 2, graph has order {0}")]
    TooSmall(usize),
}

/// Simple undirected graph on vertices 0..n with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// BFS distances from one source; `None` marks unreachable vertices.
#[derive(Debug, Clone)]
pub struct DistanceVector {
    pub source: usize,
    pub dist: Vec<Option<u32>>,
}

impl DistanceVector {
    pub fn all_reachable(&self) -> bool {
        self.dist.iter().all(|d| d.is_some())
    }

    pub fn max_finite(&self) -> u32 {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// BFS tree rooted at `root`; tree distances from the root equal graph
/// distances.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
}

impl SpanningTree {
    /// Vertices on the tree path root..v, in order; index equals depth.
    pub fn path_from_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    pub fn depth(&self, v: usize) -> usize {
        self.path_from_root(v).len() - 1
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Insert an edge; duplicate insertions are ignored and return false.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        if u >= self.n {
            return Err(GraphError::InvalidVertex(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::InvalidVertex(v, self.n));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(iu) => {
                self.adj[u].insert(iu, v);
                let iv = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(iv, u);
                self.m += 1;
                Ok(true)
            }
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// The graph with vertex `v` deleted; vertices above `v` shift down.
    pub fn without_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::InvalidVertex(v, self.n));
        }
        let map = |u: usize| if u > v { u - 1 } else { u };
        let mut g = Graph::new(self.n - 1);
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(map(a), map(b))?;
            }
        }
        Ok(g)
    }

    /// The graph with the listed edges removed (absent edges are ignored).
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let gone = |a: usize, b: usize| {
            edges
                .iter()
                .any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
        };
        let mut g = Graph::new(self.n);
        for (a, b) in self.edges() {
            if !gone(a, b) {
                g.add_edge(a, b).expect("edges were valid");
            }
        }
        g
    }

    pub fn bfs(&self, source: usize) -> Result<DistanceVector, GraphError> {
        if source >= self.n {
            return Err(GraphError::InvalidVertex(source, self.n));
        }
        Ok(DistanceVector {
            source,
            dist: self.bfs_limited(source, u32::MAX),
        })
    }

    fn bfs_limited(&self, source: usize, max_depth: u32) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            if du == max_depth {
                continue;
            }
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs(0).map(|d| d.all_reachable()).unwrap_or(false)
    }

    fn connected_bfs(&self, v: usize) -> Result<DistanceVector, GraphError> {
        let d = self.bfs(v)?;
        if d.all_reachable() {
            Ok(d)
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Distance degree of v: entry i counts the vertices at distance
    /// exactly i. Sums to the order, starts with 1, ends at ecc(v).
    pub fn distance_degree(&self, v: usize) -> Result<DistSeq, GraphError> {
        let d = self.connected_bfs(v)?;
        let mut counts = vec![0u64; d.max_finite() as usize + 1];
        for dv in d.dist.iter().flatten() {
            counts[*dv as usize] += 1;
        }
        Ok(DistSeq::new(counts).expect("distance degree is nonempty"))
    }

    pub fn eccentricity(&self, v: usize) -> Result<u32, GraphError> {
        Ok(self.connected_bfs(v)?.max_finite())
    }

    pub fn total_distance(&self, v: usize) -> Result<u64, GraphError> {
        let d = self.connected_bfs(v)?;
        Ok(d.dist.iter().flatten().map(|&x| x as u64).sum())
    }

    /// Average distance from v to the other vertices, sigma(v)/(n-1).
    pub fn avg_distance(&self, v: usize) -> Result<Rational, GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooSmall(self.n));
        }
        let total = self.total_distance(v)?;
        Ok(Ratio::new(total as i64, self.n as i64 - 1))
    }

    /// Minimum of the average distances.
    pub fn proximity(&self) -> Result<Rational, GraphError> {
        self.avg_extremum(false)
    }

    /// Maximum of the average distances.
    pub fn remoteness(&self) -> Result<Rational, GraphError> {
        self.avg_extremum(true)
    }

    fn avg_extremum(&self, max: bool) -> Result<Rational, GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooSmall(self.n));
        }
        let mut best: Option<Rational> = None;
        for v in 0..self.n {
            let a = self.avg_distance(v)?;
            best = Some(match best {
                None => a,
                Some(b) if max => b.max(a),
                Some(b) => b.min(a),
            });
        }
        Ok(best.expect("n >= 2"))
    }

    pub fn radius(&self) -> Result<u32, GraphError> {
        self.ecc_extremum(false)
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        self.ecc_extremum(true)
    }

    fn ecc_extremum(&self, max: bool) -> Result<u32, GraphError> {
        if self.n == 0 {
            return Err(GraphError::TooSmall(0));
        }
        let eccs = (0..self.n)
            .map(|v| self.eccentricity(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(if max {
            *eccs.iter().max().unwrap()
        } else {
            *eccs.iter().min().unwrap()
        })
    }

    /// Vertices of minimum eccentricity.
    pub fn center_vertices(&self) -> Result<Vec<usize>, GraphError> {
        let r = self.radius()?;
        (0..self.n)
            .filter_map(|v| match self.eccentricity(v) {
                Ok(e) if e == r => Some(Ok(v)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            })
            .collect()
    }

    /// True iff no edge's endpoints share a neighbor.
    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v && sorted_intersect(&self.adj[u], &self.adj[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff every vertex pair has at most one common neighbor.
    pub fn is_c4_free(&self) -> bool {
        let mut count = vec![0u32; self.n];
        for u in 0..self.n {
            for &v in &self.adj[u] {
                for &w in &self.adj[v] {
                    if w != u {
                        count[w] += 1;
                        if count[w] > 1 {
                            return false;
                        }
                    }
                }
            }
            for &v in &self.adj[u] {
                for &w in &self.adj[v] {
                    if w != u {
                        count[w] = 0;
                    }
                }
            }
        }
        true
    }

    /// Number of vertices within distance 2 of v, v included.
    pub fn ball2_size(&self, v: usize) -> Result<usize, GraphError> {
        if v >= self.n {
            return Err(GraphError::InvalidVertex(v, self.n));
        }
        Ok(self.bfs_limited(v, 2).iter().flatten().count())
    }

    /// BFS spanning tree; tree distances from the root equal graph
    /// distances.
    pub fn bfs_tree(&self, root: usize) -> Result<SpanningTree, GraphError> {
        let d = self.connected_bfs(root)?;
        let mut parent = vec![None; self.n];
        let mut queue = VecDeque::from([root]);
        let mut visited = vec![false; self.n];
        visited[root] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
        debug_assert!(d.all_reachable());
        Ok(SpanningTree { root, parent })
    }

    /// Two vertices are related (with respect to a distance-preserving tree
    /// rooted at a center vertex) when their tree paths from the root both
    /// contain a vertex at depth >= 9 and some two such vertices are within
    /// graph distance 4 of each other.
    pub fn related(&self, tree: &SpanningTree, v: usize, w: usize) -> bool {
        let deep = |x: usize| -> Vec<usize> {
            tree.path_from_root(x)
                .into_iter()
                .skip(RELATED_MIN_DEPTH)
                .collect()
        };
        let deep_v = deep(v);
        if deep_v.is_empty() {
            return false;
        }
        let deep_w = deep(w);
        for &x in &deep_v {
            let near = self.bfs_limited(x, RELATED_MAX_DIST);
            if deep_w.iter().any(|&y| near[y].is_some()) {
                return true;
            }
        }
        false
    }

    /// Search for a vertex far from the root that is not related to a
    /// deepest vertex. `v0` should be a center vertex; v_r is the lowest-id
    /// vertex at distance ecc(v0), and candidates are scanned in id order
    /// over distances >= ecc(v0)-9. `None` means every candidate is related
    /// to v_r, which falsifies the structural lemma this realizes - callers
    /// must treat that as a loud failure, not an absence.
    pub fn unrelated_witness(&self, v0: usize) -> Result<Option<usize>, GraphError> {
        let d = self.connected_bfs(v0)?;
        let r = d.max_finite();
        let tree = self.bfs_tree(v0)?;
        let v_r = (0..self.n)
            .find(|&u| d.dist[u] == Some(r))
            .expect("some vertex attains the eccentricity");
        let cutoff = r.saturating_sub(9);
        for u in 0..self.n {
            if d.dist[u].expect("connected") >= cutoff && !self.related(&tree, u, v_r) {
                return Ok(Some(u));
            }
        }
        Ok(None)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs n >= 3");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("valid complete graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v))))
            .expect("valid biclique")
    }
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(a: i64, b: i64) -> Rational {
        Ratio::new(a, b)
    }

    #[test]
    fn path_distances_from_endpoint() {
        let g = Graph::path(5);
        let d = g.bfs(0).unwrap();
        let got: Vec<u32> = d.dist.iter().map(|x| x.unwrap()).collect();
        assert_eq!(got, [0, 1, 2, 3, 4]);
        assert_eq!(g.total_distance(0).unwrap(), 10);
        assert_eq!(g.avg_distance(0).unwrap(), rat(5, 2));
    }

    #[test]
    fn cycle_distance_multiset() {
        let g = Graph::cycle(6);
        let dd = g.distance_degree(0).unwrap();
        assert_eq!(dd.entries(), [1, 2, 2, 1]);
        assert_eq!(g.total_distance(0).unwrap(), 9);
        assert_eq!(g.avg_distance(0).unwrap(), rat(9, 5));
    }

    #[test]
    fn complete_bipartite_metrics() {
        let g = Graph::complete_bipartite(3, 3);
        for v in 0..6 {
            assert_eq!(g.distance_degree(v).unwrap().entries(), [1, 3, 2]);
        }
        assert_eq!(g.proximity().unwrap(), rat(7, 5));
        assert_eq!(g.remoteness().unwrap(), rat(7, 5));
        assert!(g.is_triangle_free());
        assert!(!g.is_c4_free());
    }

    #[test]
    fn path_and_cycle_invariants() {
        let p5 = Graph::path(5);
        assert_eq!(p5.remoteness().unwrap(), rat(5, 2));
        assert_eq!(p5.proximity().unwrap(), rat(3, 2));
        assert_eq!(p5.radius().unwrap(), 2);
        assert_eq!(p5.diameter().unwrap(), 4);
        assert_eq!(p5.center_vertices().unwrap(), vec![2]);
        let c7 = Graph::cycle(7);
        assert_eq!(c7.proximity().unwrap(), rat(2, 1));
        assert_eq!(c7.remoteness().unwrap(), rat(2, 1));
    }

    #[test]
    fn freeness_checks() {
        let c5 = Graph::cycle(5);
        assert!(c5.is_triangle_free());
        assert!(c5.is_c4_free());
        let k4 = Graph::complete(4);
        assert!(!k4.is_triangle_free());
        assert!(!k4.is_c4_free());
        let c4 = Graph::cycle(4);
        assert!(c4.is_triangle_free());
        assert!(!c4.is_c4_free());
    }

    #[test]
    fn disconnected_metrics_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.proximity(), Err(GraphError::Disconnected));
        assert_eq!(g.distance_degree(0), Err(GraphError::Disconnected));
    }

    #[test]
    fn bfs_tree_preserves_distances() {
        for g in [Graph::cycle(6), Graph::complete_bipartite(3, 4), Graph::path(9)] {
            let d = g.bfs(0).unwrap();
            let t = g.bfs_tree(0).unwrap();
            for v in 0..g.order() {
                assert_eq!(t.depth(v) as u32, d.dist[v].unwrap());
            }
            let links = t.parent.iter().flatten().count();
            assert_eq!(links, g.order() - 1);
        }
    }

    #[test]
    fn small_radius_makes_relatedness_vacuous() {
        let g = Graph::cycle(6);
        let t = g.bfs_tree(0).unwrap();
        for v in 0..6 {
            for w in 0..6 {
                assert!(!g.related(&t, v, w));
            }
        }
        assert_eq!(g.unrelated_witness(0).unwrap(), Some(0));
    }

    #[test]
    fn long_cycle_has_unrelated_witness() {
        let g = Graph::cycle(40);
        let witness = g.unrelated_witness(0).unwrap();
        let w = witness.expect("a cycle this long has an unrelated branch");
        let t = g.bfs_tree(0).unwrap();
        let d = g.bfs(0).unwrap();
        let r = d.max_finite();
        let v_r = (0..40).find(|&u| d.dist[u] == Some(r)).unwrap();
        assert!(!g.related(&t, w, v_r));
        assert!(d.dist[w].unwrap() >= r - 9);
    }

    #[test]
    fn ball2_sizes() {
        let c5 = Graph::cycle(5);
        for v in 0..5 {
            assert_eq!(c5.ball2_size(v).unwrap(), 5);
        }
        let p9 = Graph::path(9);
        assert_eq!(p9.ball2_size(0).unwrap(), 3);
        assert_eq!(p9.ball2_size(4).unwrap(), 5);
    }

    #[test]
    fn vertex_and_edge_removal() {
        let g = Graph::cycle(5);
        let h = g.without_vertex(0).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let f = g.without_edges(&[(1, 0)]);
        assert_eq!(f.edge_count(), 4);
        assert!(!f.has_edge(0, 1));
    }

    #[test]
    fn duplicate_edges_are_ignored() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
        assert!(g.add_edge(0, 0).is_err());
        assert!(g.add_edge(0, 7).is_err());
    }
}
