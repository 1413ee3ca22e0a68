//! Polarity graphs over projective planes PG(2, q) and the pruned family
//! built from them.
//!
//! Vertices of H_q are the q^2 + q + 1 projective points, encoded by their
//! canonical representative (first nonzero coordinate 1) and numbered in
//! lexicographic order of the coordinate triples. Two distinct points are
//! adjacent when their dot product vanishes. H_q has no 4-cycles; the q + 1
//! self-orthogonal points have degree q, the rest degree q + 1.
//!
//! The pruned graph H_q' deletes the lowest-id self-orthogonal point z and
//! a matching M between the punctured neighborhoods of z's two lowest-id
//! neighbors. Chaining k copies of H_q' through those two marked vertices
//! gives a connected C4-free graph of order k(q^2 + q) and minimum degree
//! q - 1.

use thiserror::Error;

use crate::gf::{Gf, GfError};
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolarityError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("parameters out of range: {0}")]
    BadParams(String),
    #[error("structural validation failed: {0}")]
    Structure(String),
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), PolarityError> {
    if cond {
        Ok(())
    } else {
        Err(PolarityError::Structure(msg()))
    }
}

/// Canonical projective point representatives in lexicographic order.
pub fn proj_points(f: &Gf) -> Vec<[u64; 3]> {
    let q = f.order();
    let mut pts = Vec::with_capacity((q * q + q + 1) as usize);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let p = [a, b, c];
                let first = p.iter().find(|&&x| x != 0);
                if first == Some(&1) {
                    pts.push(p);
                }
            }
        }
    }
    pts
}

#[derive(Debug, Clone)]
pub struct Polarity {
    pub q: u64,
    pub graph: Graph,
    pub points: Vec<[u64; 3]>,
    /// Ids of the self-orthogonal points, ascending.
    pub self_orth: Vec<usize>,
}

/// Build the polarity graph H_q. `q` must be a supported field order.
pub fn polarity_graph(q: u64) -> Result<Polarity, PolarityError> {
    let f = Gf::new(q)?;
    let points = proj_points(&f);
    let n = points.len();
    ensure(n as u64 == q * q + q + 1, || {
        format!("expected {} projective points, generated {}", q * q + q + 1, n)
    })?;

    let mut graph = Graph::new(n);
    let mut self_orth = Vec::new();
    for i in 0..n {
        if f.dot3(&points[i], &points[i]) == 0 {
            self_orth.push(i);
        }
        for j in i + 1..n {
            if f.dot3(&points[i], &points[j]) == 0 {
                graph.add_edge(i, j).expect("ids in range");
            }
        }
    }

    ensure(self_orth.len() as u64 == q + 1, || {
        format!("expected {} self-orthogonal points, found {}", q + 1, self_orth.len())
    })?;
    for v in 0..n {
        let want = if self_orth.contains(&v) { q } else { q + 1 };
        ensure(graph.degree(v) as u64 == want, || {
            format!("vertex {v} has degree {}, expected {want}", graph.degree(v))
        })?;
    }
    ensure(graph.is_c4_free(), || "polarity graph contains a 4-cycle".into())?;

    Ok(Polarity {
        q,
        graph,
        points,
        self_orth,
    })
}

#[derive(Debug, Clone)]
pub struct PrunedPolarity {
    pub q: u64,
    pub graph: Graph,
    /// Id (in H_q) of the deleted self-orthogonal point.
    pub z: usize,
    /// Marked vertices (ids in H_q'): the two lowest-id neighbors of z.
    pub u: usize,
    pub v: usize,
    /// The removed matching, as vertex pairs in H_q' ids.
    pub matching: Vec<(usize, usize)>,
    pub connected: bool,
}

/// Build H_q' from H_q: delete z = the lowest-id self-orthogonal point,
/// then remove the matching M between N(u)\{z} and N(v)\{z}, where u < v
/// are z's two lowest-id neighbors. M is checked to be a perfect matching
/// between those two sets. For q >= 3 the result must be connected with
/// minimum degree q - 1, diameter 4, and d(u, v) = 4; q = 2 is built the
/// same way but is disconnected, so the distance checks are skipped.
pub fn pruned_polarity(q: u64) -> Result<PrunedPolarity, PolarityError> {
    let pol = polarity_graph(q)?;
    let h = &pol.graph;
    let z = *pol
        .self_orth
        .first()
        .expect("q + 1 >= 1 self-orthogonal points");
    let nz = h.neighbors(z);
    ensure(nz.len() >= 2, || format!("z = {z} has fewer than two neighbors"))?;
    let (u0, v0) = (nz[0], nz[1]);

    let punctured = |w: usize| -> Vec<usize> {
        h.neighbors(w).iter().copied().filter(|&x| x != z).collect()
    };
    let a = punctured(u0);
    let b = punctured(v0);
    ensure(a.iter().all(|x| !b.contains(x)), || {
        "punctured neighborhoods of u and v intersect".into()
    })?;

    let mut matching = Vec::new();
    for &x in &a {
        for &y in &b {
            if h.has_edge(x, y) {
                matching.push((x, y));
            }
        }
    }
    let hits = |side: &[usize], pick: fn(&(usize, usize)) -> usize| {
        side.iter()
            .all(|&w| matching.iter().filter(|e| pick(e) == w).count() == 1)
    };
    ensure(
        matching.len() == a.len()
            && matching.len() == b.len()
            && hits(&a, |e| e.0)
            && hits(&b, |e| e.1),
        || "edges between the punctured neighborhoods are not a perfect matching".into(),
    )?;

    let shift = |w: usize| if w > z { w - 1 } else { w };
    let shifted: Vec<(usize, usize)> = matching.iter().map(|&(x, y)| (shift(x), shift(y))).collect();
    let graph = h.without_vertex(z).expect("z in range").without_edges(&shifted);
    let (u, v) = (shift(u0), shift(v0));

    ensure(graph.order() as u64 == q * q + q, || {
        format!("pruned order {} != {}", graph.order(), q * q + q)
    })?;
    ensure(graph.min_degree() as u64 == q - 1, || {
        format!("pruned min degree {} != {}", graph.min_degree(), q - 1)
    })?;
    ensure(graph.is_c4_free(), || "pruned graph contains a 4-cycle".into())?;

    let connected = graph.is_connected();
    if q >= 3 {
        ensure(connected, || "pruned graph is disconnected".into())?;
        let diam = graph.diameter().expect("connected");
        ensure(diam == 4, || format!("pruned diameter {diam} != 4"))?;
        let duv = graph.bfs(u).expect("u in range").dist[v].expect("connected");
        ensure(duv == 4, || format!("d(u, v) = {duv} != 4 in pruned graph"))?;
    }

    Ok(PrunedPolarity {
        q,
        graph,
        z,
        u,
        v,
        matching: shifted,
        connected,
    })
}

#[derive(Debug, Clone)]
pub struct ChainGraph {
    pub q: u64,
    pub k: u64,
    pub graph: Graph,
    /// (u, v) ids of each copy's marked pair, in chain order.
    pub marks: Vec<(usize, usize)>,
}

/// Chain k copies of H_q' by joining copy i's v to copy i+1's u.
/// Requires q >= 3 (so each copy is connected) and k >= 1.
pub fn chain_graph(k: u64, q: u64) -> Result<ChainGraph, PolarityError> {
    if q < 3 {
        return Err(PolarityError::BadParams(format!(
            "chain needs q >= 3, got {q}"
        )));
    }
    if k < 1 {
        return Err(PolarityError::BadParams("chain needs k >= 1".into()));
    }
    let cell = pruned_polarity(q)?;
    let step = cell.graph.order();
    let mut graph = Graph::new(step * k as usize);
    let mut marks = Vec::with_capacity(k as usize);
    for i in 0..k as usize {
        let off = i * step;
        for (x, y) in cell.graph.edges() {
            graph.add_edge(off + x, off + y).expect("ids in range");
        }
        marks.push((off + cell.u, off + cell.v));
        if i > 0 {
            let prev_v = marks[i - 1].1;
            graph.add_edge(prev_v, off + cell.u).expect("ids in range");
        }
    }

    ensure(graph.order() as u64 == k * (q * q + q), || {
        format!("chain order {} != {}", graph.order(), k * (q * q + q))
    })?;
    ensure(graph.min_degree() as u64 == q - 1, || {
        format!("chain min degree {} != {}", graph.min_degree(), q - 1)
    })?;
    ensure(graph.is_connected(), || "chain is disconnected".into())?;
    ensure(graph.is_c4_free(), || "chain contains a 4-cycle".into())?;

    Ok(ChainGraph {
        q,
        k,
        graph,
        marks,
    })
}
