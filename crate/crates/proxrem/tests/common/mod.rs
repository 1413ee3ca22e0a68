//! Helpers shared by the integration suites: exhaustive enumeration of
//! small connected graphs, naive freeness oracles independent of the
//! library's implementations, and the seeded random corpus.

#![allow(dead_code)]

use proxrem::graph::Graph;
use proxrem::polarity::polarity_graph;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Call `f` on every connected labeled graph with exactly `n` vertices,
/// n <= 7. Enumerates all 2^(n choose 2) edge subsets and filters by a
/// bitmask flood fill before materializing a Graph.
pub fn for_each_connected_graph(n: usize, mut f: impl FnMut(&Graph)) {
    assert!((1..=7).contains(&n), "enumerator is sized for n <= 7");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let full: u8 = ((1u16 << n) - 1) as u8;
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut adj = [0u8; 7];
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let mut seen: u8 = 1;
        loop {
            let mut next = seen;
            let mut w = seen;
            while w != 0 {
                let v = w.trailing_zeros() as usize;
                w &= w - 1;
                next |= adj[v];
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        if seen != full {
            continue;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask & (1 << b) != 0)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        f(&g);
    }
}

/// Connected is assumed; a path has n-1 edges and maximum degree 2.
pub fn is_path(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && g.edge_count() == n - 1 && g.degrees().iter().all(|&d| d <= 2)
}

/// Connected is assumed; a cycle is 2-regular.
pub fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.degrees().iter().all(|&d| d == 2)
}

pub fn naive_triangle_free(g: &Graph) -> bool {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if g.has_edge(u, w) && g.has_edge(v, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// A C4 exists iff some vertex pair has two common neighbors.
pub fn naive_c4_free(g: &Graph) -> bool {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            let common = (0..n)
                .filter(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w))
                .count();
            if common >= 2 {
                return false;
            }
        }
    }
    true
}

/// Connected bipartite graph on a+b vertices with minimum degree >= 3.
/// Bipartite, hence triangle-free.
pub fn random_bipartite_min3(rng: &mut ChaCha8Rng, a: usize, b: usize) -> Graph {
    assert!(a >= 3 && b >= 3);
    loop {
        let mut g = Graph::new(a + b);
        let mut picks: Vec<usize> = (0..b).collect();
        for u in 0..a {
            picks.shuffle(rng);
            for &w in picks.iter().take(3) {
                g.add_edge(u, a + w).unwrap();
            }
        }
        for w in 0..b {
            while g.degree(a + w) < 3 {
                g.add_edge(rng.gen_range(0..a), a + w).unwrap();
            }
        }
        for _ in 0..(a + b) / 4 {
            g.add_edge(rng.gen_range(0..a), a + rng.gen_range(0..b))
                .unwrap();
        }
        if g.is_connected() {
            return g;
        }
    }
}

/// Connected induced subgraph of the order-q^2+q+1 polarity graph obtained
/// by deleting up to `remove` vertices. Induced subgraphs of a C4-free
/// graph stay C4-free.
pub fn polarity_connected_sample(rng: &mut ChaCha8Rng, q: u64, remove: usize) -> Graph {
    let mut g = polarity_graph(q).unwrap().graph;
    let mut removed = 0;
    let mut attempts = 0;
    while removed < remove && attempts < 30 * remove + 30 {
        attempts += 1;
        let v = rng.gen_range(0..g.order());
        let h = g.without_vertex(v).unwrap();
        if h.order() >= 5 && h.is_connected() {
            g = h;
            removed += 1;
        }
    }
    g
}
