//! Layered joins: the graph realization of a distance degree sequence.
//!
//! For a positive sequence `(x_0, ..., x_d)` the layered join places `x_i`
//! independent vertices in layer i and joins consecutive layers completely.
//! Distances collapse to layer-index differences (2 within a layer), the
//! graph is always triangle-free, and when `x_0 = 1` the single layer-0
//! vertex has the input as its distance degree, hence total distance g(x).

use crate::graph::Graph;
use crate::seq::{DistSeq, SeqError};

/// Build the layered join of a sequence. Every entry must be positive:
/// an empty interior layer would disconnect the construction, an empty
/// outer layer is a shorter sequence in disguise.
pub fn layered_join(seq: &DistSeq) -> Result<Graph, SeqError> {
    if let Some(i) = seq.entries().iter().position(|&x| x == 0) {
        return Err(SeqError::BadEntry(format!(
            "layer {i} is empty; layered joins need positive layers"
        )));
    }
    let n = seq.sum() as usize;
    let mut starts = Vec::with_capacity(seq.len() + 1);
    let mut acc = 0usize;
    for &x in seq.entries() {
        starts.push(acc);
        acc += x as usize;
    }
    starts.push(acc);

    let mut g = Graph::new(n);
    for i in 1..seq.len() {
        for u in starts[i - 1]..starts[i] {
            for v in starts[i]..starts[i + 1] {
                g.add_edge(u, v).expect("layer ranges are disjoint");
            }
        }
    }
    Ok(g)
}

/// First vertex id of each layer, matching `layered_join`'s numbering.
pub fn layer_starts(seq: &DistSeq) -> Vec<usize> {
    let mut starts = Vec::with_capacity(seq.len());
    let mut acc = 0usize;
    for &x in seq.entries() {
        starts.push(acc);
        acc += x as usize;
    }
    starts
}

/// The palindromic sequence
/// `(1, d, d-1, 1, [1, d-1, d-1, 1]^(k-2), 1, d-1, d, 1)` on
/// `n = 2(k*delta + 1)` vertices. Requires even `k >= 2` and `delta >= 3`.
pub fn palindrome_seq(k: u64, delta: u64) -> Result<DistSeq, SeqError> {
    if k < 2 || k % 2 != 0 {
        return Err(SeqError::BadParams(format!("k must be even and >= 2, got {k}")));
    }
    if delta < 3 {
        return Err(SeqError::BadParams(format!("delta must be >= 3, got {delta}")));
    }
    let mut e = vec![1, delta, delta - 1, 1];
    for _ in 0..k - 2 {
        e.extend_from_slice(&[1, delta - 1, delta - 1, 1]);
    }
    e.extend_from_slice(&[1, delta - 1, delta, 1]);
    let seq = DistSeq::new(e)?;
    debug_assert_eq!(seq.sum(), 2 * (k * delta + 1));
    debug_assert_eq!(seq.last_index() as u64, 4 * k - 1);
    debug_assert!(seq.is_palindrome());
    Ok(seq)
}

/// Layered join of `palindrome_seq(k, delta)`.
pub fn palindrome_graph(k: u64, delta: u64) -> Result<Graph, SeqError> {
    layered_join(&palindrome_seq(k, delta)?)
}

/// Minimum total distance over the palindrome graph's vertices,
/// `2*delta*k^2 + 4k - 3`, attained in the middle layers.
pub fn palindrome_sigma_min(k: u64, delta: u64) -> u64 {
    2 * delta * k * k + 4 * k - 3
}

/// A quoted closed form for the same quantity,
/// `4k + 5 + delta*(k+2)*(2k+4)`. It disagrees with the graphs this module
/// builds (see `palindrome_sigma_min`, which the tests check against actual
/// distances); it is kept callable so the discrepancy stays observable.
pub fn stated_palindrome_sigma(k: u64, delta: u64) -> u64 {
    4 * k + 5 + delta * (k + 2) * (2 * k + 4)
}
