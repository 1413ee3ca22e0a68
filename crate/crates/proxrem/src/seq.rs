//! Finite sequences of nonnegative integers indexed from 0.
//!
//! A distance-degree sequence of a vertex `v` records at index `i` how many
//! vertices lie at distance exactly `i` from `v`. Everything downstream (the
//! constraint families, the extremal constructors, the search) works on this
//! one type. Entries outside the stored range count as 0.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeqError {
    #[error("sequence must have at least one entry")]
    Empty,
    #[error("invalid sequence entry: {0}")]
    BadEntry(String),
    #[error("parameters out of range: {0}")]
    BadParams(String),
    #[error("no repetition count places the tail entry in its admissible window: {0}")]
    WindowUnreachable(String),
    #[error("constructed sequence failed its own family validation: {0}")]
    ValidationFailed(String),
    #[error("sequence does not satisfy the family, so local moves are undefined: {0}")]
    NotFeasible(String),
}

/// A sequence `(n_0, n_1, ..., n_d)` of nonnegative integers, `d` being the
/// index of the last stored entry. Reads outside `0..=d` yield 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DistSeq {
    entries: Vec<u64>,
}

impl DistSeq {
    pub fn new(entries: Vec<u64>) -> Result<Self, SeqError> {
        if entries.is_empty() {
            return Err(SeqError::Empty);
        }
        Ok(DistSeq { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of the last stored entry.
    pub fn last_index(&self) -> usize {
        self.entries.len() - 1
    }

    /// Entry at `i`, with the convention that out-of-range entries are 0.
    pub fn get(&self, i: i64) -> u64 {
        if i < 0 {
            return 0;
        }
        self.entries.get(i as usize).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().sum()
    }

    /// The weight `g(X) = sum_i i * n_i`. For the distance degree of a vertex
    /// this equals the vertex's total distance.
    pub fn g(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &x)| i as u64 * x)
            .sum()
    }

    /// `self` beats `other` when it has strictly larger weight.
    pub fn beats(&self, other: &DistSeq) -> bool {
        self.g() > other.g()
    }

    pub fn windows(&self) -> WindowSums<'_> {
        WindowSums { seq: self }
    }

    pub fn is_palindrome(&self) -> bool {
        let e = &self.entries;
        e.iter().eq(e.iter().rev())
    }

    /// Move one unit of mass from index `from` to index `to`. `to` may exceed
    /// the current last index by one (an extension). Trailing zeros produced
    /// by the move are trimmed so the result ends at its last nonzero entry.
    /// Returns `None` when the move is impossible (`from` empty, `to` out of
    /// range, or the result would have no entries).
    pub fn shifted(&self, from: usize, to: usize) -> Option<DistSeq> {
        let d = self.last_index();
        if from > d || to > d + 1 || from == to || self.entries[from] == 0 {
            return None;
        }
        let mut e = self.entries.clone();
        if to == d + 1 {
            e.push(0);
        }
        e[from] -= 1;
        e[to] += 1;
        while e.len() > 1 && *e.last().unwrap() == 0 {
            e.pop();
        }
        if e.len() == 1 && e[0] == 0 {
            return None;
        }
        Some(DistSeq { entries: e })
    }
}

impl fmt::Display for DistSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for DistSeq {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut entries = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(SeqError::BadEntry("empty entry".into()));
            }
            let v: u64 = tok
                .parse()
                .map_err(|_| SeqError::BadEntry(format!("not a nonnegative integer: {tok:?}")))?;
            entries.push(v);
        }
        DistSeq::new(entries)
    }
}

/// Windowed sums over a sequence, used by the constraint families.
///
/// `s3(i)` sums the three entries centered at `i`, `s4(i)` the four entries
/// from `i-1` through `i+2`, and `s5(i)` the five entries centered at `i`.
/// Out-of-range entries contribute 0.
pub struct WindowSums<'a> {
    seq: &'a DistSeq,
}

impl WindowSums<'_> {
    pub fn s3(&self, i: i64) -> u64 {
        self.seq.get(i - 1) + self.seq.get(i) + self.seq.get(i + 1)
    }

    pub fn s4(&self, i: i64) -> u64 {
        self.seq.get(i - 1) + self.seq.get(i) + self.seq.get(i + 1) + self.seq.get(i + 2)
    }

    pub fn s5(&self, i: i64) -> u64 {
        (-2..=2).map(|o| self.seq.get(i + o)).sum()
    }
}

/// The periodic tail pattern `(1, 1, delta-1, delta-1, 1, 1, delta-1, ...)`
/// that fills the middle of the extremal triangle-free sequences. Terms are
/// 1-indexed; one period sums to `2*delta`.
#[derive(Debug, Clone, Copy)]
pub struct PatternSeq {
    delta: u64,
}

impl PatternSeq {
    pub fn new(delta: u64) -> Result<Self, SeqError> {
        if delta < 2 {
            return Err(SeqError::BadParams(format!(
                "pattern needs delta >= 2, got {delta}"
            )));
        }
        Ok(PatternSeq { delta })
    }

    /// The k-th term (1-indexed).
    pub fn term(&self, k: u64) -> u64 {
        assert!(k >= 1, "pattern terms are 1-indexed");
        match (k - 1) % 4 {
            0 | 1 => 1,
            _ => self.delta - 1,
        }
    }

    /// Sum of the first `k` terms.
    pub fn prefix_sum(&self, k: u64) -> u64 {
        let period = 2 * self.delta;
        let full = k / 4;
        let mut s = full * period;
        for t in 4 * full + 1..=k {
            s += self.term(t);
        }
        s
    }

    /// The smallest `k` whose prefix sum strictly exceeds `p`.
    pub fn ell(&self, p: u64) -> u64 {
        let period = 2 * self.delta;
        // After `full` whole periods the prefix sum is `full * period <= p`;
        // at most four more terms push it past `p`.
        let full = p / period;
        let mut k = 4 * full;
        let mut s = full * period;
        loop {
            k += 1;
            s += self.term(k);
            if s > p {
                return k;
            }
        }
    }
}
