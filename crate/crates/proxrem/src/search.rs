//! Independent branch-and-bound maximizer for g over a constraint family.
//!
//! The search enumerates all sequences (n_0, ..., n_d) of positive entries
//! summing to n, extending prefixes left to right in lexicographic order.
//! A prefix dies as soon as a fully determined window condition fails, and
//! families B/D carry a deadline: once an under-weight deep window is
//! placed, the sequence must end soon enough to push that window out of the
//! checked range. An admissible optimistic completion bound prunes branches
//! that cannot beat the incumbent; ties are never pruned, so the number of
//! optima is exact and the first optimum found is the lexicographically
//! smallest.
//!
//! This module is the oracle against which the closed-form constructors in
//! `extremal` are re-derived: on ranges where the search is exhaustive, the
//! maximizer must agree with them entry for entry.

use serde::Serialize;
use std::time::{Duration, Instant};

use crate::family::{ConstraintFamily, FamilyKind};
use crate::seq::{DistSeq, SeqError};

#[derive(Debug, Clone, Default)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    /// Cap on individual entry values; a capped run is never exhaustive.
    pub entry_cap: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub best_seq: Option<DistSeq>,
    pub best_g: Option<u64>,
    pub nodes: u64,
    /// False when a node/time budget or entry cap truncated the search.
    pub exhaustive: bool,
    /// Number of distinct satisfying sequences attaining best_g.
    pub optima_count: u64,
    /// True when an exhaustive search found no satisfying sequence at all.
    pub infeasible: bool,
}

struct Searcher {
    kind: FamilyKind,
    n: u64,
    delta: u64,
    threshold: u64, // 2*delta for A/B windows, delta* for C/D
    center: bool,
    prune: bool,
    family: ConstraintFamily,
    cap: Option<u64>,
    max_nodes: Option<u64>,
    stop_at: Option<Instant>,
    nodes: u64,
    truncated: bool,
    cap_hit: bool,
    best_g: Option<u64>,
    best: Option<Vec<u64>>,
    optima: u64,
}

fn at(prefix: &[u64], i: i64) -> u64 {
    if i < 0 || i as usize >= prefix.len() {
        0
    } else {
        prefix[i as usize]
    }
}

fn s4(prefix: &[u64], i: i64) -> u64 {
    at(prefix, i - 1) + at(prefix, i) + at(prefix, i + 1) + at(prefix, i + 2)
}

fn s5(prefix: &[u64], i: i64) -> u64 {
    at(prefix, i - 2) + at(prefix, i - 1) + at(prefix, i) + at(prefix, i + 1) + at(prefix, i + 2)
}

impl Searcher {
    fn tick(&mut self) {
        self.nodes += 1;
        if let Some(limit) = self.max_nodes {
            if self.nodes >= limit {
                self.truncated = true;
            }
        }
        if self.nodes % 4096 == 0 {
            if let Some(t) = self.stop_at {
                if Instant::now() >= t {
                    self.truncated = true;
                }
            }
        }
    }

    /// Window conditions that became fully determined by placing index `i`,
    /// plus any deadline the deep-window conditions impose on the final
    /// index. Returns None on a hard violation.
    fn placed_ok(&self, prefix: &[u64], i: i64, max_d: i64) -> Option<i64> {
        match self.kind {
            FamilyKind::A => {
                // S3(j) >= delta+1 for every index (all entries positive),
                // S4(j) >= 2*delta wherever two consecutive entries exist.
                if i >= 1 && at(prefix, i - 1) + at(prefix, i) + at(prefix, i - 2) < self.delta + 1 {
                    return None;
                }
                if i >= 2 && s4(prefix, i - 2) < self.threshold {
                    return None;
                }
                Some(max_d)
            }
            FamilyKind::B => {
                let j = i - 2;
                if j >= 1 && j % 4 == 1 {
                    let s = s4(prefix, j);
                    if s < self.threshold {
                        return None;
                    }
                    // An anchor below 4*delta forces the sequence to end by
                    // j+9, pushing j out of the deep range {9..r-10}.
                    if j >= 9 && s < 2 * self.threshold {
                        return Some(max_d.min(j + 9));
                    }
                }
                Some(max_d)
            }
            FamilyKind::C => {
                let j = i - 2;
                if j >= 0 && j % 5 == 0 && s5(prefix, j) < self.threshold {
                    return None;
                }
                Some(max_d)
            }
            FamilyKind::D => {
                let j = i - 2;
                if j >= 0 && j % 5 == 0 {
                    let s = s5(prefix, j);
                    if s < self.threshold {
                        return None;
                    }
                    if j >= 10 && s < 2 * self.threshold {
                        return Some(max_d.min(j + 8));
                    }
                }
                Some(max_d)
            }
        }
    }

    fn complete(&mut self, prefix: &[u64], g: u64) {
        let seq = DistSeq::new(prefix.to_vec()).expect("search prefixes are nonempty");
        if !self.family.check(&seq).all_pass() {
            return;
        }
        match self.best_g {
            Some(bg) if g < bg => {}
            Some(bg) if g == bg => self.optima += 1,
            _ => {
                self.best_g = Some(g);
                self.best = Some(prefix.to_vec());
                self.optima = 1;
            }
        }
    }

    fn dfs(&mut self, prefix: &mut Vec<u64>, used: u64, g: u64, max_d: i64) {
        if self.truncated {
            return;
        }
        if used == self.n {
            self.complete(prefix, g);
            return;
        }
        let i = prefix.len() as i64; // index about to be filled
        if i > max_d {
            return;
        }
        let m = self.n - used;
        if self.prune {
            if let Some(bg) = self.best_g {
                // All remaining mass at the farthest reachable index: with t
                // further entries the final index is i-1+t, and families B/D
                // need at least 2 units per interior entry.
                let t_max = if self.center { (m + 1) / 2 } else { m };
                let idx_max = (i - 1 + t_max as i64).min(max_d).max(0) as u64;
                if g + m * idx_max < bg {
                    return;
                }
            }
        }
        let mut hi = m;
        if let Some(c) = self.cap {
            if hi > c {
                hi = c;
                self.cap_hit = true;
            }
        }
        for v in 1..=hi {
            if self.truncated {
                return;
            }
            let interior = v < m;
            if interior && self.center && v < 2 {
                continue;
            }
            if interior && i >= max_d {
                continue; // no room to extend past the deadline
            }
            self.tick();
            prefix.push(v);
            if let Some(next_max_d) = self.placed_ok(prefix, i, max_d) {
                self.dfs(prefix, used + v, g + v * i as u64, next_max_d);
            }
            prefix.pop();
        }
    }
}

/// Maximize g over all sequences satisfying `family`, depth-first with
/// window pruning and an admissible completion bound. The returned optimum
/// is the lexicographically smallest among the maximizers, and
/// `optima_count` is exact whenever the run is exhaustive.
pub fn maximize_g(family: &ConstraintFamily, budget: &SearchBudget) -> SearchResult {
    maximize_g_with_options(family, budget, true)
}

/// As `maximize_g`, with the optimistic-bound pruning switchable so tests
/// can confirm it never changes the result.
pub fn maximize_g_with_options(
    family: &ConstraintFamily,
    budget: &SearchBudget,
    prune: bool,
) -> SearchResult {
    let center = family.kind.is_center_family();
    let threshold = if family.kind.is_c4_family() {
        family.delta_star()
    } else {
        2 * family.delta
    };
    let mut s = Searcher {
        kind: family.kind,
        n: family.n,
        delta: family.delta,
        threshold,
        center,
        prune,
        family: *family,
        cap: budget.entry_cap,
        max_nodes: budget.max_nodes,
        stop_at: budget.max_time.map(|d| Instant::now() + d),
        nodes: 0,
        truncated: false,
        cap_hit: false,
        best_g: None,
        best: None,
        optima: 0,
    };
    // Every family forces n_0 = 1.
    let mut prefix = vec![1u64];
    s.tick();
    s.dfs(&mut prefix, 1, 0, i64::MAX);
    let exhaustive = !s.truncated && !s.cap_hit;
    let infeasible = exhaustive && s.best.is_none();
    SearchResult {
        best_seq: s
            .best
            .map(|v| DistSeq::new(v).expect("optimum is nonempty")),
        best_g: s.best_g,
        nodes: s.nodes,
        exhaustive,
        optima_count: s.optima,
        infeasible,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ShiftMove {
    pub from: usize,
    pub to: usize,
    pub g: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LocalOptReport {
    pub base_g: u64,
    /// Single-unit moves whose result still satisfies the family.
    pub moves_feasible: u64,
    /// Feasible moves that strictly increase g.
    pub beating: Vec<ShiftMove>,
    pub locally_optimal: bool,
}

/// Enumerate every single-unit move n_from -= 1, n_to += 1 (including the
/// one-past-the-end extension) and report whether any family-feasible move
/// beats `seq`. The input must itself satisfy the family.
pub fn shift_local_opt(
    seq: &DistSeq,
    family: &ConstraintFamily,
) -> Result<LocalOptReport, SeqError> {
    if let Some(c) = family.check(seq).first_failure() {
        return Err(SeqError::ValidationFailed(format!(
            "input sequence violates {} (first index {:?})",
            c.name, c.first_violation
        )));
    }
    let d = seq.last_index();
    let base_g = seq.g();
    let mut moves_feasible = 0;
    let mut beating = Vec::new();
    for from in 0..=d {
        for to in 0..=d + 1 {
            if to == from {
                continue;
            }
            let Some(cand) = seq.shifted(from, to) else {
                continue;
            };
            if family.check(&cand).all_pass() {
                moves_feasible += 1;
                let g = cand.g();
                if g > base_g {
                    beating.push(ShiftMove { from, to, g });
                }
            }
        }
    }
    Ok(LocalOptReport {
        base_g,
        moves_feasible,
        locally_optimal: beating.is_empty(),
        beating,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{construct_x, construct_y, construct_z};

    fn fam(kind: FamilyKind, n: u64, delta: u64) -> ConstraintFamily {
        ConstraintFamily::new(kind, n, delta).unwrap()
    }

    #[test]
    fn family_a_oracle_rederives_x() {
        let r = maximize_g(&fam(FamilyKind::A, 18, 3), &SearchBudget::default());
        assert!(r.exhaustive);
        assert_eq!(r.best_g, Some(85));
        assert_eq!(r.best_seq.unwrap(), construct_x(18, 3).unwrap());
        assert_eq!(r.optima_count, 1);
    }

    #[test]
    fn family_c_oracle_rederives_z() {
        let r = maximize_g(&fam(FamilyKind::C, 16, 3), &SearchBudget::default());
        assert!(r.exhaustive);
        assert_eq!(r.best_g, Some(59));
        assert_eq!(r.best_seq.unwrap(), construct_z(16, 3).unwrap());
    }

    #[test]
    fn infeasible_family_is_reported_distinctly() {
        let r = maximize_g(&fam(FamilyKind::A, 5, 3), &SearchBudget::default());
        assert!(r.exhaustive);
        assert!(r.infeasible);
        assert!(r.best_seq.is_none());
        assert_eq!(r.optima_count, 0);
    }

    #[test]
    fn node_budget_truncates() {
        let budget = SearchBudget {
            max_nodes: Some(10),
            ..Default::default()
        };
        let r = maximize_g(&fam(FamilyKind::A, 18, 3), &budget);
        assert!(!r.exhaustive);
        assert!(!r.infeasible);
    }

    #[test]
    fn entry_cap_marks_non_exhaustive() {
        let budget = SearchBudget {
            entry_cap: Some(2),
            ..Default::default()
        };
        let r = maximize_g(&fam(FamilyKind::A, 12, 3), &budget);
        assert!(!r.exhaustive);
    }

    #[test]
    fn pruning_is_sound_on_small_instances() {
        let cases = [
            fam(FamilyKind::A, 14, 3),
            fam(FamilyKind::A, 18, 3),
            fam(FamilyKind::B, 20, 3),
            fam(FamilyKind::C, 17, 3),
            fam(FamilyKind::D, 20, 3),
        ];
        for f in cases {
            let with = maximize_g_with_options(&f, &SearchBudget::default(), true);
            let without = maximize_g_with_options(&f, &SearchBudget::default(), false);
            assert!(with.exhaustive && without.exhaustive);
            assert_eq!(with.best_g, without.best_g, "{f:?}");
            assert_eq!(with.best_seq, without.best_seq, "{f:?}");
            assert_eq!(with.optima_count, without.optima_count, "{f:?}");
            assert!(with.nodes <= without.nodes);
        }
    }

    #[test]
    fn x_is_shift_locally_optimal() {
        let x = construct_x(18, 3).unwrap();
        let rep = shift_local_opt(&x, &fam(FamilyKind::A, 18, 3)).unwrap();
        assert!(rep.locally_optimal, "beaten by {:?}", rep.beating);
        assert!(rep.moves_feasible > 0);
    }

    #[test]
    fn suboptimal_sequence_has_beating_move() {
        // Family-C feasible with g = 58; moving a unit from index 6 to 7
        // recovers Z_{16,3} with g = 59.
        let s = DistSeq::new(vec![1, 1, 6, 1, 1, 1, 2, 3]).unwrap();
        let rep = shift_local_opt(&s, &fam(FamilyKind::C, 16, 3)).unwrap();
        assert!(!rep.locally_optimal);
        assert!(rep.beating.iter().any(|m| m.g == 59));
    }

    #[test]
    fn local_opt_rejects_infeasible_input() {
        let s = DistSeq::new(vec![1, 1, 1]).unwrap();
        assert!(shift_local_opt(&s, &fam(FamilyKind::A, 3, 3)).is_err());
    }

    #[test]
    fn y_is_shift_locally_optimal_at_the_example() {
        let y = construct_y(68, 4).unwrap();
        let rep = shift_local_opt(&y.seq, &fam(FamilyKind::B, 68, 4)).unwrap();
        assert!(rep.locally_optimal, "beaten by {:?}", rep.beating);
    }

    #[test]
    fn search_result_serializes_with_stable_keys() {
        let r = maximize_g(&fam(FamilyKind::C, 16, 3), &SearchBudget::default());
        let v = serde_json::to_value(&r).unwrap();
        for key in [
            "best_seq",
            "best_g",
            "nodes",
            "exhaustive",
            "optima_count",
            "infeasible",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["best_g"], 59);
    }
}
