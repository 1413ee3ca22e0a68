//! Constraint families satisfied by distance-degree sequences.
//!
//! Family A holds for the distance degree of *every* vertex of a connected
//! triangle-free graph, family B for that of a *center* vertex when the
//! minimum degree is at least 3. Families C and D are the C4-free analogues,
//! with the window threshold `delta* = delta^2 - 2*floor(delta/2) + 1` taking
//! the role of the degree terms. Each family is checked condition by
//! condition so violations can be reported precisely.

use serde::Serialize;
use std::fmt;
use std::str::FromStr;

use crate::bounds::delta_star;
use crate::seq::{DistSeq, SeqError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    A,
    B,
    C,
    D,
}

impl FamilyKind {
    /// Families B and D constrain center vertices; A and C any vertex.
    pub fn is_center_family(self) -> bool {
        matches!(self, FamilyKind::B | FamilyKind::D)
    }

    /// Families C and D are the C4-free families; A and B the triangle-free ones.
    pub fn is_c4_family(self) -> bool {
        matches!(self, FamilyKind::C | FamilyKind::D)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            FamilyKind::A => 'a',
            FamilyKind::B => 'b',
            FamilyKind::C => 'c',
            FamilyKind::D => 'd',
        };
        write!(f, "{c}")
    }
}

impl FromStr for FamilyKind {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(FamilyKind::A),
            "b" => Ok(FamilyKind::B),
            "c" => Ok(FamilyKind::C),
            "d" => Ok(FamilyKind::D),
            other => Err(SeqError::BadParams(format!("unknown family {other:?}"))),
        }
    }
}

/// A family instantiated with an order `n` and a minimum degree `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstraintFamily {
    pub kind: FamilyKind,
    pub n: u64,
    pub delta: u64,
}

/// Outcome of one named condition.
#[derive(Debug, Clone, Serialize)]
pub struct ConditionResult {
    pub name: &'static str,
    pub passed: bool,
    /// Index at which the condition first fails, where the condition is
    /// indexed; global conditions (the sum) report `None`.
    pub first_violation: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub conditions: Vec<ConditionResult>,
}

impl FamilyReport {
    pub fn all_pass(&self) -> bool {
        self.conditions.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| !c.passed)
    }
}

impl ConstraintFamily {
    pub fn new(kind: FamilyKind, n: u64, delta: u64) -> Result<Self, SeqError> {
        if n == 0 {
            return Err(SeqError::BadParams("family order n must be positive".into()));
        }
        if delta == 0 {
            return Err(SeqError::BadParams("family delta must be positive".into()));
        }
        if kind.is_center_family() && delta < 3 {
            return Err(SeqError::BadParams(format!(
                "family {kind} applies to center vertices of graphs with delta >= 3, got {delta}"
            )));
        }
        Ok(ConstraintFamily { kind, n, delta })
    }

    pub fn delta_star(&self) -> u64 {
        delta_star(self.delta)
    }

    pub fn condition_names(&self) -> &'static [&'static str] {
        match self.kind {
            FamilyKind::A => &["A1", "A2", "A3", "A4", "A5", "A6"],
            FamilyKind::B => &["B1", "B2", "B3", "B4", "B5"],
            FamilyKind::C => &["C1", "C2", "C3", "C4"],
            FamilyKind::D => &["D1", "D2", "D3", "D4", "D5"],
        }
    }

    /// Check `seq` against every condition of the family.
    pub fn check(&self, seq: &DistSeq) -> FamilyReport {
        let d = seq.last_index() as i64;
        let w = seq.windows();
        let delta = self.delta;
        let names = self.condition_names();
        let mut conditions = Vec::with_capacity(names.len());

        // x1: the sequence starts with a single vertex at distance 0.
        let v1 = (seq.get(0) != 1).then_some(0);
        conditions.push(ConditionResult {
            name: names[0],
            passed: v1.is_none(),
            first_violation: v1,
        });
        // x2: the entries account for every vertex.
        conditions.push(ConditionResult {
            name: names[1],
            passed: seq.sum() == self.n,
            first_violation: None,
        });

        let mut push = |name: &'static str, violation: Option<i64>| {
            conditions.push(ConditionResult {
                name,
                passed: violation.is_none(),
                first_violation: violation,
            });
        };

        // x3: positivity of the prefix before any nonzero entry. Families B
        // and D demand interior entries of at least 2.
        let interior_min = if self.kind.is_center_family() { 2 } else { 1 };
        let mut prefix_violation = None;
        let last_positive = (1..=d).rev().find(|&i| seq.get(i) > 0);
        if let Some(last) = last_positive {
            for i in 1..last {
                if seq.get(i) < interior_min {
                    prefix_violation = Some(i);
                    break;
                }
            }
        }
        push(names[2], prefix_violation);

        match self.kind {
            FamilyKind::A => {
                // A4: S4(i) >= 2*delta wherever two consecutive entries are positive.
                let v4 = (0..=d)
                    .find(|&i| seq.get(i) >= 1 && seq.get(i + 1) >= 1 && w.s4(i) < 2 * delta);
                push("A4", v4);
                // A5: S3(i) >= delta + 1 wherever the entry is positive.
                let v5 = (0..=d).find(|&i| seq.get(i) > 0 && w.s3(i) < delta + 1);
                push("A5", v5);
                // A6: a thin next-to-last entry forces a heavy final pair.
                let v6 = (d >= 1
                    && seq.get(d - 1) <= delta - 1
                    && seq.get(d - 1) + seq.get(d) < 2 * delta)
                    .then_some(d - 1);
                push("A6", v6);
            }
            FamilyKind::B => {
                let r = d;
                // B4: S4(i) >= 2*delta on every window anchor i = 1 mod 4 up to r-1.
                let v4 = (1..=r - 1)
                    .filter(|i| i % 4 == 1)
                    .find(|&i| w.s4(i) < 2 * delta);
                push("B4", v4);
                // B5: the doubled threshold on anchors deep inside the sequence.
                let v5 = (9..=r - 10)
                    .filter(|i| i % 4 == 1)
                    .find(|&i| w.s4(i) < 4 * delta);
                push("B5", v5);
            }
            FamilyKind::C => {
                let ds = self.delta_star();
                // C4: S5(i) >= delta* on every anchor i = 0 mod 5.
                let v4 = (0..=d).filter(|i| i % 5 == 0).find(|&i| w.s5(i) < ds);
                push("C4", v4);
            }
            FamilyKind::D => {
                let ds = self.delta_star();
                let r = d;
                let v4 = (0..=r).filter(|i| i % 5 == 0).find(|&i| w.s5(i) < ds);
                push("D4", v4);
                // D5: the doubled threshold away from both ends.
                let v5 = (10..=r - 9)
                    .filter(|i| i % 5 == 0)
                    .find(|&i| w.s5(i) < 2 * ds);
                push("D5", v5);
            }
        }

        FamilyReport { conditions }
    }
}
