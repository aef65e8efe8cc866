//! Two-ended wire identification over a cable with hidden wiring.
//!
//! End A joins its wires into the A-sets of a Knowlton-Graham pair. End B
//! probes conductivity: the size of the group a wire belongs to is its row
//! `j`. Knowing the shared matrix, end B gives each row-`j` wire a distinct
//! column `k` with entry `(j, k) = 1` and joins its wires into B-sets of size
//! `k`. End A, now disconnected, probes in turn and reads each wire's column.
//! Both ends end up with the same `(j, k)` for every wire.
//!
//! Wiring for seed `s != 0` is a Fisher-Yates shuffle of the identity driven
//! by `ChaCha8Rng::seed_from_u64(s)`: for `i = n-1` down to `1`, draw
//! `x = next_u64()`, pick `j = (x as u128 * (i + 1) as u128) >> 64` and swap
//! positions `i` and `j`. Seed 0 is the identity wiring.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::partition::{kg_violations, partition_to_matrix, KgPartition, Violation};

/// `n` wires whose end-A position `a` (1-based) arrives at end-B position
/// `wiring[a - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CableInstance {
    n: usize,
    seed: u64,
    wiring: Vec<usize>,
}

impl CableInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// End-B position of end-A position `a`.
    pub fn b_of(&self, a: usize) -> usize {
        self.wiring[a - 1]
    }

    pub fn wiring(&self) -> &[usize] {
        &self.wiring
    }

    /// `inverse[b - 1]` is the end-A position of end-B position `b`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n];
        for (a, &b) in self.wiring.iter().enumerate() {
            inv[b - 1] = a + 1;
        }
        inv
    }
}

pub fn make_cable(n: usize, seed: u64) -> CableInstance {
    assert!(n >= 1, "a cable needs at least one wire");
    let mut wiring: Vec<usize> = (1..=n).collect();
    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..n).rev() {
            let j = ((rng.next_u64() as u128 * (i as u128 + 1)) >> 64) as usize;
            wiring.swap(i, j);
        }
    }
    CableInstance { n, seed, wiring }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum End {
    A,
    B,
}

/// Groups of wire positions joined together at one end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConnectionPlan {
    pub groups: Vec<Vec<usize>>,
}

impl ConnectionPlan {
    pub fn new(groups: Vec<Vec<usize>>) -> Self {
        ConnectionPlan { groups }
    }

    /// Group size of every position `1..=n` (index 0 is position 1).
    fn sizes(&self, n: usize) -> Vec<usize> {
        let mut sizes = vec![0; n];
        for g in &self.groups {
            for &w in g {
                sizes[w - 1] = g.len();
            }
        }
        sizes
    }

    pub fn is_partition_of(&self, n: usize) -> bool {
        let mut seen = vec![false; n];
        for g in &self.groups {
            for &w in g {
                if w == 0 || w > n || seen[w - 1] {
                    return false;
                }
                seen[w - 1] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Component size seen at each position of `queried_end` when `plan` is
/// applied at the other end.
pub fn probe(plan: &ConnectionPlan, cable: &CableInstance, queried_end: End) -> Vec<usize> {
    let sizes = plan.sizes(cable.n);
    match queried_end {
        // plan at A: B position b reads the group of its A counterpart
        End::B => cable.inverse().iter().map(|&a| sizes[a - 1]).collect(),
        End::A => cable.wiring.iter().map(|&b| sizes[b - 1]).collect(),
    }
}

/// A wire's row and column: sizes of its A-set and B-set.
pub type Coord = (usize, usize);

/// Everything both ends did and concluded. Per-position vectors are indexed
/// by position minus one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProtocolTranscript {
    pub phase1_plan: ConnectionPlan,
    pub phase1_probe: Vec<usize>,
    pub phase2_plan: ConnectionPlan,
    pub phase2_probe: Vec<usize>,
    pub coords_a: Vec<Coord>,
    pub coords_b: Vec<Coord>,
}

impl ProtocolTranscript {
    /// Positions (end A) whose coordinates disagree with their end-B
    /// counterpart.
    pub fn disagreements(&self, cable: &CableInstance) -> Vec<usize> {
        (1..=cable.n)
            .filter(|&a| self.coords_a[a - 1] != self.coords_b[cable.b_of(a) - 1])
            .collect()
    }

    pub fn coords_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.coords_a.iter().all(|c| seen.insert(*c)) && {
            let mut seen = std::collections::HashSet::new();
            self.coords_b.iter().all(|c| seen.insert(*c))
        }
    }
}

/// End B's grouping: row-`j` wires (ascending position) take the row's
/// 1-columns in ascending order; each column's wires, in ascending row order,
/// are cut into consecutive blocks of the column size.
fn plan_b_sets(matrix: &BinaryMatrix, rows_seen: &[usize]) -> (ConnectionPlan, Vec<usize>) {
    let m = matrix.size();
    let mut by_row: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, &j) in rows_seen.iter().enumerate() {
        by_row[j - 1].push(i + 1);
    }
    let mut column_of = vec![0; rows_seen.len()];
    let mut by_col: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (j, wires) in by_row.iter().enumerate() {
        let cols = (0..m).filter(|&k| matrix.get(j, k));
        for (&w, k) in wires.iter().zip(cols) {
            column_of[w - 1] = k + 1;
            by_col[k].push(w);
        }
    }
    let groups = by_col
        .iter()
        .enumerate()
        .flat_map(|(k, wires)| wires.chunks(k + 1).map(<[usize]>::to_vec))
        .collect();
    (ConnectionPlan::new(groups), column_of)
}

/// Runs both phases. Panics if the ends disagree on any wire, which would
/// mean the partition pair was not Knowlton-Graham after all.
pub fn run_protocol(partition: &KgPartition, cable: &CableInstance) -> Result<ProtocolTranscript> {
    if partition.n != cable.n {
        return Err(Error::SizeMismatch {
            partition: partition.n,
            cable: cable.n,
        });
    }
    let violations = kg_violations(partition);
    if !violations.is_empty() {
        let text: Vec<String> = violations.iter().map(Violation::to_string).collect();
        return Err(Error::NotKg(text.join("; ")));
    }
    let matrix = partition_to_matrix(partition)?;

    let phase1_plan = ConnectionPlan::new(partition.a_sets.clone());
    let phase1_probe = probe(&phase1_plan, cable, End::B);

    let (phase2_plan, column_of) = plan_b_sets(&matrix, &phase1_probe);
    let phase2_probe = probe(&phase2_plan, cable, End::A);

    let rows_a = phase1_plan.sizes(cable.n);
    let coords_a: Vec<Coord> = rows_a
        .into_iter()
        .zip(phase2_probe.iter().copied())
        .collect();
    let coords_b: Vec<Coord> = phase1_probe.iter().copied().zip(column_of).collect();

    let transcript = ProtocolTranscript {
        phase1_plan,
        phase1_probe,
        phase2_plan,
        phase2_probe,
        coords_a,
        coords_b,
    };
    let bad = transcript.disagreements(cable);
    assert!(bad.is_empty(), "ends disagree on wires {bad:?}");
    assert!(transcript.coords_injective(), "coordinates are not unique");
    Ok(transcript)
}
