//! Knowlton-Graham partition pairs.
//!
//! Two partitions `A` and `B` of `{1..n}` form a Knowlton-Graham pair when,
//! for every `(j, k)`, at most one element sits in an A-set of size `j` and a
//! B-set of size `k`. Such pairs correspond one-to-one (up to labelling) with
//! 0-1 matrices whose row `j` and column `j` sums are multiples of `j`.
//!
//! Pairs of order `m` exist exactly for `m(m+1)/2 <= n <= J(m)`, where
//! `J(m) = sum_j j * floor(m / j)`. [`construct`] builds one for any such
//! `(n, m)`: it splits `n` into a [`Representation`] whose parts form a
//! consecutive run, realizes the sorted parts as a symmetric matrix, permutes
//! it back into index order, and reads the partitions off the ones.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{
    col_sums, lemma2_construct, permute_to_target, row_sums, BinaryMatrix, DegreeSequence,
};

/// Two set partitions of `{1..n}`.
///
/// Sets are kept in canonical order: elements ascending within a set, sets
/// ordered by (cardinality, smallest element).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KgPartition {
    pub n: usize,
    pub a_sets: Vec<Vec<usize>>,
    pub b_sets: Vec<Vec<usize>>,
}

impl KgPartition {
    /// Wraps the sets in canonical order. Does not validate; see
    /// [`verify_kg`].
    pub fn new(n: usize, a_sets: Vec<Vec<usize>>, b_sets: Vec<Vec<usize>>) -> Self {
        let mut p = KgPartition { n, a_sets, b_sets };
        p.canonicalize();
        p
    }

    pub fn canonicalize(&mut self) {
        for sets in [&mut self.a_sets, &mut self.b_sets] {
            for s in sets.iter_mut() {
                s.sort_unstable();
            }
            sets.sort_by_key(|s| (s.len(), s.first().copied()));
        }
    }

    /// Largest set cardinality on either side.
    pub fn order(&self) -> usize {
        self.a_sets
            .iter()
            .chain(&self.b_sets)
            .map(Vec::len)
            .max()
            .unwrap_or(0)
    }

    /// Set size -> number of A-sets of that size.
    pub fn a_size_counts(&self) -> BTreeMap<usize, usize> {
        size_counts(&self.a_sets)
    }

    pub fn b_size_counts(&self) -> BTreeMap<usize, usize> {
        size_counts(&self.b_sets)
    }
}

fn size_counts(sets: &[Vec<usize>]) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for s in sets {
        *counts.entry(s.len()).or_insert(0) += 1;
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "A",
            Side::B => "B",
        })
    }
}

/// A reason a partition pair fails the Knowlton-Graham property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// One side is not an exact partition of `{1..n}`.
    Malformed { side: Side, detail: String },
    /// Two or more elements share A-set size `a_size` and B-set size `b_size`.
    Collision {
        a_size: usize,
        b_size: usize,
        elements: Vec<usize>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Malformed { side, detail } => write!(f, "{side}-sets: {detail}"),
            Violation::Collision {
                a_size,
                b_size,
                elements,
            } => {
                let list: Vec<String> = elements.iter().map(usize::to_string).collect();
                write!(f, "cell ({a_size},{b_size}): elements {}", list.join(", "))
            }
        }
    }
}

/// Checks one side and returns each element's set cardinality
/// (index 0 unused), or a description of what is wrong.
fn set_sizes(n: usize, sets: &[Vec<usize>]) -> std::result::Result<Vec<usize>, String> {
    let mut size_of = vec![0usize; n + 1];
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            return Err(format!("set {} is empty", i + 1));
        }
        for &e in s {
            if e == 0 || e > n {
                return Err(format!("element {e} is outside 1..={n}"));
            }
            if size_of[e] != 0 {
                return Err(format!("element {e} appears more than once"));
            }
            size_of[e] = s.len();
        }
    }
    if let Some(missing) = (1..=n).find(|&e| size_of[e] == 0) {
        return Err(format!("element {missing} is not covered"));
    }
    Ok(size_of)
}

/// Every way `p` fails to be a Knowlton-Graham pair, by direct counting.
///
/// Empty iff [`verify_kg`] is true. Collisions are listed by `(a_size,
/// b_size)` ascending.
pub fn kg_violations(p: &KgPartition) -> Vec<Violation> {
    let mut out = Vec::new();
    let a = set_sizes(p.n, &p.a_sets).map_err(|detail| Violation::Malformed {
        side: Side::A,
        detail,
    });
    let b = set_sizes(p.n, &p.b_sets).map_err(|detail| Violation::Malformed {
        side: Side::B,
        detail,
    });
    let (a, b) = match (a, b) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            out.extend(a.err());
            out.extend(b.err());
            return out;
        }
    };
    let mut cells: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in 1..=p.n {
        cells.entry((a[e], b[e])).or_default().push(e);
    }
    for ((a_size, b_size), elements) in cells {
        if elements.len() > 1 {
            out.push(Violation::Collision {
                a_size,
                b_size,
                elements,
            });
        }
    }
    out
}

pub fn verify_kg(p: &KgPartition) -> bool {
    kg_violations(p).is_empty()
}

/// `J(m) = sum_{j=1..m} j * floor(m / j)`, the largest `n` with a pair of
/// order `m`.
pub fn j_bound(m: usize) -> usize {
    assert!(m >= 1, "order must be positive");
    let direct: usize = (1..=m).map(|j| j * (m / j)).sum();
    let via_remainders = m * m - (1..=m).map(|j| m % j).sum::<usize>();
    assert_eq!(direct, via_remainders, "J({m}) forms disagree");
    direct
}

/// `m(m+1)/2`, the smallest `n` with a pair of order `m`.
pub fn lower_bound(m: usize) -> usize {
    m * (m + 1) / 2
}

/// Every order `m` admitting a pair on `n` elements, ascending.
///
/// Empty exactly for `n` in {2, 5, 9} (and `n = 0`).
pub fn order_range(n: usize) -> Vec<usize> {
    (1..)
        .take_while(|&m| lower_bound(m) <= n)
        .filter(|&m| n <= j_bound(m))
        .collect()
}

fn check_range(n: usize, m: usize) -> Result<()> {
    if m == 0 || n < lower_bound(m) || n > j_bound(m) {
        return Err(Error::OutOfRange {
            n,
            m,
            lower: lower_bound(m),
            upper: if m == 0 { 0 } else { j_bound(m) },
        });
    }
    Ok(())
}

/// A split `n = t_1 + ... + t_m` with each `t_j` a positive multiple of `j`.
///
/// Shape, for a pivot index `s` (0 when `t_j = j` throughout):
/// `t_j = j` above `s`; `t_s = k * s` with `1 < k <= floor(m/s)`;
/// `t_j = j * floor(m/j)` for `1 < j < s`; and `m - s < t_1 <= m` when
/// `s > 1`. The distinct values of `t` are exactly `s+1, ..., m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    pub m: usize,
    pub t: Vec<usize>,
    pub s: usize,
    /// `t_s / s`; `None` when `s == 0`.
    pub k: Option<usize>,
}

impl Representation {
    pub fn total(&self) -> usize {
        self.t.iter().sum()
    }

    /// The parts as a degree sequence (row and column sums in index order).
    pub fn sums(&self) -> DegreeSequence {
        DegreeSequence::new(self.t.clone()).expect("parts never exceed m")
    }

    /// Human-readable list of broken shape constraints; empty when valid.
    pub fn invariant_violations(&self) -> Vec<String> {
        let (m, s, t) = (self.m, self.s, &self.t);
        let mut bad = Vec::new();
        if m == 0 || t.len() != m {
            bad.push(format!("expected {m} parts, got {}", t.len()));
            return bad;
        }
        let at = |j: usize| t[j - 1];
        for j in 1..=m {
            if at(j) == 0 || at(j) % j != 0 {
                bad.push(format!(
                    "t_{j} = {} is not a positive multiple of {j}",
                    at(j)
                ));
            }
            if at(j) > m {
                bad.push(format!("t_{j} = {} exceeds m = {m}", at(j)));
            }
        }
        if s > m / 2 {
            bad.push(format!("s = {s} exceeds m/2"));
        }
        for j in (s + 1)..=m {
            if at(j) != j {
                bad.push(format!("t_{j} = {} but should equal {j}", at(j)));
            }
        }
        match (s, self.k) {
            (0, None) => {}
            (0, Some(k)) => bad.push(format!("k = {k} given with s = 0")),
            (_, None) => bad.push("k missing with s >= 1".into()),
            (s, Some(k)) => {
                if s <= m && at(s) != k * s {
                    bad.push(format!("t_{s} = {} differs from k*s = {}", at(s), k * s));
                }
                if k <= 1 || k > m / s {
                    bad.push(format!("k = {k} outside 1 < k <= {}", m / s));
                }
            }
        }
        for j in 2..s.min(m + 1) {
            if at(j) != j * (m / j) {
                bad.push(format!(
                    "t_{j} = {} but should equal {}",
                    at(j),
                    j * (m / j)
                ));
            }
        }
        if s > 1 && !(m - s < at(1) && at(1) <= m) {
            bad.push(format!("t_1 = {} outside ({}, {m}]", at(1), m - s));
        }
        let mut sorted = t.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] > w[1] + 1) {
            bad.push(format!("sorted parts {sorted:?} skip a value"));
        }
        bad
    }
}

/// Splits `n` into parts for order `m` by descending one unit at a time from
/// `J(m)`.
///
/// At `J(m)`: `s = floor(m/2)`, `k = floor(m/s)`, `t_j = j * floor(m/j)`.
/// Each step subtracts one from `t_1`; if then `s > 1` and `t_1 = m - s`, it
/// resets `t_1 = m` and takes `s` from `t_s`; if then `t_s = s`, `s` drops by
/// one.
pub fn represent(n: usize, m: usize) -> Result<Representation> {
    check_range(n, m)?;
    if m == 1 {
        return Ok(Representation {
            m,
            t: vec![1],
            s: 0,
            k: None,
        });
    }
    if n == lower_bound(m) {
        return Ok(Representation {
            m,
            t: (1..=m).collect(),
            s: 0,
            k: None,
        });
    }

    // 1-based for readability against the shape constraints
    let mut t: Vec<usize> = std::iter::once(0)
        .chain((1..=m).map(|j| j * (m / j)))
        .collect();
    let mut s = m / 2;
    let mut total = j_bound(m);
    while total > n {
        t[1] -= 1;
        total -= 1;
        if s > 1 && t[1] == m - s {
            t[1] = m;
            t[s] -= s;
        }
        if t[s] == s {
            s -= 1;
        }
    }
    let rep = Representation {
        m,
        t: t[1..].to_vec(),
        s,
        k: (s >= 1).then(|| t[s] / s),
    };
    debug_assert!(rep.invariant_violations().is_empty(), "{rep:?}");
    Ok(rep)
}

/// Reads a partition pair off the ones of `matrix`.
///
/// Labels go to the ones in row-major order. Row `j`'s labels are cut into
/// consecutive blocks of `j` (the A-sets) and column `k`'s labels, top to
/// bottom, into blocks of `k` (the B-sets). `labels` must be a permutation
/// of `1..=n` with `n` the number of ones.
pub fn matrix_to_partition(matrix: &BinaryMatrix, labels: &[usize]) -> Result<KgPartition> {
    let m = matrix.size();
    for (name, sums) in [("row", row_sums(matrix)), ("column", col_sums(matrix))] {
        for (i, &v) in sums.values().iter().enumerate() {
            if v % (i + 1) != 0 {
                return Err(Error::NotDivisible {
                    sums: name,
                    index: i + 1,
                    sum: v,
                });
            }
        }
    }
    let n = matrix.count_ones();
    if labels.len() != n {
        return Err(Error::LabelCount {
            expected: n,
            got: labels.len(),
        });
    }
    let distinct: BTreeSet<usize> = labels.iter().copied().collect();
    if distinct.len() != n || labels.iter().any(|&l| l == 0 || l > n) {
        return Err(Error::BadLabels { n });
    }

    let mut label_at = vec![None; m * m];
    let mut next = labels.iter().copied();
    for i in 0..m {
        for j in 0..m {
            if matrix.get(i, j) {
                label_at[i * m + j] = next.next();
            }
        }
    }

    let mut a_sets = Vec::new();
    for i in 0..m {
        let row: Vec<usize> = (0..m).filter_map(|j| label_at[i * m + j]).collect();
        a_sets.extend(row.chunks(i + 1).map(<[usize]>::to_vec));
    }
    let mut b_sets = Vec::new();
    for j in 0..m {
        let col: Vec<usize> = (0..m).filter_map(|i| label_at[i * m + j]).collect();
        b_sets.extend(col.chunks(j + 1).map(<[usize]>::to_vec));
    }
    Ok(KgPartition::new(n, a_sets, b_sets))
}

/// [`matrix_to_partition`] with labels `1..=n`.
pub fn matrix_to_partition_canonical(matrix: &BinaryMatrix) -> Result<KgPartition> {
    let labels: Vec<usize> = (1..=matrix.count_ones()).collect();
    matrix_to_partition(matrix, &labels)
}

/// The `order x order` matrix whose `(j, k)` entry is 1 iff some element is in
/// an A-set of size `j` and a B-set of size `k`.
pub fn partition_to_matrix(p: &KgPartition) -> Result<BinaryMatrix> {
    let violations = kg_violations(p);
    if !violations.is_empty() {
        let text: Vec<String> = violations.iter().map(Violation::to_string).collect();
        return Err(Error::NotKg(text.join("; ")));
    }
    let m = p.order();
    if m == 0 {
        return Err(Error::NotKg("partition is empty".into()));
    }
    let mut a_size = vec![0; p.n + 1];
    for s in &p.a_sets {
        for &e in s {
            a_size[e] = s.len();
        }
    }
    let mut out = BinaryMatrix::zeros(m);
    for s in &p.b_sets {
        for &e in s {
            out.set(a_size[e] - 1, s.len() - 1, true);
        }
    }
    Ok(out)
}

/// Every stage of [`construct`], kept for display and inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub representation: Representation,
    /// Realization of the sorted parts, before permuting back to index order.
    pub symmetric: BinaryMatrix,
    /// Row and column `j` sum to `t_j`.
    pub matrix: BinaryMatrix,
    pub partition: KgPartition,
}

/// Builds a symmetric pair on `n` elements of order `m`, or of the smallest
/// feasible order when `m` is `None`.
pub fn construct_detailed(n: usize, m: Option<usize>) -> Result<Construction> {
    let m = match m {
        Some(m) => m,
        None => *order_range(n).first().ok_or(Error::NoOrder { n })?,
    };
    let representation = represent(n, m)?;
    let sums = representation.sums();
    let (sorted, _) = sums.sorted_descending();
    let symmetric = lemma2_construct(&sorted, &sorted)?;
    let matrix = permute_to_target(&symmetric, &sums, &sums)?;
    let partition = matrix_to_partition_canonical(&matrix)?;
    Ok(Construction {
        representation,
        symmetric,
        matrix,
        partition,
    })
}

pub fn construct(n: usize, m: Option<usize>) -> Result<KgPartition> {
    construct_detailed(n, m).map(|c| c.partition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{letters, twenty_six_wire_matrix, twenty_six_wire_partition};

    #[test]
    fn j_bound_values() {
        assert_eq!(j_bound(1), 1);
        assert_eq!(j_bound(4), 15);
        assert_eq!(j_bound(6), 33);
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(lower_bound(1), 1);
        assert_eq!(lower_bound(3), 6);
        assert_eq!(lower_bound(4), 10);
    }

    #[test]
    fn order_range_values() {
        assert!(order_range(9).is_empty());
        assert!(order_range(2).is_empty());
        assert!(order_range(5).is_empty());
        assert_eq!(order_range(1), vec![1]);
        assert_eq!(order_range(26), vec![6]);
        assert_eq!(order_range(15), vec![4, 5]);
    }

    #[test]
    fn represent_anchor_cases() {
        let top = represent(33, 6).unwrap();
        assert_eq!(top.t, vec![6, 6, 6, 4, 5, 6]);
        assert_eq!((top.s, top.k), (3, Some(2)));

        let tri = represent(21, 6).unwrap();
        assert_eq!(tri.t, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!((tri.s, tri.k), (0, None));

        let one = represent(1, 1).unwrap();
        assert_eq!(one.t, vec![1]);
        assert_eq!(one.s, 0);
    }

    #[test]
    fn represent_descent_to_26() {
        // 33 -> 30: t_1 runs 6,5,4,3 then resets, t_3 drops to 3, s -> 2
        let r30 = represent(30, 6).unwrap();
        assert_eq!((r30.t.clone(), r30.s), (vec![6, 6, 3, 4, 5, 6], 2));
        let r28 = represent(28, 6).unwrap();
        assert_eq!((r28.t.clone(), r28.s), (vec![6, 4, 3, 4, 5, 6], 2));
        let r26 = represent(26, 6).unwrap();
        assert_eq!(r26.t, vec![6, 2, 3, 4, 5, 6]);
        assert_eq!((r26.s, r26.k), (1, Some(6)));
        assert!(r26.invariant_violations().is_empty());
    }

    #[test]
    fn represent_out_of_range() {
        assert!(matches!(
            represent(20, 6),
            Err(Error::OutOfRange {
                lower: 21,
                upper: 33,
                ..
            })
        ));
        assert!(represent(34, 6).is_err());
        assert!(represent(2, 1).is_err());
    }

    #[test]
    fn representation_checker_catches_bad_shapes() {
        let bad = Representation {
            m: 6,
            t: vec![1, 6, 6, 4, 5, 6],
            s: 3,
            k: Some(2),
        };
        assert!(!bad.invariant_violations().is_empty());
    }

    #[test]
    fn worked_example_partition() {
        let m = twenty_six_wire_matrix();
        let p = matrix_to_partition_canonical(&m).unwrap();
        assert_eq!(p, twenty_six_wire_partition());
        assert_eq!(
            letters(&p.a_sets).join(""),
            "{a}{b}{c,d}{e,f}{g,h}{i,j,k}{l,m,n,o}{p,q,r,s,t}{u,v,w,x,y,z}"
        );
        assert_eq!(
            letters(&p.b_sets).join(""),
            "{c}{u}{a,d}{i,l}{p,v}{e,q,w}{f,m,r,x}{g,j,n,s,y}{b,h,k,o,t,z}"
        );
        assert!(verify_kg(&p));
        assert_eq!(partition_to_matrix(&p).unwrap(), m);
    }

    #[test]
    fn small_matrix_to_partition() {
        let one = BinaryMatrix::from_rows(&[[1u8]]).unwrap();
        let p = matrix_to_partition(&one, &[1]).unwrap();
        assert_eq!(p, KgPartition::new(1, vec![vec![1]], vec![vec![1]]));

        // column 2 holds a single one, so it cannot form a B-set of size 2
        let m = BinaryMatrix::from_rows(&[[0u8, 0], [1, 1]]).unwrap();
        assert_eq!(
            matrix_to_partition(&m, &[1, 2]),
            Err(Error::NotDivisible {
                sums: "column",
                index: 2,
                sum: 1
            })
        );

        let m = BinaryMatrix::from_rows(&[[0u8, 1], [1, 1]]).unwrap();
        let p = matrix_to_partition(&m, &[3, 1, 2]).unwrap();
        assert_eq!(p.a_sets, vec![vec![3], vec![1, 2]]);
        assert_eq!(p.b_sets, vec![vec![1], vec![2, 3]]);
        assert!(verify_kg(&p));
    }

    #[test]
    fn matrix_to_partition_errors() {
        let m = BinaryMatrix::from_rows(&[[0u8, 0], [1, 0]]).unwrap();
        assert!(matches!(
            matrix_to_partition(&m, &[1]),
            Err(Error::NotDivisible { index: 2, .. })
        ));
        let one = BinaryMatrix::from_rows(&[[1u8]]).unwrap();
        assert_eq!(
            matrix_to_partition(&one, &[1, 2]),
            Err(Error::LabelCount {
                expected: 1,
                got: 2
            })
        );
        assert_eq!(
            matrix_to_partition(&one, &[7]),
            Err(Error::BadLabels { n: 1 })
        );
    }

    #[test]
    fn partition_to_matrix_cases() {
        let single = KgPartition::new(1, vec![vec![1]], vec![vec![1]]);
        assert_eq!(
            partition_to_matrix(&single).unwrap(),
            BinaryMatrix::from_rows(&[[1u8]]).unwrap()
        );
        let singles = KgPartition::new(
            3,
            vec![vec![1], vec![2], vec![3]],
            vec![vec![1], vec![2], vec![3]],
        );
        assert!(matches!(
            partition_to_matrix(&singles),
            Err(Error::NotKg(_))
        ));
    }

    #[test]
    fn verify_cases() {
        assert!(verify_kg(&twenty_six_wire_partition()));
        let two = KgPartition::new(2, vec![vec![1], vec![2]], vec![vec![1], vec![2]]);
        assert!(!verify_kg(&two));
        assert_eq!(
            kg_violations(&two),
            vec![Violation::Collision {
                a_size: 1,
                b_size: 1,
                elements: vec![1, 2]
            }]
        );
        assert_eq!(
            kg_violations(&two)[0].to_string(),
            "cell (1,1): elements 1, 2"
        );
        assert!(verify_kg(&KgPartition::new(
            1,
            vec![vec![1]],
            vec![vec![1]]
        )));
    }

    #[test]
    fn verify_rejects_malformed() {
        let dup = KgPartition::new(2, vec![vec![1, 1]], vec![vec![1, 2]]);
        assert!(matches!(
            kg_violations(&dup)[..],
            [Violation::Malformed { side: Side::A, .. }]
        ));
        let gap = KgPartition::new(3, vec![vec![1, 2]], vec![vec![1, 2, 3]]);
        assert!(!verify_kg(&gap));
        let outside = KgPartition::new(1, vec![vec![1]], vec![vec![2]]);
        assert!(!verify_kg(&outside));
        let empty = KgPartition::new(1, vec![vec![1], vec![]], vec![vec![1]]);
        assert!(!verify_kg(&empty));
    }

    #[test]
    fn construct_small_cases() {
        let one = construct(1, None).unwrap();
        assert_eq!(one, KgPartition::new(1, vec![vec![1]], vec![vec![1]]));
        assert_eq!(construct(5, None), Err(Error::NoOrder { n: 5 }));
        assert!(matches!(
            construct(26, Some(5)),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn construct_26() {
        let c = construct_detailed(26, Some(6)).unwrap();
        assert!(c.symmetric.is_symmetric());
        assert_eq!(c.representation.t, vec![6, 2, 3, 4, 5, 6]);
        assert_eq!(row_sums(&c.matrix).values(), &[6, 2, 3, 4, 5, 6]);
        let p = &c.partition;
        assert!(verify_kg(p));
        assert_eq!(p.order(), 6);
        let expected: BTreeMap<usize, usize> = [(1, 6), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1)]
            .into_iter()
            .collect();
        assert_eq!(p.a_size_counts(), expected);
        assert_eq!(p.b_size_counts(), expected);
    }
}
