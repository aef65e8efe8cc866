//! Square 0-1 matrices with prescribed row and column sums.
//!
//! The centerpiece is [`lemma2_construct`], a recursive constructor for
//! nonincreasing, gap-free sum sequences: the first row takes `r_1` ones and
//! the first column takes `c_1` ones, the remaining sums are decremented to
//! match, re-sorted, and the `(m-1) x (m-1)` remainder is built the same way.
//! When the row and column sums coincide the result is symmetric.
//!
//! [`gale_ryser_feasible`] and [`enumerate_matrices`] are independent
//! feasibility oracles. They do not share code with the constructor.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest side length accepted by [`enumerate_matrices`].
pub const ENUMERATION_MAX_M: usize = 5;

/// Row or column sums of an `m x m` 0-1 matrix.
///
/// Every value lies in `0..=m` where `m` is the sequence length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        let len = values.len();
        if let Some((position, &value)) = values.iter().enumerate().find(|(_, &v)| v > len) {
            return Err(Error::ValueTooLarge {
                position,
                value,
                len,
            });
        }
        Ok(DegreeSequence(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Consecutive values never drop by more than one.
    pub fn is_gap_free(&self) -> bool {
        self.0.windows(2).all(|w| w[1] + 1 >= w[0])
    }

    /// Stable descending sort, returning the sorted sequence and the
    /// permutation that produced it.
    pub fn sorted_descending(&self) -> (DegreeSequence, SortPermutation) {
        let perm = SortPermutation::stable_descending(&self.0);
        (DegreeSequence(perm.apply(&self.0)), perm)
    }

    /// The conjugate partition truncated to `width` parts: entry `k` counts
    /// values that are at least `k + 1`.
    pub fn conjugate(&self, width: usize) -> Vec<usize> {
        (1..=width)
            .map(|k| self.0.iter().filter(|&&v| v >= k).count())
            .collect()
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        DegreeSequence::new(values)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(seq: DegreeSequence) -> Self {
        seq.0
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Parses comma-separated decimal integers, e.g. `2,6,3,4,5,6`.
    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .trim()
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad degree value {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::new(values)
    }
}

/// Maps sorted positions back to original positions (0-based).
///
/// `forward()[i]` is the original index of the element that lands at sorted
/// position `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortPermutation {
    forward: Vec<usize>,
}

impl SortPermutation {
    pub fn identity(m: usize) -> Self {
        SortPermutation {
            forward: (0..m).collect(),
        }
    }

    /// Stable descending order: equal values keep their relative order.
    pub fn stable_descending(values: &[usize]) -> Self {
        let mut forward: Vec<usize> = (0..values.len()).collect();
        forward.sort_by(|&a, &b| values[b].cmp(&values[a]));
        SortPermutation { forward }
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// `inverse()[original] == sorted position`.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.forward.len()];
        for (sorted, &orig) in self.forward.iter().enumerate() {
            inv[orig] = sorted;
        }
        inv
    }

    /// Reorders `values` into sorted position order.
    pub fn apply<T: Clone>(&self, values: &[T]) -> Vec<T> {
        self.forward.iter().map(|&i| values[i].clone()).collect()
    }
}

/// Dense `m x m` matrix of zeros and ones.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct BinaryMatrix {
    m: usize,
    cells: Vec<bool>,
}

impl BinaryMatrix {
    /// All-zero matrix. Panics if `m == 0`.
    pub fn zeros(m: usize) -> Self {
        assert!(m >= 1, "matrix side must be positive");
        BinaryMatrix {
            m,
            cells: vec![false; m * m],
        }
    }

    pub fn identity(m: usize) -> Self {
        let mut out = BinaryMatrix::zeros(m);
        for i in 0..m {
            out.set(i, i, true);
        }
        out
    }

    /// Builds a matrix from rows of 0/1 values. Rows must be square and
    /// contain only 0 or 1.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::Parse("matrix has no rows".into()));
        }
        let mut cells = Vec::with_capacity(m * m);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != m {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {m}",
                    i + 1,
                    row.len()
                )));
            }
            for &v in row {
                match v {
                    0 => cells.push(false),
                    1 => cells.push(true),
                    other => return Err(Error::Parse(format!("entry {other} is not 0 or 1"))),
                }
            }
        }
        Ok(BinaryMatrix { m, cells })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cells[row * self.m + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.cells[row * self.m + col] = value;
    }

    pub fn count_ones(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    pub fn row(&self, row: usize) -> &[bool] {
        &self.cells[row * self.m..(row + 1) * self.m]
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(self.m);
        for i in 0..self.m {
            for j in 0..self.m {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.m).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rows as vectors of 0/1.
    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.m)
            .map(|i| self.row(i).iter().map(|&b| b as u8).collect())
            .collect()
    }

    /// Rearranges rows and columns: output row `i` is input row
    /// `row_source[i]`, likewise for columns.
    pub fn permuted(&self, row_source: &[usize], col_source: &[usize]) -> BinaryMatrix {
        let mut out = BinaryMatrix::zeros(self.m);
        for (i, &si) in row_source.iter().enumerate() {
            for (j, &sj) in col_source.iter().enumerate() {
                out.set(i, j, self.get(si, sj));
            }
        }
        out
    }
}

impl fmt::Display for BinaryMatrix {
    /// One line per row, `1` for one and `.` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            for &b in self.row(i) {
                f.write_str(if b { "1" } else { "." })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.m, self.m)?;
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BinaryMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.strip_suffix('\n').unwrap_or(s);
        let rows = body
            .split('\n')
            .map(|line| {
                line.chars()
                    .map(|ch| match ch {
                        '1' => Ok(1u8),
                        '.' => Ok(0u8),
                        other => Err(Error::Parse(format!("unexpected character {other:?}"))),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() == 1 && rows[0].is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        BinaryMatrix::from_rows(&rows)
    }
}

impl TryFrom<Vec<String>> for BinaryMatrix {
    type Error = Error;

    fn try_from(lines: Vec<String>) -> Result<Self> {
        let mut text = lines.join("\n");
        text.push('\n');
        text.parse()
    }
}

impl From<BinaryMatrix> for Vec<String> {
    fn from(matrix: BinaryMatrix) -> Self {
        matrix.to_string().lines().map(str::to_owned).collect()
    }
}

pub fn row_sums(matrix: &BinaryMatrix) -> DegreeSequence {
    let sums = (0..matrix.m)
        .map(|i| matrix.row(i).iter().filter(|&&b| b).count())
        .collect();
    DegreeSequence(sums)
}

pub fn col_sums(matrix: &BinaryMatrix) -> DegreeSequence {
    let sums = (0..matrix.m)
        .map(|j| (0..matrix.m).filter(|&i| matrix.get(i, j)).count())
        .collect();
    DegreeSequence(sums)
}

fn ensure_same_len(r: &DegreeSequence, c: &DegreeSequence) -> Result<()> {
    if r.len() != c.len() {
        return Err(Error::LengthMismatch {
            left: r.len(),
            right: c.len(),
        });
    }
    Ok(())
}

/// Checks the hypotheses of the gap-free constructor: equal totals, both
/// sequences nonincreasing with values in `0..=m`, and no step down by more
/// than one.
///
/// The test is order-sensitive. An unsorted sequence fails even if some
/// matrix realizes it; sorting is the caller's job.
pub fn check_lemma2_preconditions(r: &DegreeSequence, c: &DegreeSequence) -> Result<bool> {
    ensure_same_len(r, c)?;
    Ok(r.total() == c.total()
        && r.is_nonincreasing()
        && c.is_nonincreasing()
        && r.is_gap_free()
        && c.is_gap_free())
}

/// Builds an `m x m` 0-1 matrix with row sums `r` and column sums `c`.
///
/// Fails with [`Error::PreconditionFailed`] unless
/// [`check_lemma2_preconditions`] holds. Output is symmetric when `r == c`.
pub fn lemma2_construct(r: &DegreeSequence, c: &DegreeSequence) -> Result<BinaryMatrix> {
    if !check_lemma2_preconditions(r, c)? {
        return Err(Error::PreconditionFailed);
    }
    Ok(realize(r.values(), c.values()))
}

fn realize(r: &[usize], c: &[usize]) -> BinaryMatrix {
    let m = r.len();
    let mut out = BinaryMatrix::zeros(m);
    if m == 1 {
        out.set(0, 0, r[0] == 1);
        return out;
    }

    let (p, q) = (r[0], c[0]);
    if p > 0 {
        out.set(0, 0, true);
        for k in 1..p {
            out.set(0, k, true);
        }
        for j in 1..q {
            out.set(j, 0, true);
        }
    }

    // rows 2..=q lose the one placed in column 1, columns 2..=p likewise
    let reduced_r: Vec<usize> = r[1..]
        .iter()
        .enumerate()
        .map(|(i, &v)| if i + 1 < q { v - 1 } else { v })
        .collect();
    let reduced_c: Vec<usize> = c[1..]
        .iter()
        .enumerate()
        .map(|(i, &v)| if i + 1 < p { v - 1 } else { v })
        .collect();

    let row_perm = SortPermutation::stable_descending(&reduced_r);
    let col_perm = SortPermutation::stable_descending(&reduced_c);
    let sorted_r = row_perm.apply(&reduced_r);
    let sorted_c = col_perm.apply(&reduced_c);

    let sub_r = DegreeSequence::new(sorted_r.clone());
    let sub_c = DegreeSequence::new(sorted_c.clone());
    let holds = match (&sub_r, &sub_c) {
        (Ok(sr), Ok(sc)) => check_lemma2_preconditions(sr, sc).unwrap_or(false),
        _ => false,
    };
    assert!(
        holds,
        "reduced sums {sorted_r:?} / {sorted_c:?} lost the gap-free property"
    );

    let sub = realize(&sorted_r, &sorted_c);
    for (i, &oi) in row_perm.forward().iter().enumerate() {
        for (j, &oj) in col_perm.forward().iter().enumerate() {
            if sub.get(i, j) {
                out.set(oi + 1, oj + 1, true);
            }
        }
    }
    out
}

/// For each target position, the index of the source position that feeds
/// it. Equal values are matched in order of appearance.
fn stable_match(source: &[usize], target: &[usize]) -> Option<Vec<usize>> {
    let mut by_value: BTreeMap<usize, VecDeque<usize>> = BTreeMap::new();
    for (i, &v) in source.iter().enumerate() {
        by_value.entry(v).or_default().push_back(i);
    }
    target
        .iter()
        .map(|v| by_value.get_mut(v).and_then(VecDeque::pop_front))
        .collect()
}

/// Permutes rows and columns of `matrix` so its sums equal `target_r` and
/// `target_c` exactly, position by position.
///
/// The targets must be rearrangements of the current sums; rows (columns)
/// with equal sums keep their relative order.
pub fn permute_to_target(
    matrix: &BinaryMatrix,
    target_r: &DegreeSequence,
    target_c: &DegreeSequence,
) -> Result<BinaryMatrix> {
    let m = matrix.size();
    for t in [target_r, target_c] {
        if t.len() != m {
            return Err(Error::LengthMismatch {
                left: m,
                right: t.len(),
            });
        }
    }
    let rows =
        stable_match(row_sums(matrix).values(), target_r.values()).ok_or(Error::TargetMismatch)?;
    let cols =
        stable_match(col_sums(matrix).values(), target_c.values()).ok_or(Error::TargetMismatch)?;
    Ok(matrix.permuted(&rows, &cols))
}

/// Gale-Ryser test: a 0-1 matrix with row sums `r` and column sums `c`
/// exists iff the totals agree and every prefix of `c` sorted descending is
/// bounded by the matching prefix of the conjugate of `r`.
pub fn gale_ryser_feasible(r: &DegreeSequence, c: &DegreeSequence) -> Result<bool> {
    ensure_same_len(r, c)?;
    if r.total() != c.total() {
        return Ok(false);
    }
    let mut cs = c.values().to_vec();
    cs.sort_unstable_by(|a, b| b.cmp(a));
    let conj = r.conjugate(c.len());
    let (mut lhs, mut rhs) = (0, 0);
    for (ck, rk) in cs.iter().zip(&conj) {
        lhs += ck;
        rhs += rk;
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exhaustive backtracking over rows: every 0-1 matrix with sums `r` and
/// `c`, at most `limit` of them, in increasing order of row bit patterns.
///
/// Only for small `m` (at most [`ENUMERATION_MAX_M`]).
pub fn enumerate_matrices(
    r: &DegreeSequence,
    c: &DegreeSequence,
    limit: usize,
) -> Result<Vec<BinaryMatrix>> {
    ensure_same_len(r, c)?;
    let m = r.len();
    if m > ENUMERATION_MAX_M {
        return Err(Error::OracleTooLarge {
            m,
            max: ENUMERATION_MAX_M,
        });
    }
    let mut found = Vec::new();
    if limit == 0 || r.total() != c.total() {
        return Ok(found);
    }
    let mut remaining = c.values().to_vec();
    let mut chosen = Vec::with_capacity(m);
    backtrack(r.values(), &mut remaining, &mut chosen, limit, &mut found);
    Ok(found)
}

fn backtrack(
    r: &[usize],
    remaining: &mut [usize],
    chosen: &mut Vec<u32>,
    limit: usize,
    found: &mut Vec<BinaryMatrix>,
) {
    let m = r.len();
    let row = chosen.len();
    if row == m {
        if remaining.iter().all(|&v| v == 0) {
            let rows: Vec<Vec<u8>> = chosen
                .iter()
                .map(|&mask| (0..m).map(|j| ((mask >> j) & 1) as u8).collect())
                .collect();
            found.push(BinaryMatrix::from_rows(&rows).expect("enumerated rows are square"));
        }
        return;
    }
    let rows_left = m - row;
    if remaining.iter().any(|&v| v > rows_left) {
        return;
    }
    for mask in 0u32..(1 << m) {
        if found.len() >= limit {
            return;
        }
        if mask.count_ones() as usize != r[row] {
            continue;
        }
        if (0..m).any(|j| (mask >> j) & 1 == 1 && remaining[j] == 0) {
            continue;
        }
        for (j, slot) in remaining.iter_mut().enumerate() {
            if (mask >> j) & 1 == 1 {
                *slot -= 1;
            }
        }
        chosen.push(mask);
        backtrack(r, remaining, chosen, limit, found);
        chosen.pop();
        for (j, slot) in remaining.iter_mut().enumerate() {
            if (mask >> j) & 1 == 1 {
                *slot += 1;
            }
        }
    }
}
