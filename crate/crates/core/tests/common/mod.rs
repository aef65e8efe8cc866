#![allow(dead_code)]

//! Brute-force helpers shared by the integration and acceptance tests.
//! Nothing here calls into the constructors it is used to check.

/// Every nonincreasing sequence of length `m`, values in `0..=m`, that never
/// drops by more than one between neighbours.
pub fn gap_free_sequences(m: usize) -> Vec<Vec<usize>> {
    all_sequences(m)
        .into_iter()
        .filter(|s| s.windows(2).all(|w| w[0] >= w[1] && w[0] <= w[1] + 1))
        .collect()
}

/// Every sequence in `0..=m` of length `m`.
pub fn all_sequences(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..=m).map(move |v| {
                    let mut s = prefix.clone();
                    s.push(v);
                    s
                })
            })
            .collect();
    }
    out
}

/// Row and column sums of the `m x m` matrix whose cell `(i, j)` is bit
/// `i * m + j` of `mask`.
pub fn mask_sums(m: usize, mask: u64) -> (Vec<usize>, Vec<usize>) {
    let mut rows = vec![0; m];
    let mut cols = vec![0; m];
    for cell in 0..m * m {
        if (mask >> cell) & 1 == 1 {
            rows[cell / m] += 1;
            cols[cell % m] += 1;
        }
    }
    (rows, cols)
}

/// Whether any `m x m` 0-1 matrix has exactly these sums, by scanning all
/// `2^(m*m)` of them. Practical for `m <= 4`.
pub fn brute_force_realizable(r: &[usize], c: &[usize]) -> bool {
    let m = r.len();
    (0u64..(1 << (m * m))).any(|mask| {
        let (rows, cols) = mask_sums(m, mask);
        rows == r && cols == c
    })
}

/// Every `(c_1..c_m)` with `c_j` a multiple of `j` and `0 <= c_j <= m`.
pub fn divisible_sequences(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for j in 1..=m {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..=m / j).map(move |q| {
                    let mut s = prefix.clone();
                    s.push(q * j);
                    s
                })
            })
            .collect();
    }
    out
}

pub fn binomial2(x: usize) -> usize {
    x * (x - 1) / 2
}
