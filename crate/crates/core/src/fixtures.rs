//! The 26-wire worked example: a symmetric 6x6 matrix with sums
//! `(2,6,3,4,5,6)` and the partition pair obtained by labelling its ones
//! `a..z` in row-major order.
//!
//! Letters map to elements by alphabet position (`a` = 1, ..., `z` = 26).

use crate::matrix::BinaryMatrix;
use crate::partition::KgPartition;

pub fn twenty_six_wire_matrix() -> BinaryMatrix {
    BinaryMatrix::from_rows(&[
        [0u8, 1, 0, 0, 0, 1],
        [1, 1, 1, 1, 1, 1],
        [0, 1, 0, 0, 1, 1],
        [0, 1, 0, 1, 1, 1],
        [0, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1],
    ])
    .expect("fixture matrix is square")
}

/// Element number of a lowercase letter.
pub fn letter_index(ch: char) -> usize {
    assert!(ch.is_ascii_lowercase(), "not a lowercase letter: {ch:?}");
    (ch as u8 - b'a') as usize + 1
}

/// Lowercase letter of an element in `1..=26`.
pub fn index_letter(i: usize) -> char {
    assert!((1..=26).contains(&i), "no letter for element {i}");
    (b'a' + (i - 1) as u8) as char
}

fn sets(words: &[&str]) -> Vec<Vec<usize>> {
    words
        .iter()
        .map(|w| w.chars().map(letter_index).collect())
        .collect()
}

/// Row five holds five ones, so its A-set is `pqrst`.
pub fn twenty_six_wire_partition() -> KgPartition {
    KgPartition::new(
        26,
        sets(&["a", "b", "cd", "ef", "gh", "ijk", "lmno", "pqrst", "uvwxyz"]),
        sets(&["c", "u", "ad", "il", "pv", "eqw", "fmrx", "gjnsy", "bhkotz"]),
    )
}

/// Renders sets as letter groups, e.g. `{a,d}`.
pub fn letters(sets: &[Vec<usize>]) -> Vec<String> {
    sets.iter()
        .map(|s| {
            let inner: Vec<String> = s.iter().map(|&e| index_letter(e).to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect()
}
