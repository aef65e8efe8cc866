//! Row sums that are positive multiples of their index are not enough:
//! (1,6,6,4,5,6) has no column partner with the same divisibility.

use kgpart::{gale_ryser_feasible, DegreeSequence};

fn divisible_columns(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for j in 1..=m {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..=m / j).map(move |q| {
                    let mut next = prefix.clone();
                    next.push(q * j);
                    next
                })
            })
            .collect();
    }
    out
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rows = DegreeSequence::new(vec![1, 6, 6, 4, 5, 6])?;
    let candidates = divisible_columns(6);
    let balanced: Vec<_> = candidates
        .iter()
        .filter(|c| c.iter().sum::<usize>() == rows.total())
        .collect();
    let mut feasible = 0;
    for c in &balanced {
        if gale_ryser_feasible(&rows, &DegreeSequence::new(c.to_vec())?)? {
            feasible += 1;
            println!("feasible: {c:?}");
        }
    }
    println!(
        "{} divisible column sequences, {} with total {}, {feasible} feasible",
        candidates.len(),
        balanced.len(),
        rows.total()
    );
    Ok(())
}
