//! Build a symmetric Knowlton-Graham pair and show each stage.
//!
//!     cargo run --example construct_partition -- 26 6

use kgpart::{construct_detailed, kg_violations};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(26);
    let m: Option<usize> = args.next().map(|s| s.parse()).transpose()?;

    let c = construct_detailed(n, m)?;
    println!("representation {:?}", c.representation);
    println!("sorted sums realized symmetrically:");
    print!("{}", c.symmetric);
    println!("permuted so row and column j sum to t_j:");
    print!("{}", c.matrix);
    print!("{}", kgpart::format::partition_to_text(&c.partition));
    println!("violations: {}", kg_violations(&c.partition).len());
    Ok(())
}
