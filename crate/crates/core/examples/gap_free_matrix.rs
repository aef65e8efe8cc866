//! Realize nonincreasing, gap-free row and column sums as a 0-1 matrix.
//!
//!     cargo run --example gap_free_matrix -- 6,6,5,4,3,2 6,6,5,4,3,2

use kgpart::{
    check_lemma2_preconditions, col_sums, gale_ryser_feasible, lemma2_construct, row_sums,
    DegreeSequence,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let r: DegreeSequence = args.next().as_deref().unwrap_or("4,4,3,3").parse()?;
    let c: DegreeSequence = match args.next() {
        Some(text) => text.parse()?,
        None => r.clone(),
    };

    println!("rows    {r}");
    println!("columns {c}");
    println!("gale-ryser feasible: {}", gale_ryser_feasible(&r, &c)?);
    if !check_lemma2_preconditions(&r, &c)? {
        println!("sums are not sorted, gap-free and balanced; nothing to build");
        return Ok(());
    }
    let matrix = lemma2_construct(&r, &c)?;
    print!("{matrix}");
    println!(
        "row sums {}, column sums {}",
        row_sums(&matrix),
        col_sums(&matrix)
    );
    println!("symmetric: {}", matrix.is_symmetric());
    Ok(())
}
