//! The 26-wire example with letter labels, end to end.

use kgpart::fixtures::{letters, twenty_six_wire_matrix};
use kgpart::{make_cable, matrix_to_partition_canonical, row_sums, run_protocol, verify_kg};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let matrix = twenty_six_wire_matrix();
    print!("{matrix}");
    println!("sums {}", row_sums(&matrix));

    let p = matrix_to_partition_canonical(&matrix)?;
    println!("A-sets {}", letters(&p.a_sets).join(" "));
    println!("B-sets {}", letters(&p.b_sets).join(" "));
    println!("valid: {}", verify_kg(&p));

    let t = run_protocol(&p, &make_cable(26, 0))?;
    let upper: Vec<String> = letters(&t.phase2_plan.groups)
        .into_iter()
        .map(|s| s.to_uppercase())
        .collect();
    println!("far end groups {}", upper.join(" "));
    for (w, (j, k)) in t.coords_a.iter().enumerate() {
        print!("{}=({j},{k}) ", kgpart::fixtures::index_letter(w + 1));
    }
    println!();
    Ok(())
}
