//! Check a `kg-partition/v1` JSON document.
//!
//!     cargo run --example verify_document -- crates/core/tests/data/two_singletons.json

use kgpart::format::partition_from_json;
use kgpart::kg_violations;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .ok_or("usage: verify_document <path>")?;
    let p = partition_from_json(&std::fs::read_to_string(path)?)?;
    let violations = kg_violations(&p);
    if violations.is_empty() {
        println!("valid pair on {} elements, order {}", p.n, p.order());
    } else {
        for v in violations {
            println!("{v}");
        }
    }
    Ok(())
}
