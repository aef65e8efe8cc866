//! Identify the wires of a scrambled cable from both ends.
//!
//!     cargo run --example cable_simulation -- 26 42

use kgpart::{construct, make_cable, run_protocol};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(26);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(42);

    let partition = construct(n, None)?;
    let cable = make_cable(n, seed);
    let transcript = run_protocol(&partition, &cable)?;
    print!(
        "{}",
        kgpart::format::transcript_to_text(&transcript, &cable)
    );
    println!(
        "{} wires, {} disagreements",
        n,
        transcript.disagreements(&cable).len()
    );
    Ok(())
}
