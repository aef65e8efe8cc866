//! Acceptance criteria. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits nonzero if any fails.

mod common;

use std::time::Instant;

use common::{binomial2, divisible_sequences, gap_free_sequences, mask_sums};
use kgpart::fixtures::{twenty_six_wire_matrix, twenty_six_wire_partition};
use kgpart::{
    check_lemma2_preconditions, col_sums, construct_detailed, enumerate_matrices,
    gale_ryser_feasible, j_bound, lower_bound, make_cable, order_range, partition_to_matrix,
    represent, row_sums, run_protocol, verify_kg, DegreeSequence,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn seq(v: &[usize]) -> DegreeSequence {
    DegreeSequence::new(v.to_vec()).expect("valid sequence")
}

fn bounds_table() -> Check {
    let expected = [(1, 1), (3, 4), (6, 8), (10, 15)];
    for (m, &(lo, hi)) in (1..=4).zip(&expected) {
        let got = (lower_bound(m), j_bound(m));
        ensure(got == (lo, hi), || {
            format!("m = {m}: got {got:?}, want {:?}", (lo, hi))
        })?;
    }
    Ok("m = 1..4 ranges exact".into())
}

fn impossibility() -> Check {
    let empty: Vec<usize> = (1..=1000).filter(|&n| order_range(n).is_empty()).collect();
    ensure(empty == [2, 5, 9], || format!("empty for {empty:?}"))?;
    Ok("only n = 2, 5, 9 in 1..=1000".into())
}

fn full_range_construction() -> Check {
    let mut pairs = 0;
    for n in (1..=300).filter(|n| ![2, 5, 9].contains(n)) {
        for m in order_range(n) {
            let c = construct_detailed(n, Some(m)).map_err(|e| format!("n = {n}, m = {m}: {e}"))?;
            ensure(verify_kg(&c.partition), || {
                format!("n = {n}, m = {m}: not KG")
            })?;
            ensure(c.partition.order() == m, || {
                format!("n = {n}, m = {m}: order {}", c.partition.order())
            })?;
            ensure(c.symmetric.is_symmetric(), || {
                format!("n = {n}, m = {m}: asymmetric")
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (n, m) pairs verified"))
}

fn lemma2_oracle() -> Check {
    let mut pairs = 0;
    for m in 1..=4 {
        let seqs = gap_free_sequences(m);
        for r in &seqs {
            for c in &seqs {
                let (r, c) = (seq(r), seq(c));
                if !check_lemma2_preconditions(&r, &c).map_err(|e| e.to_string())? {
                    continue;
                }
                let out = kgpart::lemma2_construct(&r, &c).map_err(|e| e.to_string())?;
                ensure(row_sums(&out) == r && col_sums(&out) == c, || {
                    format!("sums differ for r = {r}, c = {c}")
                })?;
                let found = enumerate_matrices(&r, &c, 1).map_err(|e| e.to_string())?;
                ensure(!found.is_empty(), || {
                    format!("enumerator disagrees on r = {r}, c = {c}")
                })?;
                pairs += 1;
            }
        }
    }
    // necessity for m <= 3, both with positive multiples (as stated) and
    // with zero allowed
    for m in 1..=3 {
        let (lower, upper) = (lower_bound(m), j_bound(m));
        for n in (1..=upper + 2).filter(|n| !(lower..=upper).contains(n)) {
            for mask in 0u64..(1 << (m * m)) {
                let (r, c) = mask_sums(m, mask);
                if r.iter().sum::<usize>() != n || r[m - 1] + c[m - 1] == 0 {
                    continue;
                }
                let multiples = (0..m).all(|j| r[j] % (j + 1) == 0 && c[j] % (j + 1) == 0);
                let positive = r.iter().chain(&c).all(|&v| v > 0);
                ensure(!multiples, || {
                    format!("m = {m}, n = {n}: matrix with sums {r:?}/{c:?} (positive: {positive})")
                })?;
            }
        }
    }
    Ok(format!("{pairs} hypothesis pairs, necessity for m <= 3"))
}

fn counterexample() -> Check {
    let r = seq(&[1, 6, 6, 4, 5, 6]);
    let columns = divisible_sequences(6);
    for c in &columns {
        let c = seq(c);
        ensure(
            !gale_ryser_feasible(&r, &c).map_err(|e| e.to_string())?,
            || format!("c = {c} realizes (1,6,6,4,5,6)"),
        )?;
    }
    Ok(format!(
        "{} divisible column sequences rejected",
        columns.len()
    ))
}

fn worked_example() -> Check {
    let fixture = twenty_six_wire_partition();
    let matrix = partition_to_matrix(&fixture).map_err(|e| e.to_string())?;
    ensure(matrix == twenty_six_wire_matrix(), || {
        format!("matrix differs:\n{matrix}")
    })?;
    ensure(row_sums(&matrix) == seq(&[2, 6, 3, 4, 5, 6]), || {
        "row sums differ".into()
    })?;
    let rep = represent(26, 6).map_err(|e| e.to_string())?;
    ensure(rep.total() == 26, || format!("total {}", rep.total()))?;
    let bad = rep.invariant_violations();
    ensure(bad.is_empty(), || format!("{bad:?}"))?;
    let c = construct_detailed(26, Some(6)).map_err(|e| e.to_string())?;
    ensure(verify_kg(&c.partition), || "construct(26, 6) not KG".into())?;
    Ok(format!("t = {:?}", rep.t))
}

fn asymptotics() -> Check {
    let ratio = j_bound(1000) as f64 / binomial2(1002) as f64;
    let limit = std::f64::consts::PI.powi(2) / 6.0;
    ensure((ratio - limit).abs() <= 0.02, || {
        format!("ratio {ratio} vs {limit}")
    })?;
    for m in 4..=100 {
        ensure(j_bound(m) >= binomial2(m + 2), || format!("gap at m = {m}"))?;
    }
    Ok(format!(
        "J(1000)/C(1002,2) = {ratio:.4}, |diff| = {:.4}",
        (ratio - limit).abs()
    ))
}

fn protocol_soundness() -> Check {
    let mut runs = 0;
    for n in (1..=120).filter(|n| ![2, 5, 9].contains(n)) {
        let c = construct_detailed(n, None).map_err(|e| format!("n = {n}: {e}"))?;
        for seed in [0, 1, 2] {
            let cable = make_cable(n, seed);
            let t = run_protocol(&c.partition, &cable).map_err(|e| format!("n = {n}: {e}"))?;
            let bad = t.disagreements(&cable);
            ensure(bad.is_empty(), || {
                format!("n = {n}, seed = {seed}: wires {bad:?}")
            })?;
            ensure(t.coords_injective(), || {
                format!("n = {n}, seed = {seed}: repeated coords")
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} transcripts consistent"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("bounds table for m = 1..4", bounds_table),
        ("impossibility exactly at n = 2, 5, 9", impossibility),
        ("full-range construction n <= 300", full_range_construction),
        (
            "gap-free constructor vs enumerator, necessity",
            lemma2_oracle,
        ),
        ("row sums (1,6,6,4,5,6) infeasible", counterexample),
        ("26-wire worked example", worked_example),
        ("asymptotics and no gaps from m = 4", asymptotics),
        ("protocol soundness n <= 120", protocol_soundness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail} ({elapsed:.2?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
