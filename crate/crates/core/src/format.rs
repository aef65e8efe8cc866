//! Structured (JSON) documents and plain-text renderings.
//!
//! Every JSON document carries a `schema` tag:
//!
//! * `kg-partition/v1`: `n`, `a_sets`, `b_sets` (1-based integer lists in
//!   canonical order). A construction adds `order`, `representation` and
//!   `matrix` (grid lines); readers ignore those extras.
//! * `kg-transcript/v1`: `n`, `seed`, `wiring`, then the six transcript
//!   fields. Per-position arrays are indexed by position minus one.
//! * `kg-bounds/v1`: `rows`, each `{m, lower, upper}`.

use serde::{Deserialize, Serialize};

use crate::cable::{CableInstance, ProtocolTranscript};
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::partition::{j_bound, lower_bound, Construction, KgPartition, Representation};

pub const PARTITION_SCHEMA: &str = "kg-partition/v1";
pub const TRANSCRIPT_SCHEMA: &str = "kg-transcript/v1";
pub const BOUNDS_SCHEMA: &str = "kg-bounds/v1";

#[derive(Debug, Serialize, Deserialize)]
struct PartitionDocument {
    schema: String,
    n: usize,
    a_sets: Vec<Vec<usize>>,
    b_sets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    representation: Option<Representation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<BinaryMatrix>,
}

impl PartitionDocument {
    fn bare(p: &KgPartition) -> Self {
        PartitionDocument {
            schema: PARTITION_SCHEMA.into(),
            n: p.n,
            a_sets: p.a_sets.clone(),
            b_sets: p.b_sets.clone(),
            order: None,
            representation: None,
            matrix: None,
        }
    }
}

fn to_pretty<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents always serialize");
    out.push('\n');
    out
}

fn check_schema(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(Error::Parse(format!(
            "schema {found:?} is not {expected:?}"
        )));
    }
    Ok(())
}

pub fn partition_to_json(p: &KgPartition) -> String {
    to_pretty(&PartitionDocument::bare(p))
}

pub fn construction_to_json(c: &Construction) -> String {
    let mut doc = PartitionDocument::bare(&c.partition);
    doc.order = Some(c.partition.order());
    doc.representation = Some(c.representation.clone());
    doc.matrix = Some(c.matrix.clone());
    to_pretty(&doc)
}

/// Parses a `kg-partition/v1` document. Set order is canonicalized but the
/// sets are not validated.
pub fn partition_from_json(text: &str) -> Result<KgPartition> {
    let doc: PartitionDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    check_schema(&doc.schema, PARTITION_SCHEMA)?;
    Ok(KgPartition::new(doc.n, doc.a_sets, doc.b_sets))
}

#[derive(Debug, Serialize, Deserialize)]
struct TranscriptDocument {
    schema: String,
    n: usize,
    seed: u64,
    wiring: Vec<usize>,
    #[serde(flatten)]
    transcript: ProtocolTranscript,
}

pub fn transcript_to_json(t: &ProtocolTranscript, cable: &CableInstance) -> String {
    to_pretty(&TranscriptDocument {
        schema: TRANSCRIPT_SCHEMA.into(),
        n: cable.n(),
        seed: cable.seed(),
        wiring: cable.wiring().to_vec(),
        transcript: t.clone(),
    })
}

pub fn transcript_from_json(text: &str) -> Result<ProtocolTranscript> {
    let doc: TranscriptDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    check_schema(&doc.schema, TRANSCRIPT_SCHEMA)?;
    Ok(doc.transcript)
}

#[derive(Debug, Serialize)]
struct BoundsRow {
    m: usize,
    lower: usize,
    upper: usize,
}

#[derive(Debug, Serialize)]
struct BoundsDocument {
    schema: &'static str,
    rows: Vec<BoundsRow>,
}

/// `(m, m(m+1)/2, J(m))` for `m = 1..=max_m`.
pub fn bounds_table(max_m: usize) -> Vec<(usize, usize, usize)> {
    (1..=max_m)
        .map(|m| (m, lower_bound(m), j_bound(m)))
        .collect()
}

pub fn bounds_to_json(max_m: usize) -> String {
    let rows = bounds_table(max_m)
        .into_iter()
        .map(|(m, lower, upper)| BoundsRow { m, lower, upper })
        .collect();
    to_pretty(&BoundsDocument {
        schema: BOUNDS_SCHEMA,
        rows,
    })
}

pub fn bounds_to_text(max_m: usize) -> String {
    let mut out = String::from("m\tlower\tJ(m)\n");
    for (m, lower, upper) in bounds_table(max_m) {
        out.push_str(&format!("{m}\t{lower}\t{upper}\n"));
    }
    out
}

fn sets_line(sets: &[Vec<usize>]) -> String {
    sets.iter()
        .map(|s| {
            let inner: Vec<String> = s.iter().map(usize::to_string).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn partition_to_text(p: &KgPartition) -> String {
    format!(
        "A-sets: {}\nB-sets: {}\n",
        sets_line(&p.a_sets),
        sets_line(&p.b_sets)
    )
}

pub fn construction_to_text(c: &Construction) -> String {
    let rep = &c.representation;
    let t: Vec<String> = rep.t.iter().map(usize::to_string).collect();
    let mut out = format!("n = {}, order m = {}\n", c.partition.n, rep.m);
    out.push_str(&format!("t = {} (s = {}", t.join(","), rep.s));
    if let Some(k) = rep.k {
        out.push_str(&format!(", k = {k}"));
    }
    out.push_str(")\nmatrix:\n");
    out.push_str(&c.matrix.to_string());
    out.push_str(&partition_to_text(&c.partition));
    out
}

pub fn transcript_to_text(t: &ProtocolTranscript, cable: &CableInstance) -> String {
    let mut out = format!("n = {}, seed = {}\n", cable.n(), cable.seed());
    out.push_str(&format!(
        "phase 1 plan (end A): {}\n",
        sets_line(&t.phase1_plan.groups)
    ));
    out.push_str(&format!(
        "phase 2 plan (end B): {}\n",
        sets_line(&t.phase2_plan.groups)
    ));
    out.push_str("wire_a\twire_b\tprobe1\tprobe2\tcoord\n");
    for a in 1..=cable.n() {
        let b = cable.b_of(a);
        let (j, k) = t.coords_a[a - 1];
        out.push_str(&format!(
            "{a}\t{b}\t{}\t{}\t({j},{k})\n",
            t.phase1_probe[b - 1],
            t.phase2_probe[a - 1]
        ));
    }
    out
}
