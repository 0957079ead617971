//! Sweep, lemma and oracle-compare runners plus their machine-readable
//! reports. Reports are deterministic: records are sorted by (group,
//! ring, sigma index, f index) and carry no timestamps; timing is an
//! opt-in separate field.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use atlas_core::algebra::GroupAlgebra;
use atlas_core::catalog::CatalogEntry;
use atlas_core::checker::{check_exhaustive, check_pairwise, NormalityVerdict, Witness};
use atlas_core::classifier::classify;
use atlas_core::error::Result;
use atlas_core::lemmas::{
    lemma1_unit_structure, lemma2_pair_coverage, lemma3_moved_subgroup,
    lemma4_witness_properties, LemmaOutcome,
};
use atlas_core::morphism::{
    compatibility_witness, enumerate_antiautomorphisms, enumerate_unit_homomorphisms,
    InvolutionSpec,
};
use atlas_core::ring::{make_ring, CoeffRing};

pub const SCHEMA_VERSION: u32 = 1;

pub fn witness_fields(witness: &Option<Witness>) -> (Option<String>, Value) {
    match witness {
        None => (None, Value::Null),
        Some(Witness::Element(g)) => (Some("element".into()), serde_json::json!(g)),
        Some(Witness::Pair(g, h)) => (Some("pair".into()), serde_json::json!([g, h])),
        Some(Witness::RingElement(x)) => {
            (Some("ring_element".into()), serde_json::json!(x.coeffs()))
        }
    }
}

#[derive(Serialize)]
pub struct SweepRecord {
    pub group: String,
    pub ring: String,
    pub sigma_index: usize,
    pub sigma: Vec<usize>,
    pub f_index: usize,
    pub f: Vec<usize>,
    pub normal: bool,
    pub witness_kind: Option<String>,
    pub witness: Value,
    pub case: String,
    pub oracle_normal: Option<bool>,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub normal: usize,
    pub disagreements: usize,
    pub cases: BTreeMap<String, usize>,
}

#[derive(Serialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub max_order: usize,
    pub rings: Vec<String>,
    pub oracle: bool,
    pub records: Vec<SweepRecord>,
    pub summary: SweepSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

/// Runs both checkers and the classifier over every validated instance of
/// the given catalog entries and rings.
pub fn run_sweep(
    entries: &[CatalogEntry],
    ring_labels: &[String],
    with_oracle: bool,
) -> Result<SweepReport> {
    // Validate labels up front so input errors surface before the pool.
    for label in ring_labels {
        make_ring(label)?;
    }
    let per_entry: Vec<Vec<SweepRecord>> = entries
        .par_iter()
        .map(|entry| sweep_entry(entry, ring_labels, with_oracle))
        .collect::<Result<_>>()?;
    let mut records: Vec<SweepRecord> = per_entry.into_iter().flatten().collect();
    records.sort_by(|a, b| {
        (&a.group, &a.ring, a.sigma_index, a.f_index)
            .cmp(&(&b.group, &b.ring, b.sigma_index, b.f_index))
    });
    let mut cases = BTreeMap::new();
    for r in &records {
        *cases.entry(r.case.clone()).or_insert(0usize) += 1;
    }
    let summary = SweepSummary {
        instances: records.len(),
        normal: records.iter().filter(|r| r.normal).count(),
        disagreements: records.iter().filter(|r| !r.agree).count(),
        cases,
    };
    Ok(SweepReport {
        schema_version: SCHEMA_VERSION,
        max_order: entries.iter().map(|e| e.group.order()).max().unwrap_or(0),
        rings: ring_labels.to_vec(),
        oracle: with_oracle,
        records,
        summary,
        timing_ms: None,
    })
}

fn sweep_entry(
    entry: &CatalogEntry,
    ring_labels: &[String],
    with_oracle: bool,
) -> Result<Vec<SweepRecord>> {
    let group = &entry.group;
    let sigmas = enumerate_antiautomorphisms(group)?;
    let mut out = Vec::new();
    for label in ring_labels {
        let ring = make_ring(label)?;
        let homs = enumerate_unit_homomorphisms(group, &ring)?;
        for (sigma_index, sigma) in sigmas.iter().enumerate() {
            for (f_index, f) in homs.iter().enumerate() {
                if compatibility_witness(group, &ring, sigma, f).is_some() {
                    continue;
                }
                let spec = InvolutionSpec::new(group, &ring, sigma.clone(), f.clone())?;
                let verdict = check_pairwise(group, &ring, &spec);
                let cert = classify(group, &ring, &spec)?;
                let oracle_normal = if with_oracle {
                    oracle_verdict(group, &ring, &spec)
                } else {
                    None
                };
                let agree = verdict.normal == cert.case.is_normal()
                    && oracle_normal.is_none_or(|o| o == verdict.normal);
                let (witness_kind, witness) = witness_fields(&verdict.witness);
                out.push(SweepRecord {
                    group: entry.label.clone(),
                    ring: label.clone(),
                    sigma_index,
                    sigma: sigma.map().to_vec(),
                    f_index,
                    f: f.values().to_vec(),
                    normal: verdict.normal,
                    witness_kind,
                    witness,
                    case: cert.case.as_str().to_string(),
                    oracle_normal,
                    agree,
                });
            }
        }
    }
    Ok(out)
}

fn oracle_verdict(
    group: &atlas_core::Group,
    ring: &CoeffRing,
    spec: &InvolutionSpec,
) -> Option<bool> {
    let algebra = GroupAlgebra::new(group, ring);
    if algebra.element_count().is_err() {
        return None;
    }
    Some(
        check_exhaustive(group, ring, spec)
            .expect("bound checked")
            .normal,
    )
}

pub fn write_csv<W: std::io::Write>(report: &SweepReport, sink: W) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record([
        "group",
        "ring",
        "sigma_index",
        "f_index",
        "normal",
        "case",
        "agree",
        "witness_kind",
        "witness",
    ])?;
    for r in &report.records {
        w.write_record([
            r.group.as_str(),
            r.ring.as_str(),
            &r.sigma_index.to_string(),
            &r.f_index.to_string(),
            &r.normal.to_string(),
            &r.case,
            &r.agree.to_string(),
            r.witness_kind.as_deref().unwrap_or(""),
            &witness_csv(&r.witness),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn witness_csv(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::Number(n) => n.to_string(),
        Value::Array(items) => items
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

#[derive(Serialize)]
pub struct LemmaRecord {
    pub group: String,
    pub ring: String,
    pub sigma_index: usize,
    pub f_index: usize,
    pub case: String,
    pub lemma1: LemmaOutcome,
    pub lemma2: LemmaOutcome,
    pub lemma3: LemmaOutcome,
    pub lemma4: LemmaOutcome,
}

#[derive(Serialize)]
pub struct LemmaReport {
    pub schema_version: u32,
    pub rings: Vec<String>,
    pub records: Vec<LemmaRecord>,
    pub instances: usize,
    pub failures: usize,
}

/// Runs the four lemma suites over every sigma-normal instance at the
/// requested scale. Lemma 1 is bounded to |K|^|G| <= 2^12.
pub fn run_lemmas(entries: &[CatalogEntry], ring_labels: &[String]) -> Result<LemmaReport> {
    for label in ring_labels {
        make_ring(label)?;
    }
    let per_entry: Vec<Vec<LemmaRecord>> = entries
        .par_iter()
        .map(|entry| lemma_entry(entry, ring_labels))
        .collect::<Result<_>>()?;
    let mut records: Vec<LemmaRecord> = per_entry.into_iter().flatten().collect();
    records.sort_by(|a, b| {
        (&a.group, &a.ring, a.sigma_index, a.f_index)
            .cmp(&(&b.group, &b.ring, b.sigma_index, b.f_index))
    });
    let failures = records
        .iter()
        .filter(|r| {
            r.lemma1.is_failure()
                || r.lemma2.is_failure()
                || r.lemma3.is_failure()
                || r.lemma4.is_failure()
        })
        .count();
    Ok(LemmaReport {
        schema_version: SCHEMA_VERSION,
        rings: ring_labels.to_vec(),
        instances: records.len(),
        failures,
        records,
    })
}

fn lemma_entry(entry: &CatalogEntry, ring_labels: &[String]) -> Result<Vec<LemmaRecord>> {
    let group = &entry.group;
    let sigmas = enumerate_antiautomorphisms(group)?;
    let mut out = Vec::new();
    for label in ring_labels {
        let ring = make_ring(label)?;
        let homs = enumerate_unit_homomorphisms(group, &ring)?;
        let algebra = GroupAlgebra::new(group, &ring);
        let units_in_bound = (ring.size() as u128)
            .checked_pow(group.order() as u32)
            .is_some_and(|s| s <= 1 << 12);
        let mut units = None;
        for (sigma_index, sigma) in sigmas.iter().enumerate() {
            for (f_index, f) in homs.iter().enumerate() {
                if compatibility_witness(group, &ring, sigma, f).is_some() {
                    continue;
                }
                let spec = InvolutionSpec::new(group, &ring, sigma.clone(), f.clone())?;
                if !check_pairwise(group, &ring, &spec).normal {
                    continue;
                }
                let cert = classify(group, &ring, &spec)?;
                let lemma1 = if units_in_bound {
                    let units =
                        units.get_or_insert_with(|| algebra.enumerate_units().expect("in bound"));
                    lemma1_unit_structure(group, &ring, &spec, units)
                } else {
                    LemmaOutcome::Skipped
                };
                out.push(LemmaRecord {
                    group: entry.label.clone(),
                    ring: label.clone(),
                    sigma_index,
                    f_index,
                    case: cert.case.as_str().to_string(),
                    lemma1,
                    lemma2: lemma2_pair_coverage(group, &ring, &spec),
                    lemma3: lemma3_moved_subgroup(group, &spec, &cert),
                    lemma4: lemma4_witness_properties(group, &spec, &cert),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Serialize)]
pub struct OracleRecord {
    pub group: String,
    pub ring: String,
    pub sigma_index: usize,
    pub f_index: usize,
    pub pairwise_normal: bool,
    pub exhaustive_normal: bool,
    pub agree: bool,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub schema_version: u32,
    pub rings: Vec<String>,
    pub records: Vec<OracleRecord>,
    pub instances: usize,
    pub skipped_out_of_bounds: usize,
    pub disagreements: usize,
}

/// Pairwise-versus-exhaustive comparison over every instance within the
/// enumeration bound.
pub fn run_oracle_compare(
    entries: &[CatalogEntry],
    ring_labels: &[String],
) -> Result<OracleReport> {
    for label in ring_labels {
        make_ring(label)?;
    }
    let mut records = Vec::new();
    let mut skipped = 0usize;
    for entry in entries {
        let group = &entry.group;
        let sigmas = enumerate_antiautomorphisms(group)?;
        for label in ring_labels {
            let ring = make_ring(label)?;
            let algebra = GroupAlgebra::new(group, &ring);
            if algebra.element_count().is_err() {
                skipped += sigmas.len();
                continue;
            }
            let homs = enumerate_unit_homomorphisms(group, &ring)?;
            for (sigma_index, sigma) in sigmas.iter().enumerate() {
                for (f_index, f) in homs.iter().enumerate() {
                    if compatibility_witness(group, &ring, sigma, f).is_some() {
                        continue;
                    }
                    let spec = InvolutionSpec::new(group, &ring, sigma.clone(), f.clone())?;
                    let fast = check_pairwise(group, &ring, &spec);
                    let slow = check_exhaustive(group, &ring, &spec)?;
                    records.push(OracleRecord {
                        group: entry.label.clone(),
                        ring: label.clone(),
                        sigma_index,
                        f_index,
                        pairwise_normal: fast.normal,
                        exhaustive_normal: slow.normal,
                        agree: fast.normal == slow.normal,
                    });
                }
            }
        }
    }
    records.sort_by(|a, b| {
        (&a.group, &a.ring, a.sigma_index, a.f_index)
            .cmp(&(&b.group, &b.ring, b.sigma_index, b.f_index))
    });
    let disagreements = records.iter().filter(|r| !r.agree).count();
    Ok(OracleReport {
        schema_version: SCHEMA_VERSION,
        rings: ring_labels.to_vec(),
        instances: records.len(),
        skipped_out_of_bounds: skipped,
        disagreements,
        records,
    })
}

/// Shared JSON view of one checker verdict.
pub fn verdict_json(verdict: &NormalityVerdict) -> Value {
    let (witness_kind, witness) = witness_fields(&verdict.witness);
    serde_json::json!({
        "normal": verdict.normal,
        "method": match verdict.method {
            atlas_core::CheckMethod::Pairwise => "pairwise",
            atlas_core::CheckMethod::Exhaustive => "exhaustive",
        },
        "witness_kind": witness_kind,
        "witness": witness,
    })
}
