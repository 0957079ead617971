//! `atlas`: decide sigma-normality of finite group rings from the command
//! line.
//!
//! Verbs: `check` (one instance, both deciders), `classify` (certificate
//! only), `sweep` (full instance space with cross-validation), `lemmas`
//! (supporting property suites), `oracle-compare` (pairwise vs exhaustive).
//! Exit codes: 0 ok, 1 input error, 2 internal inconsistency.

mod report;
mod sources;

use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use atlas_core::algebra::GroupAlgebra;
use atlas_core::catalog;
use atlas_core::checker::{check_exhaustive, check_pairwise};
use atlas_core::classifier::classify;
use atlas_core::morphism::InvolutionSpec;
use atlas_core::ring::make_ring;

#[derive(Parser)]
#[command(name = "atlas", version, about = "Group-ring normality workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceArgs {
    /// Group source: cyclic:N | dihedral:N | quaternion:N | elementary:P^K
    /// | d4yc4 | d4yd4 | q8yq8 | file:PATH, combined with '*' for direct
    /// products
    #[arg(long)]
    group: String,

    /// Ring label: Z2..Z9, F4, F8, F9 (F2/F3/F5/F7 alias the prime fields)
    #[arg(long)]
    ring: String,

    /// Sigma source: builtin:classical | builtin:theorem-i |
    /// builtin:case-iii | file:PATH | indices:i0,i1,...
    #[arg(long)]
    sigma: String,

    /// f source: builtin:trivial | builtin:sign | file:PATH | values:v0,...
    #[arg(long)]
    f: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check one instance with the pairwise decider and the classifier
    /// (and the exhaustive oracle with --oracle), printing a JSON verdict.
    Check {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Also run the exhaustive oracle (requires |K|^|G| <= 2^16)
        #[arg(long)]
        oracle: bool,
    },
    /// Print the structural classification certificate for one instance.
    Classify {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Enumerate every (group, ring, sigma, f) instance of the catalog up
    /// to a maximum order, cross-validate the deciders, and write a report.
    Sweep {
        /// Largest group order to include (catalog is bounded by 32)
        #[arg(long, default_value_t = 16)]
        max_order: usize,
        /// Comma-separated ring labels
        #[arg(long, default_value = "Z2,Z3,Z4,Z5,F4")]
        rings: String,
        /// Also run the exhaustive oracle where |K|^|G| <= 2^16
        #[arg(long)]
        oracle: bool,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        out: Option<String>,
        /// Also write a flat CSV projection of the records
        #[arg(long)]
        csv: Option<String>,
        /// Include wall-clock timing in the report (off by default so
        /// identical inputs produce byte-identical reports)
        #[arg(long)]
        timing: bool,
    },
    /// Run the four supporting property suites over every sigma-normal
    /// instance at the requested scale.
    Lemmas {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long, default_value = "Z2,Z3")]
        rings: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Compare the pairwise decider against the exhaustive oracle on
    /// every in-bounds instance.
    OracleCompare {
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        #[arg(long, default_value = "Z2,Z3,F4")]
        rings: String,
        #[arg(long)]
        out: Option<String>,
    },
}

fn main() -> ExitCode {
    configure_workers();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

/// ATLAS_WORKERS caps the sweep worker pool.
fn configure_workers() {
    if let Ok(value) = std::env::var("ATLAS_WORKERS") {
        if let Ok(n) = value.parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Check { instance, oracle } => cmd_check(&instance, oracle),
        Command::Classify { instance } => cmd_classify(&instance),
        Command::Sweep {
            max_order,
            rings,
            oracle,
            out,
            csv,
            timing,
        } => cmd_sweep(max_order, &rings, oracle, out, csv, timing),
        Command::Lemmas {
            max_order,
            rings,
            out,
        } => cmd_lemmas(max_order, &rings, out),
        Command::OracleCompare {
            max_order,
            rings,
            out,
        } => cmd_oracle_compare(max_order, &rings, out),
    }
}

fn build_instance(
    args: &InstanceArgs,
) -> anyhow::Result<(catalog::CatalogEntry, atlas_core::CoeffRing, InvolutionSpec)> {
    let entry = sources::parse_group_source(&args.group)?;
    let ring = make_ring(&args.ring)?;
    let sigma = sources::parse_sigma_source(&entry, &args.sigma)?;
    let f = sources::parse_f_source(&entry, &ring, &args.f)?;
    let spec = InvolutionSpec::new(&entry.group, &ring, sigma, f)?;
    Ok((entry, ring, spec))
}

fn cmd_check(args: &InstanceArgs, with_oracle: bool) -> anyhow::Result<ExitCode> {
    let (entry, ring, spec) = build_instance(args)?;
    let verdict = check_pairwise(&entry.group, &ring, &spec);
    let certificate = classify(&entry.group, &ring, &spec)?;
    let oracle = if with_oracle {
        let algebra = GroupAlgebra::new(&entry.group, &ring);
        algebra.element_count()?; // surfaces the capability error
        Some(check_exhaustive(&entry.group, &ring, &spec)?)
    } else {
        None
    };
    let consistent = verdict.normal == certificate.case.is_normal()
        && oracle.as_ref().is_none_or(|o| o.normal == verdict.normal);
    let mut body = report::verdict_json(&verdict);
    let obj = body.as_object_mut().expect("verdict is an object");
    obj.insert("schema_version".into(), serde_json::json!(report::SCHEMA_VERSION));
    obj.insert("group".into(), serde_json::json!(entry.label));
    obj.insert("ring".into(), serde_json::json!(ring.label()));
    obj.insert("sigma_id".into(), serde_json::json!(args.sigma));
    obj.insert("f_id".into(), serde_json::json!(args.f));
    obj.insert("sigma".into(), serde_json::json!(spec.sigma().map()));
    obj.insert("f".into(), serde_json::json!(spec.f().values()));
    obj.insert("certificate".into(), serde_json::to_value(&certificate)?);
    obj.insert(
        "oracle".into(),
        match &oracle {
            Some(v) => report::verdict_json(v),
            None => serde_json::Value::Null,
        },
    );
    obj.insert("consistent".into(), serde_json::json!(consistent));
    println!("{}", serde_json::to_string_pretty(&body)?);
    Ok(if consistent {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn cmd_classify(args: &InstanceArgs) -> anyhow::Result<ExitCode> {
    let (entry, ring, spec) = build_instance(args)?;
    let certificate = classify(&entry.group, &ring, &spec)?;
    let body = serde_json::json!({
        "schema_version": report::SCHEMA_VERSION,
        "group": entry.label,
        "ring": ring.label(),
        "certificate": certificate,
    });
    println!("{}", serde_json::to_string_pretty(&body)?);
    Ok(ExitCode::SUCCESS)
}

fn write_out(path: &Option<String>, body: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => {
            let mut file = fs::File::create(p)?;
            file.write_all(body.as_bytes())?;
            file.write_all(b"\n")?;
        }
        None => println!("{body}"),
    }
    Ok(())
}

fn cmd_sweep(
    max_order: usize,
    rings: &str,
    oracle: bool,
    out: Option<String>,
    csv: Option<String>,
    timing: bool,
) -> anyhow::Result<ExitCode> {
    if max_order > 32 {
        anyhow::bail!("input error: sweep max order is bounded to 32, got {max_order}");
    }
    let ring_labels = sources::parse_ring_list(rings)?;
    let entries = catalog::catalog(max_order);
    let start = Instant::now();
    let mut report = report::run_sweep(&entries, &ring_labels, oracle)?;
    if timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    let body = serde_json::to_string_pretty(&report)?;
    write_out(&out, &body)?;
    if let Some(csv_path) = csv {
        let file = fs::File::create(&csv_path)?;
        report::write_csv(&report, file)?;
    }
    if report.summary.disagreements > 0 {
        eprintln!(
            "inconsistency: {} records disagree between the deciders",
            report.summary.disagreements
        );
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lemmas(max_order: usize, rings: &str, out: Option<String>) -> anyhow::Result<ExitCode> {
    if max_order > 32 {
        anyhow::bail!("input error: lemmas max order is bounded to 32, got {max_order}");
    }
    let ring_labels = sources::parse_ring_list(rings)?;
    let entries = catalog::catalog(max_order);
    let report = report::run_lemmas(&entries, &ring_labels)?;
    let failures = report.failures;
    write_out(&out, &serde_json::to_string_pretty(&report)?)?;
    if failures > 0 {
        eprintln!("inconsistency: {failures} lemma suite failures");
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle_compare(
    max_order: usize,
    rings: &str,
    out: Option<String>,
) -> anyhow::Result<ExitCode> {
    if max_order > 32 {
        anyhow::bail!("input error: oracle-compare max order is bounded to 32, got {max_order}");
    }
    let ring_labels = sources::parse_ring_list(rings)?;
    let entries = catalog::catalog(max_order);
    let report = report::run_oracle_compare(&entries, &ring_labels)?;
    let disagreements = report.disagreements;
    write_out(&out, &serde_json::to_string_pretty(&report)?)?;
    if disagreements > 0 {
        eprintln!("inconsistency: {disagreements} oracle disagreements");
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}
