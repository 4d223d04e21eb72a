//! The `sejoin` command line.
//!
//! Exit codes: 0 on success, 1 when `repro` reports a failing item, 2 for
//! usage and input errors, 3 when an internal arithmetic invariant fails.

mod repro;

use std::fs::File;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classify::{
    classify_family, compare_with_3sasakian, delpezzo_coincidences, homeo_obstruction,
    homotopy_equivalent, search_equivalent_pairs,
};
use crate::cone::{
    enumerate_regular_cones, has_regular_reeb, regular_cones_by_scan, ypq_translate,
};
use crate::config::{default_shards, RunConfig, SHARDS_ENV};
use crate::error::{Error, Result};
use crate::join::{
    cohomology_ring, first_pontrjagin, rational_cohomology_ring, se_admissible_join,
    smoothness_check, BaseKind, BaseManifold, JoinSpec, WeightVector,
};
use crate::report::{emit, to_canonical_value, OutputFormat};

pub use repro::{run_repro, ReproItem, ReproStatus};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REPRO_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sejoin",
    version,
    about = "Invariants and homotopy classification of Sasaki-Einstein joins"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Table => OutputFormat::Table,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Indices, cohomology, p1 and SE admissibility of one join.
    Invariants {
        /// S<odd>, CP2, CP1xCP1, dP:<k>, fermat:<d>,<n>, stiefel:<n> or G2+.
        base: BaseManifold,
        /// Weights as "w1,w2" with w1 >= w2, coprime.
        w: WeightVector,
    },
    /// Homotopy classes of the families with W = w1*w2.
    Classify(ClassifyArgs),
    /// Search all families up to max-W for homotopy equivalent pairs.
    Search {
        #[arg(long = "max-W")]
        max_w: u64,
        /// Number of W-range shards; the report does not depend on it.
        #[arg(long, env = SHARDS_ENV)]
        shards: Option<usize>,
    },
    /// The join data of Y^{p,q}.
    Ypq {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
    /// Weight vectors whose w-Sasaki cone contains a regular Reeb field.
    Reeb {
        #[arg(long)]
        fano: u64,
        /// Also run the brute-force scan up to this sum and compare.
        #[arg(long)]
        max_sum: Option<u64>,
    },
    /// Homotopy and homeomorphism tests for two S^5 joins.
    Equiv { a: WeightVector, b: WeightVector },
    /// Del Pezzo joins with isomorphic b2 and H^4.
    Delpezzo {
        #[arg(long)]
        max_sum: u64,
    },
    /// Compare a 3-Sasakian 7-manifold S(p) with an S^5 join.
    #[command(name = "compare-3s")]
    Compare3s {
        /// Pairwise coprime triple "p1,p2,p3".
        #[arg(long, value_parser = parse_triple)]
        p: [u64; 3],
        w: WeightVector,
    },
    /// Run the reference example suite and print PASS/FAIL per item.
    Repro,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ClassifyArgs {
    #[arg(long = "W")]
    w: Option<u64>,
    /// Inclusive range "a..b".
    #[arg(long = "W-range", value_parser = parse_range)]
    w_range: Option<(u64, u64)>,
}

fn parse_triple(s: &str) -> std::result::Result<[u64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected \"p1,p2,p3\", got {s:?}"));
    }
    let mut out = [0u64; 3];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.trim().parse().map_err(|_| format!("bad integer {p:?}"))?;
    }
    Ok(out)
}

fn parse_range(s: &str) -> std::result::Result<(u64, u64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected \"a..b\", got {s:?}"))?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad integer {a:?}"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad integer {b:?}"))?;
    if a == 0 || a > b {
        return Err(format!("empty or invalid range {s:?}"));
    }
    Ok((a, b))
}

fn tagged<T: Serialize>(record: &str, value: &T) -> Result<Value> {
    let mut v = to_canonical_value(value)?;
    if let Value::Object(m) = &mut v {
        m.insert("record".into(), Value::String(record.into()));
    }
    Ok(v)
}

/// Parses `args` and runs the command, writing to the given streams.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return e.exit_code();
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_usage() {
                EXIT_USAGE
            } else {
                EXIT_INVARIANT
            }
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32> {
    let format = OutputFormat::from(cli.format);
    if let Command::Repro = cli.command {
        let items = run_repro()?;
        let mut buf = Vec::new();
        for item in &items {
            writeln!(buf, "{item}").expect("writing to memory");
        }
        write_output(cli, stdout, &buf)?;
        let failed = items.iter().any(|i| i.status == ReproStatus::Fail);
        return Ok(if failed { EXIT_REPRO_FAILED } else { EXIT_OK });
    }

    let (records, summary) = build_records(&cli.command)?;
    let mut buf = Vec::new();
    emit(&records, format, &mut buf)?;
    write_output(cli, stdout, &buf)?;
    if let (Some(_), Some(summary)) = (&cli.out, summary) {
        writeln!(stdout, "{summary}").map_err(|e| Error::InvalidArgument(e.to_string()))?;
    }
    Ok(EXIT_OK)
}

fn write_output(cli: &Cli, stdout: &mut dyn Write, bytes: &[u8]) -> Result<()> {
    match &cli.out {
        Some(path) => File::create(path)
            .and_then(|mut f| f.write_all(bytes))
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(bytes)
            .map_err(|e| Error::InvalidArgument(format!("cannot write output: {e}"))),
    }
}

/// The records of a command, plus a one-line summary echoed to standard
/// output when the report goes to a file.
fn build_records(command: &Command) -> Result<(Vec<Value>, Option<String>)> {
    let config = RunConfig::default();
    match command {
        Command::Invariants { base, w } => Ok((vec![invariants_record(*base, *w)?], None)),
        Command::Classify(args) => {
            let (lo, hi) = match (args.w, args.w_range) {
                (Some(w), None) => (w, w),
                (None, Some(r)) => r,
                _ => {
                    return Err(Error::InvalidArgument(
                        "give exactly one of --W, --W-range".into(),
                    ))
                }
            };
            if lo == 0 {
                return Err(Error::Zero("W"));
            }
            let mut out = Vec::new();
            for product in lo..=hi {
                let f = classify_family(product)?;
                let mut v = to_canonical_value(&f)?;
                if let Value::Object(m) = &mut v {
                    m.insert("class_count".into(), json!(f.class_count()));
                }
                out.push(v);
            }
            Ok((out, None))
        }
        Command::Search { max_w, shards } => {
            let config = RunConfig {
                max_w: *max_w,
                shard_count: shards.unwrap_or_else(default_shards),
                ..config
            };
            config.validate()?;
            let report = search_equivalent_pairs(config.max_w, config.shard_count)?;
            let mut out = Vec::new();
            for p in &report.pairs {
                out.push(tagged("pair", p)?);
            }
            for s in &report.family_stats {
                out.push(tagged("family", s)?);
            }
            out.push(tagged("summary", &report.summary)?);
            let s = &report.summary;
            let line = format!(
                "searched W <= {}: {} families, {} with several members, {} undetermined, {} equivalent pairs",
                s.max_w, s.families_scanned, s.multi_member_families, s.undetermined_families, s.equivalent_pairs
            );
            Ok((out, Some(line)))
        }
        Command::Ypq { p, q } => Ok((vec![to_canonical_value(&ypq_translate(*p, *q)?)?], None)),
        Command::Reeb { fano, max_sum } => {
            if *fano == 0 {
                return Err(Error::Zero("Fano index"));
            }
            let cones = enumerate_regular_cones(*fano);
            let mut v = json!({ "fano_index": fano, "cones": to_canonical_value(&cones)? });
            if let Some(s) = max_sum {
                if *s == 0 {
                    return Err(Error::Zero("max_sum"));
                }
                let scan = regular_cones_by_scan(&[*fano], *s)
                    .remove(fano)
                    .unwrap_or_default();
                let closed: Vec<WeightVector> = cones
                    .iter()
                    .map(|e| e.w)
                    .filter(|w| w.sum() <= *s as u128)
                    .collect();
                v["scan"] = to_canonical_value(&scan)?;
                v["scan_max_sum"] = json!(s);
                v["scan_agrees"] = json!(scan == closed);
            }
            Ok((vec![v], None))
        }
        Command::Equiv { a, b } => {
            let homotopy = homotopy_equivalent(*a, *b)?;
            let homeo = if a.product() == b.product() {
                Some(homeo_obstruction(*a, *b)?)
            } else {
                None
            };
            let v = json!({
                "a": to_canonical_value(a)?,
                "b": to_canonical_value(b)?,
                "homotopy": to_canonical_value(&homotopy)?,
                "homeo_obstruction": to_canonical_value(&homeo)?,
            });
            Ok((vec![v], None))
        }
        Command::Delpezzo { max_sum } => {
            let config = RunConfig {
                max_sum: *max_sum,
                ..config
            };
            config.validate()?;
            let found = delpezzo_coincidences(config.max_sum)?;
            let mut out = Vec::new();
            for c in &found {
                out.push(tagged("coincidence", c)?);
            }
            out.push(
                json!({ "record": "summary", "max_sum": max_sum, "coincidences": found.len() }),
            );
            Ok((
                out,
                Some(format!(
                    "{} coincident pairs with w1 + w2 <= {max_sum}",
                    found.len()
                )),
            ))
        }
        Command::Compare3s { p, w } => Ok((
            vec![to_canonical_value(&compare_with_3sasakian(*p, *w)?)?],
            None,
        )),
        Command::Repro => unreachable!("handled before record building"),
    }
}

fn invariants_record(base: BaseManifold, w: WeightVector) -> Result<Value> {
    let spec = JoinSpec::new(base, w);
    let mut notes = Vec::new();
    let cohomology = match cohomology_ring(&spec) {
        Ok(r) => {
            r.check_poincare_duality()?;
            Some(r)
        }
        Err(Error::Unsupported(msg)) => {
            notes.push(msg);
            None
        }
        Err(e) => return Err(e),
    };
    let rational = match rational_cohomology_ring(&spec) {
        Ok(r) => Some(r),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    let pontrjagin = match base.kind() {
        BaseKind::Cp2 | BaseKind::Sphere { r: 2 } => Some(first_pontrjagin(w)?),
        _ => None,
    };
    Ok(json!({
        "join": to_canonical_value(&spec)?,
        "dim": spec.dim(),
        "smooth": smoothness_check(&spec),
        "cohomology": to_canonical_value(&cohomology)?,
        "rational_cohomology": to_canonical_value(&rational)?,
        "first_pontrjagin": to_canonical_value(&pontrjagin)?,
        "se_admissible": to_canonical_value(&se_admissible_join(&spec))?,
        "regular_reeb": to_canonical_value(&has_regular_reeb(base.fano_index(), w))?,
        "notes": notes,
    }))
}
