//! `prek` — explore the maps that send a partition to the partition of
//! its k-fold distinct-index part products.
//!
//! Exit codes are the contract: 0 means the command succeeded and every
//! verified property held, 2 means a verification found a genuine
//! counterexample (witness on stderr), and 1 means the tool itself
//! failed (bad arguments, I/O trouble).

mod output;
mod verify;

use std::env;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::Zero;

use output::{Format, MapOutcome};
use prek_core::{
    find_collisions, gen_alpha_beta, gen_coprime_triple, gen_pq_family, gen_scaled_triple,
    partition_to_strings, pre2_exact, pre2_sweep, pre_k, product_of_parts, sweep, validate_pair,
    CensusRecordDoc, CounterexamplePair, Error, FamilyPairDoc, InjectivityReportDoc, LengthFilter,
    PQFamilyParams, Partition, SweepCache,
};
use verify::Suite;

#[derive(Parser)]
#[command(
    name = "prek",
    version,
    about = "Partition maps from elementary symmetric polynomials"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,

    /// Write the rendered output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Sweep cache directory (falls back to PREK_CACHE_DIR, then a
    /// platform default).
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// Worker threads for parallel commands (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map one partition through pre_k.
    Map {
        /// Comma-separated positive parts, largest first or not — they
        /// are sorted; e.g. 7,4,4.
        #[arg(long, value_delimiter = ',', value_parser = parse_part, required = true)]
        parts: Vec<BigUint>,
        /// How many distinct parts each product multiplies.
        #[arg(long)]
        k: usize,
    },
    /// Exhaustive collision search over the partitions of one weight.
    Collide {
        /// Weight whose partitions are enumerated.
        #[arg(long)]
        n: u64,
        /// How many distinct parts each product multiplies.
        #[arg(long)]
        k: usize,
        /// Only partitions with exactly this many parts.
        #[arg(long)]
        length: Option<usize>,
    },
    /// Collision searches across a weight range, cached and resumable.
    Sweep {
        /// First weight, inclusive.
        #[arg(long)]
        from: u64,
        /// Last weight, inclusive.
        #[arg(long)]
        to: u64,
        /// How many distinct parts each product multiplies.
        #[arg(long)]
        k: usize,
        /// Only partitions with exactly this many parts.
        #[arg(long)]
        length: Option<usize>,
        /// Recompute everything; neither read nor write the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Generate and validate one collision pair from a named family.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Count the partitions of a weight that are pre_2 images.
    Census {
        /// One weight.
        #[arg(long, conflicts_with = "n_max")]
        n: Option<u64>,
        /// Sweep every weight from 1 to this bound.
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// Run a named batch of verification checks.
    Verify {
        /// Which batch to run.
        #[arg(value_enum)]
        suite: Suite,
        /// Override the batch's default search bound.
        #[arg(long)]
        n_max: Option<u64>,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// (6,6,1,...) and (9,2,2,1,...), padded with ones to k parts.
    AlphaBeta {
        /// Number of parts, at least 3.
        #[arg(long)]
        k: usize,
    },
    /// (6m,6m,m) and (9m,2m,2m).
    Scaled {
        /// Scale factor, at least 1.
        #[arg(long)]
        m: u64,
    },
    /// (3m,2m-1,2) and (4m-2,m,3), each with coprime parts.
    Coprime {
        /// Parameter, at least 3.
        #[arg(long)]
        m: u64,
    },
    /// Two-prime family with primes p > q.
    Pq {
        /// Larger prime.
        #[arg(long)]
        p: u64,
        /// Smaller prime.
        #[arg(long)]
        q: u64,
        /// Growth parameter, at least ceil((p-1)/(q-1)).
        #[arg(long)]
        m: u64,
        /// Number of parts, at least 3.
        #[arg(long)]
        k: usize,
    },
}

fn parse_part(text: &str) -> Result<BigUint, String> {
    let part: BigUint = text
        .trim()
        .parse()
        .map_err(|_| format!("`{text}` is not a positive integer"))?;
    if part.is_zero() {
        return Err("parts must be positive".to_string());
    }
    Ok(part)
}

fn length_filter(length: Option<usize>) -> Result<LengthFilter, Error> {
    match length {
        None => Ok(LengthFilter::All),
        Some(0) => Err(Error::ZeroLengthFilter),
        Some(l) => Ok(LengthFilter::Exactly(l)),
    }
}

fn env_dir(name: &str) -> Option<PathBuf> {
    env::var_os(name)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

/// Flag, then PREK_CACHE_DIR, then the platform cache home, then tmp.
fn resolve_cache_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(dir) = flag {
        return dir.to_path_buf();
    }
    if let Some(dir) = env_dir("PREK_CACHE_DIR") {
        return dir;
    }
    if let Some(base) = env_dir("XDG_CACHE_HOME") {
        return base.join("prek");
    }
    if let Some(home) = env_dir("HOME") {
        return home.join(".cache").join("prek");
    }
    env::temp_dir().join("prek-cache")
}

/// Family name, its parameters in render order, and the generated pair.
type NamedPair = (&'static str, Vec<(&'static str, u64)>, CounterexamplePair);

fn build_family(family: FamilyCommand) -> Result<NamedPair, Error> {
    match family {
        FamilyCommand::AlphaBeta { k } => {
            Ok(("alpha-beta", vec![("k", k as u64)], gen_alpha_beta(k)?))
        }
        FamilyCommand::Scaled { m } => Ok(("scaled", vec![("m", m)], gen_scaled_triple(m)?)),
        FamilyCommand::Coprime { m } => Ok(("coprime", vec![("m", m)], gen_coprime_triple(m)?)),
        FamilyCommand::Pq { p, q, m, k } => {
            let params = PQFamilyParams::new(p, q, m, k)?;
            Ok((
                "pq",
                vec![("p", p), ("q", q), ("m", m), ("k", k as u64)],
                gen_pq_family(&params)?,
            ))
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Box<dyn std::error::Error>> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()?;
    }

    let format = cli.format;
    let mut exit_code = 0;
    let rendered = match cli.command {
        Command::Map { parts, k } => {
            let source = Partition::new(parts)?;
            let result = pre_k(&source, k)?;
            let outcome = MapOutcome {
                degenerate: source.len() < k,
                source: partition_to_strings(&source),
                k,
                image: partition_to_strings(&result.image),
                image_weight: result.image.weight().to_string(),
                image_product: product_of_parts(&result.image).to_string(),
            };
            output::render_map(&outcome, format)?
        }
        Command::Collide { n, k, length } => {
            let report = find_collisions(n, k, length_filter(length)?)?;
            output::render_report(&InjectivityReportDoc::from_report(&report), format)?
        }
        Command::Sweep {
            from,
            to,
            k,
            length,
            no_cache,
        } => {
            let filter = length_filter(length)?;
            let cache = if no_cache {
                None
            } else {
                let dir = resolve_cache_dir(cli.cache_dir.as_deref());
                Some(SweepCache::for_params(&dir, k, filter))
            };
            let outcome = sweep(from, to, k, filter, cache.as_ref())?;
            if cache.is_some() {
                eprintln!(
                    "cache: {} reused, {} computed, {} corrupt lines recomputed",
                    outcome.from_cache, outcome.computed, outcome.corrupt_lines
                );
            }
            output::render_sweep(from, to, k, filter, &outcome.docs, format)?
        }
        Command::Family(family) => {
            let (name, parameters, pair) = build_family(family)?;
            if let Err(violation) = validate_pair(&pair) {
                eprintln!("property violated: {violation}");
                return Ok(2);
            }
            output::render_family(&FamilyPairDoc::from_pair(name, parameters, &pair), format)?
        }
        Command::Census { n, n_max } => match (n, n_max) {
            (Some(n), None) => {
                let record = pre2_exact(n)?;
                output::render_census_record(&CensusRecordDoc::from_record(&record), format)?
            }
            (None, Some(n_max)) => {
                let census = pre2_sweep(n_max)?;
                let docs: Vec<CensusRecordDoc> = census
                    .records
                    .iter()
                    .map(CensusRecordDoc::from_record)
                    .collect();
                output::render_census_sweep(&docs, &census.units, &census.bound_violations, format)?
            }
            _ => return Err("census needs exactly one of --n or --n-max".into()),
        },
        Command::Verify { suite, n_max } => {
            let checks = verify::run_suite(suite, n_max)?;
            if checks.iter().any(|c| !c.passed) {
                exit_code = 2;
            }
            output::render_verify(suite.name(), &checks, format)?
        }
    };

    match cli.output {
        Some(path) => std::fs::write(&path, rendered.as_bytes())
            .map_err(|e| format!("writing {}: {e}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(exit_code)
}
