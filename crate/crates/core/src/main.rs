// SPDX-License-Identifier: Apache-2.0

//! `steiner`: Steiner distances, Steiner k-diameters and the `sdiam_4`
//! characterizations over graph6 streams, with JSON-lines output.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use steiner::families::{self, Family, FamilyParams};
use steiner::graph6;
use steiner::scan::{self, LineOutcome, RunReport, VerifyOptions, Which};
use steiner::steiner::{self as metrics, Limits};
use steiner::{classify, corpus, Graph};

#[derive(Parser)]
#[command(name = "steiner", version, about = "Exact Steiner distances and sdiam_4 characterizations")]
struct Cli {
    /// Worker threads for parallel scans (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Steiner metric for every graph6 line.
    Compute {
        /// graph6 input file; stdin when absent or "-".
        input: Option<PathBuf>,
        /// Terminal subset size.
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Metric to report for each graph.
        #[arg(long, value_enum, default_value_t = Metric::Sdiam)]
        metric: Metric,
    },
    /// Emit every characterization verdict for every graph6 line.
    Classify {
        /// graph6 input file; stdin when absent or "-".
        input: Option<PathBuf>,
    },
    /// Check a characterization against the computed diameter on every line.
    Verify {
        /// graph6 input file; stdin when absent or "-".
        input: Option<PathBuf>,
        /// Characterization to check: thm2, thm3, lemma1 or all.
        #[arg(long, default_value = "all")]
        which: Which,
        /// Subset size for the non-cut criterion.
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Negate the sdiam_4 = 3 predicate (scan self-test).
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Emit graph6 lines for a named family.
    Generate {
        /// Family name: H1..H4, T, Delta, DeltaPrime, G1, G2 or G3.
        #[arg(long)]
        family: Family,
        /// Parameters a,b,c,d.
        #[arg(long, value_delimiter = ',', num_args = 1..=4)]
        params: Option<Vec<usize>>,
        /// Order of the generated graphs.
        #[arg(long)]
        n: usize,
        /// Emit every valid parameter tuple for the given order.
        #[arg(long)]
        sweep: bool,
    },
    /// Steiner distance of a terminal set by vertex-superset enumeration.
    Oracle {
        /// The graph as one graph6 string.
        graph6: String,
        /// Comma-separated terminal vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        /// Largest order the oracle accepts.
        #[arg(long, default_value_t = Limits::default().max_oracle_order)]
        max_oracle_n: usize,
    },
    /// Emit every graph on n vertices up to isomorphism, one graph6 line each.
    Corpus {
        /// Number of vertices, at most 8.
        #[arg(long)]
        n: usize,
        /// Keep only connected graphs.
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Metric {
    Sdiam,
    Srad,
    Ecc,
    Center,
    Wiener,
    Avg,
}

fn open_input(path: Option<&PathBuf>) -> io::Result<Box<dyn BufRead>> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(Box::new(BufReader::new(File::open(p)?))),
        _ => Ok(Box::new(BufReader::new(io::stdin().lock()))),
    }
}

fn write_json<W: Write, T: Serialize>(out: &mut W, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

fn metric_value(g: &Graph, k: usize, metric: Metric) -> Result<Value, String> {
    let err = |e: metrics::SteinerError| e.to_string();
    Ok(match metric {
        Metric::Sdiam => json!(metrics::steiner_diameter(g, k).map_err(err)?),
        Metric::Srad => json!(metrics::steiner_profile(g, k).map_err(err)?.radius),
        Metric::Ecc => json!(metrics::steiner_profile(g, k).map_err(err)?.eccentricities),
        Metric::Center => json!(metrics::steiner_profile(g, k).map_err(err)?.center),
        Metric::Wiener => json!(metrics::steiner_wiener_index(g, k).map_err(err)?),
        Metric::Avg => {
            let mu = metrics::average_steiner_distance(g, k).map_err(err)?;
            json!(format!("{}/{}", mu.numer(), mu.denom()))
        }
    })
}

/// Decodes one line, returning the graph or an error record.
fn decode_or_record(index: usize, line: &str) -> Result<Graph, Value> {
    graph6::decode(line).map_err(|e| json!({ "index": index, "error": e.to_string() }))
}

/// A line-by-line command: one JSON record per input line, exit 2 if any
/// record carries an error.
fn run_records<F>(input: Option<&PathBuf>, f: F) -> io::Result<ExitCode>
where
    F: Fn(usize, &str) -> Value + Sync,
{
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut failed = false;
    scan::for_each_line(open_input(input)?, f, |record| {
        failed |= record.get("error").is_some();
        write_json(&mut out, &record)
    })?;
    out.flush()?;
    Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn cmd_compute(input: Option<&PathBuf>, k: usize, metric: Metric) -> io::Result<ExitCode> {
    run_records(input, |index, line| {
        let g = match decode_or_record(index, line) {
            Ok(g) => g,
            Err(record) => return record,
        };
        match metric_value(&g, k, metric) {
            Ok(value) => json!({ "index": index, "n": g.order(), "k": k, "metric": metric, "value": value }),
            Err(e) => json!({ "index": index, "n": g.order(), "k": k, "metric": metric, "error": e }),
        }
    })
}

fn cmd_classify(input: Option<&PathBuf>) -> io::Result<ExitCode> {
    run_records(input, |index, line| {
        let g = match decode_or_record(index, line) {
            Ok(g) => g,
            Err(record) => return record,
        };
        match classify(&g) {
            Ok(record) => {
                let mut value = json!({ "index": index, "graph6": line });
                let fields = serde_json::to_value(record).expect("records serialize");
                if let (Value::Object(head), Value::Object(rest)) = (&mut value, fields) {
                    head.extend(rest);
                }
                value
            }
            Err(e) => json!({ "index": index, "graph6": line, "error": e.to_string() }),
        }
    })
}

fn cmd_verify(input: Option<&PathBuf>, options: VerifyOptions) -> io::Result<ExitCode> {
    let started = Instant::now();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut report = RunReport::default();
    scan::for_each_line(
        open_input(input)?,
        |index, line| scan::verify_line(index, line, &options),
        |outcome| {
            report.absorb(&outcome);
            match &outcome {
                LineOutcome::Checked { counterexamples, .. } => {
                    for c in counterexamples {
                        write_json(&mut out, c)?;
                    }
                    // counterexamples must survive an interrupted scan
                    if !counterexamples.is_empty() {
                        out.flush()?;
                    }
                }
                LineOutcome::Invalid { index, message } => eprintln!("line {index}: {message}"),
                LineOutcome::Skipped { .. } => {}
            }
            Ok(())
        },
    )?;
    write_json(&mut out, &json!({ "summary": report }))?;
    out.flush()?;
    eprintln!("elapsed {:.3}s", started.elapsed().as_secs_f64());
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn cmd_generate(family: Family, params: Option<Vec<usize>>, n: usize, sweep: bool) -> Result<ExitCode, String> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let lines: Vec<String> = if sweep {
        if params.is_some() {
            return Err("--sweep and --params are mutually exclusive".into());
        }
        families::sweep_graphs(family, n)
            .iter()
            .map(|(_, g)| graph6::encode(g))
            .collect()
    } else {
        let mut values = [0usize; 4];
        for (slot, v) in values.iter_mut().zip(params.unwrap_or_default()) {
            *slot = v;
        }
        let g = families::generate(&FamilyParams::new(family, values, n)).map_err(|e| e.to_string())?;
        vec![graph6::encode(&g)]
    };
    for line in lines {
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(line: &str, terminals: &[usize], max_oracle_n: usize) -> Result<ExitCode, String> {
    let g = graph6::decode(line).map_err(|e| e.to_string())?;
    let limits = Limits {
        max_oracle_order: max_oracle_n,
        ..Limits::default()
    };
    let result = metrics::steiner_distance_oracle(&g, terminals, &limits).map_err(|e| e.to_string())?;
    match result.value() {
        Some(d) => println!("{d}"),
        None => println!("unreachable"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_corpus(n: usize, connected: bool) -> Result<ExitCode, String> {
    if n > 8 {
        return Err(format!("corpus generation is limited to order 8, got {n}"));
    }
    let graphs = if connected {
        corpus::connected_graphs(n)
    } else {
        corpus::all_graphs(n)
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    for g in &graphs {
        writeln!(out, "{}", graph6::encode(g)).map_err(|e| e.to_string())?;
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let io_err = |e: io::Error| e.to_string();
    match cli.command {
        Command::Compute { input, k, metric } => cmd_compute(input.as_ref(), k, metric).map_err(io_err),
        Command::Classify { input } => cmd_classify(input.as_ref()).map_err(io_err),
        Command::Verify {
            input,
            which,
            k,
            corrupt,
        } => {
            if k < 3 {
                return Err(format!("--k must be at least 3, got {k}"));
            }
            cmd_verify(input.as_ref(), VerifyOptions { which, k, corrupt }).map_err(io_err)
        }
        Command::Generate {
            family,
            params,
            n,
            sweep,
        } => cmd_generate(family, params, n, sweep),
        Command::Oracle {
            graph6,
            terminals,
            max_oracle_n,
        } => cmd_oracle(&graph6, &terminals, max_oracle_n),
        Command::Corpus { n, connected } => cmd_corpus(n, connected),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("steiner: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("steiner: {message}");
            ExitCode::from(2)
        }
    }
}
