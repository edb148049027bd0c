// SPDX-License-Identifier: Apache-2.0

//! Equivalence scans over graph6 streams.
//!
//! Lines are read in fixed-size chunks, each chunk is evaluated in parallel,
//! and results are emitted in input order, so output is byte-identical for any
//! number of worker threads.

use std::io::{self, BufRead};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::characterization::{
    predicate_sdiam4_is_3, predicate_sdiam4_is_4, predicate_sdiam_k_is_nminus1,
    CharacterizationError,
};
use crate::graph::Graph;
use crate::graph6;
use crate::steiner;

/// Lines evaluated per parallel batch.
pub const CHUNK_LINES: usize = 4096;

/// Reads `input` in chunks, maps each non-empty line with `f` in parallel and
/// hands the results to `emit` in input order. Line indices count only
/// non-blank lines.
pub fn for_each_line<R, T, F, E>(input: R, f: F, mut emit: E) -> io::Result<usize>
where
    R: BufRead,
    T: Send,
    F: Fn(usize, &str) -> T + Sync,
    E: FnMut(T) -> io::Result<()>,
{
    let mut lines = input.lines();
    let mut index = 0;
    loop {
        let mut chunk = Vec::with_capacity(CHUNK_LINES);
        for line in lines.by_ref() {
            let line = line?;
            let trimmed = line.trim_end_matches(['\r', '\n']);
            if trimmed.is_empty() {
                continue;
            }
            chunk.push((index, trimmed.to_owned()));
            index += 1;
            if chunk.len() == CHUNK_LINES {
                break;
            }
        }
        if chunk.is_empty() {
            return Ok(index);
        }
        let results: Vec<T> = chunk.par_iter().map(|(i, line)| f(*i, line)).collect();
        for r in results {
            emit(r)?;
        }
    }
}

/// Which equivalence a scan checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Thm2,
    Thm3,
    Lemma1,
    All,
}

impl FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "thm2" => Ok(Which::Thm2),
            "thm3" => Ok(Which::Thm3),
            "lemma1" => Ok(Which::Lemma1),
            "all" => Ok(Which::All),
            other => Err(format!("unknown check {other:?} (expected thm2, thm3, lemma1 or all)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub which: Which,
    /// Subset size for the non-cut criterion.
    pub k: usize,
    /// Negates the `sdiam_4 = 3` predicate; exists to test the scan itself.
    pub corrupt: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            which: Which::All,
            k: 4,
            corrupt: false,
        }
    }
}

/// A graph on which a predicate disagrees with the computed diameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub graph6: String,
    pub check: &'static str,
    pub k: usize,
    pub sdiam: usize,
    /// Truth of the characterized class, from the computed diameter.
    pub expected: bool,
    /// The predicate's verdict.
    pub got: bool,
}

/// Everything a scan learned about one input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineOutcome {
    Checked {
        n: usize,
        counterexamples: Vec<Counterexample>,
        /// `sdiam_4 = 4` and `sdiam_4 = n - 1` verdicts, recorded at `n = 5`.
        overlap: Option<(bool, bool)>,
    },
    Skipped {
        index: usize,
        reason: String,
    },
    Invalid {
        index: usize,
        message: String,
    },
}

fn mismatch(
    out: &mut Vec<Counterexample>,
    (index, line): (usize, &str),
    check: &'static str,
    (k, sdiam): (usize, usize),
    expected: bool,
    got: bool,
) {
    if expected != got {
        out.push(Counterexample {
            index,
            graph6: line.to_owned(),
            check,
            k,
            sdiam,
            expected,
            got,
        });
    }
}

fn check_graph(
    index: usize,
    line: &str,
    g: &Graph,
    options: &VerifyOptions,
) -> Result<LineOutcome, CharacterizationError> {
    let n = g.order();
    let at = (index, line);
    let mut found = Vec::new();
    let mut overlap = None;
    let wants = |w: Which| options.which == w || options.which == Which::All;
    if wants(Which::Thm2) || wants(Which::Thm3) {
        let sdiam4 = steiner::steiner_diameter(g, 4)?;
        if wants(Which::Thm2) {
            let got = predicate_sdiam4_is_3(g)? != options.corrupt;
            mismatch(&mut found, at, "thm2", (4, sdiam4), sdiam4 == 3, got);
        }
        if wants(Which::Thm3) {
            let got = predicate_sdiam4_is_4(g)?.holds;
            mismatch(&mut found, at, "thm3", (4, sdiam4), sdiam4 == 4, got);
            if n == 5 {
                overlap = Some((got, predicate_sdiam_k_is_nminus1(g, 4)?));
            }
        }
    }
    if wants(Which::Lemma1) {
        let k = options.k;
        let sdiam = steiner::steiner_diameter(g, k)?;
        let got = predicate_sdiam_k_is_nminus1(g, k)?;
        mismatch(&mut found, at, "lemma1", (k, sdiam), sdiam + 1 == n, got);
        let many = g.non_cut_vertices()?.len() > k;
        mismatch(&mut found, at, "cor1", (k, sdiam), sdiam + 2 <= n, many);
    }
    Ok(LineOutcome::Checked {
        n,
        counterexamples: found,
        overlap,
    })
}

/// Smallest order a check accepts.
fn min_order(options: &VerifyOptions) -> usize {
    match options.which {
        Which::Thm2 | Which::Thm3 => 5,
        Which::Lemma1 | Which::All => (options.k + 1).max(5),
    }
}

/// Runs the selected checks on one graph6 line.
pub fn verify_line(index: usize, line: &str, options: &VerifyOptions) -> LineOutcome {
    let g = match graph6::decode(line) {
        Ok(g) => g,
        Err(e) => {
            return LineOutcome::Invalid {
                index,
                message: e.to_string(),
            }
        }
    };
    if !g.is_connected() {
        return LineOutcome::Invalid {
            index,
            message: "graph is disconnected".into(),
        };
    }
    if g.order() < min_order(options) {
        return LineOutcome::Skipped {
            index,
            reason: format!("order {} below {}", g.order(), min_order(options)),
        };
    }
    check_graph(index, line, &g, options).unwrap_or_else(|e| LineOutcome::Invalid {
        index,
        message: e.to_string(),
    })
}

/// Counts accumulated by a scan.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub graphs_processed: usize,
    pub checked: usize,
    pub skipped: usize,
    pub input_errors: usize,
    pub counterexamples: usize,
    /// Order-5 graphs checked against the `= 4` characterization.
    pub n5_graphs: usize,
    /// Order-5 graphs where the `= 4` and `= n - 1` verdicts differ.
    pub n5_verdicts_differ: usize,
}

impl RunReport {
    pub fn absorb(&mut self, outcome: &LineOutcome) {
        self.graphs_processed += 1;
        match outcome {
            LineOutcome::Checked {
                counterexamples,
                overlap,
                ..
            } => {
                self.checked += 1;
                self.counterexamples += counterexamples.len();
                if let Some((eq4, nminus1)) = overlap {
                    self.n5_graphs += 1;
                    self.n5_verdicts_differ += (eq4 != nminus1) as usize;
                }
            }
            LineOutcome::Skipped { .. } => self.skipped += 1,
            LineOutcome::Invalid { .. } => self.input_errors += 1,
        }
    }

    /// 0 when clean, 2 on input errors, otherwise 1 when counterexamples exist.
    pub fn exit_code(&self) -> i32 {
        if self.input_errors > 0 {
            2
        } else if self.counterexamples > 0 {
            1
        } else {
            0
        }
    }
}

/// Scans a slice of graphs in memory, returning every counterexample in order.
pub fn verify_graphs(graphs: &[Graph], options: &VerifyOptions) -> (RunReport, Vec<Counterexample>) {
    let outcomes: Vec<LineOutcome> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| verify_line(i, &graph6::encode(g), options))
        .collect();
    let mut report = RunReport::default();
    let mut found = Vec::new();
    for outcome in outcomes {
        report.absorb(&outcome);
        if let LineOutcome::Checked {
            counterexamples, ..
        } = outcome
        {
            found.extend(counterexamples);
        }
    }
    (report, found)
}
