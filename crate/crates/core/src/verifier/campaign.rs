use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{analyze_checks, Budget, CheckId, CheckOutcome, CorpusSource, SkipReason, Verdict};
use crate::cycles::cycle_lengths;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::chromatic_number_with_budget;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub check: CheckId,
    pub pass: usize,
    pub fail: usize,
    pub skip_hypothesis: usize,
    pub skip_budget: usize,
}

impl CheckTally {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skip_hypothesis + self.skip_budget
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// Position of the graph in the corpus.
    pub index: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_ms: u64,
}

/// Aggregated campaign outcome. Wall time is only present when requested,
/// so reports of equal runs compare byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub corpus: CorpusSource,
    pub graphs: usize,
    pub budget: Budget,
    /// Graphs whose cycle enumeration hit the budget.
    pub incomplete_spectra: usize,
    /// Graphs whose chromatic number hit the solver budget.
    pub unsolved_chi: usize,
    pub checks: Vec<CheckTally>,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn tally(&self, id: CheckId) -> Option<&CheckTally> {
        self.checks.iter().find(|t| t.check == id)
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|t| t.fail).sum()
    }

    pub fn budget_skips(&self) -> usize {
        self.checks.iter().map(|t| t.skip_budget).sum()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per check: `check,pass,fail,skip_hypothesis,skip_budget`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for t in &self.checks {
            w.serialize(t).expect("tallies serialize");
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("CSV output is UTF-8")
    }
}

#[derive(Clone, Copy)]
enum Status {
    Pass,
    Fail,
    SkipHypothesis,
    SkipBudget,
}

impl Status {
    fn of(outcome: &CheckOutcome) -> Self {
        match outcome {
            CheckOutcome::Pass => Status::Pass,
            CheckOutcome::Fail { .. } => Status::Fail,
            CheckOutcome::Skip { reason: SkipReason::Hypothesis } => Status::SkipHypothesis,
            CheckOutcome::Skip { reason: SkipReason::Budget } => Status::SkipBudget,
        }
    }
}

/// What a campaign keeps per graph; full verdicts only for failures.
struct Summary {
    outcomes: Vec<Status>,
    complete: bool,
    solved: bool,
    failed: Option<Verdict>,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    if jobs == 0 {
        return Err(Error::InvalidParameter("at least one worker is required".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))
}

/// Loads `source` and checks every graph. Results are merged in corpus
/// order, so the report does not depend on `jobs`.
pub fn run_campaign(source: &CorpusSource, checks: &BTreeSet<CheckId>, jobs: usize, budget: Budget) -> Result<Report> {
    let graphs = source.load()?;
    run_on_graphs(source.clone(), &graphs, checks, jobs, budget)
}

/// Like [`run_campaign`] for graphs already in memory; `corpus` is only
/// recorded in the report.
pub fn run_on_graphs(
    corpus: CorpusSource,
    graphs: &[Graph],
    checks: &BTreeSet<CheckId>,
    jobs: usize,
    budget: Budget,
) -> Result<Report> {
    let results: Vec<Summary> = pool(jobs)?.install(|| {
        graphs
            .par_iter()
            .map(|g| {
                let verdict = analyze_checks(g, checks, budget);
                Summary {
                    outcomes: verdict.checks.values().map(Status::of).collect(),
                    complete: verdict.spectrum.complete,
                    solved: verdict.chi.is_some(),
                    failed: verdict.has_failure().then_some(verdict),
                }
            })
            .collect()
    });
    let mut tallies: Vec<CheckTally> = checks
        .iter()
        .map(|&check| CheckTally { check, pass: 0, fail: 0, skip_hypothesis: 0, skip_budget: 0 })
        .collect();
    let mut report = Report {
        version: REPORT_VERSION,
        corpus,
        graphs: graphs.len(),
        budget,
        incomplete_spectra: 0,
        unsolved_chi: 0,
        checks: Vec::new(),
        failures: Vec::new(),
        timing: None,
    };
    for (index, summary) in results.into_iter().enumerate() {
        report.incomplete_spectra += usize::from(!summary.complete);
        report.unsolved_chi += usize::from(!summary.solved);
        for (tally, status) in tallies.iter_mut().zip(summary.outcomes) {
            match status {
                Status::Pass => tally.pass += 1,
                Status::Fail => tally.fail += 1,
                Status::SkipHypothesis => tally.skip_hypothesis += 1,
                Status::SkipBudget => tally.skip_budget += 1,
            }
        }
        if let Some(verdict) = summary.failed {
            report.failures.push(Failure { index, verdict });
        }
    }
    report.checks = tallies;
    Ok(report)
}

/// Graph properties to search a corpus for.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinePredicate {
    pub triangle_free: bool,
    /// Required |L(G)|.
    pub odd_length_count: Option<usize>,
    pub chi: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MineResult {
    /// graph6 lines of the matching graphs, in corpus order.
    pub hits: Vec<String>,
    pub scanned: usize,
    /// Graphs a budget kept from being decided.
    pub undecided: usize,
}

enum Match {
    Yes,
    No,
    Undecided,
}

fn matches(g: &Graph, pred: &MinePredicate, budget: Budget) -> Match {
    if pred.triangle_free && !g.is_triangle_free() {
        return Match::No;
    }
    if let Some(t) = pred.odd_length_count {
        let s = cycle_lengths(g, budget.cycles);
        if !s.complete {
            return Match::Undecided;
        }
        if s.odd_lengths.len() != t {
            return Match::No;
        }
    }
    if let Some(c) = pred.chi {
        match chromatic_number_with_budget(g, budget.solver_nodes) {
            Ok((chi, _)) if chi != c => return Match::No,
            Ok(_) => {}
            Err(_) => return Match::Undecided,
        }
    }
    Match::Yes
}

/// Every corpus graph satisfying `pred`. A triangle-free predicate on a
/// generated corpus prunes generation to triangle-free graphs.
pub fn mine(source: &CorpusSource, pred: &MinePredicate, jobs: usize, budget: Budget) -> Result<MineResult> {
    let source = match source {
        &CorpusSource::Generate { n, connected, .. } if pred.triangle_free => {
            CorpusSource::Generate { n, connected, triangle_free: true }
        }
        other => other.clone(),
    };
    let graphs = source.load()?;
    let outcomes: Vec<Match> = pool(jobs)?.install(|| graphs.par_iter().map(|g| matches(g, pred, budget)).collect());
    let mut result = MineResult { scanned: graphs.len(), ..MineResult::default() };
    for (g, m) in graphs.iter().zip(outcomes) {
        match m {
            Match::Yes => result.hits.push(to_graph6(g).expect("graph order is within graph6 range")),
            Match::Undecided => result.undecided += 1,
            Match::No => {}
        }
    }
    Ok(result)
}
