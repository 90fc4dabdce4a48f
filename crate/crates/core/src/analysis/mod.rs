//! Batch experiments over solved instances: job running, minimal-span
//! search, monotonicity scans, the proposition verification suite, the
//! odd-order implication cross-check, and the distance-game trend table.

pub mod battery;
mod implication;
mod span;
mod trend;
mod verify;

pub use battery::{oracle_battery, BatteryInstance};
pub use implication::{implication_battery, implication_check, ImplicationReport, ImplicationRow};
pub use span::{
    minimal_span, monotonicity_scan, spec_for_span, MonotonicityReport, MonotonicityViolation,
    SpanCell, SpanResult,
};
pub use trend::{ldone_trend, TrendRow};
pub use verify::{verify_propositions, PropositionReport, PropositionStatus};

use crate::games::GameSpec;
use crate::graph::Graph;
use crate::parallel::{par_map, seq_map};
use crate::solver::{solve, SolveError, SolveOptions, SolveResult};
use std::time::Instant;

/// One solve instance with a stable id for reports.
#[derive(Debug, Clone)]
pub struct SolveJob {
    pub id: String,
    pub spec: GameSpec,
    pub graph: Graph,
    pub options: SolveOptions,
}

#[derive(Debug, Clone)]
pub struct JobOutcome {
    pub id: String,
    pub result: Result<SolveResult, SolveError>,
    pub seconds: f64,
}

fn run_one(job: SolveJob) -> JobOutcome {
    let started = Instant::now();
    let result = solve(&job.spec, &job.graph, &job.options);
    JobOutcome {
        id: job.id,
        result,
        seconds: started.elapsed().as_secs_f64(),
    }
}

/// Runs independent jobs, in parallel when the `parallel` feature is
/// on. Outcomes keep the input order.
pub fn run_jobs(jobs: Vec<SolveJob>) -> Vec<JobOutcome> {
    par_map(jobs, run_one)
}

/// Sequential twin of `run_jobs`, kept available under every feature
/// set for timing comparisons.
pub fn run_jobs_seq(jobs: Vec<SolveJob>) -> Vec<JobOutcome> {
    seq_map(jobs, run_one)
}
