//! Subcommand runners and their text/JSON renderings.

use anyhow::{bail, Result};
use labelgames::analysis::{
    ldone_trend, minimal_span, run_jobs, verify_propositions, PropositionStatus, SolveJob,
    SpanResult,
};
use labelgames::games::{Convention, GameSpec, LegalityScope, Player, Variant, WeightFn};
use labelgames::graph::{graph_to_graph6, Graph};
use labelgames::solver::{SolveError, SolveResult, MAX_DOMAIN};
use serde::Serialize;

use crate::args::{Format, GenArgs, SolveArgs, SpanArgs, TrendArgs, VerifyArgs};
use crate::{EXIT_OK, EXIT_REFUTED, EXIT_UNSOLVED};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
enum SolveStatus {
    Solved,
    Unsolved,
}

/// One solved (or limit-starved) instance, flattened for easy scripting.
#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SolveReport {
    graph_name: String,
    order: usize,
    size: usize,
    graph6: String,
    spec: GameSpec,
    status: SolveStatus,
    winner: Option<Player>,
    best_root_move: Option<String>,
    principal_variation: Option<Vec<String>>,
    nodes_expanded: Option<u64>,
    table_hits: Option<u64>,
    used_symmetry: bool,
    error: Option<String>,
    seconds: f64,
}

pub fn run_solve(args: SolveArgs) -> Result<u8> {
    let graphs = args.graph.load()?;
    let options = args.run.options();
    let mut jobs = Vec::new();
    let mut inputs = Vec::new();
    for (i, g) in graphs.into_iter().enumerate() {
        let spec = args.spec.build(&g)?;
        if spec.domain_size() > MAX_DOMAIN {
            bail!(
                "label domain of {} labels exceeds the solver's limit of {MAX_DOMAIN}",
                spec.domain_size()
            );
        }
        jobs.push(SolveJob {
            id: i.to_string(),
            spec: spec.clone(),
            graph: g.clone(),
            options,
        });
        inputs.push((g, spec));
    }
    let outcomes = run_jobs(jobs);
    let mut reports = Vec::new();
    for ((g, spec), outcome) in inputs.into_iter().zip(outcomes) {
        reports.push(solve_report(&g, spec, outcome.result, outcome.seconds, options.symmetry)?);
    }
    match args.format {
        Format::Json if args.graph.is_batch() => print_json(&reports)?,
        Format::Json => print_json(&reports[0])?,
        Format::Text => {
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                print_solve_text(r);
            }
        }
    }
    let unsolved = reports.iter().filter(|r| r.status == SolveStatus::Unsolved).count();
    if unsolved > 0 {
        eprintln!(
            "error: {unsolved} of {} solve(s) hit resource limits and stay unsolved",
            reports.len()
        );
        return Ok(EXIT_UNSOLVED);
    }
    Ok(EXIT_OK)
}

fn solve_report(
    g: &Graph,
    spec: GameSpec,
    result: Result<SolveResult, SolveError>,
    seconds: f64,
    used_symmetry: bool,
) -> Result<SolveReport> {
    let base = SolveReport {
        graph_name: g.display_name(),
        order: g.n(),
        size: g.m(),
        graph6: graph_to_graph6(g),
        spec,
        status: SolveStatus::Unsolved,
        winner: None,
        best_root_move: None,
        principal_variation: None,
        nodes_expanded: None,
        table_hits: None,
        used_symmetry,
        error: None,
        seconds,
    };
    match result {
        Ok(r) => Ok(SolveReport {
            status: SolveStatus::Solved,
            winner: Some(r.winner),
            best_root_move: r.best_root_move.map(|m| m.to_string()),
            principal_variation: r
                .principal_variation
                .map(|pv| pv.iter().map(|m| m.to_string()).collect()),
            nodes_expanded: Some(r.nodes_expanded),
            table_hits: Some(r.table_hits),
            used_symmetry: r.used_symmetry,
            ..base
        }),
        Err(e @ (SolveError::NodeLimit { .. } | SolveError::TimeLimit { .. })) => Ok(SolveReport {
            error: Some(e.to_string()),
            ..base
        }),
        Err(other) => Err(other.into()),
    }
}

fn print_solve_text(r: &SolveReport) {
    println!(
        "graph: {} (n={}, m={}, graph6 {})",
        r.graph_name, r.order, r.size, r.graph6
    );
    println!("rules: {}", spec_summary(&r.spec));
    match r.status {
        SolveStatus::Solved => {
            println!("winner: {}", player_word(r.winner));
            if let Some(m) = &r.best_root_move {
                println!("best move: {m}");
            }
            if let Some(pv) = &r.principal_variation {
                println!("principal variation: {}", pv.join(" "));
            }
            println!(
                "nodes: {}  table hits: {}  symmetry: {}  time: {:.3}s",
                r.nodes_expanded.unwrap_or(0),
                r.table_hits.unwrap_or(0),
                if r.used_symmetry { "on" } else { "off" },
                r.seconds
            );
        }
        SolveStatus::Unsolved => {
            println!("unsolved: {}", r.error.as_deref().unwrap_or("limits hit"));
        }
    }
}

pub fn run_span(args: SpanArgs) -> Result<u8> {
    let g = args.graph.load_one("span")?;
    let variant = args.variant.build(&g)?;
    if args.s_min > args.s_max {
        bail!("--s-min must not exceed --s-max");
    }
    let result = minimal_span(&variant, &g, args.s_min, args.s_max, &args.run.options());
    match args.format {
        Format::Json => print_json(&result)?,
        Format::Text => print_span_text(&result),
    }
    let unsolved = result.per_span.iter().filter(|c| c.winner.is_none()).count();
    if unsolved > 0 {
        eprintln!("error: {unsolved} span cell(s) hit resource limits and stay unsolved");
        return Ok(EXIT_UNSOLVED);
    }
    Ok(EXIT_OK)
}

fn print_span_text(result: &SpanResult) {
    println!("graph: {} (graph6 {})", result.graph_name, result.graph6);
    println!("variant: {}", variant_summary(&result.variant));
    for cell in &result.per_span {
        println!("s={}: {} (nodes {})", cell.s, player_word(cell.winner), cell.nodes);
    }
    match result.minimal_alice_span {
        Some(s) => println!(
            "minimal Alice span: {s}{}",
            if result.minimal_span_reliable { "" } else { " (unreliable: unsolved cells below)" }
        ),
        None => println!("minimal Alice span: none found in this range"),
    }
    println!(
        "monotone after first win: {}",
        if result.monotone_after_first_win { "yes" } else { "no" }
    );
}

pub fn run_verify(args: VerifyArgs) -> Result<u8> {
    let reports = verify_propositions(&args.limits.limits());
    match args.format {
        Format::Json => print_json(&reports)?,
        Format::Text => {
            for r in &reports {
                println!(
                    "{:<14} {:<9} expected {:<5} solved {:<8} nodes {:>8}  {:.3}s  {}",
                    r.case_id,
                    status_word(r.status),
                    player_word(Some(r.expected_winner)),
                    player_word(r.solved_winner),
                    r.nodes,
                    r.seconds,
                    r.description
                );
            }
        }
    }
    let refuted = reports.iter().filter(|r| r.status == PropositionStatus::Refuted).count();
    let unsolved = reports.iter().filter(|r| r.status == PropositionStatus::Unsolved).count();
    let confirmed = reports.len() - refuted - unsolved;
    if args.format == Format::Text {
        println!(
            "{} cases: {confirmed} confirmed, {refuted} refuted, {unsolved} unsolved",
            reports.len()
        );
    }
    if refuted > 0 {
        eprintln!("error: {refuted} proposition(s) refuted by exhaustive search");
        return Ok(EXIT_REFUTED);
    }
    if unsolved > 0 {
        eprintln!("error: {unsolved} proposition(s) unsolved within the resource limits");
        return Ok(EXIT_UNSOLVED);
    }
    Ok(EXIT_OK)
}

pub fn run_trend(args: TrendArgs) -> Result<u8> {
    if args.d.iter().all(|&d| d == 0) {
        bail!("--d needs at least one positive gap");
    }
    let rows = ldone_trend(&args.d, args.n_max, &args.run.options());
    match args.format {
        Format::Json => print_json(&rows)?,
        Format::Text => {
            println!(
                "{:<12} {:>2} {:>5}  {:>7}  {:>11}  {:>9}  reference",
                "graph", "d", "order", "minimal", "searched<=", "estimate"
            );
            for r in &rows {
                println!(
                    "{:<12} {:>2} {:>5}  {:>7}  {:>11}  {:>9.2}  {}",
                    r.graph_name,
                    r.d,
                    r.order,
                    r.minimal_alice_span.map_or("?".to_string(), |s| s.to_string()),
                    r.searched_up_to,
                    r.reference_estimate,
                    r.reference_formula
                );
            }
        }
    }
    let unsolved = rows.iter().filter(|r| r.minimal_alice_span.is_none()).count();
    if unsolved > 0 {
        eprintln!("error: {unsolved} trend row(s) have no reliable minimal span in the searched range");
        return Ok(EXIT_UNSOLVED);
    }
    Ok(EXIT_OK)
}

pub fn run_gen(args: GenArgs) -> Result<u8> {
    let graphs = args.graph.load()?;
    match args.format {
        Format::Text => {
            for g in &graphs {
                println!("{}", graph_to_graph6(g));
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            #[serde(rename_all = "camelCase")]
            struct GenRow {
                name: String,
                order: usize,
                size: usize,
                graph6: String,
            }
            let rows: Vec<GenRow> = graphs
                .iter()
                .map(|g| GenRow {
                    name: g.display_name(),
                    order: g.n(),
                    size: g.m(),
                    graph6: graph_to_graph6(g),
                })
                .collect();
            print_json(&rows)?;
        }
    }
    Ok(EXIT_OK)
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn player_word(p: Option<Player>) -> &'static str {
    match p {
        Some(Player::Alice) => "Alice",
        Some(Player::Bob) => "Bob",
        None => "unsolved",
    }
}

fn status_word(s: PropositionStatus) -> &'static str {
    match s {
        PropositionStatus::Confirmed => "confirmed",
        PropositionStatus::Refuted => "refuted",
        PropositionStatus::Unsolved => "unsolved",
    }
}

pub fn variant_summary(variant: &Variant) -> String {
    match variant {
        Variant::VmEdge => "vertex-magic edge labeling".into(),
        Variant::VmTotal => "vertex-magic total labeling".into(),
        Variant::Dist { constraints } => {
            let tuple: Vec<String> = constraints.iter().map(u32::to_string).collect();
            format!("distance gaps ({})", tuple.join(","))
        }
        Variant::EdgeDiff => "distinct edge differences".into(),
        Variant::EdgeSum => "distinct edge sums".into(),
        Variant::AdjWeight {
            weight_fn,
            min_repeat_distance,
        } => {
            let f = match weight_fn {
                WeightFn::Sum => "sum",
                WeightFn::AbsDiff => "absdiff",
            };
            if *min_repeat_distance > 0 {
                format!("distinct adjacent {f} weights, equal labels {min_repeat_distance}+ apart")
            } else {
                format!("distinct adjacent {f} weights")
            }
        }
    }
}

pub fn spec_summary(spec: &GameSpec) -> String {
    let convention = match spec.convention {
        Convention::Achievement => "achievement (the last mover wins)",
        Convention::Avoidance => "avoidance (the stuck player wins)",
        Convention::MakerBreaker => "maker-breaker (Alice wants the board complete)",
        Convention::GoalGame { .. } => "goal game (Alice wants no full edge to weigh s+1)",
    };
    let scope = match spec.legality_scope {
        LegalityScope::Both => "both sides",
        LegalityScope::AliceOnly => "Alice only",
        LegalityScope::BobOnly => "Bob only",
    };
    format!(
        "{}; labels {}..{}; {}; bias {}:{}; {} first; constraints bind {}",
        variant_summary(&spec.variant),
        spec.label_lo,
        spec.label_hi,
        convention,
        spec.bias.a,
        spec.bias.b,
        player_word(Some(spec.first_player)),
        scope
    )
}
