//! Minimal-span search: sweep the label domain ceiling s over a range,
//! solve the Maker-Breaker game at each s, and report the least s where
//! Alice wins, plus whether her wins stay wins as s grows.

use crate::games::{Bias, Convention, GameSpec, LegalityScope, Player, Variant};
use crate::graph::{graph_to_graph6, Graph};
use crate::parallel::par_map;
use crate::solver::{solve, SolveOptions};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpanCell {
    pub s: i32,
    /// None when the solve hit a limit; never a guess.
    pub winner: Option<Player>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpanResult {
    pub graph_name: String,
    pub graph6: String,
    pub variant: Variant,
    pub per_span: Vec<SpanCell>,
    pub minimal_alice_span: Option<i32>,
    /// False when an unsolved cell below the reported minimum (or
    /// anywhere, if no Alice win was found) leaves the answer open.
    pub minimal_span_reliable: bool,
    pub monotone_after_first_win: bool,
}

/// The Maker-Breaker spec this family uses at span s: labels {0..s} for
/// distance games, {1..s} otherwise.
pub fn spec_for_span(variant: &Variant, s: i32) -> GameSpec {
    let label_lo = if matches!(variant, Variant::Dist { .. }) {
        0
    } else {
        1
    };
    GameSpec {
        variant: variant.clone(),
        label_lo,
        label_hi: s,
        repeat_policy: variant.required_repeat_policy(),
        convention: Convention::MakerBreaker,
        bias: Bias::alternating(),
        first_player: Player::Alice,
        legality_scope: LegalityScope::Both,
    }
}

/// Solves every span in `s_min..=s_max` (clamped below to the smallest
/// s giving a nonempty domain). Cells run in parallel.
pub fn minimal_span(
    variant: &Variant,
    g: &Graph,
    s_min: i32,
    s_max: i32,
    options: &SolveOptions,
) -> SpanResult {
    assert!(s_min <= s_max, "span range is empty");
    let lo = if matches!(variant, Variant::Dist { .. }) {
        0
    } else {
        1
    };
    let spans: Vec<i32> = (s_min.max(lo)..=s_max).collect();
    let per_span = par_map(spans, |s| {
        let spec = spec_for_span(variant, s);
        match solve(&spec, g, options) {
            Ok(res) => SpanCell {
                s,
                winner: Some(res.winner),
                nodes: res.nodes_expanded,
            },
            Err(_) => SpanCell {
                s,
                winner: None,
                nodes: 0,
            },
        }
    });

    let minimal_alice_span = per_span
        .iter()
        .find(|c| c.winner == Some(Player::Alice))
        .map(|c| c.s);
    let minimal_span_reliable = match minimal_alice_span {
        Some(s) => per_span.iter().filter(|c| c.s < s).all(|c| c.winner.is_some()),
        None => per_span.iter().all(|c| c.winner.is_some()),
    };
    let monotone_after_first_win = match minimal_alice_span {
        Some(s) => per_span
            .iter()
            .filter(|c| c.s > s)
            .all(|c| c.winner != Some(Player::Bob)),
        None => true,
    };
    SpanResult {
        graph_name: g.display_name(),
        graph6: graph_to_graph6(g),
        variant: variant.clone(),
        per_span,
        minimal_alice_span,
        minimal_span_reliable,
        monotone_after_first_win,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MonotonicityViolation {
    pub graph_name: String,
    /// Alice wins at this s but loses at s+1.
    pub s: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MonotonicityReport {
    pub results: Vec<SpanResult>,
    pub violations: Vec<MonotonicityViolation>,
    pub fully_solved: bool,
}

/// Sweeps several graphs and flags any s where Alice wins at s but Bob
/// wins at s+1. Empirical evidence only; nothing is asserted.
pub fn monotonicity_scan(
    variant: &Variant,
    graphs: &[Graph],
    s_min: i32,
    s_max: i32,
    options: &SolveOptions,
) -> MonotonicityReport {
    let results: Vec<SpanResult> = graphs
        .iter()
        .map(|g| minimal_span(variant, g, s_min, s_max, options))
        .collect();
    let mut violations = Vec::new();
    for res in &results {
        for pair in res.per_span.windows(2) {
            if pair[0].winner == Some(Player::Alice) && pair[1].winner == Some(Player::Bob) {
                violations.push(MonotonicityViolation {
                    graph_name: res.graph_name.clone(),
                    s: pair[0].s,
                });
            }
        }
    }
    let fully_solved = results
        .iter()
        .all(|r| r.per_span.iter().all(|c| c.winner.is_some()));
    MonotonicityReport {
        results,
        violations,
        fully_solved,
    }
}
