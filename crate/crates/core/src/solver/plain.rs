//! Bare-bones reference solver: straight recursion over legal moves, no
//! memo table, no symmetry. The recursion carries absolute winners
//! rather than a mover-relative flag because biased schedules let the
//! same player move twice in a row. Deliberately written apart from the
//! main engine so the two can act as oracles for each other.

use super::{SolveError, SolveLimits, SolveResult};
use crate::games::{GameSpec, Player, Position, RuleSet};
use crate::graph::Graph;
use std::time::Instant;

struct PlainSearch<'a> {
    rules: &'a RuleSet<'a>,
    nodes: u64,
    limits: SolveLimits,
    started: Instant,
}

impl PlainSearch<'_> {
    fn winner_from(&mut self, pos: &Position) -> Result<Player, SolveError> {
        if let Some(outcome) = self.rules.terminal_outcome(pos) {
            return Ok(outcome.winner);
        }
        self.nodes += 1;
        if let Some(max) = self.limits.max_nodes {
            if self.nodes > max {
                return Err(SolveError::NodeLimit {
                    max_nodes: max,
                    nodes: self.nodes,
                });
            }
        }
        if let Some(max) = self.limits.max_seconds {
            if self.nodes.is_multiple_of(1024) && self.started.elapsed().as_secs_f64() > max {
                return Err(SolveError::TimeLimit { max_seconds: max });
            }
        }
        let mover = self.rules.player_to_move(pos);
        for m in self.rules.legal_moves(pos) {
            let child = self
                .rules
                .apply_move(pos, m)
                .expect("legal moves apply cleanly");
            if self.winner_from(&child)? == mover {
                return Ok(mover);
            }
        }
        Ok(mover.other())
    }
}

/// Solves by plain exhaustive recursion. Same contract as `solve`, but
/// independent machinery: no transposition table, no canonicalization,
/// no principal variation.
pub fn solve_plain(
    spec: &GameSpec,
    graph: &Graph,
    limits: SolveLimits,
) -> Result<SolveResult, SolveError> {
    let rules = RuleSet::new(spec, graph)?;
    let root = rules.empty_position();
    let mut search = PlainSearch {
        rules: &rules,
        nodes: 0,
        limits,
        started: Instant::now(),
    };
    let root_mover = rules.player_to_move(&root);

    if let Some(outcome) = rules.terminal_outcome(&root) {
        return Ok(SolveResult {
            winner: outcome.winner,
            best_root_move: None,
            nodes_expanded: 0,
            table_hits: 0,
            used_symmetry: false,
            principal_variation: None,
        });
    }

    search.nodes += 1;
    let mut winner = root_mover.other();
    let mut best_root_move = None;
    for m in rules.legal_moves(&root) {
        let child = rules.apply_move(&root, m).expect("legal moves apply cleanly");
        if search.winner_from(&child)? == root_mover {
            winner = root_mover;
            best_root_move = Some(m);
            break;
        }
        if best_root_move.is_none() {
            best_root_move = Some(m);
        }
    }
    Ok(SolveResult {
        winner,
        best_root_move,
        nodes_expanded: search.nodes,
        table_hits: 0,
        used_symmetry: false,
        principal_variation: None,
    })
}
