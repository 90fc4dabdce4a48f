//! Exact perfect-play solving by exhaustive depth-first search with a
//! transposition table keyed by canonical position encodings.

mod canonical;
mod plain;

pub use canonical::{CanonicalKey, Canonicalizer, MAX_DOMAIN};
pub use plain::solve_plain;

use crate::games::{GameSpec, Move, Player, Position, RuleSet, SpecError};
use crate::graph::{automorphisms, Graph, DEFAULT_EXHAUSTIVE_LIMIT};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("node budget of {max_nodes} exhausted after {nodes} nodes; no winner determined")]
    NodeLimit { max_nodes: u64, nodes: u64 },
    #[error("time budget of {max_seconds}s exhausted; no winner determined")]
    TimeLimit { max_seconds: f64 },
    #[error("label domain exceeds {MAX_DOMAIN} labels")]
    DomainTooLarge,
    #[error("cannot pick a move at a terminal position")]
    TerminalPosition,
    #[error(transparent)]
    Spec(#[from] SpecError),
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SolveLimits {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub symmetry: bool,
    pub limits: SolveLimits,
}

impl Default for SolveOptions {
    fn default() -> SolveOptions {
        SolveOptions {
            symmetry: true,
            limits: SolveLimits::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SolveResult {
    pub winner: Player,
    pub best_root_move: Option<Move>,
    pub nodes_expanded: u64,
    pub table_hits: u64,
    pub used_symmetry: bool,
    pub principal_variation: Option<Vec<Move>>,
}

struct Engine<'a> {
    rules: &'a RuleSet<'a>,
    canon: Canonicalizer,
    memo: HashMap<CanonicalKey, Player>,
    nodes: u64,
    hits: u64,
    limits: SolveLimits,
    started: Instant,
}

impl Engine<'_> {
    fn check_limits(&self) -> Result<(), SolveError> {
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
        Ok(())
    }

    fn winner(&mut self, pos: &Position) -> Result<Player, SolveError> {
        if let Some(outcome) = self.rules.terminal_outcome(pos) {
            return Ok(outcome.winner);
        }
        let key = self.canon.key(pos);
        if let Some(&known) = self.memo.get(&key) {
            self.hits += 1;
            return Ok(known);
        }
        self.nodes += 1;
        self.check_limits()?;
        let mover = self.rules.player_to_move(pos);
        let mut value = mover.other();
        for m in self.rules.legal_moves(pos) {
            let child = self
                .rules
                .apply_move(pos, m)
                .expect("legal moves apply cleanly");
            if self.winner(&child)? == mover {
                value = mover;
                break;
            }
        }
        self.memo.insert(key, value);
        Ok(value)
    }

    /// First winning move in board order, else the first legal move.
    /// All losing moves are value-equivalent, so the fixed ordering is
    /// the whole tie-break.
    fn pick_move(&mut self, pos: &Position) -> Result<Option<Move>, SolveError> {
        let mover = self.rules.player_to_move(pos);
        let moves = self.rules.legal_moves(pos);
        let mut fallback = None;
        for m in moves {
            let child = self
                .rules
                .apply_move(pos, m)
                .expect("legal moves apply cleanly");
            if self.winner(&child)? == mover {
                return Ok(Some(m));
            }
            if fallback.is_none() {
                fallback = Some(m);
            }
        }
        Ok(fallback)
    }

    fn principal_variation(&mut self, root: &Position) -> Result<Vec<Move>, SolveError> {
        let mut line = Vec::new();
        let mut pos = root.clone();
        while self.rules.terminal_outcome(&pos).is_none() {
            let m = self
                .pick_move(&pos)?
                .expect("non-terminal positions have moves");
            line.push(m);
            pos = self
                .rules
                .apply_move(&pos, m)
                .expect("legal moves apply cleanly");
        }
        Ok(line)
    }
}

fn build_canonicalizer(spec: &GameSpec, graph: &Graph, symmetry: bool) -> Canonicalizer {
    if symmetry {
        let group = automorphisms(graph, DEFAULT_EXHAUSTIVE_LIMIT);
        Canonicalizer::new(spec, graph, &group)
    } else {
        Canonicalizer::identity(spec, graph)
    }
}

/// Game-theoretic winner of the full game from the empty board, with a
/// certifying root move and a principal variation. Limits abort with an
/// error rather than ever guessing.
pub fn solve(
    spec: &GameSpec,
    graph: &Graph,
    options: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    let rules = RuleSet::new(spec, graph)?;
    if spec.domain_size() > MAX_DOMAIN {
        return Err(SolveError::DomainTooLarge);
    }
    let mut engine = Engine {
        rules: &rules,
        canon: build_canonicalizer(spec, graph, options.symmetry),
        memo: HashMap::new(),
        nodes: 0,
        hits: 0,
        limits: options.limits,
        started: Instant::now(),
    };
    let root = rules.empty_position();
    let winner = engine.winner(&root)?;
    // The decision is what the counters report; move extraction below
    // may expand a few more nodes under the same limits.
    let nodes_expanded = engine.nodes;
    let table_hits = engine.hits;
    let best_root_move = engine.pick_move(&root)?;
    let principal_variation = engine.principal_variation(&root)?;
    Ok(SolveResult {
        winner,
        best_root_move,
        nodes_expanded,
        table_hits,
        used_symmetry: options.symmetry,
        principal_variation: Some(principal_variation),
    })
}

/// Best reply at an arbitrary reachable position: a winning move when
/// one exists, otherwise the first legal move. Terminal positions are
/// an error.
pub fn best_move(
    spec: &GameSpec,
    graph: &Graph,
    pos: &Position,
    options: &SolveOptions,
) -> Result<Move, SolveError> {
    let rules = RuleSet::new(spec, graph)?;
    if spec.domain_size() > MAX_DOMAIN {
        return Err(SolveError::DomainTooLarge);
    }
    if rules.terminal_outcome(pos).is_some() {
        return Err(SolveError::TerminalPosition);
    }
    let mut engine = Engine {
        rules: &rules,
        canon: build_canonicalizer(spec, graph, options.symmetry),
        memo: HashMap::new(),
        nodes: 0,
        hits: 0,
        limits: options.limits,
        started: Instant::now(),
    };
    Ok(engine
        .pick_move(pos)?
        .expect("non-terminal positions have moves"))
}
