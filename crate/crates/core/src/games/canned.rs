//! Ready-made specs with the customary label domains: the graceful game
//! takes s = |E|+1, the cycle sum game s = n, the magic games use
//! {1..|E|} or {1..|V|+|E|}, distance games use {0..s}.

use super::{
    Bias, Convention, GameSpec, GoalId, LegalityScope, Player, SpecError, Variant, WeightFn,
};
use crate::graph::{distance_matrix, Graph};

/// Selector for `canned_spec`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CannedGame {
    Graceful,
    CycleSum,
    Ld1 { d: u32, s: i32 },
    Radio { s: i32 },
    VmEdge,
    VmTotal,
    AdjExample { weight_fn: WeightFn, repaired: bool },
    GoalCycle,
}

pub fn canned_spec(game: &CannedGame, g: &Graph) -> Result<GameSpec, SpecError> {
    match game {
        CannedGame::Graceful => graceful(g),
        CannedGame::CycleSum => cycle_sum(g),
        CannedGame::Ld1 { d, s } => ld1(*d, *s),
        CannedGame::Radio { s } => radio(g, *s),
        CannedGame::VmEdge => vm_edge(g),
        CannedGame::VmTotal => vm_total(g),
        CannedGame::AdjExample {
            weight_fn,
            repaired,
        } => adj_example(g, *weight_fn, *repaired),
        CannedGame::GoalCycle => goal_cycle(g),
    }
}

fn finish(spec: GameSpec) -> Result<GameSpec, SpecError> {
    spec.validate()?;
    Ok(spec)
}

fn small(x: usize) -> Result<i32, SpecError> {
    i32::try_from(x).map_err(|_| SpecError::GraphTooLarge)
}

fn defaults(variant: Variant, lo: i32, hi: i32) -> GameSpec {
    let repeat_policy = variant.required_repeat_policy();
    GameSpec {
        variant,
        label_lo: lo,
        label_hi: hi,
        repeat_policy,
        convention: Convention::MakerBreaker,
        bias: Bias::alternating(),
        first_player: Player::Alice,
        legality_scope: LegalityScope::Both,
    }
}

/// Distinct difference weights on vertices, labels {1..|E|+1}: Alice
/// completes the board exactly when the labeling is graceful.
pub fn graceful(g: &Graph) -> Result<GameSpec, SpecError> {
    let hi = small(g.m() + 1)?;
    finish(defaults(Variant::EdgeDiff, 1, hi))
}

/// Distinct sum weights on vertices, labels {1..n}.
pub fn cycle_sum(g: &Graph) -> Result<GameSpec, SpecError> {
    let hi = small(g.n())?;
    finish(defaults(Variant::EdgeSum, 1, hi))
}

/// Labels {0..s}, gap d across edges and distinct labels at distance 2.
pub fn ld1(d: u32, s: i32) -> Result<GameSpec, SpecError> {
    finish(defaults(
        Variant::Dist {
            constraints: vec![d, 1],
        },
        0,
        s,
    ))
}

/// Labels {0..s} with the gap tuple (D, D-1, .., 1), D the diameter.
pub fn radio(g: &Graph, s: i32) -> Result<GameSpec, SpecError> {
    let dm = distance_matrix(g);
    if !dm.is_connected() {
        return Err(SpecError::NoDiameter);
    }
    let diameter = dm.diameter().unwrap_or(0);
    let constraints: Vec<u32> = (1..=diameter).rev().collect();
    finish(defaults(Variant::Dist { constraints }, 0, s))
}

/// Distinct edge labels {1..|E|}; full vertices must agree on weight.
/// Played to the last legal move by default.
pub fn vm_edge(g: &Graph) -> Result<GameSpec, SpecError> {
    if g.m() == 0 {
        return Err(SpecError::NoEdges);
    }
    let hi = small(g.m())?;
    let mut spec = defaults(Variant::VmEdge, 1, hi);
    spec.convention = Convention::Achievement;
    finish(spec)
}

/// Distinct labels {1..|V|+|E|} on vertices and edges together.
pub fn vm_total(g: &Graph) -> Result<GameSpec, SpecError> {
    let hi = small(g.n() + g.m())?;
    let mut spec = defaults(Variant::VmTotal, 1, hi);
    spec.convention = Convention::Achievement;
    finish(spec)
}

/// Adjacent full edges must differ in weight; labels {1..n} with repeats
/// allowed. `repaired` adds the distance-3 rule for equal labels.
pub fn adj_example(g: &Graph, weight_fn: WeightFn, repaired: bool) -> Result<GameSpec, SpecError> {
    let hi = small(g.n())?;
    finish(defaults(
        Variant::AdjWeight {
            weight_fn,
            min_repeat_distance: if repaired { 3 } else { 0 },
        },
        1,
        hi,
    ))
}

/// Sum weights with constraints waived during play; Bob opens, and Alice
/// wins iff no edge of the finished board sums to n+1.
pub fn goal_cycle(g: &Graph) -> Result<GameSpec, SpecError> {
    let hi = small(g.n())?;
    let mut spec = defaults(Variant::EdgeSum, 1, hi);
    spec.convention = Convention::GoalGame {
        goal_id: GoalId::NoForbiddenSum,
    };
    spec.first_player = Player::Bob;
    finish(spec)
}
