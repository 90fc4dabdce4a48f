//! Game definitions: who labels what, which labelings are allowed, and
//! who wins when the music stops.

pub mod canned;
mod position;
mod rules;

pub use canned::{canned_spec, CannedGame};
pub use position::Position;
pub use rules::{MoveError, RuleSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }
}

impl std::fmt::Display for Player {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Player::Alice => write!(f, "Alice"),
            Player::Bob => write!(f, "Bob"),
        }
    }
}

/// Weight of a full edge from its endpoint labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightFn {
    Sum,
    AbsDiff,
}

impl WeightFn {
    pub fn apply(self, x: i64, y: i64) -> i64 {
        match self {
            WeightFn::Sum => x + y,
            WeightFn::AbsDiff => (x - y).abs(),
        }
    }
}

/// Which constraint family the game enforces on partial labelings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase", rename_all_fields = "camelCase")]
pub enum Variant {
    /// Edges get distinct labels; full vertices (all incident edges
    /// labeled) must share one weight, the sum of incident labels.
    VmEdge,
    /// Vertices and edges get distinct labels; a vertex is full when it
    /// and all incident edges are labeled, its weight adds its own label.
    VmTotal,
    /// Vertices get labels; labeled vertices at distance i must have
    /// labels at least `constraints[i-1]` apart. The tuple is
    /// non-increasing; (d, 1) is the classical case, and the radio game
    /// uses (D, D-1, .., 1) with D the diameter.
    Dist { constraints: Vec<u32> },
    /// Vertices get distinct labels; full edges must have pairwise
    /// distinct difference weights.
    EdgeDiff,
    /// Vertices get distinct labels; full edges must have pairwise
    /// distinct sum weights.
    EdgeSum,
    /// Vertices get labels, repeats allowed; adjacent full edges must
    /// have distinct weights under `weight_fn`. With
    /// `min_repeat_distance` 3, equal labels must sit at distance 3 or
    /// more.
    AdjWeight {
        weight_fn: WeightFn,
        min_repeat_distance: u32,
    },
}

/// What the players write labels on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabeledKind {
    Vertices,
    Edges,
    Both,
}

impl Variant {
    pub fn labeled_kind(&self) -> LabeledKind {
        match self {
            Variant::VmEdge => LabeledKind::Edges,
            Variant::VmTotal => LabeledKind::Both,
            _ => LabeledKind::Vertices,
        }
    }

    pub fn required_repeat_policy(&self) -> RepeatPolicy {
        match self {
            Variant::Dist { .. } | Variant::AdjWeight { .. } => RepeatPolicy::RepeatsAllowed,
            _ => RepeatPolicy::NoRepeats,
        }
    }

    pub(crate) fn needs_distances(&self) -> bool {
        match self {
            Variant::Dist { .. } => true,
            Variant::AdjWeight {
                min_repeat_distance,
                ..
            } => *min_repeat_distance > 0,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepeatPolicy {
    NoRepeats,
    RepeatsAllowed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum GoalId {
    /// Holds when no full edge weighs exactly `labelHi + 1`.
    NoForbiddenSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all_fields = "camelCase")]
pub enum Convention {
    /// The side unable to move loses; the other made the last legal move.
    Achievement,
    /// The side unable to move wins.
    Avoidance,
    /// Alice wins iff the board completes.
    MakerBreaker,
    /// Constraints are waived during play; Alice wins iff the goal
    /// predicate holds on the completed board.
    GoalGame { goal_id: GoalId },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LegalityScope {
    Both,
    AliceOnly,
    BobOnly,
}

/// Block sizes of the move schedule: `a` consecutive moves by one side,
/// then `b` by the other, repeating.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bias {
    pub a: u32,
    pub b: u32,
}

impl Bias {
    pub fn alternating() -> Bias {
        Bias { a: 1, b: 1 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("label domain is empty: lo {lo} exceeds hi {hi}")]
    EmptyLabelDomain { lo: i32, hi: i32 },
    #[error("bias blocks must be positive, got {a}:{b}")]
    NonPositiveBias { a: u32, b: u32 },
    #[error("distance constraint tuple must be non-increasing, got {0:?}")]
    IncreasingTuple(Vec<u32>),
    #[error("minimum repeat distance must be 0 or 3, got {0}")]
    BadRepeatDistance(u32),
    #[error("this variant requires the {0:?} repeat policy")]
    WrongRepeatPolicy(RepeatPolicy),
    #[error("graph must have at least one edge for this game")]
    NoEdges,
    #[error("radio game needs a connected graph with a finite diameter")]
    NoDiameter,
    #[error("graph too large to derive a label domain")]
    GraphTooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GameSpec {
    pub variant: Variant,
    pub label_lo: i32,
    pub label_hi: i32,
    pub repeat_policy: RepeatPolicy,
    pub convention: Convention,
    pub bias: Bias,
    pub first_player: Player,
    pub legality_scope: LegalityScope,
}

impl GameSpec {
    pub fn validate(&self) -> Result<(), SpecError> {
        if self.label_lo > self.label_hi {
            return Err(SpecError::EmptyLabelDomain {
                lo: self.label_lo,
                hi: self.label_hi,
            });
        }
        if self.bias.a < 1 || self.bias.b < 1 {
            return Err(SpecError::NonPositiveBias {
                a: self.bias.a,
                b: self.bias.b,
            });
        }
        if let Variant::Dist { constraints } = &self.variant {
            if constraints.windows(2).any(|w| w[0] < w[1]) {
                return Err(SpecError::IncreasingTuple(constraints.clone()));
            }
        }
        if let Variant::AdjWeight {
            min_repeat_distance,
            ..
        } = &self.variant
        {
            if *min_repeat_distance != 0 && *min_repeat_distance != 3 {
                return Err(SpecError::BadRepeatDistance(*min_repeat_distance));
            }
        }
        let required = self.variant.required_repeat_policy();
        if self.repeat_policy != required {
            return Err(SpecError::WrongRepeatPolicy(required));
        }
        Ok(())
    }

    /// Number of labels in the inclusive domain.
    pub fn domain_size(&self) -> usize {
        (self.label_hi as i64 - self.label_lo as i64 + 1) as usize
    }

    /// Mover for the given move index: the first player's block of moves
    /// comes first, then the other side's block, repeating.
    pub fn bias_player(&self, move_count: u32) -> Player {
        let a = u64::from(self.bias.a);
        let b = u64::from(self.bias.b);
        let r = u64::from(move_count) % (a + b);
        let first_block = match self.first_player {
            Player::Alice => a,
            Player::Bob => b,
        };
        if r < first_block {
            self.first_player
        } else {
            self.first_player.other()
        }
    }
}

/// An addressable board cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", rename_all_fields = "camelCase")]
pub enum Element {
    Vertex { index: usize },
    Edge { index: usize },
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Element::Vertex { index } => write!(f, "v{index}"),
            Element::Edge { index } => write!(f, "e{index}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Move {
    pub element: Element,
    pub label: i32,
}

impl std::fmt::Display for Move {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}={}", self.element, self.label)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum OutcomeReason {
    LastMoveAchieved,
    LastMoveAvoided,
    BoardComplete,
    StuckIncomplete,
    GoalHolds,
    GoalFails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Outcome {
    pub winner: Player,
    pub reason: OutcomeReason,
}
