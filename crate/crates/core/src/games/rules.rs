//! The rule engine: structural moves, the legality predicate per
//! variant, terminal detection, and outcomes per convention.
//!
//! Legality is stateless: a move is legal iff the variant's global
//! predicate still holds afterwards. Violations never heal (a bad pair
//! of weights or labels stays bad once written), so a bound mover at a
//! violated position simply has no legal moves.

use super::position::Position;
use super::{
    Convention, Element, GameSpec, GoalId, LabeledKind, Move, Outcome, OutcomeReason, Player,
    RepeatPolicy, SpecError, Variant, WeightFn,
};
use crate::graph::{distance_matrix, DistanceMatrix, Graph};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("element {0} does not exist in this game")]
    UnknownElement(Element),
    #[error("element {0} is already labeled")]
    AlreadyLabeled(Element),
    #[error("label {0} is outside the domain")]
    LabelOutOfDomain(i32),
    #[error("label {0} was already used")]
    LabelReused(i32),
}

/// A spec bound to a graph, with the distance matrix precomputed when
/// the variant needs one. All methods are pure.
pub struct RuleSet<'a> {
    spec: &'a GameSpec,
    graph: &'a Graph,
    kind: LabeledKind,
    slots: usize,
    dist: Option<DistanceMatrix>,
}

impl<'a> RuleSet<'a> {
    pub fn new(spec: &'a GameSpec, graph: &'a Graph) -> Result<RuleSet<'a>, SpecError> {
        spec.validate()?;
        let kind = spec.variant.labeled_kind();
        let slots = match kind {
            LabeledKind::Vertices => graph.n(),
            LabeledKind::Edges => graph.m(),
            LabeledKind::Both => graph.n() + graph.m(),
        };
        let dist = if spec.variant.needs_distances() {
            Some(distance_matrix(graph))
        } else {
            None
        };
        Ok(RuleSet {
            spec,
            graph,
            kind,
            slots,
            dist,
        })
    }

    pub fn spec(&self) -> &GameSpec {
        self.spec
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn slot_count(&self) -> usize {
        self.slots
    }

    pub fn empty_position(&self) -> Position {
        let tracked = match self.spec.repeat_policy {
            RepeatPolicy::NoRepeats => self.spec.domain_size(),
            RepeatPolicy::RepeatsAllowed => 0,
        };
        Position::new(self.slots, tracked)
    }

    pub fn player_to_move(&self, pos: &Position) -> Player {
        self.spec.bias_player(pos.move_count())
    }

    pub fn slot_element(&self, slot: usize) -> Element {
        match self.kind {
            LabeledKind::Vertices => Element::Vertex { index: slot },
            LabeledKind::Edges => Element::Edge { index: slot },
            LabeledKind::Both => {
                if slot < self.graph.n() {
                    Element::Vertex { index: slot }
                } else {
                    Element::Edge {
                        index: slot - self.graph.n(),
                    }
                }
            }
        }
    }

    pub fn element_slot(&self, element: Element) -> Option<usize> {
        match (self.kind, element) {
            (LabeledKind::Vertices | LabeledKind::Both, Element::Vertex { index })
                if index < self.graph.n() =>
            {
                Some(index)
            }
            (LabeledKind::Edges, Element::Edge { index }) if index < self.graph.m() => Some(index),
            (LabeledKind::Both, Element::Edge { index }) if index < self.graph.m() => {
                Some(self.graph.n() + index)
            }
            _ => None,
        }
    }

    fn mover_is_bound(&self, mover: Player) -> bool {
        match self.spec.legality_scope {
            super::LegalityScope::Both => true,
            super::LegalityScope::AliceOnly => mover == Player::Alice,
            super::LegalityScope::BobOnly => mover == Player::Bob,
        }
    }

    /// Weight of a full edge under the variant's weight function; None
    /// for variants without edge weights or when an endpoint is bare.
    pub fn edge_weight(&self, pos: &Position, e: usize) -> Option<i64> {
        let wf = match &self.spec.variant {
            Variant::EdgeDiff => WeightFn::AbsDiff,
            Variant::EdgeSum => WeightFn::Sum,
            Variant::AdjWeight { weight_fn, .. } => *weight_fn,
            _ => return None,
        };
        let (u, v) = self.graph.edge(e);
        let lu = pos.label(u)?;
        let lv = pos.label(v)?;
        Some(wf.apply(i64::from(lu), i64::from(lv)))
    }

    /// Weight of a full vertex in the magic games: sum of incident edge
    /// labels, plus the vertex's own label in the total variant. None
    /// for other variants or when any required label is missing. An
    /// isolated vertex is vacuously full with weight 0.
    pub fn vertex_weight(&self, pos: &Position, v: usize) -> Option<i64> {
        match self.spec.variant {
            Variant::VmEdge => {
                let mut sum = 0i64;
                for &e in self.graph.incident_edges(v) {
                    sum += i64::from(pos.label(e)?);
                }
                Some(sum)
            }
            Variant::VmTotal => {
                let mut sum = i64::from(pos.label(v)?);
                for &e in self.graph.incident_edges(v) {
                    sum += i64::from(pos.label(self.graph.n() + e)?);
                }
                Some(sum)
            }
            _ => None,
        }
    }

    /// The variant's global predicate on the partial labeling. Under the
    /// goal convention constraints are waived, so this is always true.
    pub fn constraint_ok(&self, pos: &Position) -> bool {
        if matches!(self.spec.convention, Convention::GoalGame { .. }) {
            return true;
        }
        self.predicate_ok(pos)
    }

    fn predicate_ok(&self, pos: &Position) -> bool {
        match &self.spec.variant {
            Variant::VmEdge | Variant::VmTotal => {
                let mut magic: Option<i64> = None;
                for v in 0..self.graph.n() {
                    if let Some(w) = self.vertex_weight(pos, v) {
                        match magic {
                            None => magic = Some(w),
                            Some(k) if k != w => return false,
                            Some(_) => {}
                        }
                    }
                }
                true
            }
            Variant::Dist { constraints } => {
                let dm = self.dist.as_ref().expect("distance matrix precomputed");
                for v in 0..self.graph.n() {
                    let Some(lv) = pos.label(v) else { continue };
                    for w in (v + 1)..self.graph.n() {
                        let Some(lw) = pos.label(w) else { continue };
                        if !dist_pair_ok(constraints, dm.dist(v, w), lv, lw) {
                            return false;
                        }
                    }
                }
                true
            }
            Variant::EdgeDiff | Variant::EdgeSum => {
                let mut seen: Vec<i64> = Vec::new();
                for e in 0..self.graph.m() {
                    if let Some(w) = self.edge_weight(pos, e) {
                        if seen.contains(&w) {
                            return false;
                        }
                        seen.push(w);
                    }
                }
                true
            }
            Variant::AdjWeight {
                min_repeat_distance,
                ..
            } => {
                for e in 0..self.graph.m() {
                    let Some(we) = self.edge_weight(pos, e) else {
                        continue;
                    };
                    let (u, v) = self.graph.edge(e);
                    for x in [u, v] {
                        for &f in self.graph.incident_edges(x) {
                            if f <= e {
                                continue;
                            }
                            if self.edge_weight(pos, f) == Some(we) {
                                return false;
                            }
                        }
                    }
                }
                if *min_repeat_distance > 0 {
                    let dm = self.dist.as_ref().expect("distance matrix precomputed");
                    for v in 0..self.graph.n() {
                        let Some(lv) = pos.label(v) else { continue };
                        for w in (v + 1)..self.graph.n() {
                            if pos.label(w) == Some(lv) {
                                // Unreachable pairs count as far apart.
                                if let Some(d) = dm.dist(v, w) {
                                    if u64::from(d) < u64::from(*min_repeat_distance) {
                                        return false;
                                    }
                                }
                            }
                        }
                    }
                }
                true
            }
        }
    }

    /// Whether writing `label` into `slot` keeps the predicate true.
    /// Assumes the predicate holds at `pos`; only constraints touching
    /// the new label are examined.
    fn move_keeps_ok(&self, pos: &Position, slot: usize, label: i32) -> bool {
        match &self.spec.variant {
            Variant::VmEdge | Variant::VmTotal => self.vm_move_ok(pos, slot, label),
            Variant::Dist { constraints } => {
                let dm = self.dist.as_ref().expect("distance matrix precomputed");
                for w in 0..self.graph.n() {
                    if w == slot {
                        continue;
                    }
                    let Some(lw) = pos.label(w) else { continue };
                    if !dist_pair_ok(constraints, dm.dist(slot, w), label, lw) {
                        return false;
                    }
                }
                true
            }
            Variant::EdgeDiff | Variant::EdgeSum => {
                let wf = match self.spec.variant {
                    Variant::EdgeDiff => WeightFn::AbsDiff,
                    _ => WeightFn::Sum,
                };
                let mut seen: Vec<i64> = Vec::new();
                for e in 0..self.graph.m() {
                    if let Some(w) = self.edge_weight(pos, e) {
                        seen.push(w);
                    }
                }
                for &w in self.graph.neighbors(slot) {
                    let Some(lw) = pos.label(w) else { continue };
                    let nw = wf.apply(i64::from(label), i64::from(lw));
                    if seen.contains(&nw) {
                        return false;
                    }
                    seen.push(nw);
                }
                true
            }
            Variant::AdjWeight {
                weight_fn,
                min_repeat_distance,
            } => self.adj_weight_move_ok(pos, slot, label, *weight_fn, *min_repeat_distance),
        }
    }

    fn vm_move_ok(&self, pos: &Position, slot: usize, label: i32) -> bool {
        // Vertices whose fullness the new label can complete: the
        // labeled vertex itself in the total game, the edge's endpoints
        // otherwise.
        let n = self.graph.n();
        let affected: [Option<usize>; 2] = match self.kind {
            LabeledKind::Edges => {
                let (u, v) = self.graph.edge(slot);
                [Some(u), Some(v)]
            }
            LabeledKind::Both => {
                if slot < n {
                    [Some(slot), None]
                } else {
                    let (u, v) = self.graph.edge(slot - n);
                    [Some(u), Some(v)]
                }
            }
            LabeledKind::Vertices => unreachable!("magic games label edges"),
        };
        // The position is consistent, so any one full vertex fixes the
        // magic constant.
        let mut magic: Option<i64> = None;
        for v in 0..n {
            if let Some(w) = self.vertex_weight(pos, v) {
                magic = Some(w);
                break;
            }
        }
        for v in affected.into_iter().flatten() {
            if let Some(w) = self.vertex_weight_with(pos, v, slot, label) {
                match magic {
                    None => magic = Some(w),
                    Some(k) => {
                        if w != k {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Vertex weight treating `cand_slot` as labeled with `cand_label`.
    fn vertex_weight_with(
        &self,
        pos: &Position,
        v: usize,
        cand_slot: usize,
        cand_label: i32,
    ) -> Option<i64> {
        let read = |s: usize| -> Option<i32> {
            if s == cand_slot {
                Some(cand_label)
            } else {
                pos.label(s)
            }
        };
        match self.kind {
            LabeledKind::Edges => {
                let mut sum = 0i64;
                for &e in self.graph.incident_edges(v) {
                    sum += i64::from(read(e)?);
                }
                Some(sum)
            }
            LabeledKind::Both => {
                let mut sum = i64::from(read(v)?);
                for &e in self.graph.incident_edges(v) {
                    sum += i64::from(read(self.graph.n() + e)?);
                }
                Some(sum)
            }
            LabeledKind::Vertices => None,
        }
    }

    fn adj_weight_move_ok(
        &self,
        pos: &Position,
        v: usize,
        label: i32,
        wf: WeightFn,
        mrd: u32,
    ) -> bool {
        if mrd > 0 {
            let dm = self.dist.as_ref().expect("distance matrix precomputed");
            for u in 0..self.graph.n() {
                if u != v && pos.label(u) == Some(label) {
                    if let Some(d) = dm.dist(u, v) {
                        if u64::from(d) < u64::from(mrd) {
                            return false;
                        }
                    }
                }
            }
        }
        // Every full edge at v is new (v was bare). Each must differ
        // from its siblings at v and from full edges at the far end.
        let mut new_weights: Vec<i64> = Vec::new();
        for &w in self.graph.neighbors(v) {
            let Some(lw) = pos.label(w) else { continue };
            let nw = wf.apply(i64::from(label), i64::from(lw));
            if new_weights.contains(&nw) {
                return false;
            }
            for &f in self.graph.incident_edges(w) {
                let (a, b) = self.graph.edge(f);
                let x = if a == w { b } else { a };
                if x == v {
                    continue;
                }
                if let (Some(la), Some(lb)) = (pos.label(a), pos.label(b)) {
                    if wf.apply(i64::from(la), i64::from(lb)) == nw {
                        return false;
                    }
                }
            }
            new_weights.push(nw);
        }
        true
    }

    /// Moves that are structurally available: bare element, in-domain
    /// label, unused label under NoRepeats. Ordered by slot then label.
    pub fn structural_moves(&self, pos: &Position) -> Vec<Move> {
        let mut out = Vec::new();
        for slot in 0..self.slots {
            if pos.label(slot).is_some() {
                continue;
            }
            for label in self.spec.label_lo..=self.spec.label_hi {
                if pos.tracks_used() && pos.used_offset((label - self.spec.label_lo) as usize) {
                    continue;
                }
                out.push(Move {
                    element: self.slot_element(slot),
                    label,
                });
            }
        }
        out
    }

    /// Structural moves the current mover may actually play: all of them
    /// when the mover is exempt from the restrictive rules, otherwise
    /// those keeping the predicate true.
    pub fn legal_moves(&self, pos: &Position) -> Vec<Move> {
        if pos.is_complete() {
            return Vec::new();
        }
        let structural = self.structural_moves(pos);
        if matches!(self.spec.convention, Convention::GoalGame { .. }) {
            return structural;
        }
        if !self.mover_is_bound(self.player_to_move(pos)) {
            return structural;
        }
        if !self.predicate_ok(pos) {
            return Vec::new();
        }
        structural
            .into_iter()
            .filter(|m| {
                let slot = self
                    .element_slot(m.element)
                    .expect("structural moves address real slots");
                self.move_keeps_ok(pos, slot, m.label)
            })
            .collect()
    }

    /// Writes the label, checking structural validity only; restrictive
    /// rules are the business of legal_moves.
    pub fn apply_move(&self, pos: &Position, m: Move) -> Result<Position, MoveError> {
        let slot = self
            .element_slot(m.element)
            .ok_or(MoveError::UnknownElement(m.element))?;
        if pos.label(slot).is_some() {
            return Err(MoveError::AlreadyLabeled(m.element));
        }
        if m.label < self.spec.label_lo || m.label > self.spec.label_hi {
            return Err(MoveError::LabelOutOfDomain(m.label));
        }
        let offset = if pos.tracks_used() {
            let off = (m.label - self.spec.label_lo) as usize;
            if pos.used_offset(off) {
                return Err(MoveError::LabelReused(m.label));
            }
            Some(off)
        } else {
            None
        };
        Ok(pos.with_label(slot, m.label, offset))
    }

    fn goal_holds(&self, pos: &Position, goal: GoalId) -> bool {
        match goal {
            GoalId::NoForbiddenSum => {
                let forbidden = i64::from(self.spec.label_hi) + 1;
                (0..self.graph.m()).all(|e| self.edge_weight(pos, e) != Some(forbidden))
            }
        }
    }

    /// None while the mover still has a legal move; otherwise the
    /// outcome under the spec's convention.
    pub fn terminal_outcome(&self, pos: &Position) -> Option<Outcome> {
        let complete = pos.is_complete();
        if !complete && !self.legal_moves(pos).is_empty() {
            return None;
        }
        let mover = self.player_to_move(pos);
        Some(match self.spec.convention {
            Convention::Achievement => Outcome {
                winner: mover.other(),
                reason: OutcomeReason::LastMoveAchieved,
            },
            Convention::Avoidance => Outcome {
                winner: mover,
                reason: OutcomeReason::LastMoveAvoided,
            },
            Convention::MakerBreaker => {
                if complete {
                    Outcome {
                        winner: Player::Alice,
                        reason: OutcomeReason::BoardComplete,
                    }
                } else {
                    Outcome {
                        winner: Player::Bob,
                        reason: OutcomeReason::StuckIncomplete,
                    }
                }
            }
            Convention::GoalGame { goal_id } => {
                if complete {
                    if self.goal_holds(pos, goal_id) {
                        Outcome {
                            winner: Player::Alice,
                            reason: OutcomeReason::GoalHolds,
                        }
                    } else {
                        Outcome {
                            winner: Player::Bob,
                            reason: OutcomeReason::GoalFails,
                        }
                    }
                } else {
                    Outcome {
                        winner: Player::Bob,
                        reason: OutcomeReason::StuckIncomplete,
                    }
                }
            }
        })
    }
}

fn dist_pair_ok(constraints: &[u32], dist: Option<u32>, lv: i32, lw: i32) -> bool {
    let Some(d) = dist else { return true };
    let d = d as usize;
    if d == 0 || d > constraints.len() {
        return true;
    }
    (i64::from(lv) - i64::from(lw)).abs() >= i64::from(constraints[d - 1])
}
