//! Position canonicalization: the minimum encoding over the orbit of a
//! position under graph automorphisms (acting on board slots) and,
//! where the rules are invariant under it, the label reflection
//! x -> lo + hi - x. Two positions with the same key have the same
//! winner, so the solver's memo table can merge them.

use crate::games::{Convention, GameSpec, GoalId, LabeledKind, Position, Variant};
use crate::graph::{AutomorphismGroup, Graph};

/// Opaque memo key: move count followed by one 16-bit code per slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalKey(Box<[u8]>);

/// Largest label domain the 16-bit slot codes can express.
pub const MAX_DOMAIN: usize = u16::MAX as usize;

pub struct Canonicalizer {
    slot_perms: Vec<Vec<usize>>,
    reflect: bool,
    lo: i64,
    hi: i64,
}

/// Reflection keeps difference weights as they are and maps sum weights
/// injectively, so the distinctness predicates cannot tell the
/// difference. The forbidden-sum goal pins the value hi+1, which is a
/// fixed point of the reflected sums only when lo = 1.
fn reflection_sound(spec: &GameSpec) -> bool {
    match &spec.variant {
        Variant::EdgeDiff => true,
        Variant::EdgeSum => match spec.convention {
            Convention::GoalGame {
                goal_id: GoalId::NoForbiddenSum,
            } => spec.label_lo == 1,
            _ => true,
        },
        _ => false,
    }
}

/// Lifts vertex permutations to slot permutations for the variant's
/// board layout.
fn induce_slot_perms(spec: &GameSpec, g: &Graph, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = g.n();
    let edge_perm = |perm: &[usize]| -> Vec<usize> {
        (0..g.m())
            .map(|e| {
                let (u, v) = g.edge(e);
                g.edge_between(perm[u], perm[v])
                    .expect("automorphisms map edges to edges")
            })
            .collect()
    };
    let mut out: Vec<Vec<usize>> = perms
        .iter()
        .map(|perm| match spec.variant.labeled_kind() {
            LabeledKind::Vertices => perm.clone(),
            LabeledKind::Edges => edge_perm(perm),
            LabeledKind::Both => {
                let mut slots = perm.clone();
                slots.extend(edge_perm(perm).into_iter().map(|e| n + e));
                slots
            }
        })
        .collect();
    // Distinct vertex maps can induce the same board map (swapping the
    // ends of a lone edge, say); keep one copy of each.
    out.sort();
    out.dedup();
    out
}

impl Canonicalizer {
    pub fn new(spec: &GameSpec, g: &Graph, group: &AutomorphismGroup) -> Canonicalizer {
        Canonicalizer {
            slot_perms: induce_slot_perms(spec, g, group.perms()),
            reflect: reflection_sound(spec),
            lo: i64::from(spec.label_lo),
            hi: i64::from(spec.label_hi),
        }
    }

    /// No symmetry at all: the key is the raw position encoding.
    pub fn identity(spec: &GameSpec, g: &Graph) -> Canonicalizer {
        let slots = match spec.variant.labeled_kind() {
            LabeledKind::Vertices => g.n(),
            LabeledKind::Edges => g.m(),
            LabeledKind::Both => g.n() + g.m(),
        };
        Canonicalizer {
            slot_perms: vec![(0..slots).collect()],
            reflect: false,
            lo: i64::from(spec.label_lo),
            hi: i64::from(spec.label_hi),
        }
    }

    /// True when the key can merge genuinely distinct positions.
    pub fn is_reducing(&self) -> bool {
        self.slot_perms.len() > 1 || self.reflect
    }

    pub fn key(&self, pos: &Position) -> CanonicalKey {
        let slots = pos.slot_count();
        let mut best: Option<Vec<u8>> = None;
        let mut candidate = Vec::with_capacity(4 + slots * 2);
        let reflections: &[bool] = if self.reflect {
            &[false, true]
        } else {
            &[false]
        };
        for perm in &self.slot_perms {
            for &refl in reflections {
                candidate.clear();
                candidate.extend_from_slice(&pos.move_count().to_le_bytes());
                for &src in perm.iter().take(slots) {
                    let code: u16 = match pos.label(src) {
                        None => 0,
                        Some(l) => {
                            let l = i64::from(l);
                            let l = if refl { self.lo + self.hi - l } else { l };
                            1 + (l - self.lo) as u16
                        }
                    };
                    candidate.extend_from_slice(&code.to_le_bytes());
                }
                if best.as_ref().is_none_or(|b| candidate < *b) {
                    best = Some(candidate.clone());
                }
            }
        }
        CanonicalKey(best.expect("at least the identity candidate").into_boxed_slice())
    }
}
