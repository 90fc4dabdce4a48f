//! Property suites cross-checking the engine's rule enforcement against
//! independent re-implementations: a from-scratch predicate oracle, a
//! BFS distance oracle, and a minimal graph6 decoder. Randomness is
//! seeded and the seed is echoed in every assertion message.

use labelgames::analysis::oracle_battery;
use labelgames::games::{
    Convention, GameSpec, LegalityScope, Move, Player, Position, RuleSet, Variant, WeightFn,
};
use labelgames::graph::{
    automorphisms, complete, cycle, graph_from_graph6, graph_to_graph6, path, star,
    distance_matrix, Graph, DEFAULT_EXHAUSTIVE_LIMIT,
};
use labelgames::solver::{solve_plain, SolveLimits};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x6c61_6265_6c67;

// ---------------------------------------------------------------------
// Independent oracles.

/// BFS hop distances, written without the library's distance matrix.
fn bfs_dist(g: &Graph, from: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; g.n()];
    let mut queue = std::collections::VecDeque::new();
    dist[from] = Some(0);
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(dist[v].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn pair_dist(g: &Graph, u: usize, v: usize) -> Option<u32> {
    bfs_dist(g, u)[v]
}

/// Labels of a position split into the vertex block and edge block the
/// way the rule set assigns slots.
fn blocks<'p>(spec: &GameSpec, g: &Graph, pos: &'p Position) -> (&'p [Option<i32>], &'p [Option<i32>]) {
    let labels = pos.labels();
    match spec.variant {
        Variant::VmEdge => (&[], labels),
        Variant::VmTotal => (&labels[..g.n()], &labels[g.n()..]),
        _ => (labels, &[]),
    }
}

/// The variant predicate, re-implemented pairwise and from the global
/// definition rather than incrementally.
fn predicate_oracle(spec: &GameSpec, g: &Graph, pos: &Position) -> bool {
    let (verts, edges) = blocks(spec, g, pos);
    match &spec.variant {
        Variant::VmEdge | Variant::VmTotal => {
            // Full vertices must agree pairwise on their weight.
            let weight = |v: usize| -> Option<i64> {
                let mut sum = if matches!(spec.variant, Variant::VmTotal) {
                    i64::from(verts[v]?)
                } else {
                    0
                };
                for &e in g.incident_edges(v) {
                    sum += i64::from(edges[e]?);
                }
                Some(sum)
            };
            let full: Vec<i64> = (0..g.n()).filter_map(weight).collect();
            full.iter().all(|&w| Some(&w) == full.first())
        }
        Variant::Dist { constraints } => {
            for u in 0..g.n() {
                for v in (u + 1)..g.n() {
                    let (Some(lu), Some(lv)) = (verts[u], verts[v]) else {
                        continue;
                    };
                    let Some(d) = pair_dist(g, u, v) else { continue };
                    let d = d as usize;
                    if d >= 1 && d <= constraints.len() {
                        let gap = i64::from(constraints[d - 1]);
                        if (i64::from(lu) - i64::from(lv)).abs() < gap {
                            return false;
                        }
                    }
                }
            }
            true
        }
        Variant::EdgeDiff | Variant::EdgeSum => {
            let wf = if matches!(spec.variant, Variant::EdgeDiff) {
                WeightFn::AbsDiff
            } else {
                WeightFn::Sum
            };
            let weights: Vec<i64> = g
                .edges()
                .iter()
                .filter_map(|&(u, v)| {
                    Some(wf.apply(i64::from(verts[u]?), i64::from(verts[v]?)))
                })
                .collect();
            for i in 0..weights.len() {
                for j in (i + 1)..weights.len() {
                    if weights[i] == weights[j] {
                        return false;
                    }
                }
            }
            true
        }
        Variant::AdjWeight {
            weight_fn,
            min_repeat_distance,
        } => {
            let weight = |e: usize| -> Option<i64> {
                let (u, v) = g.edge(e);
                Some(weight_fn.apply(i64::from(verts[u]?), i64::from(verts[v]?)))
            };
            for e in 0..g.m() {
                for f in (e + 1)..g.m() {
                    let (a, b) = g.edge(e);
                    let (c, d) = g.edge(f);
                    let adjacent = a == c || a == d || b == c || b == d;
                    if !adjacent {
                        continue;
                    }
                    if let (Some(we), Some(wf_)) = (weight(e), weight(f)) {
                        if we == wf_ {
                            return false;
                        }
                    }
                }
            }
            if *min_repeat_distance > 0 {
                for u in 0..g.n() {
                    for v in (u + 1)..g.n() {
                        let (Some(lu), Some(lv)) = (verts[u], verts[v]) else {
                            continue;
                        };
                        if lu == lv {
                            if let Some(d) = pair_dist(g, u, v) {
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

fn goal_oracle(spec: &GameSpec, g: &Graph, pos: &Position) -> bool {
    let forbidden = i64::from(spec.label_hi) + 1;
    g.edges().iter().all(|&(u, v)| {
        match (pos.labels()[u], pos.labels()[v]) {
            (Some(lu), Some(lv)) => i64::from(lu) + i64::from(lv) != forbidden,
            _ => true,
        }
    })
}

fn mover_is_bound(spec: &GameSpec, mover: Player) -> bool {
    match spec.legality_scope {
        LegalityScope::Both => true,
        LegalityScope::AliceOnly => mover == Player::Alice,
        LegalityScope::BobOnly => mover == Player::Bob,
    }
}

// ---------------------------------------------------------------------
// Per-position invariants driven by random playouts.

/// legal_moves must equal the structural moves filtered by the oracle
/// predicate (for bound movers outside goal games), and the terminal
/// outcome must match the convention's definition.
fn check_position(id: &str, rules: &RuleSet, pos: &Position) {
    let spec = rules.spec();
    let g = rules.graph();
    let structural = rules.structural_moves(pos);
    let legal = rules.legal_moves(pos);
    let mover = rules.player_to_move(pos);

    for w in structural.windows(2) {
        let sa = rules.element_slot(w[0].element).unwrap();
        let sb = rules.element_slot(w[1].element).unwrap();
        assert!(
            (sa, w[0].label) < (sb, w[1].label),
            "{id}: structural moves out of order (seed {SEED:#x})"
        );
    }

    let expected: Vec<Move> = if pos.is_complete() {
        Vec::new()
    } else if matches!(spec.convention, Convention::GoalGame { .. })
        || !mover_is_bound(spec, mover)
    {
        structural.clone()
    } else if !predicate_oracle(spec, g, pos) {
        Vec::new()
    } else {
        structural
            .iter()
            .copied()
            .filter(|&m| {
                let next = rules.apply_move(pos, m).expect("structural move applies");
                predicate_oracle(spec, g, &next)
            })
            .collect()
    };
    assert_eq!(
        legal, expected,
        "{id}: legal_moves disagrees with the oracle enumeration (seed {SEED:#x})"
    );

    let outcome = rules.terminal_outcome(pos);
    assert_eq!(
        outcome.is_none(),
        !legal.is_empty(),
        "{id}: outcome totality violated (seed {SEED:#x})"
    );
    if let Some(out) = outcome {
        let won = out.winner;
        match spec.convention {
            Convention::Achievement => assert_eq!(won, mover.other(), "{id}"),
            Convention::Avoidance => assert_eq!(won, mover, "{id}"),
            Convention::MakerBreaker => {
                assert_eq!(won == Player::Alice, pos.is_complete(), "{id}")
            }
            Convention::GoalGame { .. } => {
                let expected_winner = if pos.is_complete() && goal_oracle(spec, g, pos) {
                    Player::Alice
                } else {
                    Player::Bob
                };
                assert_eq!(won, expected_winner, "{id}");
            }
        }
    }
}

#[test]
fn random_playouts_satisfy_rule_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for instance in oracle_battery() {
        let rules = RuleSet::new(&instance.spec, &instance.graph).expect("battery spec");
        for _ in 0..8 {
            let mut pos = rules.empty_position();
            loop {
                check_position(&instance.id, &rules, &pos);
                let legal = rules.legal_moves(&pos);
                if legal.is_empty() {
                    break;
                }
                let pick = legal[rng.gen_range(0..legal.len())];
                let before = pos.move_count();
                pos = rules.apply_move(&pos, pick).expect("legal move applies");
                assert_eq!(pos.move_count(), before + 1, "{}", instance.id);
            }
        }
    }
}

#[test]
fn no_repeat_games_never_reuse_labels_in_playouts() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    for instance in oracle_battery() {
        let rules = RuleSet::new(&instance.spec, &instance.graph).expect("battery spec");
        for _ in 0..4 {
            let mut pos = rules.empty_position();
            loop {
                let legal = rules.legal_moves(&pos);
                if legal.is_empty() {
                    break;
                }
                pos = rules
                    .apply_move(&pos, legal[rng.gen_range(0..legal.len())])
                    .unwrap();
            }
            if instance.spec.repeat_policy == labelgames::games::RepeatPolicy::NoRepeats {
                let mut used: Vec<i32> = pos.labels().iter().flatten().copied().collect();
                let before = used.len();
                used.sort_unstable();
                used.dedup();
                assert_eq!(used.len(), before, "{} reused a label", instance.id);
            }
        }
    }
}

// ---------------------------------------------------------------------
// Distance game sanity: the two-constraint tuple (d, 1) is exactly the
// classic pair of rules "adjacent labels differ by at least d" and
// "labels at distance two are distinct".

#[test]
fn two_level_distance_game_matches_the_classic_formulation() {
    let spec = labelgames::games::canned::ld1(2, 4).unwrap();
    let g = cycle(5).unwrap();
    let rules = RuleSet::new(&spec, &g).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    for _ in 0..200 {
        // Random partial labelings, reachable or not.
        let mut pos = rules.empty_position();
        for v in 0..g.n() {
            if rng.gen_bool(0.6) {
                let label = rng.gen_range(0..=4);
                if let Ok(next) = rules.apply_move(
                    &pos,
                    Move {
                        element: rules.slot_element(v),
                        label,
                    },
                ) {
                    pos = next;
                }
            }
        }
        let classic = (0..g.n()).all(|u| {
            ((u + 1)..g.n()).all(|v| {
                let (Some(lu), Some(lv)) = (pos.labels()[u], pos.labels()[v]) else {
                    return true;
                };
                let gap = (i64::from(lu) - i64::from(lv)).abs();
                match pair_dist(&g, u, v) {
                    Some(1) => gap >= 2,
                    Some(2) => gap >= 1,
                    _ => true,
                }
            })
        });
        assert_eq!(rules.constraint_ok(&pos), classic, "seed {SEED:#x}");
    }
}

// ---------------------------------------------------------------------
// Solving is independent of how the vertices happen to be numbered.

#[test]
fn winners_are_invariant_under_graph_relabeling() {
    // P_4 drawn as 2-0-1-3 and C_4 drawn as 0-2-1-3-0.
    let cases: Vec<(Graph, Graph)> = vec![
        (
            path(4).unwrap(),
            Graph::new(4, &[(0, 2), (0, 1), (1, 3)]).unwrap(),
        ),
        (
            cycle(4).unwrap(),
            Graph::new(4, &[(0, 2), (1, 2), (1, 3), (0, 3)]).unwrap(),
        ),
    ];
    for (a, b) in cases {
        for make in [
            labelgames::games::canned::graceful,
            labelgames::games::canned::cycle_sum,
        ] {
            let ra = solve_plain(&make(&a).unwrap(), &a, SolveLimits::default()).unwrap();
            let rb = solve_plain(&make(&b).unwrap(), &b, SolveLimits::default()).unwrap();
            assert_eq!(ra.winner, rb.winner, "{}", a.display_name());
        }
    }
}

// ---------------------------------------------------------------------
// Graph layer properties.

/// Minimal short-form graph6 decoder, independent of the library's.
fn decode_graph6_short(text: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = text.as_bytes();
    let n = (bytes[0] - 63) as usize;
    let mut bits = Vec::new();
    for &b in &bytes[1..] {
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    (n, edges)
}

proptest! {
    #[test]
    fn graph6_encoding_matches_independent_decoder(
        n in 1usize..=10,
        bits in proptest::collection::vec(any::<bool>(), 45),
    ) {
        let mut edges = Vec::new();
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[idx] {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let text = graph_to_graph6(&g);
        let (dn, mut dedges) = decode_graph6_short(&text);
        prop_assert_eq!(dn, n);
        dedges.sort_unstable();
        let mut expected = edges.clone();
        expected.sort_unstable();
        prop_assert_eq!(dedges, expected);

        // And the library decoder agrees with itself.
        let back = graph_from_graph6(&text).unwrap();
        prop_assert_eq!(back.n(), n);
        let mut be = back.edges().to_vec();
        be.sort_unstable();
        let mut oe = g.edges().to_vec();
        oe.sort_unstable();
        prop_assert_eq!(be, oe);
    }

    #[test]
    fn distances_obey_metric_axioms(
        n in 1usize..=8,
        bits in proptest::collection::vec(any::<bool>(), 28),
    ) {
        let mut edges = Vec::new();
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[idx] {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let dm = distance_matrix(&g);
        for u in 0..n {
            prop_assert_eq!(dm.dist(u, u), Some(0));
            for v in 0..n {
                prop_assert_eq!(dm.dist(u, v), dm.dist(v, u));
                prop_assert_eq!(dm.dist(u, v), pair_dist(&g, u, v));
                if g.has_edge(u, v) {
                    prop_assert_eq!(dm.dist(u, v), Some(1));
                }
                for w in 0..n {
                    if let (Some(a), Some(b)) = (dm.dist(u, v), dm.dist(v, w)) {
                        let direct = dm.dist(u, w).expect("connected through v");
                        prop_assert!(direct <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn automorphisms_preserve_adjacency_and_form_a_group(
        n in 1usize..=5,
        bits in proptest::collection::vec(any::<bool>(), 10),
    ) {
        let mut edges = Vec::new();
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[idx] {
                    edges.push((u, v));
                }
                idx += 1;
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let group = automorphisms(&g, DEFAULT_EXHAUSTIVE_LIMIT);
        prop_assert!(group.is_exhaustive());
        let perms = group.perms();
        let identity: Vec<usize> = (0..n).collect();
        prop_assert!(perms.iter().any(|p| p.as_slice() == identity.as_slice()));
        for p in perms {
            for &(u, v) in g.edges() {
                prop_assert!(g.has_edge(p[u], p[v]));
            }
        }
        // Closure under composition.
        for p in perms {
            for q in perms {
                let comp: Vec<usize> = (0..n).map(|v| p[q[v]]).collect();
                prop_assert!(perms.iter().any(|r| r.as_slice() == comp.as_slice()));
            }
        }
    }
}

// ---------------------------------------------------------------------
// Known group orders pin the automorphism search.

#[test]
fn automorphism_counts_match_known_groups() {
    assert_eq!(automorphisms(&complete(4).unwrap(), 9).len(), 24);
    assert_eq!(automorphisms(&cycle(5).unwrap(), 9).len(), 10);
    assert_eq!(automorphisms(&path(5).unwrap(), 9).len(), 2);
    assert_eq!(automorphisms(&star(5).unwrap(), 9).len(), 24);
}
