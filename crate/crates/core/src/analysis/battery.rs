//! A fixed battery of small instances spanning every variant, every
//! convention, biased schedules, and one-sided legality scopes. Used by
//! the test suites to cross-check the memoized engine against the plain
//! recursion oracle and to replay declared winning strategies.

use crate::games::{canned, Bias, Convention, GameSpec, LegalityScope, WeightFn};
use crate::graph::{complete, cycle, path, star, Graph};

#[derive(Debug, Clone)]
pub struct BatteryInstance {
    pub id: String,
    pub spec: GameSpec,
    pub graph: Graph,
}

fn inst(id: &str, spec: GameSpec, graph: Graph) -> BatteryInstance {
    BatteryInstance {
        id: id.to_string(),
        spec,
        graph,
    }
}

fn with(mut spec: GameSpec, tweak: impl FnOnce(&mut GameSpec)) -> GameSpec {
    tweak(&mut spec);
    spec
}

/// Every instance is small enough for the plain recursion oracle and for
/// exhaustive strategy replay (order at most 6; at most 6 slots).
pub fn oracle_battery() -> Vec<BatteryInstance> {
    let k1 = complete(1).expect("K_1");
    let k2 = complete(2).expect("K_2");
    let k3 = complete(3).expect("K_3");
    let p3 = path(3).expect("P_3");
    let p4 = path(4).expect("P_4");
    let k13 = star(4).expect("K_{1,3}");
    let c3 = cycle(3).expect("C_3");
    let c4 = cycle(4).expect("C_4");
    let c5 = cycle(5).expect("C_5");

    let graceful = |g: &Graph| canned::graceful(g).expect("graceful spec");
    let sums = |g: &Graph| canned::cycle_sum(g).expect("distinct sums spec");
    let goal = |g: &Graph| canned::goal_cycle(g).expect("goal spec");
    let vm_edge = |g: &Graph| canned::vm_edge(g).expect("magic edge spec");
    let vm_total = |g: &Graph| canned::vm_total(g).expect("magic total spec");
    let adj = |g: &Graph, f: WeightFn, rep: bool| {
        canned::adj_example(g, f, rep).expect("adjacent weight spec")
    };
    let ach = |s: GameSpec| with(s, |s| s.convention = Convention::Achievement);
    let avd = |s: GameSpec| with(s, |s| s.convention = Convention::Avoidance);
    let mb = |s: GameSpec| with(s, |s| s.convention = Convention::MakerBreaker);
    let bias = |s: GameSpec, a: u32, b: u32| with(s, move |s| s.bias = Bias { a, b });
    let scope = |s: GameSpec, sc: LegalityScope| with(s, move |s| s.legality_scope = sc);

    vec![
        // Distinct edge differences (graceful family).
        inst("edgeDiff-mb-K1", graceful(&k1), k1.clone()),
        inst("edgeDiff-mb-P3", graceful(&p3), p3.clone()),
        inst("edgeDiff-mb-P4", graceful(&p4), p4.clone()),
        inst("edgeDiff-mb-K13", graceful(&k13), k13.clone()),
        inst("edgeDiff-mb-C4", graceful(&c4), c4.clone()),
        inst("edgeDiff-ach-K3", ach(graceful(&k3)), k3.clone()),
        inst("edgeDiff-avd-K3", avd(graceful(&k3)), k3.clone()),
        inst("edgeDiff-ach-P4", ach(graceful(&p4)), p4.clone()),
        inst("edgeDiff-avd-P4", avd(graceful(&p4)), p4.clone()),
        inst("edgeDiff-mb-bias21-P4", bias(graceful(&p4), 2, 1), p4.clone()),
        inst("edgeDiff-mb-bias12-P4", bias(graceful(&p4), 1, 2), p4.clone()),
        inst(
            "edgeDiff-mb-aliceBound-P4",
            scope(graceful(&p4), LegalityScope::AliceOnly),
            p4.clone(),
        ),
        inst(
            "edgeDiff-mb-bobBound-P4",
            scope(graceful(&p4), LegalityScope::BobOnly),
            p4.clone(),
        ),
        // Distinct edge sums.
        inst("edgeSum-mb-C3", sums(&c3), c3.clone()),
        inst("edgeSum-mb-C4", sums(&c4), c4.clone()),
        inst("edgeSum-mb-C5", sums(&c5), c5.clone()),
        inst("edgeSum-ach-C4", ach(sums(&c4)), c4.clone()),
        inst("edgeSum-avd-C4", avd(sums(&c4)), c4.clone()),
        inst("edgeSum-mb-P4", sums(&p4), p4.clone()),
        inst(
            "edgeSum-mb-bobBound-C4",
            scope(sums(&c4), LegalityScope::BobOnly),
            c4.clone(),
        ),
        // Goal games: fill the board while dodging the forbidden sum.
        inst("edgeSum-goal-C4", goal(&c4), c4.clone()),
        inst("edgeSum-goal-C5", goal(&c5), c5.clone()),
        inst("edgeSum-goal-bias21-C4", bias(goal(&c4), 2, 1), c4.clone()),
        // Distance games.
        inst(
            "dist21-mb-K2-s2",
            canned::ld1(2, 2).expect("gap spec"),
            k2.clone(),
        ),
        inst(
            "dist21-mb-P3-s3",
            canned::ld1(2, 3).expect("gap spec"),
            p3.clone(),
        ),
        inst(
            "dist11-mb-C4-s2",
            canned::ld1(1, 2).expect("gap spec"),
            c4.clone(),
        ),
        inst(
            "radio-mb-P4-s4",
            canned::radio(&p4, 4).expect("radio spec"),
            p4.clone(),
        ),
        inst(
            "dist21-ach-P3-s3",
            ach(canned::ld1(2, 3).expect("gap spec")),
            p3.clone(),
        ),
        inst(
            "dist21-avd-P3-s3",
            avd(canned::ld1(2, 3).expect("gap spec")),
            p3.clone(),
        ),
        inst(
            "dist21-mb-bias21-K2-s3",
            bias(canned::ld1(2, 3).expect("gap spec"), 2, 1),
            k2.clone(),
        ),
        // Magic edge labelings: every full vertex carries the same weight.
        inst("vmEdge-ach-C3", vm_edge(&c3), c3.clone()),
        inst("vmEdge-ach-K13", vm_edge(&k13), k13.clone()),
        inst("vmEdge-avd-C3", avd(vm_edge(&c3)), c3.clone()),
        inst("vmEdge-mb-C4", mb(vm_edge(&c4)), c4.clone()),
        // Magic total labelings over vertices and edges together.
        inst("vmTotal-ach-K2", vm_total(&k2), k2.clone()),
        inst("vmTotal-ach-P3", vm_total(&p3), p3.clone()),
        inst("vmTotal-mb-P3", mb(vm_total(&p3)), p3.clone()),
        inst("vmTotal-avd-K2", avd(vm_total(&k2)), k2.clone()),
        // Adjacent full edges must get distinct weights.
        inst(
            "adjWeight-sum-mb-P4",
            adj(&p4, WeightFn::Sum, false),
            p4.clone(),
        ),
        inst(
            "adjWeight-absdiff-mb-P4",
            adj(&p4, WeightFn::AbsDiff, false),
            p4.clone(),
        ),
        inst(
            "adjWeight-sum-mb-C5rep",
            adj(&c5, WeightFn::Sum, true),
            c5.clone(),
        ),
        inst(
            "adjWeight-absdiff-ach-P4",
            ach(adj(&p4, WeightFn::AbsDiff, false)),
            p4.clone(),
        ),
        inst(
            "adjWeight-sum-avd-P4",
            avd(adj(&p4, WeightFn::Sum, false)),
            p4.clone(),
        ),
        inst(
            "adjWeight-sum-mb-bias12-P4",
            bias(adj(&p4, WeightFn::Sum, false), 1, 2),
            p4.clone(),
        ),
    ]
}
