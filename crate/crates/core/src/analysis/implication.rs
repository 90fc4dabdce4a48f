//! Cross-check between conventions: on an odd-order board, a first-player
//! Maker-Breaker win implies a first-player win in the Achievement
//! version (the board has an odd number of slots, so completing it means
//! making the last move). A counterexample would indicate a solver bug.

use crate::analysis::{run_jobs, SolveJob};
use crate::games::{canned, Convention, Player};
use crate::graph::{complete, complete_bipartite, cycle, path, star, Graph};
use crate::solver::{SolveLimits, SolveOptions};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ImplicationRow {
    pub graph_name: String,
    pub order: usize,
    pub maker_breaker_winner: Option<Player>,
    pub achievement_winner: Option<Player>,
    pub violation: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ImplicationReport {
    pub rows: Vec<ImplicationRow>,
    /// Graphs dropped because the implication needs odd order.
    pub skipped_even_order: Vec<String>,
    /// Names of graphs where Alice wins Maker-Breaker yet loses Achievement.
    pub violations: Vec<String>,
    pub all_solved: bool,
}

/// Default odd-order graphs for the cross-check.
pub fn implication_battery() -> Vec<Graph> {
    vec![
        complete(1).expect("K_1"),
        path(3).expect("P_3"),
        star(3).expect("K_{1,2}"),
        cycle(3).expect("C_3"),
        path(5).expect("P_5"),
        star(5).expect("K_{1,4}"),
        cycle(5).expect("C_5"),
        complete_bipartite(2, 3).expect("K_{2,3}"),
        path(7).expect("P_7"),
        complete(5).expect("K_5"),
    ]
}

/// Solves the graceful game on each odd-order graph under Maker-Breaker
/// and Achievement (Alice first) and flags any Maker-Breaker Alice win
/// that turns into an Achievement loss.
pub fn implication_check(graphs: &[Graph], limits: &SolveLimits) -> ImplicationReport {
    let mut skipped_even_order = Vec::new();
    let mut odd = Vec::new();
    for g in graphs {
        if g.n() % 2 == 1 {
            odd.push(g.clone());
        } else {
            skipped_even_order.push(g.display_name());
        }
    }

    let options = SolveOptions {
        symmetry: true,
        limits: *limits,
    };
    let mut jobs = Vec::with_capacity(odd.len() * 2);
    for g in &odd {
        let mb = canned::graceful(g).expect("graceful spec");
        let mut ach = mb.clone();
        ach.convention = Convention::Achievement;
        jobs.push(SolveJob {
            id: format!("{}#makerBreaker", g.display_name()),
            spec: mb,
            graph: g.clone(),
            options,
        });
        jobs.push(SolveJob {
            id: format!("{}#achievement", g.display_name()),
            spec: ach,
            graph: g.clone(),
            options,
        });
    }
    let outcomes = run_jobs(jobs);

    let mut rows = Vec::with_capacity(odd.len());
    let mut violations = Vec::new();
    for (g, pair) in odd.iter().zip(outcomes.chunks(2)) {
        let mb = pair[0].result.as_ref().ok().map(|r| r.winner);
        let ach = pair[1].result.as_ref().ok().map(|r| r.winner);
        let violation = mb == Some(Player::Alice) && ach == Some(Player::Bob);
        if violation {
            violations.push(g.display_name());
        }
        rows.push(ImplicationRow {
            graph_name: g.display_name(),
            order: g.n(),
            maker_breaker_winner: mb,
            achievement_winner: ach,
            violation,
        });
    }
    let all_solved = rows
        .iter()
        .all(|r| r.maker_breaker_winner.is_some() && r.achievement_winner.is_some());
    ImplicationReport {
        rows,
        skipped_even_order,
        violations,
        all_solved,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_graphs_all_have_odd_order() {
        let graphs = implication_battery();
        assert_eq!(graphs.len(), 10);
        assert!(graphs.iter().all(|g| g.n() % 2 == 1));
    }

    #[test]
    fn triangle_wins_both_ways_and_even_orders_are_skipped() {
        let graphs = vec![complete(3).unwrap(), path(3).unwrap(), path(4).unwrap()];
        let report = implication_check(&graphs, &SolveLimits::default());
        assert_eq!(report.rows.len(), 2);
        assert_eq!(report.skipped_even_order, vec!["P_4".to_string()]);
        assert!(report.all_solved);
        assert!(report.violations.is_empty());
        let k3 = &report.rows[0];
        assert_eq!(k3.graph_name, "K_3");
        // Alice wins the Maker-Breaker graceful game on K_3; on an odd
        // board that completion is also the last move, so she wins the
        // Achievement version too.
        assert_eq!(k3.maker_breaker_winner, Some(Player::Alice));
        assert_eq!(k3.achievement_winner, Some(Player::Alice));
    }

    #[test]
    fn starved_solves_show_up_as_unsolved() {
        let graphs = vec![path(5).unwrap()];
        let limits = SolveLimits {
            max_nodes: Some(1),
            max_seconds: None,
        };
        let report = implication_check(&graphs, &limits);
        assert!(!report.all_solved);
        assert!(report.violations.is_empty());
    }
}
