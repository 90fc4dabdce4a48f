//! Interactive play against the perfect-play engine. The transcript is
//! machine-parsable: accepted moves print as `move <player> <elem>=<label>`
//! and the final line starts with `outcome:`.

use std::io::{self, BufRead, Write};

use anyhow::{Context, Result};
use labelgames::games::{
    Element, LabeledKind, Move, Outcome, OutcomeReason, Player, Position, RuleSet, Variant,
};
use labelgames::solver::{best_move, SolveError};

use crate::args::PlayArgs;
use crate::report::spec_summary;
use crate::{fail, EXIT_OK, EXIT_UNSOLVED};

pub fn run_play(args: PlayArgs) -> Result<u8> {
    let (g, spec, options, human) = args.build()?;
    let rules = RuleSet::new(&spec, &g)?;
    let mut pos = rules.empty_position();
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();

    println!("playing on {} (n={}, m={})", g.display_name(), g.n(), g.m());
    if g.m() > 0 {
        let edges: Vec<String> = (0..g.m())
            .map(|e| {
                let (u, v) = g.edge(e);
                format!("e{e}=({u},{v})")
            })
            .collect();
        println!("edges: {}", edges.join(" "));
    }
    println!("rules: {}", spec_summary(&spec));
    println!("you play {}; the engine plays {}", name(human), name(human.other()));
    print_board(&rules, &pos);

    loop {
        if let Some(outcome) = rules.terminal_outcome(&pos) {
            announce(outcome);
            return Ok(EXIT_OK);
        }
        let mover = rules.player_to_move(&pos);
        if mover == human {
            println!(
                "your move ({}), like {} (or: moves, board, quit)",
                name(mover),
                move_hint(&spec.variant)
            );
            io::stdout().flush().context("flushing the prompt")?;
            let Some(line) = lines.next() else {
                return Err(fail(EXIT_UNSOLVED, "input ended before the game finished"));
            };
            let line = line.context("reading a move")?;
            let text = line.trim();
            match text {
                "" => continue,
                "quit" | "exit" => {
                    println!("game abandoned");
                    return Ok(EXIT_OK);
                }
                "board" => {
                    print_board(&rules, &pos);
                    continue;
                }
                "moves" => {
                    let legal: Vec<String> =
                        rules.legal_moves(&pos).iter().map(Move::to_string).collect();
                    println!("legal: {}", legal.join(" "));
                    continue;
                }
                _ => {}
            }
            let Some(m) = parse_move(text) else {
                println!(
                    "could not read that; moves look like {} (or: moves, board, quit)",
                    move_hint(&spec.variant)
                );
                continue;
            };
            if !rules.legal_moves(&pos).contains(&m) {
                match rules.apply_move(&pos, m) {
                    Err(e) => println!("illegal move: {e}"),
                    Ok(_) => println!("illegal move: {m} breaks the labeling constraints"),
                }
                continue;
            }
            pos = rules.apply_move(&pos, m).expect("legal moves apply cleanly");
            println!("move {} {m}", name(mover));
        } else {
            let m = best_move(&spec, &g, &pos, &options).map_err(engine_failure)?;
            pos = rules.apply_move(&pos, m).expect("engine moves are legal");
            println!("move {} {m} (engine)", name(mover));
        }
        print_board(&rules, &pos);
    }
}

fn engine_failure(e: SolveError) -> anyhow::Error {
    match e {
        SolveError::NodeLimit { .. } | SolveError::TimeLimit { .. } => {
            fail(EXIT_UNSOLVED, format!("the engine ran out of budget: {e}"))
        }
        other => other.into(),
    }
}

fn name(p: Player) -> &'static str {
    match p {
        Player::Alice => "Alice",
        Player::Bob => "Bob",
    }
}

fn move_hint(variant: &Variant) -> &'static str {
    match variant.labeled_kind() {
        LabeledKind::Vertices => "v0=1",
        LabeledKind::Edges => "e0=1",
        LabeledKind::Both => "v0=1 or e0=2",
    }
}

fn parse_move(text: &str) -> Option<Move> {
    let (elem, label) = text.split_once('=')?;
    let label: i32 = label.trim().parse().ok()?;
    let elem = elem.trim();
    let element = if let Some(i) = elem.strip_prefix('v') {
        Element::Vertex { index: i.parse().ok()? }
    } else {
        Element::Edge { index: elem.strip_prefix('e')?.parse().ok()? }
    };
    Some(Move { element, label })
}

fn print_board(rules: &RuleSet, pos: &Position) {
    let g = rules.graph();
    let spec = rules.spec();
    let kind = spec.variant.labeled_kind();
    if matches!(kind, LabeledKind::Vertices | LabeledKind::Both) {
        let row: Vec<String> = (0..g.n())
            .map(|v| cell(rules, pos, Element::Vertex { index: v }))
            .collect();
        println!("vertices: {}", row.join(" "));
    }
    if matches!(kind, LabeledKind::Edges | LabeledKind::Both) {
        let row: Vec<String> = (0..g.m())
            .map(|e| cell(rules, pos, Element::Edge { index: e }))
            .collect();
        println!("edge labels: {}", row.join(" "));
    }
    let mut weights = Vec::new();
    match &spec.variant {
        Variant::VmEdge | Variant::VmTotal => {
            for v in 0..g.n() {
                if let Some(w) = rules.vertex_weight(pos, v) {
                    weights.push(format!("w(v{v})={w}"));
                }
            }
        }
        Variant::EdgeDiff | Variant::EdgeSum | Variant::AdjWeight { .. } => {
            for e in 0..g.m() {
                if let Some(w) = rules.edge_weight(pos, e) {
                    weights.push(format!("w(e{e})={w}"));
                }
            }
        }
        Variant::Dist { .. } => {}
    }
    if !weights.is_empty() {
        println!("weights: {}", weights.join(" "));
    }
}

fn cell(rules: &RuleSet, pos: &Position, element: Element) -> String {
    let slot = rules.element_slot(element).expect("board elements have slots");
    match pos.label(slot) {
        Some(l) => format!("{element}={l}"),
        None => format!("{element}=_"),
    }
}

fn announce(outcome: Outcome) {
    let reason = match outcome.reason {
        OutcomeReason::LastMoveAchieved => "made the last legal move",
        OutcomeReason::LastMoveAvoided => "is out of moves, and being stuck wins here",
        OutcomeReason::BoardComplete => "the board was completely labeled",
        OutcomeReason::StuckIncomplete => "the board stalled before completion",
        OutcomeReason::GoalHolds => "the goal holds on the finished board",
        OutcomeReason::GoalFails => "the goal fails on the finished board",
    };
    println!("outcome: {} wins ({reason})", name(outcome.winner));
}
