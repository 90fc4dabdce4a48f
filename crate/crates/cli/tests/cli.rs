//! End-to-end tests against the compiled binary: JSON schemas, exit
//! codes, environment overrides, and play-mode transcripts.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use labelgames::games::{
    Bias, Convention, Element, GameSpec, LegalityScope, Move, Player, RepeatPolicy, RuleSet,
    Variant,
};
use labelgames::graph::path;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_labelgames"));
    c.env_remove("LABELGAMES_MAX_NODES");
    c.env_remove("LABELGAMES_MAX_SECONDS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin is piped")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn solve_reports_the_star_win_as_json() {
    let out = run(&[
        "solve",
        "--gen",
        "star",
        "4",
        "--variant",
        "edge-diff",
        "--s",
        "4",
        "--convention",
        "maker-breaker",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["winner"], "Alice");
    assert_eq!(v["status"], "solved");
    assert_eq!(v["graphName"], "K_{1,3}");
    assert_eq!(v["spec"]["variant"]["type"], "edgeDiff");
    assert_eq!(v["spec"]["labelLo"], 1);
    assert_eq!(v["spec"]["labelHi"], 4);
    assert_eq!(v["error"], serde_json::Value::Null);
    let mut keys: Vec<&str> = v.as_object().expect("object").keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        [
            "bestRootMove",
            "error",
            "graph6",
            "graphName",
            "nodesExpanded",
            "order",
            "principalVariation",
            "seconds",
            "size",
            "spec",
            "status",
            "tableHits",
            "usedSymmetry",
            "winner"
        ]
    );
}

#[test]
fn generated_graphs_round_trip_through_graph6() {
    let gen = run(&["gen", "--gen", "cycle", "6"]);
    assert_eq!(code(&gen), 0);
    let line = stdout(&gen);
    let line = line.trim();
    assert!(!line.is_empty() && !line.contains('\n'), "one graph6 line, got {line:?}");

    let direct = json(&run(&["solve", "--gen", "cycle", "6", "--variant", "edge-sum"]));
    let decoded = json(&run(&["solve", "--graph6", line, "--variant", "edge-sum"]));
    assert_eq!(direct["winner"], decoded["winner"]);
    assert_eq!(direct["bestRootMove"], decoded["bestRootMove"]);
    assert_eq!(direct["principalVariation"], decoded["principalVariation"]);
    assert_eq!(direct["nodesExpanded"], decoded["nodesExpanded"]);
    assert_eq!(direct["graph6"], decoded["graph6"]);
}

#[test]
fn verify_confirms_every_known_proposition() {
    let out = run(&["verify"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json(&out);
    let cases = v.as_array().expect("array of cases");
    assert_eq!(cases.len(), 31);
    for case in cases {
        assert_eq!(case["status"], "confirmed", "case {}", case["caseId"]);
    }
}

#[test]
fn starved_runs_report_unsolved_and_exit_two() {
    let out = run(&["verify", "--max-nodes", "40"]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    let statuses: Vec<&str> =
        v.as_array().expect("array").iter().map(|c| c["status"].as_str().unwrap()).collect();
    assert!(statuses.contains(&"unsolved"));
    assert!(!statuses.contains(&"refuted"));
    assert!(stderr(&out).starts_with("error: "));

    let out = run(&["solve", "--gen", "star", "4", "--variant", "edge-diff", "--max-nodes", "1"]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["status"], "unsolved");
    assert_eq!(v["winner"], serde_json::Value::Null);
    assert!(v["error"].as_str().expect("error message").contains("node budget"));
    let err = stderr(&out);
    assert!(err.starts_with("error: "), "stderr: {err}");
    assert_eq!(err.trim_end().lines().count(), 1);
}

#[test]
fn usage_errors_exit_three_with_one_error_line() {
    let bad: &[&[&str]] = &[
        &[],
        &["solve"],
        &["solve", "--gen", "star", "4"],
        &["solve", "--gen", "star", "4", "--graph6", "Cs", "--variant", "edge-diff"],
        &["solve", "--graph6", "####", "--variant", "edge-diff"],
        &["solve", "--gen", "star", "4", "--variant", "no-such-variant"],
        &["solve", "--gen", "blob", "4", "--variant", "edge-diff"],
        &["solve", "--gen", "star", "4", "--variant", "edge-diff", "--bias", "2:0"],
        &["solve", "--gen", "star", "4", "--variant", "dist", "--d", "2"],
        &["solve", "--gen", "star", "4", "--variant", "edge-diff", "--d", "2"],
        &["solve", "--gen", "star", "4", "--variant", "edge-diff", "--repeat-policy", "repeats-allowed"],
        &["span", "--gen", "path", "4", "--variant", "edge-diff", "--s-min", "6", "--s-max", "4"],
        &["trend", "--d", "0"],
        &["span", "--gen", "path", "4", "--variant", "edge-diff", "--s-min", "4"],
    ];
    for args in bad {
        let out = run(args);
        assert_eq!(code(&out), 3, "args {args:?} should be a usage error");
        let err = stderr(&out);
        assert!(err.starts_with("error: "), "args {args:?} stderr: {err}");
        assert_eq!(err.trim_end().lines().count(), 1, "args {args:?} stderr: {err}");
    }
}

#[test]
fn environment_limits_apply_and_flags_win() {
    let out = bin()
        .args(["solve", "--gen", "star", "4", "--variant", "edge-diff"])
        .env("LABELGAMES_MAX_NODES", "1")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 2, "the environment budget should starve the solve");

    let out = bin()
        .args(["solve", "--gen", "star", "4", "--variant", "edge-diff", "--max-nodes", "1000000"])
        .env("LABELGAMES_MAX_NODES", "1")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 0, "the flag must take precedence over the environment");
    assert_eq!(json(&out)["winner"], "Alice");

    let out = bin()
        .args(["solve", "--gen", "star", "4", "--variant", "edge-diff"])
        .env("LABELGAMES_MAX_SECONDS", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 3, "a malformed environment limit is a usage error");
}

#[test]
fn span_reports_the_minimal_alice_ceiling() {
    let out = run(&[
        "span", "--gen", "path", "4", "--variant", "edge-diff", "--s-min", "4", "--s-max", "6",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["minimalAliceSpan"], 5);
    assert_eq!(v["minimalSpanReliable"], true);
    assert_eq!(v["perSpan"][0]["s"], 4);
    assert_eq!(v["perSpan"][0]["winner"], "Bob");
    assert_eq!(v["perSpan"][1]["winner"], "Alice");
}

#[test]
fn trend_rows_cover_complete_and_bipartite_families() {
    let out = run(&["trend", "--d", "1", "--n-max", "2"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json(&out);
    let rows = v.as_array().expect("array of rows");
    assert_eq!(rows.len(), 4, "K_1, K_2, K_{{1,1}}, K_{{1,1}}+1iso");
    let k2 = rows
        .iter()
        .find(|r| r["graphName"] == "K_2" && r["d"] == 1)
        .expect("K_2 row present");
    assert_eq!(k2["minimalAliceSpan"], 1);
    let iso = rows
        .iter()
        .find(|r| r["graphName"] == "K_{1,1}+1iso")
        .expect("isolated-vertex row present");
    assert_eq!(iso["minimalAliceSpan"], 1);
}

#[test]
fn gen_json_lists_graphs() {
    let out = run(&["gen", "--gen", "complete-bipartite", "2", "3", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v[0]["name"], "K_{2,3}");
    assert_eq!(v[0]["order"], 5);
    assert_eq!(v[0]["size"], 6);
    assert!(v[0]["graph6"].as_str().is_some());
}

#[test]
fn solve_file_batch_yields_an_array() {
    let dir = std::env::temp_dir();
    let file = dir.join(format!("labelgames-cli-batch-{}.g6", std::process::id()));
    let p3 = stdout(&run(&["gen", "--gen", "path", "3"]));
    let c4 = stdout(&run(&["gen", "--gen", "cycle", "4"]));
    std::fs::write(&file, format!("{}\n{}\n", p3.trim(), c4.trim())).expect("temp file writes");

    let out = run(&["solve", "--file", file.to_str().unwrap(), "--variant", "edge-diff"]);
    let _ = std::fs::remove_file(&file);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json(&out);
    let reports = v.as_array().expect("file sources report as an array");
    assert_eq!(reports.len(), 2);
    for r in reports {
        assert_eq!(r["status"], "solved");
    }
}

fn parse_move(text: &str) -> Move {
    let (elem, label) = text.split_once('=').expect("moves look like v0=1");
    let label: i32 = label.parse().expect("numeric label");
    let element = if let Some(i) = elem.strip_prefix('v') {
        Element::Vertex { index: i.parse().expect("vertex index") }
    } else {
        Element::Edge {
            index: elem.strip_prefix('e').expect("v or e").parse().expect("edge index"),
        }
    };
    Move { element, label }
}

/// Pulls `move <player> <elem>=<label>` lines and the announced winner
/// out of a play-mode transcript.
fn parse_transcript(text: &str) -> (Vec<(Player, Move)>, String) {
    let mut moves = Vec::new();
    let mut winner = String::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("move ") {
            let mut parts = rest.split_whitespace();
            let player = match parts.next().expect("player name") {
                "Alice" => Player::Alice,
                "Bob" => Player::Bob,
                other => panic!("unknown player {other:?}"),
            };
            moves.push((player, parse_move(parts.next().expect("move text"))));
        } else if let Some(rest) = line.strip_prefix("outcome: ") {
            winner = rest.split_whitespace().next().expect("winner").to_string();
        }
    }
    (moves, winner)
}

#[test]
fn play_transcripts_replay_through_the_rules() {
    let out = run_with_stdin(
        &["play", "--gen", "path", "2", "--variant", "edge-diff", "--seat", "alice"],
        "v9=1\nv0=9\nnonsense\nv0=1\n",
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("illegal move: element v9 does not exist"), "transcript: {text}");
    assert!(text.contains("illegal move: label 9 is outside the domain"), "transcript: {text}");
    assert!(text.contains("could not read that"), "transcript: {text}");
    assert!(text.contains("move Bob v1=2 (engine)"), "transcript: {text}");

    let (moves, winner) = parse_transcript(&text);
    assert_eq!(winner, "Alice");
    let g = path(2).expect("P_2");
    let spec = GameSpec {
        variant: Variant::EdgeDiff,
        label_lo: 1,
        label_hi: 2,
        repeat_policy: RepeatPolicy::NoRepeats,
        convention: Convention::MakerBreaker,
        bias: Bias::alternating(),
        first_player: Player::Alice,
        legality_scope: LegalityScope::Both,
    };
    let rules = RuleSet::new(&spec, &g).expect("spec is valid");
    let mut pos = rules.empty_position();
    for (player, m) in &moves {
        assert_eq!(rules.player_to_move(&pos), *player, "transcript: {text}");
        assert!(rules.legal_moves(&pos).contains(m), "move {m} must be legal");
        pos = rules.apply_move(&pos, *m).expect("transcript moves apply");
    }
    let outcome = rules.terminal_outcome(&pos).expect("transcript plays to the end");
    assert_eq!(outcome.winner, Player::Alice);
}

#[test]
fn play_rejects_constraint_breaking_moves_with_an_explanation() {
    let out = run_with_stdin(
        &["play", "--gen", "path", "2", "--variant", "dist", "--d", "2", "--s", "4", "--seat", "bob"],
        "v1=1\nv1=2\n",
    );
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("move Alice v0=0 (engine)"), "transcript: {text}");
    assert!(
        text.contains("illegal move: v1=1 breaks the labeling constraints"),
        "transcript: {text}"
    );
    assert!(text.contains("move Bob v1=2"), "transcript: {text}");
    assert!(text.contains("outcome: Alice wins"), "transcript: {text}");
}

#[test]
fn play_handles_quitting_and_truncated_input() {
    let out = run_with_stdin(&["play", "--gen", "path", "2", "--variant", "edge-diff"], "quit\n");
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("game abandoned"));

    let out = run_with_stdin(&["play", "--gen", "path", "2", "--variant", "edge-diff"], "");
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).starts_with("error: input ended before the game finished"));
}
