mod common;

use std::process::Command;

use apsp::{cli, parse_edge_list, parse_matrix, InfMode};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("apsp").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn example() -> String {
    common::data_path("example5.txt").display().to_string()
}

fn stats_line(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout.lines().last().unwrap()).unwrap()
}

#[test]
fn solve_improved_prints_matrix_and_stats() {
    let (code, out, err) = run(&["solve", "--algo", "fw-improved", "--matrix", &example(), "--stats"]);
    assert_eq!(code, 0, "{err}");
    let matrix_text: String = out.lines().take(6).map(|l| format!("{l}\n")).collect();
    assert_eq!(matrix_text, common::EXAMPLE_SOLVED);
    let s = stats_line(&out);
    assert_eq!(s["attempts_total"], 46);
    assert_eq!(s["useless_attempts"], 0);
    assert_eq!(s["k_order"], serde_json::json!([5, 3, 1, 2, 4]));
    assert_eq!(s["order"], "minprod");
}

#[test]
fn solve_classic_makes_n_cubed_attempts() {
    let (code, out, _) = run(&["solve", "--algo", "fw", "--matrix", &example(), "--stats"]);
    assert_eq!(code, 0);
    assert_eq!(stats_line(&out)["attempts_total"], 125);
}

#[test]
fn solve_natural_order_visits_vertices_in_sequence() {
    let (_, out, _) = run(&["solve", "--algo", "fw-improved", "--order", "natural", "--matrix", &example(), "--stats"]);
    assert_eq!(stats_line(&out)["k_order"], serde_json::json!([1, 2, 3, 4, 5]));
}

#[test]
fn solve_legacy_file_matches_canonical() {
    let legacy = common::data_path("example5_9999.txt").display().to_string();
    let (code, out, err) = run(&["solve", "--algo", "fw-improved", "--matrix", &legacy, "--legacy-inf"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, common::EXAMPLE_SOLVED);
}

#[test]
fn dijkstra_rejects_negative_weights() {
    let (code, _, err) = run(&["solve", "--algo", "dijkstra", "--matrix", &example()]);
    assert_eq!(code, 1);
    assert!(err.contains("negative"), "{err}");
}

#[test]
fn johnson_solves_the_example() {
    let (code, out, _) = run(&["solve", "--algo", "johnson", "--matrix", &example()]);
    assert_eq!(code, 0);
    assert_eq!(out, common::EXAMPLE_SOLVED);
}

#[test]
fn solve_reports_negative_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cycle.txt");
    std::fs::write(&path, "2\n0 1\n-3 0\n").unwrap();
    let (code, _, err) = run(&["solve", "--algo", "fw", "--matrix", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("negative cycle"), "{err}");
}

#[test]
fn gen_then_solve_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.gr");
    let solved = dir.path().join("d.txt");
    let (code, out, _) = run(&["gen", "--n", "64", "--regime", "2n", "--seed", "3", "--out", graph.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "m=128 seed=3");
    let g = parse_edge_list(&std::fs::read_to_string(&graph).unwrap()).unwrap();
    assert_eq!((g.n(), g.m()), (64, 128));

    for algo in ["fw", "fw-improved", "dijkstra", "johnson"] {
        let (code, _, err) =
            run(&["solve", "--algo", algo, "--edges", graph.to_str().unwrap(), "--out", solved.to_str().unwrap()]);
        assert_eq!(code, 0, "{algo}: {err}");
        let m = parse_matrix(&std::fs::read_to_string(&solved).unwrap(), InfMode::Canonical).unwrap();
        assert_eq!(m.n(), 64);
    }
}

#[test]
fn gen_exact_edge_count_to_stdout() {
    let (code, out, err) = run(&["gen", "--n", "1024", "--m", "512", "--seed", "9"]);
    assert_eq!(code, 0);
    assert_eq!(err.trim(), "m=512 seed=9");
    assert!(out.starts_with("c gen n=1024 m=512"));
    assert_eq!(parse_edge_list(&out).unwrap().m(), 512);
    assert_eq!(run(&["gen", "--n", "1024", "--m", "512", "--seed", "9"]).1, out);
}

#[test]
fn gen_rejects_impossible_edge_count() {
    let (code, _, err) = run(&["gen", "--n", "4", "--m", "99"]);
    assert_eq!(code, 1);
    assert!(err.contains("12"), "{err}");
}

#[test]
fn verify_reports_agreement() {
    let (code, out, _) = run(&["verify", "--n", "32", "--trials", "20", "--seed-base", "42"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("20/20 agree"));
}

#[test]
fn verify_negative_skips_dijkstra() {
    let (code, out, _) = run(&["verify", "--n", "16", "--trials", "9", "--negative"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("dijkstra skipped"));
    assert_eq!(out.lines().last(), Some("9/9 agree"));
}

#[test]
fn bench_writes_csv_and_table() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("b.csv");
    let (code, out, err) = run(&[
        "bench",
        "--n",
        "32",
        "--regimes",
        "n,2n",
        "--trials",
        "2",
        "--algos",
        "fw-improved-minprod,johnson",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("algorithm,n,m,regime,trial,seed,wall_time_ns,attempts,pct_of_fw\n"));
    // the fw baseline is timed but only listed algorithms get rows
    assert_eq!(text.lines().count(), 1 + 2 * 2 * 2);
    assert!(text.lines().skip(1).all(|l| !l.ends_with(',')));
    assert!(out.contains("Johnson's") && out.contains("| Ours"), "{out}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["solve", "--algo", "fw"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["gen", "--n", "8", "--regime", "sparse"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["gen", "solve", "verify", "bench"] {
        assert!(out.contains(sub), "{out}");
    }
}

#[test]
fn binary_honours_seed_environment() {
    let bin = env!("CARGO_BIN_EXE_apsp");
    let gen = |env: Option<&str>, seed: &str| {
        let mut cmd = Command::new(bin);
        cmd.args(["verify", "--n", "8", "--trials", "2", "--seed-base", seed]);
        cmd.env_remove("APSP_SEED");
        if let Some(v) = env {
            cmd.env("APSP_SEED", v);
        }
        let o = cmd.output().unwrap();
        (o.status.code(), String::from_utf8(o.stdout).unwrap())
    };
    let (code, from_flag) = gen(None, "77");
    assert_eq!(code, Some(0));
    assert!(from_flag.contains("seed 77"));
    let (_, from_env) = gen(Some("77"), "5");
    assert_eq!(from_env, from_flag);
    assert_eq!(gen(Some("not-a-number"), "5").0, Some(2));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_apsp");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["solve", "--algo", "fw", "--matrix", &example()]), Some(0));
    assert_eq!(status(&["solve", "--algo", "fw", "--matrix", "/nonexistent/file"]), Some(1));
    assert_eq!(status(&["solve"]), Some(2));
}
