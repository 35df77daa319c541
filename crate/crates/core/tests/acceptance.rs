//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p apsp --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use apsp::bench::{run_bench, Algorithm, BenchConfig};
use apsp::{
    bellman_ford, detect_negative_cycle, dijkstra_apsp, fw_classic, fw_improved, fw_improved_observed, generate,
    johnson, matrix_to_string, parse_matrix, read_matrix, AdjacencyListGraph, BaselineError, DistanceMatrix, Edge,
    EdgeListGraph, InfMode, OrderingStrategy, Regime, Weight,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

fn example() -> DistanceMatrix {
    parse_matrix(common::EXAMPLE, InfMode::Canonical).unwrap()
}

fn solved() -> DistanceMatrix {
    parse_matrix(common::EXAMPLE_SOLVED, InfMode::Canonical).unwrap()
}

fn check_example_run(input: &DistanceMatrix) -> Outcome {
    let (out, stats) = fw_improved(input, OrderingStrategy::MinInOutProduct);
    ensure!(out == solved(), "final matrix differs:\n{}", matrix_to_string(&out));
    let order = stats.k_order_one_based();
    ensure!(order == [5, 3, 1, 2, 4] || order == [5, 3, 1, 4, 2], "k order {order:?}");
    ensure!(stats.useless_attempts == 0, "{} useless attempts", stats.useless_attempts);
    Ok(format!("k order {order:?}, {} attempts", stats.attempts_total))
}

fn golden_example() -> Outcome {
    let input = example();
    let detail = check_example_run(&input)?;
    let (classic, _) = fw_classic(&input);
    ensure!(classic == solved(), "classic result differs");
    let slowest = (0..5)
        .map(|_| {
            let t = Instant::now();
            std::hint::black_box(fw_improved(std::hint::black_box(&input), OrderingStrategy::MinInOutProduct));
            t.elapsed()
        })
        .max()
        .unwrap();
    ensure!(slowest < Duration::from_millis(1), "took {slowest:?}");
    Ok(format!("{detail}, slowest of 5 runs {slowest:?}"))
}

fn intermediate_state() -> Outcome {
    let input = example();
    let mut before = None;
    let mut after = None;
    let mut last = input.clone();
    fw_improved_observed(&input, OrderingStrategy::MinInOutProduct, |view| {
        if view.vertex == 0 {
            before = Some(last.clone());
            after = Some(view.matrix.clone());
        }
        last = view.matrix.clone();
    });
    let (before, after) = (before.unwrap(), after.unwrap());
    let mut newly_finite = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            if before.get(i, j) == Weight::Infinity && after.get(i, j) != Weight::Infinity {
                newly_finite.push((i + 1, j + 1, after.get(i, j)));
            }
        }
    }
    let expected = vec![(3, 2, Weight::Finite(4)), (5, 2, Weight::Finite(7)), (5, 4, Weight::Finite(6))];
    ensure!(newly_finite == expected, "cells made finite by vertex 1: {newly_finite:?}");
    Ok("(3,2)=4 (5,2)=7 (5,4)=6 become finite when vertex 1 is processed".into())
}

fn no_useless_attempts() -> Outcome {
    let start = Instant::now();
    let (cases, dropped) = common::corpus();
    ensure!(cases.len() >= 200, "only {} graphs", cases.len());
    let mut runs = 0;
    for case in &cases {
        for s in [OrderingStrategy::NaturalOrder, OrderingStrategy::MinInOutProduct] {
            let mut failure = None;
            let (_, stats) = fw_improved_observed(&case.matrix, s, |view| {
                let adj = view.adjacency.unwrap();
                let k = view.vertex;
                let operands_finite = adj.incoming(k).iter().all(|&i| view.matrix.get(i, k) != Weight::Infinity)
                    && adj.outgoing(k).iter().all(|&j| view.matrix.get(k, j) != Weight::Infinity);
                if view.useless != 0 || !operands_finite {
                    failure.get_or_insert(format!("vertex {}: {} useless", k + 1, view.useless));
                }
            });
            ensure!(failure.is_none(), "{} {s}: {}", case.label(), failure.unwrap());
            ensure!(stats.useless_attempts == 0, "{} {s}: {} useless", case.label(), stats.useless_attempts);
            runs += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!(
        "{} graphs ({dropped} negative-cycle graphs dropped), {runs} runs, 0 useless attempts, {elapsed:.2?}",
        cases.len()
    ))
}

fn oracle_equivalence() -> Outcome {
    let (cases, _) = common::corpus();
    let mut dijkstra_checked = 0;
    for case in &cases {
        for s in [OrderingStrategy::NaturalOrder, OrderingStrategy::MinInOutProduct] {
            let (out, _) = fw_improved(&case.matrix, s);
            if let Some((i, j, a, b)) = case.expected.first_difference(&out) {
                return Err(format!("{} {s}: cell ({},{}) classic {a} vs {b}", case.label(), i + 1, j + 1));
            }
        }
        let g = AdjacencyListGraph::from(&case.graph);
        let (jm, _) = johnson(&g).map_err(|e| format!("{}: johnson {e}", case.label()))?;
        ensure!(jm == case.expected, "{}: johnson differs", case.label());
        if case.weights.0 >= 0 {
            let (dm, _) = dijkstra_apsp(&g).map_err(|e| format!("{}: dijkstra {e}", case.label()))?;
            ensure!(dm == case.expected, "{}: dijkstra differs", case.label());
            dijkstra_checked += 1;
        }
    }
    let mut brute = 0;
    for case in cases.iter().filter(|c| c.n <= 4) {
        let expected = common::brute_force(&case.matrix).ok_or("oracle found a negative cycle")?;
        ensure!(case.expected.rows() == expected, "{}: path enumeration differs", case.label());
        brute += 1;
    }
    Ok(format!(
        "{} graphs equal to classic (both orders, johnson), {dijkstra_checked} also dijkstra, {brute} also path enumeration",
        cases.len()
    ))
}

fn attempt_bound() -> Outcome {
    let (cases, _) = common::corpus();
    let mut tightest: f64 = 0.0;
    for case in &cases {
        let n = case.n;
        for s in [OrderingStrategy::NaturalOrder, OrderingStrategy::MinInOutProduct] {
            let mut product_sum = 0u64;
            let mut totals = (0, 0);
            let (out, stats) = fw_improved_observed(&case.matrix, s, |view| {
                let (a, b) = view.lists_at_start.unwrap();
                product_sum += (a * b) as u64;
                let adj = view.adjacency.unwrap();
                totals = (adj.total_entries(), adj.total_outgoing_entries());
            });
            ensure!(
                stats.attempts_total == product_sum,
                "{} {s}: attempts {} != Σ|in||out| {product_sum}",
                case.label(),
                stats.attempts_total
            );
            ensure!(
                stats.attempts_total <= (n as u64).pow(3),
                "{} {s}: {} attempts",
                case.label(),
                stats.attempts_total
            );
            let finite = out.finite_off_diagonal();
            ensure!(totals == (finite, finite), "{} {s}: list totals {totals:?}, {finite} finite cells", case.label());
            tightest = tightest.max(stats.attempts_total as f64 / (n as f64).powi(3));
        }
    }
    Ok(format!(
        "attempts = Σ|in(k)|·|out(k)| ≤ N³ on {} graphs (max ratio {tightest:.3}), list totals match finite cells",
        cases.len()
    ))
}

fn sparse_speedup() -> Outcome {
    let n = 1024;
    let timed = [Regime::HalfN, Regime::N, Regime::TwoN];
    let config = BenchConfig {
        regimes: timed.to_vec(),
        trials: 10,
        algorithms: vec![Algorithm::Fw, Algorithm::FwImprovedMinProd],
        ..BenchConfig::new(n)
    };
    let report = run_bench(&config, |_| {}).map_err(|e| e.to_string())?;
    let mut detail = Vec::new();
    for r in timed {
        let fw = report.mean_wall_time_ns(Algorithm::Fw, r).unwrap();
        let ours = report.mean_wall_time_ns(Algorithm::FwImprovedMinProd, r).unwrap();
        let pct = report.mean_pct_of_fw(Algorithm::FwImprovedMinProd, r).unwrap();
        ensure!(ours < fw, "{}: improved {ours:.0} ns vs classic {fw:.0} ns", r.label());
        detail.push(format!("{} {pct:.2}%", r.label()));
    }

    let ladder = [Regime::HalfN, Regime::N, Regime::TwoN, Regime::FourN, Regime::LgNN];
    let mut ratios = Vec::new();
    for r in ladder {
        let mut sum = 0.0;
        for t in 0..config.trials {
            let g = generate(&config.gen_spec(r, t)).map_err(|e| e.to_string())?;
            let (_, stats) = fw_improved(&DistanceMatrix::from_edge_list(&g), OrderingStrategy::MinInOutProduct);
            sum += stats.attempts_total as f64;
        }
        ratios.push(sum / config.trials as f64 / (n as f64).powi(3));
    }
    let shown: Vec<String> = ladder.iter().zip(&ratios).map(|(r, x)| format!("{} {x:.2e}", r.label())).collect();
    ensure!(ratios.windows(2).all(|w| w[0] < w[1]), "attempts/N³ not increasing: {}", shown.join(", "));
    Ok(format!("time vs classic: {}; attempts/N³: {}", detail.join(", "), shown.join(", ")))
}

fn negative_cycles() -> Outcome {
    let cycles = [("2-cycle", 2, vec![(0, 1, 1), (1, 0, -3)]), ("3-cycle", 3, vec![(0, 1, 2), (1, 2, -1), (2, 0, -2)])];
    for (name, n, edges) in cycles {
        let g = EdgeListGraph::new(n, edges.into_iter().map(|(u, v, w)| Edge::new(u, v, w)).collect()).unwrap();
        let lists = AdjacencyListGraph::from(&g);
        let m = DistanceMatrix::from_edge_list(&g);
        ensure!(
            matches!(bellman_ford(&lists, 0), Err(BaselineError::NegativeCycle { .. })),
            "{name}: bellman-ford missed it"
        );
        ensure!(matches!(johnson(&lists), Err(BaselineError::NegativeCycle { .. })), "{name}: johnson missed it");
        ensure!(detect_negative_cycle(&fw_classic(&m).0).is_some(), "{name}: classic missed it");
        for s in [OrderingStrategy::NaturalOrder, OrderingStrategy::MinInOutProduct] {
            ensure!(detect_negative_cycle(&fw_improved(&m, s).0).is_some(), "{name}: improved {s} missed it");
        }
    }
    Ok("2-cycle and 3-cycle reported by bellman-ford, johnson and both Floyd-Warshall variants".into())
}

fn legacy_round_trip() -> Outcome {
    let file = std::fs::File::open(common::data_path("example5_9999.txt")).map_err(|e| e.to_string())?;
    let legacy = read_matrix(file, InfMode::legacy()).map_err(|e| e.to_string())?;
    ensure!(legacy == example(), "legacy file parses differently");
    let detail = check_example_run(&legacy)?;
    let rendered = matrix_to_string(&legacy);
    let expected = "5\n0 6 X 5 X\n2 0 3 -1 2\n-2 X 0 2 X\n-1 1 2 0 -1\n1 X X X 0\n";
    ensure!(rendered == expected, "rendered as:\n{rendered}");
    let reread = parse_matrix(&rendered, InfMode::Canonical).map_err(|e| e.to_string())?;
    ensure!(reread == legacy, "X rendering does not read back");
    Ok(format!("9999 read as infinity, written as X, {detail}"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("worked example result and order", golden_example),
        ("intermediate matrix after vertex 1", intermediate_state),
        ("no useless attempts on random graphs", no_useless_attempts),
        ("agreement with reference algorithms", oracle_equivalence),
        ("attempt bound and list totals", attempt_bound),
        ("sparse speedup at N=1024", sparse_speedup),
        ("negative cycle detection", negative_cycles),
        ("legacy infinity file format", legacy_round_trip),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
