//! Times every algorithm as a percentage of classic Floyd-Warshall and prints
//! a markdown table.
//!
//! cargo run --release --example bench_table -- [N] [TRIALS]

use apsp::bench::{run_bench, BenchConfig};
use apsp::Regime;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(256);
    let trials: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let config = BenchConfig {
        trials,
        regimes: vec![Regime::HalfN, Regime::N, Regime::TwoN, Regime::FourN, Regime::LgNN, Regime::HalfNN],
        ..BenchConfig::new(n)
    };
    let report = run_bench(&config, |r| eprintln!("{} {} trial {}", r.algorithm, r.regime.label(), r.trial))?;
    print!("{}", report.markdown_table());
    Ok(())
}
