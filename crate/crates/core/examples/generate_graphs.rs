//! Draws seeded random graphs in every density regime.
//!
//! cargo run --example generate_graphs -- [N] [SEED]

use apsp::{generate, regime_edge_count, EdgeCount, GenSpec, Regime};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(64);
    let seed: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);

    println!("{:<12} {:>8} {:>10} {:>10}", "regime", "m", "min w", "max w");
    for r in Regime::ALL {
        let spec = GenSpec::new(n, EdgeCount::Regime(r), seed);
        let g = generate(&spec)?;
        assert_eq!(g.m(), regime_edge_count(n, r));
        let lo = g.edges().iter().map(|e| e.weight).min().unwrap_or(0);
        let hi = g.edges().iter().map(|e| e.weight).max().unwrap_or(0);
        println!("{:<12} {:>8} {:>10} {:>10}", r.label(), g.m(), lo, hi);
    }

    // Same seed, same graph.
    let spec = GenSpec::new(n, EdgeCount::Exact(n), seed).with_weights(-10, 100);
    assert_eq!(generate(&spec)?, generate(&spec)?);
    println!("\n{}", spec.metadata_comment());
    Ok(())
}
