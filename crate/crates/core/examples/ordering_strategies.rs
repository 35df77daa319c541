//! Compares relaxation attempts for natural order and minimum in/out product
//! order across densities.
//!
//! cargo run --release --example ordering_strategies -- [N]

use apsp::{fw_improved, generate, DistanceMatrix, EdgeCount, GenSpec, OrderingStrategy, Regime};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(256);
    let cube = (n as f64).powi(3);
    println!("N = {n}, attempts as a fraction of N^3");
    println!("{:<12} {:>12} {:>12}", "regime", "natural", "minprod");
    for r in Regime::ALL {
        let g = generate(&GenSpec::new(n, EdgeCount::Regime(r), 7))?;
        let m = DistanceMatrix::from_edge_list(&g);
        let (a, natural) = fw_improved(&m, OrderingStrategy::NaturalOrder);
        let (b, minprod) = fw_improved(&m, OrderingStrategy::MinInOutProduct);
        assert_eq!(a, b);
        println!(
            "{:<12} {:>12.5} {:>12.5}",
            r.label(),
            natural.attempts_total as f64 / cube,
            minprod.attempts_total as f64 / cube
        );
    }
    Ok(())
}
