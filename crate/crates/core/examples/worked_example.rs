//! Solves the five-vertex example graph with both Floyd-Warshall variants and
//! prints the matrix after every iteration of the improved one.
//!
//! cargo run --example worked_example

use apsp::{fw_classic, fw_improved_observed, matrix_to_string, parse_matrix, InfMode, OrderingStrategy};

const INPUT: &str = "5
0 6 INF 5 INF
2 0 3 -1 2
-2 INF 0 2 INF
-1 1 2 0 -1
1 INF INF INF 0
";

fn main() {
    let m = parse_matrix(INPUT, InfMode::Canonical).expect("valid matrix");
    print!("input\n{}", matrix_to_string(&m));

    let (improved, stats) = fw_improved_observed(&m, OrderingStrategy::MinInOutProduct, |view| {
        let (a, b) = view.lists_at_start.unwrap();
        println!(
            "\nvertex {} (|in|={a}, |out|={b}): {} attempts, {} improved",
            view.vertex + 1,
            view.attempts,
            view.successes
        );
        print!("{}", matrix_to_string(view.matrix));
    });

    let (classic, classic_stats) = fw_classic(&m);
    assert_eq!(improved, classic);
    println!("\norder {:?}", stats.k_order_one_based());
    println!("attempts: improved {} vs classic {}", stats.attempts_total, classic_stats.attempts_total);
    println!("useless attempts: improved {} vs classic {}", stats.useless_attempts, classic_stats.useless_attempts);
}
