//! Dijkstra, Bellman-Ford and Johnson on the same graph, including a graph
//! with negative edges and one with a negative cycle.
//!
//! cargo run --example baselines

use apsp::{
    bellman_ford, dijkstra_apsp, dijkstra_sssp, fw_improved, johnson, matrix_to_string, AdjacencyListGraph,
    DistanceMatrix, Edge, EdgeListGraph, OrderingStrategy,
};

fn graph(n: usize, edges: &[(usize, usize, i64)]) -> EdgeListGraph {
    EdgeListGraph::new(n, edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect()).unwrap()
}

fn main() {
    let roads = graph(4, &[(0, 1, 4), (0, 2, 1), (2, 1, 2), (1, 3, 5), (2, 3, 8)]);
    let lists = AdjacencyListGraph::from(&roads);
    let from0 = dijkstra_sssp(&lists, 0).unwrap();
    println!("dijkstra from 1: {:?}, settle order {:?}", from0.dist, from0.settled);
    let (all, ops) = dijkstra_apsp(&lists).unwrap();
    print!("all pairs ({} heap operations)\n{}", ops.total(), matrix_to_string(&all));

    let signed = graph(4, &[(0, 1, 3), (1, 2, -2), (2, 3, 2), (0, 3, 4), (3, 1, 1)]);
    let lists = AdjacencyListGraph::from(&signed);
    println!("\ndijkstra refuses negative edges: {}", dijkstra_apsp(&lists).unwrap_err());
    let (j, _) = johnson(&lists).unwrap();
    let (f, _) = fw_improved(&DistanceMatrix::from_edge_list(&signed), OrderingStrategy::MinInOutProduct);
    assert_eq!(j, f);
    print!("johnson\n{}", matrix_to_string(&j));

    let cycle = graph(3, &[(0, 1, 1), (1, 2, 1), (2, 0, -3)]);
    let lists = AdjacencyListGraph::from(&cycle);
    println!("\nbellman-ford: {}", bellman_ford(&lists, 0).unwrap_err());
    println!("johnson: {}", johnson(&lists).unwrap_err());
}
