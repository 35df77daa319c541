//! All-pairs shortest paths on sparse directed graphs.
//!
//! The centerpiece is [`fw_improved`], a Floyd-Warshall variant that only
//! attempts relaxations whose two operands are both finite. It keeps dynamic
//! incoming/outgoing lists per vertex ([`DynAdjacency`]) and can pick the next
//! intermediate vertex by smallest `|in| * |out|`. [`fw_classic`] and the
//! [`baselines`] (Dijkstra per source, Bellman-Ford, Johnson) serve as
//! references, [`gen`] draws seeded random graphs and [`bench`] times
//! everything against classic Floyd-Warshall.
//!
//! ```
//! use apsp::{fw_classic, fw_improved, parse_matrix, InfMode, OrderingStrategy};
//!
//! let m = parse_matrix("3\n0 4 INF\nINF 0 -1\n2 INF 0", InfMode::Canonical).unwrap();
//! let (fast, stats) = fw_improved(&m, OrderingStrategy::MinInOutProduct);
//! assert_eq!(fast, fw_classic(&m).0);
//! assert_eq!(stats.useless_attempts, 0);
//! ```

pub mod adjacency;
pub mod baselines;
pub mod bench;
pub mod cli;
pub mod error;
pub mod fw;
pub mod gen;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod stats;
pub mod verify;
pub mod weight;

pub use adjacency::DynAdjacency;
pub use baselines::{
    bellman_ford, dijkstra_apsp, dijkstra_apsp_parallel, dijkstra_sssp, johnson, johnson_parallel, AdjacencyListGraph,
    OpCounts, SsspResult,
};
pub use error::{BaselineError, GenError, GraphError, ParseError, ParseErrorKind, ReadError};
pub use fw::{
    detect_negative_cycle, fw_classic, fw_classic_observed, fw_improved, fw_improved_observed, IterationView,
    OrderingStrategy,
};
pub use gen::{generate, regime_edge_count, EdgeCount, GenSpec, Regime};
pub use graph::{Edge, EdgeListGraph};
pub use io::{
    matrix_to_string, parse_edge_list, parse_matrix, read_edge_list, read_matrix, write_edge_list, write_matrix,
    InfMode,
};
pub use matrix::DistanceMatrix;
pub use stats::RelaxStats;
pub use weight::{weight_add, Weight, MAX_ABS_WEIGHT};
