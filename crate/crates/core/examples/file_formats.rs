//! Reads the legacy 9999-for-infinity matrix format and writes both the
//! canonical matrix format and the edge-list format.
//!
//! cargo run --example file_formats

use std::fs::File;
use std::path::Path;

use apsp::{
    fw_improved, matrix_to_string, parse_edge_list, read_matrix, write_edge_list, DistanceMatrix, EdgeListGraph,
    InfMode, OrderingStrategy,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/example5_9999.txt");
    let m = read_matrix(File::open(&path)?, InfMode::legacy())?;
    print!("legacy file read and written back canonically\n{}", matrix_to_string(&m));

    let g = EdgeListGraph::from_matrix(&m);
    let mut edge_text = Vec::new();
    write_edge_list(&g, &["converted from a matrix".to_string()], &mut edge_text)?;
    let edge_text = String::from_utf8(edge_text)?;
    print!("\nas an edge list\n{edge_text}");

    let back = DistanceMatrix::from_edge_list(&parse_edge_list(&edge_text)?);
    assert_eq!(back, m);

    let (solved, _) = fw_improved(&m, OrderingStrategy::MinInOutProduct);
    print!("\nshortest distances\n{}", matrix_to_string(&solved));

    match read_matrix("2\n0 x\n1 0\n".as_bytes(), InfMode::Canonical) {
        Err(e) => println!("\nmalformed input is rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
