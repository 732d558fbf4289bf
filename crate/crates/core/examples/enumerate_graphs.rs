//! Writes every connected graph of order 1..=8 (one per isomorphism class) as
//! graph6, one file per order, to the directory given as the first argument
//! (default `tests/fixtures`).
//!
//!     cargo run --example enumerate_graphs -- crates/core/tests/fixtures

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use locdom::enumerate::connected_graphs;
use locdom::graph6::write_graph6;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "tests/fixtures".into()));
    std::fs::create_dir_all(&dir)?;
    for n in 1..=8 {
        let graphs = connected_graphs(n);
        let path = dir.join(format!("connected{n}.g6"));
        write_graph6(BufWriter::new(File::create(&path)?), &graphs)?;
        println!("{}: {} graphs", path.display(), graphs.len());
    }
    Ok(())
}
