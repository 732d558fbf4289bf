//! Decodes graph6 strings from the command line (or a few built-in ones), prints
//! the edge lists and re-encodes them.
//!
//!     cargo run --example graph6_roundtrip -- 'Ch' 'E{O_'

use locdom::graph6::{from_graph6, to_graph6};

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["A_", "Ch", "E{O_", "G~[ww["].map(String::from).to_vec();
    }
    for text in inputs {
        match from_graph6(&text) {
            Ok(g) => {
                let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                let back = to_graph6(&g).expect("decoded graphs re-encode");
                println!(
                    "{text}: n = {}, edges [{}], re-encoded {back}",
                    g.order(),
                    edges.join(" ")
                );
            }
            Err(e) => println!("{text}: {e}"),
        }
    }
}
