mod common;

use std::io::Cursor;

use locdom::graph6::{from_graph6, read_graph6, to_graph6, ReadError};
use locdom::Graph;
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..=62).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn round_trip(g in arb_graph()) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(&text, &common::reference_graph6(&g));
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }
}

#[test]
fn known_encodings() {
    assert_eq!(to_graph6(&Graph::complete(2)).unwrap(), "A_");
    assert_eq!(to_graph6(&Graph::path(4)).unwrap(), "Ch");
    assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
    assert_eq!(to_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
}

#[test]
fn file_errors_carry_line_numbers() {
    let text = "A_\n\nCh\nC!\n";
    match read_graph6(Cursor::new(text)) {
        Err(ReadError::Parse { line, .. }) => assert_eq!(line, 4),
        other => panic!("expected a parse error, got {other:?}"),
    }
    let ok = read_graph6(Cursor::new(">>graph6<<A_\nCh\n")).unwrap();
    assert_eq!(ok.len(), 2);
}

#[test]
fn rejects_malformed_records() {
    for bad in ["", "A", "A__", "C!", "~"] {
        assert!(from_graph6(bad).is_err(), "{bad:?}");
    }
}
