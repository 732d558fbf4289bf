//! graph6 codec (short form only, `n <= 62`).
//!
//! A record is `N(n)` followed by the upper triangle of the adjacency matrix in
//! column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte
//! (most significant first), zero-padded, each byte offset by 63.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// Largest order representable in the short header form.
pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("long-form header at offset {offset}: orders above {MAX_GRAPH6_ORDER} are not supported")]
    LongForm { offset: usize },
    #[error("record ends at offset {offset}, expected {expected} bytes in total")]
    Truncated { offset: usize, expected: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("non-zero padding bits in the byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("graph of order {n} cannot be written in short-form graph6 (max {MAX_GRAPH6_ORDER})")]
    UnsupportedSize { n: usize },
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one record. Surrounding line terminators must already be stripped.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if head == 126 {
        return Err(Graph6Error::LongForm { offset: 0 });
    }
    if !(63..=125).contains(&head) {
        return Err(Graph6Error::InvalidByte { offset: 0, byte: head });
    }
    let n = (head - 63) as usize;
    let expected = data_len(n);
    if let Some((i, &b)) = body.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::InvalidByte { offset: i + 1, byte: b });
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected: expected + 1,
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { offset: expected + 1 });
    }

    let bits = n * n.saturating_sub(1) / 2;
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - 63) & ((1u8 << pad) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding { offset: expected });
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric and in range"))
}

pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::UnsupportedSize { n });
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Error while reading a graph6 file, tagged with the 1-based line number.
#[derive(Debug, Error)]
pub enum ReadError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Reads one record per line. Blank lines and an optional `>>graph6<<` prefix
/// are skipped.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>, ReadError> {
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let record = line.trim_end_matches(['\r', '\n']);
        let record = record.strip_prefix(">>graph6<<").unwrap_or(record);
        if record.is_empty() {
            continue;
        }
        graphs.push(from_graph6(record).map_err(|source| ReadError::Parse { line: i + 1, source })?);
    }
    Ok(graphs)
}

pub fn write_graph6<'a, W, I>(mut writer: W, graphs: I) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        let line = to_graph6(g).map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))?;
        writeln!(writer, "{line}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent decoder working bit by bit over the whole record, written
    /// directly from the format description.
    fn reference_edges(text: &str) -> (usize, Vec<(usize, usize)>) {
        let b = text.as_bytes();
        let n = (b[0] - 63) as usize;
        let bits: Vec<u8> = b[1..]
            .iter()
            .flat_map(|&c| (0..6).rev().map(move |s| ((c - 63) >> s) & 1))
            .collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 0..n {
            for i in 0..j {
                if bits[k] == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn small_records() {
        assert_eq!(from_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(from_graph6("?").unwrap(), Graph::empty(0).unwrap());
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(to_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(to_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(reference_edges("Bw"), (3, vec![(0, 1), (0, 2), (1, 2)]));
        assert_eq!(reference_edges("A_"), (2, vec![(0, 1)]));
    }

    #[test]
    fn known_record_from_petgraph() {
        // edges a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(reference_edges("DQc"), (5, g.edges().collect()));
    }

    #[test]
    fn decode_errors() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(from_graph6("~?@~"), Err(Graph6Error::LongForm { offset: 0 }));
        assert_eq!(
            from_graph6(" "),
            Err(Graph6Error::InvalidByte { offset: 0, byte: b' ' })
        );
        assert_eq!(from_graph6("B"), Err(Graph6Error::Truncated { offset: 1, expected: 2 }));
        assert_eq!(from_graph6("Bw?"), Err(Graph6Error::TrailingData { offset: 2 }));
        // K3 uses 3 of 6 bits; 'x' sets a padding bit
        assert_eq!(from_graph6("Bx"), Err(Graph6Error::NonZeroPadding { offset: 1 }));
        assert_eq!(
            from_graph6("B\x7f"),
            Err(Graph6Error::InvalidByte { offset: 1, byte: 0x7f })
        );
        assert_eq!(from_graph6("@?"), Err(Graph6Error::TrailingData { offset: 1 }));
    }

    #[test]
    fn encode_limit() {
        let g = Graph::empty(63).unwrap();
        assert_eq!(to_graph6(&g), Err(Graph6Error::UnsupportedSize { n: 63 }));
        let g = Graph::path(62);
        assert_eq!(from_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn read_reports_line_numbers() {
        let input = ">>graph6<<A_\n\nBw\nB\n";
        match read_graph6(input.as_bytes()) {
            Err(ReadError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        let gs = read_graph6("A_\r\nBw\n".as_bytes()).unwrap();
        assert_eq!(gs, vec![Graph::complete(2), Graph::complete(3)]);
    }
}
