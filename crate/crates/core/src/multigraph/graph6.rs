//! graph6 encoding for simple graphs.

use super::Multigraph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Encodes a simple graph. Loops and parallel edges are rejected.
pub fn encode(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Graph6(
            "graph6 cannot represent loops or parallel edges".into(),
        ));
    }
    let n = g.vertex_count();
    let mut out = size_bytes(n)?;
    let mut adj = vec![false; n * n];
    for e in g.edges() {
        adj[e.u * n + e.v] = true;
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(adj[i * n + j]);
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &bit) in chunk.iter().enumerate() {
            if bit {
                byte |= 1 << (5 - k);
            }
        }
        out.push(byte + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

fn size_bytes(n: usize) -> Result<Vec<u8>> {
    if n <= 62 {
        Ok(vec![n as u8 + 63])
    } else if n <= 258_047 {
        Ok(vec![
            126,
            (n >> 12 & 63) as u8 + 63,
            (n >> 6 & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ])
    } else {
        Err(Error::Graph6(format!("{n} vertices is too many")))
    }
}

/// Decodes one graph6 line (optional `>>graph6<<` header allowed). Edge ids
/// follow the column-major order of the upper triangle.
pub fn decode(text: &str) -> Result<Multigraph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid byte {b:#04x}")));
        }
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(Error::Graph6("sizes above 258047 are not supported".into()));
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != needed {
        return Err(Error::Graph6(format!(
            "expected {needed} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Multigraph::from_edge_list(n, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // five-vertex example from the format description
        let g = Multigraph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
        assert_eq!(encode(&Multigraph::empty(0)).unwrap(), "?");
        let k2 = Multigraph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(encode(&k2).unwrap(), "A_");
    }

    #[test]
    fn round_trip() {
        let g = Multigraph::from_edge_list(7, &[(0, 1), (1, 2), (5, 6), (0, 6), (3, 4)]).unwrap();
        let back = decode(&encode(&g).unwrap()).unwrap();
        assert_eq!(back.canonical_key(), g.canonical_key());
        assert_eq!(decode(">>graph6<<A_").unwrap().edge_count(), 1);
        let big = Multigraph::from_edge_list(70, &[(0, 69), (3, 4)]).unwrap();
        assert_eq!(decode(&encode(&big).unwrap()).unwrap().canonical_key(), big.canonical_key());
    }

    #[test]
    fn rejects_multigraphs_and_garbage() {
        let looped = Multigraph::from_edge_list(1, &[(0, 0)]).unwrap();
        assert!(encode(&looped).is_err());
        assert!(decode("A").is_err());
        assert!(decode("A_x").is_err());
        assert!(decode("").is_err());
    }
}
