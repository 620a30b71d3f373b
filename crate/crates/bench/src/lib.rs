//! Graph families used by the benchmarks.

use edgepoly::Multigraph;

pub fn complete(n: usize) -> Multigraph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Multigraph::from_edge_list(n, &edges).expect("in range")
}

pub fn cycle(n: usize) -> Multigraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::from_edge_list(n, &edges).expect("in range")
}

pub fn grid(rows: usize, cols: usize) -> Multigraph {
    let at = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((at(r, c), at(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((at(r, c), at(r + 1, c)));
            }
        }
    }
    Multigraph::from_edge_list(rows * cols, &edges).expect("in range")
}

pub fn petersen() -> Multigraph {
    let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Multigraph::from_edge_list(10, &edges).expect("in range")
}

/// A wheel whose rim edges are doubled, with a loop at the hub.
pub fn doubled_wheel(rim: usize) -> Multigraph {
    let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
    for i in 1..=rim {
        let next = i % rim + 1;
        edges.push((i, next));
        edges.push((i, next));
    }
    edges.push((0, 0));
    Multigraph::from_edge_list(rim + 1, &edges).expect("in range")
}
