//! Free trees by the Wright–Richmond–Odlyzko–McKay successor on canonical
//! level sequences: each tree is visited once, in constant amortized time.

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

pub const MAX_TREE_VERTICES: usize = 16;

/// Iterator over the free trees on `n` vertices, one per isomorphism class.
pub struct FreeTrees {
    layout: Option<Vec<usize>>,
}

/// One representative per isomorphism class of free trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<FreeTrees> {
    if !(1..=MAX_TREE_VERTICES).contains(&n) {
        return Err(Error::OutOfRange {
            what: "tree vertex count",
            value: n,
            allowed: format!("1..={MAX_TREE_VERTICES}"),
        });
    }
    // the path, rooted at its center
    let layout = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
    Ok(FreeTrees {
        layout: Some(layout),
    })
}

impl Iterator for FreeTrees {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        let layout = self.layout.take()?;
        let tree = layout_to_graph(&layout);
        self.layout = next_rooted_tree(&layout, None).and_then(next_tree);
        Some(tree)
    }
}

/// Successor of a rooted level sequence; `p` overrides the position of the
/// last entry above level 1.
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let mut p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while p > 0 && pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut out = pred.to_vec();
    let shift = p - q;
    while p < out.len() {
        out[p] = out[p - shift];
        p += 1;
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root (levels
/// lowered by one) and the rest of the tree.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Accepts a rooted candidate if it is the canonical rooting of its free
/// tree, otherwise jumps to the next candidate that may be.
fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid && rest_height == left_height {
        if left.len() > rest.len() || (left.len() == rest.len() && left > rest) {
            valid = false;
        }
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (i, level) in (1..=height + 1).enumerate() {
            next[len - (height + 1) + i] = level;
        }
    }
    Some(next)
}

fn layout_to_graph(layout: &[usize]) -> Multigraph {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] < level {
                edges.push((j, i));
                break;
            }
            stack.pop();
        }
        stack.push(i);
    }
    Multigraph::from_edge_list(layout.len(), &edges).expect("tree edges are in range")
}
