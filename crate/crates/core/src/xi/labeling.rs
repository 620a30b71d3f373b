use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::multigraph::{EdgeId, Multigraph};
use crate::poly::Var;

/// Total assignment of labels to edge ids. Labels are ASCII alphanumeric so
/// they can appear in variable names such as `t_a`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: BTreeMap<EdgeId, String>,
}

pub(crate) fn valid_label(label: &str) -> bool {
    !label.is_empty() && label.chars().all(|c| c.is_ascii_alphanumeric())
}

impl EdgeLabeling {
    pub fn new(labels: BTreeMap<EdgeId, String>) -> Result<Self> {
        if let Some(bad) = labels.values().find(|l| !valid_label(l)) {
            return Err(Error::InvalidVariable(format!("t_{bad}")));
        }
        Ok(EdgeLabeling { labels })
    }

    /// Labels edge ids `0, 1, ...` in order.
    pub fn from_sequence<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        EdgeLabeling::new(
            labels
                .iter()
                .enumerate()
                .map(|(i, l)| (EdgeId(i as u32), l.as_ref().to_string()))
                .collect(),
        )
    }

    /// Every edge of `g` gets `label`.
    pub fn uniform(g: &Multigraph, label: &str) -> Result<Self> {
        EdgeLabeling::new(g.edge_ids().map(|id| (id, label.to_string())).collect())
    }

    /// Every edge gets its own label `e<id>`.
    pub fn per_edge(g: &Multigraph) -> Self {
        EdgeLabeling {
            labels: g.edge_ids().map(|id| (id, format!("e{}", id.0))).collect(),
        }
    }

    pub fn label(&self, id: EdgeId) -> Option<&str> {
        self.labels.get(&id).map(String::as_str)
    }

    pub fn alphabet(&self) -> BTreeSet<&str> {
        self.labels.values().map(String::as_str).collect()
    }

    /// Fails with the first edge of `g` that has no label.
    pub fn check_total(&self, g: &Multigraph) -> Result<()> {
        match g.edge_ids().find(|id| !self.labels.contains_key(id)) {
            Some(id) => Err(Error::UnlabeledEdge(id)),
            None => Ok(()),
        }
    }

    /// Labels carried by the edges of `g`.
    pub fn alphabet_of(&self, g: &Multigraph) -> Result<BTreeSet<String>> {
        self.check_total(g)?;
        Ok(g.edge_ids().map(|id| self.labels[&id].clone()).collect())
    }

    /// Number of edges of `g` per label.
    pub fn label_counts(&self, g: &Multigraph) -> Result<BTreeMap<String, u32>> {
        self.check_total(g)?;
        let mut counts = BTreeMap::new();
        for id in g.edge_ids() {
            *counts.entry(self.labels[&id].clone()).or_insert(0) += 1;
        }
        Ok(counts)
    }

    pub fn iter(&self) -> impl Iterator<Item = (EdgeId, &str)> {
        self.labels.iter().map(|(id, l)| (*id, l.as_str()))
    }
}

/// The per-label variable `<family>_<label>`, e.g. `t_a`.
pub fn label_var(family: &str, label: &str) -> Var {
    Var::indexed(family, label).expect("labels are validated on construction")
}
