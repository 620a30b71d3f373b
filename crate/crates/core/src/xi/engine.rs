//! Memoized evaluation of the confluent recurrences.
//!
//! Connected subgraphs are cached under their canonical key. The key is a
//! relabeling of the subgraph itself (see [`crate::CanonicalKey`]), so a
//! cache hit is always an isomorphic graph: a weak canonicalizer can only
//! cost hits, never change a result. [`MemoMode::Exact`] turns off sharing
//! across isomorphic copies, [`MemoMode::Off`] disables the cache.

use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use lru::LruCache;
use parking_lot::Mutex;

use super::labeling::EdgeLabeling;
use super::policy::EliminationPolicy;
use super::rules::{eliminate, StepRule, XiLabRule, XiRule};
use crate::error::Result;
use crate::multigraph::{CanonicalKey, EdgeId, Multigraph};
use crate::poly::MPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MemoMode {
    /// Share results between isomorphic subgraphs.
    #[default]
    Canonical,
    /// Share results only between identically labeled subgraphs.
    Exact,
    /// No cache.
    Off,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub entries: usize,
}

/// Evaluator for `ξ` and `ξ_lab` with a shared, thread-safe cache.
///
/// Concurrent callers may compute the same entry twice; both store the same
/// value.
pub struct XiEngine {
    mode: MemoMode,
    cache: Mutex<LruCache<CanonicalKey, Arc<MPoly>>>,
    labels: Mutex<Vec<String>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl Default for XiEngine {
    fn default() -> Self {
        XiEngine::new()
    }
}

impl XiEngine {
    pub fn new() -> Self {
        XiEngine::with_options(MemoMode::Canonical, None)
    }

    pub fn with_mode(mode: MemoMode) -> Self {
        XiEngine::with_options(mode, None)
    }

    /// `capacity = None` means unbounded; otherwise least recently used
    /// entries are evicted.
    pub fn with_options(mode: MemoMode, capacity: Option<NonZeroUsize>) -> Self {
        let cache = match capacity {
            Some(c) => LruCache::new(c),
            None => LruCache::unbounded(),
        };
        XiEngine {
            mode,
            cache: Mutex::new(cache),
            labels: Mutex::new(Vec::new()),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            entries: self.cache.lock().len(),
        }
    }

    /// `ξ(G; x, y, z)`.
    pub fn xi(&self, g: &Multigraph) -> MPoly {
        self.run(g, &XiRule::new(), &|_| 0)
    }

    /// `ξ_lab(G; x, y, z, t̄)` with one variable `t_λ` per label.
    pub fn xi_lab(&self, g: &Multigraph, lab: &EdgeLabeling) -> Result<MPoly> {
        let rule = XiLabRule::new(g, lab)?;
        // colors are interned label indices shifted past the unlabeled color 0
        let colors: std::collections::BTreeMap<EdgeId, u32> = g
            .edge_ids()
            .map(|id| (id, self.intern(lab.label(id).expect("checked by rule"))))
            .collect();
        Ok(self.run(g, &rule, &|id| colors[&id]))
    }

    fn intern(&self, label: &str) -> u32 {
        let mut labels = self.labels.lock();
        let pos = match labels.iter().position(|l| l == label) {
            Some(p) => p,
            None => {
                labels.push(label.to_string());
                labels.len() - 1
            }
        };
        pos as u32 + 1
    }

    fn run<R: StepRule<Value = MPoly>>(
        &self,
        g: &Multigraph,
        rule: &R,
        color: &dyn Fn(EdgeId) -> u32,
    ) -> MPoly {
        if self.mode == MemoMode::Off {
            return eliminate(g, rule, &EliminationPolicy::MaxDegreeSum);
        }
        self.memoized(g, rule, color)
    }

    fn memoized<R: StepRule<Value = MPoly>>(
        &self,
        g: &Multigraph,
        rule: &R,
        color: &dyn Fn(EdgeId) -> u32,
    ) -> MPoly {
        if g.vertex_count() == 0 {
            return rule.empty();
        }
        if !g.is_connected() {
            return g
                .components()
                .iter()
                .fold(rule.empty(), |acc, part| rule.mul(&acc, &self.memoized(part, rule, color)));
        }
        if g.edge_count() == 0 {
            return rule.vertex();
        }
        let key = match self.mode {
            MemoMode::Exact => g.exact_key_colored(color),
            _ => g.canonical_form_colored(color).key,
        };
        if let Some(hit) = self.cache.lock().get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return MPoly::clone(hit);
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let e = EliminationPolicy::MaxDegreeSum.choose_edge(g);
        let deleted = self.memoized(&g.delete_edge(e).expect("edge present"), rule, color);
        let contracted = self.memoized(&g.contract_edge(e).expect("edge present"), rule, color);
        let extracted = self.memoized(&g.extract_edge(e).expect("edge present"), rule, color);
        let value = rule.step(e, deleted, contracted, extracted);
        self.cache.lock().put(key, Arc::new(value.clone()));
        value
    }
}

/// `ξ(G)` computed without a cache, eliminating edges in the order the
/// policy dictates.
pub fn xi_with_policy(g: &Multigraph, policy: &EliminationPolicy) -> MPoly {
    eliminate(g, &XiRule::new(), policy)
}

/// `ξ_lab(G)` without a cache, in policy order.
pub fn xi_lab_with_policy(
    g: &Multigraph,
    lab: &EdgeLabeling,
    policy: &EliminationPolicy,
) -> Result<MPoly> {
    Ok(eliminate(g, &XiLabRule::new(g, lab)?, policy))
}
