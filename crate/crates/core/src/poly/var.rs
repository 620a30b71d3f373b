use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Base names in their canonical order. Unknown bases sort after these.
const BASE_ORDER: &[&str] = &["x", "y", "z", "q", "v", "λ", "τ", "u", "ω", "t"];

/// ASCII spellings used by the text form.
const ALIASES: &[(&str, &str)] = &[("λ", "l"), ("τ", "tau"), ("ω", "omega")];

/// A polynomial variable: a base name with an optional index, e.g. `x`,
/// `t_a`, `x_12`. Variables order by base (`x < y < z < q < v < λ < τ < u
/// < ω < t < others`), then unindexed before indexed, then by index
/// (numeric indices numerically, before alphabetic ones).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Var {
    base: String,
    index: Option<String>,
}

impl Var {
    /// Parses a variable name. ASCII aliases (`l`, `tau`, `omega`) resolve
    /// to their Greek base.
    pub fn new(name: &str) -> Result<Self> {
        let (base, index) = match name.split_once('_') {
            Some((b, i)) => (b, Some(i)),
            None => (name, None),
        };
        let base = ALIASES
            .iter()
            .find(|(_, ascii)| *ascii == base)
            .map(|(greek, _)| *greek)
            .unwrap_or(base);
        let base_ok = !base.is_empty() && base.chars().all(char::is_alphabetic);
        let index_ok = index.is_none_or(|i| !i.is_empty() && i.chars().all(|c| c.is_ascii_alphanumeric()));
        if !base_ok || !index_ok {
            return Err(Error::InvalidVariable(name.to_string()));
        }
        Ok(Var {
            base: base.to_string(),
            index: index.map(str::to_string),
        })
    }

    /// Panicking constructor for names known to be valid.
    pub fn named(name: &str) -> Self {
        Var::new(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn indexed(base: &str, index: impl fmt::Display) -> Result<Self> {
        Var::new(&format!("{base}_{index}"))
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn index(&self) -> Option<&str> {
        self.index.as_deref()
    }

    /// Full name, Greek letters included.
    pub fn name(&self) -> String {
        match &self.index {
            Some(i) => format!("{}_{}", self.base, i),
            None => self.base.clone(),
        }
    }

    /// ASCII name used by the text form.
    pub fn ascii_name(&self) -> String {
        let base = ALIASES
            .iter()
            .find(|(greek, _)| *greek == self.base)
            .map(|(_, ascii)| *ascii)
            .unwrap_or(&self.base);
        match &self.index {
            Some(i) => format!("{base}_{i}"),
            None => base.to_string(),
        }
    }

    fn rank(&self) -> usize {
        BASE_ORDER
            .iter()
            .position(|b| *b == self.base)
            .unwrap_or(BASE_ORDER.len())
    }
}

fn compare_index(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.base.cmp(&other.base))
            .then_with(|| match (&self.index, &other.index) {
                (None, None) => Ordering::Equal,
                (None, Some(_)) => Ordering::Less,
                (Some(_), None) => Ordering::Greater,
                (Some(a), Some(b)) => compare_index(a, b),
            })
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
