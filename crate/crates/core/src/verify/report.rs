use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::multigraph::Multigraph;
use crate::xi::EdgeLabeling;

/// Everything needed to replay a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Edge-list text of the graph.
    pub graph: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub parameters: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Counterexample {
    pub fn new(g: &Multigraph) -> Self {
        Counterexample {
            graph: g.to_edge_list(),
            labels: None,
            parameters: BTreeMap::new(),
            expected: None,
            actual: None,
            note: None,
        }
    }

    pub fn labels(mut self, lab: &EdgeLabeling) -> Self {
        self.labels = Some(lab.iter().map(|(_, l)| l.to_string()).collect());
        self
    }

    pub fn param(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.parameters.insert(name.to_string(), value.to_string());
        self
    }

    pub fn values(mut self, expected: String, actual: String) -> Self {
        self.expected = Some(expected);
        self.actual = Some(actual);
        self
    }

    pub fn note(mut self, note: String) -> Self {
        self.note = Some(note);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    /// Short graph description, e.g. `n=3 [0-1, 1-2]`.
    pub graph: String,
    pub identity: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl Outcome {
    pub fn pass(g: &Multigraph, identity: impl Into<String>) -> Self {
        Outcome {
            graph: g.to_string(),
            identity: identity.into(),
            passed: true,
            detail: None,
            counterexample: None,
        }
    }

    pub fn fail(g: &Multigraph, identity: impl Into<String>, cx: Counterexample) -> Self {
        Outcome {
            graph: g.to_string(),
            identity: identity.into(),
            passed: false,
            detail: None,
            counterexample: Some(cx),
        }
    }

    /// Pass iff `expected == actual`, recording both on failure.
    pub fn compare<T: PartialEq + fmt::Display>(
        g: &Multigraph,
        identity: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> Self {
        if expected == actual {
            Outcome::pass(g, identity)
        } else {
            Outcome::fail(
                g,
                identity,
                Counterexample::new(g).values(expected.to_string(), actual.to_string()),
            )
        }
    }

    pub fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

/// Outcomes of one suite, in corpus order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub outcomes: Vec<Outcome>,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerifyReport {
            suite: suite.into(),
            outcomes: Vec::new(),
        }
    }

    pub fn single(suite: impl Into<String>, outcome: Outcome) -> Self {
        VerifyReport {
            suite: suite.into(),
            outcomes: vec![outcome],
        }
    }

    pub fn push(&mut self, outcome: Outcome) {
        self.outcomes.push(outcome);
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.outcomes.extend(other.outcomes);
    }

    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    pub fn failure_count(&self) -> usize {
        self.failures().count()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failure_count();
        writeln!(
            f,
            "suite {}: {} checks, {} failed",
            self.suite,
            self.outcomes.len(),
            failed
        )?;
        for o in self.failures() {
            writeln!(f, "  FAIL {} on {}", o.identity, o.graph)?;
            if let Some(cx) = &o.counterexample {
                for (k, v) in &cx.parameters {
                    writeln!(f, "    {k} = {v}")?;
                }
                if let (Some(e), Some(a)) = (&cx.expected, &cx.actual) {
                    writeln!(f, "    expected {e}")?;
                    writeln!(f, "    actual   {a}")?;
                }
                if let Some(n) = &cx.note {
                    writeln!(f, "    {n}")?;
                }
            }
        }
        Ok(())
    }
}
