use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use sglab_core::{Cycle, SignedGraph};

use crate::io::write_sg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Infeasible,
}

/// A graph (as `.sg` text) or a cycle (canonical rotation), with a label.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cycle: Option<Vec<usize>>,
}

impl Witness {
    pub fn graph(label: impl Into<String>, g: &SignedGraph) -> Self {
        Witness {
            label: label.into(),
            graph: Some(write_sg(g)),
            cycle: None,
        }
    }

    pub fn cycle(label: impl Into<String>, c: &Cycle) -> Self {
        Witness {
            label: label.into(),
            graph: None,
            cycle: Some(c.canonical().vertices().to_vec()),
        }
    }

    pub fn graph_with_cycle(label: impl Into<String>, g: &SignedGraph, c: &Cycle) -> Self {
        Witness {
            cycle: Some(c.canonical().vertices().to_vec()),
            ..Witness::graph(label, g)
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Counters {
    /// Switching classes (or search states) examined.
    pub classes: u64,
    /// Underlying graphs examined.
    pub graphs: u64,
    pub seconds: f64,
}

/// Machine-readable verdict of one verification run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub claim: String,
    pub params: Map<String, Value>,
    pub status: Status,
    pub expected: Value,
    pub observed: Value,
    pub witnesses: Vec<Witness>,
    pub counters: Counters,
    pub flags: Vec<String>,
}

impl TheoremReport {
    pub(crate) fn new(claim: &str, params: Map<String, Value>) -> Self {
        TheoremReport {
            claim: claim.to_string(),
            params,
            status: Status::Pass,
            expected: Value::Null,
            observed: Value::Null,
            witnesses: Vec::new(),
            counters: Counters::default(),
            flags: Vec::new(),
        }
    }

    pub(crate) fn infeasible(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Infeasible;
        self.flags.push(reason.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
