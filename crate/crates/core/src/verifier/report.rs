use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Theorem,
    Conjecture,
}

/// Outcome of checking one graph against a statement.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// The hypothesis does not apply.
    Skip,
    /// Within the bound; `tight` when the bound is attained.
    Holds {
        tight: bool,
    },
    /// Exceeds the bound but is one of the listed exceptions.
    Exception,
    Violation {
        edges: usize,
        bound: Ratio<i64>,
        witness: Value,
    },
}

type Evaluate = Box<dyn Fn(&Graph) -> Result<Verdict> + Send + Sync>;

/// An executable extremal statement.
pub struct BoundSpec {
    pub id: String,
    pub status: Status,
    pub p: Option<usize>,
    evaluate: Evaluate,
}

pub type Predicate = Box<dyn Fn(&Graph) -> Result<bool> + Send + Sync>;
pub type BoundFn = Box<dyn Fn(&Graph) -> Ratio<i64> + Send + Sync>;
pub type Recognizer = Box<dyn Fn(&Graph) -> Result<bool> + Send + Sync>;

impl BoundSpec {
    /// "Every graph satisfying `predicate` has at most `bound` edges, unless
    /// `exception` holds."
    pub fn edge_bound(
        id: impl Into<String>,
        status: Status,
        p: Option<usize>,
        predicate: Predicate,
        bound: BoundFn,
        exception: Option<Recognizer>,
    ) -> Self {
        let evaluate = move |g: &Graph| -> Result<Verdict> {
            if !predicate(g)? {
                return Ok(Verdict::Skip);
            }
            let b = bound(g);
            let e = Ratio::from_integer(g.edge_count() as i64);
            if e <= b {
                return Ok(Verdict::Holds { tight: e == b });
            }
            if let Some(exc) = &exception {
                if exc(g)? {
                    return Ok(Verdict::Exception);
                }
            }
            Ok(Verdict::Violation {
                edges: g.edge_count(),
                bound: b,
                witness: json!({ "vertices": g.vertex_count(), "triangles": g.triangle_count() }),
            })
        };
        BoundSpec { id: id.into(), status, p, evaluate: Box::new(evaluate) }
    }

    /// A statement with its own per-graph evaluation.
    pub fn custom(id: impl Into<String>, status: Status, p: Option<usize>, evaluate: Evaluate) -> Self {
        BoundSpec { id: id.into(), status, p, evaluate }
    }

    pub fn evaluate(&self, g: &Graph) -> Result<Verdict> {
        (self.evaluate)(g)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub edges: usize,
    /// Exact rational, e.g. `35/3`.
    pub bound: String,
    pub witness: Value,
}

/// Result of sweeping one statement over a corpus.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub theorem: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    pub corpus: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
    pub tight: Vec<String>,
    pub exceptions: Vec<String>,
}

impl BoundReport {
    pub fn verified(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialises")
    }
}

/// Evaluates `spec` on every graph of `corpus` in parallel; the report lists
/// graphs in corpus order regardless of scheduling.
pub fn check_bound(spec: &BoundSpec, corpus: &[Graph], description: &str) -> Result<BoundReport> {
    let verdicts: Vec<Result<Verdict>> = corpus.par_iter().map(|g| spec.evaluate(g)).collect();
    let mut report = BoundReport {
        theorem: spec.id.clone(),
        status: spec.status,
        p: spec.p,
        corpus: description.to_string(),
        checked: 0,
        violations: Vec::new(),
        tight: Vec::new(),
        exceptions: Vec::new(),
    };
    for (g, verdict) in corpus.iter().zip(verdicts) {
        let name = || g.to_graph6().unwrap_or_else(|_| format!("{g:?}"));
        match verdict? {
            Verdict::Skip => continue,
            Verdict::Holds { tight } => {
                if tight {
                    report.tight.push(name());
                }
            }
            Verdict::Exception => report.exceptions.push(name()),
            Verdict::Violation { edges, bound, witness } => {
                report.violations.push(Violation { graph6: name(), edges, bound: bound.to_string(), witness })
            }
        }
        report.checked += 1;
    }
    Ok(report)
}
