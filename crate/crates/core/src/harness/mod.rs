//! A catalog of checks that test the product formulas, the structural facts
//! about cycle-convex sets and the hardness constructions on small instances,
//! and report the outcome as JSON-serializable records.
//!
//! Every check is deterministic given its seed, order cap and budget. A
//! failing check carries a counterexample with full edge lists, so it can be
//! replayed without the instance generator.

mod checks;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::SearchBudget;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Passed,
    Failed,
    /// A search ran out of budget before the check could be decided.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub name: String,
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphRecord {
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.order, self.edges.iter().copied())
    }
}

/// Graphs, vertex sets and values that falsify a check.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub message: String,
    pub graphs: Vec<GraphRecord>,
    pub sets: BTreeMap<String, Vec<usize>>,
    pub values: BTreeMap<String, i64>,
}

impl Counterexample {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            ..Self::default()
        }
    }

    pub fn graph(mut self, name: impl Into<String>, g: &Graph) -> Self {
        self.graphs.push(GraphRecord {
            name: name.into(),
            order: g.order(),
            edges: g.edges().collect(),
        });
        self
    }

    pub fn set(mut self, name: impl Into<String>, s: &VertexSet) -> Self {
        self.sets.insert(name.into(), s.to_vec());
        self
    }

    pub fn value(mut self, name: impl Into<String>, v: usize) -> Self {
        self.values.insert(name.into(), v as i64);
        self
    }

    /// Rebuilds a recorded graph by name.
    pub fn find_graph(&self, name: &str) -> Option<Result<Graph>> {
        self.graphs.iter().find(|g| g.name == name).map(GraphRecord::to_graph)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub id: String,
    pub status: Status,
    pub passed: bool,
    pub instances_run: usize,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
    /// Seconds.
    pub wallclock: f64,
}

impl TheoremReport {
    /// The report with the wallclock zeroed, for run-to-run comparison.
    pub fn without_wallclock(&self) -> Self {
        Self {
            wallclock: 0.0,
            ..self.clone()
        }
    }
}

/// One check to run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub id: String,
    pub seed: u64,
    /// Overrides the check's default order cap.
    pub max_order: Option<usize>,
    pub budget: SearchBudget,
}

impl TheoremCheck {
    pub fn new(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            seed: 42,
            max_order: None,
            budget: SearchBudget::representation_cap(),
        }
    }

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = Some(max_order);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckInfo {
    pub id: &'static str,
    pub summary: &'static str,
    /// What the order cap bounds, and its default.
    pub cap: (&'static str, usize),
    /// Part of the `all` suite.
    pub in_suite: bool,
}

const fn info(id: &'static str, summary: &'static str, cap: (&'static str, usize)) -> CheckInfo {
    CheckInfo {
        id,
        summary,
        cap,
        in_suite: true,
    }
}

/// The fixed catalog, in report order.
pub const CATALOG: &[CheckInfo] = &[
    info("strong-hull", "hn of a strong product of connected factors is 2", ("factor order", 4)),
    info("lex-hull", "hn of a lexicographic product of connected factors is 2", ("factor order", 4)),
    info("tree-cartesian-hull", "hn(T1 □ T2) = m + n - 1 for trees", ("m + n", 9)),
    info(
        "cartesian-hull-bounds",
        "max(hn G, hn H, 3) <= hn(G □ H) <= hn G + hn H - 1, the L-shaped witness, hn(Km □ Kn) = 3",
        ("factor order", 4),
    ),
    info(
        "hull-two-factor",
        "hn(G □ H) = hn G exactly when the partition condition holds, for hn H = 2",
        ("order of G", 6),
    ),
    info(
        "structural-lemmas",
        "components of convex sets are subproducts, S x T is convex, projections of hull sets",
        ("m * n", 12),
    ),
    info("cartesian-cnum", "C(G □ H) = max(n C(G), m C(H))", ("factor order", 4)),
    info("strong-lex-cnum", "C(G * H) = alpha(G * H) for strong and lexicographic products", ("factor order", 4)),
    info("cnum-closed-forms", "closed forms of the convexity number for named factor families", ("factor order", 5)),
    info("gadget-hw", "structure and exhaustive hull facts of H(w) and F^uv", ("unused", 14)),
    info(
        "p3-reduction-forward",
        "lifted P3 hull sets are cycle hull sets of size hn_P3 + 45|L|",
        ("order of G", 6),
    ),
    info(
        "p3-reduction-converse",
        "every cycle hull set of the reduction output has at least hn_P3 + 45|L| vertices",
        ("order of G", 4),
    ),
    info(
        "cartesian-hardness",
        "identified-pair construction: certificates, the product lift and bowtie mini-variants",
        ("order of G", 4),
    ),
    info(
        "identified-pair-count",
        "every cycle hull set of G' has at least hn(G) + 18 vertices",
        ("order of G", 3),
    ),
    info(
        "kernel-properties",
        "closure axioms, cycle vs P3 domination and the reference interval",
        ("graph order", 10),
    ),
    CheckInfo {
        id: "negative-control",
        summary: "a deliberately wrong formula that must fail",
        cap: ("factor order", 3),
        in_suite: false,
    },
];

pub fn check_info(id: &str) -> Result<&'static CheckInfo> {
    CATALOG
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Expands `all`, a comma-separated id list, or an empty string.
pub fn expand_ids(spec: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend(CATALOG.iter().filter(|c| c.in_suite).map(|c| c.id.to_string()));
        } else {
            out.push(check_info(part)?.id.to_string());
        }
    }
    Ok(out)
}

pub fn run_check(check: &TheoremCheck) -> Result<TheoremReport> {
    let info = check_info(&check.id)?;
    let start = Instant::now();
    let mut ctx = checks::Ctx::new(check, info);
    let verdict = checks::dispatch(&mut ctx);
    let (status, counterexample) = match verdict {
        Ok(None) => (Status::Passed, None),
        Ok(Some(cx)) => (Status::Failed, Some(cx)),
        Err(Error::BudgetExceeded { what, lower, upper }) => {
            ctx.notes
                .push(format!("budget exhausted in {what} with bounds [{lower}, {upper}]"));
            (Status::Inconclusive, None)
        }
        Err(Error::Counterexample(message)) => (Status::Failed, Some(Counterexample::new(message))),
        Err(e) => return Err(e),
    };
    Ok(TheoremReport {
        id: info.id.to_string(),
        status,
        passed: status == Status::Passed,
        instances_run: ctx.instances,
        counterexample,
        notes: ctx.notes,
        wallclock: start.elapsed().as_secs_f64(),
    })
}

/// Settings shared by every check of a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub max_order: Option<usize>,
    pub budget: SearchBudget,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            max_order: None,
            budget: SearchBudget::representation_cap(),
        }
    }
}

/// Runs the checks on a pool of `parallelism` threads. Duplicates are
/// dropped and reports come back in catalog order.
pub fn run_suite(ids: &[String], config: &SuiteConfig, parallelism: usize) -> Result<Vec<TheoremReport>> {
    let mut infos = ids.iter().map(|id| check_info(id)).collect::<Result<Vec<_>>>()?;
    infos.sort_by_key(|i| CATALOG.iter().position(|c| c.id == i.id));
    infos.dedup_by_key(|i| i.id);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    pool.install(|| {
        infos
            .par_iter()
            .map(|info| {
                run_check(&TheoremCheck {
                    id: info.id.to_string(),
                    seed: config.seed,
                    max_order: config.max_order,
                    budget: config.budget,
                })
            })
            .collect()
    })
}

/// 0 when every report passed, 1 otherwise.
pub fn suite_exit_code(reports: &[TheoremReport]) -> i32 {
    if reports.iter().all(|r| r.passed) {
        0
    } else {
        1
    }
}
