//! Exact solvers for the hull number, the convexity number and the
//! independence number, product fast paths, and witness constructions.
//!
//! All exact searches enumerate candidate sets in increasing bit-mask order,
//! so the reported witness is the least optimal set under that order no
//! matter how the search is split across threads.

mod cartesian;
mod cnum;
mod fastpath;
mod hull;
mod independence;
mod partition;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use cartesian::{cartesian_hull_bounds, cartesian_hull_witness, cartesian_partition_lift};
pub use cnum::convexity_number_exact;
pub use fastpath::{convexity_fastpath, hull_fastpath};
pub use hull::hull_number_exact;
pub use independence::independence_number_exact;
pub use partition::{partition_condition, partition_witness, split_hulls_meet, witness_for_split, PartitionWitness};

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// How a result was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    FastpathStrong,
    FastpathLex,
    FastpathTreeProduct,
    FastpathGrid,
    FastpathCartesian,
    FastpathAlpha,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HullResult {
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvexityNumberResult {
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub value: usize,
    pub witness: VertexSet,
}

/// Limits for exact searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest graph order accepted.
    pub max_n: usize,
    /// Cap on candidate sets (or search nodes) examined per solve.
    pub max_subsets: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_n: 22,
            max_subsets: 2_000_000_000,
            time_limit: None,
        }
    }
}

impl SearchBudget {
    /// Accepts any graph the bit-mask kernel can represent.
    pub fn representation_cap() -> Self {
        Self {
            max_n: 64,
            ..Self::default()
        }
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn with_max_subsets(mut self, max_subsets: u64) -> Self {
        self.max_subsets = max_subsets;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub(crate) fn validate(&self, what: &str, n: usize) -> Result<()> {
        if self.max_n == 0 || self.max_subsets == 0 || self.time_limit == Some(Duration::ZERO) {
            return Err(Error::Precondition("search budget limits must be positive".into()));
        }
        if n > self.max_n.min(64) {
            return Err(Error::BudgetExceeded {
                what: format!("{what}: order {n} exceeds max_n {}", self.max_n.min(64)),
                lower: 0,
                upper: n,
            });
        }
        Ok(())
    }
}

/// Shared counters for one solve.
pub(crate) struct Control {
    max_subsets: u64,
    deadline: Option<Instant>,
    used: AtomicU64,
    exhausted: AtomicBool,
}

const TICK: u64 = 1024;

impl Control {
    pub(crate) fn new(budget: &SearchBudget) -> Self {
        Self {
            max_subsets: budget.max_subsets,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            used: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    /// Records `count` units of work; returns false once the budget is gone.
    pub(crate) fn spend(&self, count: u64) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.used.fetch_add(count, Ordering::Relaxed) + count;
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if used > self.max_subsets || over_time {
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn is_exhausted(&self) -> bool {
        self.exhausted.load(Ordering::Relaxed)
    }
}

/// Spreads the bits of `compressed` onto `positions` (least bit to
/// `positions[0]`).
#[inline]
fn expand(compressed: u64, positions: &[usize]) -> u64 {
    let mut out = 0;
    let mut c = compressed;
    while c != 0 {
        out |= 1 << positions[c.trailing_zeros() as usize];
        c &= c - 1;
    }
    out
}

/// Visits the `k`-subsets of the low `width` bits in increasing order.
fn for_each_combination(width: usize, k: usize, mut visit: impl FnMut(u64) -> bool) {
    if k > width {
        return;
    }
    if k == 0 {
        visit(0);
        return;
    }
    let limit = if width == 64 { u64::MAX } else { 1u64 << width };
    let mut x: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    loop {
        if !visit(x) {
            return;
        }
        if k == 64 {
            return;
        }
        let c = x & x.wrapping_neg();
        let r = match x.checked_add(c) {
            Some(r) => r,
            None => return,
        };
        x = (((r ^ x) >> 2) / c) | r;
        if width < 64 && x >= limit {
            return;
        }
    }
}

/// Finds the least `base ∪ X`, over `r`-subsets `X` of `positions` (sorted
/// ascending), for which `test` yields a value. Work is split by the largest
/// chosen position so that the first hit in split order is the global least.
///
/// Returns `Err(())` when the budget ran out before the answer was settled.
pub(crate) fn find_first_subset<T: Send>(
    positions: &[usize],
    r: usize,
    base: u64,
    ctl: &Control,
    test: impl Fn(u64) -> Option<T> + Sync,
) -> std::result::Result<Option<(u64, T)>, ()> {
    if r > positions.len() {
        return Ok(None);
    }
    if r == 0 {
        if !ctl.spend(1) {
            return Err(());
        }
        return Ok(test(base).map(|t| (base, t)));
    }
    let found = (r - 1..positions.len()).into_par_iter().find_map_first(|top| {
        let top_bit = 1u64 << positions[top];
        let mut hit = None;
        let mut pending = 0u64;
        for_each_combination(top, r - 1, |c| {
            pending += 1;
            if pending == TICK {
                pending = 0;
                if !ctl.spend(TICK) {
                    return false;
                }
            }
            let set = base | top_bit | expand(c, positions);
            if let Some(t) = test(set) {
                hit = Some((set, t));
                return false;
            }
            true
        });
        ctl.spend(pending);
        hit
    });
    // A hit at some split is final only if no earlier split was cut short;
    // splits before it ran to completion unless the budget tripped.
    if ctl.is_exhausted() {
        return Err(());
    }
    Ok(found)
}
