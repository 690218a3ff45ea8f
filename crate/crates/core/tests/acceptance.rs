//! Acceptance gate: one line per criterion, each with its time limit.
//!
//! Lines go straight to the stderr handle so they show up even when the
//! test harness captures output.

use std::io::Write;
use std::time::{Duration, Instant};

use cycle_convexity::harness::{expand_ids, run_check, run_suite, Status, SuiteConfig, TheoremCheck, TheoremReport};

struct Outcome {
    ok: bool,
    detail: String,
}

fn checks(ids: &[&str], min_instances: usize) -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    let mut total = 0;
    for id in ids {
        match run_check(&TheoremCheck::new(*id)) {
            Ok(r) => {
                total += r.instances_run;
                ok &= r.status == Status::Passed;
                let mut d = format!("{id} {:?} ({} instances)", r.status, r.instances_run);
                if let Some(cx) = &r.counterexample {
                    d.push_str(&format!(": {}", cx.message));
                }
                details.push(d);
            }
            Err(e) => {
                ok = false;
                details.push(format!("{id} error: {e}"));
            }
        }
    }
    if total < min_instances {
        ok = false;
        details.push(format!("only {total} instances, need {min_instances}"));
    }
    Outcome {
        ok,
        detail: details.join("; "),
    }
}

fn determinism() -> Outcome {
    let ids = expand_ids("all").expect("catalog ids");
    let config = SuiteConfig {
        seed: 42,
        ..SuiteConfig::default()
    };
    let strip = |rs: Vec<TheoremReport>| -> String {
        let rs: Vec<TheoremReport> = rs.iter().map(TheoremReport::without_wallclock).collect();
        serde_json::to_string(&rs).expect("reports serialize")
    };
    match (run_suite(&ids, &config, 1), run_suite(&ids, &config, 4)) {
        (Ok(a), Ok(b)) => {
            let n = a.len();
            let same = strip(a) == strip(b);
            Outcome {
                ok: same && n == ids.len(),
                detail: format!("{n} reports, one worker vs four workers identical: {same}"),
            }
        }
        (Err(e), _) | (_, Err(e)) => Outcome {
            ok: false,
            detail: format!("suite error: {e}"),
        },
    }
}

#[test]
fn acceptance() {
    type Criterion = (u32, &'static str, u64, Box<dyn Fn() -> Outcome>);
    let criteria: Vec<Criterion> = vec![
        (1, "strong and lexicographic hull number is 2", 60, Box::new(|| checks(&["strong-hull", "lex-hull"], 40))),
        (2, "grid and tree Cartesian hull number m + n - 1", 300, Box::new(|| checks(&["tree-cartesian-hull"], 1))),
        (3, "Cartesian hull bounds and Km □ Kn = 3", 300, Box::new(|| checks(&["cartesian-hull-bounds"], 1))),
        (4, "two-factor biconditional with the partition condition", 600, Box::new(|| checks(&["hull-two-factor"], 1))),
        (5, "structural lemmas on convex sets of products", 120, Box::new(|| checks(&["structural-lemmas"], 1))),
        (
            6,
            "convexity number formulas and closed forms",
            300,
            Box::new(|| checks(&["cartesian-cnum", "strong-lex-cnum", "cnum-closed-forms"], 1)),
        ),
        (7, "gadget H(w) facts", 60, Box::new(|| checks(&["gadget-hw"], 1 << 14))),
        (8, "P3 reduction forward certificates", 300, Box::new(|| checks(&["p3-reduction-forward"], 1))),
        (9, "closure kernel properties", 120, Box::new(|| checks(&["kernel-properties"], 500))),
        (10, "determinism of the full suite", 600, Box::new(determinism)),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr();
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let pass = outcome.ok && in_time;
        let _ = writeln!(
            err,
            "criterion {n:>2} {}: {name} [{:.2}s, limit {limit}s] {}",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            outcome.detail
        );
        if !pass {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
