//! Batch property suites run by `lamplight check`.

use std::fmt;
use std::str::FromStr;

use lamplight::ev::{
    check_optimality_by_cycles, claw_free_pm_check, min_ev, min_ev_via_gadget,
    spanning_tree_ev_solution, symmetric_difference_check, tree_ev_solution, verify_ev,
};
use lamplight::graph::DEFAULT_CYCLE_CAP;
use lamplight::oracle::{brute_solutions_ev, corpus, min_ev_size_tjoin};
use lamplight::{Error, Graph, Result};
use rayon::prelude::*;

/// Largest order the suites accept; the pairing oracle is exponential in it.
pub const MAX_LIMIT_N: usize = 16;
// solution sets beyond this many edges are not paired up exhaustively
const PAIR_EDGE_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Bounds,
    Approx,
    Uniqueness,
    ClawFree,
    SymDiff,
    Cycles,
    Reduction,
}

impl Suite {
    const ALL: [(Suite, &'static str); 7] = [
        (Suite::Bounds, "bounds"),
        (Suite::Approx, "approx"),
        (Suite::Uniqueness, "uniqueness"),
        (Suite::ClawFree, "clawfree"),
        (Suite::SymDiff, "symdiff"),
        (Suite::Cycles, "cycles"),
        (Suite::Reduction, "reduction"),
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = Suite::ALL.iter().find(|(s, _)| s == self).unwrap().1;
        f.write_str(name)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .iter()
            .find(|(_, name)| *name == s)
            .map(|(suite, _)| *suite)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|(_, n)| *n).collect();
                format!("unknown suite '{s}' (expected one of {})", names.join(", "))
            })
    }
}

pub struct Summary {
    pub instances: usize,
    /// Sorted, so output does not depend on scheduling.
    pub failures: Vec<String>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

// None: instance not applicable to the suite.
fn check_one(suite: Suite, g: &Graph) -> Result<Option<bool>> {
    let n = g.n();
    let even_connected = n > 0 && n.is_multiple_of(2) && g.is_connected();
    Ok(match suite {
        Suite::Bounds if even_connected => {
            let s = min_ev(g)?.map(|s| s.size);
            Some(matches!(s, Some(k) if 2 * k >= n && k < n))
        }
        Suite::Approx if even_connected => {
            let approx = spanning_tree_ev_solution(g)?;
            let best = min_ev_size_tjoin(g)?;
            Some(matches!(best, Some(b) if verify_ev(g, &approx.edges)
                && approx.size * n <= 2 * (n - 1) * b))
        }
        Suite::Uniqueness if even_connected && g.is_tree() => {
            let sols = brute_solutions_ev(g)?;
            Some(sols.len() == 1 && sols[0] == tree_ev_solution(g)?)
        }
        Suite::ClawFree if n > 0 && g.is_connected() && g.is_claw_free() => {
            let mut ok = claw_free_pm_check(g)?;
            if n.is_multiple_of(2) {
                ok &= matches!(min_ev(g)?, Some(s) if s.size == n / 2);
            }
            Some(ok)
        }
        Suite::SymDiff if even_connected && g.m() <= PAIR_EDGE_LIMIT => {
            let sols = brute_solutions_ev(g)?;
            Some(sols.iter().enumerate().all(|(i, a)| {
                sols[i + 1..]
                    .iter()
                    .all(|b| symmetric_difference_check(g, a, b))
            }))
        }
        Suite::Cycles if even_connected && g.m() <= PAIR_EDGE_LIMIT => {
            let sols = brute_solutions_ev(g)?;
            let best = sols.iter().map(|s| s.count_ones()).min();
            let mut ok = true;
            for s in &sols {
                let optimal = Some(s.count_ones()) == best;
                ok &= check_optimality_by_cycles(g, s, DEFAULT_CYCLE_CAP)? == optimal;
            }
            Some(ok)
        }
        Suite::Reduction if even_connected => {
            let best = min_ev_size_tjoin(g)?;
            let sol = min_ev_via_gadget(g)?;
            Some(match sol {
                Some(s) => {
                    Some(s.size) == best
                        && verify_ev(g, &s.edges)
                        && s.matching_weight == Some(2 * s.size as u64)
                }
                None => false,
            })
        }
        _ => None,
    })
}

/// Runs `suite` over the seeded corpus of graphs with at most `limit_n`
/// vertices.
pub fn run_suite(suite: Suite, limit_n: usize, seed: u64) -> Result<Summary> {
    if limit_n > MAX_LIMIT_N {
        return Err(Error::InvalidParameter(format!(
            "--limit-n {limit_n} exceeds {MAX_LIMIT_N}"
        )));
    }
    let graphs = corpus(limit_n, seed)?;
    let verdicts: Vec<Result<Option<bool>>> =
        graphs.par_iter().map(|g| check_one(suite, g)).collect();
    let mut instances = 0;
    let mut failures = Vec::new();
    for (g, verdict) in graphs.iter().zip(verdicts) {
        match verdict? {
            Some(true) => instances += 1,
            Some(false) => {
                instances += 1;
                failures.push(describe(g));
            }
            None => {}
        }
    }
    failures.sort();
    Ok(Summary {
        instances,
        failures,
    })
}
