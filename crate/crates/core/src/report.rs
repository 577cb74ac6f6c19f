//! Uniform, serialisable answers for all four problems.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::ev::{has_ev_solution, min_ev, spanning_tree_ev_solution, verify_ev};
use crate::graph::Graph;
use crate::ve::{solve_ve, verify_ve};
use crate::vv_ee::{min_ee, min_vv, solve_ee, solve_vv, verify_ee, verify_vv, vv_nullity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Vv,
    Ve,
    Ev,
    Ee,
}

impl Problem {
    pub const ALL: [Problem; 4] = [Problem::Vv, Problem::Ve, Problem::Ev, Problem::Ee];

    /// Whether witnesses are edge ids (otherwise vertex ids).
    pub fn presses_edges(self) -> bool {
        matches!(self, Problem::Ev | Problem::Ee)
    }

    pub fn name(self) -> &'static str {
        match self {
            Problem::Vv => "vv",
            Problem::Ve => "ve",
            Problem::Ev => "ev",
            Problem::Ee => "ee",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidParameter(format!("unknown problem '{s}'")))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: Option<usize>,
    pub upper: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub problem: Problem,
    pub n: usize,
    pub m: usize,
    pub feasible: bool,
    pub size: Option<usize>,
    /// Vertex ids for `vv`/`ve`, edge ids for `ev`/`ee`.
    pub witness: Vec<usize>,
    pub optimal: bool,
    pub bounds: Bounds,
    pub diagnostics: Vec<String>,
    /// Endpoints of the witness edges for `ev`/`ee`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(usize, usize)>>,
}

impl SolutionReport {
    fn new(g: &Graph, problem: Problem) -> Self {
        SolutionReport {
            problem,
            n: g.n(),
            m: g.m(),
            feasible: false,
            size: None,
            witness: Vec::new(),
            optimal: false,
            bounds: Bounds::default(),
            diagnostics: Vec::new(),
            edges: None,
        }
    }

    fn with_witness(mut self, g: &Graph, x: &BitVec) -> Self {
        self.feasible = true;
        self.witness = x.to_indices();
        self.size = Some(self.witness.len());
        if self.problem.presses_edges() {
            self.edges = Some(self.witness.iter().map(|&e| g.edge(e)).collect());
        }
        self
    }

    /// Human-readable multi-line rendering.
    pub fn to_text(&self) -> String {
        let mut out = format!("problem {}\nn {} m {}\n", self.problem, self.n, self.m);
        if !self.feasible {
            out.push_str("infeasible\n");
        } else {
            let ids: Vec<String> = self.witness.iter().map(|i| i.to_string()).collect();
            out.push_str(&format!(
                "size {}{}\nwitness {}\n",
                self.witness.len(),
                if self.optimal { " (optimal)" } else { "" },
                ids.join(" ")
            ));
        }
        let show = |b: Option<usize>| b.map_or("-".to_string(), |v| v.to_string());
        out.push_str(&format!(
            "bounds {} {}\n",
            show(self.bounds.lower),
            show(self.bounds.upper)
        ));
        for d in &self.diagnostics {
            out.push_str(&format!("note {d}\n"));
        }
        out
    }
}

fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Solves `problem` on `g`. With `minimum`, searches for a smallest witness;
/// for `vv` and `ee` this enumerates the solution space and falls back to an
/// arbitrary witness when its dimension exceeds `nullity_cap`.
pub fn solve_report(
    g: &Graph,
    problem: Problem,
    minimum: bool,
    nullity_cap: usize,
) -> Result<SolutionReport> {
    let mut r = SolutionReport::new(g, problem);
    match problem {
        Problem::Vv => {
            // each press lights at most max_degree + 1 lamps
            r.bounds.lower = Some(g.n().div_ceil(max_degree(g) + 1));
            r.bounds.upper = Some(g.n());
            let nullity = vv_nullity(g);
            r.diagnostics.push(format!("nullity {nullity}"));
            let best = if minimum {
                min_vv(g, nullity_cap)?
            } else {
                None
            };
            match best {
                Some(x) => {
                    r = r.with_witness(g, &x);
                    r.optimal = true;
                }
                None => {
                    if minimum {
                        r.diagnostics
                            .push(format!("nullity {nullity} exceeds cap {nullity_cap}"));
                    }
                    r = r.with_witness(g, &solve_vv(g)?);
                    r.optimal = nullity == 0;
                }
            }
        }
        Problem::Ve => match solve_ve(g) {
            None => r.diagnostics.push("not bipartite".into()),
            Some(sol) => {
                let smallest = sol.chosen_min.count_ones();
                r.bounds = Bounds {
                    lower: Some(smallest),
                    upper: Some(g.n() - smallest),
                };
                r.diagnostics
                    .push(format!("components {}", sol.components.len()));
                if sol.degenerate {
                    r.diagnostics
                        .push("no edges: every vertex set is a solution".into());
                }
                if minimum {
                    r = r.with_witness(g, &sol.chosen_min);
                    r.optimal = true;
                } else {
                    let first =
                        g.vertex_set(sol.components.iter().flat_map(|(u, _)| u.iter().copied()));
                    r.optimal = first == sol.chosen_min;
                    r = r.with_witness(g, &first);
                }
            }
        },
        Problem::Ev => {
            if !has_ev_solution(g) {
                r.diagnostics.push("a component has odd order".into());
                return Ok(r);
            }
            let components = g.components();
            r.bounds = Bounds {
                lower: Some(g.n() / 2),
                upper: Some(g.n() - components.len()),
            };
            if minimum {
                let sol = min_ev(g)?
                    .ok_or_else(|| Error::Invariant("minimum solver found no solution".into()))?;
                r.diagnostics
                    .push(format!("forest components {}", sol.forest_components.len()));
                if let Some(w) = sol.matching_weight {
                    r.diagnostics.push(format!("matching weight {w}"));
                }
                r = r.with_witness(g, &sol.edges);
                r.optimal = true;
            } else {
                let mut edges = BitVec::zeros(g.m());
                for c in &components {
                    let sub = g.induced_subgraph(c);
                    let local = spanning_tree_ev_solution(&sub.graph)?;
                    for e in local.edges.iter_ones() {
                        edges.set(sub.edge_map[e], true);
                    }
                }
                r = r.with_witness(g, &edges);
            }
        }
        Problem::Ee => {
            let d = max_degree(g);
            // each press lights at most 2 * max_degree - 1 lamps
            r.bounds.lower = Some(g.m().div_ceil((2 * d).saturating_sub(1).max(1)));
            r.bounds.upper = Some(g.m());
            let best = if minimum {
                min_ee(g, nullity_cap)?
            } else {
                None
            };
            match best {
                Some(f) => {
                    r = r.with_witness(g, &f);
                    r.optimal = true;
                }
                None => {
                    if minimum {
                        let nullity = vv_nullity(&g.line_graph().0);
                        r.diagnostics
                            .push(format!("nullity {nullity} exceeds cap {nullity_cap}"));
                    }
                    r = r.with_witness(g, &solve_ee(g)?);
                }
            }
        }
    }
    Ok(r)
}

/// Checks a witness given as vertex or edge ids.
pub fn verify_witness(g: &Graph, problem: Problem, ids: &[usize]) -> Result<bool> {
    let len = if problem.presses_edges() {
        g.m()
    } else {
        g.n()
    };
    if let Some(&bad) = ids.iter().find(|&&i| i >= len) {
        return Err(Error::InvalidParameter(format!(
            "witness id {bad} out of range for {len} {}",
            if problem.presses_edges() {
                "edges"
            } else {
                "vertices"
            }
        )));
    }
    let x = BitVec::from_indices(len, ids.iter().copied());
    Ok(match problem {
        Problem::Vv => verify_vv(g, &x),
        Problem::Ve => verify_ve(g, &x),
        Problem::Ev => verify_ev(g, &x),
        Problem::Ee => verify_ee(g, &x),
    })
}

/// Lamp states after pressing `ids`: `true` means lit. Lamps are vertices for
/// `vv`/`ev` and edges for `ve`/`ee`.
pub fn lamp_states(g: &Graph, problem: Problem, ids: &[usize]) -> Result<Vec<bool>> {
    let len = if problem.presses_edges() {
        g.m()
    } else {
        g.n()
    };
    if let Some(&bad) = ids.iter().find(|&&i| i >= len) {
        return Err(Error::InvalidParameter(format!(
            "press id {bad} out of range"
        )));
    }
    let lamps = match problem {
        Problem::Vv | Problem::Ev => g.n(),
        Problem::Ve | Problem::Ee => g.m(),
    };
    let mut lit = vec![false; lamps];
    for &i in ids {
        match problem {
            Problem::Vv => {
                lit[i] ^= true;
                for &w in g.neighbors(i) {
                    lit[w] ^= true;
                }
            }
            Problem::Ve => {
                for &e in g.incident_edges(i) {
                    lit[e] ^= true;
                }
            }
            Problem::Ev => {
                let (u, v) = g.edge(i);
                lit[u] ^= true;
                lit[v] ^= true;
            }
            Problem::Ee => {
                let (u, v) = g.edge(i);
                lit[i] ^= true;
                for &f in g.incident_edges(u).iter().chain(g.incident_edges(v)) {
                    if f != i {
                        lit[f] ^= true;
                    }
                }
            }
        }
    }
    Ok(lit)
}
