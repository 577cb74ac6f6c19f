//! Minimum-weight perfect matching on integer-weighted graphs.

mod blossom;

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

use blossom::BlossomSolver;

pub type Weight = u32;

/// A simple graph with a non-negative integer weight per edge id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub weights: Vec<Weight>,
}

/// A set of pairwise vertex-disjoint edges (sorted ids) and its total weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<usize>,
    pub total_weight: u64,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != graph.m() {
            return Err(Error::DimensionMismatch {
                expected: graph.m(),
                got: weights.len(),
            });
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// Every edge weighted zero.
    pub fn unweighted(graph: Graph) -> Self {
        let weights = vec![0; graph.m()];
        WeightedGraph { graph, weights }
    }

    pub fn weight_of(&self, edges: &[usize]) -> u64 {
        edges.iter().map(|&e| self.weights[e] as u64).sum()
    }

    /// True when `edges` are valid ids, pairwise disjoint and cover every vertex.
    pub fn is_perfect_matching(&self, edges: &[usize]) -> bool {
        let g = &self.graph;
        let mut covered = vec![false; g.n()];
        for &e in edges {
            if e >= g.m() {
                return false;
            }
            let (u, v) = g.edge(e);
            if covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        covered.into_iter().all(|c| c)
    }
}

/// Exact minimum-weight perfect matching, or `None` if the graph has no
/// perfect matching. Runs in `O(n^3)`.
pub fn min_weight_perfect_matching(wg: &WeightedGraph) -> Option<Matching> {
    let g = &wg.graph;
    if g.n() % 2 == 1 {
        return None;
    }
    if g.n() == 0 {
        return Some(Matching {
            edges: Vec::new(),
            total_weight: 0,
        });
    }
    // Among maximum-cardinality matchings, maximising sum(2 * (W - w))
    // minimises sum(w) once the cardinality is n/2. The factor 2 keeps
    // all duals integral.
    let top = wg.weights.iter().copied().max().unwrap_or(0) as i64 + 1;
    let edges = g
        .edges()
        .iter()
        .zip(&wg.weights)
        .map(|(&(u, v), &w)| (u, v, 2 * (top - w as i64)))
        .collect();
    let mate = BlossomSolver::new(g.n(), edges, true).solve();

    let mut out = Vec::with_capacity(g.n() / 2);
    for (u, m) in mate.iter().enumerate() {
        let v = (*m)?;
        if u < v {
            out.push(g.edge_id(u, v).expect("mate is joined by an edge"));
        }
    }
    out.sort_unstable();
    Some(Matching {
        total_weight: wg.weight_of(&out),
        edges: out,
    })
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    min_weight_perfect_matching(&WeightedGraph::unweighted(g.clone())).is_some()
}

/// Exhaustive search over all perfect matchings; ties go to the
/// lexicographically smallest sorted edge-id list.
///
/// Only for small inputs: refuses graphs with more than 12 vertices and more
/// than 24 edges.
pub fn brute_min_weight_pm(wg: &WeightedGraph) -> Result<Option<Matching>> {
    let g = &wg.graph;
    if g.n() > 12 && g.m() > 24 {
        return Err(Error::Budget(format!(
            "exhaustive matching limited to n <= 12 or m <= 24 (n = {}, m = {})",
            g.n(),
            g.m()
        )));
    }
    if g.n() % 2 == 1 {
        return Ok(None);
    }
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut used = vec![false; g.n()];
    let mut chosen = Vec::new();
    brute_rec(wg, &mut used, &mut chosen, 0, &mut best);
    Ok(best.map(|(w, mut edges)| {
        edges.sort_unstable();
        Matching {
            edges,
            total_weight: w,
        }
    }))
}

fn brute_rec(
    wg: &WeightedGraph,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    weight: u64,
    best: &mut Option<(u64, Vec<usize>)>,
) {
    if let Some((bw, _)) = best {
        if weight > *bw {
            return;
        }
    }
    let Some(u) = used.iter().position(|&x| !x) else {
        let mut cand = chosen.clone();
        cand.sort_unstable();
        let better = match best {
            None => true,
            Some((bw, be)) => weight < *bw || (weight == *bw && cand < *be),
        };
        if better {
            *best = Some((weight, cand));
        }
        return;
    };
    used[u] = true;
    let g = &wg.graph;
    for (&w, &e) in g.neighbors(u).iter().zip(g.incident_edges(u)) {
        if used[w] {
            continue;
        }
        used[w] = true;
        chosen.push(e);
        brute_rec(wg, used, chosen, weight + wg.weights[e] as u64, best);
        chosen.pop();
        used[w] = false;
    }
    used[u] = false;
}

/// Parses the weighted edge list: `n m`, then `m` lines `u v w`.
pub fn parse_weighted(text: &str) -> Result<WeightedGraph> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, t))
    });
    let num = |tok: Option<&str>, line: usize, what: &str| -> Result<u64> {
        let tok = tok.ok_or_else(|| err(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| err(line, format!("invalid {what} '{tok}'")))
    };
    let (hl, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header line".into()))?;
    let mut toks = header.split_whitespace();
    let n = num(toks.next(), hl, "vertex count")? as usize;
    let m = num(toks.next(), hl, "edge count")? as usize;
    if toks.next().is_some() {
        return Err(err(hl, "trailing tokens in header".into()));
    }
    let mut g = Graph::empty(n);
    let mut seen = HashSet::new();
    let mut weights = Vec::with_capacity(m);
    for (ln, line) in lines {
        if weights.len() == m {
            return Err(err(ln, format!("more than the declared {m} edges")));
        }
        let mut toks = line.split_whitespace();
        let u = num(toks.next(), ln, "endpoint")? as usize;
        let v = num(toks.next(), ln, "endpoint")? as usize;
        let w = num(toks.next(), ln, "weight")?;
        if toks.next().is_some() {
            return Err(err(ln, "trailing tokens".into()));
        }
        let w = Weight::try_from(w).map_err(|_| err(ln, format!("weight {w} too large")))?;
        g.push_edge(u, v, &mut seen).map_err(|e| Error::AtLine {
            line: ln,
            source: Box::new(e),
        })?;
        weights.push(w);
    }
    if weights.len() < m {
        return Err(err(
            text.lines().count(),
            format!("expected {m} edges, found {}", weights.len()),
        ));
    }
    WeightedGraph::new(g, weights)
}

pub fn write_weighted(wg: &WeightedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", wg.graph.n(), wg.graph.m()).unwrap();
    for (&(u, v), w) in wg.graph.edges().iter().zip(&wg.weights) {
        writeln!(out, "{u} {v} {w}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn wg(n: usize, edges: &[(usize, usize, Weight)]) -> WeightedGraph {
        let g = Graph::from_edges(n, edges.iter().map(|&(u, v, _)| (u, v))).unwrap();
        WeightedGraph::new(g, edges.iter().map(|e| e.2).collect()).unwrap()
    }

    #[test]
    fn single_edge() {
        let m = min_weight_perfect_matching(&wg(2, &[(0, 1, 5)])).unwrap();
        assert_eq!(m.edges, vec![0]);
        assert_eq!(m.total_weight, 5);
        assert_eq!(
            brute_min_weight_pm(&wg(2, &[(0, 1, 5)]))
                .unwrap()
                .unwrap()
                .total_weight,
            5
        );
    }

    #[test]
    fn weighted_four_cycle() {
        // the two perfect matchings weigh 1+3 and 2+4
        let g = wg(4, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4)]);
        let m = min_weight_perfect_matching(&g).unwrap();
        assert_eq!(m.total_weight, 4);
        assert_eq!(m.edges, vec![0, 2]);
    }

    #[test]
    fn odd_order_has_none() {
        let p3 = wg(3, &[(0, 1, 1), (1, 2, 1)]);
        assert_eq!(min_weight_perfect_matching(&p3), None);
        let c5 = WeightedGraph::unweighted(generate(GraphKind::Cycle(5)).unwrap());
        assert_eq!(brute_min_weight_pm(&c5).unwrap(), None);
    }

    #[test]
    fn even_order_without_perfect_matching() {
        let claw = generate(GraphKind::Star(4)).unwrap();
        assert!(!has_perfect_matching(&claw));
        assert!(has_perfect_matching(
            &generate(GraphKind::Complete(4)).unwrap()
        ));
        assert!(has_perfect_matching(
            &generate(GraphKind::Cycle(6)).unwrap()
        ));
        let two_isolated = Graph::empty(2);
        assert!(!has_perfect_matching(&two_isolated));
    }

    #[test]
    fn complete_four_unit_weights() {
        let k4 = generate(GraphKind::Complete(4)).unwrap();
        let w = WeightedGraph::new(k4, vec![1; 6]).unwrap();
        assert_eq!(brute_min_weight_pm(&w).unwrap().unwrap().total_weight, 2);
        assert_eq!(min_weight_perfect_matching(&w).unwrap().total_weight, 2);
    }

    #[test]
    fn brute_budget() {
        let k13 = WeightedGraph::unweighted(generate(GraphKind::Complete(13)).unwrap());
        assert!(matches!(brute_min_weight_pm(&k13), Err(Error::Budget(_))));
    }

    #[test]
    fn weighted_format_round_trip() {
        let text = "# c4\n4 4\n0 1 1\n1 2 2\n2 3 3\n3 0 4\n";
        let g = parse_weighted(text).unwrap();
        assert_eq!(g.weights, vec![1, 2, 3, 4]);
        assert_eq!(parse_weighted(&write_weighted(&g)).unwrap(), g);
        assert!(parse_weighted("2 1\n0 1").is_err());
        assert!(parse_weighted("2 1\n0 1 -3").is_err());
    }

    fn random_weighted(seed: u64) -> WeightedGraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.2..0.9);
        let g = generate(GraphKind::RandomGraph { n, p, seed }).unwrap();
        let weights = (0..g.m()).map(|_| rng.gen_range(0..10)).collect();
        WeightedGraph::new(g, weights).unwrap()
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        for seed in 0..300 {
            let w = random_weighted(seed);
            let fast = min_weight_perfect_matching(&w);
            let slow = brute_min_weight_pm(&w).unwrap();
            assert_eq!(
                fast.as_ref().map(|m| m.total_weight),
                slow.as_ref().map(|m| m.total_weight),
                "seed {seed}"
            );
            if let Some(m) = fast {
                assert!(w.is_perfect_matching(&m.edges));
                assert_eq!(m.total_weight, w.weight_of(&m.edges));
            }
        }
    }

    proptest! {
        #[test]
        fn weight_invariant_under_relabeling(seed in 0u64..10_000, shift in 0usize..10) {
            let w = random_weighted(seed);
            let n = w.graph.n();
            let perm: Vec<usize> = (0..n).map(|v| (v + shift) % n).collect();
            let relabeled = WeightedGraph::new(w.graph.relabel(&perm).unwrap(), w.weights.clone()).unwrap();
            prop_assert_eq!(
                min_weight_perfect_matching(&w).map(|m| m.total_weight),
                min_weight_perfect_matching(&relabeled).map(|m| m.total_weight)
            );
        }

        #[test]
        fn bipartite_matches_assignment_brute_force(
            k in 1usize..6,
            cost in proptest::collection::vec(0u32..10, 36),
        ) {
            // K_{k,k} with cost[i][j] on edge (i, k + j)
            let mut edges = Vec::new();
            let mut weights = Vec::new();
            for i in 0..k {
                for j in 0..k {
                    edges.push((i, k + j));
                    weights.push(cost[i * 6 + j]);
                }
            }
            let w = WeightedGraph::new(Graph::from_edges(2 * k, edges).unwrap(), weights).unwrap();
            // assignment oracle over all permutations
            fn perms(k: usize, used: &mut Vec<bool>, row: usize, cost: &[u32], acc: u64, best: &mut u64) {
                if row == k {
                    *best = (*best).min(acc);
                    return;
                }
                for j in 0..k {
                    if !used[j] {
                        used[j] = true;
                        perms(k, used, row + 1, cost, acc + cost[row * 6 + j] as u64, best);
                        used[j] = false;
                    }
                }
            }
            let mut best = u64::MAX;
            perms(k, &mut vec![false; k], 0, &cost, 0, &mut best);
            prop_assert_eq!(min_weight_perfect_matching(&w).unwrap().total_weight, best);
        }
    }
}
