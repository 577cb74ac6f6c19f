//! Brute-force reference answers for testing the solvers.
//!
//! Everything here works from the problem definitions alone (counting
//! parities over explicit subsets, or enumerating a GF(2) solution space) and
//! shares no code path with the solver modules. Results are sorted so they
//! can be compared with `==`.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{BitVec, EdgeSet, VertexSet};
use crate::error::{Error, Result};
use crate::gf2::{incidence_matrix, solve, DEFAULT_NULLITY_CAP};
use crate::graph::{generate, random_connected, Graph, GraphKind};

/// Largest edge count enumerated subset by subset.
pub const SUBSET_EDGE_LIMIT: usize = 20;
/// Largest vertex or edge count for the other exhaustive enumerators.
pub const SUBSET_LIMIT: usize = 16;
/// Largest edge count for which existence is decided by subset search.
pub const EXISTENCE_SUBSET_LIMIT: usize = 12;
/// Largest order handled by the exhaustive connected-graph generator.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 8;

fn budget(what: &str, size: usize, limit: usize) -> Error {
    Error::Budget(format!("{what} = {size} exceeds the oracle limit {limit}"))
}

fn edge_masks_per_vertex(g: &Graph) -> Vec<u64> {
    let mut at = vec![0u64; g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        at[u] |= 1 << e;
        at[v] |= 1 << e;
    }
    at
}

/// All Edge-Vertex solutions by checking every edge subset (`m <= 20`).
pub fn brute_solutions_ev_subsets(g: &Graph) -> Result<Vec<EdgeSet>> {
    if g.m() > SUBSET_EDGE_LIMIT {
        return Err(budget("m", g.m(), SUBSET_EDGE_LIMIT));
    }
    let at = edge_masks_per_vertex(g);
    let mut out: Vec<EdgeSet> = (0u64..1 << g.m())
        .filter(|x| at.iter().all(|a| (a & x).count_ones() % 2 == 1))
        .map(|x| BitVec::from_mask(g.m(), x))
        .collect();
    out.sort();
    Ok(out)
}

/// All Edge-Vertex solutions as one particular solution of the incidence
/// system plus every element of the cycle space (dimension `<= 20`).
pub fn brute_solutions_ev_gf2(g: &Graph) -> Result<Vec<EdgeSet>> {
    let sol = solve(&incidence_matrix(g), &BitVec::ones(g.n()))?;
    if !sol.consistent {
        return Ok(Vec::new());
    }
    if sol.nullity() > DEFAULT_NULLITY_CAP {
        return Err(budget(
            "cycle space dimension",
            sol.nullity(),
            DEFAULT_NULLITY_CAP,
        ));
    }
    let mut out = Vec::with_capacity(1 << sol.nullity());
    sol.for_each_solution(DEFAULT_NULLITY_CAP, |x| out.push(x.clone()));
    out.sort();
    Ok(out)
}

/// Subset mode for `m <= 20`, otherwise GF(2) mode.
pub fn brute_solutions_ev(g: &Graph) -> Result<Vec<EdgeSet>> {
    if g.m() <= SUBSET_EDGE_LIMIT {
        brute_solutions_ev_subsets(g)
    } else {
        brute_solutions_ev_gf2(g)
    }
}

/// Whether any Edge-Vertex solution exists: subset search for `m <= 12`,
/// consistency of the incidence system otherwise.
pub fn ev_solution_exists(g: &Graph) -> bool {
    if g.m() <= EXISTENCE_SUBSET_LIMIT {
        let at = edge_masks_per_vertex(g);
        (0u64..1 << g.m()).any(|x| at.iter().all(|a| (a & x).count_ones() % 2 == 1))
    } else {
        solve(&incidence_matrix(g), &BitVec::ones(g.n()))
            .map(|s| s.consistent)
            .unwrap_or(false)
    }
}

/// Minimum Edge-Vertex solution size computed as a minimum `V`-join: pair up
/// all vertices minimising the total shortest-path length (`n <= 20`).
/// `None` when no solution exists.
pub fn min_ev_size_tjoin(g: &Graph) -> Result<Option<usize>> {
    const LIMIT: usize = 20;
    let n = g.n();
    if n > LIMIT {
        return Err(budget("n", n, LIMIT));
    }
    const INF: u32 = u32::MAX / 2;
    let mut dist = vec![vec![INF; n]; n];
    for (s, row) in dist.iter_mut().enumerate() {
        row[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] == INF {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    // best[mask]: cheapest pairing of the vertices in mask
    let full = (1usize << n) - 1;
    let mut best = vec![INF; 1 << n];
    best[0] = 0;
    for mask in 1..=full {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut r = rest;
        let mut b = INF;
        while r != 0 {
            let j = r.trailing_zeros() as usize;
            r &= r - 1;
            let c = dist[i][j].saturating_add(best[rest & !(1 << j)]);
            b = b.min(c);
        }
        best[mask] = b.min(INF);
    }
    Ok((best[full] < INF).then_some(best[full] as usize))
}

/// All Vertex-Edge solutions (`n <= 16`).
pub fn brute_solutions_ve(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > SUBSET_LIMIT {
        return Err(budget("n", g.n(), SUBSET_LIMIT));
    }
    let mut out: Vec<VertexSet> = (0u64..1 << g.n())
        .filter(|x| g.edges().iter().all(|&(u, v)| (x >> u ^ x >> v) & 1 == 1))
        .map(|x| BitVec::from_mask(g.n(), x))
        .collect();
    out.sort();
    Ok(out)
}

/// All Vertex-Vertex solutions (`n <= 16`).
pub fn brute_solutions_vv(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > SUBSET_LIMIT {
        return Err(budget("n", g.n(), SUBSET_LIMIT));
    }
    let mut closed = vec![0u64; g.n()];
    for (v, c) in closed.iter_mut().enumerate() {
        *c = 1 << v;
    }
    for &(u, v) in g.edges() {
        closed[u] |= 1 << v;
        closed[v] |= 1 << u;
    }
    let mut out: Vec<VertexSet> = (0u64..1 << g.n())
        .filter(|x| closed.iter().all(|c| (c & x).count_ones() % 2 == 1))
        .map(|x| BitVec::from_mask(g.n(), x))
        .collect();
    out.sort();
    Ok(out)
}

/// All Edge-Edge solutions (`m <= 16`): edges in `F` see an even number of
/// adjacent `F`-edges, edges outside see an odd number.
pub fn brute_solutions_ee(g: &Graph) -> Result<Vec<EdgeSet>> {
    if g.m() > SUBSET_LIMIT {
        return Err(budget("m", g.m(), SUBSET_LIMIT));
    }
    let edges = g.edges();
    let adjacent: Vec<u64> = edges
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| {
            edges
                .iter()
                .enumerate()
                .filter(|&(f, &(c, d))| f != e && (a == c || a == d || b == c || b == d))
                .fold(0u64, |acc, (f, _)| acc | 1 << f)
        })
        .collect();
    let mut out: Vec<EdgeSet> = (0u64..1 << g.m())
        .filter(|x| {
            adjacent.iter().enumerate().all(|(e, adj)| {
                let inside = x >> e & 1 == 1;
                ((adj & x).count_ones() % 2 == 0) == inside
            })
        })
        .map(|x| BitVec::from_mask(g.m(), x))
        .collect();
    out.sort();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Exhaustive small graphs

// Colour refinement; returns vertices grouped into cells, in an
// isomorphism-invariant cell order.
fn refined_cells(adj: &[u16]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut color = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sig: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n)
                    .filter(|&w| adj[v] >> w & 1 == 1)
                    .map(|w| color[w])
                    .collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sig.clone();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            color[v] = distinct.binary_search(&sig[v]).unwrap();
        }
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Canonical code of a graph on at most 8 vertices: the largest upper-triangle
/// bit pattern over all labelings compatible with the refined partition.
fn canonical_code(adj: &[u16]) -> u64 {
    let cells = refined_cells(adj);
    let perms: Vec<Vec<Vec<usize>>> = cells.iter().map(|c| permutations(c)).collect();
    let mut choice = vec![0usize; cells.len()];
    let mut best = 0u64;
    let mut order = Vec::with_capacity(adj.len());
    loop {
        order.clear();
        for (c, &k) in choice.iter().enumerate() {
            order.extend_from_slice(&perms[c][k]);
        }
        let mut code = 0u64;
        let mut bit = 63;
        for (i, &a) in order.iter().enumerate() {
            for &b in &order[i + 1..] {
                code |= u64::from(adj[a] >> b & 1) << bit;
                bit -= 1;
            }
        }
        best = best.max(code);
        // odometer over the per-cell permutations
        let mut c = 0;
        loop {
            if c == choice.len() {
                return best;
            }
            choice[c] += 1;
            if choice[c] < perms[c].len() {
                break;
            }
            choice[c] = 0;
            c += 1;
        }
    }
}

fn decode(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 63;
    for i in 0..n {
        for j in i + 1..n {
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
            bit -= 1;
        }
    }
    Graph::from_edges(n, edges).expect("decoded graph is simple")
}

/// Connected graphs of order `1..=max_n` up to isomorphism, one list per
/// order (index 0 is order 1). Orders beyond 8 are refused.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Vec<Graph>>> {
    if max_n > EXHAUSTIVE_ORDER_LIMIT {
        return Err(budget("order", max_n, EXHAUSTIVE_ORDER_LIMIT));
    }
    let mut levels: Vec<Vec<Vec<u16>>> = Vec::new();
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut found: HashMap<u64, Vec<u16>> = HashMap::new();
        if n == 1 {
            found.insert(0, vec![0]);
        } else {
            // every connected graph has a vertex whose removal keeps it
            // connected, so extending each smaller graph by one vertex with
            // every non-empty neighbourhood reaches all of them
            for small in &levels[n - 2] {
                for mask in 1u16..(1 << (n - 1)) {
                    let mut adj = small.clone();
                    adj.push(mask);
                    for (v, a) in adj.iter_mut().enumerate().take(n - 1) {
                        if mask >> v & 1 == 1 {
                            *a |= 1 << (n - 1);
                        }
                    }
                    let code = canonical_code(&adj);
                    found.entry(code).or_insert(adj);
                }
            }
        }
        let mut codes: Vec<u64> = found.keys().copied().collect();
        codes.sort_unstable();
        out.push(codes.iter().map(|&c| decode(n, c)).collect());
        levels.push(codes.iter().map(|c| found[c].clone()).collect());
    }
    Ok(out)
}

/// Connected graphs of order exactly `n` (`1 <= n <= 8`) up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(connected_graphs_up_to(n)?.pop().unwrap())
}

/// Deterministic test corpus of graphs with at most `limit_n` vertices:
/// every connected graph up to order `min(limit_n, 8)`, plus seeded random
/// trees, sparse and dense connected graphs, bipartite graphs, line graphs,
/// disjoint unions and graphs with isolated vertices.
pub fn corpus(limit_n: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut out: Vec<Graph> = connected_graphs_up_to(limit_n.min(EXHAUSTIVE_ORDER_LIMIT))?
        .into_iter()
        .flatten()
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in EXHAUSTIVE_ORDER_LIMIT + 1..=limit_n {
        for _ in 0..8 {
            out.push(generate(GraphKind::RandomTree { n, seed: rng.gen() })?);
            let extra = rng.gen_range(1..=n);
            out.push(random_connected(n, extra, rng.gen())?);
            let p = rng.gen_range(0.1..0.8);
            out.push(generate(GraphKind::RandomGraph {
                n,
                p,
                seed: rng.gen(),
            })?);
            let a = rng.gen_range(1..n);
            out.push(random_bipartite(
                a,
                n - a,
                rng.gen_range(0.3..0.9),
                rng.gen(),
            ));
        }
    }
    for _ in 0..24 {
        let n = rng.gen_range(2..=limit_n.max(2));
        let base = random_connected(rng.gen_range(2..=6), rng.gen_range(0..4), rng.gen())?;
        let lg = base.line_graph().0;
        if lg.n() >= 1 && lg.n() <= limit_n {
            out.push(lg);
        }
        if n >= 3 && n <= limit_n {
            let a = rng.gen_range(1..n);
            let left = random_connected(a, rng.gen_range(0..a), rng.gen())?;
            let right = random_connected(n - a, rng.gen_range(0..n - a), rng.gen())?;
            out.push(left.disjoint_union(&right));
            let k = rng.gen_range(1..=2).min(n - 1);
            let core = random_connected(n - k, rng.gen_range(0..n - k), rng.gen())?;
            out.push(core.disjoint_union(&Graph::empty(k)));
        }
    }
    out.retain(|g| g.n() <= limit_n);
    Ok(out)
}

fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (0..a)
        .flat_map(|i| (a..a + b).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(a + b, edges).expect("bipartite pairs are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(kind: GraphKind) -> Graph {
        generate(kind).unwrap()
    }

    #[test]
    fn ev_oracle_examples() {
        let p4 = gen(GraphKind::Path(4));
        assert_eq!(brute_solutions_ev(&p4).unwrap(), vec![p4.edge_set([0, 2])]);
        let claw = gen(GraphKind::Star(4));
        assert_eq!(brute_solutions_ev(&claw).unwrap(), vec![EdgeSet::ones(3)]);
        let c4 = gen(GraphKind::Cycle(4));
        let sols = brute_solutions_ev(&c4).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(sols.contains(&c4.edge_set([0, 2])));
        assert!(sols.contains(&c4.edge_set([1, 3])));
    }

    #[test]
    fn ev_modes_agree() {
        for seed in 0..40 {
            let g = random_connected(4 + (seed as usize % 6), seed as usize % 9, seed).unwrap();
            let a = brute_solutions_ev_subsets(&g).unwrap();
            let b = brute_solutions_ev_gf2(&g).unwrap();
            assert_eq!(a, b, "seed {seed}");
            assert_eq!(ev_solution_exists(&g), !a.is_empty());
        }
    }

    #[test]
    fn tjoin_oracle_matches_enumeration() {
        for seed in 0..40 {
            let g = random_connected(2 + 2 * (seed as usize % 4), seed as usize % 7, seed).unwrap();
            let brute = brute_solutions_ev(&g)
                .unwrap()
                .iter()
                .map(|s| s.count_ones())
                .min();
            assert_eq!(min_ev_size_tjoin(&g).unwrap(), brute, "seed {seed}");
        }
        assert_eq!(min_ev_size_tjoin(&gen(GraphKind::Path(3))).unwrap(), None);
        assert_eq!(min_ev_size_tjoin(&Graph::empty(2)).unwrap(), None);
    }

    #[test]
    fn other_oracle_examples() {
        let p3 = gen(GraphKind::Path(3));
        assert_eq!(
            brute_solutions_ve(&p3).unwrap(),
            vec![p3.vertex_set([1]), p3.vertex_set([0, 2])]
        );
        assert_eq!(brute_solutions_vv(&p3).unwrap(), vec![p3.vertex_set([1])]);
        let claw = gen(GraphKind::Star(4));
        let ee = brute_solutions_ee(&claw).unwrap();
        for e in 0..3 {
            assert!(ee.contains(&claw.edge_set([e])));
        }
    }

    #[test]
    fn budgets() {
        let k7 = gen(GraphKind::Complete(7));
        assert!(brute_solutions_ev_subsets(&k7).is_err());
        assert!(brute_solutions_ve(&Graph::empty(17)).is_err());
        assert!(connected_graphs(9).is_err());
    }

    #[test]
    fn connected_graph_counts() {
        let levels = connected_graphs_up_to(7).unwrap();
        let counts: Vec<usize> = levels.iter().map(|l| l.len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        assert_eq!(connected_graphs(2).unwrap().len(), 1);
        assert_eq!(connected_graphs(4).unwrap().len(), 6);
        for level in &levels {
            assert!(level.iter().all(|g| g.is_connected()));
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = corpus(10, 5).unwrap();
        let b = corpus(10, 5).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.n() <= 10));
        assert!(a.iter().any(|g| !g.is_connected()));
        assert!(a
            .iter()
            .any(|g| (0..g.n()).any(|v| g.degree(v) == 0) && g.n() > 1));
    }
}
