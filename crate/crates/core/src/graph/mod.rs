//! Undirected simple graphs and the structural routines shared by the solvers.
//!
//! Vertices are dense ids `0..n`. Edges get stable ids `0..m` in the order
//! they were supplied, stored with `u < v`. The neighbour list of every
//! vertex keeps the arrival order of its edges, and several constructions
//! (the matching gadget in particular) index neighbours by that position,
//! so nothing in this crate ever reorders it.

mod generate;
mod io;

pub use generate::{generate, random_connected, GraphKind};
pub use io::{parse_graph, write_graph, Format};

use std::collections::{HashSet, VecDeque};

use crate::bits::{EdgeSet, VertexSet};
use crate::error::{Error, Result};

/// Default cap on the number of cycles `enumerate_cycles` will materialise.
pub const DEFAULT_CYCLE_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    // adj_edges[u][k] is the id of the edge joining u and adj[u][k]
    adj_edges: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// A 2-colouring of every connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    /// Per component `(U, V)`, each sorted; the BFS root (smallest vertex of
    /// the component) is always in `U`.
    pub parts: Vec<(Vec<usize>, Vec<usize>)>,
    /// `true` for vertices on the `V` side.
    pub side: Vec<bool>,
}

/// Result of `Graph::induced_subgraph`: the subgraph plus maps back to the host.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// new vertex id -> host vertex id
    pub vertex_map: Vec<usize>,
    /// new edge id -> host edge id
    pub edge_map: Vec<usize>,
}

/// Rooted BFS tree: vertices in visit order plus parent links.
pub(crate) struct BfsTree {
    pub order: Vec<usize>,
    pub parent_edge: Vec<Option<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            adj_edges: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph, assigning edge ids in iteration order.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        let mut seen = HashSet::new();
        for (u, v) in edges {
            g.push_edge(u, v, &mut seen)?;
        }
        Ok(g)
    }

    pub(crate) fn push_edge(
        &mut self,
        u: usize,
        v: usize,
        seen: &mut HashSet<(usize, usize)>,
    ) -> Result<usize> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { v: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { v: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::DuplicateEdge { u: key.0, v: key.1 });
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.adj[u].push(v);
        self.adj_edges[u].push(id);
        self.adj[v].push(u);
        self.adj_edges[v].push(id);
        Ok(id)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edge ids incident to `v`, parallel to `neighbors(v)`.
    #[inline]
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.adj_edges[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Position of `v` in the neighbour list of `u`.
    pub fn neighbor_position(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u].iter().position(|&x| x == v)
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a]
            .iter()
            .position(|&x| x == b)
            .map(|k| self.adj_edges[a][k])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_set(&self, ids: impl IntoIterator<Item = usize>) -> EdgeSet {
        EdgeSet::from_indices(self.m(), ids)
    }

    pub fn vertex_set(&self, ids: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_indices(self.n, ids)
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    pub(crate) fn bfs_tree(&self, root: usize) -> BfsTree {
        let mut parent_edge = vec![None; self.n];
        let mut seen = vec![false; self.n];
        let mut order = vec![root];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for (&w, &e) in self.adj[u].iter().zip(&self.adj_edges[u]) {
                if !seen[w] {
                    seen[w] = true;
                    parent_edge[w] = Some(e);
                    order.push(w);
                }
            }
        }
        BfsTree { order, parent_edge }
    }

    /// BFS 2-colouring of each component, or `None` if some component has an
    /// odd cycle.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut parts = Vec::new();
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let (mut u_side, mut v_side) = (vec![s], Vec::new());
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let cx = color[x].unwrap();
                for &y in &self.adj[x] {
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            if cx {
                                u_side.push(y);
                            } else {
                                v_side.push(y);
                            }
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
            u_side.sort_unstable();
            v_side.sort_unstable();
            parts.push((u_side, v_side));
        }
        Some(Bipartition {
            parts,
            side: color.into_iter().map(|c| c.unwrap_or(false)).collect(),
        })
    }

    /// Edges of a BFS spanning tree rooted at vertex 0.
    pub fn spanning_tree(&self) -> Result<EdgeSet> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let mut s = EdgeSet::zeros(self.m());
        if self.n > 0 {
            for e in self.bfs_tree(0).parent_edge.into_iter().flatten() {
                s.set(e, true);
            }
        }
        Ok(s)
    }

    /// The line graph, whose vertex `i` stands for edge `i` of `self`.
    ///
    /// The returned map is the identity by construction, kept explicit so
    /// callers never depend on that.
    pub fn line_graph(&self) -> (Graph, Vec<usize>) {
        let mut lg = Graph::empty(self.m());
        let mut seen = HashSet::new();
        for v in 0..self.n {
            let inc = &self.adj_edges[v];
            for i in 0..inc.len() {
                for j in i + 1..inc.len() {
                    lg.push_edge(inc[i], inc[j], &mut seen)
                        .expect("two edges of a simple graph share at most one endpoint");
                }
            }
        }
        (lg, (0..self.m()).collect())
    }

    /// Some induced claw `(centre, [a, b, c])`, if one exists.
    pub fn find_claw(&self) -> Option<(usize, [usize; 3])> {
        for v in 0..self.n {
            let nb = &self.adj[v];
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if self.has_edge(nb[i], nb[j]) {
                        continue;
                    }
                    for k in j + 1..nb.len() {
                        if !self.has_edge(nb[i], nb[k]) && !self.has_edge(nb[j], nb[k]) {
                            return Some((v, [nb[i], nb[j], nb[k]]));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// All simple cycles with at most `max_len` edges, each as an edge set.
    ///
    /// Fails with `Error::Budget` once more than `cap` cycles are found.
    pub fn enumerate_cycles(&self, max_len: usize, cap: usize) -> Result<Vec<EdgeSet>> {
        let mut out = Vec::new();
        let mut on_path = vec![false; self.n];
        let mut path_v = Vec::new();
        let mut path_e = Vec::new();
        for s in 0..self.n {
            on_path[s] = true;
            path_v.push(s);
            self.cycles_from(
                s,
                s,
                max_len,
                cap,
                &mut on_path,
                &mut path_v,
                &mut path_e,
                &mut out,
            )?;
            path_v.pop();
            on_path[s] = false;
        }
        Ok(out)
    }

    // Cycles are rooted at their smallest vertex `s` and each is reported once
    // by requiring the second vertex to be smaller than the last one.
    #[allow(clippy::too_many_arguments)]
    fn cycles_from(
        &self,
        s: usize,
        u: usize,
        max_len: usize,
        cap: usize,
        on_path: &mut [bool],
        path_v: &mut Vec<usize>,
        path_e: &mut Vec<usize>,
        out: &mut Vec<EdgeSet>,
    ) -> Result<()> {
        for (&w, &e) in self.adj[u].iter().zip(&self.adj_edges[u]) {
            if w == s {
                if path_e.len() >= 2 && path_v[1] < u && path_e.len() < max_len {
                    if out.len() == cap {
                        return Err(Error::Budget(format!("more than {cap} cycles")));
                    }
                    out.push(self.edge_set(path_e.iter().copied().chain([e])));
                }
                continue;
            }
            if w < s || on_path[w] || path_e.len() + 1 >= max_len {
                continue;
            }
            on_path[w] = true;
            path_v.push(w);
            path_e.push(e);
            self.cycles_from(s, w, max_len, cap, on_path, path_v, path_e, out)?;
            path_e.pop();
            path_v.pop();
            on_path[w] = false;
        }
        Ok(())
    }

    /// Degree of every vertex in the spanning subgraph with edge set `s`.
    pub fn degrees_in(&self, s: &EdgeSet) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in s.iter_ones() {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Components of the spanning subgraph `(V, s)`, as sorted vertex lists.
    pub fn components_of(&self, s: &EdgeSet) -> Vec<Vec<usize>> {
        let sub = Graph::from_edges(self.n, s.iter_ones().map(|e| self.edges[e]))
            .expect("edge subset of a simple graph is simple");
        sub.components()
    }

    /// Subgraph induced by `vertices`; new ids follow the order given.
    /// Edges keep their relative host order, so neighbour order is preserved.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Subgraph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edge_map = Vec::new();
        let mut g = Graph::empty(vertices.len());
        let mut seen = HashSet::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                g.push_edge(local[u], local[v], &mut seen)
                    .expect("induced subgraph of a simple graph is simple");
                edge_map.push(e);
            }
        }
        Subgraph {
            graph: g,
            vertex_map: vertices.to_vec(),
            edge_map,
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let k = self.n;
        Graph::from_edges(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + k, v + k))),
        )
        .expect("disjoint union of simple graphs is simple")
    }

    /// Renames vertex `v` to `perm[v]`, keeping edge ids.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert_eq!(
            Graph::from_edges(2, [(1, 1)]).unwrap_err(),
            Error::SelfLoop { v: 1 }
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap_err(),
            Error::DuplicateEdge { u: 0, v: 1 }
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { v: 2, n: 2 })
        ));
    }

    #[test]
    fn neighbour_order_is_arrival_order() {
        let g = Graph::from_edges(4, [(2, 0), (0, 3), (1, 0)]).unwrap();
        assert_eq!(g.neighbors(0), &[2, 3, 1]);
        assert_eq!(g.incident_edges(0), &[0, 1, 2]);
        assert_eq!(g.edge(0), (0, 2));
        assert_eq!(g.neighbor_position(0, 1), Some(2));
    }

    #[test]
    fn components_examples() {
        assert_eq!(p3().components(), vec![vec![0, 1, 2]]);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.components().len(), 2);
        assert_eq!(
            Graph::empty(3).components(),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn bipartition_examples() {
        let b = cycle(4).bipartition().unwrap();
        assert_eq!(b.parts, vec![(vec![0, 2], vec![1, 3])]);
        assert!(cycle(3).bipartition().is_none());
        let b = p3().bipartition().unwrap();
        assert_eq!(b.parts, vec![(vec![0, 2], vec![1])]);
    }

    #[test]
    fn spanning_tree_examples() {
        let t = star(5);
        assert_eq!(t.spanning_tree().unwrap().count_ones(), 4);

        let c4 = cycle(4);
        let s = c4.spanning_tree().unwrap();
        assert_eq!(s.count_ones(), 3);
        // acyclic + spanning: 3 edges on 4 vertices forming one component
        assert_eq!(c4.components_of(&s).len(), 1);
        let deg = c4.degrees_in(&s);
        let mut sorted = deg.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 1, 2, 2], "BFS tree of C4 is a path");

        let k4 = complete(4);
        let s = k4.spanning_tree().unwrap();
        assert_eq!(k4.degrees_in(&s), vec![3, 1, 1, 1]);

        assert_eq!(
            Graph::from_edges(4, [(0, 1), (2, 3)])
                .unwrap()
                .spanning_tree()
                .unwrap_err(),
            Error::NotConnected
        );
    }

    #[test]
    fn line_graph_examples() {
        let (l, map) = p3().line_graph();
        assert_eq!((l.n(), l.m()), (2, 1));
        assert_eq!(map, vec![0, 1]);

        let (l, _) = star(4).line_graph();
        assert_eq!((l.n(), l.m()), (3, 3));
        assert!(l.degrees_in(&EdgeSet::ones(3)).iter().all(|&d| d == 2));

        let (l, _) = cycle(4).line_graph();
        assert_eq!((l.n(), l.m()), (4, 4));
        assert!((0..4).all(|v| l.degree(v) == 2));
        assert!(l.bipartition().is_some(), "L(C4) is an even cycle");
    }

    #[test]
    fn claw_examples() {
        assert!(!star(4).is_claw_free());
        assert!(cycle(6).is_claw_free());
        assert!(star(5).line_graph().0.is_claw_free());
        assert!(complete(5).is_claw_free());
    }

    #[test]
    fn cycle_enumeration_examples() {
        assert!(star(6)
            .enumerate_cycles(usize::MAX, 100)
            .unwrap()
            .is_empty());
        assert_eq!(cycle(4).enumerate_cycles(usize::MAX, 100).unwrap().len(), 1);
        let k4 = complete(4).enumerate_cycles(usize::MAX, 100).unwrap();
        assert_eq!(k4.len(), 7);
        assert_eq!(k4.iter().filter(|c| c.count_ones() == 3).count(), 4);
        assert_eq!(complete(4).enumerate_cycles(3, 100).unwrap().len(), 4);
        assert!(matches!(
            complete(5).enumerate_cycles(usize::MAX, 10),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn degrees_in_examples() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(k2.degrees_in(&EdgeSet::ones(1)), vec![1, 1]);
        assert_eq!(cycle(4).degrees_in(&EdgeSet::zeros(4)), vec![0; 4]);
        assert_eq!(star(4).degrees_in(&EdgeSet::ones(3)), vec![3, 1, 1, 1]);
    }

    #[test]
    fn induced_subgraph_keeps_order() {
        let g = Graph::from_edges(5, [(4, 1), (0, 1), (1, 3), (3, 4)]).unwrap();
        let sub = g.induced_subgraph(&[1, 3, 4]);
        assert_eq!(sub.edge_map, vec![0, 2, 3]);
        assert_eq!(sub.graph.neighbors(0), &[2, 1]);
    }
}
