use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
    /// `K_{1,n-1}` with centre 0.
    Star(usize),
    Complete(usize),
    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    CompleteBipartite(usize, usize),
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// Erdős–Rényi `G(n, p)`.
    RandomGraph {
        n: usize,
        p: f64,
        seed: u64,
    },
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.to_string()))
    }
}

pub fn generate(kind: GraphKind) -> Result<Graph> {
    use GraphKind::*;
    let g = match kind {
        Path(n) => {
            need(n >= 1, "path needs n >= 1")?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Cycle(n) => {
            need(n >= 3, "cycle needs n >= 3")?;
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Star(n) => {
            need(n >= 1, "star needs n >= 1")?;
            Graph::from_edges(n, (1..n).map(|i| (0, i)))
        }
        Complete(n) => {
            need(n >= 1, "complete graph needs n >= 1")?;
            Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        CompleteBipartite(a, b) => {
            need(a + b >= 1, "complete bipartite graph needs a + b >= 1")?;
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        RandomTree { n, seed } => {
            need(n >= 1, "tree needs n >= 1")?;
            Ok(random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed)))
        }
        RandomGraph { n, p, seed } => {
            need(n >= 1, "random graph needs n >= 1")?;
            need(
                (0.0..=1.0).contains(&p),
                "edge probability must lie in [0, 1]",
            )?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, edges)
        }
    }?;
    Ok(g)
}

fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let edges: Vec<_> = (1..n)
        .map(|i| (label[rng.gen_range(0..i)], label[i]))
        .collect();
    Graph::from_edges(n, edges).expect("random attachment yields a tree")
}

/// A random spanning tree on `n` vertices plus up to `extra` further random
/// edges (fewer if the graph saturates).
pub fn random_connected(n: usize, extra: usize, seed: u64) -> Result<Graph> {
    need(n >= 1, "graph needs n >= 1")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree(n, &mut rng);
    let mut edges = tree.edges().to_vec();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !tree.has_edge(i, j))
        .collect();
    missing.shuffle(&mut rng);
    edges.extend(missing.into_iter().take(extra));
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_shape() {
        let g = generate(GraphKind::Star(4)).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
    }

    #[test]
    fn cycle_and_bipartite_sizes() {
        assert_eq!(generate(GraphKind::Cycle(3)).unwrap().m(), 3);
        assert_eq!(generate(GraphKind::CompleteBipartite(3, 3)).unwrap().m(), 9);
        assert_eq!(generate(GraphKind::Complete(5)).unwrap().m(), 10);
        assert_eq!(generate(GraphKind::Path(1)).unwrap().m(), 0);
    }

    #[test]
    fn random_kinds_are_deterministic() {
        let a = generate(GraphKind::RandomTree { n: 10, seed: 7 }).unwrap();
        let b = generate(GraphKind::RandomTree { n: 10, seed: 7 }).unwrap();
        assert_eq!(a, b);
        assert!(a.is_tree());
        let a = generate(GraphKind::RandomGraph {
            n: 12,
            p: 0.3,
            seed: 1,
        })
        .unwrap();
        let b = generate(GraphKind::RandomGraph {
            n: 12,
            p: 0.3,
            seed: 1,
        })
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(
            random_connected(9, 4, 3).unwrap(),
            random_connected(9, 4, 3).unwrap()
        );
    }

    #[test]
    fn random_connected_is_connected() {
        for seed in 0..20 {
            let g = random_connected(11, seed as usize, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.m(), 10 + seed as usize);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate(GraphKind::Path(0)).is_err());
        assert!(generate(GraphKind::Cycle(2)).is_err());
        assert!(generate(GraphKind::RandomGraph {
            n: 3,
            p: 1.5,
            seed: 0
        })
        .is_err());
    }
}
