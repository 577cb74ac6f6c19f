//! Dense linear algebra over GF(2).

use std::cmp::Ordering;
use std::fmt::Write;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest nullity `min_weight_solution` enumerates by default (2^20 vectors).
pub const DEFAULT_NULLITY_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<BitVec>,
}

/// Solution space of `A x = b`: `particular` plus the span of `nullspace`.
#[derive(Clone, Debug)]
pub struct Gf2Solution {
    pub consistent: bool,
    /// Meaningful only when `consistent`; free variables are set to 0.
    pub particular: BitVec,
    pub nullspace: Vec<BitVec>,
    pub rank: usize,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(Gf2Matrix { cols, rows })
    }

    /// Parses rows of '0'/'1' characters.
    pub fn from_bit_strings(rows: &[&str]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| BitVec::from_bools(&r.chars().map(|c| c == '1').collect::<Vec<_>>()))
            .collect();
        Self::from_rows(cols, rows)
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.rows[r].set(c, v)
    }

    pub fn row(&self, r: usize) -> &BitVec {
        &self.rows[r]
    }

    pub fn mul_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok(BitVec::from_bools(
            &self.rows.iter().map(|r| r.dot(x)).collect::<Vec<_>>(),
        ))
    }

    /// '0'/'1' text grid, one row per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            writeln!(s, "{}", r.to_bit_string()).unwrap();
        }
        s
    }
}

/// Solves `a x = b` by Gauss-Jordan elimination.
pub fn solve(a: &Gf2Matrix, b: &BitVec) -> Result<Gf2Solution> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            got: b.len(),
        });
    }
    let mut rows = a.rows.clone();
    let mut rhs: Vec<bool> = (0..b.len()).map(|i| b.get(i)).collect();
    let mut pivots: Vec<usize> = Vec::new();

    for col in 0..a.cols {
        let r = pivots.len();
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, tail) = tail.split_first_mut().unwrap();
        for (i, row) in head.iter_mut().enumerate() {
            if row.get(col) {
                row.xor_assign(pivot_row);
                rhs[i] ^= rhs[r];
            }
        }
        for (k, row) in tail.iter_mut().enumerate() {
            if row.get(col) {
                row.xor_assign(pivot_row);
                rhs[r + 1 + k] ^= rhs[r];
            }
        }
        pivots.push(col);
    }

    let rank = pivots.len();
    let consistent = rhs[rank..].iter().all(|&x| !x);

    let mut particular = BitVec::zeros(a.cols);
    if consistent {
        for (i, &c) in pivots.iter().enumerate() {
            particular.set(c, rhs[i]);
        }
    }

    let mut is_pivot = vec![false; a.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let nullspace = (0..a.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVec::zeros(a.cols);
            v.set(f, true);
            for (i, &c) in pivots.iter().enumerate() {
                if rows[i].get(f) {
                    v.set(c, true);
                }
            }
            v
        })
        .collect();

    Ok(Gf2Solution {
        consistent,
        particular,
        nullspace,
        rank,
    })
}

impl Gf2Solution {
    pub fn nullity(&self) -> usize {
        self.nullspace.len()
    }

    /// `particular` plus the basis vectors selected by the low bits of `mask`.
    pub fn combination(&self, mask: u64) -> BitVec {
        let mut x = self.particular.clone();
        for (i, v) in self.nullspace.iter().enumerate() {
            if mask >> i & 1 == 1 {
                x.xor_assign(v);
            }
        }
        x
    }

    /// Visits every vector of the solution space once, in Gray-code order.
    ///
    /// Returns `false` without visiting anything if the system is
    /// inconsistent or the nullity exceeds `nullity_cap`.
    pub fn for_each_solution<F: FnMut(&BitVec)>(&self, nullity_cap: usize, mut f: F) -> bool {
        let k = self.nullity();
        if !self.consistent || k > nullity_cap || k >= 64 {
            return false;
        }
        let mut x = self.particular.clone();
        f(&x);
        for i in 1u64..(1u64 << k) {
            x.xor_assign(&self.nullspace[i.trailing_zeros() as usize]);
            f(&x);
        }
        true
    }
}

/// A minimum Hamming-weight vector of the solution space, ties going to the
/// lexicographically smallest. `None` if inconsistent or over budget.
pub fn min_weight_solution(sol: &Gf2Solution, nullity_cap: usize) -> Option<BitVec> {
    let mut best: Option<(usize, BitVec)> = None;
    let ok = sol.for_each_solution(nullity_cap, |x| {
        let w = x.count_ones();
        let better = match &best {
            None => true,
            Some((bw, bx)) => w < *bw || (w == *bw && x.lex_cmp(bx) == Ordering::Less),
        };
        if better {
            best = Some((w, x.clone()));
        }
    });
    if ok {
        best.map(|(_, x)| x)
    } else {
        None
    }
}

/// `A + I`, the closed-neighbourhood matrix of `g`.
pub fn closed_neighborhood_matrix(g: &Graph) -> Gf2Matrix {
    let mut m = Gf2Matrix::identity(g.n());
    for &(u, v) in g.edges() {
        m.set(u, v, true);
        m.set(v, u, true);
    }
    m
}

/// Vertex-by-edge incidence matrix (`n` rows, `m` columns).
pub fn incidence_matrix(g: &Graph) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(g.n(), g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        m.set(u, e, true);
        m.set(v, e, true);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bits(s: &str) -> BitVec {
        BitVec::from_bools(&s.chars().map(|c| c == '1').collect::<Vec<_>>())
    }

    #[test]
    fn rank_deficient_system() {
        let a = Gf2Matrix::from_bit_strings(&["11", "11"]).unwrap();
        let sol = solve(&a, &bits("11")).unwrap();
        assert!(sol.consistent);
        assert!(sol.particular == bits("10") || sol.particular == bits("01"));
        assert_eq!(sol.nullity(), 1);
        assert_eq!(sol.nullspace, vec![bits("11")]);
    }

    #[test]
    fn identity_system() {
        let sol = solve(&Gf2Matrix::identity(3), &bits("101")).unwrap();
        assert!(sol.consistent);
        assert_eq!(sol.particular, bits("101"));
        assert_eq!(sol.nullity(), 0);
    }

    #[test]
    fn inconsistent_system() {
        let a = Gf2Matrix::from_bit_strings(&["11", "11"]).unwrap();
        assert!(!solve(&a, &bits("10")).unwrap().consistent);
        assert_eq!(
            min_weight_solution(&solve(&a, &bits("10")).unwrap(), 20),
            None
        );
    }

    #[test]
    fn dimension_mismatch() {
        let a = Gf2Matrix::identity(3);
        assert!(matches!(
            solve(&a, &bits("10")),
            Err(Error::DimensionMismatch {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn min_weight_examples() {
        let sol = solve(&Gf2Matrix::identity(3), &bits("101")).unwrap();
        assert_eq!(min_weight_solution(&sol, 0), Some(bits("101")));

        let a = Gf2Matrix::from_bit_strings(&["11", "11"]).unwrap();
        let sol = solve(&a, &bits("11")).unwrap();
        // both unit vectors have weight 1; lexicographic tie-break picks 01
        assert_eq!(min_weight_solution(&sol, 20), Some(bits("01")));

        let wide = Gf2Matrix::zeros(1, 25);
        let sol = solve(&wide, &bits("0")).unwrap();
        assert_eq!(sol.nullity(), 25);
        assert_eq!(min_weight_solution(&sol, 20), None);
    }

    #[test]
    fn graph_matrices() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(closed_neighborhood_matrix(&k2).to_text(), "11\n11\n");
        assert_eq!(incidence_matrix(&k2).to_text(), "1\n1\n");
        assert_eq!(
            closed_neighborhood_matrix(&Graph::empty(3)),
            Gf2Matrix::identity(3)
        );
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(closed_neighborhood_matrix(&p3).to_text(), "110\n111\n011\n");
        assert_eq!(incidence_matrix(&p3).to_text(), "10\n11\n01\n");
        let c3 = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let inc = incidence_matrix(&c3);
        assert!((0..3).all(|r| inc.row(r).count_ones() == 2));
    }

    fn arb_system() -> impl Strategy<Value = (Gf2Matrix, BitVec)> {
        (1usize..9, 1usize..11).prop_flat_map(|(r, c)| {
            (
                proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r),
                proptest::collection::vec(any::<bool>(), r),
            )
                .prop_map(move |(rows, b)| {
                    let rows = rows.iter().map(|x| BitVec::from_bools(x)).collect();
                    (
                        Gf2Matrix::from_rows(c, rows).unwrap(),
                        BitVec::from_bools(&b),
                    )
                })
        })
    }

    proptest! {
        #[test]
        fn solve_matches_exhaustive((a, b) in arb_system()) {
            let sol = solve(&a, &b).unwrap();
            prop_assert_eq!(sol.rank + sol.nullity(), a.cols());
            for v in &sol.nullspace {
                prop_assert!(a.mul_vec(v).unwrap().is_zero());
            }
            // exhaustive oracle over all 2^cols vectors
            let all: Vec<BitVec> = (0..1u64 << a.cols())
                .map(|mask| BitVec::from_mask(a.cols(), mask))
                .filter(|x| a.mul_vec(x).unwrap() == b)
                .collect();
            prop_assert_eq!(sol.consistent, !all.is_empty());
            if sol.consistent {
                prop_assert_eq!(a.mul_vec(&sol.particular).unwrap(), b.clone());
                prop_assert_eq!(all.len(), 1usize << sol.nullity());
                for mask in 0..(1u64 << sol.nullity()).min(64) {
                    prop_assert_eq!(a.mul_vec(&sol.combination(mask)).unwrap(), b.clone());
                }
                let best = all
                    .iter()
                    .min_by(|x, y| x.count_ones().cmp(&y.count_ones()).then(x.lex_cmp(y)))
                    .unwrap();
                let got = min_weight_solution(&sol, 20);
                prop_assert_eq!(got.as_ref(), Some(best));
            }
        }
    }
}
