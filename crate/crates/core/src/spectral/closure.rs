use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{AdjacencyMatrix, Matrix};
use crate::spectral::eigen_sym;

/// Rank threshold for accepting a new direction into a span.
pub const RANK_TOL: f64 = 1e-8;

/// A linearly independent list of matrices together with an orthonormal
/// (Frobenius) basis of their span.
#[derive(Clone, Debug, Default)]
pub struct MatrixAlgebraBasis {
    pub basis: Vec<Matrix>,
    orthonormal: Vec<Matrix>,
}

impl MatrixAlgebraBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn residual(&self, m: &Matrix) -> Matrix {
        let mut r = m.clone();
        for _ in 0..2 {
            for q in &self.orthonormal {
                r = &r - &q.scale(q.dot(&r));
            }
        }
        r
    }

    /// Relative distance of `m` from the span.
    pub fn distance(&self, m: &Matrix) -> f64 {
        let norm = m.frobenius();
        if norm == 0.0 {
            return 0.0;
        }
        self.residual(m).frobenius() / norm
    }

    pub fn contains(&self, m: &Matrix, tol: f64) -> bool {
        self.distance(m) <= tol
    }

    /// Adds `m` if it is independent of the current span; reports whether it
    /// was. Matrices with Frobenius norm below [`RANK_TOL`] count as zero.
    pub fn insert(&mut self, m: Matrix) -> bool {
        let norm = m.frobenius();
        if norm <= RANK_TOL {
            return false;
        }
        let r = self.residual(&m);
        let rn = r.frobenius();
        if rn <= RANK_TOL * norm {
            return false;
        }
        self.orthonormal.push(r.scale(1.0 / rn));
        self.basis.push(m);
        true
    }
}

impl Serialize for MatrixAlgebraBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}

/// Splits `m = Σ c · d_c` into 0-1 matrices with disjoint supports, one per
/// cluster of entry values (single linkage at `tol`). Values are the cluster
/// means, ascending.
pub fn color_decomposition(m: &Matrix, tol: f64) -> Vec<(f64, Matrix)> {
    let mut values: Vec<f64> = m.as_slice().to_vec();
    values.sort_by(f64::total_cmp);
    let mut clusters: Vec<(f64, f64, f64, usize)> = Vec::new();
    for v in values {
        match clusters.last_mut() {
            Some((_, hi, sum, count)) if v - *hi <= tol => {
                *hi = v;
                *sum += v;
                *count += 1;
            }
            _ => clusters.push((v, v, v, 1)),
        }
    }
    clusters
        .into_iter()
        .map(|(lo, hi, sum, count)| {
            let d = Matrix::from_fn(m.rows(), m.cols(), |i, j| f64::from(u8::from((lo..=hi).contains(&m[(i, j)]))));
            (sum / count as f64, d)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub basis: MatrixAlgebraBasis,
    pub dimension: usize,
    pub rounds: usize,
    pub converged: bool,
}

fn symmetric_part(m: &Matrix, tol: f64) -> Option<Matrix> {
    let t = m.transpose();
    if m.max_diff(&t) > tol * m.max_abs().max(1.0) {
        return None;
    }
    Some((m + &t).scale(0.5))
}

/// Closes `{I, d}` under spectral projections of symmetric elements, colour
/// components of all elements (the zero colour carries no weight and is
/// skipped) and products, until the span dimension has
/// been stable for two consecutive rounds or `max_iter` rounds have run.
pub fn color_spectral_closure(d: &Matrix, tol: f64, max_iter: usize) -> Result<ClosureReport> {
    if !d.is_symmetric() {
        return Err(Error::Contract("closure needs a symmetric matrix".into()));
    }
    let n = d.rows();
    let mut span = MatrixAlgebraBasis::default();
    span.insert(Matrix::identity(n));
    span.insert(d.clone());
    let mut decomposed = 0;
    let mut multiplied = 0;
    let mut stable = 0;
    let mut rounds = 0;
    while rounds < max_iter && stable < 2 {
        rounds += 1;
        let before = span.dimension();
        let batch: Vec<Matrix> = span.basis[decomposed..].to_vec();
        decomposed = before;
        for m in &batch {
            if let Some(s) = symmetric_part(m, tol) {
                if let Ok(dec) = eigen_sym(&s, Some(tol.max(crate::spectral::default_tol(&s)))) {
                    for p in dec.projections {
                        span.insert(p);
                    }
                }
            }
            for (value, c) in color_decomposition(m, tol) {
                if value.abs() > tol {
                    span.insert(c);
                }
            }
        }
        let len = span.dimension();
        for i in 0..len {
            for j in 0..len {
                if i.max(j) >= multiplied {
                    let p = &span.basis[i] * &span.basis[j];
                    span.insert(p);
                }
            }
        }
        multiplied = len;
        if span.dimension() == before {
            stable += 1;
        } else {
            stable = 0;
        }
    }
    let dimension = span.dimension();
    Ok(ClosureReport { basis: span, dimension, rounds, converged: stable >= 2 })
}

/// Coherent configuration of a 0-1 matrix by 2-dimensional Weisfeiler-Leman
/// refinement. Returns the pair colouring `c[i][j]`, colours numbered
/// canonically by sorted signature.
pub fn coherent_colors(d: &AdjacencyMatrix) -> Vec<Vec<u32>> {
    let n = d.n();
    let relabel = |keys: &[Vec<Vec<u64>>]| -> (Vec<Vec<u32>>, usize) {
        let mut sorted: Vec<&Vec<u64>> = keys.iter().flatten().collect();
        sorted.sort();
        sorted.dedup();
        let index: BTreeMap<&Vec<u64>, u32> = sorted.iter().enumerate().map(|(k, &s)| (s, k as u32)).collect();
        let colors = keys.iter().map(|row| row.iter().map(|s| index[s]).collect()).collect();
        (colors, sorted.len())
    };
    let init: Vec<Vec<Vec<u64>>> =
        (0..n).map(|i| (0..n).map(|j| vec![u64::from(i == j), u64::from(d.get(i, j))]).collect()).collect();
    let (mut colors, mut count) = relabel(&init);
    loop {
        let keys: Vec<Vec<Vec<u64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut walks: Vec<u64> =
                            (0..n).map(|k| (u64::from(colors[i][k]) << 32) | u64::from(colors[k][j])).collect();
                        walks.sort_unstable();
                        let mut key = Vec::with_capacity(n + 2);
                        key.push(u64::from(colors[i][j]));
                        key.push(u64::from(colors[j][i]));
                        key.extend(walks);
                        key
                    })
                    .collect()
            })
            .collect();
        let (next, next_count) = relabel(&keys);
        colors = next;
        if next_count == count {
            return colors;
        }
        count = next_count;
    }
}

/// Basis of the coherent algebra of `d`: one 0-1 matrix per colour class.
pub fn coherent_closure_exact(d: &AdjacencyMatrix) -> Result<MatrixAlgebraBasis> {
    if d.n() > crate::EXHAUSTIVE_CAP {
        return Err(Error::Refused(format!("coherent closure capped at n = {}", crate::EXHAUSTIVE_CAP)));
    }
    let colors = coherent_colors(d);
    let n = d.n();
    let classes = colors.iter().flatten().copied().max().map_or(0, |c| c as usize + 1);
    let mut basis = MatrixAlgebraBasis::default();
    for c in 0..classes as u32 {
        basis.insert(Matrix::from_fn(n, n, |i, j| f64::from(u8::from(colors[i][j] == c))));
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::GraphFamily;
    use crate::graph::Graph;
    use proptest::prelude::*;

    fn graph(s: &str) -> Graph {
        s.parse::<GraphFamily>().unwrap().build().unwrap()
    }

    fn closure_dim(s: &str) -> usize {
        let d = graph(s).adjacency().to_matrix();
        let r = color_spectral_closure(&d, 1e-9, 50).unwrap();
        assert!(r.converged);
        r.dimension
    }

    #[test]
    fn color_components() {
        let d = graph("c5").adjacency().to_matrix();
        let parts = color_decomposition(&d, 1e-9);
        assert_eq!(parts.iter().map(|p| p.0).collect::<Vec<_>>(), vec![0.0, 1.0]);
        let sum = parts.iter().fold(Matrix::zeros(5, 5), |acc, (c, m)| &acc + &m.scale(*c));
        assert_eq!(sum, d);
        assert_eq!(color_decomposition(&Matrix::ones(3), 1e-9).len(), 1);

        let p = graph("petersen").adjacency().to_matrix();
        let dec = eigen_sym(&p, None).unwrap();
        let p1 = &dec.projections[dec.find(1.0).unwrap()];
        let off: Vec<f64> = color_decomposition(p1, 1e-9).iter().map(|c| c.0).collect();
        assert!((3..=4).contains(&off.len()), "{off:?}");
    }

    #[test]
    fn closure_dimensions() {
        for n in 2..=8 {
            assert_eq!(closure_dim(&format!("k{n}")), 2);
        }
        assert_eq!(closure_dim("petersen"), 3);
        let diag = Matrix::diagonal(&[1.0, 2.0, 3.0]);
        assert_eq!(color_spectral_closure(&diag, 1e-9, 50).unwrap().dimension, 3);
    }

    #[test]
    fn coherent_examples() {
        assert_eq!(coherent_closure_exact(&graph("k5").adjacency()).unwrap().dimension(), 2);
        assert_eq!(coherent_closure_exact(&graph("petersen").adjacency()).unwrap().dimension(), 3);
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(coherent_closure_exact(&p3.adjacency()).unwrap().dimension(), 5);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_relation(n, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn coherent_algebra_is_closed(g in arb_graph(7)) {
            let basis = coherent_closure_exact(&g.adjacency()).unwrap();
            for a in &basis.basis {
                prop_assert!(basis.contains(&a.transpose(), 1e-12));
                for b in &basis.basis {
                    prop_assert!(basis.contains(&(a * b), 1e-9));
                }
            }
        }

        #[test]
        fn closure_inside_coherent(g in arb_graph(7)) {
            let d = g.adjacency();
            let exact = coherent_closure_exact(&d).unwrap();
            let approx = color_spectral_closure(&d.to_matrix(), 1e-9, 50).unwrap();
            for m in &approx.basis.basis {
                prop_assert!(exact.contains(m, RANK_TOL));
            }
            prop_assert!(approx.dimension <= exact.dimension());
        }
    }
}
