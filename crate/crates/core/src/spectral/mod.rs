//! Symmetric eigendecomposition, Laplacians, circulant symbols, Chebyshev
//! characteristic polynomials, colour decompositions and closure algebras.

mod circulant;
mod closure;
mod eigen;
mod evolve;

pub use circulant::{circulant_symbol, fourier_eigenvalues, root_of_unity, CirculantSymbol};
pub use closure::{
    coherent_closure_exact, coherent_colors, color_decomposition, color_spectral_closure, ClosureReport,
    MatrixAlgebraBasis, RANK_TOL,
};
pub use eigen::{default_tol, eigen_sym, jacobi, SpectralDecomposition};
pub use evolve::{evolve, stability_bound, Evolution};

use crate::exact::IntPoly;
use crate::graph::Graph;
use crate::matrix::Matrix;

/// Integer Laplacian `diag(v) − d` as rows.
pub fn laplacian_i64(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.n();
    let mut l = vec![vec![0i64; n]; n];
    for (i, j) in g.edges() {
        l[i][j] = -1;
        l[j][i] = -1;
        l[i][i] += 1;
        l[j][j] += 1;
    }
    l
}

pub fn laplacian(g: &Graph) -> Matrix {
    let l = laplacian_i64(g);
    Matrix::from_fn(g.n(), g.n(), |i, j| l[i][j] as f64)
}

/// Characteristic polynomial of the `N`-vertex segment:
/// `P_0 = 1`, `P_1 = x`, `P_{N+1} = x P_N − P_{N−1}`.
pub fn segment_charpoly(n: usize) -> IntPoly {
    let mut prev = IntPoly::constant(1);
    if n == 0 {
        return prev;
    }
    let mut cur = IntPoly::x();
    for _ in 1..n {
        let next = &(&IntPoly::x() * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::det_i64;
    use crate::family::GraphFamily;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn graph(s: &str) -> Graph {
        s.parse::<GraphFamily>().unwrap().build().unwrap()
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(laplacian_i64(&graph("k2")), vec![vec![1, -1], vec![-1, 1]]);
        let k3 = laplacian_i64(&graph("k3"));
        assert!((0..3).all(|i| (0..3).all(|j| k3[i][j] == if i == j { 2 } else { -1 })));
        let e = eigen_sym(&laplacian(&Graph::empty(4)), None).unwrap();
        assert_eq!((e.eigenvalues.clone(), e.multiplicities.clone()), (vec![0.0], vec![4]));
    }

    #[test]
    fn segment_polynomials() {
        assert_eq!(segment_charpoly(4), IntPoly::from_i64(&[1, 0, -3, 0, 1]));
        assert_eq!(segment_charpoly(6), IntPoly::from_i64(&[-1, 0, 6, 0, -5, 0, 1]));
        assert_eq!(segment_charpoly(1), IntPoly::x());
        for n in 1..=10 {
            let g = GraphFamily::Segment(n).build().unwrap();
            let p = segment_charpoly(n);
            let d = g.adjacency();
            for x in 0..=(n as i64 + 1) {
                let m: Vec<Vec<i64>> = (0..n)
                    .map(|i| (0..n).map(|j| if i == j { x } else { -i64::from(d.get(i, j)) }).collect())
                    .collect();
                assert_eq!(det_i64(&m).unwrap(), p.eval(&BigInt::from(x)));
            }
            let e = eigen_sym(&d.to_matrix(), None).unwrap();
            for &l in &e.raw_eigenvalues {
                assert!(p.eval_f64(l).abs() < 1e-6);
            }
        }
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
        #[test]
        fn laplacian_psd_with_component_kernel(g in arb_graph(12)) {
            let l = laplacian(&g);
            for i in 0..g.n() {
                prop_assert_eq!(l.row(i).iter().sum::<f64>(), 0.0);
            }
            let e = eigen_sym(&l, None).unwrap();
            prop_assert!(e.raw_eigenvalues.iter().all(|&x| x >= -1e-9));
            let kernel = e.raw_eigenvalues.iter().filter(|x| x.abs() <= 1e-8).count();
            prop_assert_eq!(kernel, g.components().len());
        }
    }
}
