use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

const MAX_SWEEPS: usize = 100;

/// Clustered spectral decomposition `m = Σ λ P_λ` of a real symmetric matrix.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    /// Distinct clustered eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    /// Orthogonal projection onto each eigenspace, in eigenvalue order.
    pub projections: Vec<Matrix>,
    /// Orthonormal eigenvectors as columns, sorted by ascending eigenvalue.
    pub eigenvectors: Matrix,
    /// Unclustered eigenvalues matching the columns of `eigenvectors`.
    pub raw_eigenvalues: Vec<f64>,
    pub tol: f64,
}

#[derive(Serialize)]
struct EigenEntry {
    value: f64,
    multiplicity: usize,
}

#[derive(Serialize)]
struct SpectralReport {
    eigenvalues: Vec<EigenEntry>,
    tol: f64,
}

impl Serialize for SpectralDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let eigenvalues = self
            .eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .map(|(&value, &multiplicity)| EigenEntry { value, multiplicity })
            .collect();
        SpectralReport { eigenvalues, tol: self.tol }.serialize(s)
    }
}

impl SpectralDecomposition {
    /// `Σ λ P_λ`.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.eigenvectors.rows();
        self.eigenvalues.iter().zip(&self.projections).fold(Matrix::zeros(n, n), |acc, (&l, p)| &acc + &p.scale(l))
    }

    /// Largest absolute eigenvalue.
    pub fn spectral_radius(&self) -> f64 {
        self.raw_eigenvalues.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Index of the cluster containing `value`, if any.
    pub fn find(&self, value: f64) -> Option<usize> {
        self.eigenvalues.iter().position(|&l| (l - value).abs() <= 10.0 * self.tol)
    }
}

/// Default clustering tolerance `1e-9 · max(1, ‖m‖_∞)`.
pub fn default_tol(m: &Matrix) -> f64 {
    1e-9 * m.norm_inf().max(1.0)
}

/// Cyclic Jacobi eigensolver. Returns eigenvalues (unsorted) and the
/// matrix whose columns are the matching orthonormal eigenvectors.
pub fn jacobi(m: &Matrix) -> (Vec<f64>, Matrix) {
    let n = m.rows();
    let mut a = m.clone();
    let mut v = Matrix::identity(n);
    let scale = m.frobenius().max(1.0);
    for _ in 0..MAX_SWEEPS {
        let off: f64 =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| 2.0 * a[(i, j)] * a[(i, j)]).sum();
        if off.sqrt() <= 1e-12 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[(p, p)] -= t * apq;
                a[(q, q)] += t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for r in 0..n {
                    if r != p && r != q {
                        let (arp, arq) = (a[(r, p)], a[(r, q)]);
                        let np = c * arp - s * arq;
                        let nq = s * arp + c * arq;
                        a[(r, p)] = np;
                        a[(p, r)] = np;
                        a[(r, q)] = nq;
                        a[(q, r)] = nq;
                    }
                    let (vrp, vrq) = (v[(r, p)], v[(r, q)]);
                    v[(r, p)] = c * vrp - s * vrq;
                    v[(r, q)] = s * vrp + c * vrq;
                }
            }
        }
    }
    ((0..n).map(|i| a[(i, i)]).collect(), v)
}

/// Eigendecomposition with single-linkage clustering of eigenvalues: sorted
/// neighbours closer than `tol` share a cluster. `tol = None` uses
/// [`default_tol`].
pub fn eigen_sym(m: &Matrix, tol: Option<f64>) -> Result<SpectralDecomposition> {
    if !m.is_symmetric() {
        return Err(Error::Contract("eigen_sym needs a symmetric matrix".into()));
    }
    if m.rows() > crate::NUMERIC_CAP {
        return Err(Error::Refused(format!("dimension {} exceeds the numeric cap", m.rows())));
    }
    let tol = tol.unwrap_or_else(|| default_tol(m));
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Parameter("tolerance must be positive".into()));
    }
    let n = m.rows();
    let (values, vectors) = jacobi(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]).then(i.cmp(&j)));
    let raw: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let eigenvectors = Matrix::from_fn(n, n, |r, c| vectors[(r, order[c])]);

    let mut eigenvalues = Vec::new();
    let mut multiplicities = Vec::new();
    let mut projections = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && raw[end] - raw[end - 1] <= tol {
            end += 1;
        }
        let cluster = &raw[start..end];
        eigenvalues.push(cluster.iter().sum::<f64>() / cluster.len() as f64);
        multiplicities.push(end - start);
        projections.push(Matrix::from_fn(n, n, |i, j| {
            (start..end).map(|c| eigenvectors[(i, c)] * eigenvectors[(j, c)]).sum()
        }));
        start = end;
    }
    Ok(SpectralDecomposition { eigenvalues, multiplicities, projections, eigenvectors, raw_eigenvalues: raw, tol })
}
