use num_complex::Complex64;
use serde::Serialize;

use crate::matrix::Matrix;

/// First row `γ` of a circulant matrix, `m_ij = γ_{(j - i) mod N}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CirculantSymbol {
    pub gamma: Vec<f64>,
}

impl CirculantSymbol {
    /// `γ_i = γ_{N-i}` for all `i`, i.e. the matrix is symmetric.
    pub fn is_symmetric(&self) -> bool {
        let n = self.gamma.len();
        (1..n).all(|i| self.gamma[i] == self.gamma[n - i])
    }

    /// Indices with nonzero symbol.
    pub fn support(&self) -> Vec<usize> {
        (0..self.gamma.len()).filter(|&i| self.gamma[i] != 0.0).collect()
    }
}

/// Returns the symbol iff `m` is exactly circulant under the identity labelling.
pub fn circulant_symbol(m: &Matrix) -> Option<CirculantSymbol> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let gamma = m.row(0).to_vec();
    let exact = (0..n).all(|i| (0..n).all(|j| m[(i, j)] == gamma[(j + n - i) % n]));
    exact.then_some(CirculantSymbol { gamma })
}

/// `w^e` for `w = e^{2πi/N}`, with the exponent reduced mod `N` first.
pub fn root_of_unity(n: usize, e: usize) -> Complex64 {
    let angle = 2.0 * std::f64::consts::PI * ((e % n) as f64) / n as f64;
    Complex64::from_polar(1.0, angle)
}

/// Fourier eigenvalues `q_j = Σ_r γ_r w^{jr}`, `j = 0..N`.
pub fn fourier_eigenvalues(symbol: &CirculantSymbol) -> Vec<Complex64> {
    let n = symbol.gamma.len();
    (0..n)
        .map(|j| {
            symbol.gamma.iter().enumerate().filter(|(_, &g)| g != 0.0).map(|(r, &g)| root_of_unity(n, j * r) * g).sum()
        })
        .collect()
}
