//! Spectral sufficient conditions for the symmetry group of a graph product
//! to be the product (or wreath product) of the factor groups, checked
//! against the actual group.

use gsym_core::spectral::eigen_sym;
use gsym_core::{product, Graph, ProductKind, Result};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::search::automorphism_group;

/// Tolerance for deciding membership in the spectral difference and ratio
/// sets.
pub const SET_TOL: f64 = 1e-7;

#[derive(Clone, Debug, Serialize)]
pub struct ProductTheoremReport {
    pub kind: ProductKind,
    /// `None` when the hypotheses (connected, regular) fail.
    pub conditions_hold: Option<bool>,
    pub note: Option<String>,
    /// `|G(x)|·|G(y)|`, or `|G(x)|^{|y|}·|G(y)|` for the lexicographic product.
    #[serde(serialize_with = "ser_big")]
    pub order_product: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub order_actual: BigInt,
    pub equal: bool,
}

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn is_regular(g: &Graph) -> bool {
    let v = g.valences();
    v.windows(2).all(|w| w[0] == w[1])
}

fn spectrum(g: &Graph) -> Result<Vec<f64>> {
    Ok(eigen_sym(&g.adjacency().to_matrix(), None)?.eigenvalues)
}

fn contains(set: &[f64], x: f64) -> bool {
    set.iter().any(|&s| (s - x).abs() <= SET_TOL)
}

fn pairwise(s: &[f64], f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
    s.iter().flat_map(|&a| s.iter().map(move |&b| (a, b))).map(|(a, b)| f(a, b)).collect()
}

/// `{λ_i/λ_j} ∩ {μ_k/μ_l} = {1}` with zero-free spectra (direct),
/// `{λ_i−λ_j} ∩ {μ_k−μ_l} = {0}` (Cartesian), or
/// `{λ_1−λ_i | i≠1} ∩ {−n μ_j} = ∅` with `n = |x|` (lexicographic, `x` placed
/// over each vertex of `y`).
fn conditions(x: &Graph, y: &Graph, kind: ProductKind) -> Result<std::result::Result<bool, String>> {
    let regular_connected = |g: &Graph| g.is_connected() && is_regular(g);
    let applicable = match kind {
        ProductKind::Direct | ProductKind::Cartesian => regular_connected(x) && regular_connected(y),
        ProductKind::Lexicographic => regular_connected(x) && is_regular(y),
    };
    if !applicable {
        return Ok(Err("factors are not connected and regular as required".into()));
    }
    let (lx, ly) = (spectrum(x)?, spectrum(y)?);
    let holds = match kind {
        ProductKind::Direct => {
            if contains(&lx, 0.0) || contains(&ly, 0.0) {
                return Ok(Ok(false));
            }
            let rx = pairwise(&lx, |a, b| a / b);
            let ry = pairwise(&ly, |a, b| a / b);
            rx.iter().all(|&r| (r - 1.0).abs() <= SET_TOL || !contains(&ry, r))
        }
        ProductKind::Cartesian => {
            let dx = pairwise(&lx, |a, b| a - b);
            let dy = pairwise(&ly, |a, b| a - b);
            dx.iter().all(|&d| d.abs() <= SET_TOL || !contains(&dy, d))
        }
        ProductKind::Lexicographic => {
            let top = *lx.last().expect("nonempty spectrum");
            let n = x.n() as f64;
            let scaled: Vec<f64> = ly.iter().map(|m| -n * m).collect();
            lx[..lx.len() - 1].iter().all(|&l| !contains(&scaled, top - l))
        }
    };
    Ok(Ok(holds))
}

pub fn verify_product_theorem(x: &Graph, y: &Graph, kind: ProductKind) -> Result<ProductTheoremReport> {
    let (conditions_hold, note) = match conditions(x, y, kind)? {
        Ok(h) => (Some(h), None),
        Err(why) => (None, Some(why)),
    };
    let gx = automorphism_group(x)?.order;
    let gy = automorphism_group(y)?.order;
    let order_product = match kind {
        ProductKind::Lexicographic => gx.pow(y.n() as u32) * gy,
        _ => gx * gy,
    };
    let order_actual = automorphism_group(&product(x, y, kind))?.order;
    Ok(ProductTheoremReport {
        kind,
        conditions_hold,
        note,
        equal: order_product == order_actual,
        order_product,
        order_actual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gsym_core::GraphFamily;

    fn graph(s: &str) -> Graph {
        s.parse::<GraphFamily>().unwrap().build().unwrap()
    }

    #[test]
    fn examples() {
        let r = verify_product_theorem(&graph("c4"), &graph("c5"), ProductKind::Cartesian).unwrap();
        assert_eq!(r.conditions_hold, Some(true));
        assert_eq!((r.order_product.clone(), r.order_actual.clone()), (BigInt::from(80), BigInt::from(80)));
        let r = verify_product_theorem(&graph("k3"), &graph("k3"), ProductKind::Direct).unwrap();
        assert_eq!(r.conditions_hold, Some(false));
        assert_eq!((r.order_product.clone(), r.order_actual.clone()), (BigInt::from(36), BigInt::from(72)));
        let r = verify_product_theorem(&graph("k3"), &graph("k2"), ProductKind::Lexicographic).unwrap();
        assert_eq!(r.conditions_hold, Some(false));
        assert_eq!(r.order_product, BigInt::from(72));
        assert_eq!(r.order_actual, BigInt::from(720));
        let r = verify_product_theorem(&graph("segment3"), &graph("k2"), ProductKind::Cartesian).unwrap();
        assert_eq!(r.conditions_hold, None);
    }

    #[test]
    fn conditions_imply_equality() {
        let cases = [
            ("c5", "k2", ProductKind::Lexicographic),
            ("c4", "c3", ProductKind::Lexicographic),
            ("c5", "c3", ProductKind::Cartesian),
            ("c5", "c7", ProductKind::Direct),
            ("petersen", "k2", ProductKind::Cartesian),
        ];
        for (a, b, kind) in cases {
            let r = verify_product_theorem(&graph(a), &graph(b), kind).unwrap();
            if r.conditions_hold == Some(true) {
                assert!(r.equal, "{a} {b} {kind:?}");
            }
        }
    }
}
