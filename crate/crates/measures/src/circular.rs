//! Circular measure of a rooted graph with norm at most 2: the pullback of
//! `law(d²)` under `q ↦ (q + q⁻¹)²`, as a measure on angles.

use std::f64::consts::PI;

use gsym_core::{Error, Graph, Result};

use crate::loops::{spectral_measure, AtomicMeasure};

/// Slack allowed on the norm bound `‖d‖ ≤ 2`.
pub const RADIUS_SLACK: f64 = 1e-9;

const MERGE_TOL: f64 = 1e-9;

fn wrap(theta: f64) -> f64 {
    if theta <= -PI + MERGE_TOL {
        PI
    } else {
        theta
    }
}

/// Atoms are angles in `(−π, π]`. Each atom `x` of `law(d²)` with weight `w`
/// contributes `w/4` at `±α` and `±(π − α)`, where `α = arccos(√x / 2)`.
pub fn circular_measure(g: &Graph) -> Result<AtomicMeasure> {
    let root = g.root().ok_or_else(|| Error::Contract("circular measure needs a rooted graph".into()))?;
    let mu = spectral_measure(g, root)?;
    let radius = spectral_radius(g)?;
    if radius > 2.0 + RADIUS_SLACK {
        return Err(Error::Domain(format!("spectral radius {radius} exceeds 2")));
    }
    let squared = mu.squared(MERGE_TOL)?;
    let mut pairs = Vec::with_capacity(4 * squared.atoms().len());
    for (&x, &w) in squared.atoms().iter().zip(squared.weights()) {
        // arccos is ill-conditioned at 1, so atoms at the edge are snapped.
        let c = x.max(0.0).sqrt() / 2.0;
        let alpha = if c >= 1.0 - RADIUS_SLACK { 0.0 } else { c.acos() };
        for theta in [alpha, -alpha, PI - alpha, alpha - PI] {
            pairs.push((wrap(theta), w / 4.0));
        }
    }
    AtomicMeasure::from_pairs(pairs, MERGE_TOL)
}

/// `∫ q^k dε = Σ w cos(kθ)`; the sine part vanishes by symmetry.
pub fn circular_moment(eps: &AtomicMeasure, k: u32) -> f64 {
    eps.atoms().iter().zip(eps.weights()).map(|(t, w)| w * (f64::from(k) * t).cos()).sum()
}

pub fn spectral_radius(g: &Graph) -> Result<f64> {
    let dec = gsym_core::spectral::eigen_sym(&g.adjacency().to_matrix(), None)?;
    Ok(dec.spectral_radius())
}

#[cfg(test)]
mod tests {
    use super::*;
    use gsym_core::{AdeTag, GraphFamily};

    #[test]
    fn cycles_give_roots_of_unity() {
        for n in 2..=6 {
            let g = GraphFamily::Ade(AdeTag::AffineA, 2 * n).build().unwrap();
            let eps = circular_measure(&g).unwrap();
            assert_eq!(eps.atoms().len(), 2 * n);
            for (j, (&t, &w)) in eps.atoms().iter().zip(eps.weights()).enumerate() {
                let expected = -PI + PI * (j + 1) as f64 / n as f64;
                assert!((t - expected).abs() < 1e-7, "n={n}: {t} vs {expected}");
                assert!((w - 1.0 / (2 * n) as f64).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn moments_parity() {
        let shapes =
            [(AdeTag::A, 5), (AdeTag::D, 6), (AdeTag::E6, 6), (AdeTag::E7, 7), (AdeTag::E8, 8), (AdeTag::AffineD, 6)];
        for (tag, size) in shapes {
            let eps = circular_measure(&GraphFamily::Ade(tag, size).build().unwrap()).unwrap();
            for k in 0..=12u32 {
                let m = circular_moment(&eps, k);
                if k % 2 == 1 {
                    assert!(m.abs() < 1e-9);
                } else if !tag.is_affine() {
                    assert!((2.0 * m - (2.0 * m).round()).abs() < 1e-9, "{tag}{size} k={k}: {m}");
                }
            }
        }
    }

    #[test]
    fn norm_gate() {
        let g = GraphFamily::K(4).build().unwrap().with_root(0).unwrap();
        assert!(matches!(circular_measure(&g), Err(Error::Domain(_))));
        assert!(circular_measure(&GraphFamily::K(4).build().unwrap()).is_err());
    }
}
