use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{eigen_sym, laplacian};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Evolution {
    /// Explicit Euler `φ ← φ − α δ L φ`.
    Heat { alpha: f64 },
    /// Leapfrog `φ_{t+1} = 2φ_t − φ_{t−1} − v² δ² L φ_t`, started at rest.
    Wave { speed_sq: f64 },
}

fn apply_laplacian(adj: &[Vec<usize>], phi: &[f64]) -> Vec<f64> {
    adj.iter().enumerate().map(|(i, nb)| nb.len() as f64 * phi[i] - nb.iter().map(|&j| phi[j]).sum::<f64>()).collect()
}

/// Trajectory `φ_0, …, φ_steps` of the discrete heat or wave equation.
pub fn evolve(g: &Graph, init: &[f64], kind: Evolution, delta: f64, steps: usize) -> Result<Vec<Vec<f64>>> {
    if init.len() != g.n() {
        return Err(Error::Contract(format!("initial vector has length {}, graph has {} vertices", init.len(), g.n())));
    }
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::Parameter("time step must be positive".into()));
    }
    let adj = g.adjacency_lists();
    let mut out = Vec::with_capacity(steps + 1);
    out.push(init.to_vec());
    let mut prev = init.to_vec();
    for _ in 0..steps {
        let cur = out.last().expect("nonempty");
        let l = apply_laplacian(&adj, cur);
        let next: Vec<f64> = match kind {
            Evolution::Heat { alpha } => cur.iter().zip(&l).map(|(p, lp)| p - alpha * delta * lp).collect(),
            Evolution::Wave { speed_sq } => {
                let k = speed_sq * delta * delta;
                (0..cur.len()).map(|i| 2.0 * cur[i] - prev[i] - k * l[i]).collect()
            }
        };
        prev = cur.clone();
        out.push(next);
    }
    Ok(out)
}

/// Largest step `2 / λ_max(L)` for which the explicit heat scheme with `α = 1`
/// is stable; infinite for edgeless graphs.
pub fn stability_bound(g: &Graph) -> Result<f64> {
    let dec = eigen_sym(&laplacian(g), None)?;
    let top = dec.eigenvalues.last().copied().unwrap_or(0.0);
    Ok(if top <= dec.tol { f64::INFINITY } else { 2.0 / top })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::GraphFamily;

    fn graph(s: &str) -> Graph {
        s.parse::<GraphFamily>().unwrap().build().unwrap()
    }

    #[test]
    fn heat_one_step_on_segment() {
        let t = evolve(&graph("k2"), &[1.0, 0.0], Evolution::Heat { alpha: 1.0 }, 0.25, 1).unwrap();
        assert_eq!(t[1], vec![0.75, 0.25]);
    }

    #[test]
    fn constant_is_stationary() {
        for kind in [Evolution::Heat { alpha: 0.7 }, Evolution::Wave { speed_sq: 2.0 }] {
            let t = evolve(&graph("petersen"), &[3.0; 10], kind, 0.1, 20).unwrap();
            assert!(t.iter().all(|v| v.iter().all(|&x| x == 3.0)));
        }
    }

    #[test]
    fn heat_mass_conserved() {
        let init: Vec<f64> = (0..10).map(|i| (i * i % 7) as f64).collect();
        let mass: f64 = init.iter().sum();
        let t = evolve(&graph("c10"), &init, Evolution::Heat { alpha: 1.0 }, 0.1, 1000).unwrap();
        for v in &t {
            assert!((v.iter().sum::<f64>() - mass).abs() <= 1e-12 * mass.max(1.0));
        }
        assert!(stability_bound(&graph("c10")).unwrap() >= 0.5 - 1e-12);
    }

    #[test]
    fn wave_first_step() {
        let t = evolve(&graph("k2"), &[1.0, 0.0], Evolution::Wave { speed_sq: 1.0 }, 0.5, 1).unwrap();
        assert_eq!(t[1], vec![0.75, 0.25]);
        assert!(evolve(&graph("k2"), &[1.0], Evolution::Wave { speed_sq: 1.0 }, 0.5, 1).is_err());
    }
}
