//! Loop counts, spectral measures of rooted graphs, combinatorial moment
//! oracles and Hankel positivity.

use std::str::FromStr;

use gsym_core::exact::{binomial, det_rational};
use gsym_core::spectral::eigen_sym;
use gsym_core::{Error, Graph, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Weights at or below this are treated as absent from a spectral measure.
pub const WEIGHT_FLOOR: f64 = 1e-12;

/// `L_0, …, L_{k_max}` with `L_k = (d^k)_{root,root}`, the number of closed
/// walks of length `k` at `root`. Exact.
pub fn loop_counts(g: &Graph, root: usize, k_max: usize) -> Result<Vec<BigInt>> {
    if root >= g.n() {
        return Err(Error::Contract(format!("root {root} out of range for {} vertices", g.n())));
    }
    let adj = g.adjacency_lists();
    let mut v = vec![BigInt::zero(); g.n()];
    v[root] = BigInt::one();
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        out.push(v[root].clone());
        if k < k_max {
            v = adj.iter().map(|nb| nb.iter().map(|&j| &v[j]).sum()).collect();
        }
    }
    Ok(out)
}

/// Finitely supported probability measure on the real line.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AtomicMeasure {
    atoms: Vec<f64>,
    weights: Vec<f64>,
}

impl AtomicMeasure {
    /// Atoms must be finite and strictly increasing, weights positive with
    /// total mass 1 within `1e-9`.
    pub fn new(atoms: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if atoms.len() != weights.len() || atoms.is_empty() {
            return Err(Error::Parameter("need equally many atoms and weights, at least one".into()));
        }
        if atoms.iter().any(|a| !a.is_finite()) || atoms.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parameter("atoms must be finite and strictly increasing".into()));
        }
        if weights.iter().any(|&w| w.is_nan() || w <= 0.0) {
            return Err(Error::Parameter("weights must be positive".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::Parameter(format!("total mass {total} is not 1")));
        }
        Ok(AtomicMeasure { atoms, weights })
    }

    /// Builds a measure from unsorted, possibly repeated atoms; atoms within
    /// `tol` of each other are merged.
    pub fn from_pairs(mut pairs: Vec<(f64, f64)>, tol: f64) -> Result<Self> {
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut atoms: Vec<f64> = Vec::new();
        let mut weights: Vec<f64> = Vec::new();
        for (a, w) in pairs {
            match atoms.last() {
                Some(&last) if a - last <= tol => *weights.last_mut().expect("parallel") += w,
                _ => {
                    atoms.push(a);
                    weights.push(w);
                }
            }
        }
        Self::new(atoms, weights)
    }

    pub fn atoms(&self) -> &[f64] {
        &self.atoms
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn moment(&self, k: u32) -> f64 {
        self.atoms.iter().zip(&self.weights).map(|(a, w)| w * a.powi(k as i32)).sum()
    }

    pub fn moments(&self, k_max: u32) -> Vec<f64> {
        (0..=k_max).map(|k| self.moment(k)).collect()
    }

    /// Moments of the measure whose atoms and weights are the exact binary
    /// values of the stored floats.
    pub fn exact_moments(&self, k_max: usize) -> MomentSequence {
        let pairs: Vec<(BigRational, BigRational)> = self
            .atoms
            .iter()
            .zip(&self.weights)
            .map(|(&a, &w)| (BigRational::from_float(a).expect("finite"), BigRational::from_float(w).expect("finite")))
            .collect();
        let mut powers: Vec<BigRational> = pairs.iter().map(|(_, w)| w.clone()).collect();
        let mut moments = Vec::with_capacity(k_max + 1);
        for k in 0..=k_max {
            moments.push(powers.iter().fold(BigRational::zero(), |acc, p| acc + p));
            if k < k_max {
                for (p, (a, _)) in powers.iter_mut().zip(&pairs) {
                    *p *= a;
                }
            }
        }
        MomentSequence { moments }
    }

    /// Cauchy transform `G(ξ) = Σ w / (ξ − λ)`.
    pub fn cauchy(&self, xi: Complex64) -> Complex64 {
        self.atoms.iter().zip(&self.weights).map(|(&a, &w)| w / (xi - a)).sum()
    }

    pub fn stieltjes_density(&self, x: f64, t: f64) -> f64 {
        -self.cauchy(Complex64::new(x, t)).im / std::f64::consts::PI
    }

    /// Image measure under `λ ↦ λ²`.
    pub fn squared(&self, tol: f64) -> Result<Self> {
        Self::from_pairs(self.atoms.iter().zip(&self.weights).map(|(a, &w)| (a * a, w)).collect(), tol)
    }
}

/// Spectral measure `Σ (P_λ)_{rr} δ_λ` of `g` at `root`; its `k`-th moment is
/// `L_k`.
pub fn spectral_measure(g: &Graph, root: usize) -> Result<AtomicMeasure> {
    if root >= g.n() {
        return Err(Error::Contract(format!("root {root} out of range for {} vertices", g.n())));
    }
    let dec = eigen_sym(&g.adjacency().to_matrix(), None)?;
    let mut atoms = Vec::new();
    let mut weights = Vec::new();
    for (value, p) in dec.eigenvalues.iter().zip(&dec.projections) {
        let w = p[(root, root)];
        if w > WEIGHT_FLOOR {
            atoms.push(*value);
            weights.push(w);
        }
    }
    AtomicMeasure::new(atoms, weights)
}

/// Whether float moments round to the exact counts within `rel` relative error.
pub fn moments_match(measure: &AtomicMeasure, loops: &[BigInt], rel: f64) -> bool {
    loops.iter().enumerate().all(|(k, l)| {
        let exact = l.to_f64().unwrap_or(f64::INFINITY);
        let approx = measure.moment(k as u32);
        (approx - exact).abs() <= rel * exact.abs().max(1.0)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MomentOracle {
    /// `C_k = C(2k,k)/(k+1)`.
    Catalan,
    /// `C(2k,k)`.
    Central,
    /// `C(k, ⌊k/2⌋)`.
    Middle,
    /// Number of set partitions of `k` points.
    Bell,
}

impl MomentOracle {
    pub const ALL: [MomentOracle; 4] = [Self::Catalan, Self::Central, Self::Middle, Self::Bell];

    pub fn value(self, k: usize) -> BigInt {
        let k64 = k as u64;
        match self {
            Self::Catalan => binomial(2 * k64, k64) / (k64 + 1),
            Self::Central => binomial(2 * k64, k64),
            Self::Middle => binomial(k64, k64 / 2),
            Self::Bell => bell_numbers(k).pop().expect("nonempty"),
        }
    }

    pub fn sequence(self, k_max: usize) -> Vec<BigInt> {
        match self {
            Self::Bell => bell_numbers(k_max),
            _ => (0..=k_max).map(|k| self.value(k)).collect(),
        }
    }
}

impl FromStr for MomentOracle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "catalan" => Ok(Self::Catalan),
            "central" => Ok(Self::Central),
            "middle" => Ok(Self::Middle),
            "bell" => Ok(Self::Bell),
            _ => Err(Error::Parameter(format!("unknown moment oracle `{s}`"))),
        }
    }
}

/// `B_0, …, B_{k_max}` by the Bell triangle.
pub fn bell_numbers(k_max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for _ in 0..k_max {
        let mut next = vec![row.last().expect("nonempty").clone()];
        for x in &row {
            let v = next.last().expect("nonempty") + x;
            next.push(v);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

/// Moment sequence `M_0, M_1, …` with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentSequence {
    #[serde(serialize_with = "ser_rationals")]
    pub moments: Vec<BigRational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl MomentSequence {
    pub fn from_integers(values: &[BigInt]) -> Self {
        MomentSequence { moments: values.iter().map(|x| BigRational::from_integer(x.clone())).collect() }
    }

    pub fn from_i64(values: &[i64]) -> Self {
        MomentSequence { moments: values.iter().map(|&x| BigRational::from_integer(x.into())).collect() }
    }

    pub fn len(&self) -> usize {
        self.moments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.moments.first().is_some_and(One::is_one)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HankelReport {
    pub positive: bool,
    /// `det (M_{i+j})_{0≤i,j<n}` for `n = 1, 2, …`.
    #[serde(serialize_with = "ser_rationals")]
    pub minors: Vec<BigRational>,
    /// Size of the first negative minor.
    pub first_failure: Option<usize>,
}

/// Nested Hankel determinants of every size the sequence supports
/// (`2n − 1` moments for size `n`); positive iff none is negative.
pub fn hankel_positive(m: &MomentSequence) -> Result<HankelReport> {
    let sizes = m.len().div_ceil(2);
    let mut minors = Vec::with_capacity(sizes);
    let mut first_failure = None;
    for n in 1..=sizes {
        let h: Vec<Vec<BigRational>> = (0..n).map(|i| m.moments[i..i + n].to_vec()).collect();
        let det = det_rational(&h)?;
        if det.is_negative() && first_failure.is_none() {
            first_failure = Some(n);
        }
        minors.push(det);
    }
    Ok(HankelReport { positive: first_failure.is_none(), minors, first_failure })
}
