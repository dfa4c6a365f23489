//! Fixed-point statistics of `S_N` and character eigenvectors of circulant
//! graphs.

use gsym_core::exact::factorial;
use gsym_core::spectral::{circulant_symbol, root_of_unity};
use gsym_core::{Error, Graph, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

/// Largest `N` for the cycle-type moment sums.
pub const MOMENT_CAP: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct CharacterStats {
    pub n: usize,
    /// `Σ_{r=0}^{N} (−1)^r / r!`.
    #[serde(serialize_with = "ser_rat")]
    pub derangement_prob: BigRational,
    /// `(1/N!) Σ_σ fix(σ)^k` for `k = 0..=k_max`.
    #[serde(serialize_with = "ser_rats")]
    pub fixed_point_moments: Vec<BigRational>,
}

fn ser_rat<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_rats<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub fn derangement_probability(n: usize) -> BigRational {
    (0..=n).fold(BigRational::zero(), |acc, r| {
        let term = BigRational::new(BigInt::one(), factorial(r as u64));
        if r % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Calls `f` with the multiplicities `m[i]` (parts of size `i`) of every
/// partition of `n`.
fn partitions(n: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(rest: usize, max: usize, m: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if rest == 0 {
            f(m);
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            m[part] += 1;
            rec(rest - part, part, m, f);
            m[part] -= 1;
        }
    }
    let mut m = vec![0; n + 1];
    rec(n, n, &mut m, f);
}

/// Fixed-point moments summed over cycle types: the class with `m_i` cycles
/// of length `i` has relative size `1 / Π i^{m_i} m_i!`.
pub fn fixed_point_moments(n: usize, k_max: usize) -> Result<Vec<BigRational>> {
    if n > MOMENT_CAP {
        return Err(Error::Refused(format!("fixed-point moments capped at N = {MOMENT_CAP}")));
    }
    let mut moments = vec![BigRational::zero(); k_max + 1];
    partitions(n, &mut |m| {
        let denom = m
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigInt::one(), |acc, (i, &mi)| acc * BigInt::from(i).pow(mi as u32) * factorial(mi as u64));
        let weight = BigRational::new(BigInt::one(), denom);
        let fix = BigInt::from(m.get(1).copied().unwrap_or(0));
        let mut power = BigInt::one();
        for slot in moments.iter_mut() {
            *slot += &weight * BigRational::from_integer(power.clone());
            power *= &fix;
        }
    });
    Ok(moments)
}

pub fn character_stats(n: usize, k_max: usize) -> Result<CharacterStats> {
    Ok(CharacterStats {
        n,
        derangement_prob: derangement_probability(n),
        fixed_point_moments: fixed_point_moments(n, k_max)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterEigenvector {
    pub vector: Vec<(f64, f64)>,
    pub eigenvalue: (f64, f64),
    /// `max_i |(d f)_i − λ f_i|`.
    pub residual: f64,
}

/// `f_i = w^{ji}` and `λ = Σ_{s∈S} w^{js}` for a circulant graph with
/// connection set `S`, checked against `d f = λ f`.
pub fn character_eigenvector(g: &Graph, j: usize) -> Result<CharacterEigenvector> {
    let n = g.n();
    let d = g.adjacency().to_matrix();
    let symbol =
        circulant_symbol(&d).ok_or_else(|| Error::Contract("graph is not circulant in this labelling".into()))?;
    if j >= n {
        return Err(Error::Parameter(format!("character index {j} out of range for N = {n}")));
    }
    let f: Vec<Complex64> = (0..n).map(|i| root_of_unity(n, j * i)).collect();
    let lambda: Complex64 = symbol.support().into_iter().map(|s| root_of_unity(n, j * s)).sum();
    let adj = g.adjacency_lists();
    let residual =
        (0..n).map(|i| (adj[i].iter().map(|&k| f[k]).sum::<Complex64>() - lambda * f[i]).norm()).fold(0.0, f64::max);
    if residual > 1e-9 {
        return Err(Error::Contract(format!("character eigen-equation residual {residual:e}")));
    }
    Ok(CharacterEigenvector {
        vector: f.iter().map(|z| (z.re, z.im)).collect(),
        eigenvalue: (lambda.re, lambda.im),
        residual,
    })
}
