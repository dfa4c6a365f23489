//! Partial permutations preserving adjacency, their counts, and the
//! interval-component counting formulas for cycles.

use gsym_core::exact::{binomial, factorial};
use gsym_core::{Error, Graph, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

/// Largest `N` for enumerating partial automorphisms.
pub const ENUMERATION_CAP: usize = 6;
/// Largest `N` for counting subsets by cyclic interval components.
pub const COMPONENT_CAP: usize = 20;

/// Injective map from `domain` (sorted) to `images`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartialPerm {
    pub domain: Vec<usize>,
    pub images: Vec<usize>,
}

/// Partial permutations `σ` with `d_{ij} = d_{σ(i)σ(j)}` for all `i, j` in
/// the domain, for a possibly non-symmetric 0-1 relation `d`.
pub fn partial_automorphisms_of(d: &[Vec<bool>]) -> Result<Vec<PartialPerm>> {
    let n = d.len();
    if n > ENUMERATION_CAP {
        return Err(Error::Refused(format!("partial automorphism enumeration capped at N = {ENUMERATION_CAP}")));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let domain: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let mut images = Vec::with_capacity(domain.len());
        let mut used = vec![false; n];
        extend(d, &domain, &mut images, &mut used, &mut out);
    }
    Ok(out)
}

fn extend(d: &[Vec<bool>], domain: &[usize], images: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<PartialPerm>) {
    let k = images.len();
    if k == domain.len() {
        out.push(PartialPerm { domain: domain.to_vec(), images: images.clone() });
        return;
    }
    let a = domain[k];
    for w in 0..d.len() {
        if used[w] || d[a][a] != d[w][w] {
            continue;
        }
        let ok = (0..k).all(|t| d[domain[t]][a] == d[images[t]][w] && d[a][domain[t]] == d[w][images[t]]);
        if !ok {
            continue;
        }
        used[w] = true;
        images.push(w);
        extend(d, domain, images, used, out);
        images.pop();
        used[w] = false;
    }
}

pub fn partial_automorphisms(g: &Graph) -> Result<Vec<PartialPerm>> {
    let d: Vec<Vec<bool>> = (0..g.n()).map(|i| (0..g.n()).map(|j| g.has_edge(i, j)).collect()).collect();
    partial_automorphisms_of(&d)
}

/// Relation of the oriented cycle: `i → i + 1 mod N`.
pub fn oriented_cycle(n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|i| (0..n).map(|j| n > 1 && j == (i + 1) % n).collect()).collect()
}

/// `Σ_k k! C(N,k)²`.
pub fn count_partial_perms(n: usize) -> BigInt {
    let n64 = n as u64;
    (0..=n64).map(|k| factorial(k) * binomial(n64, k).pow(2)).sum()
}

/// `K_p(N)` for `p = 0..=N`: subsets of `ℤ_N` with `p` maximal cyclic
/// intervals (the whole circle counts as one).
pub fn interval_component_counts(n: usize) -> Result<Vec<BigInt>> {
    if n > COMPONENT_CAP {
        return Err(Error::Refused(format!("component counting capped at N = {COMPONENT_CAP}")));
    }
    let mut k = vec![BigInt::zero(); n + 1];
    for mask in 0u32..(1u32 << n) {
        let p = if mask == (1u32 << n) - 1 {
            1
        } else {
            (0..n).filter(|&i| mask >> i & 1 == 1 && mask >> ((i + n - 1) % n) & 1 == 0).count()
        };
        k[p] += 1;
    }
    Ok(k)
}

/// Evaluates `|ℤ̃_N| = 1 + N K_1(N) + Σ_{p=2}^{⌊N/2⌋} N^p K_p(N)` (oriented)
/// or `|D̃_N| = 1 + N K_1(N) + Σ_{p=2}^{⌊N/2⌋} (2N)^p K_p(N)`.
pub fn partial_counts_cycle(n: usize, oriented: bool) -> Result<BigInt> {
    let k = interval_component_counts(n)?;
    let c = BigInt::from(if oriented { n } else { 2 * n });
    let mut total = BigInt::from(1) + BigInt::from(n) * k.get(1).cloned().unwrap_or_default();
    for (p, kp) in k.iter().enumerate().take(n / 2 + 1).skip(2) {
        total += c.pow(p as u32) * kp;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gsym_core::GraphFamily;

    #[test]
    fn partial_perm_counts() {
        let counts: Vec<BigInt> = (0..=4).map(count_partial_perms).collect();
        assert_eq!(counts, [1, 2, 7, 34, 209].map(BigInt::from));
        for n in 0..=4 {
            let empty = Graph::empty(n);
            assert_eq!(BigInt::from(partial_automorphisms(&empty).unwrap().len()), count_partial_perms(n));
        }
    }

    #[test]
    fn component_counts() {
        let k = interval_component_counts(4).unwrap();
        assert_eq!(k, [1, 13, 2, 0, 0].map(BigInt::from));
        let k6 = interval_component_counts(6).unwrap();
        assert_eq!(k6.iter().sum::<BigInt>(), BigInt::from(64));
    }

    #[test]
    fn partial_automorphisms_preserve_relation() {
        let c5 = GraphFamily::C(5).build().unwrap();
        let all = partial_automorphisms(&c5).unwrap();
        for p in &all {
            for (a, &x) in p.domain.iter().zip(&p.images) {
                for (b, &y) in p.domain.iter().zip(&p.images) {
                    assert_eq!(c5.has_edge(*a, *b), c5.has_edge(x, y));
                }
            }
        }
        assert!(partial_automorphisms(&GraphFamily::C(7).build().unwrap()).is_err());
        assert_eq!(
            partial_automorphisms_of(&oriented_cycle(3)).unwrap().iter().filter(|p| p.domain.len() == 3).count(),
            3
        );
    }
}
