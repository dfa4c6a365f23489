//! Circulant type data `(N, S, E, k)` and the 2-maximality certificate for
//! prime-order circulant graphs.

use std::collections::BTreeSet;

use gsym_core::spectral::circulant_symbol;
use gsym_core::{Error, Graph, Result};
use gsym_symmetry::automorphism_group;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::flags::{QFlag, Verdict};

/// Largest vertex count for which circulant presentations are searched
/// among relabellings; above it only the identity labelling is tried.
pub const RELABEL_CAP: usize = 11;

/// Automorphism groups larger than this are not listed when looking for
/// regular cyclic subgroups.
const GROUP_LISTING_CAP: usize = 1_000_000;

/// A circulant graph on `ℤ_N` with connection set `S` and the group
/// `E = {g ∈ ℤ_N^* : gS = S}` of type `k = |E|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CirculantData {
    pub n: usize,
    pub s: Vec<usize>,
    pub e: Vec<usize>,
    pub k: usize,
}

/// Data of a certified circulant presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub p: usize,
    pub s: Vec<usize>,
    pub e: Vec<usize>,
    pub k: usize,
    pub two_maximal: bool,
    /// Whether `p > 6^φ(k)`, the sufficient bound for 2-maximality.
    pub bound_holds: bool,
    /// Residue assigned to each vertex.
    pub labelling: Vec<usize>,
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn units(n: usize) -> Vec<usize> {
    (0..n).filter(|&u| u.gcd(&n) == 1).collect()
}

fn data_from_set(n: usize, s: Vec<usize>) -> CirculantData {
    let set: BTreeSet<usize> = s.iter().copied().collect();
    let e: Vec<usize> = units(n).into_iter().filter(|&g| s.iter().all(|&x| set.contains(&(g * x % n)))).collect();
    CirculantData { n, k: e.len(), s, e }
}

fn connection_set(g: &Graph) -> Option<Vec<usize>> {
    let symbol = circulant_symbol(&g.adjacency().to_matrix())?;
    Some(symbol.support())
}

/// Present iff `g` is circulant under the identity labelling.
pub fn circulant_data(g: &Graph) -> Option<CirculantData> {
    if g.n() == 0 {
        return None;
    }
    connection_set(g).map(|s| data_from_set(g.n(), s))
}

/// Circulant presentations of `g` as `(labelling, data)` pairs, distinct by
/// connection set. The identity labelling comes first when it works; up to
/// [`RELABEL_CAP`] vertices every automorphism that is a full `N`-cycle
/// yields a labelling along the cycle.
pub fn circulant_presentations(g: &Graph) -> Result<Vec<(Vec<usize>, CirculantData)>> {
    let n = g.n();
    let mut out: Vec<(Vec<usize>, CirculantData)> = Vec::new();
    if let Some(d) = circulant_data(g) {
        out.push(((0..n).collect(), d));
    }
    if n == 0 || n > RELABEL_CAP {
        return Ok(out);
    }
    let group = automorphism_group(g)?;
    if group.order.to_usize().is_none_or(|o| o > GROUP_LISTING_CAP) {
        return Ok(out);
    }
    for sigma in group.elements()? {
        let mut label = vec![usize::MAX; n];
        let mut v = 0;
        for i in 0..n {
            if label[v] != usize::MAX {
                break;
            }
            label[v] = i;
            v = sigma.apply(v);
        }
        if label.contains(&usize::MAX) {
            continue;
        }
        let h = g.relabel(&label)?;
        if let Some(s) = connection_set(&h) {
            if out.iter().all(|(_, d)| d.s != s) {
                out.push((label, data_from_set(n, s)));
            }
        }
    }
    Ok(out)
}

/// Even subgroups of `ℤ_p^*`, one per even divisor of `p − 1`, each sorted.
pub fn even_subgroups(p: usize) -> Result<Vec<Vec<usize>>> {
    if !is_prime(p) || p < 3 {
        return Err(Error::Contract(format!("{p} is not an odd prime")));
    }
    let order = |x: usize| {
        let mut y = x;
        let mut k = 1;
        while y != 1 {
            y = y * x % p;
            k += 1;
        }
        k
    };
    let root = (2..p).find(|&x| order(x) == p - 1).unwrap_or(1);
    let mut out = Vec::new();
    for k in (2..=p - 1).step_by(2).filter(|k| (p - 1).is_multiple_of(*k)) {
        let step = (p - 1) / k;
        let mut h = 1;
        for _ in 0..step {
            h = h * root % p;
        }
        let mut e: Vec<usize> = std::iter::successors(Some(1), |&x| Some(x * h % p)).take(k).collect();
        e.sort_unstable();
        out.push(e);
    }
    Ok(out)
}

/// Exhaustive check that `a − b = 2(c − d)` over `E` forces `a = ±b`.
pub fn two_maximal(e: &[usize], p: usize) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::Contract(format!("{p} is not prime")));
    }
    let set: BTreeSet<usize> = e.iter().map(|x| x % p).collect();
    let closed = set.iter().all(|&a| set.iter().all(|&b| set.contains(&(a * b % p))));
    if set.is_empty() || set.contains(&0) || !closed || !set.contains(&(p - 1)) {
        return Err(Error::Contract("E must be a subgroup of Z_p^* containing -1".into()));
    }
    for &a in &set {
        for &b in &set {
            if a == b || (a + b) % p == 0 {
                continue;
            }
            let lhs = (a + p - b) % p;
            for &c in &set {
                for &d in &set {
                    if lhs == 2 * (c + p - d) % p {
                        return Ok(false);
                    }
                }
            }
        }
    }
    debug_assert!(!set.contains(&(2 % p)) && !set.contains(&(3 % p)));
    Ok(true)
}

fn totient(n: usize) -> usize {
    units(n).len()
}

fn bound_holds(p: usize, k: usize) -> bool {
    u32::try_from(totient(k)).ok().and_then(|e| 6u128.checked_pow(e)).is_some_and(|b| (p as u128) > b)
}

/// NoQuantum when `g` has a circulant presentation on a prime `p ≥ 5` with
/// 2-maximal `E`; otherwise Unknown.
pub fn no_quantum_cert_circulant(g: &Graph) -> QFlag {
    const RULE: &str = "circulant-2-maximal";
    let p = g.n();
    if !is_prime(p) || p < 5 {
        return QFlag::unknown(RULE, format!("vertex count {p} is not a prime at least 5"));
    }
    let presentations = match circulant_presentations(g) {
        Ok(v) => v,
        Err(err) => return QFlag::unknown(RULE, format!("circulant search failed: {err}")),
    };
    let Some(first) = presentations.first().map(|(_, d)| d.clone()) else {
        return QFlag::unknown(RULE, "no circulant presentation found".to_string());
    };
    for (labelling, d) in presentations {
        if two_maximal(&d.e, p) == Ok(true) {
            let cert = Certificate {
                p,
                bound_holds: bound_holds(p, d.k),
                s: d.s,
                e: d.e,
                k: d.k,
                two_maximal: true,
                labelling,
            };
            return QFlag {
                verdict: Verdict::NoQuantum,
                rule: RULE.into(),
                reason: format!("circulant on Z_{p} with 2-maximal E = {:?} of type {}", cert.e, cert.k),
                certificate: Some(cert),
            };
        }
    }
    QFlag::unknown(RULE, format!("E = {:?} in Z_{p} is not 2-maximal", first.e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gsym_core::GraphFamily;

    fn graph(s: &str) -> Graph {
        s.parse::<GraphFamily>().unwrap().build().unwrap()
    }

    #[test]
    fn type_data() {
        for n in 3..=12 {
            let c = circulant_data(&graph(&format!("c{n}"))).unwrap();
            assert_eq!((c.s.clone(), c.e.clone(), c.k), (vec![1, n - 1], vec![1, n - 1], 2));
            let k = circulant_data(&graph(&format!("k{n}"))).unwrap();
            assert_eq!(k.s, (1..n).collect::<Vec<_>>());
            assert_eq!(k.k, totient(n));
        }
        assert!(circulant_data(&graph("petersen")).is_none());
        let c11 = circulant_data(&graph("chord:11,2")).unwrap();
        assert_eq!(c11.s, vec![1, 2, 9, 10]);
        assert_eq!(c11.e, vec![1, 10]);
    }

    #[test]
    fn two_maximal_examples() {
        assert!(two_maximal(&[1, 6], 7).unwrap());
        assert!(two_maximal(&[1, 4], 5).unwrap());
        assert!(!two_maximal(&[1, 2, 3, 4], 5).unwrap());
        assert!(matches!(two_maximal(&[1, 5], 6), Err(Error::Contract(_))));
        assert!(two_maximal(&[1, 2], 7).is_err());
    }

    #[test]
    fn two_maximal_excludes_two_and_three() {
        for p in (5..=97).filter(|&p| is_prime(p)) {
            for e in even_subgroups(p).unwrap() {
                assert_eq!(e.len() % 2, 0);
                if two_maximal(&e, p).unwrap() {
                    assert!(!e.contains(&2) && !e.contains(&3), "p={p} E={e:?}");
                }
                if bound_holds(p, e.len()) {
                    assert!(two_maximal(&e, p).unwrap(), "bound without 2-maximality at p={p} E={e:?}");
                }
            }
        }
    }

    #[test]
    fn certificates() {
        for p in [5, 7, 11, 13] {
            let f = no_quantum_cert_circulant(&graph(&format!("c{p}")));
            assert_eq!(f.verdict, Verdict::NoQuantum, "C{p}");
            let c = f.certificate.unwrap();
            assert_eq!((c.p, c.k, c.e), (p, 2, vec![1, p - 1]));
            assert_eq!(c.bound_holds, p > 6);
        }
        let k5 = no_quantum_cert_circulant(&graph("k5"));
        assert_eq!(k5.verdict, Verdict::Unknown);
        assert!(k5.certificate.is_none());
        assert_eq!(no_quantum_cert_circulant(&graph("c9")).verdict, Verdict::Unknown);
    }

    #[test]
    fn relabelled_cycle_is_found() {
        let g = graph("c7").relabel(&[3, 0, 5, 1, 6, 2, 4]).unwrap();
        assert!(circulant_data(&g).is_none());
        let f = no_quantum_cert_circulant(&g);
        assert_eq!(f.verdict, Verdict::NoQuantum);
        let label = f.certificate.unwrap().labelling;
        assert!(circulant_data(&g.relabel(&label).unwrap()).is_some());
    }
}
