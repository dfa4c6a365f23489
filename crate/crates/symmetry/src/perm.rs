//! Permutations and permutation groups given by generators.

use std::collections::{HashSet, VecDeque};

use gsym_core::{Error, Graph, Matrix, Result};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// Groups up to this order can be listed element by element.
pub const LISTING_CAP: usize = 10_000_000;

/// Bijection of `0..n`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parameter(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Permutation with the given cycles, e.g. `[[0, 1, 2]]` for `0→1→2→0`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                if a >= n {
                    return Err(Error::Parameter(format!("point {a} out of range")));
                }
                images[a] = c[(k + 1) % c.len()];
            }
        }
        Perm::new(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &j)| i == j).count()
    }

    /// Whether `i ~ j ⇔ σ(i) ~ σ(j)` for all pairs.
    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.n() == g.n() && g.edges().all(|(i, j)| g.has_edge(self.images[i], self.images[j]))
    }

    /// Permutation matrix with `P e_i = e_{σ(i)}`.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_fn(self.n(), self.n(), |i, j| f64::from(u8::from(self.images[j] == i)))
    }
}

/// Permutation group on `0..n` given by generators, with its exact order.
#[derive(Clone, Debug, Serialize)]
pub struct PermGroup {
    pub n: usize,
    pub generators: Vec<Perm>,
    #[serde(serialize_with = "ser_big")]
    pub order: BigInt,
}

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl PermGroup {
    /// Group generated by `generators`; the order is found by listing, so it
    /// must not exceed [`LISTING_CAP`].
    pub fn from_generators(n: usize, generators: Vec<Perm>) -> Result<Self> {
        if generators.iter().any(|g| g.n() != n) {
            return Err(Error::Parameter("generator degree mismatch".into()));
        }
        let order = BigInt::from(close(n, &generators)?.len());
        Ok(PermGroup { n, generators, order })
    }

    pub(crate) fn with_order(n: usize, generators: Vec<Perm>, order: BigInt) -> Self {
        PermGroup { n, generators, order }
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup { n, generators: Vec::new(), order: BigInt::from(1) }
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![0, 1]])?);
        }
        if n >= 3 {
            gens.push(Perm::from_cycles(n, &[(0..n).collect()])?);
        }
        Ok(PermGroup { n, generators: gens, order: gsym_core::exact::factorial(n as u64) })
    }

    /// Every element, by breadth-first closure.
    pub fn elements(&self) -> Result<Vec<Perm>> {
        if self.order.to_usize().is_none_or(|o| o > LISTING_CAP) {
            return Err(Error::Refused(format!("listing capped at {LISTING_CAP} elements")));
        }
        close(self.n, &self.generators)
    }
}

fn close(n: usize, generators: &[Perm]) -> Result<Vec<Perm>> {
    let id = Perm::identity(n);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    let mut out = Vec::new();
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = g.compose(&p);
            if seen.insert(q.clone()) {
                if seen.len() > LISTING_CAP {
                    return Err(Error::Refused(format!("listing capped at {LISTING_CAP} elements")));
                }
                queue.push_back(q);
            }
        }
        out.push(p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let p = Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(p.images(), &[1, 2, 3, 0]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).images(), &[2, 3, 0, 1]);
        assert!(Perm::new(vec![0, 0]).is_err());
        let m = p.to_matrix();
        assert_eq!(m.mul_vec(&[1.0, 0.0, 0.0, 0.0]), vec![0.0, 1.0, 0.0, 0.0]);
    }

    #[test]
    fn group_orders() {
        for n in 1..=6 {
            let s = PermGroup::symmetric(n).unwrap();
            assert_eq!(BigInt::from(s.elements().unwrap().len()), s.order);
        }
        let c4 = PermGroup::from_generators(4, vec![Perm::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap()]).unwrap();
        assert_eq!(c4.order, BigInt::from(4));
    }
}
