//! Temperley-Lieb diagram algebra: linear combinations of noncrossing
//! pairings, composed by stacking with each closed loop worth `δ`.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Neg, Sub};

use gsym_core::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::diagram::NCPairing;
use crate::laurent::LaurentPoly;

/// Exact coefficient ring of a diagram algebra.
pub trait Scalar: Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> {
    /// Coefficient conjugation used by the involution; the identity for the
    /// real rings provided here.
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl Scalar for BigRational {}
impl Scalar for LaurentPoly {}

fn pow<S: Scalar>(x: &S, e: usize) -> S {
    (0..e).fold(S::one(), |acc, _| acc * x.clone())
}

/// Stacks `a` above `b` (`a` lower row glued to `b` upper row). Returns the
/// resulting pairing and the number of closed loops.
pub fn compose_diagrams(a: &NCPairing, b: &NCPairing) -> Result<(NCPairing, usize)> {
    let (ua, m, lb) = (a.k_up(), a.k_down(), b.k_down());
    if b.k_up() != m {
        return Err(Error::Contract(format!("cannot stack {ua}:{m} over {}:{lb}", b.k_up())));
    }
    let mut seen = vec![false; m];
    // Walks from a boundary point; `on_a` says which diagram's matching to apply next.
    let mut walk = |mut on_a: bool, mut i: usize| -> usize {
        loop {
            if on_a {
                let p = a.mate(i);
                if p < ua {
                    return p;
                }
                seen[p - ua] = true;
                (on_a, i) = (false, p - ua);
            } else {
                let p = b.mate(i);
                if p >= m {
                    return ua + (p - m);
                }
                seen[p] = true;
                (on_a, i) = (true, ua + p);
            }
        }
    };
    let mut mate = vec![usize::MAX; ua + lb];
    for start in 0..ua + lb {
        if mate[start] != usize::MAX {
            continue;
        }
        let end = if start < ua { walk(true, start) } else { walk(false, m + start - ua) };
        mate[start] = end;
        mate[end] = start;
    }
    let mut loops = 0;
    for t in 0..m {
        if seen[t] {
            continue;
        }
        loops += 1;
        let mut cur = t;
        loop {
            seen[cur] = true;
            let down = a.mate(ua + cur) - ua;
            seen[down] = true;
            cur = b.mate(down);
            if cur == t {
                break;
            }
        }
    }
    Ok((NCPairing::from_mates(ua, lb, mate)?, loops))
}

/// Number of loops after joining upper point `i` to lower point `i`.
pub fn closure_loops(d: &NCPairing) -> Result<usize> {
    let k = d.k_up();
    if d.k_down() != k {
        return Err(Error::Contract("closure needs a square diagram".into()));
    }
    let mut seen = vec![false; 2 * k];
    let mut loops = 0;
    for start in 0..2 * k {
        if seen[start] {
            continue;
        }
        loops += 1;
        let mut cur = start;
        loop {
            seen[cur] = true;
            let p = d.mate(cur);
            seen[p] = true;
            cur = if p < k { p + k } else { p - k };
            if cur == start {
                break;
            }
        }
    }
    Ok(loops)
}

/// A finite linear combination of diagrams of one shape.
#[derive(Clone, Debug, PartialEq)]
pub struct TLElement<S: Scalar> {
    k_up: usize,
    k_down: usize,
    terms: BTreeMap<NCPairing, S>,
}

impl<S: Scalar> TLElement<S> {
    pub fn zero(k_up: usize, k_down: usize) -> Self {
        TLElement { k_up, k_down, terms: BTreeMap::new() }
    }

    pub fn diagram(d: NCPairing) -> Self {
        Self::term(d, S::one())
    }

    pub fn term(d: NCPairing, c: S) -> Self {
        let mut e = Self::zero(d.k_up(), d.k_down());
        e.add_term(d, c);
        e
    }

    pub fn identity(k: usize) -> Self {
        Self::diagram(NCPairing::identity(k))
    }

    /// The diagram `ε_i` in `TL(k)`, `1 ≤ i < k`.
    pub fn generator(k: usize, i: usize) -> Result<Self> {
        Ok(Self::diagram(NCPairing::cap_cup(k, i)?))
    }

    fn add_term(&mut self, d: NCPairing, c: S) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d);
        match slot {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.k_up, self.k_down)
    }

    pub fn terms(&self) -> &BTreeMap<NCPairing, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &NCPairing) -> S {
        self.terms.get(d).cloned().unwrap_or_else(S::zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.k_up, self.k_down);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Contract("added elements differ in shape".into()));
        }
        let mut out = self.clone();
        for (d, x) in &other.terms {
            out.add_term(d.clone(), x.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    /// `self` stacked above `other`, closed loops valued `delta`.
    pub fn compose(&self, other: &Self, delta: &S) -> Result<Self> {
        if self.k_down != other.k_up {
            return Err(Error::Contract(format!(
                "cannot compose {}:{} with {}:{}",
                self.k_up, self.k_down, other.k_up, other.k_down
            )));
        }
        let mut out = Self::zero(self.k_up, other.k_down);
        let mut powers: Vec<S> = vec![S::one()];
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (d, loops) = compose_diagrams(a, b)?;
                while powers.len() <= loops {
                    let next = powers.last().expect("nonempty").clone() * delta.clone();
                    powers.push(next);
                }
                out.add_term(d, x.clone() * y.clone() * powers[loops].clone());
            }
        }
        Ok(out)
    }

    /// Side by side, `self` on the left.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let (ua, la, ub, lb) = (self.k_up, self.k_down, other.k_up, other.k_down);
        let (up, down) = (ua + ub, la + lb);
        let mut out = Self::zero(up, down);
        let map_a = |i: usize| if i < ua { i } else { up + (i - ua) };
        let map_b = |i: usize| if i < ub { ua + i } else { up + la + (i - ub) };
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut mate = vec![0; up + down];
                for i in 0..a.points() {
                    mate[map_a(i)] = map_a(a.mate(i));
                }
                for i in 0..b.points() {
                    mate[map_b(i)] = map_b(b.mate(i));
                }
                out.add_term(NCPairing::from_mates(up, down, mate)?, x.clone() * y.clone());
            }
        }
        Ok(out)
    }

    /// Flips every diagram upside down and conjugates coefficients.
    pub fn involution(&self) -> Self {
        let (up, down) = (self.k_down, self.k_up);
        let flip = |i: usize| if i < self.k_up { up + i } else { i - self.k_up };
        let mut out = Self::zero(up, down);
        for (d, x) in &self.terms {
            let mut mate = vec![0; up + down];
            for i in 0..d.points() {
                mate[flip(i)] = flip(d.mate(i));
            }
            let flipped = NCPairing::from_mates(up, down, mate).expect("reflection preserves planarity");
            out.add_term(flipped, x.conj());
        }
        out
    }

    /// `Σ c_D δ^{loops(closure D)}`, the unnormalised closure.
    pub fn closed_trace(&self, delta: &S) -> Result<S> {
        let mut total = S::zero();
        for (d, x) in &self.terms {
            total = total + x.clone() * pow(delta, closure_loops(d)?);
        }
        Ok(total)
    }
}

impl TLElement<BigRational> {
    /// Markov trace `Σ c_D N^{loops − k}`, normalised so the identity has
    /// trace 1.
    pub fn markov_trace(&self, n: &BigRational) -> Result<BigRational> {
        if n.is_zero() {
            return Err(Error::Parameter("loop value must be nonzero".into()));
        }
        let k = self.k_up as i32;
        let mut total = BigRational::zero();
        for (d, x) in &self.terms {
            let loops = closure_loops(d)? as i32;
            total += x * num_traits::pow::Pow::pow(n, loops - k);
        }
        Ok(total)
    }
}

impl<S: Scalar + Serialize> Serialize for TLElement<S> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (d, x) in &self.terms {
            seq.serialize_element(&(d, x))?;
        }
        seq.end()
    }
}
