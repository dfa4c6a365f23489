//! Noncrossing pairings between an upper row of `k_up` points and a lower
//! row of `k_down` points.

use std::fmt;

use gsym_core::{Error, Result};
use serde::Serialize;

/// Largest total point count accepted by [`enumerate_nc2`].
pub const NC2_POINT_CAP: usize = 20;

/// A planar perfect matching. Points are indexed by rows: upper points
/// `0..k_up` left to right, then lower points `k_up..k_up + k_down` left to
/// right. The canonical boundary order used for planarity runs clockwise
/// from the top left: the upper row left to right, then the lower row right
/// to left.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NCPairing {
    k_up: usize,
    k_down: usize,
    mate: Vec<usize>,
}

impl NCPairing {
    /// Builds a pairing from row-indexed pairs, checking that it is a
    /// perfect matching without crossings.
    pub fn from_pairs(k_up: usize, k_down: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = k_up + k_down;
        let mut mate = vec![usize::MAX; n];
        for &(a, b) in pairs {
            if a >= n || b >= n || a == b || mate[a] != usize::MAX || mate[b] != usize::MAX {
                return Err(Error::Parameter(format!("bad pair ({a}, {b})")));
            }
            mate[a] = b;
            mate[b] = a;
        }
        if mate.contains(&usize::MAX) {
            return Err(Error::Parameter("pairing leaves points unmatched".into()));
        }
        Self::from_mates(k_up, k_down, mate)
    }

    pub(crate) fn from_mates(k_up: usize, k_down: usize, mate: Vec<usize>) -> Result<Self> {
        let p = NCPairing { k_up, k_down, mate };
        if !p.is_noncrossing() {
            return Err(Error::Contract("pairing is crossing".into()));
        }
        Ok(p)
    }

    /// Identity diagram on `k` strands.
    pub fn identity(k: usize) -> Self {
        let mate = (0..2 * k).map(|i| if i < k { i + k } else { i - k }).collect();
        NCPairing { k_up: k, k_down: k, mate }
    }

    /// The cap-cup `ε_i` joining points `i−1, i` in each row, `1 ≤ i < k`.
    pub fn cap_cup(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(Error::Parameter(format!("generator index {i} outside 1..{k}")));
        }
        let mut p = Self::identity(k);
        let (a, b) = (i - 1, i);
        p.mate[a] = b;
        p.mate[b] = a;
        p.mate[k + a] = k + b;
        p.mate[k + b] = k + a;
        Ok(p)
    }

    pub fn k_up(&self) -> usize {
        self.k_up
    }

    pub fn k_down(&self) -> usize {
        self.k_down
    }

    pub fn points(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, i: usize) -> usize {
        self.mate[i]
    }

    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    /// Boundary position of a row-indexed point.
    pub fn clockwise(&self, i: usize) -> usize {
        if i < self.k_up {
            i
        } else {
            self.k_up + (self.k_up + self.k_down - 1 - i)
        }
    }

    fn from_clockwise(k_up: usize, k_down: usize, p: usize) -> usize {
        if p < k_up {
            p
        } else {
            k_up + (k_up + k_down - 1 - p)
        }
    }

    /// Pairs over clockwise boundary positions, each sorted, in order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.points())
            .map(|i| {
                let (a, b) = (self.clockwise(i), self.clockwise(self.mate[i]));
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn is_noncrossing(&self) -> bool {
        let pairs = self.pairs();
        pairs.iter().all(|&(a, b)| pairs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Number of strings joining the two rows.
    pub fn through_strings(&self) -> usize {
        (0..self.k_up).filter(|&i| self.mate[i] >= self.k_up).count()
    }
}

impl fmt::Display for NCPairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.pairs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{}:{}[{}]", self.k_up, self.k_down, pairs.join(" "))
    }
}

impl Serialize for NCPairing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All noncrossing pairings of the given shape, in lexicographic order of
/// their clockwise pair lists.
pub fn enumerate_nc2(k_up: usize, k_down: usize) -> Result<Vec<NCPairing>> {
    let n = k_up + k_down;
    if n > NC2_POINT_CAP {
        return Err(Error::Refused(format!("pairing enumeration capped at {NC2_POINT_CAP} points")));
    }
    if n % 2 == 1 {
        return Ok(Vec::new());
    }
    fn all(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in (lo + 1..hi).step_by(2) {
            let outer = all(j + 1, hi);
            for inner in all(lo + 1, j) {
                for rest in &outer {
                    let mut v = vec![(lo, j)];
                    v.extend_from_slice(&inner);
                    v.extend_from_slice(rest);
                    out.push(v);
                }
            }
        }
        out
    }
    all(0, n)
        .into_iter()
        .map(|pairs| {
            let mut mate = vec![0; n];
            for (a, b) in pairs {
                let (a, b) = (NCPairing::from_clockwise(k_up, k_down, a), NCPairing::from_clockwise(k_up, k_down, b));
                mate[a] = b;
                mate[b] = a;
            }
            NCPairing::from_mates(k_up, k_down, mate)
        })
        .collect()
}
