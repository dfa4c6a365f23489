//! Set partitions of `{0,…,k−1}`, the refinement order, joins in `P(k)` and
//! `NC(k)`, and the fattening bijection `NC(k) ≅ NC_2(2k)`.

use std::fmt;

use gsym_core::{Error, Result};
use serde::Serialize;

use crate::diagram::{enumerate_nc2, NCPairing};

/// Largest `k` accepted by the partition enumerators.
pub const PARTITION_CAP: usize = 10;

/// A partition stored as its restricted growth string: `labels[i]` is the
/// index of the block of `i`, blocks numbered by first element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    labels: Vec<usize>,
}

impl SetPartition {
    /// Canonicalises an arbitrary block labelling.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let labels = labels
            .iter()
            .map(|&l| match map.iter().find(|(from, _)| *from == l) {
                Some(&(_, to)) => to,
                None => {
                    map.push((l, map.len()));
                    map.len() - 1
                }
            })
            .collect();
        SetPartition { labels }
    }

    pub fn from_blocks(k: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; k];
        for (b, block) in blocks.iter().enumerate() {
            for &i in block {
                if i >= k || labels[i] != usize::MAX {
                    return Err(Error::Parameter(format!("point {i} misplaced in blocks")));
                }
                labels[i] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::Parameter("blocks do not cover all points".into()));
        }
        Ok(Self::from_labels(&labels))
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l].push(i);
        }
        out
    }

    /// `self ≤ other`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        self.k() == other.k()
            && (0..self.k())
                .all(|i| (0..i).all(|j| self.labels[i] != self.labels[j] || other.labels[i] == other.labels[j]))
    }

    fn crossing_blocks(&self) -> Option<(usize, usize)> {
        let l = &self.labels;
        let k = l.len();
        for a in 0..k {
            for b in a + 1..k {
                if l[a] == l[b] {
                    continue;
                }
                for c in b + 1..k {
                    if l[c] != l[a] {
                        continue;
                    }
                    if (c + 1..k).any(|d| l[d] == l[b]) {
                        return Some((l[a], l[b]));
                    }
                }
            }
        }
        None
    }

    pub fn is_noncrossing(&self) -> bool {
        self.crossing_blocks().is_none()
    }

    /// Join in `P(k)`: the finest partition coarser than both.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.k() != other.k() {
            return Err(Error::Contract("joined partitions differ in size".into()));
        }
        let k = self.k();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for part in [self, other] {
            for block in part.blocks() {
                for w in block.windows(2) {
                    let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let labels: Vec<usize> = (0..k).map(|i| find(&mut parent, i)).collect();
        Ok(Self::from_labels(&labels))
    }

    /// Join in `NC(k)`: the `P(k)` join with crossing blocks merged until
    /// none cross.
    pub fn nc_join(&self, other: &SetPartition) -> Result<SetPartition> {
        let mut j = self.join(other)?;
        while let Some((a, b)) = j.crossing_blocks() {
            let labels: Vec<usize> = j.labels.iter().map(|&l| if l == b { a } else { l }).collect();
            j = Self::from_labels(&labels);
        }
        Ok(j)
    }

    /// The partition with a single block.
    pub fn one_block(k: usize) -> Self {
        SetPartition { labels: vec![0; k] }
    }

    pub fn singletons(k: usize) -> Self {
        SetPartition { labels: (0..k).collect() }
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> =
            self.blocks().iter().map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{{{}}}", blocks.join("|"))
    }
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(s)
    }
}

fn check_cap(k: usize) -> Result<()> {
    if k > PARTITION_CAP {
        return Err(Error::Refused(format!("partition enumeration capped at k = {PARTITION_CAP}")));
    }
    Ok(())
}

/// `P(k)` ordered by decreasing block count, then by growth string. Under
/// this order the refinement matrix is upper triangular.
pub fn enumerate_partitions(k: usize) -> Result<Vec<SetPartition>> {
    check_cap(k)?;
    let mut out = Vec::new();
    let mut labels = Vec::with_capacity(k);
    fn rec(k: usize, labels: &mut Vec<usize>, max: usize, out: &mut Vec<SetPartition>) {
        if labels.len() == k {
            out.push(SetPartition { labels: labels.clone() });
            return;
        }
        for l in 0..=max {
            labels.push(l);
            rec(k, labels, max.max(l + 1), out);
            labels.pop();
        }
    }
    rec(k, &mut labels, 0, &mut out);
    out.sort_by(|a, b| b.block_count().cmp(&a.block_count()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `NC(k)` in the same order as [`enumerate_partitions`].
pub fn enumerate_nc(k: usize) -> Result<Vec<SetPartition>> {
    check_cap(k)?;
    let mut out: Vec<SetPartition> = enumerate_nc2(2 * k, 0)?.iter().map(shrink).collect::<Result<_>>()?;
    out.sort_by(|a, b| b.block_count().cmp(&a.block_count()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Doubles each point `i` into `2i, 2i+1` and each block into the string
/// running around its outside: `2b_j + 1` pairs with `2b_{j+1}` cyclically.
pub fn fatten(p: &SetPartition) -> Result<NCPairing> {
    if !p.is_noncrossing() {
        return Err(Error::Contract(format!("{p} is crossing")));
    }
    let mut pairs = Vec::with_capacity(p.k());
    for block in p.blocks() {
        for (j, &b) in block.iter().enumerate() {
            let next = block[(j + 1) % block.len()];
            pairs.push((2 * b + 1, 2 * next));
        }
    }
    NCPairing::from_pairs(2 * p.k(), 0, &pairs)
}

/// Inverse of [`fatten`]: collapses `2i, 2i+1` to `i`.
pub fn shrink(q: &NCPairing) -> Result<SetPartition> {
    if q.k_down() != 0 || q.k_up() % 2 == 1 {
        return Err(Error::Contract("shrinking needs a one-row pairing on an even number of points".into()));
    }
    let k = q.k_up() / 2;
    let mut labels: Vec<usize> = (0..k).collect();
    for i in 0..k {
        let j = q.mate(2 * i + 1) / 2;
        let (from, to) = (labels[i].max(labels[j]), labels[i].min(labels[j]));
        for l in labels.iter_mut() {
            if *l == from {
                *l = to;
            }
        }
    }
    Ok(SetPartition::from_labels(&labels))
}
