//! Labelled trees, the Prüfer bijection and Cayley counting.

use std::collections::BTreeSet;

use gsym_core::exact::factorial;
use gsym_core::{Error, Graph, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

/// Largest vertex count for exhaustive tree listing.
pub const LISTING_CAP: usize = 7;

/// Tree on vertices `0..n`, edges stored as sorted pairs `(a, b)` with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabeledTree {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl LabeledTree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let g = Graph::new(n, edges)?;
        Self::from_graph(&g)
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::Contract("a tree needs at least one vertex".into()));
        }
        if g.edge_count() != g.n() - 1 || !g.is_connected() {
            return Err(Error::Contract(format!(
                "not a tree: {} vertices, {} edges, {} components",
                g.n(),
                g.edge_count(),
                g.components().len()
            )));
        }
        Ok(LabeledTree { n: g.n(), edges: g.edges().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("validated")
    }

    pub fn valences(&self) -> Vec<usize> {
        let mut v = vec![0; self.n];
        for &(a, b) in &self.edges {
            v[a] += 1;
            v[b] += 1;
        }
        v
    }
}

/// Prüfer sequence of a tree on `n ≥ 2` vertices: `n − 2` labels in `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PruferSeq {
    n: usize,
    values: Vec<usize>,
}

impl PruferSeq {
    pub fn new(n: usize, values: Vec<usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parameter("Prüfer sequences need n >= 2".into()));
        }
        if values.len() != n - 2 {
            return Err(Error::Parameter(format!("sequence for n = {n} must have length {}", n - 2)));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= n) {
            return Err(Error::Parameter(format!("label {v} out of range for n = {n}")));
        }
        Ok(PruferSeq { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// Repeatedly removes the smallest leaf and records its neighbour, until two
/// vertices remain.
pub fn prufer_encode(t: &LabeledTree) -> Result<PruferSeq> {
    if t.n < 2 {
        return Err(Error::Contract("Prüfer encoding needs n >= 2".into()));
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); t.n];
    for &(a, b) in &t.edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut leaves: BTreeSet<usize> = (0..t.n).filter(|&v| adj[v].len() == 1).collect();
    let mut values = Vec::with_capacity(t.n - 2);
    for _ in 0..t.n - 2 {
        let leaf = leaves.pop_first().expect("a tree with >= 3 vertices has a leaf");
        let nb = *adj[leaf].first().expect("leaf has a neighbour");
        values.push(nb);
        adj[nb].remove(&leaf);
        adj[leaf].clear();
        if adj[nb].len() == 1 {
            leaves.insert(nb);
        }
    }
    PruferSeq::new(t.n, values)
}

/// Gives vertex `i` valence `1 + (occurrences of i)`, joins each entry to the
/// smallest vertex of valence 1, and finally joins the last two.
pub fn prufer_decode(s: &PruferSeq) -> LabeledTree {
    let mut valence = vec![1usize; s.n];
    for &a in &s.values {
        valence[a] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..s.n).filter(|&v| valence[v] == 1).collect();
    let mut edges = Vec::with_capacity(s.n - 1);
    for &a in &s.values {
        let j = leaves.pop_first().expect("a valence-1 vertex exists");
        edges.push((a.min(j), a.max(j)));
        valence[j] = 0;
        valence[a] -= 1;
        if valence[a] == 1 {
            leaves.insert(a);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges.sort_unstable();
    LabeledTree { n: s.n, edges }
}

/// Cayley's count `n^{n−2}` of labelled trees (1 for `n ≤ 2`).
pub fn count_labeled_trees(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Parameter("need n >= 1".into()));
    }
    Ok(if n <= 2 { BigInt::one() } else { BigInt::from(n).pow((n - 2) as u32) })
}

/// Number of labelled trees with valences `v`: the multinomial
/// `(n − 2)! / Π (v_i − 1)!`.
pub fn count_with_valences(v: &[usize]) -> Result<BigInt> {
    let n = v.len();
    if n == 1 && v[0] == 0 {
        return Ok(BigInt::one());
    }
    if n < 2 || v.contains(&0) || v.iter().map(|x| x - 1).sum::<usize>() != n - 2 {
        return Err(Error::Contract("valences must be >= 1 with sum of (v_i - 1) equal to n - 2".into()));
    }
    let denom = v.iter().fold(BigInt::one(), |acc, &x| acc * factorial((x - 1) as u64));
    Ok(factorial((n - 2) as u64) / denom)
}

/// Streams every labelled tree on `n ≤ 7` vertices to `sink`, by testing all
/// `(n − 1)`-subsets of the edges of `K_n`; returns the count.
pub fn enumerate_labeled_trees(n: usize, mut sink: impl FnMut(&LabeledTree)) -> Result<usize> {
    if n == 0 {
        return Err(Error::Parameter("need n >= 1".into()));
    }
    if n > LISTING_CAP {
        return Err(Error::Refused(format!("tree listing capped at n = {LISTING_CAP}")));
    }
    let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut chosen = Vec::with_capacity(n - 1);
    let mut count = 0;
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    fn rec(
        n: usize,
        all: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        count: &mut usize,
        sink: &mut dyn FnMut(&LabeledTree),
    ) {
        if chosen.len() == n - 1 {
            let mut p: Vec<usize> = (0..n).collect();
            for &(a, b) in chosen.iter() {
                let (ra, rb) = (find(&mut p, a), find(&mut p, b));
                if ra == rb {
                    return;
                }
                p[ra] = rb;
            }
            *count += 1;
            sink(&LabeledTree { n, edges: chosen.clone() });
            return;
        }
        let need = n - 1 - chosen.len();
        for i in start..=all.len().saturating_sub(need) {
            if i >= all.len() {
                break;
            }
            chosen.push(all[i]);
            rec(n, all, i + 1, chosen, count, sink);
            chosen.pop();
        }
    }
    rec(n, &all, 0, &mut chosen, &mut count, &mut sink);
    Ok(count)
}

/// Collects [`enumerate_labeled_trees`] into a list.
pub fn labeled_trees(n: usize) -> Result<Vec<LabeledTree>> {
    let mut out = Vec::new();
    enumerate_labeled_trees(n, |t| out.push(t.clone()))?;
    Ok(out)
}

/// Every sequence in `0..n` of length `n − 2`, in lexicographic order.
pub fn all_prufer_sequences(n: usize) -> Result<Vec<PruferSeq>> {
    if !(2..=LISTING_CAP).contains(&n) {
        return Err(Error::Refused(format!("sequence listing needs 2 <= n <= {LISTING_CAP}")));
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut code| {
            let mut values = vec![0; len];
            for slot in values.iter_mut().rev() {
                *slot = code % n;
                code /= n;
            }
            PruferSeq::new(n, values)
        })
        .collect()
}
