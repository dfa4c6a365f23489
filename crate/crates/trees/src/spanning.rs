//! Spanning-tree counts: exact cofactor determinants, the Laplacian
//! eigenvalue product, the circulant closed form, and a deletion-contraction
//! oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use gsym_core::exact::det_i64;
use gsym_core::spectral::{circulant_symbol, eigen_sym, fourier_eigenvalues, laplacian, laplacian_i64};
use gsym_core::{Error, Graph, Result};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// Largest edge count accepted by the deletion-contraction oracle.
pub const DELETION_CONTRACTION_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpanningMethod {
    Cofactor,
    Spectral,
    Circulant,
    DeletionContraction,
}

impl FromStr for SpanningMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cofactor" => Ok(Self::Cofactor),
            "spectral" => Ok(Self::Spectral),
            "circulant" => Ok(Self::Circulant),
            "deletion-contraction" | "dc" => Ok(Self::DeletionContraction),
            _ => Err(Error::Parameter(format!("unknown spanning-tree method `{s}`"))),
        }
    }
}

impl fmt::Display for SpanningMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Cofactor => "cofactor",
            Self::Spectral => "spectral",
            Self::Circulant => "circulant",
            Self::DeletionContraction => "deletion-contraction",
        })
    }
}

/// A spanning-tree count with the method that produced it. Exact methods
/// fill `exact`; float methods leave it empty.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpanningCount {
    pub method: SpanningMethod,
    #[serde(serialize_with = "ser_big")]
    pub exact: Option<BigInt>,
    pub value: f64,
}

fn ser_big<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

impl SpanningCount {
    fn exact(method: SpanningMethod, n: BigInt) -> Self {
        SpanningCount { method, value: n.to_f64().unwrap_or(f64::INFINITY), exact: Some(n) }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::Contract("spanning trees need at least one vertex".into()));
    }
    if !g.is_connected() {
        return Err(Error::Contract(format!(
            "graph has {} components, so it has no spanning tree",
            g.components().len()
        )));
    }
    Ok(())
}

pub fn spanning_tree_count(g: &Graph, method: SpanningMethod) -> Result<SpanningCount> {
    require_connected(g)?;
    match method {
        SpanningMethod::Cofactor => Ok(SpanningCount::exact(method, cofactor(g, 0, 0)?)),
        SpanningMethod::DeletionContraction => Ok(SpanningCount::exact(method, deletion_contraction(g)?)),
        SpanningMethod::Spectral => {
            let dec = eigen_sym(&laplacian(g), None)?;
            let product: f64 = dec
                .eigenvalues
                .iter()
                .zip(&dec.multiplicities)
                .filter(|(l, _)| **l > dec.tol)
                .map(|(l, &m)| l.powi(m as i32))
                .product();
            Ok(SpanningCount { method, exact: None, value: product / g.n() as f64 })
        }
        SpanningMethod::Circulant => {
            let symbol = circulant_symbol(&g.adjacency().to_matrix())
                .ok_or_else(|| Error::Contract("adjacency matrix is not circulant in this labelling".into()))?;
            let k: f64 = symbol.gamma.iter().sum();
            let product: f64 = fourier_eigenvalues(&symbol).iter().skip(1).map(|mu| k - mu.re).product();
            Ok(SpanningCount { method, exact: None, value: product / g.n() as f64 })
        }
    }
}

/// Signed cofactor `(−1)^{i+j} det L^{(i,j)}` of the Laplacian.
pub fn cofactor(g: &Graph, i: usize, j: usize) -> Result<BigInt> {
    if i >= g.n() || j >= g.n() {
        return Err(Error::Parameter(format!("cofactor index out of range for n = {}", g.n())));
    }
    let l = laplacian_i64(g);
    let minor: Vec<Vec<i64>> =
        (0..g.n()).filter(|&r| r != i).map(|r| (0..g.n()).filter(|&c| c != j).map(|c| l[r][c]).collect()).collect();
    let d = det_i64(&minor)?;
    Ok(if (i + j).is_multiple_of(2) { d } else { -d })
}

/// Multigraph on `0..n` as a map from `(a, b)`, `a < b`, to multiplicity.
type Multigraph = BTreeMap<(usize, usize), u64>;

fn connected(n: usize, edges: &Multigraph) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges.keys() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn remove_vertex(edges: &Multigraph, v: usize, merge_into: Option<usize>) -> Multigraph {
    let shift = |x: usize| if x > v { x - 1 } else { x };
    let mut out = Multigraph::new();
    for (&(a, b), &m) in edges {
        let (a, b) = match merge_into {
            Some(u) => (if a == v { u } else { a }, if b == v { u } else { b }),
            None if a == v || b == v => continue,
            None => (a, b),
        };
        if a == b {
            continue;
        }
        let (a, b) = (shift(a.min(b)), shift(a.max(b)));
        *out.entry((a, b)).or_insert(0) += m;
    }
    out
}

fn dc(n: usize, edges: Multigraph, memo: &mut HashMap<(usize, Multigraph), BigInt>) -> BigInt {
    if n == 1 {
        return BigInt::one();
    }
    if !connected(n, &edges) {
        return BigInt::zero();
    }
    let key = (n, edges);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let (n, edges) = key;
    let mut degree = vec![(0usize, 0u64); n];
    for (&(a, b), &m) in &edges {
        degree[a].0 += 1;
        degree[b].0 += 1;
        degree[a].1 += m;
        degree[b].1 += m;
    }
    let v = (0..n).min_by_key(|&v| degree[v]).expect("n >= 2");
    let (&(a, b), &m) = edges.iter().find(|(&(a, b), _)| a == v || b == v).expect("connected");
    let u = if a == v { b } else { a };
    let result = if degree[v].0 == 1 {
        // Pendant bundle: every spanning tree uses exactly one of its edges.
        BigInt::from(m) * dc(n - 1, remove_vertex(&edges, v, None), memo)
    } else {
        let mut deleted = edges.clone();
        deleted.remove(&(a, b));
        let contracted = remove_vertex(&edges, v, Some(u));
        dc(n, deleted, memo) + BigInt::from(m) * dc(n - 1, contracted, memo)
    };
    memo.insert((n, edges), result.clone());
    result
}

/// Exact spanning-tree count by deletion and contraction of parallel-edge
/// bundles, for graphs with at most 24 edges. Disconnected graphs give 0.
pub fn deletion_contraction(g: &Graph) -> Result<BigInt> {
    if g.edge_count() > DELETION_CONTRACTION_CAP {
        return Err(Error::Refused(format!("deletion-contraction capped at {DELETION_CONTRACTION_CAP} edges")));
    }
    if g.n() == 0 {
        return Ok(BigInt::zero());
    }
    let edges: Multigraph = g.edges().map(|e| (e, 1)).collect();
    Ok(dc(g.n(), edges, &mut HashMap::new()))
}

/// Oracle count of spanning trees; same as [`deletion_contraction`].
pub fn enumerate_spanning_trees(g: &Graph) -> Result<BigInt> {
    deletion_contraction(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gsym_core::GraphFamily;
    use proptest::prelude::*;

    fn graph(s: &str) -> Graph {
        s.parse::<GraphFamily>().unwrap().build().unwrap()
    }

    fn exact(g: &Graph, m: SpanningMethod) -> BigInt {
        spanning_tree_count(g, m).unwrap().exact.unwrap()
    }

    #[test]
    fn complete_and_cycles() {
        for n in 1..=6usize {
            let g = graph(&format!("k{n}"));
            let e = BigInt::from(n).pow(n.saturating_sub(2) as u32);
            assert_eq!(exact(&g, SpanningMethod::Cofactor), e);
            assert_eq!(exact(&g, SpanningMethod::DeletionContraction), e);
        }
        for n in 3..=12usize {
            let g = graph(&format!("c{n}"));
            assert_eq!(exact(&g, SpanningMethod::Cofactor), BigInt::from(n));
            let c = spanning_tree_count(&g, SpanningMethod::Circulant).unwrap().value;
            assert!((c - n as f64).abs() < 1e-6 * n as f64);
        }
        let p = graph("petersen");
        assert_eq!(exact(&p, SpanningMethod::Cofactor), BigInt::from(2000));
        assert_eq!(exact(&p, SpanningMethod::DeletionContraction), BigInt::from(2000));
        let s = spanning_tree_count(&p, SpanningMethod::Spectral).unwrap().value;
        assert!((s - 2000.0).abs() < 2000.0 * 1e-6);
        assert_eq!(enumerate_spanning_trees(&graph("k3")).unwrap(), BigInt::from(3));
    }

    #[test]
    fn contracts() {
        let g = graph("copies:2,k3");
        assert!(matches!(spanning_tree_count(&g, SpanningMethod::Cofactor), Err(Error::Contract(_))));
        assert_eq!(deletion_contraction(&g).unwrap(), BigInt::zero());
        assert!(matches!(spanning_tree_count(&graph("petersen"), SpanningMethod::Circulant), Err(Error::Contract(_))));
        assert!(matches!(deletion_contraction(&graph("k8")), Err(Error::Refused(_))));
    }

    #[test]
    fn cofactors_all_equal() {
        for s in ["k5", "petersen", "cube3", "c7", "kneser:5,1"] {
            let g = graph(s);
            if g.n() > 8 {
                continue;
            }
            let c = cofactor(&g, 0, 0).unwrap();
            for i in 0..g.n() {
                for j in 0..g.n() {
                    assert_eq!(cofactor(&g, i, j).unwrap(), c);
                }
            }
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bool::weighted(0.5), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_relation(n, |_, _| it.next().unwrap())
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn three_methods_agree(g in arb_graph(7)) {
            prop_assume!(g.is_connected());
            let c = exact(&g, SpanningMethod::Cofactor);
            prop_assert_eq!(&c, &exact(&g, SpanningMethod::DeletionContraction));
            let s = spanning_tree_count(&g, SpanningMethod::Spectral).unwrap().value;
            let cf = c.to_f64().unwrap();
            prop_assert!((s - cf).abs() <= 1e-6 * cf);
            for i in 0..g.n() {
                for j in 0..g.n() {
                    prop_assert_eq!(&cofactor(&g, i, j).unwrap(), &c);
                }
            }
        }
    }
}
