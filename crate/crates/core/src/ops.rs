use serde::Serialize;

use crate::graph::Graph;

/// The three graph products. Vertex `(i, a)` of a product of `g` and `h`
/// has index `i * h.n() + a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    /// `(i,a) ~ (j,b)` iff `i ~ j` and `a ~ b`.
    Direct,
    /// `(i,a) ~ (j,b)` iff `i = j, a ~ b` or `i ~ j, a = b`.
    Cartesian,
    /// `(i,a) ~ (j,b)` iff `a ~ b`, or `a = b` and `i ~ j`: a copy of `g`
    /// sits over every vertex of `h`.
    Lexicographic,
}

impl std::str::FromStr for ProductKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "direct" => Ok(ProductKind::Direct),
            "cartesian" => Ok(ProductKind::Cartesian),
            "lex" | "lexicographic" => Ok(ProductKind::Lexicographic),
            _ => Err(crate::Error::Parameter(format!("unknown product kind `{s}`"))),
        }
    }
}

/// Complement within all unordered pairs. The root is kept.
pub fn complement(g: &Graph) -> Graph {
    let c = Graph::from_relation(g.n(), |i, j| !g.has_edge(i, j));
    match g.root() {
        Some(r) => c.with_root(r).expect("root in range"),
        None => c,
    }
}

/// Block-diagonal union, `g` first. The root of `g` is kept.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let edges = g.edges().chain(h.edges().map(|(i, j)| (i + shift, j + shift)));
    let u = Graph::from_pairs_dedup(g.n() + h.n(), edges);
    match g.root() {
        Some(r) => u.with_root(r).expect("root in range"),
        None => u,
    }
}

/// `k` disjoint copies of `g`; copy `c` occupies `c * n .. (c + 1) * n`.
pub fn copies(k: usize, g: &Graph) -> Graph {
    let n = g.n();
    let edges = (0..k).flat_map(|c| g.edges().map(move |(i, j)| (i + c * n, j + c * n)));
    Graph::from_pairs_dedup(k * n, edges)
}

pub fn product(g: &Graph, h: &Graph, kind: ProductKind) -> Graph {
    let m = h.n();
    Graph::from_relation(g.n() * m, |p, q| {
        let (i, a) = (p / m, p % m);
        let (j, b) = (q / m, q % m);
        match kind {
            ProductKind::Direct => g.has_edge(i, j) && h.has_edge(a, b),
            ProductKind::Cartesian => (i == j && h.has_edge(a, b)) || (a == b && g.has_edge(i, j)),
            ProductKind::Lexicographic => h.has_edge(a, b) || (a == b && g.has_edge(i, j)),
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicStats {
    pub valences: Vec<usize>,
    pub is_regular: bool,
    pub components: usize,
}

pub fn basic_stats(g: &Graph) -> BasicStats {
    let valences = g.adjacency().row_sums();
    let is_regular = valences.windows(2).all(|w| w[0] == w[1]);
    BasicStats { valences, is_regular, components: g.components().len() }
}
