use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::AdjacencyMatrix;

/// A finite simple graph on vertices `0..n`, optionally rooted.
///
/// Edges are stored as ordered pairs `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    root: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
    root: Option<usize>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        let g = Graph::new(r.n, r.edges.into_iter().map(|[i, j]| (i, j)))?;
        match r.root {
            Some(root) => g.with_root(root),
            None => Ok(g),
        }
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { n: g.n, edges: g.edges.iter().map(|&(i, j)| [i, j]).collect(), root: g.root }
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// repeated edges (in either orientation).
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Parameter(format!("edge ({a},{b}) out of range for n={n}")));
            }
            if a == b {
                return Err(Error::Parameter(format!("self-loop at vertex {a}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::Parameter(format!("duplicate edge ({a},{b})")));
            }
        }
        Ok(Graph { n, edges: set, root: None })
    }

    /// Builds the graph whose edges are the pairs `i < j` satisfying `adjacent`.
    pub fn from_relation(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut edges = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    edges.insert((i, j));
                }
            }
        }
        Graph { n, edges, root: None }
    }

    /// Like [`Graph::new`] but silently merges repeated edges.
    pub(crate) fn from_pairs_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges = edges.into_iter().filter(|&(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))).collect();
        Graph { n, edges, root: None }
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new(), root: None }
    }

    pub fn with_root(mut self, root: usize) -> Result<Self> {
        if root >= self.n {
            return Err(Error::Parameter(format!("root {root} out of range for n={}", self.n)));
        }
        self.root = Some(root);
        Ok(self)
    }

    pub fn without_root(mut self) -> Self {
        self.root = None;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.edges.contains(&(i.min(j), i.max(j)))
    }

    /// Neighbour lists, each sorted ascending.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn adjacency(&self) -> AdjacencyMatrix {
        AdjacencyMatrix::from_graph(self)
    }

    pub fn valences(&self) -> Vec<usize> {
        let mut v = vec![0; self.n];
        for &(i, j) in &self.edges {
            v[i] += 1;
            v[j] += 1;
        }
        v
    }

    /// Image of the graph under the vertex map `i -> perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Parameter("relabelling has wrong length".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parameter("relabelling is not a bijection".into()));
            }
        }
        let edges = self.edges.iter().map(|&(i, j)| (perm[i].min(perm[j]), perm[i].max(perm[j]))).collect();
        Ok(Graph { n: self.n, edges, root: self.root.map(|r| perm[r]) })
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency_lists();
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(i, j)| index[i] != usize::MAX && index[j] != usize::MAX)
            .map(|&(i, j)| (index[i].min(index[j]), index[i].max(index[j])))
            .collect();
        Graph { n: vertices.len(), edges, root: None }
    }
}
