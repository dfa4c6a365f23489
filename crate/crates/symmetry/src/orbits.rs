//! Orbits, orbitals, and the spectral and orbital tests a group can pass.

use gsym_core::spectral::eigen_sym;
use gsym_core::{Error, Graph, Result};
use serde::Serialize;

use crate::perm::PermGroup;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            y = std::mem::replace(&mut self.0[y], r);
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Class index per element, classes numbered by first occurrence.
    fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.0.len();
        let mut index = vec![usize::MAX; n];
        let mut count = 0;
        let mut out = Vec::with_capacity(n);
        for x in 0..n {
            let r = self.find(x);
            if index[r] == usize::MAX {
                index[r] = count;
                count += 1;
            }
            out.push(index[r]);
        }
        (out, count)
    }
}

/// Orbits of the group on points, each sorted, ordered by least element.
pub fn orbits(grp: &PermGroup) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(grp.n);
    for g in &grp.generators {
        for i in 0..grp.n {
            uf.union(i, g.apply(i));
        }
    }
    let (labels, count) = uf.labels();
    let mut out = vec![Vec::new(); count];
    for (i, l) in labels.into_iter().enumerate() {
        out[l].push(i);
    }
    out
}

/// Partition of ordered pairs into orbits of the diagonal action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitalPartition {
    pub n: usize,
    /// Class of `(i, j)` at index `i·n + j`.
    pub class_of: Vec<usize>,
    pub count: usize,
}

impl OrbitalPartition {
    pub fn class(&self, i: usize, j: usize) -> usize {
        self.class_of[i * self.n + j]
    }
}

pub fn orbitals(grp: &PermGroup) -> OrbitalPartition {
    let n = grp.n;
    let mut uf = UnionFind::new(n * n);
    for g in &grp.generators {
        for i in 0..n {
            for j in 0..n {
                uf.union(i * n + j, g.apply(i) * n + g.apply(j));
            }
        }
    }
    let (class_of, count) = uf.labels();
    OrbitalPartition { n, class_of, count }
}

pub fn is_transitive(grp: &PermGroup) -> bool {
    orbits(grp).len() <= 1
}

/// Exactly two orbitals: the diagonal and everything else.
pub fn is_doubly_transitive(grp: &PermGroup) -> bool {
    grp.n >= 2 && orbitals(grp).count == 2
}

fn check_degree(grp: &PermGroup, g: &Graph) -> Result<()> {
    if grp.n != g.n() {
        return Err(Error::Contract(format!("group acts on {} points, graph has {}", grp.n, g.n())));
    }
    Ok(())
}

/// Whether every generator commutes with every spectral projection of the
/// adjacency matrix, to within `10·tol`.
pub fn check_eigenspace_preservation(grp: &PermGroup, g: &Graph, tol: f64) -> Result<bool> {
    check_degree(grp, g)?;
    let dec = eigen_sym(&g.adjacency().to_matrix(), None)?;
    let n = g.n();
    Ok(grp.generators.iter().all(|s| {
        dec.projections
            .iter()
            .all(|p| (0..n).all(|i| (0..n).all(|j| (p[(s.apply(i), s.apply(j))] - p[(i, j)]).abs() <= 10.0 * tol)))
    }))
}

/// Whether `d_{ik} = d_{jl}` whenever `(i,k)` and `(j,l)` share an orbital.
pub fn adjacency_constant_on_orbitals(g: &Graph, grp: &PermGroup) -> Result<bool> {
    check_degree(grp, g)?;
    let o = orbitals(grp);
    let mut value: Vec<Option<bool>> = vec![None; o.count];
    for i in 0..g.n() {
        for j in 0..g.n() {
            let e = g.has_edge(i, j);
            match value[o.class(i, j)].replace(e) {
                Some(prev) if prev != e => return Ok(false),
                _ => {}
            }
        }
    }
    Ok(true)
}
