//! Automorphism groups by individualisation and colour refinement, with the
//! order read off a stabiliser chain.

use std::collections::BTreeMap;

use gsym_core::spectral::coherent_colors;
use gsym_core::{Error, Graph, Result, EXHAUSTIVE_CAP};
use num_bigint::BigInt;
use num_traits::One;

use crate::perm::{Perm, PermGroup};

/// Largest vertex count for the brute-force filter over all `n!` permutations.
pub const BRUTE_FORCE_CAP: usize = 9;

/// Canonical relabelling: colours become the ranks of their keys.
fn relabel<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
    let ranks: BTreeMap<&K, u32> = {
        let mut sorted: Vec<&K> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        sorted.into_iter().enumerate().map(|(r, k)| (k, r as u32)).collect()
    };
    (keys.iter().map(|k| ranks[k]).collect(), ranks.len())
}

/// Equitable refinement: splits colours by the multiset of neighbour colours
/// until stable. Equivariant under relabelling of the vertices.
fn refine(adj: &[Vec<usize>], colors: &[u32]) -> Vec<u32> {
    let (mut c, mut count) = relabel(colors);
    loop {
        let keys: Vec<(u32, Vec<u32>)> = adj
            .iter()
            .enumerate()
            .map(|(v, nb)| {
                let mut s: Vec<u32> = nb.iter().map(|&u| c[u]).collect();
                s.sort_unstable();
                (c[v], s)
            })
            .collect();
        let (next, next_count) = relabel(&keys);
        if next_count == count {
            return next;
        }
        c = next;
        count = next_count;
    }
}

fn individualize(adj: &[Vec<usize>], colors: &[u32], v: usize) -> Vec<u32> {
    let keys: Vec<(u32, bool)> = colors.iter().enumerate().map(|(u, &c)| (c, u == v)).collect();
    refine(adj, &relabel(&keys).0)
}

fn histogram(c: &[u32]) -> Vec<usize> {
    let mut h = vec![0; c.len()];
    for &x in c {
        h[x as usize] += 1;
    }
    h
}

fn is_discrete(c: &[u32]) -> bool {
    histogram(c).iter().all(|&k| k <= 1)
}

/// First vertex of the smallest non-singleton colour class.
fn target_cell(c: &[u32]) -> Option<u32> {
    let h = histogram(c);
    (0..c.len()).filter(|&k| h[k] > 1).min_by_key(|&k| (h[k], k)).map(|k| k as u32)
}

/// Matches the base path of `g` against colourings of `h`; leaves give
/// isomorphisms `g → h` (automorphisms when `h = g`).
struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    adj_h: Vec<Vec<usize>>,
    /// Colourings along the base path; `path[i]` has `base[..i]` individualised.
    path: Vec<Vec<u32>>,
    base: Vec<usize>,
}

impl Search<'_> {
    /// Extends the match of `path[level]` with `beta` to an automorphism.
    fn extend(&self, level: usize, beta: &[u32]) -> Option<Perm> {
        if level == self.base.len() {
            let alpha = &self.path[level];
            let mut by_color = vec![0; self.g.n()];
            for (v, &c) in beta.iter().enumerate() {
                by_color[c as usize] = v;
            }
            let p = Perm::new(alpha.iter().map(|&c| by_color[c as usize]).collect()).ok()?;
            let maps = self.g.edge_count() == self.h.edge_count()
                && self.g.edges().all(|(i, j)| self.h.has_edge(p.apply(i), p.apply(j)));
            return maps.then_some(p);
        }
        let cell = self.path[level][self.base[level]];
        for w in (0..self.h.n()).filter(|&w| beta[w] == cell) {
            if let Some(p) = self.try_map(level, beta, w) {
                return Some(p);
            }
        }
        None
    }

    fn try_map(&self, level: usize, beta: &[u32], w: usize) -> Option<Perm> {
        let next = individualize(&self.adj_h, beta, w);
        if histogram(&next) != histogram(&self.path[level + 1]) {
            return None;
        }
        self.extend(level + 1, &next)
    }
}

/// Root colouring: equitable refinement of the diagonal colours of the
/// coherent (2-WL) refinement. Comparable across graphs.
fn root_coloring(g: &Graph, adj: &[Vec<usize>]) -> Vec<u32> {
    let wl = coherent_colors(&g.adjacency());
    let diag: Vec<u32> = (0..g.n()).map(|v| wl[v][v]).collect();
    refine(adj, &diag)
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> Self {
        let adj = g.adjacency_lists();
        let mut path = vec![root_coloring(g, &adj)];
        let mut base = Vec::new();
        while let Some(cell) = target_cell(path.last().expect("nonempty")) {
            let c = path.last().expect("nonempty");
            let b = (0..g.n()).find(|&v| c[v] == cell).expect("cell is nonempty");
            base.push(b);
            path.push(individualize(&adj, c, b));
        }
        debug_assert!(is_discrete(path.last().expect("nonempty")));
        Search { g, h, adj_h: h.adjacency_lists(), path, base }
    }
}

/// An isomorphism `g → h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Perm>> {
    if g.n().max(h.n()) > EXHAUSTIVE_CAP {
        return Err(Error::Refused(format!("isomorphism search capped at n = {EXHAUSTIVE_CAP}")));
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    if g.n() == 0 {
        return Ok(Some(Perm::identity(0)));
    }
    let search = Search::new(g, h);
    let beta = root_coloring(h, &search.adj_h);
    if histogram(&beta) != histogram(&search.path[0]) {
        return Ok(None);
    }
    Ok(search.extend(0, &beta))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

fn orbit(n: usize, gens: &[Perm], start: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for g in gens {
            let w = g.apply(v);
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Automorphism group `G(X)` with a strong generating set and exact order
/// `Π |orbit of b_i under the stabiliser of b_1 … b_{i−1}|`.
pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    let n = g.n();
    if n > EXHAUSTIVE_CAP {
        return Err(Error::Refused(format!("automorphism search capped at n = {EXHAUSTIVE_CAP}")));
    }
    if n == 0 {
        return Ok(PermGroup::trivial(0));
    }
    let search = Search::new(g, g);
    let mut generators: Vec<Perm> = Vec::new();
    let mut order = BigInt::one();
    for level in (0..search.base.len()).rev() {
        let b = search.base[level];
        let alpha = &search.path[level];
        let mut reach = orbit(n, &generators, b);
        for v in 0..n {
            if alpha[v] != alpha[b] || reach[v] {
                continue;
            }
            if let Some(p) = search.try_map(level, alpha, v) {
                generators.push(p);
                reach = orbit(n, &generators, b);
            }
        }
        order *= reach.iter().filter(|&&r| r).count();
    }
    Ok(PermGroup::with_order(n, generators, order))
}

/// All automorphisms by filtering every permutation; `n ≤ 9`.
pub fn automorphisms_brute_force(g: &Graph) -> Result<Vec<Perm>> {
    let n = g.n();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::Refused(format!("brute force capped at n = {BRUTE_FORCE_CAP}")));
    }
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(g: &Graph, images: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
        let k = images.len();
        if k == g.n() {
            out.push(Perm::new(images.clone()).expect("bijection"));
            return;
        }
        for w in 0..g.n() {
            if used[w] || (0..k).any(|i| g.has_edge(i, k) != g.has_edge(images[i], w)) {
                continue;
            }
            used[w] = true;
            images.push(w);
            rec(g, images, used, out);
            images.pop();
            used[w] = false;
        }
    }
    rec(g, &mut images, &mut used, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gsym_core::{complement, GraphFamily};
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn order(s: &str) -> BigInt {
        automorphism_group(&s.parse::<GraphFamily>().unwrap().build().unwrap()).unwrap().order
    }

    #[test]
    fn known_orders() {
        assert_eq!(order("c5"), BigInt::from(10));
        assert_eq!(order("petersen"), BigInt::from(120));
        assert_eq!(order("direct:k3*k3"), BigInt::from(72));
        assert_eq!(order("k7"), BigInt::from(5040));
        assert_eq!(order("empty5"), BigInt::from(120));
        assert_eq!(order("cube3"), BigInt::from(48));
        assert_eq!(order("cube4"), BigInt::from(384));
        assert_eq!(order("copies:2,c4"), BigInt::from(128));
        assert_eq!(order("k1"), BigInt::from(1));
    }

    #[test]
    fn generators_are_automorphisms_and_close() {
        for s in ["petersen", "c6", "copies:3,k2", "prism:c5"] {
            let g = s.parse::<GraphFamily>().unwrap().build().unwrap();
            let grp = automorphism_group(&g).unwrap();
            assert!(grp.generators.iter().all(|p| p.is_automorphism(&g)));
            let elems = grp.elements().unwrap();
            assert_eq!(BigInt::from(elems.len()), grp.order);
            let set: HashSet<&Perm> = elems.iter().collect();
            for a in elems.iter().take(20) {
                assert!(set.contains(&a.inverse()));
                for b in elems.iter().take(20) {
                    assert!(set.contains(&a.compose(b)));
                }
            }
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut it = bits.into_iter();
                Graph::from_relation(n, |_, _| it.next().unwrap())
            })
        })
    }

    #[test]
    fn isomorphisms() {
        let p = "petersen".parse::<GraphFamily>().unwrap().build().unwrap();
        let k = "kneser:5,2".parse::<GraphFamily>().unwrap().build().unwrap();
        let shuffled = p.relabel(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]).unwrap();
        let iso = find_isomorphism(&p, &shuffled).unwrap().unwrap();
        assert!(p.edges().all(|(i, j)| shuffled.has_edge(iso.apply(i), iso.apply(j))));
        assert!(is_isomorphic(&p, &k).unwrap());
        let prism = "prism:c5".parse::<GraphFamily>().unwrap().build().unwrap();
        assert!(!is_isomorphic(&p, &prism).unwrap());
        let c6 = "c6".parse::<GraphFamily>().unwrap().build().unwrap();
        let two_k3 = "copies:2,k3".parse::<GraphFamily>().unwrap().build().unwrap();
        assert!(!is_isomorphic(&c6, &two_k3).unwrap());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn isomorphic_to_relabelling(g in arb_graph(10), seed in any::<u64>()) {
            let n = g.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (state >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm).unwrap();
            prop_assert!(is_isomorphic(&g, &h).unwrap());
            let iso = find_isomorphism(&g, &h).unwrap().unwrap();
            prop_assert!(g.edges().all(|(i, j)| h.has_edge(iso.apply(i), iso.apply(j))));
        }

        #[test]
        fn search_matches_brute_force(g in arb_graph(8)) {
            let grp = automorphism_group(&g).unwrap();
            let brute = automorphisms_brute_force(&g).unwrap();
            prop_assert_eq!(grp.order.clone(), BigInt::from(brute.len()));
            let listed: HashSet<Perm> = grp.elements().unwrap().into_iter().collect();
            prop_assert_eq!(&listed, &brute.iter().cloned().collect::<HashSet<_>>());
            let gc = complement(&g);
            let listed_c: HashSet<Perm> = automorphisms_brute_force(&gc).unwrap().into_iter().collect();
            prop_assert_eq!(listed, listed_c);
        }
    }
}
