//! Graph sources: named families, edge-list files, the named corpus and
//! seeded random graphs.

use std::path::Path;

use gsym_core::{io, Graph, GraphFamily, Result};
use gsym_symmetry::table_rows;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Families beyond the symmetry table that the corpus always includes.
const EXTRA_FAMILIES: &[&str] = &[
    "segment2",
    "segment5",
    "segment8",
    "c12",
    "cube3",
    "cube4",
    "petersen",
    "kneser:6,2",
    "prism:c6",
    "ade:D,6",
    "ade:E6",
    "ade:E7",
    "ade:E8",
    "ade:Dt,6",
    "ade:Et6",
    "ade:Et7",
    "ade:Et8",
    "chord:12,5",
    "cartesian:c4*c5",
    "complement:c7",
];

pub fn parse_family(text: &str) -> Result<GraphFamily> {
    text.parse()
}

pub fn read_edge_list(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| gsym_core::Error::Parameter(format!("cannot read {}: {e}", path.display())))?;
    io::parse(&text)
}

/// Every table row plus [`EXTRA_FAMILIES`], labelled.
pub fn named_corpus() -> Result<Vec<(String, Graph)>> {
    let mut out: Vec<(String, Graph)> =
        table_rows().into_iter().map(|r| Ok((r.label.to_string(), r.family.build()?))).collect::<Result<_>>()?;
    for name in EXTRA_FAMILIES {
        out.push((name.to_string(), parse_family(name)?.build()?));
    }
    Ok(out)
}

/// `G(n, p)` on `n` vertices.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    Graph::from_relation(n, |_, _| rng.gen_bool(p))
}

/// A connected `G(n, p)` sample: a random spanning tree plus random extra edges.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, edges).expect("edges are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn corpus_builds() {
        let corpus = named_corpus().unwrap();
        assert_eq!(corpus.len(), table_rows().len() + EXTRA_FAMILIES.len());
        assert!(corpus.iter().any(|(l, g)| l == "petersen" && g.edge_count() == 15));
    }

    #[test]
    fn random_connected_is_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..10 {
            assert!(random_connected(&mut rng, n, 0.2).is_connected());
        }
    }
}
