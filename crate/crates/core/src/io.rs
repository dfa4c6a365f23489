//! Edge-list text format: a header line `N M`, then `M` lines `i j`.
//! Lines starting with `#` and blank lines are ignored.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || {
        it.next()
            .ok_or_else(|| Error::parse(lineno, format!("expected two integers in {what}")))?
            .parse::<usize>()
            .map_err(|e| Error::parse(lineno, format!("{what}: {e}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::parse(lineno, format!("trailing tokens in {what}")));
    }
    Ok((a, b))
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(k, l)| (k + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `N M` header"))?;
    let (n, m) = pair(header, hline, "header")?;
    let mut edges = BTreeSet::new();
    let mut last = hline;
    for (lineno, line) in lines {
        last = lineno;
        let (i, j) = pair(line, lineno, "edge")?;
        if i >= n || j >= n {
            return Err(Error::parse(lineno, format!("vertex out of range for N={n}")));
        }
        if i == j {
            return Err(Error::parse(lineno, format!("self-loop at vertex {i}")));
        }
        if !edges.insert((i.min(j), i.max(j))) {
            return Err(Error::parse(lineno, format!("duplicate edge {i} {j}")));
        }
        if edges.len() > m {
            return Err(Error::parse(lineno, format!("more than the declared {m} edges")));
        }
    }
    if edges.len() != m {
        return Err(Error::parse(last, format!("declared {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn serialize(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (i, j) in g.edges() {
        writeln!(out, "{i} {j}").expect("write to String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let t = parse("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(t, Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap());
        assert_eq!(parse("2 0").unwrap(), Graph::empty(2));
        assert_eq!(parse("# comment\n2 1\n\n# x\n1 0\n").unwrap(), Graph::new(2, [(0, 1)]).unwrap());
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(parse("3 1\n0 3"), Err(Error::parse(2, "vertex out of range for N=3")));
        assert!(matches!(parse("3 2\n0 1\n1 0"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse("3 1\n# c\n2 2"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse("3 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("3 2\n0 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("3\n"), Err(Error::Parse { line: 1, .. })));
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut it = bits.into_iter();
            let g = Graph::from_relation(n, |_, _| it.next().unwrap());
            prop_assert_eq!(parse(&serialize(&g)).unwrap(), g);
        }
    }
}
