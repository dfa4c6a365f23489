//! Named graph families and the textual family grammar used by the CLI.
//!
//! Grammar (case-insensitive):
//! `k4`, `c7`, `empty4`, `segment5`, `cube3`, `petersen`, `kneser:5,2`,
//! `copies:2,k3`, `ade:At,8`, `ade:E6`, `chord:10,4`, `cplus:8`, `prism:c5`,
//! `complement:c5`, `direct:k3*k3`, `cartesian:k2*c3`, `lex:k3*k2`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ops::{complement, copies, product, ProductKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdeTag {
    A,
    AffineA,
    D,
    AffineD,
    E6,
    E7,
    E8,
    AffineE6,
    AffineE7,
    AffineE8,
}

impl AdeTag {
    pub const ALL: [AdeTag; 10] = [
        AdeTag::A,
        AdeTag::AffineA,
        AdeTag::D,
        AdeTag::AffineD,
        AdeTag::E6,
        AdeTag::E7,
        AdeTag::E8,
        AdeTag::AffineE6,
        AdeTag::AffineE7,
        AdeTag::AffineE8,
    ];

    /// The subscript for the exceptional tags, which have no free size.
    pub fn fixed_size(self) -> Option<usize> {
        match self {
            AdeTag::E6 | AdeTag::AffineE6 => Some(6),
            AdeTag::E7 | AdeTag::AffineE7 => Some(7),
            AdeTag::E8 | AdeTag::AffineE8 => Some(8),
            _ => None,
        }
    }

    pub fn is_affine(self) -> bool {
        matches!(self, AdeTag::AffineA | AdeTag::AffineD | AdeTag::AffineE6 | AdeTag::AffineE7 | AdeTag::AffineE8)
    }

    fn name(self) -> &'static str {
        match self {
            AdeTag::A => "A",
            AdeTag::AffineA => "At",
            AdeTag::D => "D",
            AdeTag::AffineD => "Dt",
            AdeTag::E6 => "E6",
            AdeTag::E7 => "E7",
            AdeTag::E8 => "E8",
            AdeTag::AffineE6 => "Et6",
            AdeTag::AffineE7 => "Et7",
            AdeTag::AffineE8 => "Et8",
        }
    }
}

impl FromStr for AdeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = match s.to_ascii_lowercase().as_str() {
            "a" => AdeTag::A,
            "at" | "ã" | "a~" => AdeTag::AffineA,
            "d" => AdeTag::D,
            "dt" | "d̃" | "d~" => AdeTag::AffineD,
            "e6" => AdeTag::E6,
            "e7" => AdeTag::E7,
            "e8" => AdeTag::E8,
            "et6" | "e6t" | "e~6" => AdeTag::AffineE6,
            "et7" | "e7t" | "e~7" => AdeTag::AffineE7,
            "et8" | "e8t" | "e~8" => AdeTag::AffineE8,
            _ => return Err(Error::Parameter(format!("unknown ADE tag `{s}`"))),
        };
        Ok(t)
    }
}

impl fmt::Display for AdeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    /// Complete graph.
    K(usize),
    /// Graph with no edges.
    Empty(usize),
    /// Cycle `i ~ i ± 1 (mod N)`.
    C(usize),
    /// Path `0 - 1 - ... - (N-1)`, rooted at 0.
    Segment(usize),
    /// `N`-cube on `{0,1}^N`, vertices adjacent when they differ in one bit.
    Hypercube(usize),
    /// Cartesian product with `K_2`.
    Prism(Box<GraphFamily>),
    Petersen,
    /// `s`-subsets of `{0..n}` in lexicographic order, adjacent when disjoint.
    Kneser(usize, usize),
    Copies(usize, Box<GraphFamily>),
    /// Circulant graph on `Z_N` with connection set `{±1, ±k}`.
    CycleWithChords(usize, usize),
    /// ADE graph with its distinguished vertex as root 0. The size is the
    /// subscript: `A_n`, `D_n` have `n` vertices, `Ã_{2n}` is the cycle on
    /// `2n` vertices, `D̃_n` has `n + 1` vertices.
    Ade(AdeTag, usize),
    Complement(Box<GraphFamily>),
    Product(ProductKind, Box<GraphFamily>, Box<GraphFamily>),
}

fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

fn cycle(n: usize) -> Graph {
    Graph::from_relation(n, |i, j| j - i == 1 || (i == 0 && j == n - 1))
}

fn path(n: usize) -> Graph {
    Graph::from_relation(n, |i, j| j - i == 1)
}

fn combinations(n: usize, s: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | 1 << i));
        let Some(p) = (0..s).rev().find(|&p| idx[p] != p + n - s) else {
            return out;
        };
        idx[p] += 1;
        for q in p + 1..s {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

fn ade(tag: AdeTag, size: usize) -> Result<Graph> {
    if let Some(fixed) = tag.fixed_size() {
        if size != fixed {
            return Err(param(format!("{tag} has no size parameter other than {fixed}")));
        }
    }
    let chain = |n: usize, extra: &[(usize, usize)]| {
        Graph::new(n, (0..n.saturating_sub(extra.len() + 1)).map(|i| (i, i + 1)).chain(extra.iter().copied()))
    };
    let g = match tag {
        AdeTag::A => {
            if size < 2 {
                return Err(param("A_n needs n >= 2"));
            }
            Ok(path(size))
        }
        AdeTag::AffineA => {
            if size < 4 || !size.is_multiple_of(2) {
                return Err(param("Ã_{2n} needs an even size >= 4"));
            }
            Ok(cycle(size))
        }
        AdeTag::D => {
            if size < 3 {
                return Err(param("D_n needs n >= 3"));
            }
            let hub = size - 3;
            chain(size, &[(hub, size - 2), (hub, size - 1)])
        }
        AdeTag::AffineD => {
            if size < 4 {
                return Err(param("D̃_n needs n >= 4"));
            }
            let last = size - 2;
            let mut edges = vec![(0, 2), (1, 2)];
            edges.extend((2..last).map(|i| (i, i + 1)));
            edges.push((last, size - 1));
            edges.push((last, size));
            Graph::new(size + 1, edges)
        }
        AdeTag::E6 => chain(6, &[(2, 5)]),
        AdeTag::E7 => chain(7, &[(3, 6)]),
        AdeTag::E8 => chain(8, &[(4, 7)]),
        AdeTag::AffineE6 => Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)]),
        AdeTag::AffineE7 => chain(8, &[(3, 7)]),
        AdeTag::AffineE8 => chain(9, &[(5, 8)]),
    }?;
    g.with_root(0)
}

impl GraphFamily {
    pub fn build(&self) -> Result<Graph> {
        let g = match self {
            GraphFamily::K(n) => Graph::from_relation(*n, |_, _| true),
            GraphFamily::Empty(n) => Graph::empty(*n),
            GraphFamily::C(n) => {
                if *n < 3 {
                    return Err(param("C_N needs N >= 3"));
                }
                cycle(*n)
            }
            GraphFamily::Segment(n) => {
                if *n == 0 {
                    return Err(param("segment needs at least one vertex"));
                }
                path(*n).with_root(0)?
            }
            GraphFamily::Hypercube(n) => {
                if *n > 12 {
                    return Err(Error::Refused(format!("hypercube of dimension {n} exceeds the size cap")));
                }
                Graph::from_relation(1 << n, |i, j| (i ^ j).count_ones() == 1)
            }
            GraphFamily::Prism(inner) => product(&inner.build()?, &Graph::new(2, [(0, 1)])?, ProductKind::Cartesian),
            GraphFamily::Petersen => GraphFamily::Kneser(5, 2).build()?,
            GraphFamily::Kneser(n, s) => {
                if *s == 0 || s > n {
                    return Err(param(format!("Kneser({n},{s}) needs 1 <= s <= n")));
                }
                if *n > 63 {
                    return Err(Error::Refused("Kneser ground set too large".into()));
                }
                let sets = combinations(*n, *s);
                if sets.len() > crate::NUMERIC_CAP {
                    return Err(Error::Refused(format!("Kneser({n},{s}) has too many vertices")));
                }
                Graph::from_relation(sets.len(), |i, j| sets[i] & sets[j] == 0)
            }
            GraphFamily::Copies(k, inner) => copies(*k, &inner.build()?),
            GraphFamily::CycleWithChords(n, k) => {
                if *n < 3 || *k == 0 || *k >= *n {
                    return Err(param(format!("chord:{n},{k} needs N >= 3 and 0 < k < N")));
                }
                let conn = |d: usize| d == 1 || d == n - 1 || d == *k || d == n - k;
                Graph::from_relation(*n, |i, j| conn(j - i))
            }
            GraphFamily::Ade(tag, size) => ade(*tag, *size)?,
            GraphFamily::Complement(inner) => complement(&inner.build()?),
            GraphFamily::Product(kind, a, b) => product(&a.build()?, &b.build()?, *kind),
        };
        Ok(g)
    }
}

fn number(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| param(format!("expected a non-negative integer, got `{s}`")))
}

fn two_numbers(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s.split_once(',').ok_or_else(|| param(format!("expected `a,b`, got `{s}`")))?;
    Ok((number(a)?, number(b)?))
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        if let Some((head, rest)) = s.split_once(':') {
            let boxed = |t: &str| t.parse::<GraphFamily>().map(Box::new);
            return match head.to_ascii_lowercase().as_str() {
                "kneser" => {
                    let (n, k) = two_numbers(rest)?;
                    Ok(GraphFamily::Kneser(n, k))
                }
                "copies" => {
                    let (k, inner) = rest.split_once(',').ok_or_else(|| param("expected `copies:k,family`"))?;
                    Ok(GraphFamily::Copies(number(k)?, boxed(inner)?))
                }
                "ade" => {
                    let (tag, size) = match rest.split_once(',') {
                        Some((t, n)) => (t.parse::<AdeTag>()?, Some(number(n)?)),
                        None => (rest.parse::<AdeTag>()?, None),
                    };
                    let size = match (size, tag.fixed_size()) {
                        (Some(n), _) => n,
                        (None, Some(n)) => n,
                        (None, None) => return Err(param(format!("{tag} needs a size"))),
                    };
                    Ok(GraphFamily::Ade(tag, size))
                }
                "chord" => {
                    let (n, k) = two_numbers(rest)?;
                    Ok(GraphFamily::CycleWithChords(n, k))
                }
                "cplus" => {
                    let n = number(rest)?;
                    if n % 2 != 0 {
                        return Err(param("cplus needs an even N"));
                    }
                    Ok(GraphFamily::CycleWithChords(n, n / 2))
                }
                "prism" => Ok(GraphFamily::Prism(boxed(rest)?)),
                "complement" => Ok(GraphFamily::Complement(boxed(rest)?)),
                "direct" | "cartesian" | "lex" | "lexicographic" => {
                    let kind: ProductKind = head.to_ascii_lowercase().parse()?;
                    let (a, b) = rest.split_once('*').ok_or_else(|| param("expected `kind:a*b`"))?;
                    Ok(GraphFamily::Product(kind, boxed(a)?, boxed(b)?))
                }
                _ => Err(param(format!("unknown family `{head}`"))),
            };
        }
        if lower == "petersen" {
            return Ok(GraphFamily::Petersen);
        }
        for (prefix, make) in [
            ("segment", GraphFamily::Segment as fn(usize) -> GraphFamily),
            ("cube", GraphFamily::Hypercube),
            ("empty", GraphFamily::Empty),
            ("k", GraphFamily::K),
            ("c", GraphFamily::C),
        ] {
            if let Some(rest) = lower.strip_prefix(prefix) {
                if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                    return Ok(make(number(rest)?));
                }
            }
        }
        Err(param(format!("unknown family `{s}`")))
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::K(n) => write!(f, "k{n}"),
            GraphFamily::Empty(n) => write!(f, "empty{n}"),
            GraphFamily::C(n) => write!(f, "c{n}"),
            GraphFamily::Segment(n) => write!(f, "segment{n}"),
            GraphFamily::Hypercube(n) => write!(f, "cube{n}"),
            GraphFamily::Prism(g) => write!(f, "prism:{g}"),
            GraphFamily::Petersen => f.write_str("petersen"),
            GraphFamily::Kneser(n, s) => write!(f, "kneser:{n},{s}"),
            GraphFamily::Copies(k, g) => write!(f, "copies:{k},{g}"),
            GraphFamily::CycleWithChords(n, k) => write!(f, "chord:{n},{k}"),
            GraphFamily::Ade(tag, _) if tag.fixed_size().is_some() => write!(f, "ade:{tag}"),
            GraphFamily::Ade(tag, n) => write!(f, "ade:{tag},{n}"),
            GraphFamily::Complement(g) => write!(f, "complement:{g}"),
            GraphFamily::Product(kind, a, b) => {
                let head = match kind {
                    ProductKind::Direct => "direct",
                    ProductKind::Cartesian => "cartesian",
                    ProductKind::Lexicographic => "lex",
                };
                write!(f, "{head}:{a}*{b}")
            }
        }
    }
}

impl Serialize for GraphFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::basic_stats;

    fn build(s: &str) -> Graph {
        s.parse::<GraphFamily>().unwrap().build().unwrap()
    }

    #[test]
    fn grammar_round_trips() {
        for s in [
            "k4",
            "c7",
            "empty4",
            "segment5",
            "cube3",
            "petersen",
            "kneser:5,2",
            "copies:2,k3",
            "ade:At,8",
            "ade:E6",
            "ade:Et7",
            "chord:10,4",
            "prism:c5",
            "complement:c5",
            "direct:k3*k3",
            "cartesian:k2*c3",
            "lex:k3*k2",
        ] {
            let f: GraphFamily = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            f.build().unwrap();
        }
        assert!("q7".parse::<GraphFamily>().is_err());
        assert!("kneser:5".parse::<GraphFamily>().is_err());
    }

    #[test]
    fn named_examples() {
        let k4 = build("k4");
        let s = basic_stats(&k4);
        assert_eq!((k4.n(), k4.edge_count(), s.is_regular, s.valences[0]), (4, 6, true, 3));
        let p = build("kneser:5,2");
        let s = basic_stats(&p);
        assert_eq!((p.n(), p.edge_count(), s.valences[0], s.components), (10, 15, 3, 1));
        assert_eq!(build("petersen"), p);
        let a8 = build("ade:At,8");
        assert_eq!(a8.clone().without_root(), build("c8"));
        assert_eq!(a8.root(), Some(0));
        assert!(matches!("kneser:2,3".parse::<GraphFamily>().unwrap().build(), Err(Error::Parameter(_))));
    }

    #[test]
    fn kneser_one_is_complete() {
        for n in 1..8 {
            assert_eq!(GraphFamily::Kneser(n, 1).build().unwrap(), GraphFamily::K(n).build().unwrap());
        }
    }

    #[test]
    fn ade_shapes() {
        let counts = |s: &str| {
            let g = build(s);
            let mut v = basic_stats(&g).valences;
            v.sort_unstable();
            (g.n(), g.edge_count(), g.is_connected(), v.last().copied().unwrap())
        };
        assert_eq!(counts("ade:A,5"), (5, 4, true, 2));
        assert_eq!(counts("ade:D,6"), (6, 5, true, 3));
        assert_eq!(counts("ade:Dt,4"), (5, 4, true, 4));
        assert_eq!(counts("ade:Dt,6"), (7, 6, true, 3));
        assert_eq!(counts("ade:E6"), (6, 5, true, 3));
        assert_eq!(counts("ade:E7"), (7, 6, true, 3));
        assert_eq!(counts("ade:E8"), (8, 7, true, 3));
        assert_eq!(counts("ade:Et6"), (7, 6, true, 3));
        assert_eq!(counts("ade:Et7"), (8, 7, true, 3));
        assert_eq!(counts("ade:Et8"), (9, 8, true, 3));
        for s in ["ade:A,5", "ade:D,6", "ade:Dt,6", "ade:E8", "ade:Et6"] {
            assert_eq!(build(s).valences()[0], 1, "{s} root is a leaf");
        }
        assert!("ade:At,2".parse::<GraphFamily>().unwrap().build().is_err());
        assert!("ade:E6,7".parse::<GraphFamily>().unwrap().build().is_err());
    }

    #[test]
    fn chord_and_prism() {
        let c8p = build("cplus:8");
        assert_eq!(basic_stats(&c8p).valences, vec![3; 8]);
        let c10_4 = build("chord:10,4");
        assert_eq!(basic_stats(&c10_4).valences, vec![4; 10]);
        let pr = build("prism:c5");
        assert_eq!((pr.n(), pr.edge_count()), (10, 15));
    }
}
