//! Named permutation groups and the classification table of vertex-transitive
//! graphs with at most 11 vertices, up to complementation.

use std::fmt;

use gsym_core::exact::factorial;
use gsym_core::{GraphFamily, Result};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::search::automorphism_group;

/// A group named by the usual constructors, with its natural degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGroup {
    /// Cyclic `ℤ_n`.
    Z(usize),
    /// Symmetric `S_n`.
    S(usize),
    /// Dihedral `D_n` of order `2n`.
    D(usize),
    /// Hyperoctahedral `H_n = ℤ_2 ≀ S_n` of order `2^n n!`, on `2n` points.
    H(usize),
    /// `G ≀ H` of order `|G|^{deg H}·|H|`.
    Wreath(Box<NamedGroup>, Box<NamedGroup>),
    Direct(Box<NamedGroup>, Box<NamedGroup>),
}

impl NamedGroup {
    pub fn wreath(a: NamedGroup, b: NamedGroup) -> Self {
        NamedGroup::Wreath(Box::new(a), Box::new(b))
    }

    pub fn direct(a: NamedGroup, b: NamedGroup) -> Self {
        NamedGroup::Direct(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            Self::Z(n) | Self::S(n) | Self::D(n) => *n,
            Self::H(n) => 2 * n,
            Self::Wreath(a, b) => a.degree() * b.degree(),
            Self::Direct(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn order(&self) -> BigInt {
        match self {
            Self::Z(n) => BigInt::from(*n),
            Self::S(n) => factorial(*n as u64),
            Self::D(n) => BigInt::from(2 * n),
            Self::H(n) => BigInt::from(2).pow(*n as u32) * factorial(*n as u64),
            Self::Wreath(a, b) => a.order().pow(b.degree() as u32) * b.order(),
            Self::Direct(a, b) => a.order() * b.order(),
        }
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Z(n) => write!(f, "Z{n}"),
            Self::S(n) => write!(f, "S{n}"),
            Self::D(n) => write!(f, "D{n}"),
            Self::H(n) => write!(f, "H{n}"),
            Self::Wreath(a, b) => write!(f, "{a} wr {b}"),
            Self::Direct(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

impl Serialize for NamedGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One table entry: a graph and the group the table assigns to it.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub label: &'static str,
    pub family: GraphFamily,
    pub group: NamedGroup,
}

/// Rows of the table, one per listed graph.
pub fn table_rows() -> Vec<TableRow> {
    use GraphFamily as F;
    use NamedGroup::{D, H, S, Z};
    let b = Box::new;
    let w = NamedGroup::wreath;
    let cyc = F::C;
    let chord = F::CycleWithChords;
    let rows: Vec<(&'static str, GraphFamily, NamedGroup)> = vec![
        ("K2", F::K(2), Z(2)),
        ("K3", F::K(3), S(3)),
        ("2K2", F::Copies(2, b(F::K(2))), H(2)),
        ("K4", F::K(4), S(4)),
        ("C5", cyc(5), D(5)),
        ("K5", F::K(5), S(5)),
        ("C6", cyc(6), D(6)),
        ("2K3", F::Copies(2, b(F::K(3))), w(S(3), Z(2))),
        ("3K2", F::Copies(3, b(F::K(2))), H(3)),
        ("K6", F::K(6), S(6)),
        ("C7", cyc(7), D(7)),
        ("K7", F::K(7), S(7)),
        ("C8", cyc(8), D(8)),
        ("C8+", chord(8, 4), D(8)),
        ("P(C4)", F::Prism(b(cyc(4))), H(3)),
        ("2K4", F::Copies(2, b(F::K(4))), w(S(4), Z(2))),
        ("2C4", F::Copies(2, b(cyc(4))), w(H(2), Z(2))),
        ("4K2", F::Copies(4, b(F::K(2))), H(4)),
        ("K8", F::K(8), S(8)),
        ("C9", cyc(9), D(9)),
        ("C9^3", chord(9, 3), D(9)),
        ("K3xK3", F::Product(gsym_core::ProductKind::Direct, b(F::K(3)), b(F::K(3))), w(S(3), Z(2))),
        ("3K3", F::Copies(3, b(F::K(3))), w(S(3), S(3))),
        ("K9", F::K(9), S(9)),
        ("C10", cyc(10), D(10)),
        ("C10^2", chord(10, 2), D(10)),
        ("C10+", chord(10, 5), D(10)),
        ("P(C5)", F::Prism(b(cyc(5))), D(10)),
        ("P(K5)", F::Prism(b(F::K(5))), NamedGroup::direct(S(5), Z(2))),
        ("C10^4", chord(10, 4), w(Z(2), D(5))),
        ("2C5", F::Copies(2, b(cyc(5))), w(D(5), Z(2))),
        ("2K5", F::Copies(2, b(F::K(5))), w(S(5), Z(2))),
        ("5K2", F::Copies(5, b(F::K(2))), H(5)),
        ("K10", F::K(10), S(10)),
        ("P10", F::Petersen, S(5)),
        ("C11", cyc(11), D(11)),
        ("C11^2", chord(11, 2), D(11)),
        ("C11^3", chord(11, 3), D(11)),
        ("K11", F::K(11), S(11)),
    ];
    rows.into_iter().map(|(label, family, group)| TableRow { label, family, group }).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TableResult {
    pub label: &'static str,
    pub family: GraphFamily,
    pub group: NamedGroup,
    #[serde(serialize_with = "ser_big")]
    pub expected_order: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub computed_order: BigInt,
    pub vertices: usize,
    pub matches: bool,
}

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Computes `|G(X)|` for every row and compares with the named group.
pub fn table_n_le_11() -> Result<Vec<TableResult>> {
    table_rows()
        .into_iter()
        .map(|row| {
            let g = row.family.build()?;
            let computed_order = automorphism_group(&g)?.order;
            let expected_order = row.group.order();
            Ok(TableResult {
                label: row.label,
                vertices: g.n(),
                matches: computed_order == expected_order,
                family: row.family,
                group: row.group,
                expected_order,
                computed_order,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_orders() {
        use NamedGroup::*;
        assert_eq!(NamedGroup::wreath(S(3), Z(2)).order(), BigInt::from(72));
        assert_eq!(NamedGroup::wreath(H(2), Z(2)).order(), BigInt::from(128));
        assert_eq!(NamedGroup::wreath(Z(2), D(5)).order(), BigInt::from(320));
        assert_eq!(NamedGroup::wreath(S(3), S(3)).order(), BigInt::from(1296));
        assert_eq!(H(5).order(), BigInt::from(3840));
        assert_eq!(NamedGroup::direct(S(5), Z(2)).order(), BigInt::from(240));
        assert_eq!(NamedGroup::wreath(Z(2), D(5)).to_string(), "Z2 wr D5");
    }

    #[test]
    fn full_table() {
        let rows = table_n_le_11().unwrap();
        assert!(rows.len() >= 30);
        let bad: Vec<_> = rows.iter().filter(|r| !r.matches).map(|r| (r.label, r.computed_order.to_string())).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
