//! Rule engine deciding whether a graph has quantum symmetry, i.e. whether
//! its quantum automorphism group is strictly larger than the classical one.
//! Rules are sufficient conditions; anything unmatched stays Unknown.

use gsym_core::ops::{complement, product};
use gsym_core::{Graph, GraphFamily, ProductKind, Result};
use gsym_symmetry::{is_isomorphic, table_rows};
use serde::Serialize;

use crate::circulant::{no_quantum_cert_circulant, Certificate};

/// Largest vertex count matched against the classification table.
pub const TABLE_CAP: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    HasQuantum,
    NoQuantum,
    Unknown,
}

impl Verdict {
    pub fn is_decisive(self) -> bool {
        self != Verdict::Unknown
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QFlag {
    pub verdict: Verdict,
    pub rule: String,
    pub reason: String,
    pub certificate: Option<Certificate>,
}

impl QFlag {
    fn new(verdict: Verdict, rule: &str, reason: impl Into<String>) -> Self {
        QFlag { verdict, rule: rule.into(), reason: reason.into(), certificate: None }
    }

    pub(crate) fn unknown(rule: &str, reason: String) -> Self {
        QFlag::new(Verdict::Unknown, rule, reason)
    }
}

/// A table row with its classical and quantum groups.
#[derive(Clone, Debug, Serialize)]
pub struct QuantumRow {
    pub label: &'static str,
    pub family: GraphFamily,
    pub classical: &'static str,
    pub quantum: &'static str,
}

impl QuantumRow {
    pub fn differs(&self) -> bool {
        self.classical != self.quantum
    }
}

/// Quantum group column of the classification table, keyed by row label.
const QUANTUM_COLUMN: [(&str, &str, &str); 39] = [
    ("K2", "Z2", "Z2"),
    ("K3", "S3", "S3"),
    ("2K2", "H2", "H2+"),
    ("K4", "S4", "S4+"),
    ("C5", "D5", "D5"),
    ("K5", "S5", "S5+"),
    ("C6", "D6", "D6"),
    ("2K3", "S3 wr Z2", "S3 wr* Z2"),
    ("3K2", "H3", "H3+"),
    ("K6", "S6", "S6+"),
    ("C7", "D7", "D7"),
    ("K7", "S7", "S7+"),
    ("C8", "D8", "D8"),
    ("C8+", "D8", "D8"),
    ("P(C4)", "H3", "S4+ x Z2"),
    ("2K4", "S4 wr Z2", "S4+ wr* Z2"),
    ("2C4", "H2 wr Z2", "H2+ wr* Z2"),
    ("4K2", "H4", "H4+"),
    ("K8", "S8", "S8+"),
    ("C9", "D9", "D9"),
    ("C9^3", "D9", "D9"),
    ("K3xK3", "S3 wr Z2", "S3 wr Z2"),
    ("3K3", "S3 wr S3", "S3 wr* S3"),
    ("K9", "S9", "S9+"),
    ("C10", "D10", "D10"),
    ("C10^2", "D10", "D10"),
    ("C10+", "D10", "D10"),
    ("P(C5)", "D10", "D10"),
    ("P(K5)", "S5 x Z2", "S5+ x Z2"),
    ("C10^4", "Z2 wr D5", "Z2 wr* D5"),
    ("2C5", "D5 wr Z2", "D5 wr* Z2"),
    ("2K5", "S5 wr Z2", "S5+ wr* Z2"),
    ("5K2", "H5", "H5+"),
    ("K10", "S10", "S10+"),
    ("P10", "S5", "S5"),
    ("C11", "D11", "D11"),
    ("C11^2", "D11", "D11"),
    ("C11^3", "D11", "D11"),
    ("K11", "S11", "S11+"),
];

/// The classification table with both group columns.
pub fn quantum_table() -> Vec<QuantumRow> {
    table_rows()
        .into_iter()
        .map(|row| {
            let &(_, classical, quantum) = QUANTUM_COLUMN
                .iter()
                .find(|(label, ..)| *label == row.label)
                .expect("every table row has a quantum entry");
            QuantumRow { label: row.label, family: row.family, classical, quantum }
        })
        .collect()
}

fn iso_to(g: &Graph, family: &GraphFamily) -> bool {
    family.build().is_ok_and(|h| h.n() == g.n() && is_isomorphic(g, &h).unwrap_or(false))
}

fn regular_of(g: &Graph) -> Option<usize> {
    let v = g.valences();
    let d = *v.first()?;
    v.iter().all(|&x| x == d).then_some(d)
}

fn complete_or_empty(g: &Graph) -> Option<QFlag> {
    let n = g.n();
    let full = n * n.saturating_sub(1) / 2;
    (n >= 4 && (g.edge_count() == 0 || g.edge_count() == full)).then(|| {
        QFlag::new(Verdict::HasQuantum, "complete-or-empty", format!("K{n} or its complement: quantum group S{n}+"))
    })
}

fn isomorphic_components(g: &Graph) -> Result<Option<QFlag>> {
    let parts: Vec<Graph> = g.components().into_iter().filter(|c| c.len() >= 2).map(|c| g.induced(&c)).collect();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if parts[i].n() == parts[j].n() && is_isomorphic(&parts[i], &parts[j])? {
                return Ok(Some(QFlag::new(
                    Verdict::HasQuantum,
                    "isomorphic-components",
                    format!("two isomorphic components on {} vertices: free wreath product", parts[i].n()),
                )));
            }
        }
    }
    Ok(None)
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && regular_of(g) == Some(2) && g.is_connected()
}

fn hypercube_dimension(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n < 4 || !n.is_power_of_two() {
        return None;
    }
    let d = n.trailing_zeros() as usize;
    (regular_of(g) == Some(d) && iso_to(g, &GraphFamily::Hypercube(d))).then_some(d)
}

fn is_k3_torus(g: &Graph) -> bool {
    g.n() == 9 && regular_of(g) == Some(4) && {
        let k3 = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).expect("valid");
        is_isomorphic(g, &product(&k3, &k3, ProductKind::Direct)).unwrap_or(false)
    }
}

/// Structural sufficient conditions, in priority order.
fn structural(g: &Graph) -> Result<Option<QFlag>> {
    if let Some(f) = complete_or_empty(g) {
        return Ok(Some(f));
    }
    if let Some(f) = isomorphic_components(g)? {
        return Ok(Some(f));
    }
    let n = g.n();
    if is_cycle(g) {
        return Ok(Some(if n == 4 {
            QFlag::new(Verdict::HasQuantum, "four-cycle", "C4 has a non-classical quantum group inside S4+")
        } else {
            QFlag::new(Verdict::NoQuantum, "cycle", format!("the quantum group of C{n} is D{n}"))
        }));
    }
    if let Some(d) = hypercube_dimension(g) {
        return Ok(Some(QFlag::new(
            Verdict::HasQuantum,
            "hypercube",
            format!("hypercube of dimension {d}: quantum group O{d}^-1"),
        )));
    }
    if n == 10 && regular_of(g) == Some(3) && iso_to(g, &GraphFamily::Petersen) {
        return Ok(Some(QFlag::new(Verdict::NoQuantum, "petersen", "the Petersen graph has no quantum symmetry")));
    }
    if is_k3_torus(g) {
        return Ok(Some(QFlag::new(Verdict::NoQuantum, "k3-torus", "K3 x K3 has quantum group S3 wr Z2")));
    }
    Ok(None)
}

/// Structural rules, then the circulant certificate.
fn direct_rules(g: &Graph) -> Result<Option<QFlag>> {
    if let Some(f) = structural(g)? {
        return Ok(Some(f));
    }
    let cert = no_quantum_cert_circulant(g);
    Ok(cert.verdict.is_decisive().then_some(cert))
}

fn table_lookup(g: &Graph, gc: &Graph) -> Result<Option<QFlag>> {
    if g.n() > TABLE_CAP {
        return Ok(None);
    }
    for row in quantum_table() {
        let h = row.family.build()?;
        if h.n() != g.n() {
            continue;
        }
        let via = if is_isomorphic(g, &h)? {
            ""
        } else if is_isomorphic(gc, &h)? {
            "complement of "
        } else {
            continue;
        };
        let verdict = if row.differs() { Verdict::HasQuantum } else { Verdict::NoQuantum };
        let reason = format!("{via}table row {}: classical {}, quantum {}", row.label, row.classical, row.quantum);
        return Ok(Some(QFlag::new(verdict, "table", reason)));
    }
    Ok(None)
}

/// First decisive verdict among structural rules, the circulant
/// certificate, the same rules on the complement and the table lookup.
pub fn quantum_flag(g: &Graph) -> Result<QFlag> {
    if let Some(f) = direct_rules(g)? {
        return Ok(f);
    }
    let gc = complement(g);
    if let Some(f) = direct_rules(&gc)? {
        return Ok(QFlag { rule: format!("complement/{}", f.rule), reason: format!("complement: {}", f.reason), ..f });
    }
    if let Some(f) = table_lookup(g, &gc)? {
        return Ok(f);
    }
    Ok(QFlag::new(Verdict::Unknown, "none", "no rule applies"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flag(s: &str) -> QFlag {
        quantum_flag(&s.parse::<GraphFamily>().unwrap().build().unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let f = flag("copies:2,k2");
        assert_eq!((f.verdict, f.rule.as_str()), (Verdict::HasQuantum, "isomorphic-components"));
        assert_eq!(flag("c5").verdict, Verdict::NoQuantum);
        assert_eq!(flag("cube3").verdict, Verdict::HasQuantum);
        assert_eq!(flag("c4").rule, "four-cycle");
        assert_eq!(flag("k5").rule, "complete-or-empty");
        assert_eq!(flag("k3").rule, "cycle");
        assert_eq!(flag("k2").rule, "table");
        assert_eq!(flag("petersen").rule, "petersen");
        assert_eq!(flag("kneser:5,2").rule, "petersen");
        assert_eq!(flag("direct:k3*k3").rule, "k3-torus");
        assert_eq!(flag("chord:11,2").verdict, Verdict::NoQuantum);
    }
}
