//! Decidable statements about quantum symmetry: circulant type data,
//! 2-maximality certificates and a rule engine over known results.

pub mod circulant;
pub mod flags;

pub use circulant::{
    circulant_data, circulant_presentations, even_subgroups, is_prime, no_quantum_cert_circulant, two_maximal,
    Certificate, CirculantData, RELABEL_CAP,
};
pub use flags::{quantum_flag, quantum_table, QFlag, QuantumRow, Verdict};
