//! Noncrossing combinatorics, Temperley-Lieb diagram algebra, Gram and
//! meander determinants, braids and the Jones polynomial of braid closures.

pub mod braid;
pub mod diagram;
pub mod gram;
pub mod laurent;
pub mod partitions;
pub mod tl;

pub use braid::{braid_to_tl, jones_polynomial, loop_value, BraidWord};
pub use diagram::{enumerate_nc2, NCPairing, NC2_POINT_CAP};
pub use gram::{
    basis_elements, chebyshev, fattening_gram_relation, gram_det, gram_exponents, gram_matrix, lindstrom_det,
    meander_det, mobius_matrix, order_matrix, Basis, GRAM_CAP,
};
pub use laurent::LaurentPoly;
pub use partitions::{enumerate_nc, enumerate_partitions, fatten, shrink, SetPartition, PARTITION_CAP};
pub use tl::{Scalar, TLElement};
