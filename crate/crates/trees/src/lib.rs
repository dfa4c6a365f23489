//! Labelled trees: the Prüfer bijection, Cayley counting, and spanning-tree
//! counts by cofactors, Laplacian spectra, circulant symbols and
//! deletion-contraction.

pub mod prufer;
pub mod spanning;

pub use prufer::{
    all_prufer_sequences, count_labeled_trees, count_with_valences, enumerate_labeled_trees, labeled_trees,
    prufer_decode, prufer_encode, LabeledTree, PruferSeq,
};
pub use spanning::{
    cofactor, deletion_contraction, enumerate_spanning_trees, spanning_tree_count, SpanningCount, SpanningMethod,
};
