//! Symmetry groups of graphs: automorphism search, orbits and orbitals,
//! product theorems, the small transitive graph table, fixed-point
//! statistics of symmetric groups and partial automorphisms.

pub mod characters;
pub mod orbits;
pub mod partial;
pub mod perm;
pub mod products;
pub mod search;
pub mod table;

pub use characters::{
    character_eigenvector, character_stats, derangement_probability, fixed_point_moments, CharacterEigenvector,
    CharacterStats,
};
pub use orbits::{
    adjacency_constant_on_orbitals, check_eigenspace_preservation, is_doubly_transitive, is_transitive, orbitals,
    orbits, OrbitalPartition,
};
pub use partial::{
    count_partial_perms, interval_component_counts, oriented_cycle, partial_automorphisms, partial_automorphisms_of,
    partial_counts_cycle, PartialPerm,
};
pub use perm::{Perm, PermGroup};
pub use products::{verify_product_theorem, ProductTheoremReport};
pub use search::{automorphism_group, automorphisms_brute_force, find_isomorphism, is_isomorphic};
pub use table::{table_n_le_11, table_rows, NamedGroup, TableResult, TableRow};
