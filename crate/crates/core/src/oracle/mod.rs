//! Small exhaustive searches used as ground truth for the constructions.

pub mod search;
pub mod skolem;
pub mod triples;

pub use search::{brute_force_search, SEARCH_CAP};
pub use skolem::{
    find_skolem, skolem_to_triples, verify_skolem, SkolemFailure, SkolemSequence, SkolemViolation,
};
pub use triples::{triples_exact_cover, Triple, TripleMode, TriplePartition, TRIPLES_CAP};
