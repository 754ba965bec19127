//! Vincular-pattern statistics on permutations and words, together with the
//! involution `p` that exchanges `MAJ` and `STAT`. The [`verify`] module
//! checks equidistribution claims exhaustively on small universes.
//!
//! ```
//! use mahonian_core::{p_word, stat_tuple, Word};
//!
//! let v: Word = "342421".parse().unwrap();
//! let w = p_word(&v);
//! assert_eq!(w.to_string(), "321414");
//! assert_eq!(stat_tuple(&v), stat_tuple(&w).swapped());
//! ```

pub mod bijection;
pub mod error;
pub mod partitions;
pub mod patterns;
pub mod stats;
pub mod verify;
pub mod word;

pub use bijection::{
    complement_step, p_dense, p_perm, p_word, reverse_step, trace, WordBijectionTrace,
};
pub use error::{Error, Result};
pub use partitions::{
    decode_refinement, encode_refinement, is_refinement, ppart, psi, wpart, IntervalPartition,
    RefinementEncoding,
};
pub use patterns::{
    catalog, count_occurrences, evaluate_combination, extensions_of_combination,
    extensions_of_pattern, list_occurrences, parse_pattern, PatternCombination, VincularPattern,
};
pub use stats::{adj, des, first, ides, inv, maj, stat, stat_tuple, StatTuple, Statistic};
pub use verify::{
    check_equidistribution, check_involution_and_transport, distribution,
    probe_rearrangement_classes, search_mahonian_extensions, DistributionTable, Limits, Universe,
};
pub use word::{expand, flatten, reduce, unreduce, DenseWord, Letter, Permutation, Word};
