//! Nullity of signed graphs.
//!
//! A signed graph carries a ±1 label on every edge; its nullity is the
//! multiplicity of the eigenvalue zero of the signed adjacency matrix. For
//! forests and connected unicyclic graphs the nullity reduces to matching
//! numbers and a small cycle table, and this crate computes it that way,
//! emitting a replayable certificate for every value. An exact integer rank
//! oracle cross-checks everything, and an enumeration harness verifies the
//! structural statements exhaustively at small orders.

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graphfile;
pub mod harness;
pub mod linalg;
pub mod matching;
pub mod nullity;
pub mod switching;

pub use classify::{classify_extremal, recognize_family, ClassificationResult, Family, NullityClass};
pub use enumerate::{canonical_form, enumerate_trees, enumerate_unicyclic, signed_variants};
pub use error::{Error, Result};
pub use graph::{k_joining, CycleDescriptor, PendantTree, Sign, SignedGraph};
pub use harness::{verify_all, VerificationReport};
pub use linalg::{adjacency_matrix, char_poly, cycle_eigenvalues, nullity_oracle, IntMatrix};
pub use matching::{is_matched_in_tree, matching_number_bruteforce, max_matching_forest, tree_nullity, Matching};
pub use nullity::{
    classify_type, cycle_nullity, nullity_structural, nullity_unicyclic, pendant_reduce,
    verify_certificate, CertStep, NullityCertificate, UnicyclicType,
};
pub use switching::{
    apply_switching, balance_witness, cycle_sign, is_balanced, normalize_unicyclic,
    switching_equivalent, SwitchingFunction,
};
