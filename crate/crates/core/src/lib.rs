//! Exact metric dimension of small graphs.
//!
//! The solver tests candidate landmark sets against the distance matrix and
//! shrinks the candidate space by enumerating only one lexicographically
//! least representative per orbit of the automorphism group on `k`-subsets.
//!
//! Module map:
//!
//! * [`graph`]: dense bit-row graphs, graph6 and edge-list codecs, distance
//!   matrices, and structural checks (intersection arrays, SRG parameters).
//! * [`families`]: constructors for Johnson, Kneser, Hamming, Paley,
//!   Hadamard and projective-plane graphs plus embedded sporadic graphs.
//! * [`permgroup`]: permutations, Schreier–Sims stabilizer chains and the
//!   automorphism group search.
//! * [`symsearch`]: lex-leader orbit representatives on subsets and a
//!   Burnside orbit counter.
//! * [`metricdim`]: resolving-set checks, the exact search and closed forms.
//! * [`catalog`]: manifest of known values and a verification harness.
//! * [`expr`]: the constructor-expression grammar shared by the CLI and the
//!   manifest format.

pub mod catalog;
pub mod expr;
pub mod families;
pub mod graph;
pub mod metricdim;
pub mod parallel;
pub mod permgroup;
pub mod symsearch;

pub use graph::{DistanceMatrix, Graph, GraphError};
pub use metricdim::{metric_dimension, DimResult, SearchOptions, Strategy};
pub use permgroup::{automorphism_group, Permutation, StabilizerChain};
