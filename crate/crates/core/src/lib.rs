//! Important vertex separators and vertex multiway cut above the isolating-cut
//! lower bound.
//!
//! The crate computes the unique smallest important X-Y separator, enumerates
//! all important separators whose size exceeds the minimum by at most `k`, and
//! uses that enumeration to decide whether a multiway cut of size at most
//! `m + k` exists, where `m` is the largest minimum isolating cut.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod flow;
pub mod format;
pub mod graph;
pub mod important;
pub mod mwc;
pub mod oracle;
pub mod separator;
pub mod witness;

pub use enumerate::{binomial_bound, enumerate_important, enumerate_important_with, Parallelism};
pub use error::{Error, Result};
pub use flow::{max_disjoint_paths, min_separator, PathSystem};
pub use format::GraphFile;
pub use graph::{Graph, VertexId, VertexSet};
pub use important::{is_important, is_normalized, normalize, smallest_important_separator};
pub use mwc::{
    lower_bound_m, min_isolating_cut, solve_above_guarantee, solve_above_guarantee_with, solve_budget, CutCertificate,
    MwcInstance,
};
pub use separator::{bottom, compare, is_minimal, is_separator, top, Separator, SeparatorOrder};
pub use witness::{attribute_of, compound_witness, cover_excess, important_witness, Attribute, ExcessValue, Normalized};
