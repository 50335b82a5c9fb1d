//! Edge-graceful labelings of small graphs.
//!
//! The crate combines three independent lines of evidence about whether a
//! graph admits an edge-graceful labeling:
//!
//! * [`lo`]: Lo's divisibility condition, necessary but not sufficient;
//! * [`diophantine`]: the factor-pair solver used to find every usual fan
//!   `F_{1,n}` that passes Lo's condition;
//! * [`search`]: a pruned backtracking search that builds a labeling or
//!   proves none exists.
//!
//! Everything here is `no_std` and only needs an allocator.
#![no_std]

extern crate alloc;

pub mod diophantine;
pub mod graph;
pub mod labeling;
pub mod lo;
pub mod search;

pub use graph::{cycle, fan, path, Graph, GraphError};
pub use labeling::{induce, verify, EdgeLabeling, InducedLabels, LabelingError, Verdict};
pub use lo::{classify_fans, fan_lo_quotient, lo_check, LoError, LoReport};
