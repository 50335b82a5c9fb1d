//! File formats, Graphviz output, parallel search and the `edgegrace`
//! command-line tool, on top of [`edgegrace_core`].

pub mod cli;
pub mod document;
pub mod dot;
pub mod format;
pub mod parallel;
