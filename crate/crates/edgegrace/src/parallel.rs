//! Data-parallel search over the first edge's label.
//!
//! In `All` and `Count` modes every branch runs to completion and branch
//! results are concatenated in label order, so the solutions match the
//! sequential search exactly. In `First` mode the branch that finds a
//! labeling raises a shared stop flag; the reported labeling is then the one
//! from the lowest-labelled branch that finished with a hit, which may differ
//! from the sequential first solution.

use std::sync::atomic::{AtomicBool, Ordering};

use edgegrace_core::search::{SearchError, SearchMode, SearchOptions, SearchOutcome, Searcher};
use edgegrace_core::Graph;
use rayon::prelude::*;

pub fn search_parallel(graph: &Graph, options: SearchOptions) -> Result<SearchOutcome, SearchError> {
    let searcher = Searcher::new(graph, options)?;
    if graph.q() == 0 {
        return Ok(searcher.run(None));
    }
    let stop = AtomicBool::new(false);
    let first = options.mode == SearchMode::First;
    let parts: Vec<SearchOutcome> = searcher
        .branches()
        .into_par_iter()
        .map(|label| {
            let out = searcher.run_branch(label, first.then_some(&stop));
            if first && out.count > 0 {
                stop.store(true, Ordering::Relaxed);
            }
            out
        })
        .collect();
    let cap = match options.mode {
        SearchMode::First => Some(1),
        _ => options.limit.map(|l| l as u64),
    };
    Ok(SearchOutcome::merge(parts, cap))
}
