//! Finds an edge-graceful labeling of every usual fan that passes Lo's condition.

use edgegrace_core::search::{search, SearchOptions};
use edgegrace_core::{classify_fans, fan, verify};

fn main() {
    for n in classify_fans(1000) {
        let g = fan(1, n as usize).unwrap();
        let start = std::time::Instant::now();
        let out = search(&g, SearchOptions::default()).unwrap();
        let labeling = &out.solutions[0];
        let verdict = verify(labeling);
        println!(
            "F(1,{n}): labels {:?} residues {:?} graceful={} nodes={} in {:?}",
            labeling.labels(),
            verdict.induced.residues(),
            verdict.edge_graceful,
            out.nodes_expanded,
            start.elapsed()
        );
    }
}
