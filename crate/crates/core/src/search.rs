//! Backtracking search for edge-graceful labelings.
//!
//! Edges are visited in a fixed order and labelled depth-first, trying the
//! unused labels in increasing order. With pruning enabled, a vertex's residue
//! is fixed as soon as its last incident edge is labelled, and the branch is
//! abandoned if that residue is already taken. Without pruning the residues
//! are only compared at full assignments.
//!
//! Lo's condition is deliberately not consulted: an exhausted search is an
//! independent refutation.

use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicBool, Ordering};

use crate::graph::Graph;
use crate::labeling::{verify, EdgeLabeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SearchMode {
    /// Stop at the first labeling.
    #[default]
    First,
    /// Collect every labeling (up to the limit).
    All,
    /// Count labelings without storing them.
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EdgeOrder {
    /// The graph's own edge order.
    AsGiven,
    /// Group edges so that low-degree vertices complete as early as possible.
    #[default]
    CompletionHeuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchOptions {
    pub mode: SearchMode,
    /// Maximum number of solutions to collect or count. Must be at least 1.
    pub limit: Option<usize>,
    pub edge_order: EdgeOrder,
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { mode: SearchMode::First, limit: None, edge_order: EdgeOrder::default(), prune: true }
    }
}

impl SearchOptions {
    pub fn with_mode(mode: SearchMode) -> Self {
        SearchOptions { mode, ..SearchOptions::default() }
    }

    fn cap(&self) -> Option<u64> {
        match self.mode {
            SearchMode::First => Some(1),
            SearchMode::All | SearchMode::Count => self.limit.map(|l| l as u64),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchError {
    /// A graph with two or more vertices and no edges has nothing to label.
    NoEdges { p: usize },
    ZeroLimit,
    /// The brute-force oracle refuses graphs with more than this many edges.
    TooManyEdges { q: usize, max: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::NoEdges { p } => write!(f, "graph has {p} vertices but no edges to label"),
            SearchError::ZeroLimit => f.write_str("solution limit must be at least 1"),
            SearchError::TooManyEdges { q, max } => {
                write!(f, "brute force over {q}! labelings refused (at most {max} edges)")
            }
        }
    }
}

impl core::error::Error for SearchError {}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchOutcome {
    /// Empty in [`SearchMode::Count`].
    pub solutions: Vec<EdgeLabeling>,
    /// Number of labelings found, stored or not.
    pub count: u64,
    /// Label assignments tried, one per search-tree node below the root.
    pub nodes_expanded: u64,
    /// The whole space under the given mode and limit was covered.
    pub exhausted: bool,
}

impl SearchOutcome {
    /// Concatenates branch outcomes in branch order, keeping at most `cap` solutions.
    pub fn merge(parts: impl IntoIterator<Item = SearchOutcome>, cap: Option<u64>) -> SearchOutcome {
        let mut out = SearchOutcome { exhausted: true, ..SearchOutcome::default() };
        for part in parts {
            out.solutions.extend(part.solutions);
            out.count += part.count;
            out.nodes_expanded += part.nodes_expanded;
            out.exhausted &= part.exhausted;
        }
        if let Some(cap) = cap {
            if out.count > cap {
                out.count = cap;
                out.exhausted = false;
            }
            out.solutions.truncate(cap as usize);
        }
        out
    }
}

/// Runs a sequential search over the whole space.
pub fn search(graph: &Graph, options: SearchOptions) -> Result<SearchOutcome, SearchError> {
    Ok(Searcher::new(graph, options)?.run(None))
}

/// A prepared search: validated options and a fixed edge order.
///
/// The space splits into independent branches by the label of the first
/// edge in the order; [`Searcher::run_branch`] explores one of them.
#[derive(Debug, Clone)]
pub struct Searcher<'g> {
    graph: &'g Graph,
    options: SearchOptions,
    order: Vec<usize>,
}

impl<'g> Searcher<'g> {
    pub fn new(graph: &'g Graph, options: SearchOptions) -> Result<Self, SearchError> {
        if options.limit == Some(0) {
            return Err(SearchError::ZeroLimit);
        }
        if graph.q() == 0 && graph.p() > 1 {
            return Err(SearchError::NoEdges { p: graph.p() });
        }
        let order = match options.edge_order {
            EdgeOrder::AsGiven => (0..graph.q()).collect(),
            EdgeOrder::CompletionHeuristic => completion_order(graph),
        };
        Ok(Searcher { graph, options, order })
    }

    pub fn options(&self) -> &SearchOptions {
        &self.options
    }

    /// Edge indices in the order they are labelled.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Branch keys in exploration order: the labels the first edge can take.
    pub fn branches(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.graph.q()
    }

    /// Explores everything. `stop` is polled at every node.
    pub fn run(&self, stop: Option<&AtomicBool>) -> SearchOutcome {
        if self.graph.q() == 0 {
            return self.edgeless();
        }
        State::new(self, stop).explore(None)
    }

    /// Explores only the labelings that give the first edge `first_label`.
    pub fn run_branch(&self, first_label: usize, stop: Option<&AtomicBool>) -> SearchOutcome {
        assert!(self.branches().contains(&first_label), "branch label out of range");
        State::new(self, stop).explore(Some(first_label))
    }

    // p <= 1: the empty labeling of a single vertex is vacuously graceful,
    // an empty graph has no labeling worth reporting.
    fn edgeless(&self) -> SearchOutcome {
        let mut out = SearchOutcome { exhausted: true, ..SearchOutcome::default() };
        if self.graph.p() == 1 {
            out.count = 1;
            if self.options.mode != SearchMode::Count {
                out.solutions.push(EdgeLabeling::new_unchecked(self.graph.clone(), Vec::new()));
            }
        }
        out
    }
}

/// Greedy ordering: repeatedly take the vertex with the fewest edges not yet
/// placed (then lowest degree, then lowest index) and append those edges by index.
fn completion_order(graph: &Graph) -> Vec<usize> {
    let incidence = graph.incidence();
    let mut pending: Vec<usize> = incidence.iter().map(Vec::len).collect();
    let mut placed = alloc::vec![false; graph.q()];
    let mut order = Vec::with_capacity(graph.q());
    while order.len() < graph.q() {
        let v = (0..graph.p())
            .filter(|&v| pending[v] > 0)
            .min_by_key(|&v| (pending[v], incidence[v].len(), v))
            .expect("unplaced edges remain");
        for &e in &incidence[v] {
            if !placed[e] {
                placed[e] = true;
                order.push(e);
                let (a, b) = graph.edges()[e];
                pending[a] -= 1;
                pending[b] -= 1;
            }
        }
    }
    order
}

struct State<'s, 'g> {
    searcher: &'s Searcher<'g>,
    stop: Option<&'s AtomicBool>,
    cap: Option<u64>,
    p: u64,
    assigned: Vec<usize>,
    used: Vec<bool>,
    sums: Vec<u64>,
    remaining: Vec<usize>,
    taken: Vec<bool>,
    out: SearchOutcome,
    halted: bool,
}

impl<'s, 'g> State<'s, 'g> {
    fn new(searcher: &'s Searcher<'g>, stop: Option<&'s AtomicBool>) -> Self {
        let g = searcher.graph;
        State {
            searcher,
            stop,
            cap: searcher.options.cap(),
            p: g.p() as u64,
            assigned: alloc::vec![0; g.q()],
            used: alloc::vec![false; g.q() + 1],
            sums: alloc::vec![0; g.p()],
            remaining: g.degrees(),
            taken: alloc::vec![false; g.p()],
            out: SearchOutcome::default(),
            halted: false,
        }
    }

    fn explore(mut self, first_label: Option<usize>) -> SearchOutcome {
        let prune = self.searcher.options.prune;
        // isolated vertices are complete from the start with residue 0
        let isolated = self.remaining.iter().filter(|&&r| r == 0).count();
        if prune && isolated > 1 {
            self.out.exhausted = true;
            return self.out;
        }
        if prune && isolated == 1 {
            self.taken[0] = true;
        }
        self.descend(0, first_label);
        self.out.exhausted = !self.halted;
        self.out
    }

    fn descend(&mut self, depth: usize, only: Option<usize>) {
        let q = self.assigned.len();
        if depth == q {
            self.leaf();
            return;
        }
        let edge = self.searcher.order[depth];
        let (u, v) = self.searcher.graph.edges()[edge];
        let labels = match only {
            Some(l) => l..=l,
            None => 1..=q,
        };
        for label in labels {
            if self.used[label] {
                continue;
            }
            if self.stop.is_some_and(|s| s.load(Ordering::Relaxed)) {
                self.halted = true;
                return;
            }
            self.out.nodes_expanded += 1;
            self.assign(edge, u, v, label);
            let fixed = if self.searcher.options.prune { self.finalize(u, v) } else { Ok(Fixed::default()) };
            if let Ok(fixed) = fixed {
                self.descend(depth + 1, None);
                self.release(fixed);
            }
            self.unassign(edge, u, v, label);
            if self.halted {
                return;
            }
        }
    }

    fn assign(&mut self, edge: usize, u: usize, v: usize, label: usize) {
        self.assigned[edge] = label;
        self.used[label] = true;
        self.sums[u] += label as u64;
        self.sums[v] += label as u64;
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
    }

    fn unassign(&mut self, edge: usize, u: usize, v: usize, label: usize) {
        self.assigned[edge] = 0;
        self.used[label] = false;
        self.sums[u] -= label as u64;
        self.sums[v] -= label as u64;
        self.remaining[u] += 1;
        self.remaining[v] += 1;
    }

    /// Claims the residues of whichever endpoints just became complete.
    fn finalize(&mut self, u: usize, v: usize) -> Result<Fixed, ()> {
        let mut fixed = Fixed::default();
        for w in [u, v] {
            if self.remaining[w] != 0 {
                continue;
            }
            let r = (self.sums[w] % self.p) as usize;
            if self.taken[r] {
                self.release(fixed);
                return Err(());
            }
            self.taken[r] = true;
            fixed.push(r);
        }
        Ok(fixed)
    }

    fn release(&mut self, fixed: Fixed) {
        for r in fixed.iter() {
            self.taken[r] = false;
        }
    }

    fn leaf(&mut self) {
        if !self.searcher.options.prune && !self.residues_distinct() {
            return;
        }
        self.out.count += 1;
        if self.searcher.options.mode != SearchMode::Count {
            let labeling = EdgeLabeling::new_unchecked(self.searcher.graph.clone(), self.assigned.clone());
            debug_assert!(verify(&labeling).edge_graceful);
            self.out.solutions.push(labeling);
        }
        if self.cap.is_some_and(|cap| self.out.count >= cap) {
            self.halted = true;
        }
    }

    fn residues_distinct(&mut self) -> bool {
        self.taken.iter_mut().for_each(|t| *t = false);
        let mut distinct = true;
        for &s in &self.sums {
            let r = (s % self.p) as usize;
            if core::mem::replace(&mut self.taken[r], true) {
                distinct = false;
                break;
            }
        }
        self.taken.iter_mut().for_each(|t| *t = false);
        distinct
    }
}

/// Up to two residues fixed by one assignment.
#[derive(Default)]
struct Fixed {
    slots: [usize; 2],
    len: usize,
}

impl Fixed {
    fn push(&mut self, r: usize) {
        self.slots[self.len] = r;
        self.len += 1;
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.slots[..self.len].iter().copied()
    }
}

/// Largest edge count [`exhaustive_exists`] accepts.
pub const EXHAUSTIVE_MAX_EDGES: usize = 10;

/// Brute force over all `q!` labelings, checking each with [`verify`].
///
/// A test oracle for [`search`]; shares none of its machinery.
pub fn exhaustive_exists(graph: &Graph) -> Result<bool, SearchError> {
    let mut found = false;
    for_each_permutation(graph, |l| {
        found = verify(l).edge_graceful;
        !found
    })?;
    Ok(found)
}

/// Number of edge-graceful labelings, by the same brute force as [`exhaustive_exists`].
pub fn exhaustive_count(graph: &Graph) -> Result<u64, SearchError> {
    let mut count = 0;
    for_each_permutation(graph, |l| {
        count += u64::from(verify(l).edge_graceful);
        true
    })?;
    Ok(count)
}

/// Heap's algorithm over permutations of `1..=q`; `visit` returns false to stop.
fn for_each_permutation(
    graph: &Graph,
    mut visit: impl FnMut(&EdgeLabeling) -> bool,
) -> Result<(), SearchError> {
    let q = graph.q();
    if q > EXHAUSTIVE_MAX_EDGES {
        return Err(SearchError::TooManyEdges { q, max: EXHAUSTIVE_MAX_EDGES });
    }
    let mut labels: Vec<usize> = (1..=q).collect();
    let mut check = |labels: &[usize]| {
        let labeling = EdgeLabeling::new(graph.clone(), labels.to_vec()).expect("a permutation");
        visit(&labeling)
    };
    if !check(&labels) {
        return Ok(());
    }
    let mut c = alloc::vec![0usize; q];
    let mut i = 1;
    while i < q {
        if c[i] < i {
            if i % 2 == 0 {
                labels.swap(0, i);
            } else {
                labels.swap(c[i], i);
            }
            if !check(&labels) {
                return Ok(());
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(())
}
