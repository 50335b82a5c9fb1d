//! Edge labelings, the induced vertex residues, and the edge-graceful test.
//!
//! Labels are 1-based: a labeling of a graph with `q` edges is a permutation
//! of `1..=q` aligned with the graph's edge order. Vertex `u` receives the sum
//! of the labels on its incident edges, reduced into `0..p`.
//!
//! Search programs that store 0-based labels have to add each vertex's degree
//! back before reducing; with 1-based labels no correction is needed.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelingError {
    /// The label list is not the same length as the edge list.
    LengthMismatch { labels: usize, edges: usize },
    /// A label lies outside `1..=q`.
    OutOfRange { edge: usize, label: usize, q: usize },
    /// A label is used on two edges.
    Repeated { label: usize, first: usize, second: usize },
}

impl fmt::Display for LabelingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelingError::LengthMismatch { labels, edges } => {
                write!(f, "{labels} labels given for {edges} edges")
            }
            LabelingError::OutOfRange { edge, label, q } => {
                write!(f, "edge {edge}: label {label} outside 1..={q}")
            }
            LabelingError::Repeated { label, first, second } => {
                write!(f, "label {label} used on edges {first} and {second}")
            }
        }
    }
}

impl core::error::Error for LabelingError {}

/// A bijection from edge indices onto `1..=q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    graph: Graph,
    labels: Vec<usize>,
}

impl EdgeLabeling {
    pub fn new(graph: Graph, labels: Vec<usize>) -> Result<Self, LabelingError> {
        let q = graph.q();
        if labels.len() != q {
            return Err(LabelingError::LengthMismatch { labels: labels.len(), edges: q });
        }
        let mut owner: Vec<Option<usize>> = alloc::vec![None; q + 1];
        for (edge, &label) in labels.iter().enumerate() {
            if label == 0 || label > q {
                return Err(LabelingError::OutOfRange { edge, label, q });
            }
            if let Some(first) = owner[label] {
                return Err(LabelingError::Repeated { label, first, second: edge });
            }
            owner[label] = Some(edge);
        }
        Ok(EdgeLabeling { graph, labels })
    }

    /// Builds without checking the permutation invariant. Callers guarantee it.
    pub(crate) fn new_unchecked(graph: Graph, labels: Vec<usize>) -> Self {
        debug_assert!(EdgeLabeling::new(graph.clone(), labels.clone()).is_ok());
        EdgeLabeling { graph, labels }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// `labels()[i]` is the label of edge `i`.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn into_parts(self) -> (Graph, Vec<usize>) {
        (self.graph, self.labels)
    }
}

/// Per-vertex residues, each in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InducedLabels {
    residues: Vec<usize>,
}

impl InducedLabels {
    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    /// First pair of vertices `(u, v)`, `u < v`, with equal residues, smallest `v` first.
    pub fn collision(&self) -> Option<(usize, usize)> {
        let p = self.residues.len();
        let mut first_at: Vec<Option<usize>> = alloc::vec![None; p];
        for (v, &r) in self.residues.iter().enumerate() {
            match first_at[r] {
                Some(u) => return Some((u, v)),
                None => first_at[r] = Some(v),
            }
        }
        None
    }
}

/// Outcome of [`verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub edge_graceful: bool,
    pub induced: InducedLabels,
    /// Two vertices sharing a residue, present iff the labeling is not edge-graceful.
    pub witness: Option<(usize, usize)>,
}

/// Sums the labels around each vertex and reduces modulo `p`.
pub fn induce(labeling: &EdgeLabeling) -> InducedLabels {
    let g = labeling.graph();
    let p = g.p() as u64;
    let mut sums = alloc::vec![0u64; g.p()];
    for (&(u, v), &label) in g.edges().iter().zip(labeling.labels()) {
        sums[u] += label as u64;
        sums[v] += label as u64;
    }
    InducedLabels { residues: sums.into_iter().map(|s| (s % p) as usize).collect() }
}

/// Edge-graceful iff the induced residues are pairwise distinct.
pub fn verify(labeling: &EdgeLabeling) -> Verdict {
    let induced = induce(labeling);
    let witness = induced.collision();
    Verdict { edge_graceful: witness.is_none(), induced, witness }
}
