//! JSON interchange documents for graphs and labelings.
//!
//! ```json
//! {"p": 3, "edges": [[0, 1], [0, 2], [1, 2]]}
//! {"graph": {"p": 3, "edges": [[0, 1], [0, 2], [1, 2]]}, "labels": [1, 2, 3]}
//! {"graph": "triangle.json", "labels": [1, 2, 3]}
//! ```
//!
//! Edge order is significant: `labels[i]` labels `edges[i]`. A graph given by
//! path is resolved against the directory of the labeling document.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use edgegrace_core::{EdgeLabeling, Graph, GraphError, LabelingError};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("reading {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("parsing {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("invalid labeling: {0}")]
    Labeling(#[from] LabelingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub p: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::new(self.p, self.edges.iter().map(|&[u, v]| (u, v)).collect())
    }
}

impl From<&Graph> for GraphDocument {
    fn from(g: &Graph) -> Self {
        GraphDocument { p: g.p(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() }
    }
}

/// A graph embedded in a labeling document, or a path to a graph document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    Inline(GraphDocument),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingDocument {
    pub graph: GraphSource,
    pub labels: Vec<usize>,
}

impl LabelingDocument {
    pub fn inline(labeling: &EdgeLabeling) -> Self {
        LabelingDocument {
            graph: GraphSource::Inline(labeling.graph().into()),
            labels: labeling.labels().to_vec(),
        }
    }

    /// Resolves the graph (relative paths against `base`) and checks the labels.
    pub fn to_labeling(&self, base: &Path) -> Result<EdgeLabeling, DocumentError> {
        let graph = match &self.graph {
            GraphSource::Inline(doc) => doc.to_graph()?,
            GraphSource::File(path) => {
                let path = if path.is_relative() { base.join(path) } else { path.clone() };
                read_graph(&Input::File(path))?
            }
        };
        Ok(EdgeLabeling::new(graph, self.labels.clone())?)
    }
}

/// Where a document comes from: a file or standard input (`-`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Stdin,
    File(PathBuf),
}

impl Input {
    pub fn parse(arg: &str) -> Self {
        if arg == "-" {
            Input::Stdin
        } else {
            Input::File(PathBuf::from(arg))
        }
    }

    fn name(&self) -> String {
        match self {
            Input::Stdin => "<stdin>".to_owned(),
            Input::File(p) => p.display().to_string(),
        }
    }

    /// Directory relative graph references resolve against.
    pub fn base_dir(&self) -> PathBuf {
        match self {
            Input::File(p) => p.parent().map(Path::to_path_buf).unwrap_or_default(),
            Input::Stdin => PathBuf::new(),
        }
    }

    pub fn read_to_string(&self) -> Result<String, DocumentError> {
        let mut text = String::new();
        let result = match self {
            Input::Stdin => io::stdin().read_to_string(&mut text).map(drop),
            Input::File(p) => fs::read_to_string(p).map(|t| text = t),
        };
        result.map_err(|source| DocumentError::Io { path: self.name(), source })?;
        Ok(text)
    }

    fn parse_json<T: for<'de> Deserialize<'de>>(&self) -> Result<T, DocumentError> {
        let text = self.read_to_string()?;
        serde_json::from_str(&text).map_err(|source| DocumentError::Json { path: self.name(), source })
    }
}

pub fn read_graph(input: &Input) -> Result<Graph, DocumentError> {
    Ok(input.parse_json::<GraphDocument>()?.to_graph()?)
}

pub fn read_labeling(input: &Input) -> Result<EdgeLabeling, DocumentError> {
    input.parse_json::<LabelingDocument>()?.to_labeling(&input.base_dir())
}

pub fn parse_graph(text: &str) -> Result<Graph, DocumentError> {
    let doc: GraphDocument = serde_json::from_str(text)
        .map_err(|source| DocumentError::Json { path: "<text>".to_owned(), source })?;
    Ok(doc.to_graph()?)
}

pub fn graph_to_json(graph: &Graph) -> String {
    serde_json::to_string(&GraphDocument::from(graph)).expect("graph documents always serialize")
}

pub fn labeling_to_json(labeling: &EdgeLabeling) -> String {
    serde_json::to_string(&LabelingDocument::inline(labeling)).expect("labeling documents always serialize")
}
