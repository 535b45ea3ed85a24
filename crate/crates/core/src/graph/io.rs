//! Graph file format: `{"root": int, "edges": [[int,int],…], "d_max": int}`.

use super::{GraphError, RootedGraph, VertexId};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Wire form of a rooted graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub root: u32,
    pub edges: Vec<(u32, u32)>,
    pub d_max: u32,
}

impl From<&RootedGraph> for GraphJson {
    fn from(g: &RootedGraph) -> Self {
        GraphJson {
            root: g.root().0,
            edges: g.edges().map(|(a, b)| (a.0, b.0)).collect(),
            d_max: g.d_max(),
        }
    }
}

/// Serialises a graph to the JSON wire form.
pub fn graph_to_json(g: &RootedGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph serialisation cannot fail")
}

/// Parses and fully validates a graph from the JSON wire form.
pub fn graph_from_json(s: &str) -> Result<RootedGraph, GraphLoadError> {
    let raw: GraphJson = serde_json::from_str(s)?;
    Ok(RootedGraph::build(&raw.edges, VertexId(raw.root), raw.d_max)?)
}

pub fn save_graph(g: &RootedGraph, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, graph_to_json(g))
}

pub fn load_graph(path: &Path) -> Result<RootedGraph, GraphLoadError> {
    let s = std::fs::read_to_string(path)?;
    graph_from_json(&s)
}

#[derive(Debug, thiserror::Error)]
pub enum GraphLoadError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed graph json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
