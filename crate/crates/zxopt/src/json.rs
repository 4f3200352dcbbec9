// zxopt - exhaustive search optimisation of quantum circuits
//         using the ZX-calculus
// Copyright (C) 2026 - the zxopt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `.zx.json` wire format for diagrams.
//!
//! ```json
//! {
//!   "vertices": [{"id": 0, "kind": "B", "phase": "0/1"}, ...],
//!   "edges": [{"src": 0, "dst": 1, "type": "plain"}, ...],
//!   "inputs": [0],
//!   "outputs": [3]
//! }
//! ```
//!
//! Phases are serialised reduced and normalised (`num/den` with the value in
//! `[0, 2pi)`), edges with `src < dst`. Deserialisation validates the full
//! set of diagram invariants and reports each violation with its own
//! diagnostic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Diagram, EdgeType, InvariantError, VertexKind};
use crate::phase::{Phase, PhaseParseError};

#[derive(Debug, Serialize, Deserialize)]
struct VertexJson {
    id: usize,
    kind: String,
    phase: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeJson {
    src: usize,
    dst: usize,
    #[serde(rename = "type")]
    edge_type: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct DiagramJson {
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed diagram json: {0}")]
    Malformed(#[from] serde_json::Error),
    #[error("vertex {id}: unknown kind `{kind}`, expected Z|X|B")]
    UnknownKind { id: usize, kind: String },
    #[error("vertex {id}: unknown phase: {source}")]
    BadPhase {
        id: usize,
        #[source]
        source: PhaseParseError,
    },
    #[error("edge {src}-{dst}: unknown type `{edge_type}`, expected plain|h")]
    UnknownEdgeType {
        src: usize,
        dst: usize,
        edge_type: String,
    },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// Serialise a diagram; deterministic for a given diagram.
pub fn to_json(d: &Diagram) -> String {
    let doc = DiagramJson {
        vertices: d
            .vertices()
            .map(|(id, data)| VertexJson {
                id,
                kind: match data.kind {
                    VertexKind::Z => "Z".into(),
                    VertexKind::X => "X".into(),
                    VertexKind::Boundary => "B".into(),
                },
                phase: data.phase.to_string(),
            })
            .collect(),
        edges: d
            .edges()
            .map(|(src, dst, et)| EdgeJson {
                src,
                dst,
                edge_type: match et {
                    EdgeType::Plain => "plain".into(),
                    EdgeType::Hadamard => "h".into(),
                },
            })
            .collect(),
        inputs: d.inputs().to_vec(),
        outputs: d.outputs().to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("diagram json always serialises")
}

/// Parse and validate a `.zx.json` document.
pub fn from_json(text: &str) -> Result<Diagram, JsonError> {
    let doc: DiagramJson = serde_json::from_str(text)?;
    let mut vertices = Vec::with_capacity(doc.vertices.len());
    for v in &doc.vertices {
        let kind = match v.kind.as_str() {
            "Z" => VertexKind::Z,
            "X" => VertexKind::X,
            "B" => VertexKind::Boundary,
            other => {
                return Err(JsonError::UnknownKind { id: v.id, kind: other.to_string() })
            }
        };
        let phase: Phase = v
            .phase
            .parse()
            .map_err(|source| JsonError::BadPhase { id: v.id, source })?;
        vertices.push((v.id, kind, phase));
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for e in &doc.edges {
        let et = match e.edge_type.as_str() {
            "plain" => EdgeType::Plain,
            "h" => EdgeType::Hadamard,
            other => {
                return Err(JsonError::UnknownEdgeType {
                    src: e.src,
                    dst: e.dst,
                    edge_type: other.to_string(),
                })
            }
        };
        edges.push((e.src, e.dst, et));
    }
    Ok(Diagram::from_parts(vertices, edges, doc.inputs, doc.outputs)?)
}
