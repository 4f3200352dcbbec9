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

//! ZX diagrams as simple undirected open graphs.
//!
//! A [`Diagram`] holds Z/X spiders and boundary vertices, connected by plain
//! or Hadamard edges. Hadamard generators are represented as typed edges, not
//! vertices, so a diagram is always a simple graph: whenever an operation
//! would create a parallel edge or a self-loop, [`Diagram::add_edge_smart`]
//! eliminates it on the spot using the standard up-to-scalar identities.
//!
//! All mutating operations on [`Diagram`] are used through value semantics by
//! the rest of the crate: rewrites clone the diagram and mutate the copy.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::phase::Phase;

/// Vertex identifier. Ids are never reused within one diagram lifetime, so
/// match sites stay unambiguous across rewrites.
pub type V = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Z,
    X,
    Boundary,
}

impl VertexKind {
    pub fn is_spider(&self) -> bool {
        matches!(self, VertexKind::Z | VertexKind::X)
    }

    /// The opposite spider colour. Panics on a boundary.
    pub fn opposite(&self) -> VertexKind {
        match self {
            VertexKind::Z => VertexKind::X,
            VertexKind::X => VertexKind::Z,
            VertexKind::Boundary => panic!("boundary vertices have no colour"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeType {
    Plain,
    Hadamard,
}

impl EdgeType {
    pub fn toggled(self) -> EdgeType {
        match self {
            EdgeType::Plain => EdgeType::Hadamard,
            EdgeType::Hadamard => EdgeType::Plain,
        }
    }

    /// The wire left behind when an identity spider between two edges is
    /// removed: plain*plain = plain, plain*h = h, h*h = plain.
    pub fn compose(self, other: EdgeType) -> EdgeType {
        if self == other {
            EdgeType::Plain
        } else {
            EdgeType::Hadamard
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexData {
    pub kind: VertexKind,
    pub phase: Phase,
}

/// An open ZX diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagram {
    vertices: BTreeMap<V, VertexData>,
    adj: BTreeMap<V, BTreeMap<V, EdgeType>>,
    inputs: Vec<V>,
    outputs: Vec<V>,
    num_edges: usize,
    next_id: V,
}

/// A structural invariant violation, reported by [`Diagram::validate`] and
/// diagram deserialisation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(V),
    #[error("edge references unknown vertex {0}")]
    UnknownVertex(V),
    #[error("self-loop at vertex {0}")]
    SelfLoop(V),
    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(V, V),
    #[error("boundary degree: vertex {vertex} has degree {degree}, expected 1")]
    BoundaryDegree { vertex: V, degree: usize },
    #[error("boundary vertex {0} carries a nonzero phase")]
    BoundaryPhase(V),
    #[error("interface lists reference non-boundary vertex {0}")]
    NonBoundaryInInterface(V),
    #[error("interface lists reference unknown vertex {0}")]
    UnknownInterfaceVertex(V),
    #[error("boundary vertex {0} appears {1} times across inputs/outputs, expected exactly once")]
    BoundaryInterfaceCount(V, usize),
}

impl Diagram {
    pub fn new() -> Self {
        Diagram::default()
    }

    /// Add a spider or boundary with phase zero. Returns the fresh id.
    pub fn add_vertex(&mut self, kind: VertexKind) -> V {
        self.add_vertex_with_phase(kind, Phase::zero())
    }

    pub fn add_vertex_with_phase(&mut self, kind: VertexKind, phase: Phase) -> V {
        assert!(
            kind.is_spider() || phase.is_zero(),
            "boundary vertices carry phase 0"
        );
        let v = self.next_id;
        self.next_id += 1;
        self.vertices.insert(v, VertexData { kind, phase });
        self.adj.insert(v, BTreeMap::new());
        v
    }

    /// Remove a vertex together with its incident edges.
    pub fn remove_vertex(&mut self, v: V) {
        debug_assert!(
            !self.inputs.contains(&v) && !self.outputs.contains(&v),
            "removing an interface boundary"
        );
        let nhd = self.adj.remove(&v).expect("unknown vertex");
        self.num_edges -= nhd.len();
        for w in nhd.keys() {
            self.adj.get_mut(w).unwrap().remove(&v);
        }
        self.vertices.remove(&v);
    }

    pub fn contains_vertex(&self, v: V) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn kind(&self, v: V) -> VertexKind {
        self.vertices[&v].kind
    }

    pub fn set_kind(&mut self, v: V, kind: VertexKind) {
        self.vertices.get_mut(&v).expect("unknown vertex").kind = kind;
    }

    pub fn phase(&self, v: V) -> Phase {
        self.vertices[&v].phase
    }

    pub fn set_phase(&mut self, v: V, phase: Phase) {
        self.vertices.get_mut(&v).expect("unknown vertex").phase = phase;
    }

    pub fn add_to_phase(&mut self, v: V, delta: Phase) {
        let data = self.vertices.get_mut(&v).expect("unknown vertex");
        data.phase = data.phase + delta;
    }

    pub fn degree(&self, v: V) -> usize {
        self.adj[&v].len()
    }

    /// Neighbours of `v` in ascending id order.
    pub fn neighbors(&self, v: V) -> impl Iterator<Item = V> + '_ {
        self.adj[&v].keys().copied()
    }

    /// Incident edges of `v` as `(neighbour, edge type)`, ascending.
    pub fn incident_edges(&self, v: V) -> impl Iterator<Item = (V, EdgeType)> + '_ {
        self.adj[&v].iter().map(|(&w, &et)| (w, et))
    }

    pub fn edge_type(&self, u: V, v: V) -> Option<EdgeType> {
        self.adj.get(&u).and_then(|n| n.get(&v).copied())
    }

    pub fn connected(&self, u: V, v: V) -> bool {
        self.edge_type(u, v).is_some()
    }

    /// Insert an edge that must not already exist. Panics on self-loops and
    /// duplicates; rewrites that may produce those go through
    /// [`Diagram::add_edge_smart`] instead.
    pub fn add_edge(&mut self, u: V, v: V, et: EdgeType) {
        assert!(u != v, "self-loop");
        assert!(self.contains_vertex(u) && self.contains_vertex(v));
        let prev = self.adj.get_mut(&u).unwrap().insert(v, et);
        assert!(prev.is_none(), "duplicate edge {u}-{v}");
        self.adj.get_mut(&v).unwrap().insert(u, et);
        self.num_edges += 1;
    }

    /// Change the type of an existing edge. Panics if the edge is missing.
    pub fn set_edge_type(&mut self, u: V, v: V, et: EdgeType) {
        let prev = self.adj.get_mut(&u).unwrap().insert(v, et);
        assert!(prev.is_some(), "no edge {u}-{v}");
        self.adj.get_mut(&v).unwrap().insert(u, et);
    }

    pub fn remove_edge(&mut self, u: V, v: V) -> Option<EdgeType> {
        let et = self.adj.get_mut(&u)?.remove(&v)?;
        self.adj.get_mut(&v).unwrap().remove(&u);
        self.num_edges -= 1;
        Some(et)
    }

    /// Insert an edge, eliminating parallel edges and self-loops on the spot
    /// by the standard up-to-scalar identities:
    ///
    /// - plain self-loop: dropped
    /// - Hadamard self-loop: dropped, pi added to the spider
    /// - same colour, plain + plain: single plain edge
    /// - same colour, Hadamard + Hadamard: both cancel
    /// - same colour, plain + Hadamard: plain edge, pi added to one spider
    /// - opposite colour, plain + plain: both cancel
    /// - opposite colour, Hadamard + Hadamard: single Hadamard edge
    /// - opposite colour, plain + Hadamard: Hadamard edge, pi added
    ///
    /// The parallel-edge cases require both endpoints to be spiders; rewrites
    /// never produce parallel edges at a boundary (boundaries have degree 1).
    pub fn add_edge_smart(&mut self, u: V, v: V, et: EdgeType) {
        if u == v {
            match et {
                EdgeType::Plain => {}
                EdgeType::Hadamard => self.add_to_phase(u, Phase::pi()),
            }
            return;
        }
        let existing = match self.edge_type(u, v) {
            None => {
                self.add_edge(u, v, et);
                return;
            }
            Some(e) => e,
        };
        assert!(
            self.kind(u).is_spider() && self.kind(v).is_spider(),
            "parallel edge at a boundary vertex"
        );
        let same_colour = self.kind(u) == self.kind(v);
        match (same_colour, existing, et) {
            (true, EdgeType::Plain, EdgeType::Plain) => {}
            (true, EdgeType::Hadamard, EdgeType::Hadamard) => {
                self.remove_edge(u, v);
            }
            (true, _, _) => {
                // plain + Hadamard: fusing along the plain edge leaves a
                // Hadamard self-loop, i.e. a pi on the fused spider
                self.adj.get_mut(&u).unwrap().insert(v, EdgeType::Plain);
                self.adj.get_mut(&v).unwrap().insert(u, EdgeType::Plain);
                self.add_to_phase(u, Phase::pi());
            }
            (false, EdgeType::Plain, EdgeType::Plain) => {
                self.remove_edge(u, v);
            }
            (false, EdgeType::Hadamard, EdgeType::Hadamard) => {}
            (false, _, _) => {
                self.adj.get_mut(&u).unwrap().insert(v, EdgeType::Hadamard);
                self.adj.get_mut(&v).unwrap().insert(u, EdgeType::Hadamard);
                self.add_to_phase(u, Phase::pi());
            }
        }
    }

    /// Fuse spider `drop` into spider `keep`: phases add modulo 2pi, the
    /// neighbourhood of `drop` moves over to `keep` (with smart-edge
    /// reduction), and `drop` is removed.
    pub(crate) fn fuse(&mut self, keep: V, drop: V) {
        debug_assert!(keep != drop);
        let drop_phase = self.phase(drop);
        let nhd: Vec<(V, EdgeType)> = self.incident_edges(drop).collect();
        self.remove_vertex(drop);
        for (w, et) in nhd {
            if w != keep {
                self.add_edge_smart(keep, w, et);
            }
        }
        self.add_to_phase(keep, drop_phase);
    }

    /// All vertices with data, ascending by id.
    pub fn vertices(&self) -> impl Iterator<Item = (V, &VertexData)> + '_ {
        self.vertices.iter().map(|(&v, d)| (v, d))
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = V> + '_ {
        self.vertices.keys().copied()
    }

    pub fn spiders(&self) -> impl Iterator<Item = V> + '_ {
        self.vertices
            .iter()
            .filter(|(_, d)| d.kind.is_spider())
            .map(|(&v, _)| v)
    }

    pub fn boundaries(&self) -> impl Iterator<Item = V> + '_ {
        self.vertices
            .iter()
            .filter(|(_, d)| d.kind == VertexKind::Boundary)
            .map(|(&v, _)| v)
    }

    /// All edges as `(u, v, type)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (V, V, EdgeType)> + '_ {
        self.adj.iter().flat_map(|(&u, nhd)| {
            nhd.iter()
                .filter(move |(&w, _)| u < w)
                .map(move |(&w, &et)| (u, w, et))
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn inputs(&self) -> &[V] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[V] {
        &self.outputs
    }

    pub fn set_inputs(&mut self, inputs: Vec<V>) {
        assert!(inputs.iter().all(|&v| self.kind(v) == VertexKind::Boundary));
        self.inputs = inputs;
    }

    pub fn set_outputs(&mut self, outputs: Vec<V>) {
        assert!(outputs.iter().all(|&v| self.kind(v) == VertexKind::Boundary));
        self.outputs = outputs;
    }

    /// Build a diagram from explicit parts, checking every invariant.
    /// Used by deserialisation.
    pub fn from_parts(
        vertices: Vec<(V, VertexKind, Phase)>,
        edges: Vec<(V, V, EdgeType)>,
        inputs: Vec<V>,
        outputs: Vec<V>,
    ) -> Result<Diagram, InvariantError> {
        let mut g = Diagram::new();
        for (v, kind, phase) in vertices {
            if g.vertices.contains_key(&v) {
                return Err(InvariantError::DuplicateVertex(v));
            }
            if kind == VertexKind::Boundary && !phase.is_zero() {
                return Err(InvariantError::BoundaryPhase(v));
            }
            g.vertices.insert(v, VertexData { kind, phase });
            g.adj.insert(v, BTreeMap::new());
            g.next_id = g.next_id.max(v + 1);
        }
        for (u, v, et) in edges {
            if u == v {
                return Err(InvariantError::SelfLoop(u));
            }
            for w in [u, v] {
                if !g.contains_vertex(w) {
                    return Err(InvariantError::UnknownVertex(w));
                }
            }
            if g.connected(u, v) {
                return Err(InvariantError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v, et);
        }
        for &v in inputs.iter().chain(outputs.iter()) {
            if !g.contains_vertex(v) {
                return Err(InvariantError::UnknownInterfaceVertex(v));
            }
            if g.kind(v) != VertexKind::Boundary {
                return Err(InvariantError::NonBoundaryInInterface(v));
            }
        }
        g.inputs = inputs;
        g.outputs = outputs;
        g.validate()?;
        Ok(g)
    }

    /// Check all structural invariants. Fresh diagrams built through the
    /// public constructors cannot violate the edge invariants, but boundary
    /// bookkeeping is only fully constrained once the interface is set.
    pub fn validate(&self) -> Result<(), InvariantError> {
        let mut interface_count: BTreeMap<V, usize> = BTreeMap::new();
        for &v in self.inputs.iter().chain(self.outputs.iter()) {
            if !self.contains_vertex(v) {
                return Err(InvariantError::UnknownInterfaceVertex(v));
            }
            if self.kind(v) != VertexKind::Boundary {
                return Err(InvariantError::NonBoundaryInInterface(v));
            }
            *interface_count.entry(v).or_insert(0) += 1;
        }
        for (v, data) in self.vertices() {
            if data.kind == VertexKind::Boundary {
                if !data.phase.is_zero() {
                    return Err(InvariantError::BoundaryPhase(v));
                }
                let deg = self.degree(v);
                if deg != 1 {
                    return Err(InvariantError::BoundaryDegree { vertex: v, degree: deg });
                }
                let count = interface_count.get(&v).copied().unwrap_or(0);
                if count != 1 {
                    return Err(InvariantError::BoundaryInterfaceCount(v, count));
                }
            }
        }
        Ok(())
    }

    /// Whether the diagram is graph-like: only Z spiders, every
    /// spider-spider edge is Hadamard, and every boundary is wired by a
    /// single plain edge to a spider.
    pub fn is_graph_like(&self) -> bool {
        for (_, data) in self.vertices() {
            if data.kind == VertexKind::X {
                return false;
            }
        }
        for (u, v, et) in self.edges() {
            let boundaries =
                (self.kind(u) == VertexKind::Boundary) as usize + (self.kind(v) == VertexKind::Boundary) as usize;
            match boundaries {
                0 if et != EdgeType::Hadamard => return false,
                1 if et != EdgeType::Plain => return false,
                2 => return false,
                _ => {}
            }
        }
        self.boundaries().all(|b| self.degree(b) == 1)
    }

    /// Normalise into graph-like form: colour-change every X spider, fuse
    /// all plain spider-spider edges, then repair the boundary wiring with
    /// phase-0 identity spiders. Semantics are preserved up to a nonzero
    /// scalar; the result satisfies [`Diagram::is_graph_like`] and the
    /// operation is idempotent.
    pub fn to_graph_like(&self) -> Diagram {
        let mut g = self.clone();

        // 1. recolour every X spider to Z
        let xs: Vec<V> = g
            .vertices()
            .filter(|(_, d)| d.kind == VertexKind::X)
            .map(|(v, _)| v)
            .collect();
        for v in xs {
            g.set_kind(v, VertexKind::Z);
            let nhd: Vec<(V, EdgeType)> = g.incident_edges(v).collect();
            for (w, et) in nhd {
                g.adj.get_mut(&v).unwrap().insert(w, et.toggled());
                g.adj.get_mut(&w).unwrap().insert(v, et.toggled());
            }
        }

        // 2. fuse away plain spider-spider edges
        loop {
            let fusible = g.edges().find(|&(u, v, et)| {
                et == EdgeType::Plain && g.kind(u).is_spider() && g.kind(v).is_spider()
            });
            match fusible {
                Some((u, v, _)) => g.fuse(u, v),
                None => break,
            }
        }

        // 3. repair boundary wiring
        let bb_edges: Vec<(V, V, EdgeType)> = g
            .edges()
            .filter(|&(u, v, _)| {
                g.kind(u) == VertexKind::Boundary && g.kind(v) == VertexKind::Boundary
            })
            .collect();
        for (b1, b2, et) in bb_edges {
            g.remove_edge(b1, b2);
            match et {
                EdgeType::Plain => {
                    let z = g.add_vertex(VertexKind::Z);
                    g.add_edge(b1, z, EdgeType::Plain);
                    g.add_edge(z, b2, EdgeType::Plain);
                }
                EdgeType::Hadamard => {
                    let z1 = g.add_vertex(VertexKind::Z);
                    let z2 = g.add_vertex(VertexKind::Z);
                    g.add_edge(b1, z1, EdgeType::Plain);
                    g.add_edge(z1, z2, EdgeType::Hadamard);
                    g.add_edge(z2, b2, EdgeType::Plain);
                }
            }
        }
        let dangling: Vec<V> = g.boundaries().filter(|&b| g.degree(b) == 0).collect();
        for b in dangling {
            let z = g.add_vertex(VertexKind::Z);
            g.add_edge(b, z, EdgeType::Plain);
        }
        let h_wired: Vec<(V, V)> = g
            .boundaries()
            .filter_map(|b| {
                let (w, et) = g.incident_edges(b).next().unwrap();
                (et == EdgeType::Hadamard).then_some((b, w))
            })
            .collect();
        for (b, w) in h_wired {
            g.remove_edge(b, w);
            let z = g.add_vertex(VertexKind::Z);
            g.add_edge(b, z, EdgeType::Plain);
            g.add_edge(z, w, EdgeType::Hadamard);
        }
        g
    }
}
