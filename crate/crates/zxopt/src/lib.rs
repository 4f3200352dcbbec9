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

//! Quantum circuit optimisation by exhaustive search over ZX-diagram
//! rewrites.
//!
//! Circuits are parsed from OpenQASM 2.0, converted to ZX diagrams, and
//! explored with depth-first or iterative-deepening depth-first search over
//! a bundled rewrite-rule relation, minimising a chosen diagram metric
//! (T count, edge count or spider count). A dense tensor-contraction oracle
//! evaluates desk-scale diagrams so that every rewrite and every search
//! result can be checked for semantic preservation up to a nonzero scalar.

pub mod circuit;
pub mod generate;
pub mod gflow;
pub mod graph;
pub mod json;
pub mod metric;
pub mod phase;
pub mod qasm;
pub mod rules;
pub mod search;
pub mod tensor;

pub use circuit::{Circuit, Gate};
pub use gflow::gflow_exists;
pub use graph::{Diagram, EdgeType, VertexKind, V};
pub use metric::Metric;
pub use phase::Phase;
pub use qasm::{parse_qasm, print_qasm};
pub use rules::{apply, apply_bundled, find_matches, Rewrite, RuleId};
pub use search::{
    brute_force_min, dfs, iddfs, Extractability, SearchConfig, SearchResult, Strategy,
};
pub use tensor::{equal_up_to_scalar, tensor_of_diagram};

/// Double-precision linear map, the default oracle scalar type.
pub type LinearMap64 = tensor::LinearMap<f64>;
/// Single-precision linear map.
pub type LinearMap32 = tensor::LinearMap<f32>;
