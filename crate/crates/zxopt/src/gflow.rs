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

//! Generalised-flow existence on graph-like diagrams.
//!
//! A graph-like diagram induces an open graph: its spiders, the Hadamard
//! edges between them, and the input/output spiders (those wired to input
//! resp. output boundaries). A gflow assigns every non-output vertex a
//! correction set of later non-input vertices whose odd neighbourhood hits
//! exactly that vertex among the not-yet-corrected ones; its existence
//! guarantees a diagram is extractable to a circuit in polynomial time, so
//! it serves as the optional extractability predicate of the search.
//!
//! The construction is the standard maximally-delayed one: peel layers
//! backwards from the outputs, solving for correction sets over GF(2).

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Diagram, V};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GflowError {
    #[error("gflow is only defined on graph-like diagrams")]
    NotGraphLike,
}

/// GF(2) row as a bitset.
#[derive(Clone)]
struct Row(Vec<u64>);

impl Row {
    fn zeros(bits: usize) -> Self {
        Row(vec![0; bits.div_ceil(64)])
    }

    fn get(&self, i: usize) -> bool {
        (self.0[i / 64] >> (i % 64)) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn xor_in(&mut self, other: &Row) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a ^= b;
        }
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

/// Decide whether a generalised flow exists from the inputs to the outputs
/// of a graph-like diagram. Rejects non-graph-like input.
pub fn gflow_exists(d: &Diagram) -> Result<bool, GflowError> {
    if !d.is_graph_like() {
        return Err(GflowError::NotGraphLike);
    }
    let spiders: Vec<V> = d.spiders().collect();
    let pos_of = |v: V| spiders.binary_search(&v).unwrap();

    let mut input_spiders = BTreeSet::new();
    for &b in d.inputs() {
        if let Some(w) = d.neighbors(b).next() {
            input_spiders.insert(pos_of(w));
        }
    }
    let mut processed = vec![false; spiders.len()];
    for &b in d.outputs() {
        if let Some(w) = d.neighbors(b).next() {
            processed[pos_of(w)] = true;
        }
    }

    loop {
        let rest: Vec<usize> = (0..spiders.len()).filter(|&i| !processed[i]).collect();
        if rest.is_empty() {
            return Ok(true);
        }
        let candidates: Vec<usize> = (0..spiders.len())
            .filter(|&i| processed[i] && !input_spiders.contains(&i))
            .collect();

        // rows: for each uncorrected vertex, its adjacency to the candidate
        // correction vertices; we need K with Odd(K) restricted to `rest`
        // equal to {u}, i.e. M x = e_u over GF(2)
        let mut m: Vec<Row> = Vec::with_capacity(rest.len());
        for &r in &rest {
            let mut row = Row::zeros(candidates.len().max(1));
            for (c_idx, &c) in candidates.iter().enumerate() {
                if d.connected(spiders[r], spiders[c]) {
                    row.set(c_idx);
                }
            }
            m.push(row);
        }
        // transform tracked on an identity so consistency of every
        // right-hand side e_u falls out of one elimination
        let mut t: Vec<Row> = (0..rest.len())
            .map(|i| {
                let mut row = Row::zeros(rest.len().max(1));
                row.set(i);
                row
            })
            .collect();

        let mut pivot_row = 0;
        for col in 0..candidates.len() {
            let Some(p) = (pivot_row..m.len()).find(|&i| m[i].get(col)) else {
                continue;
            };
            m.swap(pivot_row, p);
            t.swap(pivot_row, p);
            for i in 0..m.len() {
                if i != pivot_row && m[i].get(col) {
                    let (src_m, src_t) = (m[pivot_row].clone(), t[pivot_row].clone());
                    m[i].xor_in(&src_m);
                    t[i].xor_in(&src_t);
                }
            }
            pivot_row += 1;
        }
        debug_assert!(m[pivot_row..].iter().all(Row::is_zero));

        // M x = e_u is consistent iff (T e_u) vanishes on all zero rows
        let mut newly_corrected = Vec::new();
        for (u_idx, &u) in rest.iter().enumerate() {
            if (pivot_row..rest.len()).all(|i| !t[i].get(u_idx)) {
                newly_corrected.push(u);
            }
        }
        if newly_corrected.is_empty() {
            return Ok(false);
        }
        for u in newly_corrected {
            processed[u] = true;
        }
    }
}
