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

//! Seeded random circuits and diagrams for benchmarks and the soundness
//! corpora.
//!
//! Random diagrams deliberately plant the local patterns every rewrite rule
//! needs (Pauli states, degree-2 pi spiders, phase-free bialgebra pairs,
//! Clifford hubs with Hadamard stars) so that a moderate corpus exercises
//! the full rule set, not just fusion.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::circuit::{Circuit, Gate};
use crate::graph::{Diagram, EdgeType, VertexKind, V};
use crate::phase::Phase;

/// A random circuit over the supported gate set.
pub fn random_circuit<R: Rng>(rng: &mut R, num_qubits: usize, num_gates: usize) -> Circuit {
    assert!(num_qubits >= 1);
    let mut c = Circuit::new(num_qubits);
    let rz_phases = [(1, 4), (3, 4), (1, 2), (7, 4), (1, 1), (5, 4), (1, 8), (1, 3)];
    while c.gates().len() < num_gates {
        let q = rng.gen_range(0..num_qubits);
        let gate = match rng.gen_range(0..12) {
            0 => Gate::H(q),
            1 => Gate::X(q),
            2 => Gate::Z(q),
            3 => Gate::S(q),
            4 => Gate::Sdg(q),
            5 | 6 => Gate::T(q),
            7 => Gate::Tdg(q),
            8 => {
                let (n, d) = *rz_phases.choose(rng).unwrap();
                Gate::Rz(q, Phase::new(n, d))
            }
            _ => {
                if num_qubits < 2 {
                    continue;
                }
                let mut p = rng.gen_range(0..num_qubits);
                while p == q {
                    p = rng.gen_range(0..num_qubits);
                }
                if rng.gen_bool(0.7) {
                    Gate::Cx(q, p)
                } else {
                    Gate::Cz(q, p)
                }
            }
        };
        c.push(gate).expect("generated operands are in range");
    }
    c
}

fn random_phase<R: Rng>(rng: &mut R) -> Phase {
    let pool = [
        (0, 1),
        (0, 1),
        (1, 1),
        (1, 2),
        (3, 2),
        (1, 4),
        (7, 4),
        (3, 4),
        (5, 4),
        (1, 3),
    ];
    let (n, d) = *pool.choose(rng).unwrap();
    Phase::new(n, d)
}

fn random_kind<R: Rng>(rng: &mut R) -> VertexKind {
    if rng.gen_bool(0.5) {
        VertexKind::Z
    } else {
        VertexKind::X
    }
}

/// A random valid diagram with at most `max_boundaries` boundary wires and
/// roughly `max_spiders` spiders.
pub fn random_diagram<R: Rng>(rng: &mut R, max_boundaries: usize, max_spiders: usize) -> Diagram {
    assert!(max_spiders >= 8, "motif planting needs some room");
    let mut g = Diagram::new();
    let base = rng.gen_range(3..=max_spiders - 5);
    let mut spiders: Vec<V> = (0..base)
        .map(|_| {
            let kind = random_kind(rng);
            let phase = random_phase(rng);
            g.add_vertex_with_phase(kind, phase)
        })
        .collect();

    // random simple edges over the base spiders
    let target_edges = (base as f64 * 1.3) as usize;
    for _ in 0..target_edges * 3 {
        if g.num_edges() >= target_edges {
            break;
        }
        let u = *spiders.choose(rng).unwrap();
        let v = *spiders.choose(rng).unwrap();
        if u != v && !g.connected(u, v) {
            let et = if rng.gen_bool(0.5) { EdgeType::Hadamard } else { EdgeType::Plain };
            g.add_edge(u, v, et);
        }
    }

    // plant rule motifs
    if rng.gen_bool(0.7) {
        // a Pauli state on a fresh leg (StateCopy fodder when the target
        // happens to be phase-free and opposite-coloured)
        let v = *spiders.choose(rng).unwrap();
        let phase = if rng.gen_bool(0.5) { Phase::zero() } else { Phase::pi() };
        let u = g.add_vertex_with_phase(g.kind(v).opposite(), phase);
        g.add_edge(u, v, EdgeType::Plain);
        spiders.push(u);
    }
    if rng.gen_bool(0.7) {
        // a degree-2 pi spider on a wire into an opposite-coloured spider
        let v = *spiders.choose(rng).unwrap();
        let w = *spiders.choose(rng).unwrap();
        if v != w && !g.connected(v, w) {
            let u = g.add_vertex_with_phase(g.kind(v).opposite(), Phase::pi());
            g.add_edge(u, v, EdgeType::Plain);
            let et = if rng.gen_bool(0.5) { EdgeType::Hadamard } else { EdgeType::Plain };
            g.add_edge(u, w, et);
            spiders.push(u);
        }
    }
    if rng.gen_bool(0.5) {
        // an exact 2-in/2-out phase-free bialgebra pair
        let picks: Vec<V> = (0..4).map(|_| *spiders.choose(rng).unwrap()).collect();
        let z = g.add_vertex(VertexKind::Z);
        let x = g.add_vertex(VertexKind::X);
        g.add_edge(z, x, EdgeType::Plain);
        for (i, &w) in picks.iter().enumerate() {
            let end = if i < 2 { z } else { x };
            if !g.connected(end, w) {
                g.add_edge(end, w, EdgeType::Plain);
            }
        }
        spiders.push(z);
        spiders.push(x);
    }
    if rng.gen_bool(0.6) {
        // a Clifford hub in a small Hadamard star of its own colour
        // (LocalComp fodder; two Pauli hubs give Pivot fodder)
        let kind = random_kind(rng);
        let hub_phase = if rng.gen_bool(0.5) { Phase::new(1, 2) } else { Phase::new(3, 2) };
        let hub = g.add_vertex_with_phase(kind, hub_phase);
        let hub2_phase = if rng.gen_bool(0.5) { Phase::zero() } else { Phase::pi() };
        let hub2 = g.add_vertex_with_phase(kind, hub2_phase);
        g.add_edge(hub, hub2, EdgeType::Hadamard);
        for _ in 0..rng.gen_range(1..=2) {
            let s = g.add_vertex_with_phase(kind, random_phase(rng));
            g.add_edge(hub, s, EdgeType::Hadamard);
            spiders.push(s);
        }
        for _ in 0..rng.gen_range(1..=2) {
            let s = g.add_vertex_with_phase(kind, random_phase(rng));
            g.add_edge(hub2, s, EdgeType::Hadamard);
            spiders.push(s);
        }
        spiders.push(hub);
        spiders.push(hub2);
    }

    // boundaries, each wired once to a spider
    let n_boundaries = rng.gen_range(0..=max_boundaries);
    let mut inputs = vec![];
    let mut outputs = vec![];
    for k in 0..n_boundaries {
        let s = *spiders.choose(rng).unwrap();
        let b = g.add_vertex(VertexKind::Boundary);
        let et = if rng.gen_bool(0.8) { EdgeType::Plain } else { EdgeType::Hadamard };
        g.add_edge(b, s, et);
        if k % 2 == 0 {
            inputs.push(b);
        } else {
            outputs.push(b);
        }
    }
    g.set_inputs(inputs);
    g.set_outputs(outputs);
    debug_assert!(g.validate().is_ok());
    g
}
