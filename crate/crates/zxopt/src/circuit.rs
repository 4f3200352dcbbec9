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

//! Gate-list circuits over the Clifford+T set, their conversion into ZX
//! diagrams, and their dense unitary semantics.
//!
//! Qubit 0 is the most significant bit of a computational basis index, and
//! the diagram's input/output lists follow register order, so the diagram
//! tensor and the circuit unitary are directly comparable.

use num_complex::Complex;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{Diagram, EdgeType, VertexKind, V};
use crate::phase::Phase;
use crate::tensor::{FloatScalar, LinearMap};

/// Largest register the dense unitary will be computed for.
pub const MAX_UNITARY_QUBITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gate {
    H(usize),
    X(usize),
    Z(usize),
    S(usize),
    Sdg(usize),
    T(usize),
    Tdg(usize),
    Rz(usize, Phase),
    Cx(usize, usize),
    Cz(usize, usize),
}

impl Gate {
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::H(q)
            | Gate::X(q)
            | Gate::Z(q)
            | Gate::S(q)
            | Gate::Sdg(q)
            | Gate::T(q)
            | Gate::Tdg(q)
            | Gate::Rz(q, _) => vec![q],
            Gate::Cx(a, b) | Gate::Cz(a, b) => vec![a, b],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::H(_) => "h",
            Gate::X(_) => "x",
            Gate::Z(_) => "z",
            Gate::S(_) => "s",
            Gate::Sdg(_) => "sdg",
            Gate::T(_) => "t",
            Gate::Tdg(_) => "tdg",
            Gate::Rz(_, _) => "rz",
            Gate::Cx(_, _) => "cx",
            Gate::Cz(_, _) => "cz",
        }
    }

    /// The Z-spider phase a diagonal gate contributes, if any.
    pub fn z_phase(&self) -> Option<Phase> {
        match *self {
            Gate::Z(_) => Some(Phase::pi()),
            Gate::S(_) => Some(Phase::new(1, 2)),
            Gate::Sdg(_) => Some(Phase::new(3, 2)),
            Gate::T(_) => Some(Phase::new(1, 4)),
            Gate::Tdg(_) => Some(Phase::new(7, 4)),
            Gate::Rz(_, p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("gate {gate} touches qubit {qubit}, register has {num_qubits}")]
    QubitOutOfRange {
        gate: &'static str,
        qubit: usize,
        num_qubits: usize,
    },
    #[error("gate {0} repeats a qubit operand")]
    DuplicateQubit(&'static str),
    #[error("circuit has {0} qubits, dense unitary limit is {MAX_UNITARY_QUBITS}")]
    TooManyQubits(usize),
}

/// An ordered gate list over a single quantum register.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Self {
        assert!(num_qubits > 0, "register must be non-empty");
        Circuit { num_qubits, gates: Vec::new() }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        let qs = gate.qubits();
        for &q in &qs {
            if q >= self.num_qubits {
                return Err(CircuitError::QubitOutOfRange {
                    gate: gate.name(),
                    qubit: q,
                    num_qubits: self.num_qubits,
                });
            }
        }
        if qs.len() == 2 && qs[0] == qs[1] {
            return Err(CircuitError::DuplicateQubit(gate.name()));
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Append the standard 7-T decomposition of a Toffoli gate.
    pub fn push_ccx(&mut self, a: usize, b: usize, c: usize) -> Result<(), CircuitError> {
        for &q in &[a, b, c] {
            if q >= self.num_qubits {
                return Err(CircuitError::QubitOutOfRange {
                    gate: "ccx",
                    qubit: q,
                    num_qubits: self.num_qubits,
                });
            }
        }
        if a == b || a == c || b == c {
            return Err(CircuitError::DuplicateQubit("ccx"));
        }
        let seq = [
            Gate::H(c),
            Gate::Cx(b, c),
            Gate::Tdg(c),
            Gate::Cx(a, c),
            Gate::T(c),
            Gate::Cx(b, c),
            Gate::Tdg(c),
            Gate::Cx(a, c),
            Gate::T(b),
            Gate::T(c),
            Gate::H(c),
            Gate::Cx(a, b),
            Gate::T(a),
            Gate::Tdg(b),
            Gate::Cx(a, b),
        ];
        self.gates.extend(seq);
        Ok(())
    }

    /// Convert into a ZX diagram with `num_qubits` inputs and outputs in
    /// register order. Hadamard gates become Hadamard edges, diagonal gates
    /// become Z spiders, `x` an X(pi) spider, `cx` a plain-connected Z-X
    /// pair and `cz` a Hadamard-connected Z-Z pair.
    pub fn to_diagram(&self) -> Diagram {
        let mut g = Diagram::new();
        let inputs: Vec<V> = (0..self.num_qubits)
            .map(|_| g.add_vertex(VertexKind::Boundary))
            .collect();
        // per-qubit frontier and the edge type that connects to it (a
        // pending Hadamard from an `h` gate still waiting for its endpoint)
        let mut frontier: Vec<(V, EdgeType)> =
            inputs.iter().map(|&b| (b, EdgeType::Plain)).collect();

        let attach = |g: &mut Diagram, frontier: &mut Vec<(V, EdgeType)>, q: usize, v: V| {
            let (prev, et) = frontier[q];
            g.add_edge(prev, v, et);
            frontier[q] = (v, EdgeType::Plain);
        };

        for gate in &self.gates {
            match *gate {
                Gate::H(q) => {
                    frontier[q].1 = frontier[q].1.toggled();
                }
                Gate::X(q) => {
                    let v = g.add_vertex_with_phase(VertexKind::X, Phase::pi());
                    attach(&mut g, &mut frontier, q, v);
                }
                Gate::Cx(ctrl, tgt) => {
                    let zc = g.add_vertex(VertexKind::Z);
                    let xt = g.add_vertex(VertexKind::X);
                    attach(&mut g, &mut frontier, ctrl, zc);
                    attach(&mut g, &mut frontier, tgt, xt);
                    g.add_edge(zc, xt, EdgeType::Plain);
                }
                Gate::Cz(a, b) => {
                    let za = g.add_vertex(VertexKind::Z);
                    let zb = g.add_vertex(VertexKind::Z);
                    attach(&mut g, &mut frontier, a, za);
                    attach(&mut g, &mut frontier, b, zb);
                    g.add_edge(za, zb, EdgeType::Hadamard);
                }
                _ => {
                    let phase = gate.z_phase().expect("remaining gates are diagonal");
                    let q = gate.qubits()[0];
                    let v = g.add_vertex_with_phase(VertexKind::Z, phase);
                    attach(&mut g, &mut frontier, q, v);
                }
            }
        }

        let mut outputs = Vec::with_capacity(self.num_qubits);
        for &(prev, et) in &frontier {
            let o = g.add_vertex(VertexKind::Boundary);
            g.add_edge(prev, o, et);
            outputs.push(o);
        }
        g.set_inputs(inputs);
        g.set_outputs(outputs);
        g
    }

    /// The dense unitary of the circuit: the product of the gate matrices in
    /// circuit order.
    pub fn unitary<T: FloatScalar>(&self) -> Result<LinearMap<T>, CircuitError> {
        if self.num_qubits > MAX_UNITARY_QUBITS {
            return Err(CircuitError::TooManyQubits(self.num_qubits));
        }
        let n = self.num_qubits;
        let dim = 1usize << n;
        let mut u: LinearMap<T> = ndarray::Array2::eye(dim);
        let bit = |q: usize| 1usize << (n - 1 - q);

        for gate in &self.gates {
            match *gate {
                Gate::H(q) => {
                    let c = T::from_f64(std::f64::consts::FRAC_1_SQRT_2).unwrap();
                    let c = Complex::new(c, T::zero());
                    apply_1q(&mut u, bit(q), [[c, c], [c, -c]]);
                }
                Gate::X(q) => {
                    let one = Complex::one();
                    let zero = Complex::zero();
                    apply_1q(&mut u, bit(q), [[zero, one], [one, zero]]);
                }
                Gate::Cx(ctrl, tgt) => {
                    let (cb, tb) = (bit(ctrl), bit(tgt));
                    for col in 0..dim {
                        for row in 0..dim {
                            if row & cb != 0 && row & tb == 0 {
                                let other = row | tb;
                                let tmp = u[(row, col)];
                                u[(row, col)] = u[(other, col)];
                                u[(other, col)] = tmp;
                            }
                        }
                    }
                }
                Gate::Cz(a, b) => {
                    let (ab, bb) = (bit(a), bit(b));
                    for col in 0..dim {
                        for row in 0..dim {
                            if row & ab != 0 && row & bb != 0 {
                                u[(row, col)] = -u[(row, col)];
                            }
                        }
                    }
                }
                _ => {
                    let phase = gate.z_phase().expect("remaining gates are diagonal");
                    let q = gate.qubits()[0];
                    let theta = T::from_f64(phase.to_radians()).unwrap();
                    let ph = Complex::from_polar(T::one(), theta);
                    apply_1q(&mut u, bit(q), [[Complex::one(), Complex::zero()], [Complex::zero(), ph]]);
                }
            }
        }
        Ok(u)
    }
}

/// Left-multiply a single-qubit gate onto the accumulated matrix in place.
fn apply_1q<T: FloatScalar>(u: &mut LinearMap<T>, bit: usize, m: [[Complex<T>; 2]; 2]) {
    let dim = u.nrows();
    for col in 0..dim {
        for r0 in 0..dim {
            if r0 & bit != 0 {
                continue;
            }
            let r1 = r0 | bit;
            let x0 = u[(r0, col)];
            let x1 = u[(r1, col)];
            u[(r0, col)] = m[0][0] * x0 + m[0][1] * x1;
            u[(r1, col)] = m[1][0] * x0 + m[1][1] * x1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{equal_up_to_scalar, tensor_of_diagram};
    use crate::LinearMap64;
    use ndarray::{array, Array2};

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    fn eq(a: &LinearMap64, b: &LinearMap64) -> bool {
        equal_up_to_scalar(a, b, 1e-9).unwrap()
    }

    #[test]
    fn empty_circuit_unitary_is_identity() {
        let c = Circuit::new(1);
        assert!(eq(&c.unitary().unwrap(), &Array2::eye(2)));
    }

    #[test]
    fn pauli_x_matrix() {
        let mut circ = Circuit::new(1);
        circ.push(Gate::X(0)).unwrap();
        let x = array![[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]];
        assert!(eq(&circ.unitary().unwrap(), &x));
    }

    #[test]
    fn euler_identity_hsh_is_sdg_h_sdg() {
        let mut a = Circuit::new(1);
        for g in [Gate::H(0), Gate::S(0), Gate::H(0)] {
            a.push(g).unwrap();
        }
        let mut b = Circuit::new(1);
        for g in [Gate::Sdg(0), Gate::H(0), Gate::Sdg(0)] {
            b.push(g).unwrap();
        }
        assert!(eq(&a.unitary().unwrap(), &b.unitary().unwrap()));
    }

    #[test]
    fn empty_two_qubit_diagram_is_identity() {
        let circ = Circuit::new(2);
        let d = circ.to_diagram();
        assert_eq!(d.spiders().count(), 0);
        let t: LinearMap64 = tensor_of_diagram(&d).unwrap();
        assert!(eq(&t, &Array2::eye(4)));
    }

    #[test]
    fn single_cx_matches_cnot_matrix() {
        let mut circ = Circuit::new(2);
        circ.push(Gate::Cx(0, 1)).unwrap();
        let d = circ.to_diagram();
        assert_eq!(d.spiders().count(), 2);
        let t: LinearMap64 = tensor_of_diagram(&d).unwrap();
        let z = c(0.0, 0.0);
        let o = c(1.0, 0.0);
        let cnot = array![[o, z, z, z], [z, o, z, z], [z, z, z, o], [z, z, o, z]];
        assert!(eq(&t, &cnot));
        assert!(eq(&circ.unitary().unwrap(), &cnot));
    }

    #[test]
    fn single_t_gate_diagram() {
        let mut circ = Circuit::new(1);
        circ.push(Gate::T(0)).unwrap();
        let d = circ.to_diagram();
        assert_eq!(crate::Metric::TCount.value(&d), 1);
        let s = d.spiders().next().unwrap();
        assert_eq!(d.kind(s), VertexKind::Z);
        assert_eq!(d.phase(s), Phase::new(1, 4));
    }

    #[test]
    fn ccx_expansion_matches_toffoli_matrix() {
        let mut circ = Circuit::new(3);
        circ.push_ccx(0, 1, 2).unwrap();
        assert_eq!(circ.gates().len(), 15);
        let t_gates = circ
            .gates()
            .iter()
            .filter(|g| matches!(g, Gate::T(_) | Gate::Tdg(_)))
            .count();
        assert_eq!(t_gates, 7);

        let mut toffoli: LinearMap64 = Array2::eye(8);
        toffoli[(6, 6)] = c(0.0, 0.0);
        toffoli[(7, 7)] = c(0.0, 0.0);
        toffoli[(6, 7)] = c(1.0, 0.0);
        toffoli[(7, 6)] = c(1.0, 0.0);
        assert!(eq(&circ.unitary().unwrap(), &toffoli));
    }

    #[test]
    fn diagram_tensor_matches_unitary_on_gate_mix() {
        let mut circ = Circuit::new(3);
        for g in [
            Gate::H(0),
            Gate::T(1),
            Gate::Cx(0, 2),
            Gate::Rz(2, Phase::new(5, 4)),
            Gate::Cz(1, 2),
            Gate::X(0),
            Gate::H(2),
            Gate::Sdg(1),
            Gate::Cx(2, 1),
        ] {
            circ.push(g).unwrap();
        }
        let d = circ.to_diagram();
        assert!(d.validate().is_ok());
        let t: LinearMap64 = tensor_of_diagram(&d).unwrap();
        assert!(eq(&t, &circ.unitary().unwrap()));
        // and the graph-like form has the same semantics
        let t2: LinearMap64 = tensor_of_diagram(&d.to_graph_like()).unwrap();
        assert!(eq(&t2, &circ.unitary().unwrap()));
    }

    #[test]
    fn push_validates_operands() {
        let mut circ = Circuit::new(2);
        assert!(matches!(
            circ.push(Gate::T(2)),
            Err(CircuitError::QubitOutOfRange { qubit: 2, .. })
        ));
        assert!(matches!(
            circ.push(Gate::Cx(1, 1)),
            Err(CircuitError::DuplicateQubit("cx"))
        ));
    }

    #[test]
    fn unitary_size_limit() {
        let circ = Circuit::new(11);
        assert!(matches!(
            circ.unitary::<f64>(),
            Err(CircuitError::TooManyQubits(11))
        ));
    }
}
