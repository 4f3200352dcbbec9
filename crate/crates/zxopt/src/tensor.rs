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

//! Dense tensor-network evaluation of ZX diagrams.
//!
//! This is the semantic ground truth for the whole crate: a diagram is
//! contracted into the linear map it denotes, and maps are compared up to a
//! nonzero scalar. It is a desk-scale oracle, not a simulator — diagrams are
//! rejected once they exceed the boundary, vertex or intermediate-rank
//! budgets.
//!
//! The evaluation is generic over the floating-point scalar; see the
//! `LinearMap64`/`LinearMap32` aliases at the crate root.

use ndarray::Array2;
use num_complex::Complex;
use num_traits::{Float, FromPrimitive, Zero};
use thiserror::Error;

use crate::graph::{Diagram, EdgeType, VertexKind, V};
use crate::phase::Phase;

/// Floating-point scalars the oracle can evaluate with.
pub trait FloatScalar: Float + FromPrimitive + std::fmt::Debug + 'static {}
impl<T: Float + FromPrimitive + std::fmt::Debug + 'static> FloatScalar for T {}

/// The linear map of a diagram or circuit: a `2^m x 2^n` complex matrix,
/// rows indexed by the outputs and columns by the inputs.
pub type LinearMap<T> = Array2<Complex<T>>;

/// Most boundary wires a diagram may have before the oracle refuses.
pub const MAX_BOUNDARIES: usize = 12;
/// Cap on the number of open indices of any intermediate tensor.
pub const MAX_RANK: usize = 16;
/// Default cap on the number of diagram vertices.
pub const DEFAULT_VERTEX_BUDGET: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("diagram has {0} boundary wires, oracle limit is {MAX_BOUNDARIES}")]
    BoundaryBudget(usize),
    #[error("diagram has {0} vertices, oracle budget is {1}")]
    VertexBudget(usize, usize),
    #[error("contraction exceeded the intermediate rank cap of {MAX_RANK}")]
    RankBudget,
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
}

/// A tensor with an arbitrary number of dimension-2 indices. `labels[0]` is
/// the most significant bit of the flat index.
struct Tensor<T> {
    labels: Vec<usize>,
    data: Vec<Complex<T>>,
}

impl<T: FloatScalar> Tensor<T> {
    fn scalar(value: Complex<T>) -> Self {
        Tensor { labels: vec![], data: vec![value] }
    }

    fn rank(&self) -> usize {
        self.labels.len()
    }
}

fn phase_factor<T: FloatScalar>(p: Phase) -> Complex<T> {
    let theta = T::from_f64(p.to_radians()).unwrap();
    Complex::from_polar(T::one(), theta)
}

/// Z spider over the given legs: 1 on the all-zeros branch, `e^{i alpha}` on
/// the all-ones branch. A rank-0 spider is the scalar `1 + e^{i alpha}`.
fn z_spider_tensor<T: FloatScalar>(legs: Vec<usize>, phase: Phase) -> Tensor<T> {
    let n = legs.len();
    let ph = phase_factor::<T>(phase);
    if n == 0 {
        return Tensor::scalar(Complex::new(T::one(), T::zero()) + ph);
    }
    let mut data = vec![Complex::zero(); 1 << n];
    data[0] = Complex::new(T::one(), T::zero());
    data[(1 << n) - 1] = ph;
    Tensor { labels: legs, data }
}

/// The 2x2 Hadamard matrix as a rank-2 tensor.
fn hadamard_tensor<T: FloatScalar>(l0: usize, l1: usize) -> Tensor<T> {
    let c = T::from_f64(std::f64::consts::FRAC_1_SQRT_2).unwrap();
    let c = Complex::new(c, T::zero());
    Tensor { labels: vec![l0, l1], data: vec![c, c, c, -c] }
}

fn identity_tensor<T: FloatScalar>(l0: usize, l1: usize) -> Tensor<T> {
    let one = Complex::new(T::one(), T::zero());
    Tensor { labels: vec![l0, l1], data: vec![one, Complex::zero(), Complex::zero(), one] }
}

/// For every assignment of the sublist `sub` (big-endian over `sub`'s own
/// order), the contribution to the flat index of a tensor with `labels`.
fn index_masks(sub: &[usize], labels: &[usize]) -> Vec<usize> {
    let rank = labels.len();
    let weights: Vec<usize> = sub
        .iter()
        .map(|l| {
            let pos = labels.iter().position(|x| x == l).unwrap();
            1 << (rank - 1 - pos)
        })
        .collect();
    let k = sub.len();
    (0..1usize << k)
        .map(|m| {
            (0..k)
                .filter(|&i| (m >> (k - 1 - i)) & 1 == 1)
                .map(|i| weights[i])
                .sum()
        })
        .collect()
}

/// Contract two tensors over all shared labels (tensor product when none are
/// shared). Result labels: free labels of `a`, then free labels of `b`.
fn contract<T: FloatScalar>(a: &Tensor<T>, b: &Tensor<T>) -> Tensor<T> {
    let shared: Vec<usize> = a
        .labels
        .iter()
        .filter(|l| b.labels.contains(l))
        .copied()
        .collect();
    let a_free: Vec<usize> = a
        .labels
        .iter()
        .filter(|l| !shared.contains(l))
        .copied()
        .collect();
    let b_free: Vec<usize> = b
        .labels
        .iter()
        .filter(|l| !shared.contains(l))
        .copied()
        .collect();

    let base_a = index_masks(&a_free, &a.labels);
    let base_b = index_masks(&b_free, &b.labels);
    let shared_a = index_masks(&shared, &a.labels);
    let shared_b = index_masks(&shared, &b.labels);

    let mut data = vec![Complex::zero(); 1 << (a_free.len() + b_free.len())];
    for (i, &ba) in base_a.iter().enumerate() {
        for (j, &bb) in base_b.iter().enumerate() {
            let mut acc = Complex::zero();
            for (&sa, &sb) in shared_a.iter().zip(shared_b.iter()) {
                acc = acc + a.data[ba + sa] * b.data[bb + sb];
            }
            data[(i << b_free.len()) | j] = acc;
        }
    }
    let mut labels = a_free;
    labels.extend(b_free);
    Tensor { labels, data }
}

/// Contract a whole network down to one tensor, greedily picking the pair
/// whose contraction has the smallest resulting rank (min-degree style).
fn contract_network<T: FloatScalar>(mut tensors: Vec<Tensor<T>>) -> Result<Tensor<T>, OracleError> {
    if tensors.is_empty() {
        return Ok(Tensor::scalar(Complex::new(T::one(), T::zero())));
    }
    while tensors.len() > 1 {
        // every label occurs in at most two tensors, so candidate pairs are
        // exactly the label-sharing ones
        let mut best: Option<(usize, usize, usize)> = None; // (rank, i, j)
        for i in 0..tensors.len() {
            for j in (i + 1)..tensors.len() {
                let shared = tensors[i]
                    .labels
                    .iter()
                    .filter(|l| tensors[j].labels.contains(l))
                    .count();
                if shared == 0 {
                    continue;
                }
                let rank = tensors[i].rank() + tensors[j].rank() - 2 * shared;
                if best.is_none_or(|(r, _, _)| rank < r) {
                    best = Some((rank, i, j));
                }
            }
        }
        let (rank, i, j) = match best {
            Some(b) => b,
            None => {
                // disconnected components: tensor-product the two smallest
                let mut order: Vec<usize> = (0..tensors.len()).collect();
                order.sort_by_key(|&k| tensors[k].rank());
                let (i, j) = (order[0].min(order[1]), order[0].max(order[1]));
                let rank = tensors[i].rank() + tensors[j].rank();
                (rank, i, j)
            }
        };
        if rank > MAX_RANK {
            return Err(OracleError::RankBudget);
        }
        let b = tensors.swap_remove(j);
        let a = tensors.swap_remove(i);
        tensors.push(contract(&a, &b));
    }
    Ok(tensors.pop().unwrap())
}

/// Evaluate the linear map of a diagram with the default vertex budget.
pub fn tensor_of_diagram<T: FloatScalar>(d: &Diagram) -> Result<LinearMap<T>, OracleError> {
    tensor_of_diagram_with_budget(d, DEFAULT_VERTEX_BUDGET)
}

/// Evaluate the linear map of a diagram.
///
/// Z spiders contract as generalised Kronecker deltas with `e^{i alpha}` on
/// the all-ones branch; X spiders are evaluated as Hadamard-conjugated Z
/// spiders; a Hadamard edge inserts the 2x2 Hadamard matrix on the wire.
/// Row indices follow the output list, column indices the input list, both
/// big-endian in list order.
pub fn tensor_of_diagram_with_budget<T: FloatScalar>(
    d: &Diagram,
    vertex_budget: usize,
) -> Result<LinearMap<T>, OracleError> {
    let n_in = d.inputs().len();
    let n_out = d.outputs().len();
    if n_in + n_out > MAX_BOUNDARIES {
        return Err(OracleError::BoundaryBudget(n_in + n_out));
    }
    if d.num_vertices() > vertex_budget {
        return Err(OracleError::VertexBudget(d.num_vertices(), vertex_budget));
    }

    let mut next_label = 0usize;
    let mut fresh = || {
        let l = next_label;
        next_label += 1;
        l
    };
    let mut tensors: Vec<Tensor<T>> = Vec::new();
    // the wire label each vertex sees on a given edge
    let mut side: std::collections::BTreeMap<(V, V), usize> = std::collections::BTreeMap::new();

    for (u, v, et) in d.edges() {
        let both_boundary =
            d.kind(u) == VertexKind::Boundary && d.kind(v) == VertexKind::Boundary;
        match et {
            EdgeType::Plain if !both_boundary => {
                let l = fresh();
                side.insert((u, v), l);
                side.insert((v, u), l);
            }
            EdgeType::Plain => {
                let (lu, lv) = (fresh(), fresh());
                side.insert((u, v), lu);
                side.insert((v, u), lv);
                tensors.push(identity_tensor(lu, lv));
            }
            EdgeType::Hadamard => {
                let (lu, lv) = (fresh(), fresh());
                side.insert((u, v), lu);
                side.insert((v, u), lv);
                tensors.push(hadamard_tensor(lu, lv));
            }
        }
    }

    for (v, data) in d.vertices() {
        let legs: Vec<usize> = d.neighbors(v).map(|w| side[&(v, w)]).collect();
        match data.kind {
            VertexKind::Boundary => {}
            VertexKind::Z => tensors.push(z_spider_tensor(legs, data.phase)),
            VertexKind::X => {
                // H-conjugation of the Z spider on every leg
                let inner: Vec<usize> = legs.iter().map(|_| fresh()).collect();
                for (&i, &l) in inner.iter().zip(legs.iter()) {
                    tensors.push(hadamard_tensor(i, l));
                }
                tensors.push(z_spider_tensor(inner, data.phase));
            }
        }
    }

    let result = contract_network(tensors)?;

    let out_labels: Vec<usize> = d
        .outputs()
        .iter()
        .map(|&b| {
            let w = d.neighbors(b).next().expect("boundary has degree 1");
            side[&(b, w)]
        })
        .collect();
    let in_labels: Vec<usize> = d
        .inputs()
        .iter()
        .map(|&b| {
            let w = d.neighbors(b).next().expect("boundary has degree 1");
            side[&(b, w)]
        })
        .collect();
    debug_assert_eq!(result.rank(), n_in + n_out);

    // scatter the result tensor into matrix layout
    let rank = result.rank();
    let mut weight_of_label = std::collections::BTreeMap::new();
    for (pos, &l) in result.labels.iter().enumerate() {
        weight_of_label.insert(l, 1usize << (rank - 1 - pos));
    }
    let rows = 1usize << n_out;
    let cols = 1usize << n_in;
    let mat = Array2::from_shape_fn((rows, cols), |(r, c)| {
        let mut idx = 0usize;
        for (k, l) in out_labels.iter().enumerate() {
            if (r >> (n_out - 1 - k)) & 1 == 1 {
                idx += weight_of_label[l];
            }
        }
        for (k, l) in in_labels.iter().enumerate() {
            if (c >> (n_in - 1 - k)) & 1 == 1 {
                idx += weight_of_label[l];
            }
        }
        result.data[idx]
    });
    Ok(mat)
}

/// Outcome of comparing two linear maps up to a scalar.
#[derive(Debug, Clone, Copy)]
pub struct ScalarComparison<T> {
    pub equal: bool,
    /// The scalar `lambda` with `A ~ lambda * B`, taken at the
    /// largest-magnitude entry of `B`.
    pub lambda: Complex<T>,
    /// `max |A - lambda B|` over all entries.
    pub max_residual: T,
}

/// Compare two maps up to a nonzero scalar within a relative tolerance.
pub fn compare_up_to_scalar<T: FloatScalar>(
    a: &LinearMap<T>,
    b: &LinearMap<T>,
    tol: T,
) -> Result<ScalarComparison<T>, OracleError> {
    if a.dim() != b.dim() {
        return Err(OracleError::DimensionMismatch(
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols(),
        ));
    }
    let max_norm = |m: &LinearMap<T>| {
        m.iter()
            .map(|z| z.norm())
            .fold(T::zero(), |acc, x| if x > acc { x } else { acc })
    };
    let norm_a = max_norm(a);
    let norm_b = max_norm(b);
    // entries below tol are contraction noise: a numerically-zero pair is
    // equal, while the zero map is never a *nonzero* multiple of a nonzero
    // map (and vice versa)
    let zero_a = norm_a <= tol;
    let zero_b = norm_b <= tol;
    if zero_a || zero_b {
        return Ok(ScalarComparison {
            equal: zero_a && zero_b,
            lambda: Complex::new(T::one(), T::zero()),
            max_residual: if norm_a > norm_b { norm_a } else { norm_b },
        });
    }
    let mut arg = (0, 0);
    let mut best = T::zero();
    for ((i, j), z) in b.indexed_iter() {
        if z.norm() > best {
            best = z.norm();
            arg = (i, j);
        }
    }
    let lambda = a[arg] / b[arg];
    let mut max_residual = T::zero();
    for (za, zb) in a.iter().zip(b.iter()) {
        let r = (*za - lambda * *zb).norm();
        if r > max_residual {
            max_residual = r;
        }
    }
    let scale = if norm_a > T::one() { norm_a } else { T::one() };
    Ok(ScalarComparison {
        equal: max_residual <= tol * scale,
        lambda,
        max_residual,
    })
}

/// True iff `A = lambda B` for some nonzero scalar, within `tol` relative to
/// `max(|A|_max, 1)`. Two zero maps are equal.
pub fn equal_up_to_scalar<T: FloatScalar>(
    a: &LinearMap<T>,
    b: &LinearMap<T>,
    tol: T,
) -> Result<bool, OracleError> {
    compare_up_to_scalar(a, b, tol).map(|c| c.equal)
}
