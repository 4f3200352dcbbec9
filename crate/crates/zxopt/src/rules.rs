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

//! The rewrite rule set and its match-and-apply machinery.
//!
//! Every rule preserves the linear map of the diagram up to a nonzero
//! scalar, which the tensor oracle checks across a random corpus. Matching
//! is deterministic: [`find_matches`] enumerates sites in ascending
//! vertex-id order, and [`apply`] re-validates a match before rewriting so a
//! stale [`Rewrite`] is rejected rather than silently producing an unsound
//! diagram.
//!
//! Spider unfusion is deliberately absent from the rule set, and
//! [`apply_bundled`] applies all still-valid matches of one rule in a single
//! greedy batch, so one rule application produces at most one successor
//! diagram.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Diagram, EdgeType, VertexKind, V};
use crate::phase::Phase;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    /// f: fuse a plain-connected same-colour spider pair.
    Fusion,
    /// lc: delete a +-pi/2 spider, complementing its neighbourhood.
    LocalComp,
    /// pivot: the local-complementation composite on a Hadamard-connected
    /// Pauli-phase pair.
    Pivot,
    /// h: recolour a spider, toggling all incident edge types.
    ColourChange,
    /// i1: remove a degree-2 phase-0 spider whose edges do not both carry
    /// a Hadamard.
    IdentityRemoval,
    /// i2: remove a degree-2 phase-0 spider between two Hadamard edges,
    /// cancelling them into a plain wire.
    HadamardCancel,
    /// b: the 2-in/2-out phase-free bialgebra replacement.
    Bialgebra,
    /// pi: push a pi phase on a wire through an opposite-colour spider.
    PiCopy,
    /// c: copy a Pauli state through an opposite-colour phase-0 spider.
    StateCopy,
    /// hd: split a Hadamard edge into its Euler chain of spiders.
    HadamardSplit,
}

impl RuleId {
    pub const ALL: [RuleId; 10] = [
        RuleId::Fusion,
        RuleId::LocalComp,
        RuleId::Pivot,
        RuleId::ColourChange,
        RuleId::IdentityRemoval,
        RuleId::HadamardCancel,
        RuleId::Bialgebra,
        RuleId::PiCopy,
        RuleId::StateCopy,
        RuleId::HadamardSplit,
    ];

    pub fn short_name(&self) -> &'static str {
        match self {
            RuleId::Fusion => "f",
            RuleId::LocalComp => "lc",
            RuleId::Pivot => "pivot",
            RuleId::ColourChange => "h",
            RuleId::IdentityRemoval => "i1",
            RuleId::HadamardCancel => "i2",
            RuleId::Bialgebra => "b",
            RuleId::PiCopy => "pi",
            RuleId::StateCopy => "c",
            RuleId::HadamardSplit => "hd",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.short_name())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<RuleId, String> {
        RuleId::ALL
            .iter()
            .copied()
            .find(|r| r.short_name() == s)
            .ok_or_else(|| format!("unknown rule `{s}`, expected one of h,b,lc,pivot,f,i1,i2,pi,c,hd"))
    }
}

/// One applicable rewrite: a rule plus the vertices identifying its site.
///
/// Site shapes: `[v]` for vertex rules (lc, h, i1, i2), `[u, v]` with
/// `u < v` for undirected edge rules (f, pivot, b, hd), and ordered
/// `[pusher, crossed]` resp. `[state, crossed]` for pi and c.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rewrite {
    pub rule: RuleId,
    pub site: Vec<V>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("stale rewrite: {0} at {1:?} no longer matches")]
    StaleMatch(RuleId, Vec<V>),
}

fn is_spider(d: &Diagram, v: V) -> bool {
    d.contains_vertex(v) && d.kind(v).is_spider()
}

fn check_fusion(d: &Diagram, u: V, v: V) -> bool {
    is_spider(d, u)
        && is_spider(d, v)
        && d.kind(u) == d.kind(v)
        && d.edge_type(u, v) == Some(EdgeType::Plain)
}

fn check_local_comp(d: &Diagram, v: V) -> bool {
    is_spider(d, v)
        && d.phase(v).is_proper_clifford()
        && d.incident_edges(v)
            .all(|(w, et)| et == EdgeType::Hadamard && is_spider(d, w) && d.kind(w) == d.kind(v))
}

fn check_pivot(d: &Diagram, u: V, v: V) -> bool {
    let interior_pauli = |x: V| {
        d.phase(x).is_pauli()
            && d.incident_edges(x)
                .all(|(w, et)| et == EdgeType::Hadamard && is_spider(d, w) && d.kind(w) == d.kind(x))
    };
    is_spider(d, u)
        && is_spider(d, v)
        && d.kind(u) == d.kind(v)
        && d.edge_type(u, v) == Some(EdgeType::Hadamard)
        && interior_pauli(u)
        && interior_pauli(v)
}

fn check_colour_change(d: &Diagram, v: V) -> bool {
    is_spider(d, v)
}

fn check_identity(d: &Diagram, v: V, both_hadamard: bool) -> bool {
    if !(is_spider(d, v) && d.phase(v).is_zero() && d.degree(v) == 2) {
        return false;
    }
    let all_h = d.incident_edges(v).all(|(_, et)| et == EdgeType::Hadamard);
    all_h == both_hadamard
}

fn check_bialgebra(d: &Diagram, u: V, v: V) -> bool {
    is_spider(d, u)
        && is_spider(d, v)
        && d.kind(u) != d.kind(v)
        && d.edge_type(u, v) == Some(EdgeType::Plain)
        && d.phase(u).is_zero()
        && d.phase(v).is_zero()
        && d.degree(u) == 3
        && d.degree(v) == 3
}

fn check_pi_copy(d: &Diagram, u: V, v: V) -> bool {
    is_spider(d, u)
        && is_spider(d, v)
        && d.phase(u).is_pi()
        && d.degree(u) == 2
        && d.kind(v) == d.kind(u).opposite()
        && d.edge_type(u, v) == Some(EdgeType::Plain)
}

fn check_state_copy(d: &Diagram, u: V, v: V) -> bool {
    is_spider(d, u)
        && is_spider(d, v)
        && d.degree(u) == 1
        && d.phase(u).is_pauli()
        && d.kind(v) == d.kind(u).opposite()
        && d.phase(v).is_zero()
        && d.edge_type(u, v) == Some(EdgeType::Plain)
}

fn check_hadamard_split(d: &Diagram, u: V, v: V) -> bool {
    d.contains_vertex(u) && d.contains_vertex(v) && d.edge_type(u, v) == Some(EdgeType::Hadamard)
}

/// Whether a rewrite still matches the diagram.
pub fn matches_at(d: &Diagram, rw: &Rewrite) -> bool {
    match (rw.rule, rw.site.as_slice()) {
        (RuleId::Fusion, &[u, v]) => check_fusion(d, u, v),
        (RuleId::LocalComp, &[v]) => check_local_comp(d, v),
        (RuleId::Pivot, &[u, v]) => check_pivot(d, u, v),
        (RuleId::ColourChange, &[v]) => check_colour_change(d, v),
        (RuleId::IdentityRemoval, &[v]) => check_identity(d, v, false),
        (RuleId::HadamardCancel, &[v]) => check_identity(d, v, true),
        (RuleId::Bialgebra, &[u, v]) => check_bialgebra(d, u, v),
        (RuleId::PiCopy, &[u, v]) => check_pi_copy(d, u, v),
        (RuleId::StateCopy, &[u, v]) => check_state_copy(d, u, v),
        (RuleId::HadamardSplit, &[u, v]) => check_hadamard_split(d, u, v),
        _ => false,
    }
}

/// All sites where `rule` applies, in ascending vertex-id order. Never
/// returns unfusion sites: growing rules other than hd and b are not in the
/// rule set at all.
pub fn find_matches(rule: RuleId, d: &Diagram) -> Vec<Rewrite> {
    let mut out = Vec::new();
    let mut push = |site: Vec<V>| out.push(Rewrite { rule, site });
    match rule {
        RuleId::Fusion => {
            for (u, v, _) in d.edges() {
                if check_fusion(d, u, v) {
                    push(vec![u, v]);
                }
            }
        }
        RuleId::LocalComp => {
            for v in d.spiders() {
                if check_local_comp(d, v) {
                    push(vec![v]);
                }
            }
        }
        RuleId::Pivot => {
            for (u, v, _) in d.edges() {
                if check_pivot(d, u, v) {
                    push(vec![u, v]);
                }
            }
        }
        RuleId::ColourChange => {
            for v in d.spiders() {
                push(vec![v]);
            }
        }
        RuleId::IdentityRemoval => {
            for v in d.spiders() {
                if check_identity(d, v, false) {
                    push(vec![v]);
                }
            }
        }
        RuleId::HadamardCancel => {
            for v in d.spiders() {
                if check_identity(d, v, true) {
                    push(vec![v]);
                }
            }
        }
        RuleId::Bialgebra => {
            for (u, v, _) in d.edges() {
                if check_bialgebra(d, u, v) {
                    push(vec![u, v]);
                }
            }
        }
        RuleId::PiCopy => {
            for u in d.spiders() {
                if d.phase(u).is_pi() && d.degree(u) == 2 {
                    let targets: Vec<V> = d.neighbors(u).collect();
                    for v in targets {
                        if check_pi_copy(d, u, v) {
                            push(vec![u, v]);
                        }
                    }
                }
            }
        }
        RuleId::StateCopy => {
            for u in d.spiders() {
                if d.degree(u) == 1 {
                    let v = d.neighbors(u).next().unwrap();
                    if check_state_copy(d, u, v) {
                        push(vec![u, v]);
                    }
                }
            }
        }
        RuleId::HadamardSplit => {
            for (u, v, et) in d.edges() {
                if et == EdgeType::Hadamard {
                    push(vec![u, v]);
                }
            }
        }
    }
    out
}

fn apply_fusion(g: &mut Diagram, u: V, v: V) {
    g.fuse(u, v);
}

fn apply_local_comp(g: &mut Diagram, v: V) {
    let p = g.phase(v);
    let ns: Vec<V> = g.neighbors(v).collect();
    for i in 0..ns.len() {
        for j in (i + 1)..ns.len() {
            g.add_edge_smart(ns[i], ns[j], EdgeType::Hadamard);
        }
    }
    for &n in &ns {
        g.add_to_phase(n, -p);
    }
    g.remove_vertex(v);
}

fn apply_pivot(g: &mut Diagram, u: V, v: V) {
    let pu = g.phase(u);
    let pv = g.phase(v);
    let ns0: Vec<V> = g.neighbors(u).collect();
    let ns1: Vec<V> = g.neighbors(v).collect();
    for &n in &ns0 {
        if n != v {
            g.add_to_phase(n, pv);
        }
    }
    for &n in &ns1 {
        if n != u {
            g.add_to_phase(n, pu);
        }
    }
    // the complete-bipartite complementation; a common neighbour shows up as
    // the pair (n, n), whose Hadamard self-loop contributes the extra pi
    for &n0 in &ns0 {
        if n0 == v {
            continue;
        }
        for &n1 in &ns1 {
            if n1 == u {
                continue;
            }
            g.add_edge_smart(n0, n1, EdgeType::Hadamard);
        }
    }
    g.remove_vertex(u);
    g.remove_vertex(v);
}

fn apply_colour_change(g: &mut Diagram, v: V) {
    g.set_kind(v, g.kind(v).opposite());
    let nhd: Vec<(V, EdgeType)> = g.incident_edges(v).collect();
    for (w, et) in nhd {
        g.set_edge_type(v, w, et.toggled());
    }
}

fn apply_identity(g: &mut Diagram, v: V) {
    let nhd: Vec<(V, EdgeType)> = g.incident_edges(v).collect();
    let [(a, ea), (b, eb)] = nhd[..] else {
        unreachable!("identity spider has degree 2")
    };
    g.remove_vertex(v);
    g.add_edge_smart(a, b, ea.compose(eb));
}

fn apply_bialgebra(g: &mut Diagram, u: V, v: V) {
    // orient so `zu` is the Z spider and `xv` the X spider
    let (zu, xv) = if g.kind(u) == VertexKind::Z { (u, v) } else { (v, u) };
    let z_legs: Vec<(V, EdgeType)> = g.incident_edges(zu).filter(|&(w, _)| w != xv).collect();
    let x_legs: Vec<(V, EdgeType)> = g.incident_edges(xv).filter(|&(w, _)| w != zu).collect();
    g.remove_vertex(zu);
    g.remove_vertex(xv);
    // the wires that fed the Z spider now feed fresh X spiders and vice
    // versa, joined by a complete bipartite plain core
    let new_x: Vec<V> = z_legs
        .iter()
        .map(|&(w, et)| {
            let nx = g.add_vertex(VertexKind::X);
            g.add_edge(nx, w, et);
            nx
        })
        .collect();
    let new_z: Vec<V> = x_legs
        .iter()
        .map(|&(w, et)| {
            let nz = g.add_vertex(VertexKind::Z);
            g.add_edge(nz, w, et);
            nz
        })
        .collect();
    for &nx in &new_x {
        for &nz in &new_z {
            g.add_edge(nx, nz, EdgeType::Plain);
        }
    }
}

fn apply_pi_copy(g: &mut Diagram, u: V, v: V) {
    let kind_u = g.kind(u);
    let (w, et_w) = g
        .incident_edges(u)
        .find(|&(x, _)| x != v)
        .expect("pi spider has a second wire");
    let legs: Vec<(V, EdgeType)> = g.incident_edges(v).filter(|&(x, _)| x != u).collect();
    g.remove_vertex(u);
    for (x, et_x) in legs {
        g.remove_edge(v, x);
        let c = g.add_vertex_with_phase(kind_u, Phase::pi());
        g.add_edge(v, c, EdgeType::Plain);
        g.add_edge(c, x, et_x);
    }
    let p = g.phase(v);
    g.set_phase(v, -p);
    g.add_edge_smart(v, w, et_w);
}

fn apply_state_copy(g: &mut Diagram, u: V, v: V) {
    let kind_u = g.kind(u);
    let phase_u = g.phase(u);
    let legs: Vec<(V, EdgeType)> = g.incident_edges(v).filter(|&(x, _)| x != u).collect();
    g.remove_vertex(u);
    g.remove_vertex(v);
    for (x, et_x) in legs {
        let c = g.add_vertex_with_phase(kind_u, phase_u);
        g.add_edge(c, x, et_x);
    }
}

fn apply_hadamard_split(g: &mut Diagram, u: V, v: V) {
    g.remove_edge(u, v);
    let half = Phase::new(1, 2);
    let z1 = g.add_vertex_with_phase(VertexKind::Z, half);
    let x = g.add_vertex_with_phase(VertexKind::X, half);
    let z2 = g.add_vertex_with_phase(VertexKind::Z, half);
    g.add_edge(u, z1, EdgeType::Plain);
    g.add_edge(z1, x, EdgeType::Plain);
    g.add_edge(x, z2, EdgeType::Plain);
    g.add_edge(z2, v, EdgeType::Plain);
}

fn apply_unchecked(g: &mut Diagram, rw: &Rewrite) {
    match (rw.rule, rw.site.as_slice()) {
        (RuleId::Fusion, &[u, v]) => apply_fusion(g, u, v),
        (RuleId::LocalComp, &[v]) => apply_local_comp(g, v),
        (RuleId::Pivot, &[u, v]) => apply_pivot(g, u, v),
        (RuleId::ColourChange, &[v]) => apply_colour_change(g, v),
        (RuleId::IdentityRemoval, &[v]) | (RuleId::HadamardCancel, &[v]) => apply_identity(g, v),
        (RuleId::Bialgebra, &[u, v]) => apply_bialgebra(g, u, v),
        (RuleId::PiCopy, &[u, v]) => apply_pi_copy(g, u, v),
        (RuleId::StateCopy, &[u, v]) => apply_state_copy(g, u, v),
        (RuleId::HadamardSplit, &[u, v]) => apply_hadamard_split(g, u, v),
        _ => unreachable!("validated site shape"),
    }
}

/// Apply one rewrite, returning the new diagram. The match is re-validated
/// first; a stale rewrite is rejected.
pub fn apply(d: &Diagram, rw: &Rewrite) -> Result<Diagram, RuleError> {
    if !matches_at(d, rw) {
        return Err(RuleError::StaleMatch(rw.rule, rw.site.clone()));
    }
    let mut g = d.clone();
    apply_unchecked(&mut g, rw);
    Ok(g)
}

/// Apply a maximal non-overlapping batch of matches of `rule` in one step:
/// matches are taken in ascending site order and skipped when an earlier
/// application in the batch invalidated them. Returns `None` when the rule
/// has no match at all.
pub fn apply_bundled(rule: RuleId, d: &Diagram) -> Option<Diagram> {
    let matches = find_matches(rule, d);
    if matches.is_empty() {
        return None;
    }
    let mut g = d.clone();
    for rw in &matches {
        if matches_at(&g, rw) {
            apply_unchecked(&mut g, rw);
        }
    }
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{equal_up_to_scalar, tensor_of_diagram};
    use crate::LinearMap64;

    /// Tensor-equality up to scalar between a diagram and its rewrite.
    fn sound(before: &Diagram, after: &Diagram) -> bool {
        let a: LinearMap64 = tensor_of_diagram(before).unwrap();
        let b: LinearMap64 = tensor_of_diagram(after).unwrap();
        equal_up_to_scalar(&a, &b, 1e-9).unwrap()
    }

    /// `in -- Z(p1) -- Z(p2) -- out` with the given middle edge type.
    fn two_spider_wire(k1: VertexKind, p1: Phase, k2: VertexKind, p2: Phase, et: EdgeType) -> Diagram {
        let mut g = Diagram::new();
        let i = g.add_vertex(VertexKind::Boundary);
        let a = g.add_vertex_with_phase(k1, p1);
        let b = g.add_vertex_with_phase(k2, p2);
        let o = g.add_vertex(VertexKind::Boundary);
        g.add_edge(i, a, EdgeType::Plain);
        g.add_edge(a, b, et);
        g.add_edge(b, o, EdgeType::Plain);
        g.set_inputs(vec![i]);
        g.set_outputs(vec![o]);
        g
    }

    #[test]
    fn fusion_match_and_apply() {
        let t = Phase::new(1, 4);
        let g = two_spider_wire(VertexKind::Z, t, VertexKind::Z, t, EdgeType::Plain);
        let ms = find_matches(RuleId::Fusion, &g);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].site, vec![1, 2]);

        let g2 = apply(&g, &ms[0]).unwrap();
        assert_eq!(g2.spiders().count(), 1);
        let s = g2.spiders().next().unwrap();
        assert_eq!(g2.phase(s), Phase::new(1, 2));
        assert!(sound(&g, &g2));
    }

    #[test]
    fn fusion_ignores_hadamard_edges_and_colours() {
        let t = Phase::new(1, 4);
        let g = two_spider_wire(VertexKind::Z, t, VertexKind::Z, t, EdgeType::Hadamard);
        assert!(find_matches(RuleId::Fusion, &g).is_empty());
        let g = two_spider_wire(VertexKind::Z, t, VertexKind::X, t, EdgeType::Plain);
        assert!(find_matches(RuleId::Fusion, &g).is_empty());
    }

    #[test]
    fn identity_removal_on_chain() {
        // Z(pi/4) -- Z(0) -- Z(pi/4), plain edges
        let mut g = Diagram::new();
        let i = g.add_vertex(VertexKind::Boundary);
        let a = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
        let mid = g.add_vertex(VertexKind::Z);
        let b = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
        let o = g.add_vertex(VertexKind::Boundary);
        g.add_edge(i, a, EdgeType::Plain);
        g.add_edge(a, mid, EdgeType::Plain);
        g.add_edge(mid, b, EdgeType::Plain);
        g.add_edge(b, o, EdgeType::Plain);
        g.set_inputs(vec![i]);
        g.set_outputs(vec![o]);

        let ms = find_matches(RuleId::IdentityRemoval, &g);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].site, vec![mid]);
        let g2 = apply(&g, &ms[0]).unwrap();
        assert!(sound(&g, &g2));
        assert_eq!(g2.edge_type(a, b), Some(EdgeType::Plain));

        // the boundary-adjacent spiders are not identities (degree 2 but
        // nonzero phase), so no further i1 matches
        assert!(find_matches(RuleId::IdentityRemoval, &g2).is_empty());
    }

    #[test]
    fn hadamard_cancel_joins_to_plain() {
        let mut g = Diagram::new();
        let i = g.add_vertex(VertexKind::Boundary);
        let a = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
        let mid = g.add_vertex(VertexKind::Z);
        let b = g.add_vertex_with_phase(VertexKind::Z, Phase::new(7, 4));
        let o = g.add_vertex(VertexKind::Boundary);
        g.add_edge(i, a, EdgeType::Plain);
        g.add_edge(a, mid, EdgeType::Hadamard);
        g.add_edge(mid, b, EdgeType::Hadamard);
        g.add_edge(b, o, EdgeType::Plain);
        g.set_inputs(vec![i]);
        g.set_outputs(vec![o]);

        assert!(find_matches(RuleId::IdentityRemoval, &g).is_empty());
        let ms = find_matches(RuleId::HadamardCancel, &g);
        assert_eq!(ms.len(), 1);
        let g2 = apply(&g, &ms[0]).unwrap();
        assert_eq!(g2.edge_type(a, b), Some(EdgeType::Plain));
        assert!(sound(&g, &g2));
    }

    #[test]
    fn colour_change_is_an_involution() {
        let g = two_spider_wire(
            VertexKind::Z,
            Phase::new(1, 4),
            VertexKind::X,
            Phase::pi(),
            EdgeType::Plain,
        );
        let rw = Rewrite { rule: RuleId::ColourChange, site: vec![1] };
        let g2 = apply(&g, &rw).unwrap();
        assert_eq!(g2.kind(1), VertexKind::X);
        assert_eq!(g2.edge_type(0, 1), Some(EdgeType::Hadamard));
        assert!(sound(&g, &g2));
        let g3 = apply(&g2, &rw).unwrap();
        assert_eq!(g3, g);
    }

    /// A hub spider H-connected to `n` same-colour spiders, each wired to
    /// its own boundary.
    fn star(hub_phase: Phase, n: usize) -> (Diagram, V, Vec<V>) {
        let mut g = Diagram::new();
        let hub = g.add_vertex_with_phase(VertexKind::Z, hub_phase);
        let mut outer = vec![];
        let mut bs = vec![];
        for _ in 0..n {
            let s = g.add_vertex(VertexKind::Z);
            g.add_edge(hub, s, EdgeType::Hadamard);
            let b = g.add_vertex(VertexKind::Boundary);
            g.add_edge(s, b, EdgeType::Plain);
            outer.push(s);
            bs.push(b);
        }
        let k = bs.len() / 2;
        g.set_inputs(bs[..k].to_vec());
        g.set_outputs(bs[k..].to_vec());
        (g, hub, outer)
    }

    #[test]
    fn local_comp_connects_neighbours() {
        let (g, hub, outer) = star(Phase::new(1, 2), 3);
        let ms = find_matches(RuleId::LocalComp, &g);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].site, vec![hub]);

        let g2 = apply(&g, &ms[0]).unwrap();
        assert!(!g2.contains_vertex(hub));
        for i in 0..outer.len() {
            assert_eq!(g2.phase(outer[i]), Phase::new(3, 2));
            for j in (i + 1)..outer.len() {
                assert_eq!(g2.edge_type(outer[i], outer[j]), Some(EdgeType::Hadamard));
            }
        }
        assert!(sound(&g, &g2));
    }

    #[test]
    fn local_comp_twice_restores_neighbour_adjacency() {
        // two +pi/2 hubs sharing the same three neighbours: complementing
        // at one and then the other restores the outer adjacency
        let mut g = Diagram::new();
        let hub1 = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 2));
        let hub2 = g.add_vertex_with_phase(VertexKind::Z, Phase::new(3, 2));
        let mut outer = vec![];
        let mut bs = vec![];
        for _ in 0..3 {
            let s = g.add_vertex(VertexKind::Z);
            g.add_edge(hub1, s, EdgeType::Hadamard);
            g.add_edge(hub2, s, EdgeType::Hadamard);
            let b = g.add_vertex(VertexKind::Boundary);
            g.add_edge(s, b, EdgeType::Plain);
            outer.push(s);
            bs.push(b);
        }
        g.set_inputs(vec![bs[0]]);
        g.set_outputs(vec![bs[1], bs[2]]);

        let adjacency = |d: &Diagram| -> Vec<(V, V)> {
            let mut pairs = vec![];
            for i in 0..outer.len() {
                for j in (i + 1)..outer.len() {
                    if d.connected(outer[i], outer[j]) {
                        pairs.push((outer[i], outer[j]));
                    }
                }
            }
            pairs
        };
        assert_eq!(adjacency(&g), vec![]);

        let g2 = apply(&g, &Rewrite { rule: RuleId::LocalComp, site: vec![hub1] }).unwrap();
        assert_eq!(adjacency(&g2).len(), 3);
        assert!(sound(&g, &g2));

        let g3 = apply(&g2, &Rewrite { rule: RuleId::LocalComp, site: vec![hub2] }).unwrap();
        assert_eq!(adjacency(&g3), vec![]);
        assert!(sound(&g, &g3));
    }

    #[test]
    fn local_comp_rejects_plain_edges_and_boundaries() {
        let (mut g, hub, outer) = star(Phase::new(1, 2), 3);
        g.set_edge_type(hub, outer[0], EdgeType::Plain);
        assert!(find_matches(RuleId::LocalComp, &g).is_empty());

        // a boundary-adjacent +pi/2 spider is not a valid site
        let mut g = Diagram::new();
        let hub = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 2));
        let b = g.add_vertex(VertexKind::Boundary);
        g.add_edge(hub, b, EdgeType::Hadamard);
        g.set_inputs(vec![b]);
        assert!(find_matches(RuleId::LocalComp, &g).is_empty());
    }

    #[test]
    fn pivot_on_interior_pauli_pair() {
        // u(0) -H- v(pi), u H-connected to 2 spiders, v H-connected to 2
        let mut g = Diagram::new();
        let u = g.add_vertex(VertexKind::Z);
        let v = g.add_vertex_with_phase(VertexKind::Z, Phase::pi());
        g.add_edge(u, v, EdgeType::Hadamard);
        let mut bs = vec![];
        let mut outer = vec![];
        for hub in [u, u, v, v] {
            let s = g.add_vertex(VertexKind::Z);
            g.add_edge(hub, s, EdgeType::Hadamard);
            let b = g.add_vertex(VertexKind::Boundary);
            g.add_edge(s, b, EdgeType::Plain);
            outer.push(s);
            bs.push(b);
        }
        g.set_inputs(vec![bs[0], bs[1]]);
        g.set_outputs(vec![bs[2], bs[3]]);

        let ms = find_matches(RuleId::Pivot, &g);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].site, vec![u, v]);

        let g2 = apply(&g, &ms[0]).unwrap();
        assert!(!g2.contains_vertex(u) && !g2.contains_vertex(v));
        // neighbours of u got v's pi phase; neighbours of v got u's 0 phase
        assert_eq!(g2.phase(outer[0]), Phase::pi());
        assert_eq!(g2.phase(outer[1]), Phase::pi());
        assert_eq!(g2.phase(outer[2]), Phase::zero());
        assert_eq!(g2.phase(outer[3]), Phase::zero());
        assert!(sound(&g, &g2));
    }

    #[test]
    fn pivot_with_common_neighbour() {
        let mut g = Diagram::new();
        let u = g.add_vertex(VertexKind::Z);
        let v = g.add_vertex(VertexKind::Z);
        let shared = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
        g.add_edge(u, v, EdgeType::Hadamard);
        g.add_edge(u, shared, EdgeType::Hadamard);
        g.add_edge(v, shared, EdgeType::Hadamard);
        let b = g.add_vertex(VertexKind::Boundary);
        g.add_edge(shared, b, EdgeType::Plain);
        g.set_outputs(vec![b]);

        let ms = find_matches(RuleId::Pivot, &g);
        assert_eq!(ms.len(), 1);
        let g2 = apply(&g, &ms[0]).unwrap();
        // common neighbour picks up p_u + p_v + pi
        assert_eq!(g2.phase(shared), Phase::new(5, 4));
        assert!(sound(&g, &g2));
    }

    #[test]
    fn bialgebra_two_by_two() {
        // 2-in X -- Z 2-out, all phase 0
        let mut g = Diagram::new();
        let x = g.add_vertex(VertexKind::X);
        let z = g.add_vertex(VertexKind::Z);
        g.add_edge(x, z, EdgeType::Plain);
        let mut ins = vec![];
        let mut outs = vec![];
        for _ in 0..2 {
            let b = g.add_vertex(VertexKind::Boundary);
            g.add_edge(b, x, EdgeType::Plain);
            ins.push(b);
        }
        for _ in 0..2 {
            let b = g.add_vertex(VertexKind::Boundary);
            g.add_edge(z, b, EdgeType::Plain);
            outs.push(b);
        }
        g.set_inputs(ins);
        g.set_outputs(outs);

        let ms = find_matches(RuleId::Bialgebra, &g);
        assert_eq!(ms.len(), 1);
        let g2 = apply(&g, &ms[0]).unwrap();
        assert_eq!(g2.spiders().count(), 4);
        assert_eq!(g2.num_edges(), 8);
        assert!(sound(&g, &g2));
    }

    #[test]
    fn bialgebra_requires_exact_configuration() {
        let g = two_spider_wire(
            VertexKind::Z,
            Phase::zero(),
            VertexKind::X,
            Phase::zero(),
            EdgeType::Plain,
        );
        // degree 2 on both sides: not the 2-in/2-out form
        assert!(find_matches(RuleId::Bialgebra, &g).is_empty());
    }

    #[test]
    fn pi_copy_pushes_through() {
        // in -- X(pi) -- Z(1/4) -- out : the pi pushes through, negating
        // the Z phase and leaving X(pi) on the far wire
        let g = two_spider_wire(
            VertexKind::X,
            Phase::pi(),
            VertexKind::Z,
            Phase::new(1, 4),
            EdgeType::Plain,
        );
        let ms = find_matches(RuleId::PiCopy, &g);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].site, vec![1, 2]);
        let g2 = apply(&g, &ms[0]).unwrap();
        assert_eq!(g2.phase(2), Phase::new(7, 4));
        assert!(sound(&g, &g2));
    }

    #[test]
    fn pi_copy_multi_leg() {
        // X(pi) feeding a Z(alpha) with two further legs
        let mut g = Diagram::new();
        let b_in = g.add_vertex(VertexKind::Boundary);
        let u = g.add_vertex_with_phase(VertexKind::X, Phase::pi());
        let v = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 3));
        g.add_edge(b_in, u, EdgeType::Plain);
        g.add_edge(u, v, EdgeType::Plain);
        let mut outs = vec![];
        for et in [EdgeType::Plain, EdgeType::Hadamard] {
            let b = g.add_vertex(VertexKind::Boundary);
            g.add_edge(v, b, et);
            outs.push(b);
        }
        g.set_inputs(vec![b_in]);
        g.set_outputs(outs);

        let ms = find_matches(RuleId::PiCopy, &g);
        assert_eq!(ms.len(), 1);
        let g2 = apply(&g, &ms[0]).unwrap();
        assert_eq!(g2.phase(v), Phase::new(5, 3));
        // one pi copy per remaining leg
        let pis = g2
            .spiders()
            .filter(|&s| g2.kind(s) == VertexKind::X && g2.phase(s).is_pi())
            .count();
        assert_eq!(pis, 2);
        assert!(sound(&g, &g2));
    }

    #[test]
    fn state_copy_through_phase_free_spider() {
        // X(pi) state into a Z(0) with two output legs
        let mut g = Diagram::new();
        let u = g.add_vertex_with_phase(VertexKind::X, Phase::pi());
        let v = g.add_vertex(VertexKind::Z);
        g.add_edge(u, v, EdgeType::Plain);
        let mut outs = vec![];
        for _ in 0..2 {
            let b = g.add_vertex(VertexKind::Boundary);
            g.add_edge(v, b, EdgeType::Plain);
            outs.push(b);
        }
        g.set_outputs(outs);

        let ms = find_matches(RuleId::StateCopy, &g);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].site, vec![u, v]);
        let g2 = apply(&g, &ms[0]).unwrap();
        assert!(!g2.contains_vertex(v));
        assert_eq!(g2.spiders().count(), 2);
        assert!(sound(&g, &g2));
    }

    #[test]
    fn state_copy_needs_phase_free_target() {
        let mut g = Diagram::new();
        let u = g.add_vertex_with_phase(VertexKind::X, Phase::pi());
        let v = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
        g.add_edge(u, v, EdgeType::Plain);
        let b = g.add_vertex(VertexKind::Boundary);
        g.add_edge(v, b, EdgeType::Plain);
        g.set_outputs(vec![b]);
        assert!(find_matches(RuleId::StateCopy, &g).is_empty());
    }

    #[test]
    fn hadamard_split_euler_chain() {
        let mut g = Diagram::new();
        let i = g.add_vertex(VertexKind::Boundary);
        let o = g.add_vertex(VertexKind::Boundary);
        g.add_edge(i, o, EdgeType::Hadamard);
        g.set_inputs(vec![i]);
        g.set_outputs(vec![o]);

        let ms = find_matches(RuleId::HadamardSplit, &g);
        assert_eq!(ms.len(), 1);
        let g2 = apply(&g, &ms[0]).unwrap();
        assert_eq!(g2.spiders().count(), 3);
        assert!(g2.edges().all(|(_, _, et)| et == EdgeType::Plain));
        assert!(sound(&g, &g2));
    }

    #[test]
    fn stale_rewrite_rejected() {
        let t = Phase::new(1, 4);
        let g = two_spider_wire(VertexKind::Z, t, VertexKind::Z, t, EdgeType::Plain);
        let ms = find_matches(RuleId::Fusion, &g);
        let g2 = apply(&g, &ms[0]).unwrap();
        assert!(matches!(
            apply(&g2, &ms[0]),
            Err(RuleError::StaleMatch(RuleId::Fusion, _))
        ));
    }

    #[test]
    fn bundled_fusion_disjoint_pairs() {
        // two disjoint fusible pairs on separate wires fuse in one batch
        let mut g = Diagram::new();
        let mut io = vec![];
        for _ in 0..2 {
            let i = g.add_vertex(VertexKind::Boundary);
            let a = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
            let b = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
            let o = g.add_vertex(VertexKind::Boundary);
            g.add_edge(i, a, EdgeType::Plain);
            g.add_edge(a, b, EdgeType::Plain);
            g.add_edge(b, o, EdgeType::Plain);
            io.push((i, o));
        }
        g.set_inputs(io.iter().map(|&(i, _)| i).collect());
        g.set_outputs(io.iter().map(|&(_, o)| o).collect());

        let g2 = apply_bundled(RuleId::Fusion, &g).unwrap();
        assert_eq!(g2.spiders().count(), 2);
        assert!(g2.spiders().all(|s| g2.phase(s) == Phase::new(1, 2)));
        assert!(sound(&g, &g2));
    }

    #[test]
    fn bundled_fusion_overlapping_chain_applies_leftmost() {
        // Z(a) - Z(b) - Z(c): the two fusion sites overlap, so one batch
        // fuses only the leftmost pair
        let mut g = Diagram::new();
        let i = g.add_vertex(VertexKind::Boundary);
        let a = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
        let b = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 2));
        let c = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 1));
        let o = g.add_vertex(VertexKind::Boundary);
        g.add_edge(i, a, EdgeType::Plain);
        g.add_edge(a, b, EdgeType::Plain);
        g.add_edge(b, c, EdgeType::Plain);
        g.add_edge(c, o, EdgeType::Plain);
        g.set_inputs(vec![i]);
        g.set_outputs(vec![o]);

        let g2 = apply_bundled(RuleId::Fusion, &g).unwrap();
        assert_eq!(g2.spiders().count(), 2);
        assert_eq!(g2.phase(a), Phase::new(3, 4));
        assert_eq!(g2.phase(c), Phase::new(1, 1));
        assert!(sound(&g, &g2));

        // the second fusion becomes available at the next step
        let g3 = apply_bundled(RuleId::Fusion, &g2).unwrap();
        assert_eq!(g3.spiders().count(), 1);
        assert!(sound(&g, &g3));
    }

    #[test]
    fn bundled_no_match_is_none() {
        let g = two_spider_wire(
            VertexKind::Z,
            Phase::new(1, 4),
            VertexKind::X,
            Phase::zero(),
            EdgeType::Plain,
        );
        assert!(apply_bundled(RuleId::Fusion, &g).is_none());
        assert!(apply_bundled(RuleId::LocalComp, &g).is_none());
        assert!(apply_bundled(RuleId::HadamardSplit, &g).is_none());
    }

    #[test]
    fn find_matches_is_deterministic() {
        let mut g = Diagram::new();
        for _ in 0..4 {
            g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
        }
        g.add_edge(0, 1, EdgeType::Plain);
        g.add_edge(1, 2, EdgeType::Plain);
        g.add_edge(2, 3, EdgeType::Plain);
        for rule in RuleId::ALL {
            assert_eq!(find_matches(rule, &g), find_matches(rule, &g));
        }
        let ms = find_matches(RuleId::Fusion, &g);
        assert_eq!(
            ms.iter().map(|m| m.site.clone()).collect::<Vec<_>>(),
            vec![vec![0, 1], vec![1, 2], vec![2, 3]]
        );
    }

    #[test]
    fn rule_names_round_trip() {
        for rule in RuleId::ALL {
            assert_eq!(rule.short_name().parse::<RuleId>(), Ok(rule));
        }
        assert!("fuse".parse::<RuleId>().is_err());
    }

    #[test]
    fn fusion_creating_parallel_edges_reduces() {
        // fusing two spiders that share an X neighbour creates parallel
        // plain edges to it, which Hopf-cancel
        let mut g = Diagram::new();
        let b1 = g.add_vertex(VertexKind::Boundary);
        let b2 = g.add_vertex(VertexKind::Boundary);
        let u = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 2));
        let v = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
        let x = g.add_vertex(VertexKind::X);
        let b3 = g.add_vertex(VertexKind::Boundary);
        g.add_edge(b1, u, EdgeType::Plain);
        g.add_edge(u, v, EdgeType::Plain);
        g.add_edge(u, x, EdgeType::Plain);
        g.add_edge(v, x, EdgeType::Plain);
        g.add_edge(v, b2, EdgeType::Plain);
        g.add_edge(x, b3, EdgeType::Plain);
        g.set_inputs(vec![b1]);
        g.set_outputs(vec![b2, b3]);

        let rw = Rewrite { rule: RuleId::Fusion, site: vec![u, v] };
        let g2 = apply(&g, &rw).unwrap();
        assert!(!g2.connected(u, x));
        assert!(sound(&g, &g2));
    }
}
