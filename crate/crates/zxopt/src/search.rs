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

//! Exhaustive exploration of the rewrite state-space.
//!
//! A node's successors are produced by [`children`]: one bundled application
//! per rule in the configured order. The pruning conditions keep the tree
//! finite and free of trivial cycles:
//!
//! - no unfusion rule exists at all;
//! - rule bundling yields at most one child per rule;
//! - colour change is never applied twice in a row on a path;
//! - Hadamard splitting is limited to `hd_budget` batches per path;
//! - a depth bound and an optional wall-clock limit cut everything else.
//!
//! The incumbent starts at the (optionally graph-like-normalised) root, so a
//! search never returns a diagram worse than its input. Leaves improve the
//! incumbent only when the extractability predicate accepts them.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::gflow::gflow_exists;
use crate::graph::Diagram;
use crate::metric::Metric;
use crate::rules::{apply_bundled, RuleId};

/// Rule order used when none is configured: connectivity-changing rules
/// first, spider-count reduction after, growth rules last.
pub const DEFAULT_RULE_ORDER: [RuleId; 10] = [
    RuleId::LocalComp,
    RuleId::Pivot,
    RuleId::Bialgebra,
    RuleId::PiCopy,
    RuleId::StateCopy,
    RuleId::Fusion,
    RuleId::IdentityRemoval,
    RuleId::HadamardCancel,
    RuleId::HadamardSplit,
    RuleId::ColourChange,
];

/// Breadth-first state cap of [`brute_force_min`].
pub const BRUTE_FORCE_STATE_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Dfs,
    Iddfs,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Dfs => write!(f, "dfs"),
            Strategy::Iddfs => write!(f, "iddfs"),
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Strategy, String> {
        match s {
            "dfs" => Ok(Strategy::Dfs),
            "iddfs" => Ok(Strategy::Iddfs),
            other => Err(format!("unknown strategy `{other}`, expected dfs|iddfs")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extractability {
    /// Accept every diagram.
    AlwaysTrue,
    /// Accept diagrams whose graph-like form admits a generalised flow.
    GflowCheck,
}

impl fmt::Display for Extractability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extractability::AlwaysTrue => write!(f, "always"),
            Extractability::GflowCheck => write!(f, "gflow"),
        }
    }
}

impl FromStr for Extractability {
    type Err = String;

    fn from_str(s: &str) -> Result<Extractability, String> {
        match s {
            "always" => Ok(Extractability::AlwaysTrue),
            "gflow" => Ok(Extractability::GflowCheck),
            other => Err(format!("unknown predicate `{other}`, expected always|gflow")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub strategy: Strategy,
    pub metric: Metric,
    /// DFS depth bound, and the final bound of IDDFS.
    pub depth_limit: usize,
    /// Wall-clock limit; `None` runs until the depth bound exhausts.
    pub time_limit: Option<Duration>,
    pub rule_order: Vec<RuleId>,
    /// Hadamard-split batches allowed per root-to-node path.
    pub hd_budget: usize,
    pub extractability: Extractability,
    /// Normalise the root with `to_graph_like` before searching.
    pub normalize_root: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            strategy: Strategy::Iddfs,
            metric: Metric::TCount,
            depth_limit: 6,
            time_limit: Some(Duration::from_secs(60)),
            rule_order: DEFAULT_RULE_ORDER.to_vec(),
            hd_budget: 2,
            extractability: Extractability::AlwaysTrue,
            normalize_root: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchNode {
    pub diagram: Diagram,
    pub depth: usize,
    pub last_rule: Option<RuleId>,
    /// Hadamard-split batches consumed on the path from the root.
    pub hd_used: usize,
}

impl SearchNode {
    pub fn root(diagram: Diagram) -> Self {
        SearchNode { diagram, depth: 0, last_rule: None, hd_used: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    DepthExhausted,
    TimeLimit,
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Termination::DepthExhausted => write!(f, "depth_exhausted"),
            Termination::TimeLimit => write!(f, "time_limit"),
        }
    }
}

/// One row of the incumbent time-evolution trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TracePoint {
    pub elapsed_ms: u64,
    pub best_value: u64,
    pub nodes_expanded: u64,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub best: Diagram,
    pub best_value: u64,
    pub nodes_expanded: u64,
    pub leaves_evaluated: u64,
    pub trace: Vec<TracePoint>,
    pub terminated_by: Termination,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("brute-force enumeration exceeded the {BRUTE_FORCE_STATE_BUDGET}-state budget")]
    StateBudget,
}

/// The extractability predicate of the configuration. Non-graph-like
/// diagrams are normalised before the gflow test.
pub fn extractable(d: &Diagram, predicate: Extractability) -> bool {
    match predicate {
        Extractability::AlwaysTrue => true,
        Extractability::GflowCheck => {
            if d.is_graph_like() {
                gflow_exists(d).expect("graph-like checked")
            } else {
                gflow_exists(&d.to_graph_like()).expect("normalised to graph-like")
            }
        }
    }
}

/// Successor nodes: at most one bundled child per rule in `cfg.rule_order`.
/// Colour change is skipped right after a colour change, and Hadamard
/// splitting once its path budget is spent.
pub fn children(n: &SearchNode, cfg: &SearchConfig) -> Vec<SearchNode> {
    let mut out = Vec::new();
    for &rule in &cfg.rule_order {
        if rule == RuleId::ColourChange && n.last_rule == Some(RuleId::ColourChange) {
            continue;
        }
        if rule == RuleId::HadamardSplit && n.hd_used >= cfg.hd_budget {
            continue;
        }
        if let Some(diagram) = apply_bundled(rule, &n.diagram) {
            out.push(SearchNode {
                diagram,
                depth: n.depth + 1,
                last_rule: Some(rule),
                hd_used: n.hd_used + usize::from(rule == RuleId::HadamardSplit),
            });
        }
    }
    out
}

/// A node is a leaf when it has no successors or sits at the depth bound.
/// (Hitting the wall-clock limit also ends a path; the driver handles that.)
pub fn is_leaf(n: &SearchNode, cfg: &SearchConfig, bound: usize) -> bool {
    n.depth >= bound || children(n, cfg).is_empty()
}

/// Check a leaf against the incumbent: `Some(value)` when it improves
/// strictly *and* passes the extractability predicate. The improvement test
/// runs first, so the (potentially costly) predicate is skipped on
/// non-improving leaves.
pub fn evaluate_leaf(n: &SearchNode, cfg: &SearchConfig, best_value: u64) -> Option<u64> {
    let value = cfg.metric.value(&n.diagram);
    if value >= best_value {
        return None;
    }
    if !extractable(&n.diagram, cfg.extractability) {
        return None;
    }
    Some(value)
}

struct Engine<'c> {
    cfg: &'c SearchConfig,
    start: Instant,
    root: Diagram,
    best: Diagram,
    best_value: u64,
    nodes_expanded: u64,
    leaves_evaluated: u64,
    trace: Vec<TracePoint>,
    timed_out: bool,
    /// Whether the current iteration visited a node at the depth bound.
    depth_cut: bool,
}

impl<'c> Engine<'c> {
    fn new(d0: &Diagram, cfg: &'c SearchConfig) -> Self {
        let root = if cfg.normalize_root { d0.to_graph_like() } else { d0.clone() };
        let best_value = cfg.metric.value(&root);
        let start = Instant::now();
        let trace = vec![TracePoint { elapsed_ms: 0, best_value, nodes_expanded: 0 }];
        Engine {
            cfg,
            start,
            best: root.clone(),
            root,
            best_value,
            nodes_expanded: 0,
            leaves_evaluated: 0,
            trace,
            timed_out: false,
            depth_cut: false,
        }
    }

    fn time_exceeded(&self) -> bool {
        self.cfg
            .time_limit
            .is_some_and(|limit| self.start.elapsed() >= limit)
    }

    fn eval_leaf(&mut self, node: &SearchNode) {
        self.leaves_evaluated += 1;
        if let Some(value) = evaluate_leaf(node, self.cfg, self.best_value) {
            self.best = node.diagram.clone();
            self.best_value = value;
            self.trace.push(TracePoint {
                elapsed_ms: self.start.elapsed().as_millis() as u64,
                best_value: value,
                nodes_expanded: self.nodes_expanded,
            });
        }
    }

    fn visit(&mut self, node: SearchNode, bound: usize) {
        self.nodes_expanded += 1;
        if self.time_exceeded() {
            self.timed_out = true;
            return;
        }
        if node.depth >= bound {
            self.depth_cut = true;
            self.eval_leaf(&node);
            return;
        }
        let kids = children(&node, self.cfg);
        if kids.is_empty() {
            self.eval_leaf(&node);
            return;
        }
        for kid in kids {
            self.visit(kid, bound);
            if self.timed_out {
                return;
            }
        }
    }

    fn run_iteration(&mut self, bound: usize) {
        self.depth_cut = false;
        self.visit(SearchNode::root(self.root.clone()), bound);
    }

    fn finish(self) -> SearchResult {
        SearchResult {
            best: self.best,
            best_value: self.best_value,
            nodes_expanded: self.nodes_expanded,
            leaves_evaluated: self.leaves_evaluated,
            trace: self.trace,
            terminated_by: if self.timed_out {
                Termination::TimeLimit
            } else {
                Termination::DepthExhausted
            },
        }
    }
}

/// Depth-first search to `cfg.depth_limit`, children expanded in rule order.
pub fn dfs(d0: &Diagram, cfg: &SearchConfig) -> SearchResult {
    let mut engine = Engine::new(d0, cfg);
    engine.run_iteration(cfg.depth_limit);
    engine.finish()
}

/// Iterative deepening: depth-first passes with bounds 1, 2, ...,
/// `cfg.depth_limit`, carrying the incumbent and the trace across
/// iterations. Stops early on the time limit, or once an iteration was not
/// cut by its depth bound (deeper passes would retrace the same tree).
pub fn iddfs(d0: &Diagram, cfg: &SearchConfig) -> SearchResult {
    let mut engine = Engine::new(d0, cfg);
    for bound in 1..=cfg.depth_limit {
        engine.run_iteration(bound);
        if engine.timed_out || !engine.depth_cut {
            break;
        }
    }
    engine.finish()
}

/// Run the strategy selected in the configuration.
pub fn run(d0: &Diagram, cfg: &SearchConfig) -> SearchResult {
    match cfg.strategy {
        Strategy::Dfs => dfs(d0, cfg),
        Strategy::Iddfs => iddfs(d0, cfg),
    }
}

/// Test oracle: breadth-first enumeration of the identical child relation up
/// to `cfg.depth_limit`, returning the minimum metric over the root and all
/// visited nodes passing the extractability predicate. The root counts
/// unconditionally, mirroring the search's incumbent initialisation.
pub fn brute_force_min(d0: &Diagram, cfg: &SearchConfig) -> Result<u64, SearchError> {
    let root = if cfg.normalize_root { d0.to_graph_like() } else { d0.clone() };
    let mut best = cfg.metric.value(&root);
    let mut queue = VecDeque::from([SearchNode::root(root)]);
    let mut states = 1usize;
    while let Some(node) = queue.pop_front() {
        if node.depth >= cfg.depth_limit {
            continue;
        }
        for child in children(&node, cfg) {
            states += 1;
            if states > BRUTE_FORCE_STATE_BUDGET {
                return Err(SearchError::StateBudget);
            }
            let value = cfg.metric.value(&child.diagram);
            if value < best && extractable(&child.diagram, cfg.extractability) {
                best = value;
            }
            queue.push_back(child);
        }
    }
    Ok(best)
}
