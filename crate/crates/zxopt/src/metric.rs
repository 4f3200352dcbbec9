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

//! Diagram-level optimisation metrics. All metrics are total and invariant
//! under vertex relabelling.

use std::fmt;
use std::str::FromStr;

use crate::graph::Diagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    /// Number of spiders carrying an odd multiple of pi/4.
    TCount,
    /// Total number of edges, boundary wires included.
    EdgeCount,
    /// Number of non-boundary vertices.
    SpiderCount,
}

impl Metric {
    pub fn value(self, d: &Diagram) -> u64 {
        match self {
            Metric::TCount => d
                .vertices()
                .filter(|(_, data)| data.kind.is_spider() && data.phase.is_t_phase())
                .count() as u64,
            Metric::EdgeCount => d.num_edges() as u64,
            Metric::SpiderCount => d.spiders().count() as u64,
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Metric::TCount => "tcount",
            Metric::EdgeCount => "edges",
            Metric::SpiderCount => "spiders",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> Result<Metric, String> {
        match s {
            "tcount" => Ok(Metric::TCount),
            "edges" => Ok(Metric::EdgeCount),
            "spiders" => Ok(Metric::SpiderCount),
            other => Err(format!("unknown metric `{other}`, expected tcount|edges|spiders")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeType, VertexKind};
    use crate::phase::Phase;

    #[test]
    fn counts_on_small_diagram() {
        let mut g = Diagram::new();
        let i = g.add_vertex(VertexKind::Boundary);
        let t = g.add_vertex_with_phase(VertexKind::Z, Phase::new(1, 4));
        let o = g.add_vertex(VertexKind::Boundary);
        g.add_edge(i, t, EdgeType::Plain);
        g.add_edge(t, o, EdgeType::Plain);
        g.set_inputs(vec![i]);
        g.set_outputs(vec![o]);

        assert_eq!(Metric::TCount.value(&g), 1);
        assert_eq!(Metric::EdgeCount.value(&g), 2);
        assert_eq!(Metric::SpiderCount.value(&g), 1);
    }

    #[test]
    fn bare_identity_diagram() {
        let mut g = Diagram::new();
        for _ in 0..2 {
            let i = g.add_vertex(VertexKind::Boundary);
            let o = g.add_vertex(VertexKind::Boundary);
            g.add_edge(i, o, EdgeType::Plain);
        }
        assert_eq!(Metric::TCount.value(&g), 0);
        assert_eq!(Metric::SpiderCount.value(&g), 0);
        assert_eq!(Metric::EdgeCount.value(&g), 2);
    }

    #[test]
    fn t_count_only_sees_denominator_four() {
        let mut g = Diagram::new();
        for (n, d) in [(1, 4), (3, 4), (5, 4), (7, 4), (1, 2), (1, 1), (1, 8), (0, 1)] {
            g.add_vertex_with_phase(VertexKind::Z, Phase::new(n, d));
        }
        assert_eq!(Metric::TCount.value(&g), 4);
    }

    #[test]
    fn names_round_trip() {
        for m in [Metric::TCount, Metric::EdgeCount, Metric::SpiderCount] {
            assert_eq!(m.to_string().parse::<Metric>(), Ok(m));
        }
        assert!("qubits".parse::<Metric>().is_err());
    }
}
