//! Small reference networks with hand-checked flow values, shared by tests,
//! the CLI and the data directory.

use crate::error::Result;
use crate::network::{StaticFlowNetwork, TemporalFlowNetwork, TfnBuilder, VertexId};
use crate::query::Query;

fn build(vertices: &[&str], edges: &[(&str, &str, u64, u64)]) -> TemporalFlowNetwork {
    let mut b = TfnBuilder::new();
    for v in vertices {
        b.add_vertex(v);
    }
    for (i, &(u, v, c, t)) in edges.iter().enumerate() {
        b.add_edge(u, v, c, t, i + 1).expect("fixture edges are valid");
    }
    b.build().expect("fixture network is valid")
}

/// Vertex id for `label`.
///
/// # Panics
/// If the label does not exist.
pub fn id(tfn: &TemporalFlowNetwork, label: &str) -> VertexId {
    tfn.vertex(label).unwrap_or_else(|| panic!("no vertex {label:?}"))
}

const STRANDED_VERTICES: [&str; 7] = ["s", "v1", "v2", "v3", "v4", "v5", "t"];

const STRANDED_EDGES: [(&str, &str, u64, u64); 8] = [
    ("s", "v1", 3, 1),
    ("s", "v2", 4, 3),
    ("v1", "v3", 3, 4),
    ("v2", "v3", 2, 5),
    ("v3", "v5", 5, 1),
    ("v5", "t", 5, 6),
    ("v2", "v4", 2, 4),
    ("v4", "t", 2, 7),
];

/// Seven-vertex transaction network whose static maximum flow is 7 but whose
/// temporal maximum flow is only 2 (through `v2 -> v4`).
pub fn stranded_flow() -> TemporalFlowNetwork {
    build(&STRANDED_VERTICES, &STRANDED_EDGES)
}

/// [`stranded_flow`] with timestamps ignored, as a static network; returns the
/// network with its source `s` and sink `t`.
pub fn stranded_flow_static() -> (StaticFlowNetwork, VertexId, VertexId) {
    let tfn = stranded_flow();
    let edges: Vec<(usize, usize, u64)> = tfn.edges().iter().map(|e| (e.src.index(), e.dst.index(), e.capacity)).collect();
    let net = StaticFlowNetwork::from_edges(tfn.num_vertices(), &edges).expect("valid static network");
    (net, id(&tfn, "s"), id(&tfn, "t"))
}

/// Network with a regret-disabling vertex `v3`: greedy augmentation along
/// `s, v1, v3, v5, t` strands flow and reaches 6, while the maximum temporal
/// flow is 8.
pub fn regret_network() -> TemporalFlowNetwork {
    build(
        &["s", "v1", "v2", "v3", "v4", "v5", "t"],
        &[
            ("s", "v1", 6, 1),
            ("s", "v2", 3, 2),
            ("v1", "v3", 6, 3),
            ("v2", "v3", 3, 5),
            ("v3", "v5", 5, 6),
            ("v3", "v4", 3, 4),
            ("v5", "t", 5, 7),
            ("v4", "t", 3, 8),
        ],
    )
}

/// Two-source, two-sink network with outdated edges and inlet/outlet
/// vertices; `MFlow(S, T) = 2` before and after reduction.
pub fn reduction_example() -> TemporalFlowNetwork {
    build(
        &["s1", "s2", "t1", "t2", "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"],
        &[
            ("s1", "v2", 3, 3),
            ("s2", "v2", 3, 4),
            ("v2", "v6", 3, 1),
            ("v2", "v3", 3, 2),
            ("s1", "v1", 1, 1),
            ("v1", "v3", 1, 5),
            ("v3", "v5", 2, 4),
            ("v3", "t1", 1, 6),
            ("v5", "t2", 4, 8),
            ("v7", "v6", 1, 2),
            ("s2", "v6", 1, 3),
            ("v6", "t2", 1, 6),
            ("v6", "v8", 1, 5),
        ],
    )
}

pub fn reduction_query(tfn: &TemporalFlowNetwork) -> Result<Query> {
    Query::from_labels(tfn, &["s1", "s2"], &["t1", "t2"], 1)
}

/// Four sources and five sinks falling into two reachability components:
/// `({s1, s2}, {t1, t2, t3})` through hub `h`, and `({s3, s4}, {t4, t5})`.
/// The branch `s3 -> m -> t4` is temporally dead.
pub fn two_component() -> TemporalFlowNetwork {
    build(
        &["s1", "s2", "s3", "s4", "t1", "t2", "t3", "t4", "t5", "h", "m"],
        &[
            ("s1", "h", 1, 1),
            ("s2", "h", 9, 2),
            ("h", "t2", 5, 3),
            ("h", "t3", 5, 4),
            ("s1", "t1", 1, 2),
            ("s4", "t5", 7, 1),
            ("s4", "t4", 1, 2),
            ("s3", "t4", 3, 3),
            ("s3", "m", 4, 5),
            ("m", "t4", 4, 4),
        ],
    )
}

pub fn two_component_query(tfn: &TemporalFlowNetwork, k: usize) -> Result<Query> {
    Query::from_labels(tfn, &["s1", "s2", "s3", "s4"], &["t1", "t2", "t3", "t4", "t5"], k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(stranded_flow().num_edges(), 8);
        assert_eq!(regret_network().num_vertices(), 7);
        assert_eq!(reduction_example().num_edges(), 13);
        let net = two_component();
        assert!(id(&net, "t2") < id(&net, "t3"));
        assert_eq!(two_component_query(&net, 4).unwrap().num_terminals(), 9);
    }
}
