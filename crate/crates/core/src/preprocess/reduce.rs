use crate::error::Result;
use crate::network::{validate_terminals, TemporalFlowNetwork, VertexId};

/// Removes edges that cannot carry any temporal flow from `sources` to
/// `sinks`, iterating to a fixpoint:
///
/// * an outgoing edge `(u, v)` with `u ∉ S`, `v ∉ T` whose timestamp precedes
///   every incoming edge of `u` (or `u` has no incoming edge);
/// * an incoming edge `(v, u)` with `v ∉ S`, `u ∉ T` whose timestamp follows
///   every outgoing edge of `u` (or `u` has no outgoing edge);
/// * all edges of inlet vertices (in-degree 0, not a source) and outlet
///   vertices (out-degree 0, not a sink).
///
/// Vertex ids and labels are preserved; removed edges are dropped and the
/// remaining ones renumbered in their original order.
pub fn reduce(tfn: &TemporalFlowNetwork, sources: &[VertexId], sinks: &[VertexId]) -> Result<TemporalFlowNetwork> {
    let n = tfn.num_vertices();
    validate_terminals(n, sources, sinks)?;
    let mut is_source = vec![false; n];
    let mut is_sink = vec![false; n];
    sources.iter().for_each(|s| is_source[s.index()] = true);
    sinks.iter().for_each(|t| is_sink[t.index()] = true);

    let edges = tfn.edges();
    let mut alive = vec![true; edges.len()];
    loop {
        let mut changed = false;
        for (i, e) in edges.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            let (u, v) = (e.src, e.dst);
            let earliest_in = tfn.in_edges(u).iter().filter(|&&j| alive[j]).map(|&j| edges[j].timestamp).min();
            let latest_out = tfn.out_edges(v).iter().filter(|&&j| alive[j]).map(|&j| edges[j].timestamp).max();
            let outdated_out = !is_source[u.index()] && !is_sink[v.index()] && earliest_in.is_none_or(|m| e.timestamp < m);
            let outdated_in = !is_source[u.index()] && !is_sink[v.index()] && latest_out.is_none_or(|m| e.timestamp > m);
            let inlet = !is_source[u.index()] && earliest_in.is_none();
            let outlet = !is_sink[v.index()] && latest_out.is_none();
            if outdated_out || outdated_in || inlet || outlet {
                alive[i] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(tfn.retain_edges(|i, _| alive[i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn increasing_path_unchanged() {
        let tfn = TemporalFlowNetwork::from_edges(3, &[(0, 1, 4, 1), (1, 2, 4, 2)]).unwrap();
        let r = reduce(&tfn, &[VertexId(0)], &[VertexId(2)]).unwrap();
        assert_eq!(r.num_edges(), 2);
    }

    #[test]
    fn decreasing_path_removed() {
        let tfn = TemporalFlowNetwork::from_edges(4, &[(0, 1, 4, 3), (1, 2, 4, 2), (2, 3, 4, 1)]).unwrap();
        let r = reduce(&tfn, &[VertexId(0)], &[VertexId(3)]).unwrap();
        assert_eq!(r.num_edges(), 0);
        assert_eq!(r.num_vertices(), 4);
    }

    #[test]
    fn terminal_edges_are_never_outdated() {
        let tfn = TemporalFlowNetwork::from_edges(3, &[(0, 1, 4, 2), (1, 2, 4, 1)]).unwrap();
        let r = reduce(&tfn, &[VertexId(0)], &[VertexId(2)]).unwrap();
        assert_eq!(r.num_edges(), 2);
    }

    #[test]
    fn equal_timestamps_kept() {
        let tfn = TemporalFlowNetwork::from_edges(3, &[(0, 1, 4, 2), (1, 2, 4, 2)]).unwrap();
        let r = reduce(&tfn, &[VertexId(0)], &[VertexId(2)]).unwrap();
        assert_eq!(r.num_edges(), 2);
    }

    #[test]
    fn dangling_branches_removed() {
        // 0 -> 1 -> 2 plus a dead end 1 -> 3 and an inlet 4 -> 1.
        let tfn = TemporalFlowNetwork::from_edges(5, &[(0, 1, 1, 1), (1, 2, 1, 2), (1, 3, 1, 3), (4, 1, 1, 1)]).unwrap();
        let r = reduce(&tfn, &[VertexId(0)], &[VertexId(2)]).unwrap();
        assert_eq!(r.num_edges(), 2);
    }
}
