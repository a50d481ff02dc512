use crate::error::{Error, Result};
use crate::network::{Flow, TemporalFlowNetwork, VertexId};
use crate::preprocess::{compress, reduce, transform, Rtfn};

use super::max_flow;

/// Result of [`max_temporal_flow`]: the value plus the static flow on the
/// reduced and compressed time-expanded network it was computed on.
#[derive(Clone, Debug)]
pub struct TemporalMaxFlow {
    pub value: u64,
    pub rtfn: Rtfn,
    pub flow: Flow,
    /// Copies of the source and sink in `rtfn`, if both still have edges.
    pub terminals: Option<(VertexId, VertexId)>,
}

/// Maximum temporal flow from `s` to `t`: reduce, expand, compress, then a
/// static maximum flow from the earliest copy of `s` to the latest copy of
/// `t`.
pub fn max_temporal_flow(tfn: &TemporalFlowNetwork, s: VertexId, t: VertexId) -> Result<TemporalMaxFlow> {
    if s == t {
        return Err(Error::Argument("source and sink coincide".into()));
    }
    let reduced = reduce(tfn, &[s], &[t])?;
    let raw = transform(&reduced);
    let protected: Vec<VertexId> = raw.earliest_copy(s).into_iter().chain(raw.latest_copy(t)).collect();
    let rtfn = compress(&raw, &protected);
    match (rtfn.earliest_copy(s), rtfn.latest_copy(t)) {
        (Some(sc), Some(tc)) => {
            let flow = max_flow(rtfn.network(), sc, tc)?;
            Ok(TemporalMaxFlow { value: flow.value, flow, rtfn, terminals: Some((sc, tc)) })
        }
        _ => {
            let flow = Flow::zero(rtfn.num_edges());
            Ok(TemporalMaxFlow { value: 0, flow, rtfn, terminals: None })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let tfn = TemporalFlowNetwork::from_edges(2, &[(0, 1, 9, 4)]).unwrap();
        assert_eq!(max_temporal_flow(&tfn, VertexId(0), VertexId(1)).unwrap().value, 9);
    }

    #[test]
    fn unreachable_sink_is_zero() {
        let tfn = TemporalFlowNetwork::from_edges(4, &[(0, 1, 9, 4), (1, 2, 9, 3), (2, 3, 9, 5)]).unwrap();
        let r = max_temporal_flow(&tfn, VertexId(0), VertexId(3)).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.terminals.is_none());
    }
}
