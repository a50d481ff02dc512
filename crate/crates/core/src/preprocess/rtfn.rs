use serde::{Deserialize, Serialize};

use crate::capacity::Capacity;
use crate::error::Result;
use crate::network::{StaticFlowNetwork, TemporalFlowNetwork, VertexId};

/// A vertex of the time-expanded network: copies of `original` covering the
/// timestamps `first..=last`. Before compression `first == last`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RtfnVertex {
    pub original: VertexId,
    pub first: u64,
    pub last: u64,
}

/// Time-expanded static network of a temporal flow network.
///
/// Each vertex `u` of the temporal network becomes one copy `u^τ` per
/// distinct timestamp of its incident edges. A temporal edge `(u, v, c, τ)`
/// becomes the horizontal edge `u^τ -> v^τ` with capacity `c`; consecutive
/// copies of a vertex are chained by infinite vertical edges.
#[derive(Clone, Debug)]
pub struct Rtfn {
    pub(super) net: StaticFlowNetwork,
    pub(super) vertices: Vec<RtfnVertex>,
    pub(super) copies: Vec<Vec<VertexId>>,
    pub(super) horizontal: Vec<usize>,
    pub(super) origin: Vec<Option<usize>>,
    pub(super) compressed: bool,
}

/// Builds the time-expanded network. Edges at the same `(vertex, τ)` share
/// one copy. Horizontal edges come first and keep the temporal edge ids, so
/// before compression `tr(e) == e`.
pub fn transform(tfn: &TemporalFlowNetwork) -> Rtfn {
    let mut vertices = Vec::new();
    let mut copies = Vec::with_capacity(tfn.num_vertices());
    for v in tfn.vertices() {
        let mut ts: Vec<u64> = tfn
            .out_edges(v)
            .iter()
            .chain(tfn.in_edges(v))
            .map(|&e| tfn.edge(e).timestamp)
            .collect();
        ts.sort_unstable();
        ts.dedup();
        let ids = ts
            .into_iter()
            .map(|t| {
                vertices.push(RtfnVertex { original: v, first: t, last: t });
                VertexId(vertices.len() - 1)
            })
            .collect();
        copies.push(ids);
    }

    let mut net = StaticFlowNetwork::new(vertices.len());
    let copy_at = |v: VertexId, t: u64| -> VertexId {
        let list: &Vec<VertexId> = &copies[v.index()];
        let i = list.partition_point(|c| vertices[c.index()].first < t);
        list[i]
    };
    let mut horizontal = Vec::with_capacity(tfn.num_edges());
    let mut origin = Vec::new();
    for (i, e) in tfn.edges().iter().enumerate() {
        let id = net
            .add_edge(copy_at(e.src, e.timestamp), copy_at(e.dst, e.timestamp), Capacity::Finite(e.capacity))
            .expect("copies of distinct vertices");
        horizontal.push(id);
        origin.push(Some(i));
    }
    for list in &copies {
        for w in list.windows(2) {
            net.add_edge(w[0], w[1], Capacity::Infinite).expect("distinct copies");
            origin.push(None);
        }
    }
    Rtfn { net, vertices, copies, horizontal, origin, compressed: false }
}

impl Rtfn {
    pub fn network(&self) -> &StaticFlowNetwork {
        &self.net
    }

    pub fn num_vertices(&self) -> usize {
        self.net.num_vertices()
    }

    pub fn num_edges(&self) -> usize {
        self.net.num_edges()
    }

    pub fn vertex(&self, v: VertexId) -> RtfnVertex {
        self.vertices[v.index()]
    }

    pub fn vertices(&self) -> &[RtfnVertex] {
        &self.vertices
    }

    /// Number of vertices of the temporal network this was built from.
    pub fn num_original_vertices(&self) -> usize {
        self.copies.len()
    }

    /// Copies of `original`, ordered by time.
    pub fn copies(&self, original: VertexId) -> &[VertexId] {
        self.copies.get(original.index()).map_or(&[], Vec::as_slice)
    }

    pub fn earliest_copy(&self, original: VertexId) -> Option<VertexId> {
        self.copies(original).first().copied()
    }

    pub fn latest_copy(&self, original: VertexId) -> Option<VertexId> {
        self.copies(original).last().copied()
    }

    /// The copy of `original` that holds timestamp `t`, if any.
    pub fn copy_at(&self, original: VertexId, t: u64) -> Option<VertexId> {
        let list = self.copies(original);
        let i = list.partition_point(|c| self.vertices[c.index()].last < t);
        list.get(i).copied().filter(|c| self.vertices[c.index()].first <= t)
    }

    /// Number of temporal edges, i.e. of horizontal edges.
    pub fn num_temporal_edges(&self) -> usize {
        self.horizontal.len()
    }

    /// TR: the static edge carrying temporal edge `e`.
    pub fn tr(&self, temporal_edge: usize) -> usize {
        self.horizontal[temporal_edge]
    }

    /// TR⁻¹: the temporal edge behind static edge `e`, `None` for vertical
    /// edges.
    pub fn tr_inv(&self, static_edge: usize) -> Option<usize> {
        self.origin[static_edge]
    }

    pub fn is_vertical(&self, static_edge: usize) -> bool {
        self.origin[static_edge].is_none()
    }

    pub fn is_compressed(&self) -> bool {
        self.compressed
    }

    pub fn is_dag(&self) -> bool {
        self.net.is_acyclic()
    }

    /// Earliest copies of `sources` and latest copies of `sinks`; terminals
    /// without any copy are skipped.
    pub fn terminal_copies(&self, sources: &[VertexId], sinks: &[VertexId]) -> (Vec<VertexId>, Vec<VertexId>) {
        (
            sources.iter().filter_map(|&s| self.earliest_copy(s)).collect(),
            sinks.iter().filter_map(|&t| self.latest_copy(t)).collect(),
        )
    }

    /// The network extended with a super source feeding the earliest copy of
    /// every source and a super sink drained by the latest copy of every
    /// sink. `None` if one side has no copies at all.
    pub fn terminal_network(
        &self,
        sources: &[VertexId],
        sinks: &[VertexId],
    ) -> Result<Option<(StaticFlowNetwork, VertexId, VertexId)>> {
        let (s, t) = self.terminal_copies(sources, sinks);
        if s.is_empty() || t.is_empty() {
            return Ok(None);
        }
        self.net.add_super_terminals(&s, &t).map(Some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let tfn = TemporalFlowNetwork::from_edges(2, &[(0, 1, 5, 3)]).unwrap();
        let r = transform(&tfn);
        assert_eq!(r.num_vertices(), 2);
        assert_eq!(r.num_edges(), 1);
        assert_eq!(r.tr(0), 0);
        assert_eq!(r.tr_inv(0), Some(0));
        assert_eq!(r.network().edge(0).capacity, Capacity::Finite(5));
    }

    #[test]
    fn shared_timestamps_share_a_copy() {
        let tfn = TemporalFlowNetwork::from_edges(3, &[(0, 1, 1, 2), (1, 2, 1, 2)]).unwrap();
        let r = transform(&tfn);
        assert_eq!(r.copies(VertexId(1)).len(), 1);
        assert_eq!(r.num_vertices(), 3);
        assert_eq!(r.num_edges(), 2);
    }

    #[test]
    fn verticals_chain_copies() {
        let tfn = TemporalFlowNetwork::from_edges(3, &[(0, 1, 1, 1), (1, 2, 1, 4), (0, 2, 1, 2)]).unwrap();
        let r = transform(&tfn);
        assert_eq!(r.copies(VertexId(0)).len(), 2);
        assert_eq!(r.num_edges(), 3 + 3);
        assert!((3..6).all(|e| r.is_vertical(e)));
        assert!(r.is_dag());
        assert_eq!(r.copy_at(VertexId(1), 4), r.latest_copy(VertexId(1)));
        assert_eq!(r.copy_at(VertexId(1), 3), None);
    }
}
