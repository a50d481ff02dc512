use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::classify::Shape;
use super::rtfn::{Rtfn, RtfnVertex};
use crate::capacity::Capacity;
use crate::error::{Error, Result};
use crate::network::{StaticFlowNetwork, VertexId};

/// The five flow-preserving merge patterns for an edge `u1 -> u2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompressionCase {
    /// Both flow-in.
    A,
    /// Both flow-out.
    B,
    /// `u1` flow-in, `u2` flow-out.
    C,
    /// `u1` flow-in, `u2` flow-crossing.
    D,
    /// `u1` flow-crossing, `u2` flow-out.
    E,
}

fn case_of(s1: Shape, s2: Shape) -> Option<CompressionCase> {
    use CompressionCase::*;
    if s1.flow_in && s2.flow_in {
        Some(A)
    } else if s1.flow_out && s2.flow_out {
        Some(B)
    } else if s1.flow_in && s2.flow_out {
        Some(C)
    } else if s1.flow_in && s2.crossing {
        Some(D)
    } else if s1.crossing && s2.flow_out {
        Some(E)
    } else {
        None
    }
}

/// Which flow-preserving case, if any, licenses merging along `u1 -> u2`.
/// `None` also when the edge is absent.
pub fn compress_case(net: &StaticFlowNetwork, u1: VertexId, u2: VertexId) -> Option<CompressionCase> {
    let g = WorkGraph::from_static(net);
    g.out[u1.index()].contains_key(&u2.index()).then(|| g.case(u1.index(), u2.index())).flatten()
}

/// Merges the endpoints of edge `u1 -> u2` into a super vertex that takes
/// over all their other edges; parallel edges are combined by saturating
/// capacity addition.
///
/// The result keeps the other vertices in their original relative order and
/// appends the super vertex last.
pub fn vcp(net: &StaticFlowNetwork, u1: VertexId, u2: VertexId) -> Result<(StaticFlowNetwork, VertexId)> {
    if u1 == u2 {
        return Err(Error::Argument("cannot merge a vertex with itself".into()));
    }
    let n = net.num_vertices();
    if u1.index() >= n || u2.index() >= n {
        return Err(Error::Argument(format!("vertex out of range for {n} vertices")));
    }
    let mut g = WorkGraph::from_static(net);
    if !g.out[u1.index()].contains_key(&u2.index()) {
        return Err(Error::Argument(format!("no edge ({u1}, {u2})")));
    }
    let w = g.merge(u1.index(), u2.index());
    let (out, remap) = g.export();
    Ok((out.net, VertexId(remap[w])))
}

/// Repeatedly merges adjacent vertices matching one of the five
/// flow-preserving cases until no merge applies. Vertices in `protected`
/// (ids of `rtfn`) are never merged.
///
/// Vertices are scanned in ascending id order, with super vertices getting
/// fresh ids as they are created; each vertex tries its out-neighbours in
/// ascending order. Full passes repeat until one makes no merge.
pub fn compress(rtfn: &Rtfn, protected: &[VertexId]) -> Rtfn {
    let mut g = WorkGraph::from_static(&rtfn.net);
    g.origin = BTreeMap::new();
    for (i, e) in rtfn.net.edges().iter().enumerate() {
        g.origin.insert((e.src.index(), e.dst.index()), rtfn.origin[i]);
    }
    g.members = rtfn.vertices.clone();
    let mut locked = vec![false; g.alive.len()];
    protected.iter().for_each(|v| locked[v.index()] = true);

    loop {
        let mut merged = false;
        let mut u1 = 0;
        while u1 < g.alive.len() {
            if g.alive[u1] && !locked[u1] {
                let partner = g.out[u1]
                    .keys()
                    .copied()
                    .find(|&u2| !locked[u2] && g.case(u1, u2).is_some());
                if let Some(u2) = partner {
                    g.merge(u1, u2);
                    locked.push(false);
                    merged = true;
                }
            }
            u1 += 1;
        }
        if !merged {
            break;
        }
    }

    let (out, _) = g.export();
    let mut copies = vec![Vec::new(); rtfn.copies.len()];
    for (i, m) in out.members.iter().enumerate() {
        copies[m.original.index()].push(VertexId(i));
    }
    for list in &mut copies {
        list.sort_by_key(|c| out.members[c.index()].first);
    }
    let mut horizontal = vec![usize::MAX; rtfn.horizontal.len()];
    for (i, o) in out.origin.iter().enumerate() {
        if let Some(te) = o {
            horizontal[*te] = i;
        }
    }
    debug_assert!(horizontal.iter().all(|&h| h != usize::MAX));
    Rtfn { net: out.net, vertices: out.members, copies, horizontal, origin: out.origin, compressed: true }
}

/// Mutable adjacency-map form used while merging.
struct WorkGraph {
    alive: Vec<bool>,
    out: Vec<BTreeMap<usize, Capacity>>,
    inn: Vec<BTreeMap<usize, Capacity>>,
    origin: BTreeMap<(usize, usize), Option<usize>>,
    members: Vec<RtfnVertex>,
}

struct Exported {
    net: StaticFlowNetwork,
    origin: Vec<Option<usize>>,
    members: Vec<RtfnVertex>,
}

impl WorkGraph {
    fn from_static(net: &StaticFlowNetwork) -> Self {
        let n = net.num_vertices();
        let mut g = WorkGraph {
            alive: vec![true; n],
            out: vec![BTreeMap::new(); n],
            inn: vec![BTreeMap::new(); n],
            origin: BTreeMap::new(),
            members: Vec::new(),
        };
        for e in net.edges() {
            g.add(e.src.index(), e.dst.index(), e.capacity);
        }
        g
    }

    fn add(&mut self, u: usize, v: usize, c: Capacity) {
        let slot = self.out[u].entry(v).or_insert(Capacity::ZERO);
        *slot = slot.saturating_add(c);
        self.inn[v].insert(u, *slot);
    }

    fn shape(&self, v: usize) -> Shape {
        Shape::of(self.inn[v].values().copied(), self.out[v].values().copied())
    }

    fn case(&self, u1: usize, u2: usize) -> Option<CompressionCase> {
        case_of(self.shape(u1), self.shape(u2))
    }

    fn merge(&mut self, u1: usize, u2: usize) -> usize {
        let w = self.alive.len();
        self.alive.push(true);
        self.out.push(BTreeMap::new());
        self.inn.push(BTreeMap::new());
        if !self.members.is_empty() {
            let (a, b) = (self.members[u1], self.members[u2]);
            debug_assert_eq!(a.original, b.original, "merges follow infinite vertical edges");
            self.members.push(RtfnVertex { original: a.original, first: a.first.min(b.first), last: a.last.max(b.last) });
        }
        for u in [u1, u2] {
            let outs = std::mem::take(&mut self.out[u]);
            for (v, c) in outs {
                self.inn[v].remove(&u);
                let o = self.origin.remove(&(u, v)).flatten();
                if v != u1 && v != u2 {
                    self.add(w, v, c);
                    self.join_origin((w, v), o);
                }
            }
            let ins = std::mem::take(&mut self.inn[u]);
            for (x, c) in ins {
                self.out[x].remove(&u);
                let o = self.origin.remove(&(x, u)).flatten();
                if x != u1 && x != u2 {
                    self.add(x, w, c);
                    self.join_origin((x, w), o);
                }
            }
            self.alive[u] = false;
        }
        w
    }

    fn join_origin(&mut self, key: (usize, usize), o: Option<usize>) {
        let slot = self.origin.entry(key).or_insert(None);
        debug_assert!(slot.is_none() || o.is_none(), "two horizontal edges merged");
        *slot = slot.or(o);
    }

    /// Compacts alive vertices (ascending id) into a fresh network. Returns
    /// the old-to-new id map (`usize::MAX` for removed vertices).
    fn export(&self) -> (Exported, Vec<usize>) {
        let mut remap = vec![usize::MAX; self.alive.len()];
        let mut members = Vec::new();
        let mut k = 0;
        for (v, &a) in self.alive.iter().enumerate() {
            if a {
                remap[v] = k;
                k += 1;
                if !self.members.is_empty() {
                    members.push(self.members[v]);
                }
            }
        }
        let mut net = StaticFlowNetwork::new(k);
        let mut origin = Vec::new();
        for (u, outs) in self.out.iter().enumerate() {
            if !self.alive[u] {
                continue;
            }
            for (&v, &c) in outs {
                net.add_edge(VertexId(remap[u]), VertexId(remap[v]), c).expect("merged graph has no self-loops");
                origin.push(self.origin.get(&(u, v)).copied().flatten());
            }
        }
        (Exported { net, origin, members }, remap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::TemporalFlowNetwork;
    use crate::preprocess::transform;

    #[test]
    fn chain_collapses_to_isolated_vertex() {
        let mut net = StaticFlowNetwork::new(2);
        net.add_edge(VertexId(0), VertexId(1), Capacity::Finite(3)).unwrap();
        let (out, w) = vcp(&net, VertexId(0), VertexId(1)).unwrap();
        assert_eq!(out.num_vertices(), 1);
        assert_eq!(out.num_edges(), 0);
        assert_eq!(w, VertexId(0));
    }

    #[test]
    fn vcp_rejects_bad_input() {
        let net = StaticFlowNetwork::from_edges(3, &[(0, 1, 1)]).unwrap();
        assert!(vcp(&net, VertexId(0), VertexId(0)).is_err());
        assert!(vcp(&net, VertexId(1), VertexId(2)).is_err());
    }

    #[test]
    fn parallel_edges_are_summed() {
        // 0 -> 2 and 1 -> 2 collapse into one edge when 0 and 1 merge.
        let mut net = StaticFlowNetwork::from_edges(3, &[(0, 2, 2), (1, 2, 5)]).unwrap();
        net.add_edge(VertexId(0), VertexId(1), Capacity::Infinite).unwrap();
        let (out, w) = vcp(&net, VertexId(0), VertexId(1)).unwrap();
        assert_eq!(out.num_edges(), 1);
        assert_eq!(out.edge(0).src, w);
        assert_eq!(out.edge(0).capacity, Capacity::Finite(7));
    }

    #[test]
    fn compress_is_idempotent() {
        let tfn = TemporalFlowNetwork::from_edges(4, &[(0, 1, 3, 1), (1, 2, 2, 2), (0, 2, 1, 3), (2, 3, 4, 4)]).unwrap();
        let once = compress(&transform(&tfn), &[]);
        let twice = compress(&once, &[]);
        assert_eq!(once.num_vertices(), twice.num_vertices());
        assert_eq!(once.num_edges(), twice.num_edges());
        assert!(twice.is_dag());
    }

    #[test]
    fn protected_vertices_survive() {
        let tfn = TemporalFlowNetwork::from_edges(2, &[(0, 1, 3, 1), (0, 1, 3, 2)]).unwrap();
        let r = transform(&tfn);
        let all: Vec<VertexId> = (0..r.num_vertices()).map(VertexId).collect();
        let c = compress(&r, &all);
        assert_eq!(c.num_vertices(), r.num_vertices());
        assert_eq!(c.num_edges(), r.num_edges());
    }
}
