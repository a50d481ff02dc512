//! Independent reference implementations for tests: temporal feasibility,
//! the flow correspondences between a temporal network and its expansion, a
//! second max-flow algorithm and brute-force STDF.
//!
//! Nothing here runs reduction or compression.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::capacity::Capacity;
use crate::density::Density;
use crate::error::{Error, Result};
use crate::network::{Flow, StaticFlowNetwork, TemporalFlowNetwork, VertexId};
use crate::preprocess::{transform, Rtfn};
use crate::query::{Query, StdfAnswer};

/// Largest `|S| + |T|` accepted by [`stdf_bruteforce`].
pub const BRUTEFORCE_CAP: usize = 12;

/// Flow per temporal edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemporalFlowAssignment {
    pub edge_flow: Vec<u64>,
}

impl TemporalFlowAssignment {
    pub fn zero(tfn: &TemporalFlowNetwork) -> Self {
        TemporalFlowAssignment { edge_flow: vec![0; tfn.num_edges()] }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// The assignment does not cover exactly the network's edges.
    Shape,
    Capacity,
    /// Cumulative outflow exceeds cumulative inflow at some time.
    Temporal,
    /// Inflow and outflow differ at the end of time.
    Conservation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertex: Option<VertexId>,
    pub edge: Option<usize>,
    pub timestamp: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub feasible: bool,
    /// Net inflow of the sinks.
    pub value: i128,
    pub violation: Option<Violation>,
}

/// Checks the three temporal-flow conditions: capacities; at every
/// non-source vertex and every timestamp, cumulative inflow at or before it
/// is at least cumulative outflow; and at non-terminals, total inflow equals
/// total outflow. Sources are unconstrained; sinks may keep what arrives.
pub fn check_temporal_feasibility(
    tfn: &TemporalFlowNetwork,
    a: &TemporalFlowAssignment,
    sources: &[VertexId],
    sinks: &[VertexId],
) -> FeasibilityReport {
    let fail = |kind, vertex, edge, timestamp| FeasibilityReport {
        feasible: false,
        value: 0,
        violation: Some(Violation { kind, vertex, edge, timestamp }),
    };
    if a.edge_flow.len() != tfn.num_edges() {
        return fail(ViolationKind::Shape, None, None, None);
    }
    for (i, e) in tfn.edges().iter().enumerate() {
        if a.edge_flow[i] > e.capacity {
            return fail(ViolationKind::Capacity, None, Some(i), Some(e.timestamp));
        }
    }
    let mut value: i128 = 0;
    for u in tfn.vertices() {
        let mut events: Vec<(u64, i128)> = tfn
            .in_edges(u)
            .iter()
            .map(|&e| (tfn.edge(e).timestamp, a.edge_flow[e] as i128))
            .chain(tfn.out_edges(u).iter().map(|&e| (tfn.edge(e).timestamp, -(a.edge_flow[e] as i128))))
            .collect();
        events.sort_by_key(|&(t, _)| t);
        let is_source = sources.contains(&u);
        let is_sink = sinks.contains(&u);
        let mut balance: i128 = 0;
        let mut i = 0;
        while i < events.len() {
            let t = events[i].0;
            while i < events.len() && events[i].0 == t {
                balance += events[i].1;
                i += 1;
            }
            if !is_source && balance < 0 {
                return fail(ViolationKind::Temporal, Some(u), None, Some(t));
            }
        }
        if !is_source && !is_sink && balance != 0 {
            return fail(ViolationKind::Conservation, Some(u), None, tfn.max_timestamp());
        }
        if is_sink {
            value += balance;
        }
    }
    FeasibilityReport { feasible: true, value, violation: None }
}

/// Reads a static flow on an uncompressed expansion back onto the temporal
/// edges: each temporal edge takes the flow of its horizontal edge.
pub fn project_flow(rtfn: &Rtfn, flow: &Flow) -> Result<TemporalFlowAssignment> {
    if rtfn.is_compressed() {
        return Err(Error::Argument("projection needs an uncompressed expansion".into()));
    }
    let edge_flow = (0..rtfn.num_temporal_edges()).map(|e| flow.edge_flow[rtfn.tr(e)]).collect();
    Ok(TemporalFlowAssignment { edge_flow })
}

/// A static flow on the expansion of `tfn` with super terminals attached.
#[derive(Clone, Debug)]
pub struct LiftedFlow {
    pub rtfn: Rtfn,
    pub network: StaticFlowNetwork,
    pub source: VertexId,
    pub sink: VertexId,
    pub flow: Flow,
}

/// Builds the static flow matching a temporally feasible assignment.
///
/// Horizontal edges carry their temporal edge's flow. The vertical edge
/// leaving copy `u^τ` carries the flow held at `u` after time `τ`: the
/// cumulative inflow minus outflow up to `τ` for non-sources, and the
/// outflow still to be sent after `τ` for sources.
pub fn lift_flow(
    tfn: &TemporalFlowNetwork,
    a: &TemporalFlowAssignment,
    sources: &[VertexId],
    sinks: &[VertexId],
) -> Result<LiftedFlow> {
    let report = check_temporal_feasibility(tfn, a, sources, sinks);
    if let Some(v) = report.violation {
        return Err(Error::Infeasibility(format!("{v:?}")));
    }
    let rtfn = transform(tfn);
    let (network, source, sink) = rtfn
        .terminal_network(sources, sinks)?
        .ok_or_else(|| Error::Argument("a terminal side has no edges".into()))?;

    // Net inflow per copy, from horizontal edges only.
    let mut net_in = vec![0i128; rtfn.num_vertices()];
    for e in 0..rtfn.num_temporal_edges() {
        let se = network.edge(rtfn.tr(e));
        net_in[se.dst.index()] += a.edge_flow[e] as i128;
        net_in[se.src.index()] -= a.edge_flow[e] as i128;
    }
    // Flow leaving each copy through its vertical edge, and entering the
    // first copy from the super source.
    let mut held = vec![0i128; rtfn.num_vertices()];
    let mut feed = vec![0i128; tfn.num_vertices()];
    for u in tfn.vertices() {
        let copies = rtfn.copies(u);
        if sources.contains(&u) {
            let mut remaining: i128 = -copies.iter().map(|c| net_in[c.index()]).sum::<i128>();
            feed[u.index()] = remaining;
            for c in copies {
                remaining += net_in[c.index()];
                held[c.index()] = remaining;
            }
        } else {
            let mut balance = 0i128;
            for c in copies {
                balance += net_in[c.index()];
                held[c.index()] = balance;
            }
        }
    }

    let to_u64 = |x: i128, what: &str| -> Result<u64> {
        u64::try_from(x).map_err(|_| Error::Infeasibility(format!("negative {what} flow {x}")))
    };
    let m = rtfn.num_edges();
    let mut edge_flow = Vec::with_capacity(network.num_edges());
    for (i, e) in network.edges().iter().enumerate() {
        let f = if i < m {
            match rtfn.tr_inv(i) {
                Some(te) => a.edge_flow[te],
                None => to_u64(held[e.src.index()], "vertical")?,
            }
        } else if e.src == source {
            to_u64(feed[rtfn.vertex(e.dst).original.index()], "source")?
        } else {
            to_u64(held[e.src.index()], "sink")?
        };
        edge_flow.push(f);
    }
    let value = edge_flow[m..].iter().zip(&network.edges()[m..]).filter(|(_, e)| e.src == source).map(|(f, _)| *f).sum();
    let flow = Flow { edge_flow, value };
    flow.validate(&network, &[source], &[sink]).map_err(Error::Infeasibility)?;
    Ok(LiftedFlow { rtfn, network, source, sink, flow })
}

/// Maximum flow from a vertex set to a vertex set by shortest augmenting
/// paths (Edmonds-Karp) on an adjacency-matrix residual graph with its own
/// super terminals.
pub fn edmonds_karp(net: &StaticFlowNetwork, sources: &[VertexId], sinks: &[VertexId]) -> Result<u64> {
    const INF: i128 = i128::MAX / 4;
    let n = net.num_vertices();
    let (ss, tt) = (n, n + 1);
    let mut cap = vec![vec![0i128; n + 2]; n + 2];
    let as_i = |c: Capacity| match c {
        Capacity::Finite(c) => c as i128,
        Capacity::Infinite => INF,
    };
    for e in net.edges() {
        let slot = &mut cap[e.src.index()][e.dst.index()];
        *slot = (*slot + as_i(e.capacity)).min(INF);
    }
    for s in sources {
        cap[ss][s.index()] = INF;
    }
    for t in sinks {
        cap[t.index()][tt] = INF;
    }
    let mut total: i128 = 0;
    loop {
        let mut parent = vec![usize::MAX; n + 2];
        parent[ss] = ss;
        let mut queue = VecDeque::from([ss]);
        while let Some(v) = queue.pop_front() {
            for w in 0..n + 2 {
                if parent[w] == usize::MAX && cap[v][w] > 0 {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if parent[tt] == usize::MAX {
            break;
        }
        let mut bottleneck = INF;
        let mut w = tt;
        while w != ss {
            bottleneck = bottleneck.min(cap[parent[w]][w]);
            w = parent[w];
        }
        if bottleneck >= INF / 2 {
            return Err(Error::UnboundedFlow);
        }
        let mut w = tt;
        while w != ss {
            let v = parent[w];
            cap[v][w] -= bottleneck;
            cap[w][v] += bottleneck;
            w = v;
        }
        total += bottleneck;
    }
    u64::try_from(total).map_err(|_| Error::FlowOverflow)
}

/// Exact STDF by enumerating every subset pair on the raw expansion, with
/// [`edmonds_karp`] for each flow. Refuses more than [`BRUTEFORCE_CAP`]
/// terminals.
///
/// Ties go to the smaller size, then to the lexicographically smaller
/// `(sources, sinks)` pair.
pub fn stdf_bruteforce(tfn: &TemporalFlowNetwork, q: &Query) -> Result<StdfAnswer> {
    let n = q.num_terminals();
    if n > BRUTEFORCE_CAP {
        return Err(Error::OracleCap { terminals: n, cap: BRUTEFORCE_CAP });
    }
    q.check_against(tfn)?;
    let rtfn = transform(tfn);
    let ns = q.sources.len();
    type Best = (Density, usize, Vec<VertexId>, Vec<VertexId>, u64);
    let mut best: Option<Best> = None;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < q.k {
            continue;
        }
        let s: Vec<VertexId> = (0..ns).filter(|i| mask >> i & 1 == 1).map(|i| q.sources[i]).collect();
        let t: Vec<VertexId> = (ns..n).filter(|i| mask >> i & 1 == 1).map(|i| q.sinks[i - ns]).collect();
        let (sc, tc) = rtfn.terminal_copies(&s, &t);
        let value = if sc.is_empty() || tc.is_empty() { 0 } else { edmonds_karp(rtfn.network(), &sc, &tc)? };
        let d = Density::new(value, size as u64);
        let better = match &best {
            None => true,
            Some((bd, bsize, bs, bt, _)) => {
                d > *bd || (d == *bd && (size, &s, &t) < (*bsize, bs, bt))
            }
        };
        if better {
            best = Some((d, size, s, t, value));
        }
    }
    let (_, _, s, t, value) = best.expect("k <= n admits the full pair");
    Ok(StdfAnswer::new(s, t, value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_assignment_is_feasible() {
        let tfn = TemporalFlowNetwork::from_edges(3, &[(0, 1, 2, 1), (1, 2, 2, 2)]).unwrap();
        let r = check_temporal_feasibility(&tfn, &TemporalFlowAssignment::zero(&tfn), &[VertexId(0)], &[VertexId(2)]);
        assert!(r.feasible);
        assert_eq!(r.value, 0);
    }

    #[test]
    fn out_of_order_flow_rejected() {
        let tfn = TemporalFlowNetwork::from_edges(3, &[(0, 1, 2, 2), (1, 2, 2, 1)]).unwrap();
        let a = TemporalFlowAssignment { edge_flow: vec![2, 2] };
        let r = check_temporal_feasibility(&tfn, &a, &[VertexId(0)], &[VertexId(2)]);
        let v = r.violation.unwrap();
        assert_eq!(v.kind, ViolationKind::Temporal);
        assert_eq!((v.vertex, v.timestamp), (Some(VertexId(1)), Some(1)));
        assert!(lift_flow(&tfn, &a, &[VertexId(0)], &[VertexId(2)]).is_err());
    }

    #[test]
    fn capacity_and_conservation() {
        let tfn = TemporalFlowNetwork::from_edges(3, &[(0, 1, 2, 1), (1, 2, 2, 2)]).unwrap();
        let over = TemporalFlowAssignment { edge_flow: vec![3, 2] };
        assert_eq!(
            check_temporal_feasibility(&tfn, &over, &[VertexId(0)], &[VertexId(2)]).violation.unwrap().kind,
            ViolationKind::Capacity
        );
        let leak = TemporalFlowAssignment { edge_flow: vec![2, 1] };
        assert_eq!(
            check_temporal_feasibility(&tfn, &leak, &[VertexId(0)], &[VertexId(2)]).violation.unwrap().kind,
            ViolationKind::Conservation
        );
    }

    #[test]
    fn lift_of_zero_is_zero() {
        let tfn = TemporalFlowNetwork::from_edges(3, &[(0, 1, 2, 1), (1, 2, 2, 2)]).unwrap();
        let l = lift_flow(&tfn, &TemporalFlowAssignment::zero(&tfn), &[VertexId(0)], &[VertexId(2)]).unwrap();
        assert_eq!(l.flow.value, 0);
        assert!(l.flow.edge_flow.iter().all(|&f| f == 0));
    }

    #[test]
    fn edmonds_karp_basic() {
        let net = StaticFlowNetwork::from_edges(4, &[(0, 1, 3), (0, 2, 2), (1, 3, 2), (2, 3, 3), (1, 2, 1)]).unwrap();
        assert_eq!(edmonds_karp(&net, &[VertexId(0)], &[VertexId(3)]).unwrap(), 5);
    }

    #[test]
    fn bruteforce_cap() {
        let tfn = TemporalFlowNetwork::from_edges(14, &[(0, 1, 1, 1)]).unwrap();
        let q = Query::new((0..7).map(VertexId).collect(), (7..14).map(VertexId).collect(), 1).unwrap();
        assert!(matches!(stdf_bruteforce(&tfn, &q), Err(Error::OracleCap { terminals: 14, cap: 12 })));
    }
}
