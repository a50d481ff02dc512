use std::collections::VecDeque;

use crate::capacity::Capacity;
use crate::error::{Error, Result};
use crate::network::{Flow, StaticFlowNetwork, VertexId};

const INF: u128 = u128::MAX;

/// Residual capacities of a network under a flow. Edge `i` of the network is
/// arc `2i` (forward, `C - f`) and arc `2i + 1` (backward, `f`); infinite
/// forward capacity is kept as a sentinel.
#[derive(Clone, Debug)]
pub struct ResidualNetwork {
    head: Vec<usize>,
    residual: Vec<u128>,
    adj: Vec<Vec<usize>>,
}

impl ResidualNetwork {
    pub fn new(net: &StaticFlowNetwork) -> Self {
        let mut adj = vec![Vec::new(); net.num_vertices()];
        let mut head = Vec::with_capacity(2 * net.num_edges());
        let mut residual = Vec::with_capacity(2 * net.num_edges());
        for (i, e) in net.edges().iter().enumerate() {
            head.push(e.dst.index());
            residual.push(match e.capacity {
                Capacity::Finite(c) => c as u128,
                Capacity::Infinite => INF,
            });
            head.push(e.src.index());
            residual.push(0);
            adj[e.src.index()].push(2 * i);
            adj[e.dst.index()].push(2 * i + 1);
        }
        ResidualNetwork { head, residual, adj }
    }

    /// Residual capacity of arc `a`; `None` stands for infinite.
    pub fn capacity(&self, arc: usize) -> Option<u128> {
        (self.residual[arc] != INF).then_some(self.residual[arc])
    }

    /// Arcs leaving `v` with positive residual capacity.
    pub fn arcs(&self, v: VertexId) -> impl Iterator<Item = (usize, VertexId)> + '_ {
        self.adj[v.index()]
            .iter()
            .filter(|&&a| self.residual[a] > 0)
            .map(|&a| (a, VertexId(self.head[a])))
    }

    /// Flow currently on network edge `e`.
    pub fn flow(&self, edge: usize) -> u64 {
        u64::try_from(self.residual[2 * edge + 1]).expect("edge flow bounded by the checked flow value")
    }

    fn push(&mut self, arc: usize, amount: u128) {
        if self.residual[arc] != INF {
            self.residual[arc] -= amount;
        }
        let rev = arc ^ 1;
        if self.residual[rev] != INF {
            self.residual[rev] += amount;
        }
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut level = vec![usize::MAX; self.adj.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &a in &self.adj[v] {
                let w = self.head[a];
                if self.residual[a] > 0 && level[w] == usize::MAX {
                    level[w] = level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        (level[t] != usize::MAX).then_some(level)
    }

    /// Saturates a blocking flow in the level graph using an explicit stack.
    /// Arcs are tried in ascending order at every vertex.
    fn blocking_flow(&mut self, s: usize, t: usize, level: &[usize]) -> Result<u64> {
        let mut next = vec![0usize; self.adj.len()];
        let mut dead = vec![false; self.adj.len()];
        let mut path: Vec<usize> = Vec::new();
        let mut total: u64 = 0;
        loop {
            let v = path.last().map_or(s, |&a| self.head[a]);
            if v == t {
                let bottleneck = path.iter().map(|&a| self.residual[a]).min().expect("non-empty path");
                if bottleneck == INF {
                    return Err(Error::UnboundedFlow);
                }
                for &a in &path {
                    self.push(a, bottleneck);
                }
                let amount = u64::try_from(bottleneck).map_err(|_| Error::FlowOverflow)?;
                total = total.checked_add(amount).ok_or(Error::FlowOverflow)?;
                let first_saturated = path.iter().position(|&a| self.residual[a] == 0).expect("bottleneck arc");
                path.truncate(first_saturated);
                continue;
            }
            let mut advanced = false;
            while next[v] < self.adj[v].len() {
                let a = self.adj[v][next[v]];
                let w = self.head[a];
                if self.residual[a] > 0 && !dead[w] && level[w] == level[v] + 1 {
                    path.push(a);
                    advanced = true;
                    break;
                }
                next[v] += 1;
            }
            if !advanced {
                if v == s {
                    return Ok(total);
                }
                dead[v] = true;
                path.pop();
            }
        }
    }
}

/// Maximum `s`-`t` flow by blocking flows on level graphs (Dinic).
///
/// Fails with [`Error::UnboundedFlow`] when an infinite-capacity path joins
/// `s` to `t`, and with [`Error::FlowOverflow`] if the value exceeds 64 bits.
pub fn max_flow(net: &StaticFlowNetwork, s: VertexId, t: VertexId) -> Result<Flow> {
    let n = net.num_vertices();
    if s.index() >= n || t.index() >= n {
        return Err(Error::Argument(format!("terminal out of range for {n} vertices")));
    }
    if s == t {
        return Err(Error::Argument("source and sink coincide".into()));
    }
    if infinite_path(net, s, t) {
        return Err(Error::UnboundedFlow);
    }
    let mut res = ResidualNetwork::new(net);
    let mut value: u64 = 0;
    while let Some(level) = res.levels(s.index(), t.index()) {
        let pushed = res.blocking_flow(s.index(), t.index(), &level)?;
        value = value.checked_add(pushed).ok_or(Error::FlowOverflow)?;
    }
    let edge_flow = (0..net.num_edges()).map(|e| res.flow(e)).collect();
    Ok(Flow { edge_flow, value })
}

/// Maximum flow from a vertex set to a vertex set through a super source and
/// super sink.
pub fn max_flow_multi(net: &StaticFlowNetwork, sources: &[VertexId], sinks: &[VertexId]) -> Result<u64> {
    let (ext, s, t) = net.add_super_terminals(sources, sinks)?;
    Ok(max_flow(&ext, s, t)?.value)
}

fn infinite_path(net: &StaticFlowNetwork, s: VertexId, t: VertexId) -> bool {
    let mut seen = vec![false; net.num_vertices()];
    let mut stack = vec![s];
    seen[s.index()] = true;
    while let Some(v) = stack.pop() {
        if v == t {
            return true;
        }
        for &e in net.out_edges(v) {
            let edge = net.edge(e);
            if edge.capacity.is_infinite() && !seen[edge.dst.index()] {
                seen[edge.dst.index()] = true;
                stack.push(edge.dst);
            }
        }
    }
    false
}
