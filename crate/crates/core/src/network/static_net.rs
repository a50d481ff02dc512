use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::VertexId;
use crate::capacity::Capacity;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaticEdge {
    pub src: VertexId,
    pub dst: VertexId,
    pub capacity: Capacity,
}

/// A directed flow network without timestamps. Parallel edges are allowed
/// here (super-terminal construction may create them); self-loops are not.
#[derive(Clone, Debug, Default)]
pub struct StaticFlowNetwork {
    edges: Vec<StaticEdge>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl StaticFlowNetwork {
    pub fn new(num_vertices: usize) -> Self {
        StaticFlowNetwork {
            edges: Vec::new(),
            out_adj: vec![Vec::new(); num_vertices],
            in_adj: vec![Vec::new(); num_vertices],
        }
    }

    /// Convenience constructor over finite capacities.
    pub fn from_edges(num_vertices: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let mut net = Self::new(num_vertices);
        for &(u, v, c) in edges {
            net.add_edge(VertexId(u), VertexId(v), Capacity::Finite(c))?;
        }
        Ok(net)
    }

    pub fn num_vertices(&self) -> usize {
        self.out_adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[StaticEdge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &StaticEdge {
        &self.edges[id]
    }

    pub fn out_edges(&self, v: VertexId) -> &[usize] {
        &self.out_adj[v.index()]
    }

    pub fn in_edges(&self, v: VertexId) -> &[usize] {
        &self.in_adj[v.index()]
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.out_adj.push(Vec::new());
        self.in_adj.push(Vec::new());
        VertexId(self.out_adj.len() - 1)
    }

    pub fn add_edge(&mut self, src: VertexId, dst: VertexId, capacity: Capacity) -> Result<usize> {
        let n = self.num_vertices();
        if src.index() >= n || dst.index() >= n {
            return Err(Error::Argument(format!("edge ({src}, {dst}) out of range for {n} vertices")));
        }
        if src == dst {
            return Err(Error::Argument(format!("self-loop on vertex {src}")));
        }
        let id = self.edges.len();
        self.edges.push(StaticEdge { src, dst, capacity });
        self.out_adj[src.index()].push(id);
        self.in_adj[dst.index()].push(id);
        Ok(id)
    }

    /// Returns a copy extended with a super source `s'` (infinite edges
    /// `s' -> s` for each source) and a super sink `t'` (infinite edges
    /// `t -> t'` for each sink).
    pub fn add_super_terminals(
        &self,
        sources: &[VertexId],
        sinks: &[VertexId],
    ) -> Result<(StaticFlowNetwork, VertexId, VertexId)> {
        validate_terminals(self.num_vertices(), sources, sinks)?;
        let mut net = self.clone();
        let s = net.add_vertex();
        let t = net.add_vertex();
        for &v in sources {
            net.add_edge(s, v, Capacity::Infinite)?;
        }
        for &v in sinks {
            net.add_edge(v, t, Capacity::Infinite)?;
        }
        Ok((net, s, t))
    }

    /// Kahn's algorithm; `None` if the network has a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let n = self.num_vertices();
        let mut indeg: Vec<usize> = self.in_adj.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(VertexId(v));
            for &e in &self.out_adj[v] {
                let w = self.edges[e].dst.index();
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }
}

pub(crate) fn validate_terminals(n: usize, sources: &[VertexId], sinks: &[VertexId]) -> Result<()> {
    if sources.is_empty() {
        return Err(Error::Query("source set is empty".into()));
    }
    if sinks.is_empty() {
        return Err(Error::Query("sink set is empty".into()));
    }
    if let Some(v) = sources.iter().chain(sinks).find(|v| v.index() >= n) {
        return Err(Error::Query(format!("terminal {v} out of range for {n} vertices")));
    }
    if let Some(v) = sources.iter().find(|v| sinks.contains(v)) {
        return Err(Error::Query(format!("vertex {v} is both a source and a sink")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn super_terminals_minimal() {
        let net = StaticFlowNetwork::from_edges(2, &[(0, 1, 4)]).unwrap();
        let (ext, s, t) = net.add_super_terminals(&[VertexId(0)], &[VertexId(1)]).unwrap();
        assert_eq!(ext.num_vertices(), 4);
        assert_eq!(ext.num_edges(), 3);
        assert_eq!((s, t), (VertexId(2), VertexId(3)));
        assert!(ext.edges()[1..].iter().all(|e| e.capacity.is_infinite()));
    }

    #[test]
    fn super_terminals_reject_bad_sets() {
        let net = StaticFlowNetwork::from_edges(2, &[(0, 1, 4)]).unwrap();
        assert!(matches!(net.add_super_terminals(&[VertexId(0)], &[VertexId(0)]), Err(Error::Query(_))));
        assert!(matches!(net.add_super_terminals(&[], &[VertexId(1)]), Err(Error::Query(_))));
        assert!(matches!(net.add_super_terminals(&[VertexId(0)], &[]), Err(Error::Query(_))));
    }

    #[test]
    fn self_loop_rejected() {
        let mut net = StaticFlowNetwork::new(1);
        assert!(net.add_edge(VertexId(0), VertexId(0), Capacity::Infinite).is_err());
    }

    #[test]
    fn cycle_detection() {
        let dag = StaticFlowNetwork::from_edges(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert!(dag.is_acyclic());
        let cyc = StaticFlowNetwork::from_edges(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert!(!cyc.is_acyclic());
    }
}
