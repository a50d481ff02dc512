use std::collections::HashMap;

use crate::network::{StaticFlowNetwork, VertexId};

/// Forward reachability with one memoized visited set per source.
pub struct Reachability<'a> {
    net: &'a StaticFlowNetwork,
    memo: HashMap<VertexId, Vec<bool>>,
}

impl<'a> Reachability<'a> {
    pub fn new(net: &'a StaticFlowNetwork) -> Self {
        Reachability { net, memo: HashMap::new() }
    }

    pub fn reach(&mut self, s: VertexId, t: VertexId) -> bool {
        let net = self.net;
        self.memo.entry(s).or_insert_with(|| visit(net, s))[t.index()]
    }
}

/// Whether a directed path leads from `s` to `t`.
pub fn reach(net: &StaticFlowNetwork, s: VertexId, t: VertexId) -> bool {
    visit(net, s)[t.index()]
}

fn visit(net: &StaticFlowNetwork, s: VertexId) -> Vec<bool> {
    let mut seen = vec![false; net.num_vertices()];
    seen[s.index()] = true;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for &e in net.out_edges(v) {
            let w = net.edge(e).dst;
            if !seen[w.index()] {
                seen[w.index()] = true;
                stack.push(w);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed() {
        let net = StaticFlowNetwork::from_edges(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert!(reach(&net, VertexId(0), VertexId(2)));
        assert!(!reach(&net, VertexId(2), VertexId(0)));
        let mut r = Reachability::new(&net);
        assert!(r.reach(VertexId(0), VertexId(1)));
        assert!(!r.reach(VertexId(1), VertexId(0)));
    }
}
