//! Small integer max-flow (Edmonds–Karp) used for vertex connectivity.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Edge {
    to: usize,
    cap: u32,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    edges: Vec<Edge>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        Self {
            edges: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    pub(crate) fn add_edge(&mut self, from: usize, to: usize, cap: u32) {
        // Residual twin lives at index ^ 1.
        self.out[from].push(self.edges.len());
        self.edges.push(Edge { to, cap });
        self.out[to].push(self.edges.len());
        self.edges.push(Edge { to: from, cap: 0 });
    }

    /// Maximum flow from `source` to `sink`, stopping early once `limit` is reached.
    pub(crate) fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let n = self.out.len();
        let mut flow = 0;
        let mut parent_edge = vec![usize::MAX; n];
        while flow < limit {
            parent_edge.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &e in &self.out[u] {
                    let Edge { to, cap } = self.edges[e];
                    if cap > 0 && to != source && parent_edge[to] == usize::MAX {
                        parent_edge[to] = e;
                        if to == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(to);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut bottleneck = u32::MAX;
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                bottleneck = bottleneck.min(self.edges[e].cap);
                v = self.edges[e ^ 1].to;
            }
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                self.edges[e].cap -= bottleneck;
                self.edges[e ^ 1].cap += bottleneck;
                v = self.edges[e ^ 1].to;
            }
            flow += bottleneck;
        }
        flow
    }
}
