//! Unit-capacity augmenting-path max flow and reachability kernels over dense
//! vertex indices.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
pub(crate) struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    orig: Vec<u32>,
}

impl FlowNet {
    pub fn new(n: usize) -> Self {
        FlowNet { adj: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new(), orig: Vec::new() }
    }

    pub fn add(&mut self, u: usize, v: usize, c: u32) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.orig.push(c);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
        self.orig.push(0);
    }

    pub fn reset(&mut self) {
        self.cap.copy_from_slice(&self.orig);
    }

    /// Pushes up to `limit` units from `s` to `t`; returns the amount pushed.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let n = self.adj.len();
        let mut flow = 0;
        let mut pred = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        while flow < limit {
            pred.fill(usize::MAX);
            queue.clear();
            queue.push_back(s);
            let mut seen = vec![false; n];
            seen[s] = true;
            'bfs: while let Some(x) = queue.pop_front() {
                for &e in &self.adj[x] {
                    let y = self.to[e];
                    if self.cap[e] > 0 && !seen[y] {
                        seen[y] = true;
                        pred[y] = e;
                        if y == t {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut y = t;
            while y != s {
                let e = pred[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &e in &self.adj[x] {
                let y = self.to[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Splits the current flow into `s`-`t` paths (as node sequences).
    pub fn decompose(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut used: Vec<u32> = (0..self.to.len())
            .map(|e| if e % 2 == 0 { self.orig[e] - self.cap[e].min(self.orig[e]) } else { 0 })
            .collect();
        let mut paths = Vec::new();
        loop {
            let mut path = vec![s];
            let mut x = s;
            while x != t {
                let next = self.adj[x].iter().copied().find(|&e| e % 2 == 0 && used[e] > 0);
                let Some(e) = next else { return paths };
                used[e] -= 1;
                x = self.to[e];
                path.push(x);
            }
            paths.push(path);
        }
    }
}

/// Compressed adjacency of a digraph given as `(tail, head)` index pairs.
#[derive(Clone, Debug)]
pub(crate) struct Adjacency {
    out_start: Vec<usize>,
    out: Vec<usize>,
    in_start: Vec<usize>,
    inn: Vec<usize>,
}

impl Adjacency {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Self {
        let mut out_deg = vec![0usize; n + 1];
        let mut in_deg = vec![0usize; n + 1];
        for &(t, h) in arcs {
            out_deg[t + 1] += 1;
            in_deg[h + 1] += 1;
        }
        for i in 0..n {
            out_deg[i + 1] += out_deg[i];
            in_deg[i + 1] += in_deg[i];
        }
        let mut out = vec![0; arcs.len()];
        let mut inn = vec![0; arcs.len()];
        let mut po = out_deg.clone();
        let mut pi = in_deg.clone();
        for &(t, h) in arcs {
            out[po[t]] = h;
            po[t] += 1;
            inn[pi[h]] = t;
            pi[h] += 1;
        }
        Adjacency { out_start: out_deg, out, in_start: in_deg, inn }
    }

    pub fn n(&self) -> usize {
        self.out_start.len() - 1
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[self.out_start[v]..self.out_start[v + 1]]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[self.in_start[v]..self.in_start[v + 1]]
    }

    fn reaches_all(&self, root: usize, skip: Option<usize>, forward: bool, alive: usize) -> bool {
        let n = self.n();
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut count = 1;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            let nbrs = if forward { self.out_neighbors(x) } else { self.in_neighbors(x) };
            for &y in nbrs {
                if Some(y) != skip && !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == alive
    }

    /// Strong connectivity of the digraph with `skip` deleted. Graphs with at
    /// most one remaining vertex count as strongly connected.
    pub fn strongly_connected(&self, skip: Option<usize>) -> bool {
        let n = self.n();
        let alive = n - usize::from(skip.is_some_and(|s| s < n));
        if alive <= 1 {
            return true;
        }
        let root = (0..n).find(|&v| Some(v) != skip).expect("alive vertex");
        self.reaches_all(root, skip, true, alive) && self.reaches_all(root, skip, false, alive)
    }
}

/// Builds a unit-capacity network on the same vertices.
pub(crate) fn arc_network(n: usize, arcs: &[(usize, usize)]) -> FlowNet {
    let mut net = FlowNet::new(n);
    for &(t, h) in arcs {
        net.add(t, h, 1);
    }
    net
}

/// Whether every nonempty proper vertex set has at least `k` entering arcs.
pub(crate) fn arc_connected_at_least(n: usize, arcs: &[(usize, usize)], k: u32) -> bool {
    if n <= 1 || k == 0 {
        return true;
    }
    let mut net = arc_network(n, arcs);
    for v in 1..n {
        net.reset();
        if net.max_flow(0, v, k) < k {
            return false;
        }
        net.reset();
        if net.max_flow(v, 0, k) < k {
            return false;
        }
    }
    true
}

/// `|V| >= 3` and deleting any single vertex leaves a strongly connected digraph.
pub(crate) fn two_vertex_connected(adj: &Adjacency) -> bool {
    let n = adj.n();
    n >= 3 && adj.strongly_connected(None) && (0..n).all(|v| adj.strongly_connected(Some(v)))
}

/// 2-arc-connected, and strongly connected after deleting any vertex marked in `t`.
pub(crate) fn two_t_connected(n: usize, arcs: &[(usize, usize)], t: &[bool]) -> bool {
    let adj = Adjacency::new(n, arcs);
    if !adj.strongly_connected(None) {
        return false;
    }
    if !(0..n).filter(|&v| t[v]).all(|v| adj.strongly_connected(Some(v))) {
        return false;
    }
    arc_connected_at_least(n, arcs, 2)
}
