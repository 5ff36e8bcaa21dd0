//! Orientation existence and construction.
//!
//! [`robbins_orientation`] builds a strongly connected orientation of a
//! 2-edge-connected graph from a depth-first search. [`exact_orientation_search`]
//! decides, for any mixed graph and any of the supported connectivity
//! targets, whether an orientation exists, by depth-first branching on edge
//! directions with sound pruning:
//!
//! * relaxation: every undecided edge stands for both of its arcs; the
//!   targets are monotone under adding arcs, so if this super-digraph fails
//!   the target no completion can succeed;
//! * propagation: an undecided edge whose one direction already makes the
//!   relaxation fail is forced the other way;
//! * local degrees: a vertex whose links are all decided needs in- and
//!   out-degree at least 1 (strong) or 2 (the other targets).
//!
//! The remaining predicates evaluate classical characterisations literally.

use std::collections::BTreeSet;

use crate::connectivity::{
    self, arc_connectivity, edge_connectivity, is_2vertex_connected, is_strongly_connected, lift_witness, CutWitness,
    Failure, Verdict,
};
use crate::error::{Error, Result};
use crate::flow::{self, Adjacency};
use crate::graph::{apply_orientation, Digraph, Direction, Graph, MixedGraph, Orientation, VertexId};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Connectivity requirement for an orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Strong,
    TwoArc,
    TwoVertex,
    TwoT(BTreeSet<VertexId>),
}

impl Target {
    pub fn name(&self) -> &'static str {
        match self {
            Target::Strong => "strong",
            Target::TwoArc => "2arc",
            Target::TwoVertex => "2vc",
            Target::TwoT(_) => "2t",
        }
    }

    /// Evaluates the target on a digraph through the connectivity module.
    pub fn holds(&self, d: &Digraph) -> bool {
        match self {
            Target::Strong => is_strongly_connected(d),
            Target::TwoArc => arc_connectivity(d).value.at_least(2),
            Target::TwoVertex => is_2vertex_connected(d),
            Target::TwoT(t) => matches!(crate::torient::is_2t_connected(d, t), Ok(Ok(()))),
        }
    }

    fn min_degree(&self) -> usize {
        match self {
            Target::Strong => 1,
            _ => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Found,
    None,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: Status,
    pub orientation: Option<Orientation>,
    pub nodes_explored: u64,
    pub budget: u64,
}

/// Pruning switches; all on by default. Turning everything off gives plain
/// enumeration of all orientations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub relaxation: bool,
    pub propagation: bool,
    pub local: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { relaxation: true, propagation: true, local: true }
    }
}

impl SearchOptions {
    pub fn unpruned() -> Self {
        SearchOptions { relaxation: false, propagation: false, local: false }
    }
}

pub fn exact_orientation_search(m: &MixedGraph, target: &Target, budget: u64) -> Result<SearchOutcome> {
    exact_orientation_search_with(m, target, budget, SearchOptions::default())
}

pub fn exact_orientation_search_with(
    m: &MixedGraph,
    target: &Target,
    budget: u64,
    options: SearchOptions,
) -> Result<SearchOutcome> {
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let n = m.vertex_count();
    let t_mask = match target {
        Target::TwoT(t) => {
            if t.iter().any(|v| v.index() >= n) {
                return Err(Error::NotASubset);
            }
            connectivity::mask_of(n, t)
        }
        _ => Vec::new(),
    };
    let edges: Vec<(usize, usize)> = m.edges().iter().map(|e| (e.a.index(), e.b.index())).collect();
    let degree: Vec<usize> = m.vertices().map(|v| m.degree(v)).collect();
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by_key(|&i| {
        let (a, b) = edges[i];
        (std::cmp::Reverse(degree[a] + degree[b]), m.edges()[i].id)
    });
    let mut incident = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        incident[a].push(i);
        incident[b].push(i);
    }

    let mut solver = Solver {
        graph: m,
        target,
        t_mask,
        n,
        fixed: connectivity::arc_pairs(m),
        edges,
        order,
        incident,
        dir: vec![None; m.edges().len()],
        options,
        nodes: 0,
        budget,
        found: None,
    };
    let step = solver.descend();
    let status = match step {
        Step::Found => Status::Found,
        Step::Exhausted => Status::None,
        Step::OutOfBudget => Status::Unknown,
    };
    Ok(SearchOutcome { status, orientation: solver.found, nodes_explored: solver.nodes, budget })
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Solver<'a> {
    graph: &'a MixedGraph,
    target: &'a Target,
    t_mask: Vec<bool>,
    n: usize,
    fixed: Vec<(usize, usize)>,
    edges: Vec<(usize, usize)>,
    order: Vec<usize>,
    incident: Vec<Vec<usize>>,
    /// `Some(true)` = forward (`a -> b`).
    dir: Vec<Option<bool>>,
    options: SearchOptions,
    nodes: u64,
    budget: u64,
    found: Option<Orientation>,
}

impl Solver<'_> {
    fn holds(&self, arcs: &[(usize, usize)]) -> bool {
        match self.target {
            Target::Strong => Adjacency::new(self.n, arcs).strongly_connected(None),
            Target::TwoArc => flow::arc_connected_at_least(self.n, arcs, 2),
            Target::TwoVertex => flow::two_vertex_connected(&Adjacency::new(self.n, arcs)),
            Target::TwoT(_) => flow::two_t_connected(self.n, arcs, &self.t_mask),
        }
    }

    /// Fixed arcs, decided edges, both arcs of each undecided edge; `except`
    /// commits one undecided edge to a direction.
    fn relaxation(&self, except: Option<(usize, bool)>) -> Vec<(usize, usize)> {
        let mut arcs = self.fixed.clone();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            let d = match except {
                Some((j, d)) if j == i => Some(d),
                _ => self.dir[i],
            };
            match d {
                Some(true) => arcs.push((a, b)),
                Some(false) => arcs.push((b, a)),
                None => {
                    arcs.push((a, b));
                    arcs.push((b, a));
                }
            }
        }
        arcs
    }

    /// Forces edges whose other direction already breaks the relaxation.
    /// Returns false on a contradiction.
    fn propagate(&mut self) -> bool {
        loop {
            let mut changed = false;
            for i in 0..self.edges.len() {
                if self.dir[i].is_some() {
                    continue;
                }
                let fwd = self.holds(&self.relaxation(Some((i, true))));
                let bwd = self.holds(&self.relaxation(Some((i, false))));
                match (fwd, bwd) {
                    (false, false) => return false,
                    (true, false) => {
                        self.dir[i] = Some(true);
                        changed = true;
                    }
                    (false, true) => {
                        self.dir[i] = Some(false);
                        changed = true;
                    }
                    (true, true) => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn local_ok(&self) -> bool {
        if self.n < 2 {
            return true;
        }
        let need = self.target.min_degree();
        let mut indeg = vec![0usize; self.n];
        let mut outdeg = vec![0usize; self.n];
        for &(t, h) in &self.fixed {
            outdeg[t] += 1;
            indeg[h] += 1;
        }
        for v in 0..self.n {
            let mut open = false;
            let (mut i, mut o) = (indeg[v], outdeg[v]);
            for &e in &self.incident[v] {
                let (a, _) = self.edges[e];
                match self.dir[e] {
                    None => open = true,
                    Some(fwd) => {
                        if (a == v) == fwd {
                            o += 1;
                        } else {
                            i += 1;
                        }
                    }
                }
            }
            if !open && (i < need || o < need) {
                return false;
            }
        }
        true
    }

    fn orientation(&self) -> Orientation {
        self.graph
            .edges()
            .iter()
            .zip(&self.dir)
            .map(|(e, d)| (e.id, if d.expect("decided") { Direction::Forward } else { Direction::Backward }))
            .collect()
    }

    fn descend(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        let saved = self.dir.clone();
        let step = self.explore();
        if !matches!(step, Step::Found) {
            self.dir = saved;
        }
        step
    }

    fn explore(&mut self) -> Step {
        if self.options.relaxation && !self.holds(&self.relaxation(None)) {
            return Step::Exhausted;
        }
        if self.options.propagation && !self.propagate() {
            return Step::Exhausted;
        }
        if self.options.local && !self.local_ok() {
            return Step::Exhausted;
        }
        let Some(next) = self.order.iter().copied().find(|&i| self.dir[i].is_none()) else {
            let o = self.orientation();
            let d = apply_orientation(self.graph, &o).expect("total orientation");
            if self.target.holds(&d) {
                self.found = Some(o);
                return Step::Found;
            }
            return Step::Exhausted;
        };
        for d in [true, false] {
            self.dir[next] = Some(d);
            match self.descend() {
                Step::Exhausted => {}
                other => return other,
            }
        }
        self.dir[next] = None;
        Step::Exhausted
    }
}

/// Strongly connected orientation of a 2-edge-connected graph: DFS tree
/// edges point away from the root, every other edge points from descendant
/// to ancestor. Graphs with a bridge or a disconnection give back the
/// deficient cut instead.
pub fn robbins_orientation(g: &Graph) -> std::result::Result<Orientation, CutWitness> {
    let cut = edge_connectivity(g);
    if !cut.value.at_least(2) {
        return Err(cut.witness.expect("finite connectivity has a witness"));
    }
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(usize, VertexId)>> = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        adj[e.a.index()].push((i, e.b));
        adj[e.b.index()].push((i, e.a));
    }
    let mut o = Orientation::new();
    let mut visited = vec![false; n];
    let mut used = vec![false; g.edges().len()];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if top.1 == adj[v].len() {
                stack.pop();
                continue;
            }
            let (ei, w) = adj[v][top.1];
            top.1 += 1;
            if used[ei] {
                continue;
            }
            used[ei] = true;
            let e = &g.edges()[ei];
            let dir = if e.a.index() == v { Direction::Forward } else { Direction::Backward };
            o.set(e.id, dir);
            if !visited[w.index()] {
                visited[w.index()] = true;
                stack.push((w.index(), 0));
            }
        }
    }
    Ok(o)
}

/// Literal evaluation of `d_A^-(X) + d_E(X)/2 >= 1` over every nonempty
/// proper `X`, in increasing bitmask order of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BtVerdict {
    pub holds: bool,
    pub violating: Option<BTreeSet<VertexId>>,
}

pub const BT_MAX_VERTICES: usize = 20;

pub fn bt_predicate(m: &MixedGraph) -> Result<BtVerdict> {
    let n = m.vertex_count();
    if n > BT_MAX_VERTICES {
        return Err(Error::TooLarge { size: n, limit: BT_MAX_VERTICES });
    }
    if n < 2 {
        return Ok(BtVerdict { holds: true, violating: None });
    }
    let full = (1u32 << n) - 1;
    let mut side = vec![false; n];
    for mask in 1..full {
        for (i, s) in side.iter_mut().enumerate() {
            *s = mask >> i & 1 == 1;
        }
        let c = m.cut_counts(&side);
        if 2 * c.arcs_in + c.edges < 2 {
            let x = (0..n).filter(|&i| side[i]).map(|i| VertexId(i as u32)).collect();
            return Ok(BtVerdict { holds: false, violating: Some(x) });
        }
    }
    Ok(BtVerdict { holds: true, violating: None })
}

/// `λ(G) >= 2k`.
pub fn nash_williams_predicate(g: &Graph, k: u32) -> bool {
    edge_connectivity(g).value.at_least(2 * k)
}

/// `λ(G) >= 4` and `λ(G - v) >= 2` for every vertex `v`.
pub fn thomassen_predicate(g: &Graph) -> Verdict {
    let all: BTreeSet<VertexId> = g.vertices().collect();
    four_and_two_after_deleting(g, &all)
}

/// `λ(G) >= 4` and `λ(G - v) >= 2` for every `v` in `t`.
pub(crate) fn four_and_two_after_deleting(g: &Graph, t: &BTreeSet<VertexId>) -> Verdict {
    let cut = edge_connectivity(g);
    if !cut.value.at_least(4) {
        return Err(Failure::Cut(cut.witness.expect("finite")));
    }
    for &v in t {
        let rest = edge_connectivity(&g.without_vertex(v));
        if !rest.value.at_least(2) {
            return Err(Failure::Vertex { vertex: v, cut: rest.witness.map(|w| lift_witness(w, v)) });
        }
    }
    Ok(())
}
