//! Connectivity predicates and quantities: edge- and arc-connectivity with
//! minimum-cut witnesses, strong connectivity, 2-vertex-connectivity of
//! digraphs (deletion form) and Menger-style internally disjoint path
//! counts (flow form).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::flow::{self, Adjacency, FlowNet};
use crate::graph::{Digraph, Graph, MixedGraph, VertexId};

/// A connectivity value; graphs on at most one vertex have no proper cut and
/// get [`Connectivity::Infinite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connectivity {
    Finite(u32),
    Infinite,
}

impl Connectivity {
    pub fn at_least(self, k: u32) -> bool {
        self >= Connectivity::Finite(k)
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::Finite(k) => write!(f, "{k}"),
            Connectivity::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutKind {
    /// `value = d_E(side)`.
    Edge,
    /// `value = d_A^-(side)`.
    ArcIn,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutWitness {
    pub side: BTreeSet<VertexId>,
    pub kind: CutKind,
    pub value: u32,
}

impl CutWitness {
    /// Counts the links crossing `side` in `g` from scratch.
    pub fn recount(&self, g: &MixedGraph) -> u32 {
        let mask = mask_of(g.vertex_count(), &self.side);
        let c = g.cut_counts(&mask);
        match self.kind {
            CutKind::Edge => c.edges,
            CutKind::ArcIn => c.arcs_in,
        }
    }

    /// Nonempty proper subset whose crossing count matches `value`.
    pub fn is_valid_for(&self, g: &MixedGraph) -> bool {
        !self.side.is_empty() && self.side.len() < g.vertex_count() && self.recount(g) == self.value
    }

    pub fn describe(&self, g: &MixedGraph) -> String {
        let names: Vec<&str> = self.side.iter().map(|&v| g.name(v)).collect();
        let kind = match self.kind {
            CutKind::Edge => "d_E",
            CutKind::ArcIn => "d_in",
        };
        format!("X={{{}}} {}={}", names.join(","), kind, self.value)
    }
}

/// Minimum cut value together with a minimising side when finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCut {
    pub value: Connectivity,
    pub witness: Option<CutWitness>,
}

/// Two internally disjoint directed paths between the same ordered endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathPair {
    pub first: Vec<VertexId>,
    pub second: Vec<VertexId>,
}

impl PathPair {
    /// Both sequences walk along arcs of `d` and meet only at their shared ends.
    pub fn is_valid_for(&self, d: &Digraph) -> bool {
        let walk = |p: &[VertexId]| {
            p.len() >= 2
                && p.windows(2).all(|w| d.arcs().iter().any(|a| a.tail == w[0] && a.head == w[1]))
        };
        if !walk(&self.first) || !walk(&self.second) {
            return false;
        }
        let (f, s) = (&self.first, &self.second);
        if f[0] != s[0] || f.last() != s.last() {
            return false;
        }
        let inner: BTreeSet<_> = f[1..f.len() - 1].iter().collect();
        s[1..s.len() - 1].iter().all(|v| !inner.contains(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPaths {
    pub found: bool,
    /// Present when `found` and two paths were requested.
    pub pair: Option<PathPair>,
}

/// Why a connectivity requirement fails: a deficient cut, or a vertex whose
/// deletion leaves the graph insufficiently connected (with the cut found
/// after deletion, expressed in the original graph's vertex ids).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    Cut(CutWitness),
    Vertex { vertex: VertexId, cut: Option<CutWitness> },
}

impl Failure {
    pub fn describe(&self, g: &MixedGraph) -> String {
        match self {
            Failure::Cut(c) => format!("cut {}", c.describe(g)),
            Failure::Vertex { vertex, cut } => match cut {
                Some(c) => format!("vertex {} (after deletion: {})", g.name(*vertex), c.describe(g)),
                None => format!("vertex {}", g.name(*vertex)),
            },
        }
    }
}

/// Outcome of a connectivity requirement.
pub type Verdict = std::result::Result<(), Failure>;

/// Re-expresses a witness computed on `g - removed` in the ids of `g`.
pub(crate) fn lift_witness(mut w: CutWitness, removed: VertexId) -> CutWitness {
    w.side = w
        .side
        .into_iter()
        .map(|v| if v >= removed { VertexId(v.0 + 1) } else { v })
        .collect();
    w
}

pub(crate) fn mask_of(n: usize, set: &BTreeSet<VertexId>) -> Vec<bool> {
    let mut mask = vec![false; n];
    for v in set {
        mask[v.index()] = true;
    }
    mask
}

pub(crate) fn arc_pairs(d: &MixedGraph) -> Vec<(usize, usize)> {
    d.arcs().iter().map(|a| (a.tail.index(), a.head.index())).collect()
}

fn side_from(mask: &[bool], keep: bool) -> BTreeSet<VertexId> {
    mask.iter()
        .enumerate()
        .filter(|&(_, &m)| m == keep)
        .map(|(i, _)| VertexId(i as u32))
        .collect()
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    Adjacency::new(d.vertex_count(), &arc_pairs(d)).strongly_connected(None)
}

/// `min d_E(X)` over nonempty proper `X`, via unit-capacity flows from a
/// fixed root with every edge as two opposite arcs.
pub fn edge_connectivity(g: &Graph) -> MinCut {
    let n = g.vertex_count();
    if n <= 1 {
        return MinCut { value: Connectivity::Infinite, witness: None };
    }
    let mut net = FlowNet::new(n);
    for e in g.edges() {
        net.add(e.a.index(), e.b.index(), 1);
        net.add(e.b.index(), e.a.index(), 1);
    }
    let mut best: Option<(u32, Vec<bool>)> = None;
    for v in 1..n {
        net.reset();
        let limit = best.as_ref().map_or(u32::MAX, |b| b.0);
        let f = net.max_flow(0, v, limit);
        if f < limit {
            best = Some((f, net.residual_reach(0)));
            if f == 0 {
                break;
            }
        }
    }
    let (value, reach) = best.expect("n >= 2");
    MinCut {
        value: Connectivity::Finite(value),
        witness: Some(CutWitness { side: side_from(&reach, true), kind: CutKind::Edge, value }),
    }
}

/// `min d_A^-(X)` over nonempty proper `X`, via unit-capacity flows to and
/// from a fixed root.
pub fn arc_connectivity(d: &Digraph) -> MinCut {
    let n = d.vertex_count();
    if n <= 1 {
        return MinCut { value: Connectivity::Infinite, witness: None };
    }
    let mut net = flow::arc_network(n, &arc_pairs(d));
    let mut best: Option<(u32, Vec<bool>)> = None;
    'outer: for v in 1..n {
        for (s, t) in [(0, v), (v, 0)] {
            net.reset();
            let limit = best.as_ref().map_or(u32::MAX, |b| b.0);
            let f = net.max_flow(s, t, limit);
            if f < limit {
                best = Some((f, net.residual_reach(s)));
                if f == 0 {
                    break 'outer;
                }
            }
        }
    }
    let (value, reach) = best.expect("n >= 2");
    // arcs leave the residual-reachable set, so they enter its complement
    MinCut {
        value: Connectivity::Finite(value),
        witness: Some(CutWitness { side: side_from(&reach, false), kind: CutKind::ArcIn, value }),
    }
}

/// Deletion form: `|V| >= 3` and `D - v` strongly connected for every `v`.
pub fn is_2vertex_connected(d: &Digraph) -> bool {
    flow::two_vertex_connected(&Adjacency::new(d.vertex_count(), &arc_pairs(d)))
}

/// Split network: vertex `x` becomes `2x` (in) and `2x+1` (out).
fn split_network(d: &MixedGraph, unsplit: &[usize]) -> FlowNet {
    let n = d.vertex_count();
    let mut net = FlowNet::new(2 * n + 1);
    for x in 0..n {
        let c = if unsplit.contains(&x) { u32::MAX / 4 } else { 1 };
        net.add(2 * x, 2 * x + 1, c);
    }
    for a in d.arcs() {
        net.add(2 * a.tail.index() + 1, 2 * a.head.index(), 1);
    }
    net
}

/// Whether `k` pairwise internally disjoint directed `u -> v` paths exist,
/// by max flow in the vertex-split network (every vertex other than `u`,
/// `v` has unit throughput; parallel arcs are separate unit links).
pub fn internally_disjoint_paths(d: &Digraph, u: VertexId, v: VertexId, k: u32) -> Result<DisjointPaths> {
    if u == v {
        return Err(Error::UnknownVertex(format!("{} (path endpoints must differ)", d.name(u))));
    }
    if u.index() >= d.vertex_count() || v.index() >= d.vertex_count() {
        return Err(Error::NotASubset);
    }
    let mut net = split_network(d, &[u.index(), v.index()]);
    let (s, t) = (2 * u.index() + 1, 2 * v.index());
    let f = net.max_flow(s, t, k);
    let found = f >= k;
    let pair = (found && k == 2).then(|| {
        let mut paths = net.decompose(s, t).into_iter().map(|nodes| {
            let mut p = vec![u];
            p.extend(nodes.iter().skip(1).filter(|&&x| x % 2 == 0).map(|&x| VertexId((x / 2) as u32)));
            p
        });
        let first = paths.next().expect("two units");
        let second = paths.next().expect("two units");
        PathPair { first, second }
    });
    Ok(DisjointPaths { found, pair })
}

/// `|V| >= 3` and two internally disjoint paths for every ordered pair of
/// distinct vertices in `x`.
pub fn is_2vc_in(d: &Digraph, x: &BTreeSet<VertexId>) -> Result<bool> {
    if x.iter().any(|v| v.index() >= d.vertex_count()) {
        return Err(Error::NotASubset);
    }
    if d.vertex_count() < 3 {
        return Ok(false);
    }
    for &u in x {
        for &v in x {
            if u != v && !internally_disjoint_paths(d, u, v, 2)?.found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Two paths from `v` into `x` (or from `x` to `v` when `reverse`) whose
/// vertex sets meet only in `v`.
fn two_fan_paths(d: &Digraph, v: VertexId, x: &BTreeSet<VertexId>, reverse: bool) -> Result<bool> {
    let n = d.vertex_count();
    if v.index() >= n || x.iter().any(|w| w.index() >= n) {
        return Err(Error::NotASubset);
    }
    if x.contains(&v) {
        return Err(Error::NotASubset);
    }
    let mut net = FlowNet::new(2 * n + 1);
    let sink = 2 * n;
    for w in 0..n {
        let c = if w == v.index() { u32::MAX / 4 } else { 1 };
        net.add(2 * w, 2 * w + 1, c);
    }
    for a in d.arcs() {
        let (t, h) = if reverse { (a.head, a.tail) } else { (a.tail, a.head) };
        net.add(2 * t.index() + 1, 2 * h.index(), 1);
    }
    for w in x {
        net.add(2 * w.index() + 1, sink, 1);
    }
    Ok(net.max_flow(2 * v.index() + 1, sink, 2) >= 2)
}

/// Two `(v, X)`-paths meeting only in `v`.
pub fn two_paths_to_set(d: &Digraph, v: VertexId, x: &BTreeSet<VertexId>) -> Result<bool> {
    two_fan_paths(d, v, x, false)
}

/// Two `(X, v)`-paths meeting only in `v`.
pub fn two_paths_from_set(d: &Digraph, x: &BTreeSet<VertexId>, v: VertexId) -> Result<bool> {
    two_fan_paths(d, v, x, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Digraph {
        Digraph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "a"), ("b", "a"), ("c", "b"), ("a", "c")]).unwrap()
    }

    #[test]
    fn strong_basics() {
        assert!(is_strongly_connected(&Digraph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "a")]).unwrap()));
        assert!(!is_strongly_connected(&Digraph::from_pairs(&[("u", "v")]).unwrap()));
        let mut single = MixedGraph::new();
        single.vertex("x");
        assert!(is_strongly_connected(&Digraph::try_from(single).unwrap()));
    }

    #[test]
    fn edge_connectivity_examples() {
        let c4 = Graph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        let k4 = Graph::from_pairs(&[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]).unwrap();
        let dt = crate::graph::double_cycle(3).unwrap();
        for (g, want) in [(c4, 2), (k4, 3), (dt, 4)] {
            let cut = edge_connectivity(&g);
            assert_eq!(cut.value, Connectivity::Finite(want));
            assert!(cut.witness.unwrap().is_valid_for(&g));
        }
        let mut two = MixedGraph::new();
        two.vertex("a");
        two.vertex("b");
        let cut = edge_connectivity(&Graph::try_from(two).unwrap());
        assert_eq!(cut.value, Connectivity::Finite(0));
        let mut one = MixedGraph::new();
        one.vertex("a");
        assert_eq!(edge_connectivity(&Graph::try_from(one).unwrap()).value, Connectivity::Infinite);
    }

    #[test]
    fn arc_connectivity_examples() {
        let circuit = Digraph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert_eq!(arc_connectivity(&circuit).value, Connectivity::Finite(1));
        let cut = arc_connectivity(&two_triangles());
        assert_eq!(cut.value, Connectivity::Finite(2));
        let w = cut.witness.unwrap();
        assert!(w.is_valid_for(&two_triangles()));
        let sink = Digraph::from_pairs(&[("a", "b"), ("b", "a"), ("a", "s")]).unwrap();
        let cut = arc_connectivity(&sink);
        assert_eq!(cut.value, Connectivity::Finite(0));
        assert!(cut.witness.unwrap().is_valid_for(&sink));
        assert_eq!(Connectivity::Infinite.to_string(), "inf");
    }

    #[test]
    fn two_vertex_connectivity_examples() {
        assert!(is_2vertex_connected(&two_triangles()));
        assert!(!is_2vertex_connected(&Digraph::from_pairs(&[("a", "b"), ("b", "a"), ("a", "b")]).unwrap()));
        let names = ["v0", "v1", "v2", "v3", "v4"];
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((names[i], names[(i + 1) % 5]));
            pairs.push((names[i], names[(i + 2) % 5]));
        }
        assert!(is_2vertex_connected(&Digraph::from_pairs(&pairs).unwrap()));
    }

    #[test]
    fn disjoint_paths_examples() {
        let circuit = Digraph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let (a, b) = (circuit.id("a").unwrap(), circuit.id("b").unwrap());
        assert!(!internally_disjoint_paths(&circuit, a, b, 2).unwrap().found);
        assert!(internally_disjoint_paths(&circuit, a, a, 1).is_err());

        let d = two_triangles();
        for u in d.vertices() {
            for v in d.vertices().filter(|&v| v != u) {
                let r = internally_disjoint_paths(&d, u, v, 2).unwrap();
                assert!(r.found);
                assert!(r.pair.unwrap().is_valid_for(&d));
            }
        }

        let single = Digraph::from_pairs(&[("u", "v")]).unwrap();
        let (u, v) = (single.id("u").unwrap(), single.id("v").unwrap());
        assert!(internally_disjoint_paths(&single, u, v, 1).unwrap().found);
    }

    #[test]
    fn two_vc_in_examples() {
        let c4 = Digraph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        let all: BTreeSet<_> = c4.vertices().collect();
        assert!(!is_2vc_in(&c4, &all).unwrap());
        let one: BTreeSet<_> = [VertexId(0)].into_iter().collect();
        assert!(is_2vc_in(&c4, &one).unwrap());
        assert!(is_2vc_in(&c4, &BTreeSet::new()).unwrap());
        let bad: BTreeSet<_> = [VertexId(9)].into_iter().collect();
        assert_eq!(is_2vc_in(&c4, &bad), Err(Error::NotASubset));
    }

    #[test]
    fn fan_paths() {
        // v reaches {a, b} along disjoint routes and back
        let d = Digraph::from_pairs(&[("v", "a"), ("v", "b"), ("a", "v"), ("b", "v"), ("a", "b"), ("b", "a")])
            .unwrap();
        let v = d.id("v").unwrap();
        let x = d.vertex_set(["a", "b"]).unwrap();
        assert!(two_paths_to_set(&d, v, &x).unwrap());
        assert!(two_paths_from_set(&d, &x, v).unwrap());
        // a single route out of v
        let d = Digraph::from_pairs(&[("v", "a"), ("b", "v"), ("a", "v"), ("a", "b"), ("b", "a")]).unwrap();
        let v = d.id("v").unwrap();
        let x = d.vertex_set(["a", "b"]).unwrap();
        assert!(!two_paths_to_set(&d, v, &x).unwrap());
        assert!(two_paths_from_set(&d, &x, v).unwrap());
    }
}
