//! Mixed graphs and the structural transformations used throughout the crate:
//! orienting, contracting and blowing up.
//!
//! A [`MixedGraph`] holds a vertex list, a multiset of undirected edges and a
//! multiset of arcs. Vertices are interned names externally and dense
//! integers internally; iteration order is insertion order. Edge and arc ids
//! are stable: they survive orientation (an oriented edge becomes an arc whose
//! [`LinkId`] remembers the edge) and contraction.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Provenance of an arc: an original arc of a mixed graph, or an undirected
/// edge that was oriented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinkId {
    Arc(u32),
    Edge(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: u32,
    pub a: VertexId,
    pub b: VertexId,
}

impl Edge {
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub id: LinkId,
    pub tail: VertexId,
    pub head: VertexId,
}

/// Links crossing the boundary of a vertex set `X`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CutCounts {
    /// Arcs with tail outside `X` and head inside.
    pub arcs_in: u32,
    /// Arcs with tail inside `X` and head outside.
    pub arcs_out: u32,
    /// Edges with exactly one endpoint in `X`.
    pub edges: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MixedGraph {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    arcs: Vec<Arc>,
}

impl MixedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on the given vertex names with no links.
    pub fn with_vertices<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut g = Self::new();
        for name in names {
            g.add_vertex(name.as_ref())?;
        }
        Ok(g)
    }

    /// Declares a new vertex; fails if the name is taken.
    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.index.contains_key(name) {
            return Err(Error::DuplicateVertex(name.to_string()));
        }
        Ok(self.vertex(name))
    }

    /// Returns the vertex with this name, declaring it if needed.
    pub fn vertex(&mut self, name: &str) -> VertexId {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = VertexId(self.names.len() as u32);
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    pub fn id(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn edge(&self, id: u32) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn is_graph(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn is_digraph(&self) -> bool {
        self.edges.is_empty()
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.index() < self.names.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{}", v.0)))
        }
    }

    fn next_edge_id(&self) -> u32 {
        self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0)
    }

    fn next_arc_id(&self) -> u32 {
        self.arcs
            .iter()
            .filter_map(|a| match a.id {
                LinkId::Arc(i) => Some(i + 1),
                LinkId::Edge(_) => None,
            })
            .max()
            .unwrap_or(0)
    }

    /// Adds an undirected edge with the next free edge id.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<u32> {
        let id = self.next_edge_id();
        self.add_edge_with_id(id, a, b)?;
        Ok(id)
    }

    pub fn add_edge_with_id(&mut self, id: u32, a: VertexId, b: VertexId) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::Loop(self.name(a).to_string()));
        }
        if self.edges.iter().any(|e| e.id == id) {
            return Err(Error::DuplicateEdgeId(id));
        }
        self.edges.push(Edge { id, a, b });
        Ok(())
    }

    /// Adds an arc `tail -> head` with the next free arc id.
    pub fn add_arc(&mut self, tail: VertexId, head: VertexId) -> Result<u32> {
        let id = self.next_arc_id();
        self.push_arc(Arc { id: LinkId::Arc(id), tail, head })?;
        Ok(id)
    }

    pub(crate) fn push_arc(&mut self, arc: Arc) -> Result<()> {
        self.check_vertex(arc.tail)?;
        self.check_vertex(arc.head)?;
        if arc.tail == arc.head {
            return Err(Error::Loop(self.name(arc.tail).to_string()));
        }
        if self.arcs.iter().any(|a| a.id == arc.id) {
            return Err(match arc.id {
                LinkId::Arc(i) => Error::DuplicateArcId(i),
                LinkId::Edge(i) => Error::DuplicateEdgeId(i),
            });
        }
        self.arcs.push(arc);
        Ok(())
    }

    /// Name-based convenience: declares endpoints as needed.
    pub fn add_edge_named(&mut self, a: &str, b: &str) -> Result<u32> {
        let (a, b) = (self.vertex(a), self.vertex(b));
        self.add_edge(a, b)
    }

    pub fn add_arc_named(&mut self, tail: &str, head: &str) -> Result<u32> {
        let (t, h) = (self.vertex(tail), self.vertex(head));
        self.add_arc(t, h)
    }

    /// Resolves a list of names to a vertex set.
    pub fn vertex_set<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Result<BTreeSet<VertexId>> {
        names
            .into_iter()
            .map(|n| self.id(n.as_ref()).ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string())))
            .collect()
    }

    /// `d_A^-(X)`, `d_A^+(X)` and `d_E(X)` for the set marked in `side`.
    pub fn cut_counts(&self, side: &[bool]) -> CutCounts {
        let mut c = CutCounts::default();
        for a in &self.arcs {
            match (side[a.tail.index()], side[a.head.index()]) {
                (false, true) => c.arcs_in += 1,
                (true, false) => c.arcs_out += 1,
                _ => {}
            }
        }
        for e in &self.edges {
            if side[e.a.index()] != side[e.b.index()] {
                c.edges += 1;
            }
        }
        c
    }

    /// Number of edges and arcs incident to `v`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edge_degree(v) + self.arcs.iter().filter(|a| a.tail == v || a.head == v).count()
    }

    pub fn edge_degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Copy with `v` and its incident links removed. Vertex ids after `v`
    /// shift down by one; names and link ids are kept.
    pub fn without_vertex(&self, v: VertexId) -> MixedGraph {
        let keep: Vec<bool> = self.vertices().map(|w| w != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced by the marked vertices.
    pub fn induced(&self, keep: &[bool]) -> MixedGraph {
        let mut out = MixedGraph::new();
        let mut remap = vec![None; self.names.len()];
        for v in self.vertices() {
            if keep[v.index()] {
                remap[v.index()] = Some(out.vertex(self.name(v)));
            }
        }
        for e in &self.edges {
            if let (Some(a), Some(b)) = (remap[e.a.index()], remap[e.b.index()]) {
                out.edges.push(Edge { id: e.id, a, b });
            }
        }
        for arc in &self.arcs {
            if let (Some(t), Some(h)) = (remap[arc.tail.index()], remap[arc.head.index()]) {
                out.arcs.push(Arc { id: arc.id, tail: t, head: h });
            }
        }
        out
    }

    /// Merges `set` into a single vertex called `label`. Links with exactly
    /// one endpoint in `set` are redirected to the merged vertex keeping
    /// their ids; links inside `set` would become loops and are dropped.
    /// The merged vertex takes the position of the first member of `set`.
    pub fn contract(&self, set: &BTreeSet<VertexId>, label: &str) -> Result<MixedGraph> {
        let first = *set.iter().next().ok_or(Error::EmptyContraction)?;
        for &v in set {
            self.check_vertex(v)?;
        }
        if let Some(v) = self.id(label) {
            if !set.contains(&v) {
                return Err(Error::LabelCollision(label.to_string()));
            }
        }
        let mut out = MixedGraph::new();
        let mut remap = vec![VertexId(0); self.names.len()];
        let mut merged = None;
        for v in self.vertices() {
            if set.contains(&v) {
                if v == first {
                    merged = Some(out.vertex(label));
                }
            } else {
                remap[v.index()] = out.vertex(self.name(v));
            }
        }
        let merged = merged.expect("first member visited");
        for &v in set {
            remap[v.index()] = merged;
        }
        for e in &self.edges {
            let (a, b) = (remap[e.a.index()], remap[e.b.index()]);
            if a != b {
                out.edges.push(Edge { id: e.id, a, b });
            }
        }
        for arc in &self.arcs {
            let (t, h) = (remap[arc.tail.index()], remap[arc.head.index()]);
            if t != h {
                out.arcs.push(Arc { id: arc.id, tail: t, head: h });
            }
        }
        Ok(out)
    }
}

/// A mixed graph without arcs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph(MixedGraph);

/// A mixed graph without undirected edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Digraph(MixedGraph);

impl Deref for Graph {
    type Target = MixedGraph;
    fn deref(&self) -> &MixedGraph {
        &self.0
    }
}

impl Deref for Digraph {
    type Target = MixedGraph;
    fn deref(&self) -> &MixedGraph {
        &self.0
    }
}

impl TryFrom<MixedGraph> for Graph {
    type Error = Error;
    fn try_from(g: MixedGraph) -> Result<Self> {
        if g.is_graph() {
            Ok(Graph(g))
        } else {
            Err(Error::NotAGraph)
        }
    }
}

impl TryFrom<MixedGraph> for Digraph {
    type Error = Error;
    fn try_from(g: MixedGraph) -> Result<Self> {
        if g.is_digraph() {
            Ok(Digraph(g))
        } else {
            Err(Error::NotADigraph)
        }
    }
}

impl Graph {
    /// Builds a graph from name pairs, declaring vertices in order of first use.
    pub fn from_pairs(pairs: &[(&str, &str)]) -> Result<Self> {
        let mut g = MixedGraph::new();
        for &(a, b) in pairs {
            g.add_edge_named(a, b)?;
        }
        Ok(Graph(g))
    }

    pub fn as_mixed(&self) -> &MixedGraph {
        &self.0
    }

    pub fn into_mixed(self) -> MixedGraph {
        self.0
    }

    pub fn without_vertex(&self, v: VertexId) -> Graph {
        Graph(self.0.without_vertex(v))
    }

    pub fn contract(&self, set: &BTreeSet<VertexId>, label: &str) -> Result<Graph> {
        self.0.contract(set, label).map(Graph)
    }
}

impl Digraph {
    pub fn from_pairs(pairs: &[(&str, &str)]) -> Result<Self> {
        let mut g = MixedGraph::new();
        for &(t, h) in pairs {
            g.add_arc_named(t, h)?;
        }
        Ok(Digraph(g))
    }

    pub fn as_mixed(&self) -> &MixedGraph {
        &self.0
    }

    pub fn into_mixed(self) -> MixedGraph {
        self.0
    }

    pub fn without_vertex(&self, v: VertexId) -> Digraph {
        Digraph(self.0.without_vertex(v))
    }

    pub fn contract(&self, set: &BTreeSet<VertexId>, label: &str) -> Result<Digraph> {
        self.0.contract(set, label).map(Digraph)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// From the edge's stored endpoint `a` to `b`.
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

/// A direction for every undirected edge of a mixed graph, keyed by edge id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Orientation(BTreeMap<u32, Direction>);

impl Orientation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, edge: u32, dir: Direction) {
        self.0.insert(edge, dir);
    }

    pub fn get(&self, edge: u32) -> Option<Direction> {
        self.0.get(&edge).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, Direction)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    /// Tail and head the orientation gives to `edge`.
    pub fn ends(&self, edge: &Edge) -> Option<(VertexId, VertexId)> {
        self.get(edge.id).map(|d| match d {
            Direction::Forward => (edge.a, edge.b),
            Direction::Backward => (edge.b, edge.a),
        })
    }

    /// True iff `edge` is oriented from `from` to `to`.
    pub fn goes(&self, edge: &Edge, from: VertexId, to: VertexId) -> bool {
        self.ends(edge) == Some((from, to))
    }
}

impl FromIterator<(u32, Direction)> for Orientation {
    fn from_iter<I: IntoIterator<Item = (u32, Direction)>>(iter: I) -> Self {
        Orientation(iter.into_iter().collect())
    }
}

/// Directs every edge of `g` as `o` says. Arcs of `g` are kept with their
/// ids; each oriented edge becomes an arc tagged [`LinkId::Edge`].
pub fn apply_orientation(g: &MixedGraph, o: &Orientation) -> Result<Digraph> {
    for (id, _) in o.iter() {
        if g.edge(id).is_none() {
            return Err(Error::UnknownEdge(id));
        }
    }
    let mut out = MixedGraph {
        names: g.names.clone(),
        index: g.index.clone(),
        edges: Vec::new(),
        arcs: g.arcs.clone(),
    };
    out.arcs.reserve(g.edges.len());
    for e in &g.edges {
        let (tail, head) = o.ends(e).ok_or(Error::MissingEdge(e.id))?;
        out.arcs.push(Arc { id: LinkId::Edge(e.id), tail, head });
    }
    Ok(Digraph(out))
}

/// Replaces `v` by the graph `h`: every edge `wv` becomes `wu` with
/// `u = attach[edge id]`. Reattached edges keep their ids; the edges of `h`
/// get fresh ids after the largest id of `g`. The vertices of `h` are
/// appended after the surviving vertices of `g`.
pub fn blow_up(g: &Graph, v: VertexId, h: &Graph, attach: &BTreeMap<u32, VertexId>) -> Result<Graph> {
    g.check_vertex(v)?;
    for name in h.names() {
        if let Some(w) = g.id(name) {
            if w != v {
                return Err(Error::BlowupNameClash(name.clone()));
            }
        }
    }
    for e in g.edges() {
        if e.touches(v) {
            match attach.get(&e.id) {
                None => return Err(Error::MissingAttachment(e.id)),
                Some(u) if u.index() >= h.vertex_count() => return Err(Error::BadAttachment),
                Some(_) => {}
            }
        }
    }

    let mut out = MixedGraph::new();
    let mut remap = vec![None; g.vertex_count()];
    for w in g.vertices().filter(|&w| w != v) {
        remap[w.index()] = Some(out.vertex(g.name(w)));
    }
    let h_map: Vec<VertexId> = h.vertices().map(|u| out.vertex(h.name(u))).collect();

    for e in g.edges() {
        let (a, b) = if e.a == v {
            (h_map[attach[&e.id].index()], remap[e.b.index()].expect("survivor"))
        } else if e.b == v {
            (remap[e.a.index()].expect("survivor"), h_map[attach[&e.id].index()])
        } else {
            (remap[e.a.index()].expect("survivor"), remap[e.b.index()].expect("survivor"))
        };
        out.edges.push(Edge { id: e.id, a, b });
    }
    for (id, e) in (g.next_edge_id()..).zip(h.edges()) {
        out.edges.push(Edge { id, a: h_map[e.a.index()], b: h_map[e.b.index()] });
    }
    Ok(Graph(out))
}

/// A cycle on `k` vertices `c1..ck` with every edge duplicated.
pub fn double_cycle(k: usize) -> Result<Graph> {
    double_cycle_named(&(1..=k).map(|i| format!("c{i}")).collect::<Vec<_>>())
}

/// Double cycle through the given names in order.
pub fn double_cycle_named<S: AsRef<str>>(names: &[S]) -> Result<Graph> {
    let k = names.len();
    if k < 2 {
        return Err(Error::CycleTooShort(k));
    }
    let mut g = MixedGraph::with_vertices(names)?;
    for i in 0..k {
        let (a, b) = (VertexId(i as u32), VertexId(((i + 1) % k) as u32));
        g.add_edge(a, b)?;
        g.add_edge(a, b)?;
    }
    Ok(Graph(g))
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::write_mg(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &MixedGraph, names: &[&str]) -> BTreeSet<VertexId> {
        g.vertex_set(names).unwrap()
    }

    #[test]
    fn loops_are_rejected() {
        let mut g = MixedGraph::new();
        assert!(matches!(g.add_edge_named("a", "a"), Err(Error::Loop(_))));
        assert!(matches!(g.add_arc_named("b", "b"), Err(Error::Loop(_))));
    }

    #[test]
    fn parallel_links_allowed_with_distinct_ids() {
        let mut g = MixedGraph::new();
        assert_eq!(g.add_edge_named("a", "b").unwrap(), 0);
        assert_eq!(g.add_edge_named("a", "b").unwrap(), 1);
        assert_eq!(g.add_arc_named("a", "b").unwrap(), 0);
        assert_eq!(g.add_arc_named("a", "b").unwrap(), 1);
        assert_eq!(g.edges().len(), 2);
        assert_eq!(g.arcs().len(), 2);
    }

    #[test]
    fn orient_single_edge() {
        let g = Graph::from_pairs(&[("u", "v")]).unwrap();
        let o: Orientation = [(0, Direction::Forward)].into_iter().collect();
        let d = apply_orientation(&g, &o).unwrap();
        let a = d.arcs()[0];
        assert_eq!((d.name(a.tail), d.name(a.head)), ("u", "v"));
        assert_eq!(a.id, LinkId::Edge(0));
    }

    #[test]
    fn orient_keeps_existing_arcs() {
        let mut m = MixedGraph::new();
        m.add_arc_named("p", "q").unwrap();
        m.add_edge_named("p", "q").unwrap();
        let o: Orientation = [(0, Direction::Backward)].into_iter().collect();
        let d = apply_orientation(&m, &o).unwrap();
        let pairs: Vec<_> = d.arcs().iter().map(|a| (d.name(a.tail), d.name(a.head), a.id)).collect();
        assert_eq!(pairs, vec![("p", "q", LinkId::Arc(0)), ("q", "p", LinkId::Edge(0))]);
    }

    #[test]
    fn partial_orientation_names_missing_edge() {
        let g = Graph::from_pairs(&[("u", "v"), ("v", "w")]).unwrap();
        let o: Orientation = [(0, Direction::Forward)].into_iter().collect();
        assert_eq!(apply_orientation(&g, &o), Err(Error::MissingEdge(1)));
        let o: Orientation = [(0, Direction::Forward), (1, Direction::Forward), (7, Direction::Forward)]
            .into_iter()
            .collect();
        assert_eq!(apply_orientation(&g, &o), Err(Error::UnknownEdge(7)));
    }

    #[test]
    fn contract_two_cycle_to_point() {
        let d = Digraph::from_pairs(&[("u", "v"), ("v", "u")]).unwrap();
        let c = d.contract(&set(&d, &["u", "v"]), "w").unwrap();
        assert_eq!(c.vertex_count(), 1);
        assert!(c.arcs().is_empty());
        assert_eq!(c.name(VertexId(0)), "w");
    }

    #[test]
    fn contract_circuit() {
        let d = Digraph::from_pairs(&[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let c = d.contract(&set(&d, &["b", "c"]), "b").unwrap();
        assert_eq!(c.names(), &["a".to_string(), "b".to_string()]);
        let pairs: Vec<_> = c.arcs().iter().map(|a| (c.name(a.tail), c.name(a.head), a.id)).collect();
        assert_eq!(pairs, vec![("a", "b", LinkId::Arc(0)), ("b", "a", LinkId::Arc(2))]);
    }

    #[test]
    fn contract_errors() {
        let d = Digraph::from_pairs(&[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(d.contract(&BTreeSet::new(), "x"), Err(Error::EmptyContraction));
        assert_eq!(d.contract(&set(&d, &["a", "b"]), "c"), Err(Error::LabelCollision("c".into())));
    }

    #[test]
    fn double_cycle_shapes() {
        assert_eq!(double_cycle(1), Err(Error::CycleTooShort(1)));
        let two = double_cycle(2).unwrap();
        assert_eq!((two.vertex_count(), two.edges().len()), (2, 4));
        let five = double_cycle(5).unwrap();
        assert_eq!(five.edges().len(), 10);
        assert!(five.vertices().all(|v| five.edge_degree(v) == 4));
    }

    #[test]
    fn blow_up_triangle_into_double_cycle() {
        let g = Graph::from_pairs(&[("a", "b"), ("b", "v"), ("a", "v")]).unwrap();
        let h = double_cycle_named(&["v1", "v2", "v3"]).unwrap();
        let v = g.id("v").unwrap();
        // a-v (id 2) -> v1, b-v (id 1) -> v2
        let attach: BTreeMap<u32, VertexId> = [(2, VertexId(0)), (1, VertexId(1))].into_iter().collect();
        let b = blow_up(&g, v, &h, &attach).unwrap();
        assert_eq!(b.vertex_count(), 5);
        assert_eq!(b.edges().len(), 9);
        let e2 = b.edge(2).unwrap();
        assert_eq!((b.name(e2.a), b.name(e2.b)), ("a", "v1"));
        let e1 = b.edge(1).unwrap();
        assert_eq!((b.name(e1.a), b.name(e1.b)), ("b", "v2"));
        assert!(b.edges().iter().filter(|e| e.id >= 3).count() == 6);

        // contracting the replacement recovers the triangle
        let back = b.contract(&set(&b, &["v1", "v2", "v3"]), "v").unwrap();
        let mut got: Vec<_> = back
            .edges()
            .iter()
            .map(|e| {
                let mut p = [back.name(e.a), back.name(e.b)];
                p.sort();
                (e.id, p)
            })
            .collect();
        got.sort();
        assert_eq!(got, vec![(0, ["a", "b"]), (1, ["b", "v"]), (2, ["a", "v"])]);
    }

    #[test]
    fn blow_up_errors() {
        let g = Graph::from_pairs(&[("a", "v"), ("b", "v")]).unwrap();
        let h = double_cycle_named(&["x", "y", "z"]).unwrap();
        let v = g.id("v").unwrap();
        let partial: BTreeMap<u32, VertexId> = [(0, VertexId(0))].into_iter().collect();
        assert_eq!(blow_up(&g, v, &h, &partial), Err(Error::MissingAttachment(1)));
        let bad: BTreeMap<u32, VertexId> = [(0, VertexId(0)), (1, VertexId(9))].into_iter().collect();
        assert_eq!(blow_up(&g, v, &h, &bad), Err(Error::BadAttachment));
        let clash = double_cycle_named(&["a", "y", "z"]).unwrap();
        let ok: BTreeMap<u32, VertexId> = [(0, VertexId(0)), (1, VertexId(1))].into_iter().collect();
        assert_eq!(blow_up(&g, v, &clash, &ok), Err(Error::BlowupNameClash("a".into())));
    }

    #[test]
    fn cut_counts_are_symmetric_for_edges() {
        let mut m = MixedGraph::new();
        m.add_arc_named("a", "b").unwrap();
        m.add_arc_named("c", "a").unwrap();
        m.add_edge_named("a", "c").unwrap();
        m.add_edge_named("b", "c").unwrap();
        let side = [true, false, false];
        let c = m.cut_counts(&side);
        assert_eq!(c, CutCounts { arcs_in: 1, arcs_out: 1, edges: 1 });
        let comp = m.cut_counts(&[false, true, true]);
        assert_eq!(comp.edges, c.edges);
        assert_eq!(comp.arcs_in, c.arcs_out);
    }
}
