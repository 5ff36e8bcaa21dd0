//! Brute-force oracles written without the library's flow code.

#![allow(dead_code)]

use orientkit::graph::{Direction, Graph, MixedGraph, Orientation, VertexId};

pub fn graph_from(n: usize, pairs: &[(usize, usize)]) -> Graph {
    let mut g = MixedGraph::with_vertices((0..n).map(|i| format!("v{i}"))).unwrap();
    for &(a, b) in pairs {
        g.add_edge(VertexId(a as u32), VertexId(b as u32)).unwrap();
    }
    Graph::try_from(g).unwrap()
}

pub fn mixed_from(n: usize, edges: &[(usize, usize)], arcs: &[(usize, usize)]) -> MixedGraph {
    let mut g = MixedGraph::with_vertices((0..n).map(|i| format!("v{i}"))).unwrap();
    for &(a, b) in edges {
        g.add_edge(VertexId(a as u32), VertexId(b as u32)).unwrap();
    }
    for &(a, b) in arcs {
        g.add_arc(VertexId(a as u32), VertexId(b as u32)).unwrap();
    }
    g
}

fn in_set(mask: u32, v: VertexId) -> bool {
    mask >> v.0 & 1 == 1
}

/// Minimum `d_E(X)` over nonempty proper `X`; `None` below two vertices.
pub fn brute_edge_cut(g: &MixedGraph) -> Option<u32> {
    let n = g.vertex_count();
    (1..(1u32 << n) - 1)
        .map(|mask| g.edges().iter().filter(|e| in_set(mask, e.a) != in_set(mask, e.b)).count() as u32)
        .min()
}

/// Minimum `d_A^-(X)` over nonempty proper `X`.
pub fn brute_arc_cut(g: &MixedGraph) -> Option<u32> {
    let n = g.vertex_count();
    (1..(1u32 << n) - 1)
        .map(|mask| g.arcs().iter().filter(|a| !in_set(mask, a.tail) && in_set(mask, a.head)).count() as u32)
        .min()
}

fn reach(g: &MixedGraph, from: usize, skip: Option<usize>, forward: bool) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        for a in g.arcs() {
            let (s, t) = if forward { (a.tail.index(), a.head.index()) } else { (a.head.index(), a.tail.index()) };
            if s == x && Some(t) != skip && !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen
}

/// Strong connectivity of the arcs of `g` with `skip` deleted.
pub fn brute_strong(g: &MixedGraph, skip: Option<usize>) -> bool {
    let n = g.vertex_count();
    let Some(root) = (0..n).find(|&v| Some(v) != skip) else { return true };
    let alive = |seen: &Vec<bool>| (0..n).filter(|&v| Some(v) != skip).all(|v| seen[v]);
    alive(&reach(g, root, skip, true)) && alive(&reach(g, root, skip, false))
}

pub fn brute_2vc(g: &MixedGraph) -> bool {
    let n = g.vertex_count();
    n >= 3 && brute_strong(g, None) && (0..n).all(|v| brute_strong(g, Some(v)))
}

/// The `k`-th of the `2^|E|` orientations: bit `i` set means edge `i` (in
/// storage order) is oriented backward.
pub fn nth_orientation(g: &MixedGraph, k: u64) -> Orientation {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, e)| (e.id, if k >> i & 1 == 1 { Direction::Backward } else { Direction::Forward }))
        .collect()
}
