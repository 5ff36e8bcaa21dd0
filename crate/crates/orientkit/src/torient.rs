//! 2T-connectivity: a digraph is 2T-connected when it is 2-arc-connected and
//! stays strongly connected after deleting any single vertex of `T`.
//!
//! A graph `G` has a 2T-connected orientation exactly when it is
//! 4-edge-connected and `G - v` is 2-edge-connected for every `v` in `T`
//! ([`huoh_predicate`]). [`construct_2t_orientation`] realises such an
//! orientation: every vertex outside `T` is blown up into a double cycle on
//! `max(3, ceil(d(v)/2))` vertices, each cycle vertex receiving at most two of
//! the original edges; the resulting graph `H` satisfies the 2-vertex
//! orientation condition at every vertex, so the exact solver orients it
//! 2-vertex-connected; contracting every cycle back to its vertex gives the
//! orientation of `G`, which is re-verified before it is returned.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::connectivity::{arc_connectivity, lift_witness, Failure, Verdict};
use crate::error::{Error, Result};
use crate::flow::Adjacency;
use crate::graph::{apply_orientation, blow_up, double_cycle_named, Digraph, Direction, Graph, LinkId, Orientation, VertexId};
use crate::search::{exact_orientation_search, thomassen_predicate, Status, Target};

fn check_subset(n: usize, t: &BTreeSet<VertexId>) -> Result<()> {
    if t.iter().any(|v| v.index() >= n) {
        Err(Error::NotASubset)
    } else {
        Ok(())
    }
}

pub fn is_2t_connected(d: &Digraph, t: &BTreeSet<VertexId>) -> Result<Verdict> {
    check_subset(d.vertex_count(), t)?;
    let cut = arc_connectivity(d);
    if !cut.value.at_least(2) {
        return Ok(Err(Failure::Cut(cut.witness.expect("finite"))));
    }
    let pairs = crate::connectivity::arc_pairs(d);
    let adj = Adjacency::new(d.vertex_count(), &pairs);
    for &v in t {
        if !adj.strongly_connected(Some(v.index())) {
            let rest = arc_connectivity(&d.without_vertex(v));
            return Ok(Err(Failure::Vertex { vertex: v, cut: rest.witness.map(|w| lift_witness(w, v)) }));
        }
    }
    Ok(Ok(()))
}

/// `λ(G) >= 4` and `λ(G - v) >= 2` for all `v` in `t`.
pub fn huoh_predicate(g: &Graph, t: &BTreeSet<VertexId>) -> Result<Verdict> {
    check_subset(g.vertex_count(), t)?;
    Ok(crate::search::four_and_two_after_deleting(g, t))
}

/// Correspondence between the vertices of `G` outside `T` and their double
/// cycles in the blown-up graph `H`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlowupMap {
    /// Vertex of `G` -> its cycle vertices in `H`, in cycle order.
    pub cycle_of: BTreeMap<VertexId, Vec<VertexId>>,
    /// Edge id -> (endpoint in `G`, replacement endpoint in `H`) for every
    /// end of the edge that was moved.
    pub reattach: BTreeMap<u32, Vec<(VertexId, VertexId)>>,
    /// Vertex of `G` -> `max(3, ceil(d_G(v)/2))`.
    pub size_of: BTreeMap<VertexId, usize>,
}

impl BlowupMap {
    /// Line-oriented sidecar: `blowup V SIZE C1 C2 ...` and
    /// `reattach EDGEID V C` lines, names from `g` and `h`.
    pub fn to_text(&self, g: &Graph, h: &Graph) -> String {
        let mut out = String::new();
        for (v, cycle) in &self.cycle_of {
            let names: Vec<&str> = cycle.iter().map(|&c| h.name(c)).collect();
            let _ = writeln!(out, "blowup {} {} {}", g.name(*v), self.size_of[v], names.join(" "));
        }
        for (id, ends) in &self.reattach {
            for (v, c) in ends {
                let _ = writeln!(out, "reattach {id} {} {}", g.name(*v), h.name(*c));
            }
        }
        out
    }
}

fn fresh_name(base: &str, taken: impl Fn(&str) -> bool) -> String {
    let mut name = base.to_string();
    while taken(&name) {
        name.push('\'');
    }
    name
}

/// Vertex, cycle names, and `(edge id, cycle slot)` per incident edge.
type Deal = (VertexId, Vec<String>, Vec<(u32, usize)>);

/// Blows up every vertex outside `t` into a double cycle. Incident edges
/// are sorted by id and dealt two per cycle vertex in cycle order; an edge
/// between two blown-up vertices is reattached at both ends.
pub fn build_blowup(g: &Graph, t: &BTreeSet<VertexId>) -> Result<(Graph, BlowupMap)> {
    check_subset(g.vertex_count(), t)?;
    let mut h = g.clone();
    let mut plan: Vec<Deal> = Vec::new();
    for v in g.vertices().filter(|v| !t.contains(v)) {
        let degree = g.edge_degree(v);
        let size = std::cmp::max(3, degree.div_ceil(2));
        let vname = g.name(v).to_string();
        let cycle: Vec<String> = (1..=size)
            .map(|i| fresh_name(&format!("{vname}~{i}"), |s| g.id(s).is_some() || h.id(s).is_some()))
            .collect();
        let here = h.id(&vname).expect("not yet blown up");
        let mut incident: Vec<u32> = h.edges().iter().filter(|e| e.touches(here)).map(|e| e.id).collect();
        incident.sort_unstable();
        let attach: BTreeMap<u32, VertexId> =
            incident.iter().enumerate().map(|(j, &id)| (id, VertexId((j / 2) as u32))).collect();
        let replacement = double_cycle_named(&cycle)?;
        h = blow_up(&h, here, &replacement, &attach)?;
        plan.push((v, cycle, incident.iter().enumerate().map(|(j, &id)| (id, j / 2)).collect()));
    }

    let mut map = BlowupMap::default();
    for (v, cycle, attached) in plan {
        let ids: Vec<VertexId> = cycle.iter().map(|n| h.id(n).expect("cycle vertex")).collect();
        for (edge, slot) in attached {
            map.reattach.entry(edge).or_default().push((v, ids[slot]));
        }
        map.size_of.insert(v, ids.len());
        map.cycle_of.insert(v, ids);
    }
    Ok((h, map))
}

/// `H` is 4-edge-connected and `H - w` is 2-edge-connected for every `w`.
pub fn claim1_check(h: &Graph) -> Verdict {
    thomassen_predicate(h)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TConstruction {
    pub status: Status,
    pub orientation: Option<Orientation>,
    /// Set when the characterisation fails.
    pub failure: Option<Failure>,
    /// The blown-up graph and its map, when one was built.
    pub blowup: Option<(Graph, BlowupMap)>,
    pub nodes_explored: u64,
}

pub fn construct_2t_orientation(g: &Graph, t: &BTreeSet<VertexId>, budget: u64) -> Result<TConstruction> {
    if let Err(failure) = huoh_predicate(g, t)? {
        return Ok(TConstruction {
            status: Status::None,
            orientation: None,
            failure: Some(failure),
            blowup: None,
            nodes_explored: 0,
        });
    }

    // Nothing to blow up: search G directly. For |V| >= 3 this target is
    // 2-vertex-connectivity; on one or two vertices only the 2T form holds.
    if t.len() == g.vertex_count() {
        let out = exact_orientation_search(g, &Target::TwoT(t.clone()), budget)?;
        return Ok(TConstruction {
            status: out.status,
            orientation: out.orientation,
            failure: None,
            blowup: None,
            nodes_explored: out.nodes_explored,
        });
    }

    let (h, map) = build_blowup(g, t)?;
    let out = exact_orientation_search(&h, &Target::TwoVertex, budget)?;
    let Some(h_orientation) = out.orientation.filter(|_| out.status == Status::Found) else {
        return Ok(TConstruction {
            status: out.status,
            orientation: None,
            failure: None,
            blowup: Some((h, map)),
            nodes_explored: out.nodes_explored,
        });
    };

    let mut d = apply_orientation(&h, &h_orientation)?;
    for (&v, cycle) in &map.cycle_of {
        let names: Vec<&str> = cycle.iter().map(|&c| h.name(c)).collect();
        let set = d.vertex_set(&names)?;
        d = d.contract(&set, g.name(v))?;
    }
    let mut orientation = Orientation::new();
    for arc in d.arcs() {
        let LinkId::Edge(id) = arc.id else { continue };
        let Some(e) = g.edge(id) else { continue };
        let dir = if d.name(arc.tail) == g.name(e.a) { Direction::Forward } else { Direction::Backward };
        orientation.set(id, dir);
    }
    let oriented = apply_orientation(g, &orientation)?;
    if let Err(f) = is_2t_connected(&oriented, t)? {
        return Err(Error::Unverified(f.describe(g)));
    }
    Ok(TConstruction {
        status: Status::Found,
        orientation: Some(orientation),
        failure: None,
        blowup: Some((h, map)),
        nodes_explored: out.nodes_explored,
    })
}
