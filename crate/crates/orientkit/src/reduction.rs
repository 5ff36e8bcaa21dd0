//! Reduction from monotone NAE-3SAT to 2-vertex-connected orientation of
//! mixed graphs.
//!
//! For an instance with clauses `C` the gadget graph has
//!
//! * three hub vertices `p`, `q`, `r` joined by arcs in both directions;
//! * a vertex `z_C` per clause with arcs `p -> z_C -> q`;
//! * for every occurrence of `x` in `C` four vertices `t, u, w, y` with the
//!   arc path `p -> t -> u -> y -> u -> w -> q` and an edge `u - z_C`;
//! * for every variable `x` a cycle of edges through `r` and, for each
//!   clause containing `x` in file order, that occurrence's `y, w, t`.
//!
//! An orientation is 2-vertex-connected exactly when each variable cycle is
//! a circuit, each connector edge `u - z_C` points to `z_C` iff the cycle of
//! its variable runs forward, and every clause vertex has a connector in and
//! a connector out. Reading "forward" as true, these orientations are the
//! not-all-equal assignments.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use crate::connectivity::is_2vertex_connected;
use crate::error::{Error, Result};
use crate::graph::{apply_orientation, Direction, Edge, MixedGraph, Orientation, VertexId};
use crate::io::tokens;
use crate::nae::{nth_assignment, NaeInstance, TruthAssignment, BRUTE_FORCE_MAX_VARS};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetVertices {
    pub t: VertexId,
    pub u: VertexId,
    pub w: VertexId,
    pub y: VertexId,
}

/// The gadget graph with every index needed to talk about its parts.
/// Maps keyed by `(variable, clause)` use 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub instance: NaeInstance,
    pub graph: MixedGraph,
    pub p: VertexId,
    pub q: VertexId,
    pub r: VertexId,
    pub z_of: Vec<VertexId>,
    pub gadget: BTreeMap<(usize, usize), GadgetVertices>,
    /// `r` followed by `y, w, t` of each clause containing the variable.
    pub cycle_seq: Vec<Vec<VertexId>>,
    /// Edge `u - z_C` of each occurrence.
    pub z_edge: BTreeMap<(usize, usize), u32>,
    /// Edge `i` joins `cycle_seq[i]` and `cycle_seq[i + 1]` (cyclically).
    pub cycle_edges: Vec<Vec<u32>>,
}

pub fn reduce(phi: &NaeInstance) -> Result<ReductionArtifact> {
    if let Some(x) = phi.occurrences().iter().position(|&m| m == 0) {
        return Err(Error::UnusedVariable(x + 1));
    }
    let mut g = MixedGraph::new();
    let (p, q, r) = (g.vertex("p"), g.vertex("q"), g.vertex("r"));
    let z_of: Vec<VertexId> = (0..phi.clauses().len()).map(|c| g.vertex(&format!("z_{}", c + 1))).collect();
    let mut gadget = BTreeMap::new();
    for (c, clause) in phi.clauses().iter().enumerate() {
        for &x in clause {
            let name = |kind: &str| format!("{kind}_{}_{}", x + 1, c + 1);
            let vs = GadgetVertices {
                t: g.vertex(&name("t")),
                u: g.vertex(&name("u")),
                w: g.vertex(&name("w")),
                y: g.vertex(&name("y")),
            };
            gadget.insert((x, c), vs);
        }
    }

    for (a, b) in [(p, q), (q, p), (p, r), (r, p), (q, r), (r, q)] {
        g.add_arc(a, b)?;
    }
    for &z in &z_of {
        g.add_arc(p, z)?;
        g.add_arc(z, q)?;
    }
    for (c, clause) in phi.clauses().iter().enumerate() {
        for &x in clause {
            let GadgetVertices { t, u, w, y } = gadget[&(x, c)];
            for (a, b) in [(p, t), (t, u), (u, y), (y, u), (u, w), (w, q)] {
                g.add_arc(a, b)?;
            }
        }
    }

    let mut z_edge = BTreeMap::new();
    for (c, clause) in phi.clauses().iter().enumerate() {
        for &x in clause {
            let id = g.add_edge(gadget[&(x, c)].u, z_of[c])?;
            z_edge.insert((x, c), id);
        }
    }
    let mut cycle_seq = Vec::with_capacity(phi.num_vars());
    let mut cycle_edges = Vec::with_capacity(phi.num_vars());
    for x in 0..phi.num_vars() {
        let mut seq = vec![r];
        for (c, clause) in phi.clauses().iter().enumerate() {
            if clause.contains(&x) {
                let vs = gadget[&(x, c)];
                seq.extend([vs.y, vs.w, vs.t]);
            }
        }
        let len = seq.len();
        let ids = (0..len).map(|i| g.add_edge(seq[i], seq[(i + 1) % len])).collect::<Result<Vec<_>>>()?;
        cycle_seq.push(seq);
        cycle_edges.push(ids);
    }

    Ok(ReductionArtifact { instance: phi.clone(), graph: g, p, q, r, z_of, gadget, cycle_seq, z_edge, cycle_edges })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subject {
    Variable(usize),
    Occurrence { var: usize, clause: usize },
    Clause(usize),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Variable(x) => write!(f, "variable {}", x + 1),
            Subject::Occurrence { var, clause } => write!(f, "variable {} in clause {}", var + 1, clause + 1),
            Subject::Clause(c) => write!(f, "clause {}", c + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// 1, 2 or 3.
    pub condition: u8,
    pub subject: Subject,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma1Report {
    /// Verdicts for conditions 1, 2, 3.
    pub holds: [bool; 3],
    pub violations: Vec<Violation>,
}

impl Lemma1Report {
    pub fn all_hold(&self) -> bool {
        self.holds.iter().all(|&h| h)
    }
}

impl ReductionArtifact {
    fn edge(&self, id: u32) -> &Edge {
        self.graph.edge(id).expect("artifact edge")
    }

    /// `Some(true)` if the variable's cycle is the forward circuit,
    /// `Some(false)` if the backward one, `None` otherwise.
    pub fn cycle_direction(&self, o: &Orientation, x: usize) -> Option<bool> {
        let seq = &self.cycle_seq[x];
        let len = seq.len();
        let mut forward = true;
        let mut backward = true;
        for (i, &id) in self.cycle_edges[x].iter().enumerate() {
            let e = self.edge(id);
            let (a, b) = (seq[i], seq[(i + 1) % len]);
            forward &= o.goes(e, a, b);
            backward &= o.goes(e, b, a);
        }
        match (forward, backward) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        }
    }

    /// Whether the connector of `x` in clause `c` points from `u` to `z`.
    pub fn connector_to_clause(&self, o: &Orientation, x: usize, c: usize) -> bool {
        o.goes(self.edge(self.z_edge[&(x, c)]), self.gadget[&(x, c)].u, self.z_of[c])
    }

    fn check_domain(&self, o: &Orientation) -> Result<()> {
        for (id, _) in o.iter() {
            if self.graph.edge(id).is_none() {
                return Err(Error::UnknownEdge(id));
            }
        }
        match self.graph.edges().iter().find(|e| o.get(e.id).is_none()) {
            Some(e) => Err(Error::MissingEdge(e.id)),
            None => Ok(()),
        }
    }

    /// Orientation with the variable cycles and connectors set from `f`.
    pub fn assignment_to_orientation(&self, f: &[bool]) -> Result<Orientation> {
        let n = self.instance.num_vars();
        if f.len() != n {
            return Err(Error::AssignmentLength { expected: n, got: f.len() });
        }
        let mut o = Orientation::new();
        for (x, &forward) in f.iter().enumerate() {
            let seq = &self.cycle_seq[x];
            for (i, &id) in self.cycle_edges[x].iter().enumerate() {
                let e = self.edge(id);
                let tail = if forward { seq[i] } else { seq[(i + 1) % seq.len()] };
                o.set(id, if e.a == tail { Direction::Forward } else { Direction::Backward });
            }
        }
        for (&(x, c), &id) in &self.z_edge {
            let e = self.edge(id);
            let tail = if f[x] { self.gadget[&(x, c)].u } else { self.z_of[c] };
            o.set(id, if e.a == tail { Direction::Forward } else { Direction::Backward });
        }
        Ok(o)
    }

    /// Reads `x = true` off a forward cycle; fails if some cycle is not a circuit.
    pub fn orientation_to_assignment(&self, o: &Orientation) -> Result<TruthAssignment> {
        self.check_domain(o)?;
        (0..self.instance.num_vars())
            .map(|x| self.cycle_direction(o, x).ok_or(Error::CycleNotCircuit(x + 1)))
            .collect()
    }

    pub fn lemma1_check(&self, o: &Orientation) -> Result<Lemma1Report> {
        self.check_domain(o)?;
        let mut violations = Vec::new();
        let dirs: Vec<Option<bool>> = (0..self.instance.num_vars()).map(|x| self.cycle_direction(o, x)).collect();
        for (x, d) in dirs.iter().enumerate() {
            if d.is_none() {
                violations.push(Violation {
                    condition: 1,
                    subject: Subject::Variable(x),
                    detail: "cycle is not a circuit".into(),
                });
            }
        }
        for &(x, c) in self.z_edge.keys() {
            let to_z = self.connector_to_clause(o, x, c);
            if to_z != (dirs[x] == Some(true)) {
                violations.push(Violation {
                    condition: 2,
                    subject: Subject::Occurrence { var: x, clause: c },
                    detail: format!(
                        "connector points {} the clause but the cycle is {}",
                        if to_z { "into" } else { "out of" },
                        match dirs[x] {
                            Some(true) => "forward",
                            Some(false) => "backward",
                            None => "not a circuit",
                        }
                    ),
                });
            }
        }
        for (c, clause) in self.instance.clauses().iter().enumerate() {
            let into = clause.iter().any(|&x| self.connector_to_clause(o, x, c));
            let out = clause.iter().any(|&x| !self.connector_to_clause(o, x, c));
            if !(into && out) {
                violations.push(Violation {
                    condition: 3,
                    subject: Subject::Clause(c),
                    detail: if into { "no connector leaves z" } else { "no connector enters z" }.into(),
                });
            }
        }
        let holds = [1, 2, 3].map(|k| violations.iter().all(|v| v.condition != k));
        Ok(Lemma1Report { holds, violations })
    }

    /// Orientations obtained from the `2^n` cycle-direction choices
    /// (connectors follow their cycles) that also satisfy the clause
    /// condition, in the lexicographic assignment order.
    pub fn enumerate_lemma1_orientations(&self) -> Result<Lemma1Orientations<'_>> {
        let n = self.instance.num_vars();
        if n > BRUTE_FORCE_MAX_VARS {
            return Err(Error::TooLarge { size: n, limit: BRUTE_FORCE_MAX_VARS });
        }
        Ok(Lemma1Orientations { art: self, next: 0, end: 1u64 << n })
    }

    /// Size of [`Self::enumerate_lemma1_orientations`]; with `verify`, each emitted
    /// orientation is also checked to be 2-vertex-connected.
    pub fn count_lemma1_orientations(&self, verify: bool) -> Result<usize> {
        let mut count = 0;
        for (f, o) in self.enumerate_lemma1_orientations()? {
            if verify && !is_2vertex_connected(&apply_orientation(&self.graph, &o)?) {
                return Err(Error::Unverified(format!(
                    "orientation for assignment {} is not 2-vertex-connected",
                    crate::nae::format_assignment(&f)
                )));
            }
            count += 1;
        }
        Ok(count)
    }

    /// Sidecar index map: `z`, `gadget` and `cycle` lines, 1-based indices.
    pub fn map_text(&self) -> String {
        let g = &self.graph;
        let mut out = String::new();
        for (c, &z) in self.z_of.iter().enumerate() {
            let _ = writeln!(out, "z {} {}", c + 1, g.name(z));
        }
        for (c, clause) in self.instance.clauses().iter().enumerate() {
            for &x in clause {
                let v = self.gadget[&(x, c)];
                let _ = writeln!(
                    out,
                    "gadget {} {} {} {} {} {}",
                    x + 1,
                    c + 1,
                    g.name(v.t),
                    g.name(v.u),
                    g.name(v.w),
                    g.name(v.y)
                );
            }
        }
        for (x, seq) in self.cycle_seq.iter().enumerate() {
            let names: Vec<&str> = seq.iter().map(|&v| g.name(v)).collect();
            let _ = writeln!(out, "cycle {} {}", x + 1, names.join(" "));
        }
        out
    }

    /// Rebuilds an artifact from a gadget graph and its index map.
    pub fn from_map(graph: MixedGraph, map: &str) -> Result<Self> {
        let lookup = |name: &str| graph.id(name).ok_or_else(|| Error::MapMismatch(format!("unknown vertex `{name}`")));
        let num = |lineno: usize, s: &str| -> Result<usize> {
            match s.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(Error::parse(lineno, format!("bad index `{s}`"))),
            }
        };
        let (p, q, r) = (lookup("p")?, lookup("q")?, lookup("r")?);
        let mut z_of: BTreeMap<usize, VertexId> = BTreeMap::new();
        let mut gadget = BTreeMap::new();
        let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut cycles: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for (i, line) in map.lines().enumerate() {
            let lineno = i + 1;
            let Some(toks) = tokens(line) else { continue };
            match toks.as_slice() {
                ["z", c, v] => {
                    z_of.insert(num(lineno, c)?, lookup(v)?);
                }
                ["gadget", x, c, t, u, w, y] => {
                    let (x, c) = (num(lineno, x)?, num(lineno, c)?);
                    let vs = GadgetVertices { t: lookup(t)?, u: lookup(u)?, w: lookup(w)?, y: lookup(y)? };
                    gadget.insert((x, c), vs);
                    members.entry(c).or_default().push(x);
                }
                ["cycle", x, rest @ ..] if !rest.is_empty() => {
                    let seq = rest.iter().map(|v| lookup(v)).collect::<Result<Vec<_>>>()?;
                    cycles.insert(num(lineno, x)?, seq);
                }
                _ => return Err(Error::parse(lineno, format!("unrecognised map line `{}`", line.trim()))),
            }
        }

        let num_clauses = z_of.len();
        if z_of.keys().copied().ne(0..num_clauses) || members.keys().copied().ne(0..num_clauses) {
            return Err(Error::MapMismatch("clause indices are not 1..m with a gadget for each".into()));
        }
        let num_vars = cycles.len();
        if cycles.keys().copied().ne(0..num_vars) {
            return Err(Error::MapMismatch("variable indices are not 1..n".into()));
        }
        let mut clauses = Vec::with_capacity(num_clauses);
        for (c, vars) in &members {
            let [a, b, d] = vars.as_slice() else {
                return Err(Error::MapMismatch(format!("clause {} has {} gadgets", c + 1, vars.len())));
            };
            clauses.push([*a, *b, *d]);
        }
        let instance = NaeInstance::new(num_vars, clauses).map_err(|e| Error::MapMismatch(e.to_string()))?;

        let mut taken = BTreeSet::new();
        let mut find_edge = |a: VertexId, b: VertexId| -> Result<u32> {
            let e = graph
                .edges()
                .iter()
                .find(|e| !taken.contains(&e.id) && ((e.a, e.b) == (a, b) || (e.a, e.b) == (b, a)))
                .ok_or_else(|| {
                    Error::MapMismatch(format!("no edge between {} and {}", graph.name(a), graph.name(b)))
                })?;
            taken.insert(e.id);
            Ok(e.id)
        };
        let z_of: Vec<VertexId> = z_of.into_values().collect();
        let mut z_edge = BTreeMap::new();
        for (&(x, c), vs) in &gadget {
            z_edge.insert((x, c), find_edge(vs.u, z_of[c])?);
        }
        let cycle_seq: Vec<Vec<VertexId>> = cycles.into_values().collect();
        let mut cycle_edges = Vec::with_capacity(num_vars);
        for seq in &cycle_seq {
            let len = seq.len();
            let ids = (0..len).map(|i| find_edge(seq[i], seq[(i + 1) % len])).collect::<Result<Vec<_>>>()?;
            cycle_edges.push(ids);
        }
        if taken.len() != graph.edges().len() {
            return Err(Error::MapMismatch("graph has edges the map does not account for".into()));
        }
        Ok(ReductionArtifact { instance, graph, p, q, r, z_of, gadget, cycle_seq, z_edge, cycle_edges })
    }
}

pub struct Lemma1Orientations<'a> {
    art: &'a ReductionArtifact,
    next: u64,
    end: u64,
}

impl Iterator for Lemma1Orientations<'_> {
    type Item = (TruthAssignment, Orientation);

    fn next(&mut self) -> Option<Self::Item> {
        while self.next < self.end {
            let f = nth_assignment(self.art.instance.num_vars(), self.next);
            self.next += 1;
            let o = self.art.assignment_to_orientation(&f).expect("length matches");
            let report = self.art.lemma1_check(&o).expect("total orientation");
            if report.holds[2] {
                return Some((f, o));
            }
        }
        None
    }
}
