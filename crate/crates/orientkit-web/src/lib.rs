//! Browser bindings: every export takes text inputs and returns a JSON
//! string, `{"ok": false, "error": ...}` on failure.

use std::collections::BTreeSet;

use orientkit::connectivity::is_2vertex_connected;
use orientkit::graph::{apply_orientation, Graph, MixedGraph, Orientation, VertexId};
use orientkit::io::parse_mg;
use orientkit::nae::{format_assignment, nae_brute_force, parse_assignment, parse_mnae};
use orientkit::reduction::reduce;
use orientkit::search::{exact_orientation_search, Status, Target};
use orientkit::torient::construct_2t_orientation;
use orientkit::Error;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn drawable(g: &MixedGraph, o: Option<&Orientation>) -> Value {
    let mut links = Vec::new();
    for a in g.arcs() {
        links.push(json!({"from": a.tail.0, "to": a.head.0, "kind": "arc"}));
    }
    for e in g.edges() {
        match o.and_then(|o| o.ends(e)) {
            Some((t, h)) => links.push(json!({"from": t.0, "to": h.0, "kind": "oriented", "edge": e.id})),
            None => links.push(json!({"from": e.a.0, "to": e.b.0, "kind": "edge", "edge": e.id})),
        }
    }
    json!({"vertices": g.names(), "links": links})
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Found => "found",
        Status::None => "none",
        Status::Unknown => "unknown",
    }
}

fn t_set(g: &MixedGraph, csv: &str) -> Result<BTreeSet<VertexId>, Error> {
    g.vertex_set(csv.split(',').map(str::trim).filter(|s| !s.is_empty()))
}

fn fail(e: impl ToString) -> Value {
    json!({"ok": false, "error": e.to_string()})
}

/// Gadget graph of an instance, oriented by `assignment` (or by the first
/// feasible assignment when `assignment` is blank).
pub fn reduce_value(nae_text: &str, assignment: &str) -> Value {
    let run = || -> Result<Value, Error> {
        let phi = parse_mnae(nae_text)?;
        let art = reduce(&phi)?;
        let f = if assignment.trim().is_empty() {
            nae_brute_force(&phi)?.unwrap_or_else(|| vec![true; phi.num_vars()])
        } else {
            parse_assignment(assignment)?
        };
        let o = art.assignment_to_orientation(&f)?;
        let report = art.lemma1_check(&o)?;
        let two_vc = is_2vertex_connected(&apply_orientation(&art.graph, &o)?);
        let violations: Vec<String> =
            report.violations.iter().map(|v| format!("({}) {}: {}", v.condition, v.subject, v.detail)).collect();
        Ok(json!({
            "ok": true,
            "counts": {
                "vertices": art.graph.vertex_count(),
                "arcs": art.graph.arcs().len(),
                "edges": art.graph.edges().len(),
            },
            "assignment": format_assignment(&f),
            "feasible": phi.is_feasible(&f),
            "lemma1": report.holds,
            "violations": violations,
            "twoVertexConnected": two_vc,
            "graph": drawable(&art.graph, Some(&o)),
        }))
    };
    run().unwrap_or_else(fail)
}

/// Exact search for an orientation of a `.mg` graph meeting `target`
/// (`strong`, `2arc`, `2vc` or `2t`).
pub fn orient_value(mg_text: &str, target: &str, t_csv: &str, budget: u32) -> Value {
    let run = || -> Result<Value, Error> {
        let g = parse_mg(mg_text)?;
        let target = match target {
            "strong" => Target::Strong,
            "2arc" => Target::TwoArc,
            "2vc" => Target::TwoVertex,
            "2t" => Target::TwoT(t_set(&g, t_csv)?),
            other => return Err(Error::BadCorpus(format!("unknown target `{other}`"))),
        };
        let out = exact_orientation_search(&g, &target, u64::from(budget.max(1)))?;
        Ok(json!({
            "ok": true,
            "status": status_name(out.status),
            "nodes": out.nodes_explored,
            "graph": drawable(&g, out.orientation.as_ref()),
        }))
    };
    run().unwrap_or_else(fail)
}

/// The blow-up/contract construction for an undirected `.mg` graph.
pub fn tconnect_value(mg_text: &str, t_csv: &str, budget: u32) -> Value {
    let run = || -> Result<Value, Error> {
        let g = Graph::try_from(parse_mg(mg_text)?)?;
        let t = t_set(&g, t_csv)?;
        let c = construct_2t_orientation(&g, &t, u64::from(budget.max(1)))?;
        let blowup = c.blowup.as_ref().map(|(h, _)| json!({"vertices": h.vertex_count(), "edges": h.edges().len()}));
        Ok(json!({
            "ok": true,
            "status": status_name(c.status),
            "witness": c.failure.map(|f| f.describe(&g)),
            "blowup": blowup,
            "nodes": c.nodes_explored,
            "graph": drawable(&g, c.orientation.as_ref()),
        }))
    };
    run().unwrap_or_else(fail)
}

#[wasm_bindgen]
pub fn reduce_nae(nae_text: &str, assignment: &str) -> String {
    reduce_value(nae_text, assignment).to_string()
}

#[wasm_bindgen]
pub fn orient(mg_text: &str, target: &str, t_csv: &str, budget: u32) -> String {
    orient_value(mg_text, target, t_csv, budget).to_string()
}

#[wasm_bindgen]
pub fn tconnect(mg_text: &str, t_csv: &str, budget: u32) -> String {
    tconnect_value(mg_text, t_csv, budget).to_string()
}
