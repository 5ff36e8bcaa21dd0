//! Seeded corpora and the equivalence harness.
//!
//! Every trial draws its input from its own ChaCha stream (`seed`, trial
//! index), so a report depends only on `(theorem, spec, budget)` and not on
//! how trials are scheduled. Even-numbered trials come from the base
//! filter, odd-numbered ones from the theorem's positive-side filter, so
//! both sides of each equivalence get exercised.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{edge_connectivity, is_2vc_in, is_2vertex_connected, is_strongly_connected};
use crate::error::{Error, Result};
use crate::graph::{apply_orientation, Digraph, Graph, MixedGraph, VertexId};
use crate::io::write_mg;
use crate::nae::{fano_instance, format_assignment, nae_brute_force, NaeInstance};
use crate::reduction::reduce;
use crate::search::{bt_predicate, exact_orientation_search, robbins_orientation, thomassen_predicate, Status, Target};
use crate::torient::{build_blowup, claim1_check, construct_2t_orientation, huoh_predicate, is_2t_connected};

/// Consecutive rejected draws after which a filter counts as starved.
pub const STARVATION_WINDOW: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    None,
    Connected,
    Lambda2,
    Lambda4,
    Thomassen,
    /// The T-aware predicate, evaluated with the sample's own T.
    Huoh,
}

impl Filter {
    pub fn name(self) -> &'static str {
        match self {
            Filter::None => "none",
            Filter::Connected => "connected",
            Filter::Lambda2 => "lambda>=2",
            Filter::Lambda4 => "lambda>=4",
            Filter::Thomassen => "thomassen",
            Filter::Huoh => "huoh",
        }
    }

    fn accepts(self, g: &Graph, t: &BTreeSet<VertexId>) -> bool {
        match self {
            Filter::None => true,
            Filter::Connected => edge_connectivity(g).value.at_least(1),
            Filter::Lambda2 => edge_connectivity(g).value.at_least(2),
            Filter::Lambda4 => edge_connectivity(g).value.at_least(4),
            Filter::Thomassen => thomassen_predicate(g).is_ok(),
            Filter::Huoh => matches!(huoh_predicate(g, t), Ok(Ok(()))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub count: usize,
    /// Inclusive vertex-count range (variables for NAE corpora).
    pub n_range: (usize, usize),
    /// Inclusive edge-count range (clauses, arcs or links for other corpora).
    pub m_range: (usize, usize),
    pub seed: u64,
    pub filter: Filter,
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        let (n0, n1) = self.n_range;
        let (m0, m1) = self.m_range;
        if self.count == 0 {
            return Err(Error::BadCorpus("count must be at least 1".into()));
        }
        if n0 > n1 || m0 > m1 {
            return Err(Error::BadCorpus("range minimum exceeds maximum".into()));
        }
        if n0 == 0 {
            return Err(Error::BadCorpus("graphs need at least one vertex".into()));
        }
        if m1 > 0 && n0 < 2 {
            return Err(Error::BadCorpus("edges need at least two vertices".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub index: usize,
    pub graph: Graph,
    /// Each vertex independently with probability 1/2.
    pub t: BTreeSet<VertexId>,
    /// Draws consumed, including the accepted one.
    pub draws: u64,
}

fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn distinct_pair(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize) {
    let a = rng.gen_range(0..n);
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a, b)
}

fn vertex_names(n: usize) -> MixedGraph {
    MixedGraph::with_vertices((1..=n).map(|i| format!("v{i}"))).expect("distinct names")
}

fn draw_graph(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> (Graph, BTreeSet<VertexId>) {
    let n = rng.gen_range(spec.n_range.0..=spec.n_range.1);
    let m = rng.gen_range(spec.m_range.0..=spec.m_range.1);
    let mut g = vertex_names(n);
    for _ in 0..m {
        let (a, b) = distinct_pair(rng, n);
        g.add_edge(VertexId(a as u32), VertexId(b as u32)).expect("loop-free");
    }
    let t = (0..n).filter(|_| rng.gen_bool(0.5)).map(|i| VertexId(i as u32)).collect();
    (Graph::try_from(g).expect("edges only"), t)
}

/// Rejection-samples until `accept` holds or the window is exhausted.
fn rejection<T>(
    rng: &mut ChaCha8Rng,
    mut draw: impl FnMut(&mut ChaCha8Rng) -> T,
    mut accept: impl FnMut(&T) -> bool,
) -> Result<(T, u64)> {
    let mut draws = 0;
    loop {
        let x = draw(rng);
        draws += 1;
        if accept(&x) {
            return Ok((x, draws));
        }
        if draws >= STARVATION_WINDOW {
            return Err(Error::FilterStarved(draws));
        }
    }
}

/// Sample `index` of the corpus.
pub fn sample(spec: &CorpusSpec, index: usize) -> Result<Sample> {
    spec.validate()?;
    let mut rng = trial_rng(spec.seed, index);
    let ((graph, t), draws) = rejection(&mut rng, |r| draw_graph(r, spec), |(g, t)| spec.filter.accepts(g, t))?;
    Ok(Sample { index, graph, t, draws })
}

/// The corpus as a lazy stream: uniform loop-free multigraphs, endpoint
/// pairs drawn with replacement, rejected against the filter.
pub fn gen_graph(spec: &CorpusSpec) -> Result<impl Iterator<Item = Result<Sample>> + '_> {
    spec.validate()?;
    Ok((0..spec.count).map(move |i| sample(spec, i)))
}

fn draw_digraph(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> Digraph {
    let n = rng.gen_range(spec.n_range.0..=spec.n_range.1);
    let m = rng.gen_range(spec.m_range.0..=spec.m_range.1);
    let mut g = vertex_names(n);
    for _ in 0..m {
        let (a, b) = distinct_pair(rng, n);
        g.add_arc(VertexId(a as u32), VertexId(b as u32)).expect("loop-free");
    }
    Digraph::try_from(g).expect("arcs only")
}

fn draw_mixed(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> MixedGraph {
    let n = rng.gen_range(spec.n_range.0..=spec.n_range.1);
    let m = rng.gen_range(spec.m_range.0..=spec.m_range.1);
    let mut g = vertex_names(n);
    for _ in 0..m {
        let (a, b) = distinct_pair(rng, n);
        let (a, b) = (VertexId(a as u32), VertexId(b as u32));
        if rng.gen_bool(0.5) {
            g.add_arc(a, b).expect("loop-free");
        } else {
            g.add_edge(a, b).expect("loop-free");
        }
    }
    g
}

/// Instance over the variables that occur, renumbered in order.
fn compact(clauses: &[[usize; 3]]) -> NaeInstance {
    let mut used: Vec<usize> = clauses.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    let renumber = |x: usize| used.binary_search(&x).expect("used variable");
    let clauses = clauses.iter().map(|c| c.map(renumber)).collect();
    NaeInstance::new(used.len(), clauses).expect("distinct in-range variables")
}

/// Random clauses over `n` variables, compacted.
fn draw_instance(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> NaeInstance {
    let n = rng.gen_range(spec.n_range.0..=spec.n_range.1);
    let m = rng.gen_range(spec.m_range.0..=spec.m_range.1);
    let clauses: Vec<[usize; 3]> = (0..m)
        .map(|_| {
            let picked = rand::seq::index::sample(rng, n, 3);
            [picked.index(0), picked.index(1), picked.index(2)]
        })
        .collect();
    compact(&clauses)
}

/// A Fano plane on randomly chosen variable names plus random extra
/// clauses; infeasible by construction.
fn draw_fano_superset(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> NaeInstance {
    let n = rng.gen_range(spec.n_range.0..=spec.n_range.1).max(7);
    let extra = rng.gen_range(0..=spec.m_range.1.saturating_sub(7));
    let relabel = rand::seq::index::sample(rng, n, 7);
    let mut clauses: Vec<[usize; 3]> = fano_instance().clauses().iter().map(|c| c.map(|x| relabel.index(x))).collect();
    for _ in 0..extra {
        let picked = rand::seq::index::sample(rng, n, 3);
        clauses.push([picked.index(0), picked.index(1), picked.index(2)]);
    }
    compact(&clauses)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Strong orientation iff 2-edge-connected.
    Robbins,
    /// 2-arc-connected orientation iff 4-edge-connected.
    NashWilliams2,
    /// 2-vertex-connected orientation iff 4-edge-connected with every
    /// vertex-deleted subgraph 2-edge-connected.
    Thomassen,
    /// NAE-feasibility iff the gadget graph has a 2-vertex-connected orientation.
    Lemma2,
    /// 2T-connected orientation iff the T-aware predicate holds.
    Theorem8,
    /// Exact strong-orientation search against the literal cut inequality.
    BtDivergence,
    /// Deletion form against disjoint-paths form of 2-vertex-connectivity.
    Menger,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::Robbins,
        Theorem::NashWilliams2,
        Theorem::Thomassen,
        Theorem::Lemma2,
        Theorem::Theorem8,
        Theorem::BtDivergence,
        Theorem::Menger,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Robbins => "robbins",
            Theorem::NashWilliams2 => "nash-williams-2",
            Theorem::Thomassen => "thomassen",
            Theorem::Lemma2 => "lemma2",
            Theorem::Theorem8 => "theorem8",
            Theorem::BtDivergence => "bt-divergence",
            Theorem::Menger => "menger",
        }
    }

    /// Size defaults: `(min n, max n, min m, max m)`.
    fn default_sizes(self) -> (usize, usize, usize, usize) {
        match self {
            Theorem::Robbins => (2, 8, 1, 16),
            Theorem::NashWilliams2 => (2, 6, 1, 14),
            Theorem::Thomassen => (3, 6, 3, 14),
            Theorem::Theorem8 => (2, 6, 1, 14),
            Theorem::Lemma2 => (3, 8, 1, 10),
            Theorem::BtDivergence => (2, 4, 1, 6),
            Theorem::Menger => (3, 7, 3, 24),
        }
    }

    fn base_filter(self) -> Filter {
        match self {
            Theorem::Robbins => Filter::Connected,
            _ => Filter::None,
        }
    }

    /// Filter for odd-numbered trials; `None` means "same as even".
    fn positive_filter(self) -> Filter {
        match self {
            Theorem::Robbins => Filter::Lambda2,
            Theorem::NashWilliams2 => Filter::Lambda4,
            Theorem::Thomassen => Filter::Thomassen,
            Theorem::Theorem8 => Filter::Huoh,
            _ => Filter::None,
        }
    }

    /// Corpus used by `verify`, with optional overrides of the maxima.
    pub fn corpus(self, trials: usize, seed: u64, max_n: Option<usize>, max_m: Option<usize>) -> CorpusSpec {
        let (n0, n1, m0, m1) = self.default_sizes();
        let n1 = max_n.unwrap_or(n1).max(n0);
        let m1 = max_m.unwrap_or(m1).max(m0);
        CorpusSpec { count: trials, n_range: (n0, n1), m_range: (m0, m1), seed, filter: self.base_filter() }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Theorem::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
            format!("unknown theorem `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// A trial whose two sides did not match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub trial: usize,
    /// One-line serialisation of the input.
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug)]
pub struct TrialReport {
    pub theorem: Theorem,
    pub spec: CorpusSpec,
    pub budget: u64,
    pub trials: usize,
    pub agreements: usize,
    pub disagreements: Vec<Mismatch>,
    /// Trials where the search ran out of budget.
    pub unknowns: Vec<usize>,
    /// Logged predicate-versus-search mismatches on the divergence channel.
    pub divergences: Vec<Mismatch>,
    pub draws: u64,
    /// Not part of [`TrialReport::render`], which must be reproducible.
    pub wall_time: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportVerdict {
    Pass,
    Fail,
    Unknown,
}

impl TrialReport {
    pub fn verdict(&self) -> ReportVerdict {
        if !self.disagreements.is_empty() {
            ReportVerdict::Fail
        } else if !self.unknowns.is_empty() {
            ReportVerdict::Unknown
        } else {
            ReportVerdict::Pass
        }
    }

    /// Human-readable summary followed by `key=value` lines for machines.
    pub fn render(&self) -> String {
        let verdict = match self.verdict() {
            ReportVerdict::Pass => "pass",
            ReportVerdict::Fail => "fail",
            ReportVerdict::Unknown => "unknown",
        };
        let s = &self.spec;
        let mut out = String::new();
        let _ = writeln!(out, "theorem {}: {verdict}", self.theorem);
        let _ = writeln!(
            out,
            "  seed {}, {} trials, n in {}..={}, m in {}..={}, budget {}",
            s.seed, self.trials, s.n_range.0, s.n_range.1, s.m_range.0, s.m_range.1, self.budget
        );
        let _ = writeln!(
            out,
            "  {} agreements, {} disagreements, {} unknown, {} divergences, {} draws",
            self.agreements,
            self.disagreements.len(),
            self.unknowns.len(),
            self.divergences.len(),
            self.draws
        );
        let _ = writeln!(
            out,
            "report theorem={} seed={} trials={} agreements={} disagreements={} unknowns={} divergences={} draws={} budget={} verdict={verdict}",
            self.theorem,
            s.seed,
            self.trials,
            self.agreements,
            self.disagreements.len(),
            self.unknowns.len(),
            self.divergences.len(),
            self.draws,
            self.budget
        );
        for (tag, list) in [("disagreement", &self.disagreements), ("divergence", &self.divergences)] {
            for m in list {
                let _ = writeln!(
                    out,
                    "{tag} trial={} expected=\"{}\" got=\"{}\" input=\"{}\"",
                    m.trial, m.expected, m.got, m.input
                );
            }
        }
        for t in &self.unknowns {
            let _ = writeln!(out, "unknown trial={t}");
        }
        out
    }
}

enum Outcome {
    Agree,
    Disagree { expected: String, got: String },
    Unknown,
    Diverge { expected: String, got: String },
}

struct Trial {
    input: String,
    draws: u64,
    outcome: Outcome,
}

fn one_line(g: &MixedGraph) -> String {
    write_mg(g).lines().collect::<Vec<_>>().join("; ")
}

fn with_t(g: &MixedGraph, t: &BTreeSet<VertexId>) -> String {
    let names: Vec<&str> = t.iter().map(|&v| g.name(v)).collect();
    format!("{}; T={{{}}}", one_line(g), names.join(","))
}

fn disagree(expected: impl Into<String>, got: impl Into<String>) -> Outcome {
    Outcome::Disagree { expected: expected.into(), got: got.into() }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Found => "found",
        Status::None => "none",
        Status::Unknown => "unknown",
    }
}

/// Compares a predicate with a search outcome; a found orientation must
/// also pass `check`.
fn compare(predicate: bool, label: &str, status: Status, check: impl FnOnce() -> Result<bool>) -> Result<Outcome> {
    let expected = if predicate { "found" } else { "none" };
    Ok(match status {
        Status::Unknown => Outcome::Unknown,
        Status::Found if !check()? => disagree(expected, format!("found orientation failing {label}")),
        s if (s == Status::Found) == predicate => Outcome::Agree,
        s => disagree(expected, status_word(s)),
    })
}

fn robbins_trial(g: &Graph) -> Result<Outcome> {
    let lambda = edge_connectivity(g).value;
    Ok(match robbins_orientation(g) {
        Ok(o) => {
            if !is_strongly_connected(&apply_orientation(g, &o)?) {
                disagree("strong orientation", "orientation not strongly connected")
            } else if !lambda.at_least(2) {
                disagree(format!("none (lambda={lambda})"), "found")
            } else {
                Outcome::Agree
            }
        }
        Err(w) => {
            if lambda.at_least(2) {
                disagree(format!("found (lambda={lambda})"), format!("none, {}", w.describe(g)))
            } else if !w.is_valid_for(g) || w.value >= 2 {
                disagree("cut with fewer than 2 edges", format!("witness {}", w.describe(g)))
            } else {
                Outcome::Agree
            }
        }
    })
}

fn search_trial(g: &Graph, target: Target, predicate: bool, budget: u64) -> Result<Outcome> {
    let out = exact_orientation_search(g, &target, budget)?;
    compare(predicate, target.name(), out.status, || {
        let o = out.orientation.as_ref().expect("found carries an orientation");
        Ok(target.holds(&apply_orientation(g, o)?))
    })
}

fn theorem8_trial(g: &Graph, t: &BTreeSet<VertexId>, budget: u64) -> Result<Outcome> {
    let predicate = huoh_predicate(g, t)?.is_ok();
    if predicate {
        let (h, _) = build_blowup(g, t)?;
        if let Err(f) = claim1_check(&h) {
            return Ok(disagree("blow-up satisfies claim 1", f.describe(&h)));
        }
    }
    let c = match construct_2t_orientation(g, t, budget) {
        Err(Error::Unverified(msg)) => return Ok(disagree("verified orientation", msg)),
        other => other?,
    };
    compare(predicate, "2t", c.status, || {
        let o = c.orientation.as_ref().expect("found carries an orientation");
        Ok(is_2t_connected(&apply_orientation(g, o)?, t)?.is_ok())
    })
}

fn lemma2_trial(phi: &NaeInstance) -> Result<Outcome> {
    let art = reduce(phi)?;
    let brute = nae_brute_force(phi)?;
    let count = art.count_lemma1_orientations(true)?;
    if brute.is_some() != (count > 0) {
        return Ok(disagree(
            if brute.is_some() { "feasible" } else { "infeasible" },
            format!("{count} gadget orientations"),
        ));
    }
    if let Some(f) = brute {
        let o = art.assignment_to_orientation(&f)?;
        if !is_2vertex_connected(&apply_orientation(&art.graph, &o)?) {
            return Ok(disagree("2-vertex-connected embedding", format!("{} embeds to a failing orientation", format_assignment(&f))));
        }
        let back = art.orientation_to_assignment(&o)?;
        if back != f {
            return Ok(disagree(format_assignment(&f), format_assignment(&back)));
        }
    }
    Ok(Outcome::Agree)
}

fn bt_trial(m: &MixedGraph, budget: u64) -> Result<Outcome> {
    let out = exact_orientation_search(m, &Target::Strong, budget)?;
    let bt = bt_predicate(m)?;
    if out.status == Status::Unknown {
        return Ok(Outcome::Unknown);
    }
    if out.status == Status::Found {
        let o = out.orientation.as_ref().expect("found carries an orientation");
        if !is_strongly_connected(&apply_orientation(m, o)?) {
            return Ok(disagree("strong orientation", "found orientation not strongly connected"));
        }
    }
    if (out.status == Status::Found) == bt.holds {
        return Ok(Outcome::Agree);
    }
    let got = match &bt.violating {
        Some(x) => {
            let names: Vec<&str> = x.iter().map(|&v| m.name(v)).collect();
            format!("predicate false, X={{{}}}", names.join(","))
        }
        None => "predicate true".to_string(),
    };
    Ok(Outcome::Diverge { expected: format!("search {}", status_word(out.status)), got })
}

fn menger_trial(d: &Digraph) -> Result<Outcome> {
    let deletion = is_2vertex_connected(d);
    let paths = is_2vc_in(d, &d.vertices().collect())?;
    Ok(if deletion == paths {
        Outcome::Agree
    } else {
        disagree(format!("deletion form {deletion}"), format!("paths form {paths}"))
    })
}

/// The canonical divergence instance: arc `u -> v` plus edge `u - v`.
pub fn bt_canonical_instance() -> MixedGraph {
    let mut m = MixedGraph::new();
    m.add_arc_named("u", "v").expect("distinct");
    m.add_edge_named("u", "v").expect("distinct");
    m
}

fn run_trial(theorem: Theorem, spec: &CorpusSpec, budget: u64, i: usize) -> Result<Trial> {
    let filter = if i % 2 == 1 { theorem.positive_filter() } else { spec.filter };
    let filtered = CorpusSpec { filter, ..spec.clone() };
    let mut rng = trial_rng(spec.seed, i);
    let graph_sample = |f: fn(&Graph, &BTreeSet<VertexId>, u64) -> Result<Outcome>| -> Result<Trial> {
        let s = sample(&filtered, i)?;
        Ok(Trial { input: with_t(&s.graph, &s.t), draws: s.draws, outcome: f(&s.graph, &s.t, budget)? })
    };
    match theorem {
        Theorem::Robbins => graph_sample(|g, _, _| robbins_trial(g)),
        Theorem::NashWilliams2 => {
            graph_sample(|g, _, b| search_trial(g, Target::TwoArc, edge_connectivity(g).value.at_least(4), b))
        }
        Theorem::Thomassen => {
            graph_sample(|g, _, b| search_trial(g, Target::TwoVertex, thomassen_predicate(g).is_ok(), b))
        }
        Theorem::Theorem8 => graph_sample(theorem8_trial),
        Theorem::Lemma2 => {
            let want_feasible = i % 2 == 1;
            let (phi, draws) = if i % 4 == 2 {
                (draw_fano_superset(&mut rng, spec), 1)
            } else {
                rejection(
                    &mut rng,
                    |r| draw_instance(r, spec),
                    |phi| !want_feasible || matches!(nae_brute_force(phi), Ok(Some(_))),
                )?
            };
            Ok(Trial { input: phi.to_text().trim_end().replace('\n', "; "), draws, outcome: lemma2_trial(&phi)? })
        }
        Theorem::BtDivergence => {
            let m = if i == 0 { bt_canonical_instance() } else { draw_mixed(&mut rng, spec) };
            Ok(Trial { input: one_line(&m), draws: u64::from(i != 0), outcome: bt_trial(&m, budget)? })
        }
        Theorem::Menger => {
            let strong = i % 2 == 1;
            let (d, draws) =
                rejection(&mut rng, |r| draw_digraph(r, spec), |d| !strong || is_strongly_connected(d))?;
            Ok(Trial { input: one_line(&d), draws, outcome: menger_trial(&d)? })
        }
    }
}

#[cfg(feature = "parallel")]
fn run_all(theorem: Theorem, spec: &CorpusSpec, budget: u64) -> Result<Vec<Trial>> {
    use rayon::prelude::*;
    (0..spec.count).into_par_iter().map(|i| run_trial(theorem, spec, budget, i)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_all(theorem: Theorem, spec: &CorpusSpec, budget: u64) -> Result<Vec<Trial>> {
    (0..spec.count).map(|i| run_trial(theorem, spec, budget, i)).collect()
}

/// Runs `spec.count` trials of the equivalence named by `theorem`.
pub fn verify_theorem(theorem: Theorem, spec: &CorpusSpec, budget: u64) -> Result<TrialReport> {
    spec.validate()?;
    if budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let start = Instant::now();
    let trials = run_all(theorem, spec, budget)?;
    let mut report = TrialReport {
        theorem,
        spec: spec.clone(),
        budget,
        trials: trials.len(),
        agreements: 0,
        disagreements: Vec::new(),
        unknowns: Vec::new(),
        divergences: Vec::new(),
        draws: 0,
        wall_time: Duration::ZERO,
    };
    for (i, trial) in trials.into_iter().enumerate() {
        report.draws += trial.draws;
        let mismatch = |expected, got| Mismatch { trial: i, input: trial.input.clone(), expected, got };
        match trial.outcome {
            Outcome::Agree => report.agreements += 1,
            Outcome::Unknown => report.unknowns.push(i),
            Outcome::Disagree { expected, got } => report.disagreements.push(mismatch(expected, got)),
            Outcome::Diverge { expected, got } => report.divergences.push(mismatch(expected, got)),
        }
    }
    report.wall_time = start.elapsed();
    Ok(report)
}
