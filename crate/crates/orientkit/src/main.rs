use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orientkit::connectivity::{
    arc_connectivity, edge_connectivity, is_2vc_in, is_2vertex_connected, is_strongly_connected, Failure,
};
use orientkit::graph::{Digraph, Graph, MixedGraph, Orientation, VertexId};
use orientkit::harness::{verify_theorem, ReportVerdict, Theorem};
use orientkit::io::{parse_mg, parse_or, write_mg, write_or};
use orientkit::nae::{format_assignment, parse_assignment, parse_mnae};
use orientkit::reduction::{reduce, ReductionArtifact};
use orientkit::search::{exact_orientation_search, thomassen_predicate, Status, Target, DEFAULT_BUDGET};
use orientkit::torient::{build_blowup, construct_2t_orientation, huoh_predicate};
use orientkit::Error;

const EXIT_TRUE: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "orientkit", version, about = "Connectivity-constrained orientations of mixed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Measure {
    Edge,
    Arc,
    Strong,
    #[value(name = "2vc")]
    TwoVc,
    #[value(name = "2vc-in")]
    TwoVcIn,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Strong,
    #[value(name = "2arc")]
    TwoArc,
    #[value(name = "2vc")]
    TwoVc,
    #[value(name = "2t")]
    TwoT,
}

#[derive(Subcommand)]
enum Command {
    /// Measure or test connectivity of a graph or digraph.
    Conn {
        file: PathBuf,
        #[arg(long, value_enum)]
        measure: Measure,
        /// Vertex set for 2vc-in (default: all vertices).
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<String>>,
    },
    /// Search for an orientation meeting a connectivity target.
    Orient {
        file: PathBuf,
        #[arg(long, value_enum)]
        target: TargetArg,
        #[arg(long = "T", value_delimiter = ',')]
        t: Option<Vec<String>>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Output `.or` file (default: stdout).
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Build the gadget graph of a monotone NAE-3SAT instance.
    Reduce {
        file: PathBuf,
        #[arg(short = 'o')]
        output: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Orientation of the gadget graph encoding a truth assignment.
    Embed {
        file: PathBuf,
        #[arg(long)]
        assign: String,
        #[arg(short = 'o')]
        output: PathBuf,
    },
    /// Read a truth assignment back off an oriented gadget graph.
    Lift {
        graph: PathBuf,
        orientation: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Construct a 2T-connected orientation of an undirected multigraph.
    Tconnect {
        file: PathBuf,
        #[arg(long = "T", value_delimiter = ',')]
        t: Option<Vec<String>>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write `<stem>.blowup.mg` and `<stem>.blowup.map` next to the input.
        #[arg(long)]
        emit_blowup: bool,
        #[arg(short = 'o')]
        output: Option<PathBuf>,
    },
    /// Run a seeded equivalence suite.
    Verify {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

enum Fail {
    Usage(String),
    Data(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Data(e.to_string())
    }
}

type CliResult = Result<u8, Fail>;

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Fail> {
    match output {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_mg(path: &Path) -> Result<MixedGraph, Fail> {
    parse_mg(&read(path)?).map_err(|e| Fail::Data(format!("{}: {e}", path.display())))
}

fn vertex_set(g: &MixedGraph, names: Option<&[String]>) -> Result<BTreeSet<VertexId>, Fail> {
    match names {
        None => Ok(BTreeSet::new()),
        Some(names) => Ok(g.vertex_set(names.iter().filter(|s| !s.is_empty()))?),
    }
}

fn conn(file: &Path, measure: Measure, set: Option<&[String]>) -> CliResult {
    let g = load_mg(file)?;
    let truth = |b: bool| if b { EXIT_TRUE } else { EXIT_FALSE };
    match measure {
        Measure::Edge => {
            let g = Graph::try_from(g)?;
            let cut = edge_connectivity(&g);
            println!("edge-connectivity {}", cut.value);
            if let Some(w) = cut.witness {
                println!("cut {}", w.describe(&g));
            }
            Ok(EXIT_TRUE)
        }
        Measure::Arc => {
            let d = Digraph::try_from(g)?;
            let cut = arc_connectivity(&d);
            println!("arc-connectivity {}", cut.value);
            if let Some(w) = cut.witness {
                println!("cut {}", w.describe(&d));
            }
            Ok(EXIT_TRUE)
        }
        Measure::Strong => {
            let d = Digraph::try_from(g)?;
            let ok = is_strongly_connected(&d);
            println!("{ok}");
            if !ok {
                if let Some(w) = arc_connectivity(&d).witness {
                    println!("cut {}", w.describe(&d));
                }
            }
            Ok(truth(ok))
        }
        Measure::TwoVc => {
            let d = Digraph::try_from(g)?;
            let ok = is_2vertex_connected(&d);
            println!("{ok}");
            Ok(truth(ok))
        }
        Measure::TwoVcIn => {
            let d = Digraph::try_from(g)?;
            let x = match set {
                Some(_) => vertex_set(&d, set)?,
                None => d.vertices().collect(),
            };
            let ok = is_2vc_in(&d, &x)?;
            println!("{ok}");
            Ok(truth(ok))
        }
    }
}

/// Characterisation witness for a `none` answer on an undirected input.
fn none_witness(g: &MixedGraph, target: &Target) -> Option<Failure> {
    let g = Graph::try_from(g.clone()).ok()?;
    match target {
        Target::Strong | Target::TwoArc => {
            let need = if matches!(target, Target::Strong) { 2 } else { 4 };
            let cut = edge_connectivity(&g);
            (!cut.value.at_least(need)).then(|| Failure::Cut(cut.witness.expect("finite")))
        }
        Target::TwoVertex => thomassen_predicate(&g).err(),
        Target::TwoT(t) => huoh_predicate(&g, t).ok()?.err(),
    }
}

fn report_status(status: Status, budget: u64, nodes: u64, witness: Option<String>) -> u8 {
    match status {
        Status::Found => {
            eprintln!("found ({nodes} nodes)");
            EXIT_TRUE
        }
        Status::None => {
            println!("none");
            match witness {
                Some(w) => println!("witness {w}"),
                None => println!("witness exhaustive search ({nodes} nodes)"),
            }
            EXIT_FALSE
        }
        Status::Unknown => {
            println!("unknown");
            println!("budget {budget} exhausted");
            EXIT_UNKNOWN
        }
    }
}

fn orient(file: &Path, target: TargetArg, t: Option<&[String]>, budget: u64, output: Option<&Path>) -> CliResult {
    let g = load_mg(file)?;
    let target = match target {
        TargetArg::Strong => Target::Strong,
        TargetArg::TwoArc => Target::TwoArc,
        TargetArg::TwoVc => Target::TwoVertex,
        TargetArg::TwoT => Target::TwoT(vertex_set(&g, t)?),
    };
    let out = exact_orientation_search(&g, &target, budget)?;
    if let Some(o) = &out.orientation {
        emit(output, &write_or(&g, o)?)?;
    }
    let witness = (out.status == Status::None).then(|| none_witness(&g, &target)).flatten();
    Ok(report_status(out.status, budget, out.nodes_explored, witness.map(|f| f.describe(&g))))
}

fn reduce_cmd(file: &Path, output: &Path, map: &Path) -> CliResult {
    let phi = parse_mnae(&read(file)?)?;
    let art = reduce(&phi)?;
    write(output, &write_mg(&art.graph))?;
    write(map, &art.map_text())?;
    println!(
        "{} vertices, {} arcs, {} edges",
        art.graph.vertex_count(),
        art.graph.arcs().len(),
        art.graph.edges().len()
    );
    Ok(EXIT_TRUE)
}

fn print_lemma1(art: &ReductionArtifact, o: &Orientation) -> CliResult {
    let report = art.lemma1_check(o)?;
    for v in &report.violations {
        println!("violation condition={} {}: {}", v.condition, v.subject, v.detail);
    }
    Ok(if report.all_hold() { EXIT_TRUE } else { EXIT_FALSE })
}

fn embed(file: &Path, assign: &str, output: &Path) -> CliResult {
    let phi = parse_mnae(&read(file)?)?;
    let art = reduce(&phi)?;
    let f = parse_assignment(assign)?;
    let o = art.assignment_to_orientation(&f)?;
    write(output, &write_or(&art.graph, &o)?)?;
    println!("{}", if phi.is_feasible(&f) { "feasible" } else { "infeasible" });
    print_lemma1(&art, &o)
}

fn lift(graph: &Path, orientation: &Path, map: &Path) -> CliResult {
    let g = load_mg(graph)?;
    let art = ReductionArtifact::from_map(g, &read(map)?)?;
    let o = parse_or(&read(orientation)?, &art.graph)?;
    match art.orientation_to_assignment(&o) {
        Ok(f) => {
            println!("{}", format_assignment(&f));
            print_lemma1(&art, &o)
        }
        Err(e @ Error::CycleNotCircuit(_)) => {
            println!("{e}");
            Ok(EXIT_FALSE)
        }
        Err(e) => Err(e.into()),
    }
}

fn tconnect(file: &Path, t: Option<&[String]>, budget: u64, emit_blowup: bool, output: Option<&Path>) -> CliResult {
    let g = Graph::try_from(load_mg(file)?)?;
    let t = vertex_set(&g, t)?;
    if emit_blowup {
        let (h, map) = build_blowup(&g, &t)?;
        let stem = file.with_extension("");
        let base = stem.to_string_lossy();
        write(Path::new(&format!("{base}.blowup.mg")), &write_mg(&h))?;
        write(Path::new(&format!("{base}.blowup.map")), &map.to_text(&g, &h))?;
    }
    let c = construct_2t_orientation(&g, &t, budget)?;
    if let Some(o) = &c.orientation {
        emit(output, &write_or(&g, o)?)?;
    }
    Ok(report_status(c.status, budget, c.nodes_explored, c.failure.map(|f| f.describe(&g))))
}

fn verify(
    theorem: Theorem,
    trials: usize,
    seed: u64,
    max_n: Option<usize>,
    max_m: Option<usize>,
    budget: u64,
) -> CliResult {
    let spec = theorem.corpus(trials, seed, max_n, max_m);
    let report = verify_theorem(theorem, &spec, budget).map_err(|e| match e {
        Error::BadCorpus(_) | Error::ZeroBudget => Fail::Usage(e.to_string()),
        e => Fail::Data(e.to_string()),
    })?;
    print!("{}", report.render());
    eprintln!("wall time {:.3}s", report.wall_time.as_secs_f64());
    Ok(match report.verdict() {
        ReportVerdict::Pass => EXIT_TRUE,
        ReportVerdict::Fail => EXIT_FALSE,
        ReportVerdict::Unknown => EXIT_UNKNOWN,
    })
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Conn { file, measure, set } => conn(&file, measure, set.as_deref()),
        Command::Orient { file, target, t, budget, output } => {
            orient(&file, target, t.as_deref(), budget, output.as_deref())
        }
        Command::Reduce { file, output, map } => reduce_cmd(&file, &output, &map),
        Command::Embed { file, assign, output } => embed(&file, &assign, &output),
        Command::Lift { graph, orientation, map } => lift(&graph, &orientation, &map),
        Command::Tconnect { file, t, budget, emit_blowup, output } => {
            tconnect(&file, t.as_deref(), budget, emit_blowup, output.as_deref())
        }
        Command::Verify { theorem, trials, seed, max_n, max_m, budget } => {
            verify(theorem, trials, seed, max_n, max_m, budget)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_TRUE };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Fail::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DATA)
        }
    }
}
