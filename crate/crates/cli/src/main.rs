//! `circix`: circular chromatic index computations from the command line.
//!
//! Exit codes: 0 success (SAT, VALID), 1 a negative answer (UNSAT,
//! INVALID), 2 usage errors and malformed input, 3 budget exhausted.

mod input;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use circix_core::chi::{circular_chromatic_index, ChiOptions, ChiValue};
use circix_core::codec::{canonical_code, encode_auto};
use circix_core::colour::{emit_dimacs, encode_cnf, make_decider, verify_colouring, Decider, EdgeColouring, Verdict};
use circix_core::families::{
    attach_pendants, chain_ring, circulant, circulant_nine_halves_colouring, complete_minus_edge, cycle_attach,
    mirror_witness, regularize, seed_catalog, to_codec_order, Parity,
};
use circix_core::fraction::Fraction;
use circix_core::graph::Multigraph;
use circix_core::mono::ForcingCatalog;
use circix_core::survey::{emit_table, run_survey, Family, Source, SurveyConfig, TableFormat, DEFAULT_SEED};

use input::{GraphInput, InputArgs, StreamArgs};

#[derive(Parser)]
#[command(name = "circix", version, about = "Circular chromatic index of multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Which engine decides `(p, q)` instances, and how long it may run.
#[derive(Args, Clone)]
struct EngineArgs {
    /// Node budget for the native backtracker.
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Wall-clock budget in seconds, for either engine.
    #[arg(long)]
    budget_secs: Option<u64>,
    /// External SAT solver command; `{cnf}` is replaced by the CNF path.
    #[arg(long)]
    solver: Option<String>,
}

impl EngineArgs {
    fn decider(&self) -> Box<dyn Decider> {
        make_decider(self.solver.as_deref(), self.budget_nodes, self.budget_secs)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the circular chromatic index.
    Chi {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
        /// Largest denominator tried.
        #[arg(long)]
        qmax: Option<u64>,
        /// Stop once the graph is colourable at this value.
        #[arg(long)]
        threshold: Option<Fraction>,
        /// Also print the chromatic index and every decision made.
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether a circular (p, q)-edge-colouring exists.
    Decide {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        engine: EngineArgs,
        /// Write the colouring here when one is found.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check a colouring. Without --witness the input must carry it after
    /// the graph code.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Print the graph code, its canonical form, or a DIMACS CNF.
    Encode {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, requires_all = ["p", "q"])]
        dimacs: bool,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long, conflicts_with = "dimacs")]
        canonical: bool,
    },
    /// Classify a family of small graphs and print the table.
    Survey(SurveyArgs),
    /// Build members of the explicit families.
    #[command(subcommand)]
    Construct(Construct),
    /// List the seed graphs, or the forcing catalog.
    Catalog {
        #[arg(long)]
        forcing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Simple,
    Multigraph,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    delta: usize,
    /// Orders to survey, e.g. `3-6` or `3,5,7`. Required for the generator.
    #[arg(long, value_parser = input::parse_orders, default_value = "")]
    orders: input::Orders,
    #[arg(long)]
    regular: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Append-only result cache; reruns skip graphs already classified.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Seed of the randomized class-1 heuristic.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Heuristic restarts per graph.
    #[arg(long, default_value_t = 20)]
    trials: u32,
    #[arg(long)]
    threshold: Option<Fraction>,
    #[arg(long)]
    qmax: Option<u64>,
    /// Extra forcing subgraphs, one `code<TAB>delta<TAB>value` per line.
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Print one line per graph after the table.
    #[arg(long)]
    records: bool,
    #[command(flatten)]
    stream: StreamArgs,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Subcommand)]
enum Construct {
    /// The circulant C_m with the given steps.
    Circulant {
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        steps: Vec<usize>,
    },
    /// C_m(1,2) with its (9,2)-colouring, as a code plus witness.
    Circulant92 {
        #[arg(long)]
        m: usize,
    },
    /// K_{d+1} minus one edge.
    CompleteMinusEdge {
        #[arg(long)]
        d: usize,
    },
    /// Attach a pendant vertex at each listed vertex.
    Pendants {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<usize>,
    },
    /// Chain k copies of a two-pendant seed into a ring.
    Ring {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
    },
    /// Simple delta-regular 2-edge-connected graph from k seed copies.
    Regularize {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Join the hooks of k seed copies by a cycle. With --p and --q the seed
    /// is coloured first and the witness of the result is printed too.
    CycleAttach {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        hook: usize,
        #[arg(long)]
        k: usize,
        /// Only allow even cycle lengths.
        #[arg(long)]
        even: bool,
        #[arg(long, requires = "q")]
        p: Option<u32>,
        #[arg(long, requires = "p")]
        q: Option<u32>,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Ring of k copies (k even) with the alternating mirrored colouring.
    /// The seed colouring comes from --witness or from a (p, q) search.
    Mirror {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, requires = "q", required_unless_present = "witness")]
        p: Option<u32>,
        #[arg(long, requires = "p")]
        q: Option<u32>,
        #[command(flatten)]
        engine: EngineArgs,
    },
}

/// A failed command: the message goes to standard error.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure { code: 2, message: message.to_string() }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn bundle(g: &Multigraph, col: &EdgeColouring) -> String {
    let (g, col) = to_codec_order(g, Some(col));
    format!("{}\n{}", encode_auto(&g), col.expect("witness carried").to_witness())
}

fn code_line(g: &Multigraph) -> String {
    format!("{}\n", encode_auto(g))
}

/// Decide with `engine` and insist on a witness.
fn colour_seed(g: &Multigraph, p: u32, q: u32, engine: &EngineArgs) -> Result<EdgeColouring, Failure> {
    let outcome = engine.decider().decide(g, p, q).map_err(Failure::usage)?;
    match outcome.verdict {
        Verdict::Sat => Ok(outcome.witness.expect("SAT carries a witness")),
        Verdict::Unsat => Err(Failure { code: 1, message: format!("seed has no ({p}, {q})-colouring") }),
        Verdict::Unknown => Err(Failure { code: 3, message: format!("budget exhausted colouring the seed at ({p}, {q})") }),
    }
}

fn chi(g: &Multigraph, engine: &EngineArgs, options: ChiOptions, trace: bool) -> Outcome {
    let result = circular_chromatic_index(g, &engine.decider(), options).map_err(Failure::usage)?;
    let mut out = format!("{}\n", result.circular);
    if trace {
        match result.chromatic_index {
            Some(k) => writeln!(out, "chromatic index {k}").unwrap(),
            None => writeln!(out, "chromatic index unknown").unwrap(),
        }
        for entry in &result.trace {
            writeln!(out, "{entry}").unwrap();
        }
    }
    let exhausted = matches!(result.circular, ChiValue::Bounded(_))
        && result.trace.iter().any(|t| t.verdict == Verdict::Unknown);
    Ok((out, if exhausted { 3 } else { 0 }))
}

fn decide(g: &Multigraph, p: u32, q: u32, engine: &EngineArgs, witness: Option<&PathBuf>) -> Outcome {
    let outcome = engine.decider().decide(g, p, q).map_err(Failure::usage)?;
    if let (Some(path), Some(col)) = (witness, &outcome.witness) {
        std::fs::write(path, col.to_witness()).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    let code = match outcome.verdict {
        Verdict::Sat => 0,
        Verdict::Unsat => 1,
        Verdict::Unknown => 3,
    };
    Ok((format!("{}\n", outcome.verdict), code))
}

fn verify(input: GraphInput, witness: Option<&PathBuf>) -> Outcome {
    let text = match witness {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        None => input.rest,
    };
    let col = EdgeColouring::from_witness(&text).map_err(Failure::usage)?;
    match verify_colouring(&input.graph, &col) {
        Ok(true) => Ok(("VALID\n".into(), 0)),
        Ok(false) => Ok(("INVALID\n".into(), 1)),
        Err(e) => {
            eprintln!("{e}");
            Ok(("INVALID\n".into(), 1))
        }
    }
}

fn survey(args: SurveyArgs) -> Outcome {
    let family = match args.family {
        FamilyArg::Simple => Family::Simple,
        FamilyArg::Multigraph => Family::Multigraph,
    };
    let mut config = SurveyConfig::new(family, args.delta, args.orders.0);
    config.regular = args.regular;
    config.threshold = args.threshold;
    config.qmax = args.qmax;
    config.budget_nodes = args.engine.budget_nodes;
    config.budget_secs = args.engine.budget_secs;
    config.solver = args.engine.solver.clone();
    config.cache = args.cache;
    config.jobs = args.jobs;
    config.seed = args.seed;
    config.trials = args.trials;
    if let Some(path) = &args.catalog {
        config.catalog.extend(ForcingCatalog::load(path).map_err(Failure::usage)?);
    }
    if let Some(source) = args.stream.source().map_err(Failure::usage)? {
        config.source = source;
    }
    if matches!(config.source, Source::Generator) && config.orders.is_empty() {
        return Err(Failure::usage("--orders is required unless a stream is given"));
    }
    let report = run_survey(&config).map_err(Failure::usage)?;
    let format = match args.format {
        FormatArg::Csv => TableFormat::Csv,
        FormatArg::Markdown => TableFormat::Markdown,
    };
    let mut out = emit_table(&report.rows, format);
    if args.records {
        for (order, r) in &report.records {
            let class = r.class.map_or("?".to_string(), |c| c.to_string());
            writeln!(out, "{order}\t{}\t{class}\t{}\t{:?}", r.code, r.chi_c, r.route).unwrap();
        }
    }
    if report.skipped > 0 {
        eprintln!("skipped {} input graphs outside the family", report.skipped);
    }
    let exhausted = report.records.iter().any(|(_, r)| r.trace.iter().any(|t| t.verdict == Verdict::Unknown));
    Ok((out, if exhausted { 3 } else { 0 }))
}

fn construct(cmd: Construct) -> Outcome {
    let err = Failure::usage;
    let out = match cmd {
        Construct::Circulant { m, steps } => code_line(&circulant(m, &steps).map_err(err)?),
        Construct::Circulant92 { m } => {
            let c = circulant_nine_halves_colouring(m).map_err(err)?;
            bundle(&c.graph, &c.colouring)
        }
        Construct::CompleteMinusEdge { d } => code_line(&complete_minus_edge(d).map_err(err)?),
        Construct::Pendants { input, at } => code_line(&attach_pendants(&input.read()?.graph, &at).map_err(err)?),
        Construct::Ring { input, k } => code_line(&chain_ring(&input.read()?.graph, k).map_err(err)?),
        Construct::Regularize { input, k, delta } => {
            code_line(&regularize(&input.read()?.graph, k, delta).map_err(err)?)
        }
        Construct::CycleAttach { input, hook, k, even, p, q, engine } => {
            let h = input.read()?.graph;
            let reference = match (p, q) {
                (Some(p), Some(q)) => Some(colour_seed(&h, p, q, &engine)?),
                _ => None,
            };
            let parity = if even { Parity::Even } else { Parity::Any };
            match cycle_attach(&h, hook, k, parity, reference.as_ref()).map_err(err)? {
                (g, Some(col)) => bundle(&g, &col),
                (g, None) => code_line(&g),
            }
        }
        Construct::Mirror { input, k, witness, p, q, engine } => {
            let h = input.read()?.graph;
            let col = match witness {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                    EdgeColouring::from_witness(&text).map_err(Failure::usage)?
                }
                None => colour_seed(&h, p.expect("required"), q.expect("required"), &engine)?,
            };
            let ring = chain_ring(&h, k).map_err(err)?;
            bundle(&ring, &mirror_witness(&h, &col, k).map_err(err)?)
        }
    };
    Ok((out, 0))
}

fn catalog(forcing: bool) -> String {
    if forcing {
        return ForcingCatalog::builtin().to_string();
    }
    let mut out = String::new();
    for s in seed_catalog() {
        let profile: Vec<String> = s.profile.iter().map(|(d, c)| format!("{d}:{c}")).collect();
        writeln!(out, "{}\t{}\t{}\t{{{}}}\t{}", s.name, s.code, s.expected, profile.join(", "), s.note).unwrap();
    }
    out
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Chi { input, engine, qmax, threshold, trace } => {
            chi(&input.read()?.graph, &engine, ChiOptions { threshold, qmax }, trace)
        }
        Command::Decide { input, p, q, engine, witness } => decide(&input.read()?.graph, p, q, &engine, witness.as_ref()),
        Command::Verify { input, witness } => verify(input.read()?, witness.as_ref()),
        Command::Encode { input, dimacs, p, q, canonical } => {
            let g = input.read()?.graph;
            let out = if dimacs {
                let cnf = encode_cnf(&g, p.expect("required"), q.expect("required")).map_err(Failure::usage)?;
                emit_dimacs(&cnf)
            } else if canonical {
                format!("{}\n", canonical_code(&g).map_err(Failure::usage)?)
            } else {
                code_line(&g)
            };
            Ok((out, 0))
        }
        Command::Survey(args) => survey(args),
        Command::Construct(cmd) => construct(cmd),
        Command::Catalog { forcing } => Ok((catalog(forcing), 0)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
