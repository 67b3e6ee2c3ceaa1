use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use propeller_core::aut::{are_isomorphic, aut_group, edge_transitivity_witness};
use propeller_core::cases::match_case;
use propeller_core::census::{census_each, CensusOptions, CsvSink};
use propeller_core::cycles::{arc_type, per_edge_counts};
use propeller_core::export::{to_dot, to_graph6, to_json};
use propeller_core::families::classify;
use propeller_core::graph::{
    build_generalized_petersen, build_generalized_propeller, build_propeller, build_wreath, LabeledGraph,
    PropellerParams, VertexClass,
};
use propeller_core::perm::{first_broken_edge, is_automorphism, unhit};
use propeller_core::relations::{active_relations, predicted_n6};
use propeller_core::schema::{helper_solutions, image_array, schema, SchemaName};
use propeller_core::verify::{
    sample_girth5, verify_families, verify_identities, verify_non_surjectivity, verify_relations,
    verify_table1, verify_table2, Report,
};
use propeller_core::Error;

/// Largest order the census runs without `--long`.
const DESK_MAX_N: usize = 30;

#[derive(Parser)]
#[command(name = "propeller", version, about = "Propeller graphs Pr_n(b,c,d): construction, invariants, edge-transitivity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Tuple {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    b: usize,
    #[arg(long)]
    c: usize,
    #[arg(long)]
    d: usize,
}

impl Tuple {
    fn params(self) -> Result<PropellerParams, Error> {
        PropellerParams::new(self.n, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Relations,
    Identities,
    Families,
    Nonsurjective,
}

#[derive(Subcommand)]
enum Command {
    /// Build Pr_n(b,c,d) and print it.
    Gen {
        #[command(flatten)]
        tuple: Tuple,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Girth, short-cycle counts, relations and automorphism group data.
    Invariants {
        #[command(flatten)]
        tuple: Tuple,
        /// Skip the automorphism group computation.
        #[arg(long)]
        no_group: bool,
    },
    /// Instantiate a named schema and test it as an automorphism.
    CheckAut {
        #[command(flatten)]
        tuple: Tuple,
        #[arg(long)]
        name: SchemaName,
        /// Helper value (z or r); defaults to the first solution.
        #[arg(long, allow_hyphen_values = true)]
        helper: Option<i64>,
    },
    /// Edge-transitivity verdict and family memberships.
    Classify {
        #[command(flatten)]
        tuple: Tuple,
        /// Include the witness automorphism.
        #[arg(long)]
        witness: bool,
    },
    /// Isomorphism test against pr:n,b,c,d | gp:n,k | wreath:n | gpr:n,a,b,c,d.
    Isomorphic {
        #[command(flatten)]
        tuple: Tuple,
        #[arg(long)]
        to: String,
    },
    /// Sweep all tuples with min-n <= n <= max-n and write CSV.
    Census {
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = DESK_MAX_N)]
        max_n: usize,
        /// Required for max-n above 30 (hours of runtime near 78).
        #[arg(long)]
        long: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        girth: Option<usize>,
        #[arg(long)]
        dedupe: bool,
    },
    /// Run a golden-table verifier.
    Verify {
        #[arg(long, value_enum)]
        table: Table,
        /// Upper order for instance searches and samples.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
}

enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::InvalidParams(_) | Error::Parse(_) | Error::Shape(..)) => Failure::Usage(format!("{e:#}")),
            _ => Failure::Runtime(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

type Outcome = Result<ExitCode, Failure>;

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> anyhow::Result<()> {
    match writeln!(io::stdout().lock(), "{text}") {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn print_json(v: &impl serde::Serialize) -> anyhow::Result<()> {
    emit(&serde_json::to_string_pretty(v)?)
}

fn output(out: Option<&PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn gen(tuple: Tuple, format: Format, out: Option<PathBuf>) -> Outcome {
    let g = build_propeller(tuple.params()?)?;
    let text = match format {
        Format::Graph6 => to_graph6(&g),
        Format::Dot => to_dot(&g),
        Format::Json => serde_json::to_string_pretty(&to_json(&g)).map_err(anyhow::Error::from)?,
    };
    match out {
        Some(path) => std::fs::write(&path, format!("{}\n", text.trim_end()))
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => emit(text.trim_end())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn invariants(tuple: Tuple, no_group: bool) -> Outcome {
    let p = tuple.params()?;
    let g = build_propeller(p)?;
    let counts = per_edge_counts(&p)?;
    let mut v = json!({
        "params": p,
        "title": g.title(),
        "girth": counts.girth,
        "perEdge": counts.per_edge,
        "edgeTransitive": edge_transitivity_witness(&g, &p)?.is_some(),
    });
    if counts.girth >= 5 {
        let a0 = p.vertex(VertexClass::A, 0);
        let a1 = p.vertex(VertexClass::A, 1);
        v["predictedN6"] = json!(predicted_n6(&p));
        v["activeRelations"] = json!(active_relations(&p));
        v["case"] = json!(match_case(&p));
        v["wingArcType"] = json!(arc_type(&g, (a0, a1))?);
    }
    if !no_group {
        let group = aut_group(&g);
        v["group"] = json!(group.report());
        v["vertexTransitive"] = json!(group.is_vertex_transitive());
        v["arcTransitive"] = json!(group.is_arc_transitive(&g));
    }
    print_json(&v)?;
    Ok(ExitCode::SUCCESS)
}

fn check_aut(tuple: Tuple, name: SchemaName, helper: Option<i64>) -> Outcome {
    let p = tuple.params()?;
    let g = build_propeller(p)?;
    let free: BTreeMap<char, i64> = match (name.helper(), helper) {
        (None, _) => BTreeMap::new(),
        (Some(h), Some(x)) => BTreeMap::from([(h, x)]),
        (Some(h), None) => match helper_solutions(name, &p).into_iter().next() {
            Some(f) => f,
            None => {
                print_json(&json!({
                    "schema": name.as_str(),
                    "params": p,
                    "automorphism": false,
                    "reason": format!("no value of {h} solves the schema's congruence"),
                }))?;
                return Ok(ExitCode::from(1));
            }
        },
    };
    let s = match schema(name, &p, &free) {
        Ok(s) => s,
        Err(e @ (Error::Constraint(_) | Error::Divisibility { .. })) => {
            print_json(&json!({
                "schema": name.as_str(),
                "params": p,
                "automorphism": false,
                "reason": e.to_string(),
            }))?;
            return Ok(ExitCode::from(1));
        }
        Err(e) => return Err(e.into()),
    };
    let images = image_array(&s, &p)?;
    let missing: Vec<String> = unhit(&images).iter().map(|&v| p.label(v).to_string()).collect();
    let name_of = |v: usize| p.label(v).to_string();
    let mut v = json!({
        "schema": name.as_str(),
        "params": p,
        "helper": free,
        "bijective": missing.is_empty(),
        "unhit": missing,
    });
    let mut ok = false;
    if let Ok(perm) = propeller_core::perm::Permutation::new(images.clone()) {
        ok = is_automorphism(&g, &perm);
        v["automorphism"] = json!(ok);
        if let Some((a, b)) = first_broken_edge(&g, &perm) {
            v["brokenEdge"] = json!([name_of(a), name_of(b), name_of(perm.apply(a)), name_of(perm.apply(b))]);
        }
    } else {
        v["automorphism"] = json!(false);
    }
    let a0 = p.vertex(VertexClass::A, 0);
    let a1 = p.vertex(VertexClass::A, 1);
    v["imageOfA0A1"] = json!([name_of(images[a0]), name_of(images[a1])]);
    print_json(&v)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn classify_cmd(tuple: Tuple, witness: bool) -> Outcome {
    let mut c = classify(&tuple.params()?)?;
    if !witness {
        c.witness = None;
    }
    print_json(&c)?;
    Ok(ExitCode::SUCCESS)
}

fn parse_target(spec: &str) -> anyhow::Result<LabeledGraph> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("target {spec:?} lacks a kind prefix")))?;
    let nums: Vec<usize> = rest
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::Parse(format!("target {spec:?} has a non-numeric argument")))?;
    let g = match (kind, nums.as_slice()) {
        ("pr", &[n, b, c, d]) => build_propeller(PropellerParams::new(n, b, c, d)?)?,
        ("gp", &[n, k]) => build_generalized_petersen(n, k)?,
        ("wreath", &[n]) => build_wreath(n)?,
        ("gpr", &[n, a, b, c, d]) => build_generalized_propeller(n, a, b, c, d)?,
        _ => return Err(Error::Parse(format!("unknown target {spec:?}")).into()),
    };
    Ok(g)
}

fn isomorphic(tuple: Tuple, to: &str) -> Outcome {
    let g = build_propeller(tuple.params()?)?;
    let h = parse_target(to)?;
    let iso = are_isomorphic(&g, &h);
    let mut v = json!({
        "left": g.title(),
        "right": h.title(),
        "isomorphic": iso.is_some(),
    });
    if let Some(m) = &iso {
        let pairs: Vec<(String, String)> =
            (0..g.vertex_count()).map(|x| (g.vertex_name(x), h.vertex_name(m.apply(x)))).collect();
        v["map"] = json!(pairs);
    }
    print_json(&v)?;
    Ok(if iso.is_some() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[allow(clippy::too_many_arguments)]
fn census_cmd(
    min_n: usize,
    max_n: usize,
    long: bool,
    jobs: Option<usize>,
    out: Option<PathBuf>,
    girth: Option<usize>,
    dedupe: bool,
) -> Outcome {
    if min_n < 3 || min_n > max_n {
        return Err(Failure::Usage(format!("need 3 <= min-n <= max-n, got {min_n}..={max_n}")));
    }
    if max_n > DESK_MAX_N && !long {
        return Err(Failure::Usage(format!("max-n above {DESK_MAX_N} needs --long")));
    }
    let opts = CensusOptions { dedupe, girth, jobs };
    let to_file = out.is_some();
    let mut sink = CsvSink::new(output(out.as_ref())?)?;
    let summary = census_each(min_n, max_n, &opts, |r| sink.write(r))?;
    sink.finish()?;
    if to_file {
        emit(summary.to_string().trim_end())?;
    } else {
        eprint!("{summary}");
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(table: Table, max_n: Option<usize>, seed: u64, format: ReportFormat) -> Outcome {
    let report: Report = match table {
        Table::One => verify_table1()?,
        Table::Two => verify_table2(max_n.unwrap_or(240))?,
        Table::Relations => verify_relations(&sample_girth5(200, 20, max_n.unwrap_or(120), seed))?,
        Table::Identities => verify_identities(max_n.unwrap_or(200))?,
        Table::Families => verify_families(20, max_n.unwrap_or(200), seed)?,
        Table::Nonsurjective => verify_non_surjectivity(3, max_n.unwrap_or(200))?,
    };
    match format {
        ReportFormat::Text => emit(&report.to_string())?,
        ReportFormat::Json => print_json(&report)?,
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen { tuple, format, out } => gen(tuple, format, out),
        Command::Invariants { tuple, no_group } => invariants(tuple, no_group),
        Command::CheckAut { tuple, name, helper } => check_aut(tuple, name, helper),
        Command::Classify { tuple, witness } => classify_cmd(tuple, witness),
        Command::Isomorphic { tuple, to } => isomorphic(tuple, &to),
        Command::Census { min_n, max_n, long, jobs, out, girth, dedupe } => {
            census_cmd(min_n, max_n, long, jobs, out, girth, dedupe)
        }
        Command::Verify { table, max_n, seed, format } => verify_cmd(table, max_n, seed, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nUsage: propeller <COMMAND> [OPTIONS]  (see --help)");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
