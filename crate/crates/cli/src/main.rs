mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pocs_core::fraisse::{
    build_generic, check_amalgamation, check_forbidden, classify_semigroups, random_space, semigroup_id,
    GenericParams,
};
use pocs_core::geodesics::{almost_free_elements, compute_bound, fold_law_holds, geodesic_with_profile, StepProfile};
use pocs_core::independence::{
    check_suite, find_unsupported_witness, indep, support_sets, CheckConfig, FragmentSource, Independence,
    LoweredInfimum, SamplingBounds, SearchBudget, ShortestPath, Suite,
};
use pocs_core::semigroup::{enumerate_pocs, validate, Distance, PosetSemigroup};
use pocs_core::space::complete_shortest_path;
use pocs_core::{Error, Result};
use serde::Serialize;
use serde_json::json;

use report::{emit, Outcome, Run, RunReport};

/// Partially ordered commutative semigroups, the metric spaces over them and
/// their shortest-path independence relation.
#[derive(Parser)]
#[command(name = "pocs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print the full JSON run report instead of a summary.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to a file instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,

    /// Worker threads for parallel batches. Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Include elapsed wall-clock time in JSON reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the semigroup axioms and report archimedean status and maximum.
    Validate(SemigroupArg),
    /// Smallest k such that every k-fold sum is the maximum.
    Bound(BoundArgs),
    /// Property-check an axiom suite on generated fragments.
    Check(CheckArgs),
    /// Search for an independence not supported by any small sub-base.
    Support(SupportArgs),
    /// Decide independence of vertex sets in a space file.
    Indep(IndepArgs),
    /// Exhaustively check one-point amalgamation over small bases.
    Amalgamation(AmalgamationArgs),
    /// Build a finite approximation of the generic space.
    Generic(GenericArgs),
    /// Grow a random space one point at a time.
    Random(RandomArgs),
    /// List every semigroup up to isomorphism with a small carrier.
    Enumerate(EnumerateArgs),
    /// Flag archimedean status, amalgamation, bound and supportedness.
    Classify(ClassifyArgs),
    /// Build the geodesic with the given step distances.
    Geodesic(GeodesicArgs),
    /// Non-maximal elements whose sum with anything is the maximum.
    AlmostFree(SemigroupArg),
    /// List the triangles of a space forbidden by a family.
    Forbidden(ForbiddenArgs),
    /// Fill undefined distances of a graph by shortest paths.
    Complete(FileArg),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::Bound(_) => "bound",
            Command::Check(_) => "check",
            Command::Support(_) => "support",
            Command::Indep(_) => "indep",
            Command::Amalgamation(_) => "amalgamation",
            Command::Generic(_) => "generic",
            Command::Random(_) => "random",
            Command::Enumerate(_) => "enumerate",
            Command::Classify(_) => "classify",
            Command::Geodesic(_) => "geodesic",
            Command::AlmostFree(_) => "almost-free",
            Command::Forbidden(_) => "forbidden",
            Command::Complete(_) => "complete",
        }
    }

    fn seed(&self) -> Option<u64> {
        match self {
            Command::Check(a) => Some(a.seed),
            Command::Support(a) => Some(a.seed),
            Command::Generic(a) => Some(a.seed),
            Command::Random(a) => Some(a.seed),
            _ => None,
        }
    }

    fn parameters(&self) -> serde_json::Value {
        let v = match self {
            Command::Validate(a) | Command::AlmostFree(a) => serde_json::to_value(a),
            Command::Bound(a) => serde_json::to_value(a),
            Command::Check(a) => serde_json::to_value(a),
            Command::Support(a) => serde_json::to_value(a),
            Command::Indep(a) => serde_json::to_value(a),
            Command::Amalgamation(a) => serde_json::to_value(a),
            Command::Generic(a) => serde_json::to_value(a),
            Command::Random(a) => serde_json::to_value(a),
            Command::Enumerate(a) => serde_json::to_value(a),
            Command::Classify(a) => serde_json::to_value(a),
            Command::Geodesic(a) => serde_json::to_value(a),
            Command::Forbidden(a) => serde_json::to_value(a),
            Command::Complete(a) => serde_json::to_value(a),
        };
        v.expect("serializable arguments")
    }
}

#[derive(Args, Serialize)]
struct SemigroupArg {
    /// Built-in spec (path:N, product:N,K, sauer:V1,V2,...) or JSON file.
    semigroup: String,
}

#[derive(Args, Serialize)]
struct FileArg {
    file: String,
}

#[derive(Args, Serialize)]
struct FamilyArgs {
    /// Triangle family config file.
    #[arg(long)]
    family: Option<String>,
    /// Odd-perimeter family parameter: odd perimeters below 2*K1 are forbidden.
    #[arg(long)]
    k1: Option<u32>,
    /// Odd-perimeter family diameter.
    #[arg(long)]
    delta: Option<u32>,
}

#[derive(Args, Serialize)]
struct BoundArgs {
    semigroup: String,
    #[arg(long, default_value_t = 64)]
    max_len: usize,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum SuiteArg {
    Sir,
    MetricLike,
    Derived,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum FragmentsArg {
    Generic,
    Random,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum RelationArg {
    ShortestPath,
    /// Deliberately broken relation for checking the harness itself.
    LoweredInfimum,
}

#[derive(Args, Serialize)]
struct CheckArgs {
    semigroup: String,
    #[arg(long, value_enum, default_value_t = SuiteArg::Sir)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = FragmentsArg::Generic)]
    fragments: FragmentsArg,
    /// Generic fragments: extension rounds.
    #[arg(long, default_value_t = 3)]
    rounds: usize,
    /// Generic fragments: largest extension base.
    #[arg(long, default_value_t = 2)]
    max_base: usize,
    /// Generic fragments: vertex cap.
    #[arg(long, default_value_t = 12)]
    max_vertices: usize,
    /// Random fragments: vertex count.
    #[arg(long, default_value_t = 10)]
    vertices: usize,
    #[arg(long, default_value_t = 3)]
    max_a: usize,
    #[arg(long, default_value_t = 3)]
    max_b: usize,
    #[arg(long, default_value_t = 4)]
    max_c: usize,
    #[arg(long, value_enum, default_value_t = RelationArg::ShortestPath)]
    relation: RelationArg,
}

#[derive(Args, Serialize)]
struct SupportArgs {
    /// Semigroup for the witness search; ignored with --space.
    semigroup: Option<String>,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Query a given space instead of searching.
    #[arg(long, requires_all = ["a", "b", "base"])]
    space: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    b: Option<String>,
    /// Comma-separated base vertices.
    #[arg(long)]
    base: Option<String>,
    #[arg(long, default_value_t = 5)]
    max_vertices: usize,
    #[arg(long, default_value_t = 2000)]
    realizations: usize,
    #[arg(long, default_value_t = 200)]
    random_trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Serialize)]
struct IndepArgs {
    space: String,
    /// Comma-separated vertex labels.
    #[arg(long)]
    a: String,
    #[arg(long, default_value = "")]
    c: String,
    #[arg(long)]
    b: String,
}

#[derive(Args, Serialize)]
struct AmalgamationArgs {
    semigroup: String,
    /// Largest base size.
    #[arg(long, default_value_t = 2)]
    base: usize,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args, Serialize)]
struct GenericArgs {
    semigroup: String,
    #[arg(long, default_value_t = 3)]
    rounds: usize,
    #[arg(long, default_value_t = 2)]
    max_base: usize,
    #[arg(long, default_value_t = 12)]
    max_vertices: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args, Serialize)]
struct RandomArgs {
    semigroup: String,
    #[arg(long, default_value_t = 8)]
    vertices: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    family: FamilyArgs,
}

#[derive(Args, Serialize)]
struct EnumerateArgs {
    #[arg(long, default_value_t = 3)]
    max_size: usize,
}

#[derive(Args, Serialize)]
struct ClassifyArgs {
    #[arg(long, default_value_t = 3)]
    max_size: usize,
    #[arg(long, default_value_t = 2)]
    base: usize,
}

#[derive(Args, Serialize)]
struct GeodesicArgs {
    semigroup: String,
    /// Step distance label; repeat for each step.
    #[arg(long = "step", required = true)]
    steps: Vec<String>,
}

#[derive(Args, Serialize)]
struct ForbiddenArgs {
    space: String,
    #[command(flatten)]
    family: FamilyArgs,
}

fn family(f: &FamilyArgs) -> Result<Option<pocs_core::fraisse::TriangleFamily>> {
    input::family(f.family.as_deref(), f.k1, f.delta)
}

fn label_of(sg: &PosetSemigroup, d: Distance) -> String {
    sg.distance_label(d).to_string()
}

fn cmd_validate(a: &SemigroupArg) -> Result<Run> {
    let sg = if std::path::Path::new(&a.semigroup).exists() {
        let data = input::semigroup_data(&a.semigroup)?;
        let report = validate(&data)?;
        if !report.passed {
            let summary = format!("axioms violated:\n{report}");
            return Ok(Run::new(false, json!({ "validation": report }), summary));
        }
        std::sync::Arc::new(PosetSemigroup::from_data(&data)?)
    } else {
        input::semigroup(&a.semigroup)?
    };
    let report = validate(&sg.to_data())?;
    let arch = sg.is_archimedean();
    let max = sg.maximum().map(|m| sg.label(m).to_string());
    let payload = json!({
        "validation": report,
        "size": sg.size(),
        "archimedean": arch.holds,
        "archimedean_witness": arch.witness.map(|(x, y)| [sg.label(x), sg.label(y)]),
        "maximum": max,
        "identity": sg.identity().map(|e| sg.label(e)),
    });
    let summary = format!(
        "valid semigroup with {} elements; archimedean: {}; maximum: {}",
        sg.size(),
        arch.holds,
        max.as_deref().unwrap_or("none")
    );
    Ok(Run::new(true, payload, summary))
}

fn cmd_bound(a: &BoundArgs) -> Result<Run> {
    let sg = input::semigroup(&a.semigroup)?;
    let bound = compute_bound(&sg, a.max_len)?;
    let summary = match bound.value() {
        Some(k) => format!("bound {k}"),
        None => format!("exceeds max_len {}", a.max_len),
    };
    Ok(Run::new(true, json!({ "bound": bound.value(), "exceeds": bound.value().is_none(), "max_len": a.max_len }), summary))
}

fn cmd_check(a: &CheckArgs) -> Result<Run> {
    let sg = input::semigroup(&a.semigroup)?;
    let source = match a.fragments {
        FragmentsArg::Generic => FragmentSource::Generic(GenericParams {
            rounds: a.rounds,
            max_base: a.max_base,
            max_vertices: a.max_vertices,
        }),
        FragmentsArg::Random => FragmentSource::Random { vertices: a.vertices },
    };
    let cfg = CheckConfig {
        source,
        trials: a.trials,
        seed: a.seed,
        bounds: SamplingBounds { max_a: a.max_a, max_b: a.max_b, max_c: a.max_c },
    };
    let suite = match a.suite {
        SuiteArg::Sir => Suite::Sir,
        SuiteArg::MetricLike => Suite::MetricLike,
        SuiteArg::Derived => Suite::Derived,
    };
    let rel: &dyn Independence = match a.relation {
        RelationArg::ShortestPath => &ShortestPath,
        RelationArg::LoweredInfimum => &LoweredInfimum,
    };
    let report = check_suite(rel, suite, &sg, &cfg)?;
    let mut summary = String::new();
    for o in &report.outcomes {
        summary.push_str(&format!(
            "{:<20} {}  ({} trials, {} instances)\n",
            o.axiom,
            if o.passed { "pass" } else { "FAIL" },
            o.trials,
            o.instances
        ));
        if let Some(cx) = &o.counterexample {
            summary.push_str(&format!("    {}\n", cx.detail));
        }
    }
    if report.partial {
        summary.push_str("partial: some fragments could not be built\n");
    }
    summary.push_str(&format!("note: {}", report.note));
    Ok(Run::new(report.passed, &report, summary))
}

fn cmd_support(a: &SupportArgs) -> Result<Run> {
    if let Some(path) = &a.space {
        let s = input::space(path)?;
        let x = input::vertices(&s, a.a.as_deref().unwrap_or_default())?;
        let y = input::vertices(&s, a.b.as_deref().unwrap_or_default())?;
        let base = input::vertices(&s, a.base.as_deref().unwrap_or_default())?;
        let (&[x], &[y]) = (&x[..], &y[..]) else {
            return Err(Error::Input("--a and --b must each name one vertex".into()));
        };
        let sets = support_sets(&s, x, &base, y, a.k)?;
        let named: Vec<Vec<&str>> = sets.iter().map(|c| c.iter().map(|&v| s.label(v)).collect()).collect();
        let summary = if named.is_empty() {
            format!("no sub-base of size at most {} supports the independence", a.k)
        } else {
            format!("{} supporting sub-bases of size at most {}", named.len(), a.k)
        };
        return Ok(Run::new(!named.is_empty(), json!({ "k": a.k, "supports": named }), summary));
    }
    let spec = a.semigroup.as_deref().ok_or_else(|| Error::Input("give a semigroup or --space".into()))?;
    let sg = input::semigroup(spec)?;
    let budget = SearchBudget {
        max_vertices: a.max_vertices,
        realizations: a.realizations,
        random_trials: a.random_trials,
        seed: a.seed,
    };
    Ok(match find_unsupported_witness(&sg, a.k, &budget)? {
        Some(w) => {
            let summary = format!(
                "not {}-supported: {} and {} are independent over {{{}}} but over no sub-base of size at most {}",
                a.k,
                w.space.label(w.a),
                w.space.label(w.b),
                w.base.iter().map(|&v| w.space.label(v)).collect::<Vec<_>>().join(","),
                a.k
            );
            Run::new(false, json!({ "k": a.k, "witness": w.to_json() }), summary)
        }
        None => Run::new(
            true,
            json!({ "k": a.k, "witness": null }),
            format!("no witness within budget (at most {} vertices)", a.max_vertices),
        ),
    })
}

fn cmd_indep(a: &IndepArgs) -> Result<Run> {
    let s = input::space(&a.space)?;
    let (x, c, y) = (input::vertices(&s, &a.a)?, input::vertices(&s, &a.c)?, input::vertices(&s, &a.b)?);
    let holds = indep(&s, &x, &c, &y)?;
    Ok(Run::new(true, json!({ "independent": holds }), format!("independent: {holds}")))
}

fn cmd_amalgamation(a: &AmalgamationArgs) -> Result<Run> {
    let sg = input::semigroup(&a.semigroup)?;
    let fam = family(&a.family)?;
    let report = check_amalgamation(&sg, a.base, fam.as_ref())?;
    let summary = match &report.failure {
        None => format!(
            "amalgamation holds over bases of size at most {} ({} bases, {} extension pairs)",
            a.base, report.bases_checked, report.pairs_checked
        ),
        Some(w) => format!("amalgamation fails: {}", w.reason),
    };
    Ok(Run::new(report.passed, &report, summary))
}

fn space_run(s: pocs_core::space::MetricSpace, fam: Option<&pocs_core::fraisse::TriangleFamily>) -> Result<Run> {
    let forbidden = fam.map(|f| check_forbidden(&s, f)).transpose()?.unwrap_or_default();
    let summary = format!("{} vertices, {} forbidden triangles", s.len(), forbidden.len());
    Ok(Run::new(forbidden.is_empty(), json!({ "space": s.to_data(), "forbidden": forbidden }), summary))
}

fn cmd_generic(a: &GenericArgs) -> Result<Run> {
    let sg = input::semigroup(&a.semigroup)?;
    let fam = family(&a.family)?;
    let params = GenericParams { rounds: a.rounds, max_base: a.max_base, max_vertices: a.max_vertices };
    space_run(build_generic(&sg, params, a.seed, fam.as_ref())?, fam.as_ref())
}

fn cmd_random(a: &RandomArgs) -> Result<Run> {
    let sg = input::semigroup(&a.semigroup)?;
    let fam = family(&a.family)?;
    space_run(random_space(&sg, a.vertices, a.seed, fam.as_ref())?, fam.as_ref())
}

fn cmd_enumerate(a: &EnumerateArgs) -> Result<Run> {
    let all = enumerate_pocs(a.max_size)?;
    let by_size: Vec<usize> = (1..=a.max_size).map(|m| all.iter().filter(|s| s.size() == m).count()).collect();
    let list: Vec<_> = all.iter().map(|s| json!({ "id": s.canonical_id(), "semigroup": s.to_data() })).collect();
    let summary = format!("{} semigroups; by carrier size 1..={}: {:?}", all.len(), a.max_size, by_size);
    Ok(Run::new(true, json!({ "count": all.len(), "by_size": by_size, "semigroups": list }), summary))
}

fn cmd_classify(a: &ClassifyArgs) -> Result<Run> {
    let rows = classify_semigroups(a.max_size, a.base)?;
    let mut summary = format!("{:<28} {:>4} {:>5} {:>5} {:>5} {:>5}\n", "id", "size", "arch", "amalg", "bound", "1-sup");
    let show = |o: Option<bool>| o.map_or("-".to_string(), |b| b.to_string());
    for r in &rows {
        summary.push_str(&format!(
            "{:<28} {:>4} {:>5} {:>5} {:>5} {:>5}\n",
            r.id,
            r.size,
            r.archimedean,
            show(r.amalgamation),
            r.bound.map_or("-".to_string(), |b| b.to_string()),
            show(r.one_supported)
        ));
    }
    Ok(Run::new(true, json!({ "rows": rows }), summary.trim_end().to_string()))
}

fn cmd_geodesic(a: &GeodesicArgs) -> Result<Run> {
    let sg = input::semigroup(&a.semigroup)?;
    let steps = a
        .steps
        .iter()
        .map(|l| sg.elem(l).ok_or_else(|| Error::Input(format!("{l:?} is not an element label"))))
        .collect::<Result<Vec<_>>>()?;
    let g = geodesic_with_profile(&sg, &StepProfile::new(steps)?)?;
    let end = label_of(&sg, g.endpoint_distance());
    let free = indep(g.space(), &[g.first()], &[], &[g.last()])?;
    let fold = fold_law_holds(g.space(), g.seq());
    let payload = json!({
        "geodesic": g.to_json(),
        "endpoint_distance": end,
        "fold_law": fold,
        "endpoints_independent": free,
    });
    Ok(Run::new(fold, payload, format!("endpoint distance {end}; endpoints independent over the empty set: {free}")))
}

fn cmd_almost_free(a: &SemigroupArg) -> Result<Run> {
    let sg = input::semigroup(&a.semigroup)?;
    let elems: Vec<&str> = almost_free_elements(&sg)?.into_iter().map(|e| sg.label(e)).collect();
    let summary = format!("almost free: {{{}}}", elems.join(", "));
    Ok(Run::new(true, json!({ "semigroup": semigroup_id(&sg), "almost_free": elems }), summary))
}

fn cmd_forbidden(a: &ForbiddenArgs) -> Result<Run> {
    let s = input::space(&a.space)?;
    let fam = family(&a.family)?.ok_or_else(|| Error::Input("a triangle family is required".into()))?;
    let found = check_forbidden(&s, &fam)?;
    let mut summary = format!("{} forbidden triangles", found.len());
    for t in &found {
        summary.push_str(&format!("\n  {t}"));
    }
    Ok(Run::new(found.is_empty(), json!({ "family": fam.name(), "forbidden": found }), summary))
}

fn cmd_complete(a: &FileArg) -> Result<Run> {
    let g = input::graph(&a.file)?;
    let s = complete_shortest_path(&g)?;
    Ok(Run::new(true, json!({ "space": s.to_data() }), format!("completed {} vertices", s.len())))
}

fn dispatch(cmd: &Command) -> Result<Run> {
    match cmd {
        Command::Validate(a) => cmd_validate(a),
        Command::Bound(a) => cmd_bound(a),
        Command::Check(a) => cmd_check(a),
        Command::Support(a) => cmd_support(a),
        Command::Indep(a) => cmd_indep(a),
        Command::Amalgamation(a) => cmd_amalgamation(a),
        Command::Generic(a) => cmd_generic(a),
        Command::Random(a) => cmd_random(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Classify(a) => cmd_classify(a),
        Command::Geodesic(a) => cmd_geodesic(a),
        Command::AlmostFree(a) => cmd_almost_free(a),
        Command::Forbidden(a) => cmd_forbidden(a),
        Command::Complete(a) => cmd_complete(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot configure thread pool: {e}");
            return Outcome::Error.exit_code();
        }
    }
    let start = Instant::now();
    let run = dispatch(&cli.command).unwrap_or_else(|e| Run::from_error(&e));
    if run.outcome == Outcome::Error {
        eprintln!("{}", run.summary);
        if !cli.json {
            return run.outcome.exit_code();
        }
    }
    let text = if cli.json {
        let report = RunReport {
            command: cli.command.name(),
            parameters: cli.command.parameters(),
            outcome: run.outcome,
            payload: &run.payload,
            seed: cli.command.seed(),
            elapsed_ms: cli.timing.then(|| start.elapsed().as_millis()),
        };
        serde_json::to_string_pretty(&report).expect("serializable report") + "\n"
    } else {
        format!("{}\n", run.summary)
    };
    if let Err(e) = emit(&text, cli.output.as_deref()) {
        eprintln!("error: cannot write output: {e}");
        return Outcome::Error.exit_code();
    }
    run.outcome.exit_code()
}
