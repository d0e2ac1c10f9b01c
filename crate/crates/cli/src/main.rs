//! Batch command-line surface for the reasoning engine.
//!
//! Exit codes: 0 success (all SAT / entailed), 1 unsatisfied verdicts
//! (UNSAT lines, countermodel found, failed postulate), 2 parse errors,
//! 3 semantic errors (missing propositions/preferences and the like),
//! 4 guard violations (search space too large, iteration horizon).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mvtl_core::algebra::{Algebra, Scale};
use mvtl_core::argumentation::{self, ArgError, GraphTimeline};
use mvtl_core::entailment::{
    default_klm_pool, entails, klm_suite, EntailError, PrefEnumMode, SearchSpace, Verdict,
};
use mvtl_core::files::{
    parse_graph_file, parse_interpretation, parse_kb, write_pref_interpretation,
    write_temporal_interpretation, FileError, LoadedModel,
};
use mvtl_core::semantics::{EvalError, PrefMode};
use mvtl_core::syntax::{parse_formula, parse_graded, Formula};
use mvtl_core::temporal::TemporalInterpretation;
use mvtl_core::weighted::{
    check_weighted_satisfaction, derive_preferences, install_derived_preferences,
};

#[derive(Parser)]
#[command(
    name = "mvtl",
    version,
    about = "Reasoner for a many-valued temporal conditional logic with typicality"
)]
struct Cli {
    /// Combination functions: goedel or zadeh.
    #[arg(long, global = true, default_value = "goedel")]
    algebra: Algebra,

    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula in a world (and time point) of a model.
    Eval {
        /// Interpretation file.
        #[arg(long)]
        model: PathBuf,
        /// Formula text.
        #[arg(long)]
        formula: String,
        /// World id.
        #[arg(long)]
        world: String,
        /// Time point (temporal models; wraps into the lasso).
        #[arg(long, default_value_t = 0)]
        time: usize,
        /// Knowledge base used to derive preferences for weighted-mode
        /// models.
        #[arg(long)]
        kb: Option<PathBuf>,
    },
    /// Check every formula of a knowledge base against a model.
    Check {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        kb: PathBuf,
    },
    /// Report coherence/faithfulness/modularity of preference relations.
    Coherence {
        #[arg(long)]
        model: PathBuf,
        /// Formula keys to check (defaults to the keys with stored
        /// relations, or all propositions in coherent mode).
        #[arg(long = "key")]
        keys: Vec<String>,
    },
    /// Derive and print weight-based preference relations.
    Prefs {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        kb: PathBuf,
    },
    /// Decide entailment of a query from a KB over a finite search space.
    Entail(EntailArgs),
    /// Verify the KLM postulates over an exhaustive model space.
    Klm(KlmArgs),
    /// Iterate the gradual semantics from the seeds of a graph file.
    ArgRun {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        scale: u32,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        /// Write the seed-trajectory temporal interpretation to a file
        /// (`-` for stdout).
        #[arg(long)]
        emit_model: Option<String>,
    },
    /// Enumerate the fixed points of the gradual semantics.
    ArgFixpoints {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        scale: u32,
        /// Write the fixpoint interpretation to a file (`-` for stdout).
        #[arg(long)]
        emit_model: Option<String>,
    },
    /// Check a knowledge base over the interpretation induced by a graph.
    ArgCheck {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        kb: PathBuf,
        #[arg(long)]
        scale: u32,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
    },
}

#[derive(Args)]
struct EntailArgs {
    /// Knowledge base file (strict formulas only); omitted = empty KB.
    #[arg(long)]
    kb: Option<PathBuf>,
    /// Query: a temporal graded formula.
    #[arg(long)]
    query: String,
    #[arg(long)]
    worlds: usize,
    #[arg(long)]
    scale: u32,
    /// Propositions of the space (comma-separated); defaults to those in
    /// the KB and query.
    #[arg(long, value_delimiter = ',')]
    props: Vec<String>,
    #[arg(long, default_value_t = 0)]
    prefix: usize,
    #[arg(long = "loop", default_value_t = 1)]
    loop_len: usize,
    #[arg(long, value_enum, default_value_t = PrefEnumArg::Coherent)]
    pref_enum: PrefEnumArg,
}

#[derive(Args)]
struct KlmArgs {
    #[arg(long)]
    worlds: usize,
    #[arg(long)]
    scale: u32,
    #[arg(long, value_delimiter = ',')]
    props: Vec<String>,
    /// Pool formulas instantiating A, B, C (repeatable); defaults to a
    /// pool built from the propositions.
    #[arg(long = "pool")]
    pool: Vec<String>,
    #[arg(long, value_enum, default_value_t = PrefEnumArg::Coherent)]
    pref_enum: PrefEnumArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PrefEnumArg {
    Coherent,
    AllOrders,
}

impl From<PrefEnumArg> for PrefEnumMode {
    fn from(v: PrefEnumArg) -> Self {
        match v {
            PrefEnumArg::Coherent => PrefEnumMode::CoherentOnly,
            PrefEnumArg::AllOrders => PrefEnumMode::AllStrictOrders,
        }
    }
}

/// Error classes mapped to exit codes 2/3/4.
enum CliError {
    Parse(String),
    Semantic(String),
    Guard(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Semantic(_) => 3,
            CliError::Guard(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Semantic(m) | CliError::Guard(m) => m,
        }
    }
}

impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<mvtl_core::syntax::ParseError> for CliError {
    fn from(e: mvtl_core::syntax::ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        CliError::Semantic(e.to_string())
    }
}

impl From<mvtl_core::algebra::ScaleError> for CliError {
    fn from(e: mvtl_core::algebra::ScaleError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<EntailError> for CliError {
    fn from(e: EntailError) -> Self {
        match e {
            EntailError::SpaceTooLarge(_) | EntailError::Guard(_) => CliError::Guard(e.to_string()),
            EntailError::Eval(inner) => CliError::Semantic(inner.to_string()),
            EntailError::Model(inner) => CliError::Semantic(inner.to_string()),
        }
    }
}

impl From<ArgError> for CliError {
    fn from(e: ArgError) -> Self {
        match e {
            ArgError::HorizonExceeded(_) | ArgError::SpaceTooLarge(_) => {
                CliError::Guard(e.to_string())
            }
            other => CliError::Semantic(other.to_string()),
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read `{}`: {e}", path.display())))
}

/// Loads a model and, for weighted-mode models, installs the preferences
/// derived from the KB.
fn load_model(path: &Path, kb_path: Option<&Path>, alg: Algebra) -> Result<LoadedModel, CliError> {
    let model = parse_interpretation(&read_file(path)?)?;
    if model.pref_mode() == PrefMode::Weighted {
        let kb_path = kb_path.ok_or_else(|| {
            CliError::Semantic(
                "the model uses weighted prefmode; pass --kb to derive its preferences".into(),
            )
        })?;
        let kb = parse_kb(&read_file(kb_path)?)?;
        let mut interp = model.to_temporal();
        install_derived_preferences(&mut interp, &kb, alg)?;
        return Ok(LoadedModel::Temporal(interp));
    }
    Ok(model)
}

struct Output {
    json: bool,
    text: String,
    doc: Value,
}

impl Output {
    fn new(json: bool, command: &str) -> Self {
        Output { json, text: String::new(), doc: json!({ "command": command }) }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set(&mut self, key: &str, value: Value) {
        self.doc[key] = value;
    }

    fn finish(self) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&self.doc).unwrap());
        } else {
            print!("{}", self.text);
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let alg = cli.algebra;
    let json = cli.json;
    match cli.command {
        Command::Eval { model, formula, world, time, kb } => {
            cmd_eval(&model, &formula, &world, time, kb.as_deref(), alg, json)
        }
        Command::Check { model, kb } => cmd_check(&model, &kb, alg, json),
        Command::Coherence { model, keys } => cmd_coherence(&model, &keys, alg, json),
        Command::Prefs { model, kb } => cmd_prefs(&model, &kb, alg, json),
        Command::Entail(args) => cmd_entail(args, alg, json),
        Command::Klm(args) => cmd_klm(args, alg, json),
        Command::ArgRun { graph, scale, max_steps, emit_model } => {
            cmd_arg_run(&graph, scale, max_steps, emit_model.as_deref(), json)
        }
        Command::ArgFixpoints { graph, scale, emit_model } => {
            cmd_arg_fixpoints(&graph, scale, emit_model.as_deref(), json)
        }
        Command::ArgCheck { graph, kb, scale, max_steps } => {
            cmd_arg_check(&graph, &kb, scale, max_steps, alg, json)
        }
    }
}

fn cmd_eval(
    model: &Path,
    formula: &str,
    world: &str,
    time: usize,
    kb: Option<&Path>,
    alg: Algebra,
    json: bool,
) -> Result<u8, CliError> {
    let f = parse_formula(formula)?;
    let loaded = load_model(model, kb, alg)?;
    let interp = loaded.to_temporal();
    let degree = interp.teval(time, world, &f, alg)?;
    let mut out = Output::new(json, "eval");
    out.line(degree.to_string());
    out.set("formula", json!(f.to_string()));
    out.set("world", json!(world));
    out.set("time", json!(time));
    out.set("degree", json!(degree.to_string()));
    out.finish();
    Ok(0)
}

fn cmd_check(model: &Path, kb_path: &Path, alg: Algebra, json: bool) -> Result<u8, CliError> {
    let kb = parse_kb(&read_file(kb_path)?)?;
    let loaded = load_model(model, Some(kb_path), alg)?;
    let interp = loaded.to_temporal();
    let report = check_weighted_satisfaction(&interp, &kb, alg)?;

    let mut out = Output::new(json, "check");
    let mut strict_json = Vec::new();
    for (alpha, sat) in &report.strict_verdicts {
        out.line(format!("{} {alpha}", if *sat { "SAT" } else { "UNSAT" }));
        strict_json.push(json!({ "formula": alpha.to_string(), "satisfied": sat }));
    }
    let mut mismatch_json = Vec::new();
    if !kb.weighted.is_empty() {
        out.line(format!(
            "WEIGHTED-PREFS {}{}",
            if report.prefs_satisfied { "SAT" } else { "UNSAT" },
            if report.substituted { " (derived preferences substituted)" } else { "" }
        ));
        for m in &report.mismatches {
            out.line(format!(
                "MISMATCH t={} key=\"{}\" {} {}{}",
                m.time,
                m.key,
                m.lower,
                m.upper,
                if m.stored_only { " (stored, not derived)" } else { " (derived, not stored)" }
            ));
            mismatch_json.push(json!({
                "time": m.time,
                "key": m.key,
                "lower": m.lower,
                "upper": m.upper,
                "stored_only": m.stored_only,
            }));
        }
    }
    out.set("strict", Value::Array(strict_json));
    out.set("prefs_satisfied", json!(report.prefs_satisfied));
    out.set("mismatches", Value::Array(mismatch_json));
    out.set("satisfied", json!(report.satisfied()));
    let ok = report.satisfied();
    out.finish();
    Ok(if ok { 0 } else { 1 })
}

fn cmd_coherence(model: &Path, keys: &[String], alg: Algebra, json: bool) -> Result<u8, CliError> {
    let loaded = load_model(model, None, alg)?;
    let interp = loaded.to_temporal();

    let key_formulas: Vec<Formula> = if keys.is_empty() {
        let stored: std::collections::BTreeSet<String> =
            interp.pref_entries().map(|(_, k, _)| k.to_string()).collect();
        let sources: Vec<String> = if stored.is_empty() {
            interp.props().into_iter().collect()
        } else {
            stored.into_iter().collect()
        };
        sources.iter().map(|k| parse_formula(k)).collect::<Result<_, _>>()?
    } else {
        keys.iter().map(|k| parse_formula(k)).collect::<Result<_, _>>()?
    };

    let mut out = Output::new(json, "coherence");
    let mut entries_json = Vec::new();
    let mut all_ok = true;
    let temporal = matches!(loaded, LoadedModel::Temporal(_));
    for t in 0..interp.positions() {
        let slice = interp.slice(t);
        let report = slice.check_coherence(&key_formulas, alg)?;
        for e in &report.entries {
            let prefix = if temporal { format!("t={t} ") } else { String::new() };
            out.line(format!(
                "{prefix}KEY \"{}\" coherent={} faithful={} modular={}",
                e.key,
                if e.coherent { "yes" } else { "no" },
                if e.faithful { "yes" } else { "no" },
                if e.modular { "yes" } else { "no" }
            ));
            for (x, y) in &e.coherence_violations {
                out.line(format!("{prefix}COHERENCE-VIOLATION \"{}\" {x} {y}", e.key));
            }
            for (x, y) in &e.faithfulness_violations {
                out.line(format!("{prefix}FAITHFULNESS-VIOLATION \"{}\" {x} {y}", e.key));
            }
            all_ok &= e.coherent && e.faithful;
            entries_json.push(json!({
                "time": t,
                "key": e.key,
                "coherent": e.coherent,
                "faithful": e.faithful,
                "modular": e.modular,
                "coherence_violations": e.coherence_violations,
                "faithfulness_violations": e.faithfulness_violations,
            }));
        }
        if !temporal {
            break;
        }
    }
    out.set("entries", Value::Array(entries_json));
    out.set("all_coherent_and_faithful", json!(all_ok));
    out.finish();
    Ok(if all_ok { 0 } else { 1 })
}

fn cmd_prefs(model: &Path, kb_path: &Path, alg: Algebra, json: bool) -> Result<u8, CliError> {
    let kb = parse_kb(&read_file(kb_path)?)?;
    let loaded = parse_interpretation(&read_file(model)?)?;
    let interp = loaded.to_temporal();
    let derived = derive_preferences(&interp, &kb, alg)?;
    let mut out = Output::new(json, "prefs");
    let mut rel_json = Vec::new();
    for ((t, key), rel) in &derived {
        for &(lo, hi) in rel {
            out.line(format!(
                "pref t={t} \"{key}\" : {} < {}",
                interp.world_name(lo),
                interp.world_name(hi)
            ));
            rel_json.push(json!({
                "time": t,
                "key": key,
                "lower": interp.world_name(lo),
                "upper": interp.world_name(hi),
            }));
        }
    }
    out.set("preferences", Value::Array(rel_json));
    out.finish();
    Ok(0)
}

fn cmd_entail(args: EntailArgs, alg: Algebra, json: bool) -> Result<u8, CliError> {
    let query = parse_graded(&args.query)?;
    let kb = match &args.kb {
        Some(path) => {
            let kb = parse_kb(&read_file(path)?)?;
            if !kb.weighted.is_empty() {
                return Err(CliError::Semantic(
                    "entailment is defined over strict temporal graded formulas; the KB contains weighted conditionals".into(),
                ));
            }
            kb.strict
        }
        None => Vec::new(),
    };

    let props = if args.props.is_empty() {
        let mut set = std::collections::BTreeSet::new();
        for alpha in &kb {
            alpha.props(&mut set);
        }
        query.props(&mut set);
        set.into_iter().collect()
    } else {
        args.props.clone()
    };

    let space = SearchSpace::new(args.worlds, Scale::new(args.scale)?, props)
        .with_lasso(args.prefix, args.loop_len)
        .with_pref_enum(args.pref_enum.into())
        .with_algebra(alg);

    let verdict = entails(&kb, &query, &space)?;
    let mut out = Output::new(json, "entail");
    out.set("space", json!(space.describe()));
    out.set("query", json!(query.to_string()));
    match verdict {
        Verdict::Entailed => {
            out.line(format!("ENTAILED (space: {})", space.describe()));
            out.set("verdict", json!("entailed"));
            out.finish();
            Ok(0)
        }
        Verdict::Countermodel(cm) => {
            let file = write_temporal_interpretation(&cm);
            out.line(format!("COUNTERMODEL (space: {})", space.describe()));
            out.line(&file);
            out.set("verdict", json!("countermodel"));
            out.set("countermodel", json!(file));
            out.finish();
            Ok(1)
        }
    }
}

fn cmd_klm(args: KlmArgs, alg: Algebra, json: bool) -> Result<u8, CliError> {
    if args.props.is_empty() {
        return Err(CliError::Parse("--props is required for the KLM suite".into()));
    }
    let space = SearchSpace::new(args.worlds, Scale::new(args.scale)?, args.props.clone())
        .with_pref_enum(args.pref_enum.into())
        .with_algebra(alg);
    let pool: Vec<Formula> = if args.pool.is_empty() {
        default_klm_pool(&space.props)
    } else {
        args.pool.iter().map(|p| parse_formula(p)).collect::<Result<_, _>>()?
    };

    let report = klm_suite(&space, &pool)?;
    let mut out = Output::new(json, "klm");
    out.set("space", json!(space.describe()));
    out.set("pool", json!(pool.iter().map(|f| f.to_string()).collect::<Vec<_>>()));
    let mut results_json = Vec::new();
    for r in &report.results {
        match (&r.counterexample, &r.skipped) {
            (None, None) => {
                out.line(format!(
                    "PASS {} (premise instances: {})",
                    r.postulate.name(),
                    r.premise_hits
                ));
            }
            (Some(cex), _) => {
                out.line(format!("FAIL {} at {}", r.postulate.name(), cex.instantiation));
                out.line(format!("  failed conclusion: {}", cex.failed_conclusion));
                let mut model_text = String::new();
                for line in write_pref_interpretation(&cex.model).lines() {
                    writeln!(model_text, "  {line}").unwrap();
                }
                out.line(model_text.trim_end());
            }
            (None, Some(reason)) => {
                out.line(format!("SKIP {}: {reason}", r.postulate.name()));
            }
        }
        results_json.push(json!({
            "postulate": r.postulate.name(),
            "passed": r.passed(),
            "premise_hits": r.premise_hits,
            "skipped": r.skipped,
            "counterexample": r.counterexample.as_ref().map(|c| json!({
                "instantiation": c.instantiation,
                "failed_conclusion": c.failed_conclusion,
                "model": write_pref_interpretation(&c.model),
            })),
        }));
    }
    out.set("results", Value::Array(results_json));
    out.set("all_passed", json!(report.all_passed()));
    let ok = report.all_passed();
    out.finish();
    Ok(if ok { 0 } else { 1 })
}

fn emit(path: &str, contents: &str, out: &mut Output) -> Result<(), CliError> {
    if path == "-" {
        out.line(contents.trim_end());
    } else {
        fs::write(path, contents)
            .map_err(|e| CliError::Semantic(format!("cannot write `{path}`: {e}")))?;
    }
    Ok(())
}

fn load_timeline(path: &Path) -> Result<GraphTimeline, CliError> {
    Ok(parse_graph_file(&read_file(path)?)?)
}

fn cmd_arg_run(
    graph: &Path,
    scale_n: u32,
    max_steps: usize,
    emit_model: Option<&str>,
    json: bool,
) -> Result<u8, CliError> {
    let timeline = load_timeline(graph)?;
    let scale = Scale::new(scale_n)?;
    if timeline.seeds.is_empty() {
        return Err(CliError::Semantic("the graph file declares no seeds".into()));
    }
    let args = timeline.first().arguments().to_vec();
    let mut out = Output::new(json, "arg-run");
    let mut traj_json = Vec::new();
    for (i, seed) in timeline.seeds.iter().enumerate() {
        let traj = argumentation::trajectory(&timeline, seed, scale, max_steps)?;
        out.line(format!("TRAJECTORY seed={i} prefix={} loop={}", traj.prefix_len, traj.loop_len));
        let mut states_json = Vec::new();
        for (t, sigma) in traj.states.iter().enumerate() {
            let labelled: Vec<String> =
                args.iter().enumerate().map(|(j, a)| format!("{a}={}", sigma.value(j))).collect();
            out.line(format!("LABELLING t={t} {}", labelled.join(" ")));
            states_json.push(json!({
                "time": t,
                "values": args
                    .iter()
                    .enumerate()
                    .map(|(j, a)| (a.clone(), sigma.value(j).to_string()))
                    .collect::<std::collections::BTreeMap<_, _>>(),
            }));
        }
        traj_json.push(json!({
            "seed": i,
            "prefix": traj.prefix_len,
            "loop": traj.loop_len,
            "states": states_json,
        }));
    }
    out.set("trajectories", Value::Array(traj_json));
    if let Some(path) = emit_model {
        let interp = argumentation::to_temporal_interpretation(&timeline, scale, max_steps)?;
        let text = write_temporal_interpretation(&interp);
        out.set("model", json!(text));
        emit(path, &text, &mut out)?;
    }
    out.finish();
    Ok(0)
}

fn cmd_arg_fixpoints(
    graph: &Path,
    scale_n: u32,
    emit_model: Option<&str>,
    json: bool,
) -> Result<u8, CliError> {
    let timeline = load_timeline(graph)?;
    if !timeline.is_static() {
        return Err(CliError::Semantic(
            "fixpoint enumeration needs a static graph (no @t= blocks)".into(),
        ));
    }
    let scale = Scale::new(scale_n)?;
    let g = timeline.first();
    let fps = argumentation::fixpoints(g, scale)?;
    let mut out = Output::new(json, "arg-fixpoints");
    let mut fp_json = Vec::new();
    for sigma in &fps {
        let labelled: Vec<String> = g
            .arguments()
            .iter()
            .enumerate()
            .map(|(j, a)| format!("{a}={}", sigma.value(j)))
            .collect();
        out.line(format!("FIXPOINT {}", labelled.join(" ")));
        fp_json.push(json!(g
            .arguments()
            .iter()
            .enumerate()
            .map(|(j, a)| (a.clone(), sigma.value(j).to_string()))
            .collect::<std::collections::BTreeMap<_, _>>()));
    }
    out.line(format!("COUNT {}", fps.len()));
    out.set("fixpoints", Value::Array(fp_json));
    out.set("count", json!(fps.len()));
    if let Some(path) = emit_model {
        if fps.is_empty() {
            return Err(CliError::Semantic(
                "no fixpoints: nothing to emit as an interpretation".into(),
            ));
        }
        let m = argumentation::to_interpretation(g, &fps)?;
        let text = write_pref_interpretation(&m);
        out.set("model", json!(text));
        emit(path, &text, &mut out)?;
    }
    out.finish();
    Ok(0)
}

fn cmd_arg_check(
    graph: &Path,
    kb_path: &Path,
    scale_n: u32,
    max_steps: usize,
    alg: Algebra,
    json: bool,
) -> Result<u8, CliError> {
    let timeline = load_timeline(graph)?;
    let scale = Scale::new(scale_n)?;
    let kb = parse_kb(&read_file(kb_path)?)?;

    // Timelines and seeds induce a temporal interpretation over seed
    // trajectories; a bare static graph uses its fixpoint labellings.
    let interp: TemporalInterpretation = if !timeline.seeds.is_empty() || !timeline.is_static() {
        argumentation::to_temporal_interpretation(&timeline, scale, max_steps)?
    } else {
        let g = timeline.first();
        let fps = argumentation::fixpoints(g, scale)?;
        if fps.is_empty() {
            return Err(CliError::Semantic(
                "the graph has no fixpoints and no seeds; nothing to check against".into(),
            ));
        }
        TemporalInterpretation::lift(&argumentation::to_interpretation(g, &fps)?)
    };

    let report = check_weighted_satisfaction(&interp, &kb, alg)?;
    let mut out = Output::new(json, "arg-check");
    let mut strict_json = Vec::new();
    for (alpha, sat) in &report.strict_verdicts {
        out.line(format!("{} {alpha}", if *sat { "SAT" } else { "UNSAT" }));
        strict_json.push(json!({ "formula": alpha.to_string(), "satisfied": sat }));
    }
    out.set("strict", Value::Array(strict_json));
    out.set("satisfied", json!(report.satisfied()));
    let ok = report.satisfied();
    out.finish();
    Ok(if ok { 0 } else { 1 })
}
