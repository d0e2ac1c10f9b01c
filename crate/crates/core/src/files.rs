//! Line-oriented file formats: interpretations, knowledge bases, and
//! argumentation graphs/timelines.
//!
//! Interpretation files:
//!
//! ```text
//! # temporal when a lasso line is present, non-temporal otherwise
//! worlds w1 w2
//! lasso prefix=2 loop=2
//! prefmode coherent|explicit|weighted
//! val t=0 w=w1 professor=1 teaches=0.8
//! val w=w1 student=1            # no t= in a temporal file: all positions
//! pref t=0 "a" : w1 < w2        # explicit mode only
//! pref t=1 "a" : none           # declared-empty relation
//! ```
//!
//! Knowledge bases:
//!
//! ```text
//! strict: G((T(professor) -> teaches U retired) >= 0.7)
//! weighted(student): F holds_Degree : 30
//! ```
//!
//! Argumentation graphs (blocks after `@t=<step>` update the previous
//! block's graph from that step on):
//!
//! ```text
//! arg a base=1
//! edge a b weight=-1
//! seed a=1 b=0
//! @t=3
//! edge a b weight=0
//! ```
//!
//! `#` starts a comment anywhere outside quotes. Writers emit the same
//! formats; written models re-parse to equal values.

use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{parse_rational, rational_to_string, Degree, DegreeError};
use crate::argumentation::{ArgError, ArgGraph, GraphTimeline, Labelling};
use crate::semantics::{ModelError, PrefMode, PreferentialInterpretation};
use crate::syntax::{parse_formula, parse_graded, AstError, ParseError, WeightedConditional};
use crate::temporal::TemporalInterpretation;
use crate::weighted::WeightedKB;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FileError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Formula {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("line {line}: {source}")]
    Degree {
        line: usize,
        #[source]
        source: DegreeError,
    },
    #[error("line {line}: {source}")]
    Model {
        line: usize,
        #[source]
        source: ModelError,
    },
    #[error("line {line}: {source}")]
    Ast {
        line: usize,
        #[source]
        source: AstError,
    },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: ArgError,
    },
    #[error("{0}")]
    Structure(String),
}

/// Either kind of interpretation file.
#[derive(Debug, Clone)]
pub enum LoadedModel {
    Pref(PreferentialInterpretation),
    Temporal(TemporalInterpretation),
}

impl LoadedModel {
    /// A temporal view of the model: temporal files as-is, non-temporal
    /// ones lifted to the constant trace.
    pub fn to_temporal(&self) -> TemporalInterpretation {
        match self {
            LoadedModel::Pref(m) => TemporalInterpretation::lift(m),
            LoadedModel::Temporal(i) => i.clone(),
        }
    }

    pub fn pref_mode(&self) -> PrefMode {
        match self {
            LoadedModel::Pref(m) => m.pref_mode(),
            LoadedModel::Temporal(i) => i.pref_mode(),
        }
    }
}

/// Strips a `#` comment (outside double quotes) and trailing whitespace.
fn strip_comment(line: &str) -> &str {
    let mut in_quote = false;
    for (i, c) in line.char_indices() {
        match c {
            '"' => in_quote = !in_quote,
            '#' if !in_quote => return line[..i].trim_end(),
            _ => {}
        }
    }
    line.trim_end()
}

fn malformed(line: usize, msg: impl Into<String>) -> FileError {
    FileError::Malformed { line, msg: msg.into() }
}

/// Splits a `key=value` token.
fn kv(token: &str, line: usize) -> Result<(&str, &str), FileError> {
    token
        .split_once('=')
        .ok_or_else(|| malformed(line, format!("expected key=value, found `{token}`")))
}

fn parse_degree_at(text: &str, line: usize) -> Result<Degree, FileError> {
    text.parse::<Degree>().map_err(|source| FileError::Degree { line, source })
}

// ----- interpretation files -----

struct RawVal {
    line: usize,
    time: Option<usize>,
    world: String,
    assigns: Vec<(String, Degree)>,
}

struct RawPref {
    line: usize,
    time: Option<usize>,
    key: String,
    /// `None` declares an (empty) relation without pairs.
    pair: Option<(String, String)>,
}

pub fn parse_interpretation(text: &str) -> Result<LoadedModel, FileError> {
    let mut worlds: Option<(usize, Vec<String>)> = None;
    let mut lasso: Option<(usize, usize, usize)> = None;
    let mut mode: Option<(usize, PrefMode)> = None;
    let mut vals: Vec<RawVal> = Vec::new();
    let mut prefs: Vec<RawPref> = Vec::new();

    for (lno, raw) in text.lines().enumerate() {
        let line = lno + 1;
        let stripped = strip_comment(raw).trim();
        if stripped.is_empty() {
            continue;
        }
        let (head, rest) = stripped.split_once(char::is_whitespace).unwrap_or((stripped, ""));
        match head {
            "worlds" => {
                if worlds.is_some() {
                    return Err(malformed(line, "duplicate `worlds` line"));
                }
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(malformed(line, "`worlds` needs at least one world"));
                }
                worlds = Some((line, names));
            }
            "lasso" => {
                if lasso.is_some() {
                    return Err(malformed(line, "duplicate `lasso` line"));
                }
                let mut prefix = None;
                let mut loop_len = None;
                for tok in rest.split_whitespace() {
                    let (k, v) = kv(tok, line)?;
                    let n: usize =
                        v.parse().map_err(|_| malformed(line, format!("bad integer `{v}`")))?;
                    match k {
                        "prefix" => prefix = Some(n),
                        "loop" => loop_len = Some(n),
                        other => {
                            return Err(malformed(line, format!("unknown lasso field `{other}`")))
                        }
                    }
                }
                match (prefix, loop_len) {
                    (Some(p), Some(l)) => lasso = Some((line, p, l)),
                    _ => return Err(malformed(line, "lasso needs prefix=<p> loop=<l>")),
                }
            }
            "prefmode" => {
                if mode.is_some() {
                    return Err(malformed(line, "duplicate `prefmode` line"));
                }
                let m = match rest.trim() {
                    "coherent" => PrefMode::Coherent,
                    "explicit" => PrefMode::Explicit,
                    "weighted" => PrefMode::Weighted,
                    other => return Err(malformed(line, format!("unknown prefmode `{other}`"))),
                };
                mode = Some((line, m));
            }
            "val" => {
                let mut time = None;
                let mut world = None;
                let mut assigns = Vec::new();
                for tok in rest.split_whitespace() {
                    let (k, v) = kv(tok, line)?;
                    match k {
                        "t" => {
                            time = Some(
                                v.parse::<usize>()
                                    .map_err(|_| malformed(line, format!("bad time `{v}`")))?,
                            )
                        }
                        "w" => world = Some(v.to_string()),
                        prop => assigns.push((prop.to_string(), parse_degree_at(v, line)?)),
                    }
                }
                let world = world.ok_or_else(|| malformed(line, "`val` line needs w=<world>"))?;
                vals.push(RawVal { line, time, world, assigns });
            }
            "pref" => {
                prefs.push(parse_pref_line(rest, line)?);
            }
            other => return Err(malformed(line, format!("unknown directive `{other}`"))),
        }
    }

    let (_, world_names) =
        worlds.ok_or_else(|| FileError::Structure("missing `worlds` line".into()))?;
    let pref_mode = mode.map(|(_, m)| m).unwrap_or(PrefMode::Coherent);
    if pref_mode != PrefMode::Explicit {
        if let Some(p) = prefs.first() {
            return Err(malformed(
                p.line,
                format!("`pref` lines require explicit prefmode, not {}", pref_mode.name()),
            ));
        }
    }

    if let Some((lline, prefix, loop_len)) = lasso {
        let mut interp = TemporalInterpretation::new(world_names, prefix, loop_len, pref_mode)
            .map_err(|source| FileError::Model { line: lline, source })?;
        for v in vals {
            match v.time {
                Some(t) => {
                    for (prop, deg) in &v.assigns {
                        interp
                            .set_val(t, &v.world, prop, *deg)
                            .map_err(|source| FileError::Model { line: v.line, source })?;
                    }
                }
                None => {
                    for (prop, deg) in &v.assigns {
                        interp
                            .set_val_all_times(&v.world, prop, *deg)
                            .map_err(|source| FileError::Model { line: v.line, source })?;
                    }
                }
            }
        }
        for p in prefs {
            let t =
                p.time.ok_or_else(|| malformed(p.line, "temporal `pref` lines need t=<time>"))?;
            match &p.pair {
                Some((lower, upper)) => interp
                    .add_pref_pair(t, &p.key, lower, upper)
                    .map_err(|source| FileError::Model { line: p.line, source })?,
                None => interp
                    .ensure_pref_entry(t, &p.key)
                    .map_err(|source| FileError::Model { line: p.line, source })?,
            }
        }
        interp.validate_prefs().map_err(|source| FileError::Model { line: 0, source })?;
        Ok(LoadedModel::Temporal(interp))
    } else {
        let mut m = PreferentialInterpretation::new(world_names, pref_mode)
            .map_err(|source| FileError::Model { line: 0, source })?;
        for v in vals {
            if v.time.is_some() {
                return Err(malformed(v.line, "t=<time> needs a `lasso` line"));
            }
            for (prop, deg) in &v.assigns {
                m.set_val(&v.world, prop, *deg)
                    .map_err(|source| FileError::Model { line: v.line, source })?;
            }
        }
        for p in prefs {
            if p.time.is_some() {
                return Err(malformed(p.line, "t=<time> needs a `lasso` line"));
            }
            match &p.pair {
                Some((lower, upper)) => m
                    .add_pref_pair(&p.key, lower, upper)
                    .map_err(|source| FileError::Model { line: p.line, source })?,
                None => m.ensure_pref_entry(&p.key),
            }
        }
        m.validate_prefs().map_err(|source| FileError::Model { line: 0, source })?;
        Ok(LoadedModel::Pref(m))
    }
}

/// `[t=<n>] "<formula>" : <w> < <w>` after the `pref` keyword.
fn parse_pref_line(rest: &str, line: usize) -> Result<RawPref, FileError> {
    let mut rest = rest.trim();
    let mut time = None;
    if let Some(after) = rest.strip_prefix("t=") {
        let end = after.find(char::is_whitespace).unwrap_or(after.len());
        time = Some(
            after[..end]
                .parse::<usize>()
                .map_err(|_| malformed(line, format!("bad time `{}`", &after[..end])))?,
        );
        rest = after[end..].trim_start();
    }
    let rest = rest.strip_prefix('"').ok_or_else(|| malformed(line, "expected quoted formula"))?;
    let close = rest.find('"').ok_or_else(|| malformed(line, "unterminated quoted formula"))?;
    let formula_text = &rest[..close];
    let formula =
        parse_formula(formula_text).map_err(|source| FileError::Formula { line, source })?;
    let tail = rest[close + 1..].trim();
    let tail =
        tail.strip_prefix(':').ok_or_else(|| malformed(line, "expected `:` after formula"))?.trim();
    if tail == "none" {
        return Ok(RawPref { line, time, key: formula.key(), pair: None });
    }
    let parts: Vec<&str> = tail.split('<').map(str::trim).collect();
    if parts.len() != 2 || parts[0].is_empty() || parts[1].is_empty() {
        return Err(malformed(line, "expected `w_lower < w_upper` or `none`"));
    }
    Ok(RawPref {
        line,
        time,
        key: formula.key(),
        pair: Some((parts[0].to_string(), parts[1].to_string())),
    })
}

pub fn write_pref_interpretation(m: &PreferentialInterpretation) -> String {
    let mut out = String::new();
    writeln!(out, "worlds {}", m.worlds().join(" ")).unwrap();
    writeln!(out, "prefmode {}", m.pref_mode().name()).unwrap();
    for (w, name) in m.worlds().iter().enumerate() {
        let assigns: Vec<String> = m.valuation(w).iter().map(|(p, d)| format!("{p}={d}")).collect();
        if !assigns.is_empty() {
            writeln!(out, "val w={name} {}", assigns.join(" ")).unwrap();
        }
    }
    for (key, rel) in m.stored_prefs() {
        if rel.is_empty() {
            writeln!(out, "pref \"{key}\" : none").unwrap();
        }
        for &(lo, hi) in rel {
            writeln!(out, "pref \"{key}\" : {} < {}", m.world_name(lo), m.world_name(hi)).unwrap();
        }
    }
    out
}

pub fn write_temporal_interpretation(i: &TemporalInterpretation) -> String {
    let mut out = String::new();
    writeln!(out, "worlds {}", i.worlds().join(" ")).unwrap();
    writeln!(out, "lasso prefix={} loop={}", i.prefix_len(), i.loop_len()).unwrap();
    writeln!(out, "prefmode {}", i.pref_mode().name()).unwrap();
    let props = i.props();
    for t in 0..i.positions() {
        for (w, name) in i.worlds().iter().enumerate() {
            let assigns: Vec<String> = props
                .iter()
                .filter_map(|p| i.val_at(t, w, p).map(|d| format!("{p}={d}")))
                .collect();
            if !assigns.is_empty() {
                writeln!(out, "val t={t} w={name} {}", assigns.join(" ")).unwrap();
            }
        }
    }
    for (t, key, rel) in i.pref_entries() {
        if rel.is_empty() {
            writeln!(out, "pref t={t} \"{key}\" : none").unwrap();
        }
        for &(lo, hi) in rel {
            writeln!(out, "pref t={t} \"{key}\" : {} < {}", i.world_name(lo), i.world_name(hi))
                .unwrap();
        }
    }
    out
}

pub fn write_model(model: &LoadedModel) -> String {
    match model {
        LoadedModel::Pref(m) => write_pref_interpretation(m),
        LoadedModel::Temporal(i) => write_temporal_interpretation(i),
    }
}

// ----- knowledge-base files -----

pub fn parse_kb(text: &str) -> Result<WeightedKB, FileError> {
    let mut kb = WeightedKB::default();
    for (lno, raw) in text.lines().enumerate() {
        let line = lno + 1;
        let stripped = strip_comment(raw).trim();
        if stripped.is_empty() {
            continue;
        }
        if let Some(rest) = stripped.strip_prefix("strict:") {
            let alpha =
                parse_graded(rest.trim()).map_err(|source| FileError::Formula { line, source })?;
            kb.strict.push(alpha);
        } else if let Some(rest) = stripped.strip_prefix("weighted(") {
            // Find the parenthesis closing the subject; the subject may
            // itself contain parentheses.
            let mut depth = 1usize;
            let mut close = None;
            for (i, c) in rest.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            close = Some(i);
                            break;
                        }
                    }
                    _ => {}
                }
            }
            let close = close.ok_or_else(|| malformed(line, "unbalanced `weighted(`"))?;
            let subject = parse_formula(&rest[..close])
                .map_err(|source| FileError::Formula { line, source })?;
            let tail = rest[close + 1..].trim_start();
            let tail = tail
                .strip_prefix(':')
                .ok_or_else(|| malformed(line, "expected `:` after weighted(<subject>)"))?;
            let (cons_text, weight_text) = tail
                .rsplit_once(':')
                .ok_or_else(|| malformed(line, "expected `<consequent> : <weight>`"))?;
            let consequent = parse_formula(cons_text.trim())
                .map_err(|source| FileError::Formula { line, source })?;
            let weight = parse_rational(weight_text.trim())
                .map_err(|source| FileError::Degree { line, source })?;
            let cond = WeightedConditional::new(subject, consequent, weight)
                .map_err(|source| FileError::Ast { line, source })?;
            kb.weighted.push(cond);
        } else {
            return Err(malformed(
                line,
                "expected `strict: <graded formula>` or `weighted(<subject>): <consequent> : <weight>`",
            ));
        }
    }
    Ok(kb)
}

pub fn write_kb(kb: &WeightedKB) -> String {
    let mut out = String::new();
    for alpha in &kb.strict {
        writeln!(out, "strict: {alpha}").unwrap();
    }
    for cond in &kb.weighted {
        writeln!(
            out,
            "weighted({}): {} : {}",
            cond.subject(),
            cond.consequent(),
            rational_to_string(cond.weight)
        )
        .unwrap();
    }
    out
}

// ----- argumentation graph files -----

pub fn parse_graph_file(text: &str) -> Result<GraphTimeline, FileError> {
    let mut blocks: Vec<(usize, ArgGraph)> = Vec::new();
    let mut current = ArgGraph::new();
    let mut current_step = 0usize;
    let mut raw_seeds: Vec<(usize, Vec<(String, Degree)>)> = Vec::new();

    for (lno, raw) in text.lines().enumerate() {
        let line = lno + 1;
        let stripped = strip_comment(raw).trim();
        if stripped.is_empty() {
            continue;
        }
        if let Some(rest) = stripped.strip_prefix("@t=") {
            let step: usize = rest
                .trim()
                .parse()
                .map_err(|_| malformed(line, format!("bad step `{}`", rest.trim())))?;
            blocks.push((current_step, current.clone()));
            current_step = step;
            continue;
        }
        let (head, rest) = stripped.split_once(char::is_whitespace).unwrap_or((stripped, ""));
        match head {
            "arg" => {
                let mut toks = rest.split_whitespace();
                let name = toks.next().ok_or_else(|| malformed(line, "`arg` needs a name"))?;
                let base_tok =
                    toks.next().ok_or_else(|| malformed(line, "`arg` needs base=<degree>"))?;
                let (k, v) = kv(base_tok, line)?;
                if k != "base" {
                    return Err(malformed(
                        line,
                        format!("expected base=<degree>, found `{base_tok}`"),
                    ));
                }
                let base = parse_degree_at(v, line)?;
                if blocks.is_empty() {
                    current
                        .add_argument(name, base)
                        .map_err(|source| FileError::Graph { line, source })?;
                } else {
                    // Later blocks may only update base scores.
                    current
                        .set_base(name, base)
                        .map_err(|source| FileError::Graph { line, source })?;
                }
            }
            "edge" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 3 {
                    return Err(malformed(line, "expected `edge <from> <to> weight=<rational>`"));
                }
                let (k, v) = kv(toks[2], line)?;
                if k != "weight" {
                    return Err(malformed(line, "expected weight=<rational>"));
                }
                let weight =
                    parse_rational(v).map_err(|source| FileError::Degree { line, source })?;
                current
                    .set_edge(toks[0], toks[1], weight)
                    .map_err(|source| FileError::Graph { line, source })?;
            }
            "seed" => {
                let mut assigns = Vec::new();
                for tok in rest.split_whitespace() {
                    let (name, v) = kv(tok, line)?;
                    assigns.push((name.to_string(), parse_degree_at(v, line)?));
                }
                raw_seeds.push((line, assigns));
            }
            other => return Err(malformed(line, format!("unknown directive `{other}`"))),
        }
    }
    blocks.push((current_step, current));

    let args: Vec<String> = blocks[0].1.arguments().to_vec();
    let mut seeds = Vec::new();
    for (line, assigns) in raw_seeds {
        let mut values = vec![None; args.len()];
        for (name, d) in assigns {
            let idx = args.iter().position(|a| *a == name).ok_or_else(|| FileError::Graph {
                line,
                source: ArgError::UnknownArgument(name.clone()),
            })?;
            values[idx] = Some(d);
        }
        let missing: Vec<&str> = args
            .iter()
            .zip(&values)
            .filter(|(_, v)| v.is_none())
            .map(|(a, _)| a.as_str())
            .collect();
        if !missing.is_empty() {
            return Err(malformed(line, format!("seed misses arguments: {}", missing.join(" "))));
        }
        seeds.push(Labelling(values.into_iter().map(Option::unwrap).collect()));
    }

    GraphTimeline::new(blocks, seeds).map_err(|source| FileError::Graph { line: 0, source })
}
