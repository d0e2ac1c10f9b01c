//! Gradual argumentation over the scale `C_n`.
//!
//! An argumentation graph carries a base score per argument and a signed
//! weight per edge. The shipped update rule aggregates additively and
//! projects back into the scale:
//!
//! `σ'(a) = round_n(clamp_[0,1](σ0(a) + Σ_{(b,a)∈R} π(b,a) · σ(b)))`
//!
//! with ties rounding toward the lower scale member. The labelling space
//! `C_n^{|A|}` is finite, so iteration from any seed is eventually
//! periodic and trajectories are returned as lassos. Labelling sets map
//! into preferential interpretations with one world per labelling,
//! arguments as propositions, and coherent preferences (`w_σ <_A w_σ'`
//! iff `σ(A) > σ'(A)`); seed trajectories map into temporal
//! interpretations with one world per seed.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use thiserror::Error;

use crate::algebra::{Degree, Rational, Scale};
use crate::semantics::{ModelError, PrefMode, PreferentialInterpretation};
use crate::temporal::TemporalInterpretation;

/// Cap on the exhaustive labelling scan.
pub const MAX_LABELLINGS: u128 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArgError {
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("labelling assigns {got} values but the graph has {want} arguments")]
    LabellingArity { got: usize, want: usize },
    #[error("labelling value {value} for `{arg}` is not in C_{n}")]
    ValueNotInScale { arg: String, value: Degree, n: u32 },
    #[error("no repeated labelling within {0} steps")]
    HorizonExceeded(usize),
    #[error("labelling space too large: {0} (cap {MAX_LABELLINGS})")]
    SpaceTooLarge(u128),
    #[error("timeline must contain at least one graph")]
    EmptyTimeline,
    #[error("timeline graphs must share the argument set")]
    IncompatibleArguments,
    #[error("timeline steps must be strictly increasing and start at 0")]
    BadTimelineSteps,
    #[error("at least one seed labelling is required")]
    NoSeeds,
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// An edge-weighted argumentation graph with base scores.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgGraph {
    arguments: Vec<String>,
    base: Vec<Degree>,
    edges: BTreeMap<(usize, usize), Rational>,
}

impl ArgGraph {
    pub fn new() -> Self {
        ArgGraph { arguments: Vec::new(), base: Vec::new(), edges: BTreeMap::new() }
    }

    pub fn add_argument(&mut self, name: &str, base: Degree) -> Result<(), ArgError> {
        if self.arguments.iter().any(|a| a == name) {
            return Err(ArgError::DuplicateArgument(name.to_string()));
        }
        self.arguments.push(name.to_string());
        self.base.push(base);
        Ok(())
    }

    pub fn argument_index(&self, name: &str) -> Result<usize, ArgError> {
        self.arguments
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| ArgError::UnknownArgument(name.to_string()))
    }

    /// Sets the weight of the edge `from -> to`, replacing any previous
    /// weight.
    pub fn set_edge(&mut self, from: &str, to: &str, weight: Rational) -> Result<(), ArgError> {
        let f = self.argument_index(from)?;
        let t = self.argument_index(to)?;
        self.edges.insert((f, t), weight);
        Ok(())
    }

    pub fn set_base(&mut self, name: &str, base: Degree) -> Result<(), ArgError> {
        let i = self.argument_index(name)?;
        self.base[i] = base;
        Ok(())
    }

    pub fn arguments(&self) -> &[String] {
        &self.arguments
    }

    pub fn num_arguments(&self) -> usize {
        self.arguments.len()
    }

    pub fn base_score(&self, idx: usize) -> Degree {
        self.base[idx]
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), Rational)> + '_ {
        self.edges.iter().map(|(&e, &w)| (e, w))
    }
}

impl Default for ArgGraph {
    fn default() -> Self {
        Self::new()
    }
}

/// An acceptability degree per argument, aligned with the graph's
/// argument order; all values lie in the scale.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labelling(pub Vec<Degree>);

impl Labelling {
    pub fn value(&self, idx: usize) -> Degree {
        self.0[idx]
    }

    fn validate(&self, graph: &ArgGraph, scale: Scale) -> Result<(), ArgError> {
        if self.0.len() != graph.num_arguments() {
            return Err(ArgError::LabellingArity {
                got: self.0.len(),
                want: graph.num_arguments(),
            });
        }
        for (i, v) in self.0.iter().enumerate() {
            if !scale.contains(*v) {
                return Err(ArgError::ValueNotInScale {
                    arg: graph.arguments[i].clone(),
                    value: *v,
                    n: scale.n(),
                });
            }
        }
        Ok(())
    }
}

/// One synchronous update of all acceptability degrees.
pub fn step(graph: &ArgGraph, sigma: &Labelling, scale: Scale) -> Labelling {
    let mut next = Vec::with_capacity(graph.num_arguments());
    for a in 0..graph.num_arguments() {
        let mut sum = graph.base[a].as_rational();
        for (&(from, to), &w) in &graph.edges {
            if to == a {
                sum += w * sigma.0[from].as_rational();
            }
        }
        next.push(scale.round(sum));
    }
    Labelling(next)
}

/// A lasso of labellings: `states` holds positions `0 .. prefix + loop`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub states: Vec<Labelling>,
    pub prefix_len: usize,
    pub loop_len: usize,
}

impl Trajectory {
    pub fn state_at(&self, n: usize) -> &Labelling {
        let bound = self.prefix_len + self.loop_len;
        let pos =
            if n < bound { n } else { self.prefix_len + (n - self.prefix_len) % self.loop_len };
        &self.states[pos]
    }
}

/// A sequence of graphs over a shared argument set; `graphs[k] = (t_k, G)`
/// means `G` applies from step `t_k` on. Seeds are initial labellings for
/// trajectory-based constructions.
#[derive(Debug, Clone)]
pub struct GraphTimeline {
    graphs: Vec<(usize, ArgGraph)>,
    pub seeds: Vec<Labelling>,
}

impl GraphTimeline {
    pub fn new(graphs: Vec<(usize, ArgGraph)>, seeds: Vec<Labelling>) -> Result<Self, ArgError> {
        if graphs.is_empty() {
            return Err(ArgError::EmptyTimeline);
        }
        if graphs[0].0 != 0 || graphs.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(ArgError::BadTimelineSteps);
        }
        let args = graphs[0].1.arguments();
        if graphs.iter().any(|(_, g)| g.arguments() != args) {
            return Err(ArgError::IncompatibleArguments);
        }
        Ok(GraphTimeline { graphs, seeds })
    }

    pub fn static_graph(graph: ArgGraph, seeds: Vec<Labelling>) -> Self {
        GraphTimeline { graphs: vec![(0, graph)], seeds }
    }

    pub fn first(&self) -> &ArgGraph {
        &self.graphs[0].1
    }

    pub fn graph_at(&self, t: usize) -> &ArgGraph {
        let mut current = &self.graphs[0].1;
        for (start, g) in &self.graphs {
            if *start <= t {
                current = g;
            } else {
                break;
            }
        }
        current
    }

    pub fn is_static(&self) -> bool {
        self.graphs.len() == 1
    }

    /// The step from which the applied graph no longer changes.
    fn stable_from(&self) -> usize {
        self.graphs.last().map(|(t, _)| *t).unwrap_or(0)
    }

    pub fn blocks(&self) -> &[(usize, ArgGraph)] {
        &self.graphs
    }
}

/// Iterates the update rule from `seed`, applying the timeline's graph at
/// each step, and cuts the run at the first repeated labelling once the
/// graph is stable. Fails only if no repetition shows up within
/// `max_steps` (possible only before the timeline settles or when
/// `max_steps` is too small; for a static graph `(n+1)^{|A|} + 1` steps
/// always suffice).
pub fn trajectory(
    timeline: &GraphTimeline,
    seed: &Labelling,
    scale: Scale,
    max_steps: usize,
) -> Result<Trajectory, ArgError> {
    seed.validate(timeline.first(), scale)?;
    let stable_from = timeline.stable_from();
    let mut states = vec![seed.clone()];
    let mut seen: HashMap<Labelling, usize> = HashMap::new();
    if stable_from == 0 {
        seen.insert(seed.clone(), 0);
    }
    for now in 0..max_steps {
        let graph = timeline.graph_at(now);
        let next = step(graph, &states[now], scale);
        let at = now + 1;
        if at >= stable_from {
            if let Some(&j) = seen.get(&next) {
                return Ok(Trajectory { states, prefix_len: j, loop_len: at - j });
            }
            seen.insert(next.clone(), at);
        }
        states.push(next);
    }
    Err(ArgError::HorizonExceeded(max_steps))
}

/// Exhaustively scans `C_n^{|A|}` for fixed points of the update rule, in
/// lexicographic order.
pub fn fixpoints(graph: &ArgGraph, scale: Scale) -> Result<Vec<Labelling>, ArgError> {
    let count = (scale.len() as u128).saturating_pow(graph.num_arguments() as u32);
    if count > MAX_LABELLINGS {
        return Err(ArgError::SpaceTooLarge(count));
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; graph.num_arguments()];
    loop {
        let sigma = Labelling(digits.iter().map(|&d| scale.member(d as u32)).collect());
        if step(graph, &sigma, scale) == sigma {
            out.push(sigma);
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < scale.len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Maps a set of labellings into a preferential interpretation: one world
/// per labelling (`s0`, `s1`, ... in the given order), arguments as
/// propositions, and coherent preferences, which realize
/// `w_σ <_A w_σ'` iff `σ(A) > σ'(A)` for the argument propositions.
pub fn to_interpretation(
    graph: &ArgGraph,
    labellings: &[Labelling],
) -> Result<PreferentialInterpretation, ArgError> {
    let worlds: Vec<String> = (0..labellings.len()).map(|i| format!("s{i}")).collect();
    let mut m = PreferentialInterpretation::new(worlds, PrefMode::Coherent)?;
    for (i, sigma) in labellings.iter().enumerate() {
        if sigma.0.len() != graph.num_arguments() {
            return Err(ArgError::LabellingArity {
                got: sigma.0.len(),
                want: graph.num_arguments(),
            });
        }
        for (j, arg) in graph.arguments().iter().enumerate() {
            m.set_val_idx(i, arg, sigma.0[j]);
        }
    }
    Ok(m)
}

/// Builds a temporal interpretation from seed trajectories: one world per
/// seed, time is the iteration step, and the joint lasso has the maximal
/// prefix and the lcm of the loop lengths.
pub fn to_temporal_interpretation(
    timeline: &GraphTimeline,
    scale: Scale,
    max_steps: usize,
) -> Result<TemporalInterpretation, ArgError> {
    if timeline.seeds.is_empty() {
        return Err(ArgError::NoSeeds);
    }
    let trajectories: Vec<Trajectory> = timeline
        .seeds
        .iter()
        .map(|seed| trajectory(timeline, seed, scale, max_steps))
        .collect::<Result<_, _>>()?;
    let prefix = trajectories.iter().map(|t| t.prefix_len).max().unwrap();
    let loop_len = trajectories.iter().fold(1usize, |acc, t| acc.lcm(&t.loop_len));
    let worlds: Vec<String> = (0..trajectories.len()).map(|i| format!("s{i}")).collect();
    let mut interp = TemporalInterpretation::new(worlds, prefix, loop_len, PrefMode::Coherent)?;
    let args = timeline.first().arguments();
    for n in 0..prefix + loop_len {
        for (w, traj) in trajectories.iter().enumerate() {
            let sigma = traj.state_at(n);
            for (j, arg) in args.iter().enumerate() {
                interp.set_val_idx(n, w, arg, sigma.0[j]);
            }
        }
    }
    Ok(interp)
}
