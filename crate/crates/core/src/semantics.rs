//! Non-temporal multi-preferential interpretations.
//!
//! An interpretation is a finite world set, a valuation of propositions
//! per world, and one strict preference relation per formula key. The
//! typicality of `A` at `w` is `v(w, A)` when no world is strictly
//! preferred to `w` under `<_A`, and `0` otherwise. Preference relations
//! are resolved per the interpretation's mode: explicitly stored,
//! derived from valuations (coherent mode), or installed from a weighted
//! knowledge base.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::algebra::{Algebra, Degree};
use crate::syntax::Formula;

/// How preference relations are obtained for typicality evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefMode {
    /// Relations are stored per key; a missing key is an error.
    Explicit,
    /// `w <_A w'` iff `v(w, A) > v(w', A)`; nothing is stored.
    Coherent,
    /// Relations are installed from a weighted KB for its distinguished
    /// keys; any other key is an error.
    Weighted,
}

impl PrefMode {
    pub fn name(self) -> &'static str {
        match self {
            PrefMode::Explicit => "explicit",
            PrefMode::Coherent => "coherent",
            PrefMode::Weighted => "weighted",
        }
    }
}

/// A strict order on world indices; `(x, y)` means `x < y` (`x` is
/// strictly preferred, i.e. more normal).
pub type PrefRelation = BTreeSet<(usize, usize)>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("a model needs at least one world")]
    EmptyWorlds,
    #[error("duplicate world `{0}`")]
    DuplicateWorld(String),
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("loop length must be positive")]
    EmptyLoop,
    #[error("time point {time} outside the lasso (prefix {prefix} + loop {loop_len})")]
    TimeOutOfRange { time: usize, prefix: usize, loop_len: usize },
    #[error("preference relation for `{key}` is not irreflexive: contains ({world}, {world})")]
    NotIrreflexive { key: String, world: String },
    #[error("preference relation for `{key}` is not transitive: {lo} < {mid} < {hi} but not {lo} < {hi}")]
    NotTransitive { key: String, lo: String, mid: String, hi: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("no valuation for proposition `{prop}` in world `{world}`{}", at_time(*.time))]
    MissingProp { prop: String, world: String, time: Option<usize> },
    #[error("no preference relation for key `{key}`{} ({mode} mode)", at_time(*.time))]
    MissingPreference { key: String, mode: &'static str, time: Option<usize> },
    #[error("temporal operator in non-temporal evaluation: `{op}`")]
    TemporalOperator { op: String },
    #[error("unbounded temporal operator `{op}` requires an idempotent algebra")]
    NonIdempotentAlgebra { op: String },
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
}

fn at_time(time: Option<usize>) -> String {
    match time {
        Some(n) => format!(" at time {n}"),
        None => String::new(),
    }
}

/// Checks that a relation is a strict order (irreflexive and transitive),
/// comparing against its own transitive closure.
pub fn validate_strict_order(
    key: &str,
    rel: &PrefRelation,
    world_name: impl Fn(usize) -> String,
) -> Result<(), ModelError> {
    for &(x, y) in rel {
        if x == y {
            return Err(ModelError::NotIrreflexive { key: key.to_string(), world: world_name(x) });
        }
    }
    for &(x, y) in rel {
        for &(y2, z) in rel {
            if y == y2 && !rel.contains(&(x, z)) {
                return Err(ModelError::NotTransitive {
                    key: key.to_string(),
                    lo: world_name(x),
                    mid: world_name(y),
                    hi: world_name(z),
                });
            }
        }
    }
    Ok(())
}

/// `∀x,y,z: x < y ⟹ (x < z ∨ z < y)`.
pub fn is_modular(rel: &PrefRelation, num_worlds: usize) -> bool {
    rel.iter().all(|&(x, y)| {
        (0..num_worlds).all(|z| z == x || z == y || rel.contains(&(x, z)) || rel.contains(&(z, y)))
    })
}

/// A finite multi-preferential interpretation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferentialInterpretation {
    worlds: Vec<String>,
    valuation: Vec<BTreeMap<String, Degree>>,
    prefs: BTreeMap<String, PrefRelation>,
    pref_mode: PrefMode,
}

impl PreferentialInterpretation {
    pub fn new(worlds: Vec<String>, pref_mode: PrefMode) -> Result<Self, ModelError> {
        if worlds.is_empty() {
            return Err(ModelError::EmptyWorlds);
        }
        let mut seen = BTreeSet::new();
        for w in &worlds {
            if !seen.insert(w.clone()) {
                return Err(ModelError::DuplicateWorld(w.clone()));
            }
        }
        let valuation = vec![BTreeMap::new(); worlds.len()];
        Ok(PreferentialInterpretation { worlds, valuation, prefs: BTreeMap::new(), pref_mode })
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn num_worlds(&self) -> usize {
        self.worlds.len()
    }

    pub fn pref_mode(&self) -> PrefMode {
        self.pref_mode
    }

    pub fn world_index(&self, name: &str) -> Result<usize, EvalError> {
        self.worlds
            .iter()
            .position(|w| w == name)
            .ok_or_else(|| EvalError::UnknownWorld(name.to_string()))
    }

    pub fn world_name(&self, idx: usize) -> &str {
        &self.worlds[idx]
    }

    pub fn set_val(&mut self, world: &str, prop: &str, d: Degree) -> Result<(), ModelError> {
        let w = self
            .worlds
            .iter()
            .position(|x| x == world)
            .ok_or_else(|| ModelError::UnknownWorld(world.to_string()))?;
        self.valuation[w].insert(prop.to_string(), d);
        Ok(())
    }

    pub fn set_val_idx(&mut self, world: usize, prop: &str, d: Degree) {
        self.valuation[world].insert(prop.to_string(), d);
    }

    /// Adds `lower < upper` to the relation for `key`. Relations built
    /// this way must be validated with [`Self::validate_prefs`] once
    /// complete.
    pub fn add_pref_pair(&mut self, key: &str, lower: &str, upper: &str) -> Result<(), ModelError> {
        let lo = self
            .worlds
            .iter()
            .position(|x| x == lower)
            .ok_or_else(|| ModelError::UnknownWorld(lower.to_string()))?;
        let hi = self
            .worlds
            .iter()
            .position(|x| x == upper)
            .ok_or_else(|| ModelError::UnknownWorld(upper.to_string()))?;
        self.prefs.entry(key.to_string()).or_default().insert((lo, hi));
        Ok(())
    }

    /// Installs a whole relation for `key`, validating it.
    pub fn install_pref_relation(
        &mut self,
        key: String,
        rel: PrefRelation,
    ) -> Result<(), ModelError> {
        validate_strict_order(&key, &rel, |i| self.worlds[i].clone())?;
        self.prefs.insert(key, rel);
        Ok(())
    }

    /// Declares a (possibly empty) relation for `key`. An explicitly
    /// empty relation makes every world typical, unlike an undeclared
    /// key, which is an error in explicit mode.
    pub fn ensure_pref_entry(&mut self, key: &str) {
        self.prefs.entry(key.to_string()).or_default();
    }

    pub fn validate_prefs(&self) -> Result<(), ModelError> {
        for (key, rel) in &self.prefs {
            validate_strict_order(key, rel, |i| self.worlds[i].clone())?;
        }
        Ok(())
    }

    pub fn pref_keys(&self) -> Vec<String> {
        self.prefs.keys().cloned().collect()
    }

    pub fn stored_pref(&self, key: &str) -> Option<&PrefRelation> {
        self.prefs.get(key)
    }

    pub fn props(&self) -> BTreeSet<String> {
        self.valuation.iter().flat_map(|m| m.keys().cloned()).collect()
    }

    pub fn valuation(&self, w: usize) -> &BTreeMap<String, Degree> {
        &self.valuation[w]
    }

    pub fn stored_prefs(&self) -> &BTreeMap<String, PrefRelation> {
        &self.prefs
    }

    fn val(&self, w: usize, prop: &str) -> Result<Degree, EvalError> {
        self.valuation[w].get(prop).copied().ok_or_else(|| EvalError::MissingProp {
            prop: prop.to_string(),
            world: self.worlds[w].clone(),
            time: None,
        })
    }

    /// True iff some world is strictly preferred to `w` for the
    /// typicality subject `a` (with key `key`).
    fn dominated(&self, w: usize, key: &str, a: &Formula, alg: Algebra) -> Result<bool, EvalError> {
        if let Some(rel) = self.prefs.get(key) {
            return Ok(rel.iter().any(|&(_, y)| y == w));
        }
        match self.pref_mode {
            PrefMode::Coherent => {
                let va = self.eval_idx(w, a, alg)?;
                for other in 0..self.worlds.len() {
                    if other != w && self.eval_idx(other, a, alg)? > va {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            PrefMode::Explicit | PrefMode::Weighted => Err(EvalError::MissingPreference {
                key: key.to_string(),
                mode: self.pref_mode.name(),
                time: None,
            }),
        }
    }

    /// Resolved preference relation for a key, for reporting purposes: the
    /// stored relation if any, the derived one in coherent mode, and the
    /// empty relation otherwise.
    pub fn resolved_pref(
        &self,
        subject: &Formula,
        alg: Algebra,
    ) -> Result<PrefRelation, EvalError> {
        let key = subject.key();
        if let Some(rel) = self.prefs.get(&key) {
            return Ok(rel.clone());
        }
        match self.pref_mode {
            PrefMode::Coherent => {
                let vals: Result<Vec<Degree>, EvalError> =
                    (0..self.worlds.len()).map(|w| self.eval_idx(w, subject, alg)).collect();
                let vals = vals?;
                let mut rel = PrefRelation::new();
                for x in 0..vals.len() {
                    for y in 0..vals.len() {
                        if vals[x] > vals[y] {
                            rel.insert((x, y));
                        }
                    }
                }
                Ok(rel)
            }
            _ => Ok(PrefRelation::new()),
        }
    }

    pub fn eval(&self, world: &str, f: &Formula, alg: Algebra) -> Result<Degree, EvalError> {
        let w = self.world_index(world)?;
        self.eval_idx(w, f, alg)
    }

    pub fn eval_idx(&self, w: usize, f: &Formula, alg: Algebra) -> Result<Degree, EvalError> {
        match f {
            Formula::Prop(p) => self.val(w, p),
            Formula::Top => Ok(Degree::one()),
            Formula::Bot => Ok(Degree::zero()),
            Formula::Not(a) => Ok(alg.negation(self.eval_idx(w, a, alg)?)),
            Formula::And(a, b) => {
                Ok(alg.tnorm(self.eval_idx(w, a, alg)?, self.eval_idx(w, b, alg)?))
            }
            Formula::Or(a, b) => {
                Ok(alg.snorm(self.eval_idx(w, a, alg)?, self.eval_idx(w, b, alg)?))
            }
            Formula::Implies(a, b) => {
                Ok(alg.implication(self.eval_idx(w, a, alg)?, self.eval_idx(w, b, alg)?))
            }
            Formula::Typ(a) => {
                let va = self.eval_idx(w, a, alg)?;
                if self.dominated(w, &a.key(), a, alg)? {
                    Ok(Degree::zero())
                } else {
                    Ok(va)
                }
            }
            Formula::Next(_)
            | Formula::Eventually(_)
            | Formula::Always(_)
            | Formula::Until(_, _)
            | Formula::BoundedEventually(_, _)
            | Formula::BoundedAlways(_, _)
            | Formula::BoundedUntil(_, _, _) => {
                Err(EvalError::TemporalOperator { op: f.to_string() })
            }
        }
    }

    /// `(f -> g) = inf over worlds of v(w, f) ▷ v(w, g)`; the world set
    /// is finite and non-empty, so the infimum is a minimum.
    pub fn implication_degree(
        &self,
        f: &Formula,
        g: &Formula,
        alg: Algebra,
    ) -> Result<Degree, EvalError> {
        let mut best = Degree::one();
        for w in 0..self.worlds.len() {
            let d = alg.implication(self.eval_idx(w, f, alg)?, self.eval_idx(w, g, alg)?);
            best = best.min(d);
        }
        Ok(best)
    }

    /// Two-valued satisfaction of a graded implication.
    pub fn satisfies(
        &self,
        gi: &crate::syntax::GradedImplication,
        alg: Algebra,
    ) -> Result<bool, EvalError> {
        let d = self.implication_degree(&gi.lhs, &gi.rhs, alg)?;
        Ok(gi.cmp.holds(d, gi.threshold))
    }

    /// Coherence/faithfulness/modularity report for the given keys, based
    /// on each key's resolved relation.
    pub fn check_coherence(
        &self,
        keys: &[Formula],
        alg: Algebra,
    ) -> Result<CoherenceReport, EvalError> {
        let mut entries = Vec::new();
        for subject in keys {
            let rel = self.resolved_pref(subject, alg)?;
            let vals: Result<Vec<Degree>, EvalError> =
                (0..self.worlds.len()).map(|w| self.eval_idx(w, subject, alg)).collect();
            let vals = vals?;
            let mut coh = Vec::new();
            let mut fai = Vec::new();
            for x in 0..vals.len() {
                for y in 0..vals.len() {
                    if x == y {
                        continue;
                    }
                    let higher = vals[x] > vals[y];
                    let pref = rel.contains(&(x, y));
                    if higher != pref {
                        coh.push((self.worlds[x].clone(), self.worlds[y].clone()));
                    }
                    if higher && !pref {
                        fai.push((self.worlds[x].clone(), self.worlds[y].clone()));
                    }
                }
            }
            entries.push(CoherenceEntry {
                key: subject.key(),
                coherent: coh.is_empty(),
                faithful: fai.is_empty(),
                modular: is_modular(&rel, self.worlds.len()),
                coherence_violations: coh,
                faithfulness_violations: fai,
            });
        }
        Ok(CoherenceReport { entries })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceEntry {
    pub key: String,
    pub coherent: bool,
    pub faithful: bool,
    pub modular: bool,
    pub coherence_violations: Vec<(String, String)>,
    pub faithfulness_violations: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceReport {
    pub entries: Vec<CoherenceEntry>,
}

impl CoherenceReport {
    pub fn all_coherent(&self) -> bool {
        self.entries.iter().all(|e| e.coherent)
    }

    pub fn all_faithful(&self) -> bool {
        self.entries.iter().all(|e| e.faithful)
    }
}
