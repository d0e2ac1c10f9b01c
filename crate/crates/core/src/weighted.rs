//! Weighted temporal knowledge bases.
//!
//! A weighted KB couples strict temporal graded formulas with weighted
//! typicality conditionals `(T(A_i) -> B_j, w_ij)`. The weight of a world
//! `x` for a distinguished subject `A_i` at time `n` is
//! `Σ w_ij · v(n, x, B_j)`; preferences are derived by comparing weights,
//! which yields a modular strict order per subject and time point.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{Algebra, Rational};
use crate::semantics::{EvalError, PrefMode, PrefRelation};
use crate::syntax::{TemporalGradedFormula, WeightedConditional};
use crate::temporal::TemporalInterpretation;

/// Strict temporal graded formulas plus weighted typicality conditionals.
#[derive(Debug, Clone, Default)]
pub struct WeightedKB {
    pub strict: Vec<TemporalGradedFormula>,
    pub weighted: Vec<WeightedConditional>,
}

impl WeightedKB {
    pub fn new(strict: Vec<TemporalGradedFormula>, weighted: Vec<WeightedConditional>) -> Self {
        WeightedKB { strict, weighted }
    }

    /// Keys of the distinguished subjects: those with at least one
    /// weighted conditional.
    pub fn distinguished(&self) -> BTreeSet<String> {
        self.weighted.iter().map(|c| c.subject_key()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.strict.is_empty() && self.weighted.is_empty()
    }
}

/// `W^I_{A_i,n}(x) = Σ_{(T(A_i) -> B_j, w_ij)} w_ij · v(n, x, B_j)`.
/// The result is an unrestricted rational, not a degree.
pub fn world_weight(
    interp: &TemporalInterpretation,
    kb: &WeightedKB,
    subject_key: &str,
    n: usize,
    world: &str,
    alg: Algebra,
) -> Result<Rational, EvalError> {
    let w = interp.world_index(world)?;
    world_weight_idx(interp, kb, subject_key, n, w, alg)
}

pub fn world_weight_idx(
    interp: &TemporalInterpretation,
    kb: &WeightedKB,
    subject_key: &str,
    n: usize,
    world: usize,
    alg: Algebra,
) -> Result<Rational, EvalError> {
    let mut sum = Rational::from_integer(0);
    for cond in &kb.weighted {
        if cond.subject_key() == subject_key {
            let v = interp.teval_idx(n, world, cond.consequent(), alg)?;
            sum += cond.weight * v.as_rational();
        }
    }
    Ok(sum)
}

/// Preference relations per Def.-style weight comparison:
/// `x <^n_{A_i} y` iff `W(x) > W(y)`, for every distinguished subject and
/// every stored lasso position.
pub fn derive_preferences(
    interp: &TemporalInterpretation,
    kb: &WeightedKB,
    alg: Algebra,
) -> Result<BTreeMap<(usize, String), PrefRelation>, EvalError> {
    let mut out = BTreeMap::new();
    for key in kb.distinguished() {
        for n in 0..interp.positions() {
            let weights: Result<Vec<Rational>, EvalError> = (0..interp.num_worlds())
                .map(|w| world_weight_idx(interp, kb, &key, n, w, alg))
                .collect();
            let weights = weights?;
            let mut rel = PrefRelation::new();
            for x in 0..weights.len() {
                for y in 0..weights.len() {
                    if weights[x] > weights[y] {
                        rel.insert((x, y));
                    }
                }
            }
            out.insert((n, key.clone()), rel);
        }
    }
    Ok(out)
}

/// Derives and installs the weight-based preferences, making typicality
/// over distinguished subjects evaluable. Intended for interpretations in
/// weighted preference mode.
pub fn install_derived_preferences(
    interp: &mut TemporalInterpretation,
    kb: &WeightedKB,
    alg: Algebra,
) -> Result<(), EvalError> {
    let derived = derive_preferences(interp, kb, alg)?;
    for ((n, key), rel) in derived {
        interp
            .install_pref_relation(n, key, rel)
            .expect("derived relation is a strict order on known worlds");
    }
    Ok(())
}

/// One preference pair present on exactly one side of the stored/derived
/// comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefMismatch {
    pub time: usize,
    pub key: String,
    pub lower: String,
    pub upper: String,
    /// True when the pair is stored but not derived; false when derived
    /// but missing from the stored relation.
    pub stored_only: bool,
}

#[derive(Debug, Clone)]
pub struct WeightedSatisfactionReport {
    /// Whether the stored preferences match the derived ones (trivially
    /// true when they were substituted).
    pub prefs_satisfied: bool,
    /// True when the interpretation was not in explicit mode and derived
    /// preferences were substituted before checking.
    pub substituted: bool,
    pub mismatches: Vec<PrefMismatch>,
    pub strict_verdicts: Vec<(TemporalGradedFormula, bool)>,
}

impl WeightedSatisfactionReport {
    pub fn strict_satisfied(&self) -> bool {
        self.strict_verdicts.iter().all(|(_, sat)| *sat)
    }

    pub fn satisfied(&self) -> bool {
        self.prefs_satisfied && self.strict_satisfied()
    }
}

/// Checks whether an interpretation satisfies a weighted KB: stored
/// preferences must coincide with the weight-derived ones for every
/// distinguished subject and position (explicit mode; other modes
/// substitute the derived preferences and satisfy this part trivially),
/// and every strict formula must be satisfied.
pub fn check_weighted_satisfaction(
    interp: &TemporalInterpretation,
    kb: &WeightedKB,
    alg: Algebra,
) -> Result<WeightedSatisfactionReport, EvalError> {
    let derived = derive_preferences(interp, kb, alg)?;
    let explicit = interp.pref_mode() == PrefMode::Explicit;
    let mut mismatches = Vec::new();
    if explicit {
        for ((n, key), want) in &derived {
            let empty = PrefRelation::new();
            let got = interp.stored_pref_at(*n, key).unwrap_or(&empty);
            for &(x, y) in got.difference(want) {
                mismatches.push(PrefMismatch {
                    time: *n,
                    key: key.clone(),
                    lower: interp.world_name(x).to_string(),
                    upper: interp.world_name(y).to_string(),
                    stored_only: true,
                });
            }
            for &(x, y) in want.difference(got) {
                mismatches.push(PrefMismatch {
                    time: *n,
                    key: key.clone(),
                    lower: interp.world_name(x).to_string(),
                    upper: interp.world_name(y).to_string(),
                    stored_only: false,
                });
            }
        }
    }

    let effective;
    let target = if explicit {
        interp
    } else {
        let mut substituted_model = interp.clone();
        for ((n, key), rel) in derived {
            substituted_model
                .install_pref_relation(n, key, rel)
                .expect("derived relation is a strict order on known worlds");
        }
        effective = substituted_model;
        &effective
    };

    let mut strict_verdicts = Vec::new();
    for alpha in &kb.strict {
        let sat = target.satisfies_temporal(alpha, alg)?;
        strict_verdicts.push((alpha.clone(), sat));
    }

    Ok(WeightedSatisfactionReport {
        prefs_satisfied: mismatches.is_empty(),
        substituted: !explicit,
        mismatches,
        strict_verdicts,
    })
}
