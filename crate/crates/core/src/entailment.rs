//! Desk-scale entailment by model enumeration.
//!
//! Entailment is decided relative to a declared finite search space: a
//! world count, a scale, a proposition vocabulary and a lasso shape,
//! never absolutely. The verdict `Entailed` is sound and complete for
//! that space only. Preferences are either derived coherently from the
//! valuations (the default, which makes the model space a pure valuation
//! space) or enumerated over all strict orders for the typicality
//! subjects in play, which is guarded combinatorially.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::algebra::{Algebra, Degree, Scale};
use crate::semantics::{EvalError, ModelError, PrefMode, PrefRelation, PreferentialInterpretation};
use crate::syntax::{Cmp, Formula, GradedImplication, TemporalGradedFormula};
use crate::temporal::TemporalInterpretation;

/// Hard cap on the number of enumerated models.
pub const MAX_MODELS: u128 = 4_000_000;

/// Cap on `AllStrictOrders` world counts (19 strict orders on 3 worlds).
pub const MAX_ORDER_WORLDS: usize = 3;

/// Cap on distinct typicality subjects under `AllStrictOrders`.
pub const MAX_ORDER_SUBJECTS: usize = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EntailError {
    #[error("search space too large: {0} models (cap {MAX_MODELS})")]
    SpaceTooLarge(u128),
    #[error("guard violated: {0}")]
    Guard(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefEnumMode {
    /// Preferences derived from valuations; the model space is the
    /// valuation space.
    CoherentOnly,
    /// Every strict order enumerated for each typicality subject and
    /// position, within the combinatorial guard.
    AllStrictOrders,
}

/// A finite presentation of "all models": every valuation of the given
/// propositions over the scale, on the given lasso shape.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    pub num_worlds: usize,
    pub scale: Scale,
    pub props: Vec<String>,
    pub prefix_len: usize,
    pub loop_len: usize,
    pub pref_enum: PrefEnumMode,
    pub algebra: Algebra,
}

impl SearchSpace {
    pub fn new(num_worlds: usize, scale: Scale, props: Vec<String>) -> Self {
        SearchSpace {
            num_worlds,
            scale,
            props,
            prefix_len: 0,
            loop_len: 1,
            pref_enum: PrefEnumMode::CoherentOnly,
            algebra: Algebra::Goedel,
        }
    }

    pub fn with_lasso(mut self, prefix_len: usize, loop_len: usize) -> Self {
        self.prefix_len = prefix_len;
        self.loop_len = loop_len;
        self
    }

    pub fn with_pref_enum(mut self, mode: PrefEnumMode) -> Self {
        self.pref_enum = mode;
        self
    }

    pub fn with_algebra(mut self, algebra: Algebra) -> Self {
        self.algebra = algebra;
        self
    }

    pub fn positions(&self) -> usize {
        self.prefix_len + self.loop_len
    }

    fn validate(&self) -> Result<(), EntailError> {
        if self.num_worlds == 0 {
            return Err(EntailError::Guard("at least one world required".into()));
        }
        if self.loop_len == 0 {
            return Err(EntailError::Guard("loop length must be positive".into()));
        }
        let mut seen = BTreeSet::new();
        for p in &self.props {
            if !seen.insert(p) {
                return Err(EntailError::Guard(format!("duplicate proposition `{p}`")));
            }
        }
        Ok(())
    }

    fn valuation_cells(&self) -> usize {
        self.positions() * self.num_worlds * self.props.len()
    }

    fn valuation_count(&self) -> u128 {
        (self.scale.len() as u128).saturating_pow(self.valuation_cells() as u32)
    }

    /// Total number of models (valuations times preference assignments
    /// for the given subjects).
    pub fn cardinality(&self, num_subjects: usize) -> u128 {
        let orders = match self.pref_enum {
            PrefEnumMode::CoherentOnly => 1u128,
            PrefEnumMode::AllStrictOrders => (strict_orders(self.num_worlds).len() as u128)
                .saturating_pow((num_subjects * self.positions()) as u32),
        };
        self.valuation_count().saturating_mul(orders)
    }

    pub fn describe(&self) -> String {
        format!(
            "{} world(s), C_{}, props [{}], prefix {}, loop {}, {}, {} algebra",
            self.num_worlds,
            self.scale.n(),
            self.props.join(" "),
            self.prefix_len,
            self.loop_len,
            match self.pref_enum {
                PrefEnumMode::CoherentOnly => "coherent preferences",
                PrefEnumMode::AllStrictOrders => "all strict orders",
            },
            self.algebra.name()
        )
    }
}

/// All strict orders (irreflexive transitive relations) on `n` worlds, in
/// a fixed enumeration order.
pub fn strict_orders(num_worlds: usize) -> Vec<PrefRelation> {
    let pairs: Vec<(usize, usize)> = (0..num_worlds)
        .flat_map(|x| (0..num_worlds).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let rel: PrefRelation = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        let transitive =
            rel.iter().all(|&(x, y)| rel.iter().all(|&(y2, z)| y != y2 || rel.contains(&(x, z))));
        if transitive {
            out.push(rel);
        }
    }
    out
}

#[derive(Debug, Clone)]
pub enum Verdict {
    /// No model of the KB falsifies the query, within the space.
    Entailed,
    /// A model of the KB that does not satisfy the query.
    Countermodel(TemporalInterpretation),
}

impl Verdict {
    pub fn is_entailed(&self) -> bool {
        matches!(self, Verdict::Entailed)
    }
}

fn check_props_covered(
    space: &SearchSpace,
    formulas: &[&TemporalGradedFormula],
) -> Result<(), EntailError> {
    let mut used = BTreeSet::new();
    for f in formulas {
        f.props(&mut used);
    }
    for p in used {
        if !space.props.contains(&p) {
            return Err(EntailError::Guard(format!(
                "proposition `{p}` does not occur in the search space"
            )));
        }
    }
    Ok(())
}

/// Writes the valuation encoded by `digits` into `interp`. Cell order is
/// (position, world, prop), with the proposition order of the space.
fn apply_valuation(interp: &mut TemporalInterpretation, space: &SearchSpace, digits: &[usize]) {
    let mut idx = 0;
    for t in 0..space.positions() {
        for w in 0..space.num_worlds {
            for p in &space.props {
                interp.set_val_idx(t, w, p, space.scale.member(digits[idx] as u32));
                idx += 1;
            }
        }
    }
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn world_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("w{i}")).collect()
}

/// Decides whether `kb` entails `query` within the space: enumerates
/// every model and returns the first (in the fixed enumeration order)
/// that satisfies all of `kb` but not `query`, or `Entailed`.
pub fn entails(
    kb: &[TemporalGradedFormula],
    query: &TemporalGradedFormula,
    space: &SearchSpace,
) -> Result<Verdict, EntailError> {
    space.validate()?;
    let mut formulas: Vec<&TemporalGradedFormula> = kb.iter().collect();
    formulas.push(query);
    check_props_covered(space, &formulas)?;

    let mut subjects = BTreeSet::new();
    for f in &formulas {
        f.typicality_subjects(&mut subjects);
    }
    let subjects: Vec<String> = subjects.into_iter().collect();

    if space.pref_enum == PrefEnumMode::AllStrictOrders {
        if space.num_worlds > MAX_ORDER_WORLDS {
            return Err(EntailError::Guard(format!(
                "all-strict-orders enumeration allows at most {MAX_ORDER_WORLDS} worlds"
            )));
        }
        if subjects.len() > MAX_ORDER_SUBJECTS {
            return Err(EntailError::Guard(format!(
                "all-strict-orders enumeration allows at most {MAX_ORDER_SUBJECTS} typicality subjects, got {}",
                subjects.len()
            )));
        }
    }

    let cardinality = space.cardinality(subjects.len());
    if cardinality > MAX_MODELS {
        return Err(EntailError::SpaceTooLarge(cardinality));
    }

    let alg = space.algebra;
    let mode = match space.pref_enum {
        PrefEnumMode::CoherentOnly => PrefMode::Coherent,
        PrefEnumMode::AllStrictOrders => PrefMode::Explicit,
    };
    let orders = match space.pref_enum {
        PrefEnumMode::CoherentOnly => Vec::new(),
        PrefEnumMode::AllStrictOrders => strict_orders(space.num_worlds),
    };
    let pref_slots = subjects.len() * space.positions();

    let mut digits = vec![0usize; space.valuation_cells()];
    loop {
        let mut interp = TemporalInterpretation::new(
            world_names(space.num_worlds),
            space.prefix_len,
            space.loop_len,
            mode,
        )?;
        apply_valuation(&mut interp, space, &digits);

        match space.pref_enum {
            PrefEnumMode::CoherentOnly => {
                if let Some(cm) = falsifies(&interp, kb, query, alg)? {
                    return Ok(Verdict::Countermodel(cm));
                }
            }
            PrefEnumMode::AllStrictOrders => {
                let mut order_digits = vec![0usize; pref_slots];
                loop {
                    let mut candidate = interp.clone();
                    let mut slot = 0;
                    for key in &subjects {
                        for t in 0..space.positions() {
                            candidate.install_pref_relation(
                                t,
                                key.clone(),
                                orders[order_digits[slot]].clone(),
                            )?;
                            slot += 1;
                        }
                    }
                    if let Some(cm) = falsifies(&candidate, kb, query, alg)? {
                        return Ok(Verdict::Countermodel(cm));
                    }
                    if pref_slots == 0 || !advance(&mut order_digits, orders.len()) {
                        break;
                    }
                }
            }
        }

        if !advance(&mut digits, space.scale.len()) {
            return Ok(Verdict::Entailed);
        }
    }
}

fn falsifies(
    interp: &TemporalInterpretation,
    kb: &[TemporalGradedFormula],
    query: &TemporalGradedFormula,
    alg: Algebra,
) -> Result<Option<TemporalInterpretation>, EntailError> {
    for alpha in kb {
        if !interp.satisfies_temporal(alpha, alg)? {
            return Ok(None);
        }
    }
    if interp.satisfies_temporal(query, alg)? {
        Ok(None)
    } else {
        Ok(Some(interp.clone()))
    }
}

/// Entailment of `A -> B >= 1` over non-temporal slices (prefix 0,
/// loop 1). The query must be a `>= 1` graded implication.
pub fn one_entails(
    kb: &[TemporalGradedFormula],
    gi: &GradedImplication,
    space: &SearchSpace,
) -> Result<Verdict, EntailError> {
    if gi.cmp != Cmp::Ge || !gi.threshold.is_one() {
        return Err(EntailError::Guard(
            "1-entailment requires a query of the form (A -> B) >= 1".into(),
        ));
    }
    let mut s = space.clone();
    s.prefix_len = 0;
    s.loop_len = 1;
    entails(kb, &TemporalGradedFormula::Atom(gi.clone()), &s)
}

// ----- KLM postulate harness -----

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Postulate {
    Reflexivity,
    LeftLogicalEquivalence,
    RightWeakening,
    And,
    Or,
    CautiousMonotonicity,
}

impl Postulate {
    pub const ALL: [Postulate; 6] = [
        Postulate::Reflexivity,
        Postulate::LeftLogicalEquivalence,
        Postulate::RightWeakening,
        Postulate::And,
        Postulate::Or,
        Postulate::CautiousMonotonicity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Postulate::Reflexivity => "Reflexivity",
            Postulate::LeftLogicalEquivalence => "Left Logical Equivalence",
            Postulate::RightWeakening => "Right Weakening",
            Postulate::And => "And",
            Postulate::Or => "Or",
            Postulate::CautiousMonotonicity => "Cautious Monotonicity",
        }
    }
}

#[derive(Debug, Clone)]
pub struct KlmCounterexample {
    pub model: PreferentialInterpretation,
    pub instantiation: String,
    pub failed_conclusion: String,
}

#[derive(Debug, Clone)]
pub struct PostulateResult {
    pub postulate: Postulate,
    /// Number of (model, instantiation) pairs whose premises held.
    pub premise_hits: u64,
    pub counterexample: Option<KlmCounterexample>,
    pub skipped: Option<String>,
}

impl PostulateResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.skipped.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct KlmReport {
    pub results: Vec<PostulateResult>,
}

impl KlmReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed())
    }
}

/// The default instantiation pool over the space's propositions: the
/// propositions themselves, both orders of pairwise conjunction (so Left
/// Logical Equivalence gets non-trivial instances) and one disjunction
/// per pair.
pub fn default_klm_pool(props: &[String]) -> Vec<Formula> {
    let mut pool: Vec<Formula> = props.iter().map(Formula::prop).collect();
    for i in 0..props.len() {
        for j in 0..props.len() {
            if i != j {
                pool.push(Formula::and(Formula::prop(&props[i]), Formula::prop(&props[j])));
            }
        }
    }
    for i in 0..props.len() {
        for j in i + 1..props.len() {
            pool.push(Formula::or(Formula::prop(&props[i]), Formula::prop(&props[j])));
        }
    }
    pool
}

struct KlmContext<'a> {
    space: &'a SearchSpace,
    pool: &'a [Formula],
    /// `valid[i][j]`: `pool[i] -> pool[j] >= 1` holds under every
    /// valuation of the space's propositions over its scale. Implication
    /// degrees are per world, so single-world enumeration is exhaustive.
    valid: Vec<Vec<bool>>,
    orders: Vec<PrefRelation>,
}

fn conditional(subject: &Formula, consequent: &Formula) -> GradedImplication {
    let typ = Formula::typ(subject.clone()).expect("pool formulas are typicality-free");
    GradedImplication::ge(typ, consequent.clone(), Degree::one())
}

/// Runs the per-model closure form of the six KLM postulates over every
/// model of the space, instantiating `A`, `B`, `C` from the pool. The
/// per-model form (premises satisfied in a model imply the conclusion in
/// that same model) implies the entailment-level postulates.
pub fn klm_suite(space: &SearchSpace, pool: &[Formula]) -> Result<KlmReport, EntailError> {
    space.validate()?;
    if space.prefix_len != 0 || space.loop_len != 1 {
        return Err(EntailError::Guard(
            "the KLM harness runs on non-temporal spaces (prefix 0, loop 1)".into(),
        ));
    }
    for f in pool {
        if f.contains_typ() || f.contains_temporal() {
            return Err(EntailError::Guard(format!(
                "pool formula `{f}` must be free of typicality and temporal operators"
            )));
        }
        let mut props = BTreeSet::new();
        f.props(&mut props);
        for p in props {
            if !space.props.contains(&p) {
                return Err(EntailError::Guard(format!(
                    "pool formula `{f}` uses proposition `{p}` outside the space"
                )));
            }
        }
    }
    if space.cardinality(MAX_ORDER_SUBJECTS) > MAX_MODELS {
        return Err(EntailError::SpaceTooLarge(space.cardinality(MAX_ORDER_SUBJECTS)));
    }
    if space.pref_enum == PrefEnumMode::AllStrictOrders && space.num_worlds > MAX_ORDER_WORLDS {
        return Err(EntailError::Guard(format!(
            "all-strict-orders enumeration allows at most {MAX_ORDER_WORLDS} worlds"
        )));
    }

    let valid = validity_table(space, pool)?;
    let orders = match space.pref_enum {
        PrefEnumMode::CoherentOnly => Vec::new(),
        PrefEnumMode::AllStrictOrders => strict_orders(space.num_worlds),
    };
    let ctx = KlmContext { space, pool, valid, orders };

    let mut results = Vec::new();
    for postulate in Postulate::ALL {
        results.push(run_postulate(&ctx, postulate)?);
    }
    Ok(KlmReport { results })
}

/// Truth of `⊨ A -> B` relative to the space: `A -> B >= 1` under every
/// assignment of the space's propositions to scale members.
fn validity_table(space: &SearchSpace, pool: &[Formula]) -> Result<Vec<Vec<bool>>, EntailError> {
    let alg = space.algebra;
    let mut valid = vec![vec![true; pool.len()]; pool.len()];
    let mut m = PreferentialInterpretation::new(vec!["w".into()], PrefMode::Coherent)?;
    let mut digits = vec![0usize; space.props.len()];
    loop {
        for (k, p) in space.props.iter().enumerate() {
            m.set_val_idx(0, p, space.scale.member(digits[k] as u32));
        }
        for (i, a) in pool.iter().enumerate() {
            let va = m.eval_idx(0, a, alg)?;
            for (j, b) in pool.iter().enumerate() {
                if valid[i][j] && !alg.implication(va, m.eval_idx(0, b, alg)?).is_one() {
                    valid[i][j] = false;
                }
            }
        }
        if !advance(&mut digits, space.scale.len()) {
            return Ok(valid);
        }
    }
}

/// Premises and conclusion of one postulate instance, as (subject,
/// consequent) conditionals.
struct Instance {
    label: String,
    premises: Vec<GradedImplication>,
    conclusion: GradedImplication,
}

fn instances(ctx: &KlmContext<'_>, postulate: Postulate) -> Vec<Instance> {
    let pool = ctx.pool;
    let mut out = Vec::new();
    match postulate {
        Postulate::Reflexivity => {
            for a in pool {
                out.push(Instance {
                    label: format!("A = {a}"),
                    premises: vec![],
                    conclusion: conditional(a, a),
                });
            }
        }
        Postulate::LeftLogicalEquivalence => {
            for (i, a) in pool.iter().enumerate() {
                for (j, b) in pool.iter().enumerate() {
                    if i == j || !(ctx.valid[i][j] && ctx.valid[j][i]) {
                        continue;
                    }
                    for c in pool {
                        out.push(Instance {
                            label: format!("A = {a}, B = {b}, C = {c}"),
                            premises: vec![conditional(a, c)],
                            conclusion: conditional(b, c),
                        });
                    }
                }
            }
        }
        Postulate::RightWeakening => {
            for (j, b) in pool.iter().enumerate() {
                for (k, c) in pool.iter().enumerate() {
                    if !ctx.valid[j][k] {
                        continue;
                    }
                    for a in pool {
                        out.push(Instance {
                            label: format!("A = {a}, B = {b}, C = {c}"),
                            premises: vec![conditional(a, b)],
                            conclusion: conditional(a, c),
                        });
                    }
                }
            }
        }
        Postulate::And => {
            for a in pool {
                for b in pool {
                    for c in pool {
                        out.push(Instance {
                            label: format!("A = {a}, B = {b}, C = {c}"),
                            premises: vec![conditional(a, b), conditional(a, c)],
                            conclusion: conditional(a, &Formula::and(b.clone(), c.clone())),
                        });
                    }
                }
            }
        }
        Postulate::Or => {
            for a in pool {
                for b in pool {
                    for c in pool {
                        out.push(Instance {
                            label: format!("A = {a}, B = {b}, C = {c}"),
                            premises: vec![conditional(a, c), conditional(b, c)],
                            conclusion: conditional(&Formula::or(a.clone(), b.clone()), c),
                        });
                    }
                }
            }
        }
        Postulate::CautiousMonotonicity => {
            for a in pool {
                for b in pool {
                    for c in pool {
                        out.push(Instance {
                            label: format!("A = {a}, B = {b}, C = {c}"),
                            premises: vec![conditional(a, c), conditional(a, b)],
                            conclusion: conditional(&Formula::and(a.clone(), b.clone()), c),
                        });
                    }
                }
            }
        }
    }
    out
}

fn run_postulate(
    ctx: &KlmContext<'_>,
    postulate: Postulate,
) -> Result<PostulateResult, EntailError> {
    let space = ctx.space;
    let alg = space.algebra;
    let insts = instances(ctx, postulate);

    // Under all-strict-orders enumeration, each instance needs its own
    // relations for the typicality subjects it mentions; the guard bounds
    // the number of subjects per instance.
    if space.pref_enum == PrefEnumMode::AllStrictOrders {
        let max_keys = insts.iter().map(instance_keys).map(|ks| ks.len()).max().unwrap_or(0);
        if max_keys > MAX_ORDER_SUBJECTS {
            return Ok(PostulateResult {
                postulate,
                premise_hits: 0,
                counterexample: None,
                skipped: Some(format!(
                    "{} needs {max_keys} preference relations per instance (guard: {MAX_ORDER_SUBJECTS})",
                    postulate.name()
                )),
            });
        }
    }

    let mode = match space.pref_enum {
        PrefEnumMode::CoherentOnly => PrefMode::Coherent,
        PrefEnumMode::AllStrictOrders => PrefMode::Explicit,
    };
    let mut premise_hits = 0u64;
    let mut digits = vec![0usize; space.num_worlds * space.props.len()];
    loop {
        let mut model = PreferentialInterpretation::new(world_names(space.num_worlds), mode)?;
        let mut idx = 0;
        for w in 0..space.num_worlds {
            for p in &space.props {
                model.set_val_idx(w, p, space.scale.member(digits[idx] as u32));
                idx += 1;
            }
        }

        match space.pref_enum {
            PrefEnumMode::CoherentOnly => {
                for inst in &insts {
                    if let Some(cex) = check_instance(&model, inst, alg, &mut premise_hits)? {
                        return Ok(PostulateResult {
                            postulate,
                            premise_hits,
                            counterexample: Some(cex),
                            skipped: None,
                        });
                    }
                }
            }
            PrefEnumMode::AllStrictOrders => {
                for inst in &insts {
                    let keys = instance_keys(inst);
                    let mut order_digits = vec![0usize; keys.len()];
                    loop {
                        let mut candidate = model.clone();
                        for (slot, key) in keys.iter().enumerate() {
                            candidate.install_pref_relation(
                                key.clone(),
                                ctx.orders[order_digits[slot]].clone(),
                            )?;
                        }
                        if let Some(cex) = check_instance(&candidate, inst, alg, &mut premise_hits)?
                        {
                            return Ok(PostulateResult {
                                postulate,
                                premise_hits,
                                counterexample: Some(cex),
                                skipped: None,
                            });
                        }
                        if keys.is_empty() || !advance(&mut order_digits, ctx.orders.len()) {
                            break;
                        }
                    }
                }
            }
        }

        if !advance(&mut digits, space.scale.len()) {
            break;
        }
    }
    Ok(PostulateResult { postulate, premise_hits, counterexample: None, skipped: None })
}

fn instance_keys(inst: &Instance) -> Vec<String> {
    let mut keys = BTreeSet::new();
    for gi in inst.premises.iter().chain(std::iter::once(&inst.conclusion)) {
        gi.lhs.typicality_subjects(&mut keys);
        gi.rhs.typicality_subjects(&mut keys);
    }
    keys.into_iter().collect()
}

fn check_instance(
    model: &PreferentialInterpretation,
    inst: &Instance,
    alg: Algebra,
    premise_hits: &mut u64,
) -> Result<Option<KlmCounterexample>, EntailError> {
    for gi in &inst.premises {
        if !model.satisfies(gi, alg)? {
            return Ok(None);
        }
    }
    *premise_hits += 1;
    if model.satisfies(&inst.conclusion, alg)? {
        Ok(None)
    } else {
        Ok(Some(KlmCounterexample {
            model: model.clone(),
            instantiation: inst.label.clone(),
            failed_conclusion: inst.conclusion.to_string(),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_graded};

    fn space(worlds: usize, n: u32, props: &[&str]) -> SearchSpace {
        SearchSpace::new(
            worlds,
            Scale::new(n).unwrap(),
            props.iter().map(|p| p.to_string()).collect(),
        )
    }

    #[test]
    fn reflexivity_is_entailed_from_nothing() {
        let q = parse_graded("(T(a) -> a) >= 1").unwrap();
        for worlds in 1..=2 {
            let s = space(worlds, 2, &["a"]);
            assert!(entails(&[], &q, &s).unwrap().is_entailed());
        }
    }

    #[test]
    fn and_rule_is_entailed() {
        let kb = vec![
            parse_graded("(T(a) -> b) >= 1").unwrap(),
            parse_graded("(T(a) -> c) >= 1").unwrap(),
        ];
        let q = parse_graded("(T(a) -> b & c) >= 1").unwrap();
        let s = space(2, 2, &["a", "b", "c"]);
        assert!(entails(&kb, &q, &s).unwrap().is_entailed());
    }

    #[test]
    fn falsifiable_query_yields_countermodel() {
        let q = parse_graded("(a -> b) >= 1").unwrap();
        let s = space(1, 1, &["a", "b"]);
        match entails(&[], &q, &s).unwrap() {
            Verdict::Countermodel(cm) => {
                assert!(!cm.satisfies_temporal(&q, Algebra::Goedel).unwrap());
                let a = parse_formula("a").unwrap();
                let b = parse_formula("b").unwrap();
                assert_eq!(cm.teval(0, "w1", &a, Algebra::Goedel).unwrap(), Degree::one());
                assert_eq!(cm.teval(0, "w1", &b, Algebra::Goedel).unwrap(), Degree::zero());
            }
            Verdict::Entailed => panic!("expected countermodel"),
        }
    }

    #[test]
    fn one_entailment_examples() {
        let s = space(2, 2, &["a", "b"]);
        let refl = GradedImplication::ge(
            Formula::typ(Formula::prop("a")).unwrap(),
            Formula::prop("a"),
            Degree::one(),
        );
        assert!(one_entails(&[], &refl, &s).unwrap().is_entailed());

        let kb = vec![parse_graded("(top -> a) >= 1").unwrap()];
        let q = GradedImplication::ge(Formula::prop("b"), Formula::prop("a"), Degree::one());
        assert!(one_entails(&kb, &q, &s).unwrap().is_entailed());

        let q = GradedImplication::ge(
            Formula::typ(Formula::prop("a")).unwrap(),
            Formula::prop("b"),
            Degree::one(),
        );
        assert!(!one_entails(&[], &q, &s).unwrap().is_entailed());

        let bad =
            GradedImplication::ge(Formula::prop("a"), Formula::prop("b"), "1/2".parse().unwrap());
        assert!(matches!(one_entails(&[], &bad, &s), Err(EntailError::Guard(_))));
    }

    #[test]
    fn countermodels_satisfy_the_kb() {
        let kb = vec![parse_graded("(a -> b) >= 1/2").unwrap()];
        let q = parse_graded("(a -> b) >= 1").unwrap();
        let s = space(2, 2, &["a", "b"]);
        match entails(&kb, &q, &s).unwrap() {
            Verdict::Countermodel(cm) => {
                for alpha in &kb {
                    assert!(cm.satisfies_temporal(alpha, Algebra::Goedel).unwrap());
                }
                assert!(!cm.satisfies_temporal(&q, Algebra::Goedel).unwrap());
            }
            Verdict::Entailed => panic!("expected countermodel"),
        }
    }

    #[test]
    fn space_guards() {
        let s = space(3, 8, &["a", "b", "c"]);
        let q = parse_graded("(a -> b) >= 1").unwrap();
        assert!(matches!(entails(&[], &q, &s), Err(EntailError::SpaceTooLarge(_))));

        let s = space(2, 1, &["a"]);
        let q = parse_graded("(a -> x) >= 1").unwrap();
        assert!(matches!(entails(&[], &q, &s), Err(EntailError::Guard(_))));

        let mut s = space(4, 1, &["a"]).with_pref_enum(PrefEnumMode::AllStrictOrders);
        s.loop_len = 1;
        let q = parse_graded("(T(a) -> a) >= 1").unwrap();
        assert!(matches!(entails(&[], &q, &s), Err(EntailError::Guard(_))));
    }

    #[test]
    fn strict_order_counts() {
        // 1, 3 and 19 strict partial orders on 1, 2 and 3 elements.
        assert_eq!(strict_orders(1).len(), 1);
        assert_eq!(strict_orders(2).len(), 3);
        assert_eq!(strict_orders(3).len(), 19);
    }

    #[test]
    fn klm_pool_and_validity() {
        let s = space(2, 2, &["a", "b"]);
        let pool = default_klm_pool(&s.props);
        let keys: Vec<String> = pool.iter().map(|f| f.key()).collect();
        assert!(keys.contains(&"(a & b)".to_string()));
        assert!(keys.contains(&"(b & a)".to_string()));
        let report = klm_suite(&s, &pool).unwrap();
        assert_eq!(report.results.len(), 6);
        for r in &report.results {
            assert!(
                r.passed(),
                "{} failed: {:?}",
                r.postulate.name(),
                r.counterexample.as_ref().map(|c| &c.instantiation)
            );
            assert!(r.premise_hits > 0, "{} never fired", r.postulate.name());
        }
    }

    #[test]
    fn klm_all_orders_mode_probes_cautious_monotonicity() {
        let s = space(2, 1, &["a", "b"]).with_pref_enum(PrefEnumMode::AllStrictOrders);
        let pool = vec![
            parse_formula("a").unwrap(),
            parse_formula("b").unwrap(),
            parse_formula("a & b").unwrap(),
        ];
        let report = klm_suite(&s, &pool).unwrap();
        let cm =
            report.results.iter().find(|r| r.postulate == Postulate::CautiousMonotonicity).unwrap();
        // Arbitrary unrelated orders break cautious monotonicity.
        assert!(cm.counterexample.is_some());
        // Or needs three relations per instance and is guarded.
        let or = report.results.iter().find(|r| r.postulate == Postulate::Or).unwrap();
        assert!(or.skipped.is_some());
        // Reflexivity holds under any preference assignment.
        let refl = report.results.iter().find(|r| r.postulate == Postulate::Reflexivity).unwrap();
        assert!(refl.passed());
    }
}
