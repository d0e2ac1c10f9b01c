//! Shared test support: seeded random models and formulas, and
//! brute-force unfolding oracles that follow the defining equations
//! directly (suprema truncated at a horizon), independent of the lasso
//! windows used by the implementation.

#![allow(dead_code)]

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use mvtl_core::algebra::{Algebra, Degree, Scale};
use mvtl_core::semantics::PrefMode;
use mvtl_core::syntax::{Cmp, Formula, GradedImplication, TemporalGradedFormula};
use mvtl_core::temporal::TemporalInterpretation;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scale_degree(rng: &mut ChaCha8Rng, scale: Scale) -> Degree {
    scale.member(rng.gen_range(0..=scale.n()))
}

/// A random coherent lasso model over the given propositions.
pub fn random_lasso_model(
    rng: &mut ChaCha8Rng,
    max_worlds: usize,
    max_prefix: usize,
    max_loop: usize,
    scale: Scale,
    props: &[&str],
) -> TemporalInterpretation {
    let num_worlds = rng.gen_range(1..=max_worlds);
    let prefix = rng.gen_range(0..=max_prefix);
    let loop_len = rng.gen_range(1..=max_loop);
    let worlds: Vec<String> = (1..=num_worlds).map(|i| format!("w{i}")).collect();
    let mut interp =
        TemporalInterpretation::new(worlds, prefix, loop_len, PrefMode::Coherent).unwrap();
    for t in 0..prefix + loop_len {
        for w in 0..num_worlds {
            for p in props {
                interp.set_val_idx(t, w, p, random_scale_degree(rng, scale));
            }
        }
    }
    interp
}

/// A random object formula of bounded depth.
pub fn random_formula(
    rng: &mut ChaCha8Rng,
    props: &[&str],
    depth: u32,
    allow_typ: bool,
    allow_temporal: bool,
) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..8) {
            0 => Formula::Top,
            1 => Formula::Bot,
            _ => Formula::prop(*props.choose(rng).unwrap()),
        };
    }
    let sub = |rng: &mut ChaCha8Rng| random_formula(rng, props, depth - 1, false, allow_temporal);
    let max = if allow_temporal { 12 } else { 5 };
    loop {
        match rng.gen_range(0..max) {
            0 => return Formula::not(sub(rng)),
            1 => return Formula::and(sub(rng), sub(rng)),
            2 => return Formula::or(sub(rng), sub(rng)),
            3 => return Formula::implies(sub(rng), sub(rng)),
            4 => {
                if allow_typ {
                    return Formula::typ(sub(rng)).unwrap();
                }
            }
            5 => return Formula::next(sub(rng)),
            6 => return Formula::eventually(sub(rng)),
            7 => return Formula::always(sub(rng)),
            8 => return Formula::until(sub(rng), sub(rng)),
            9 => return Formula::bounded_eventually(rng.gen_range(0..4), sub(rng)),
            10 => return Formula::bounded_always(rng.gen_range(0..4), sub(rng)),
            11 => return Formula::bounded_until(rng.gen_range(0..4), sub(rng), sub(rng)),
            _ => unreachable!(),
        }
    }
}

/// A random temporal graded formula of bounded meta depth.
pub fn random_graded(
    rng: &mut ChaCha8Rng,
    props: &[&str],
    scale: Scale,
    meta_depth: u32,
    obj_depth: u32,
    allow_typ: bool,
) -> TemporalGradedFormula {
    if meta_depth == 0 || rng.gen_bool(0.4) {
        let lhs = random_formula(rng, props, obj_depth, allow_typ, true);
        let rhs = random_formula(rng, props, obj_depth, allow_typ, true);
        let threshold = random_scale_degree(rng, scale);
        let gi = if rng.gen_bool(0.8) {
            GradedImplication { lhs, rhs, cmp: Cmp::Ge, threshold }
        } else {
            GradedImplication { lhs, rhs, cmp: Cmp::Le, threshold }
        };
        return TemporalGradedFormula::Atom(gi);
    }
    let sub = |rng: &mut ChaCha8Rng| {
        random_graded(rng, props, scale, meta_depth - 1, obj_depth, allow_typ)
    };
    match rng.gen_range(0..6) {
        0 => TemporalGradedFormula::and(sub(rng), sub(rng)),
        1 => TemporalGradedFormula::not(sub(rng)),
        2 => TemporalGradedFormula::next(sub(rng)),
        3 => TemporalGradedFormula::eventually(sub(rng)),
        4 => TemporalGradedFormula::always(sub(rng)),
        _ => TemporalGradedFormula::until(sub(rng), sub(rng)),
    }
}

/// Brute-force valuation by unfolding the defining equations: `◇`/`□`/`U`
/// fold over `m = n .. n + budget` explicitly, with the same horizon at
/// every nesting level. Typicality resolves coherently. On an ultimately
/// periodic trace every temporal value is exact (inductively) as soon as
/// the horizon clears the saturation window `prefix + 2 * loop`.
pub fn unfold(
    interp: &TemporalInterpretation,
    n: usize,
    w: usize,
    f: &Formula,
    alg: Algebra,
    budget: usize,
) -> Degree {
    match f {
        Formula::Prop(p) => interp.val_at(interp.position(n), w, p).expect("prop set"),
        Formula::Top => Degree::one(),
        Formula::Bot => Degree::zero(),
        Formula::Not(a) => alg.negation(unfold(interp, n, w, a, alg, budget)),
        Formula::And(a, b) => {
            alg.tnorm(unfold(interp, n, w, a, alg, budget), unfold(interp, n, w, b, alg, budget))
        }
        Formula::Or(a, b) => {
            alg.snorm(unfold(interp, n, w, a, alg, budget), unfold(interp, n, w, b, alg, budget))
        }
        Formula::Implies(a, b) => alg.implication(
            unfold(interp, n, w, a, alg, budget),
            unfold(interp, n, w, b, alg, budget),
        ),
        Formula::Typ(a) => {
            let va = unfold(interp, n, w, a, alg, budget);
            let dominated = (0..interp.num_worlds())
                .any(|other| other != w && unfold(interp, n, other, a, alg, budget) > va);
            if dominated {
                Degree::zero()
            } else {
                va
            }
        }
        Formula::Next(a) => unfold(interp, n + 1, w, a, alg, budget),
        Formula::Eventually(a) => {
            let mut acc = Degree::zero();
            for k in 0..=budget {
                acc = alg.snorm(acc, unfold(interp, n + k, w, a, alg, budget));
            }
            acc
        }
        Formula::Always(a) => {
            let mut acc = Degree::one();
            for k in 0..=budget {
                acc = alg.tnorm(acc, unfold(interp, n + k, w, a, alg, budget));
            }
            acc
        }
        Formula::Until(a, b) => {
            let mut acc = Degree::zero();
            let mut prefix = Degree::one();
            for k in 0..=budget {
                let vb = unfold(interp, n + k, w, b, alg, budget);
                acc = alg.snorm(acc, alg.tnorm(vb, prefix));
                prefix = alg.tnorm(prefix, unfold(interp, n + k, w, a, alg, budget));
            }
            acc
        }
        Formula::BoundedEventually(t, a) => {
            let mut acc = Degree::zero();
            for k in 0..=(*t as usize).min(budget) {
                acc = alg.snorm(acc, unfold(interp, n + k, w, a, alg, budget));
            }
            acc
        }
        Formula::BoundedAlways(t, a) => {
            let mut acc = Degree::one();
            for k in 0..=(*t as usize).min(budget) {
                acc = alg.tnorm(acc, unfold(interp, n + k, w, a, alg, budget));
            }
            acc
        }
        Formula::BoundedUntil(t, a, b) => {
            let mut acc = Degree::zero();
            let mut prefix = Degree::one();
            for k in 0..=(*t as usize).min(budget) {
                let vb = unfold(interp, n + k, w, b, alg, budget);
                acc = alg.snorm(acc, alg.tnorm(vb, prefix));
                prefix = alg.tnorm(prefix, unfold(interp, n + k, w, a, alg, budget));
            }
            acc
        }
    }
}

fn unfold_implication_degree(
    interp: &TemporalInterpretation,
    n: usize,
    gi: &GradedImplication,
    alg: Algebra,
    budget: usize,
) -> Degree {
    (0..interp.num_worlds())
        .map(|w| {
            alg.implication(
                unfold(interp, n, w, &gi.lhs, alg, budget),
                unfold(interp, n, w, &gi.rhs, alg, budget),
            )
        })
        .min()
        .expect("non-empty worlds")
}

/// Brute-force meta satisfaction: quantifiers over time truncated at
/// `budget` future steps.
pub fn munfold(
    interp: &TemporalInterpretation,
    n: usize,
    alpha: &TemporalGradedFormula,
    alg: Algebra,
    budget: usize,
) -> bool {
    match alpha {
        TemporalGradedFormula::Atom(gi) => {
            let d = unfold_implication_degree(interp, n, gi, alg, budget);
            gi.cmp.holds(d, gi.threshold)
        }
        TemporalGradedFormula::And(a, b) => {
            munfold(interp, n, a, alg, budget) && munfold(interp, n, b, alg, budget)
        }
        TemporalGradedFormula::Not(a) => !munfold(interp, n, a, alg, budget),
        TemporalGradedFormula::Next(a) => munfold(interp, n + 1, a, alg, budget),
        TemporalGradedFormula::Eventually(a) => {
            (0..=budget).any(|k| munfold(interp, n + k, a, alg, budget))
        }
        TemporalGradedFormula::Always(a) => {
            (0..=budget).all(|k| munfold(interp, n + k, a, alg, budget))
        }
        TemporalGradedFormula::Until(a, b) => {
            for k in 0..=budget {
                if munfold(interp, n + k, b, alg, budget) {
                    return true;
                }
                if !munfold(interp, n + k, a, alg, budget) {
                    return false;
                }
            }
            false
        }
    }
}
