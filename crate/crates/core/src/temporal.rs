//! Temporal interpretations as lasso traces.
//!
//! Infinite time is presented as a finite prefix of length `p` followed
//! by a loop of length `ℓ`: time point `n ≥ p + ℓ` denotes position
//! `p + ((n - p) mod ℓ)`. Valuations and preference relations are stored
//! per position, so they are eventually periodic by construction, and the
//! suprema/infima in the semantics of the unbounded temporal operators
//! are attained within a bounded window:
//!
//! - `◇`/`□` at `n` fold over positions `m ∈ [n, max(n, p) + ℓ)`, which
//!   visits every value the trace can take from `n` on;
//! - `A U B` at `n` folds over `m ∈ [n, max(n, p) + 2ℓ]`: the running
//!   min of the `A`-prefix is non-increasing and stabilizes within one
//!   loop, and the `B`-values repeat with period `ℓ` past the prefix, so
//!   one further loop suffices.
//!
//! Both windows are exact only because `⊗`/`⊕` are min/max (idempotent);
//! a non-idempotent algebra is rejected for the unbounded operators.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{Algebra, Degree};
use crate::semantics::{
    validate_strict_order, EvalError, ModelError, PrefMode, PrefRelation,
    PreferentialInterpretation,
};
use crate::syntax::{Formula, GradedImplication, TemporalGradedFormula};

/// A many-valued temporal multi-preferential interpretation over a lasso.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalInterpretation {
    worlds: Vec<String>,
    prefix_len: usize,
    loop_len: usize,
    /// `valuation[position][world] : prop -> degree`, positions `0..p+ℓ`.
    valuation: Vec<Vec<BTreeMap<String, Degree>>>,
    prefs: BTreeMap<(usize, String), PrefRelation>,
    pref_mode: PrefMode,
}

impl TemporalInterpretation {
    pub fn new(
        worlds: Vec<String>,
        prefix_len: usize,
        loop_len: usize,
        pref_mode: PrefMode,
    ) -> Result<Self, ModelError> {
        if worlds.is_empty() {
            return Err(ModelError::EmptyWorlds);
        }
        if loop_len == 0 {
            return Err(ModelError::EmptyLoop);
        }
        let mut seen = BTreeSet::new();
        for w in &worlds {
            if !seen.insert(w.clone()) {
                return Err(ModelError::DuplicateWorld(w.clone()));
            }
        }
        let positions = prefix_len + loop_len;
        let valuation = vec![vec![BTreeMap::new(); worlds.len()]; positions];
        Ok(TemporalInterpretation {
            worlds,
            prefix_len,
            loop_len,
            valuation,
            prefs: BTreeMap::new(),
            pref_mode,
        })
    }

    /// Lifts a non-temporal interpretation to the constant trace
    /// (`p = 0`, `ℓ = 1`).
    pub fn lift(m: &PreferentialInterpretation) -> Self {
        let worlds = m.worlds().to_vec();
        let mut t =
            TemporalInterpretation::new(worlds, 0, 1, m.pref_mode()).expect("non-empty worlds");
        for w in 0..m.num_worlds() {
            for (prop, d) in m.valuation(w) {
                t.valuation[0][w].insert(prop.clone(), *d);
            }
        }
        for (key, rel) in m.stored_prefs() {
            t.prefs.insert((0, key.clone()), rel.clone());
        }
        t
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn num_worlds(&self) -> usize {
        self.worlds.len()
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    pub fn loop_len(&self) -> usize {
        self.loop_len
    }

    /// Number of stored positions, `p + ℓ`.
    pub fn positions(&self) -> usize {
        self.prefix_len + self.loop_len
    }

    pub fn pref_mode(&self) -> PrefMode {
        self.pref_mode
    }

    /// Maps an arbitrary time point to its stored lasso position.
    pub fn position(&self, n: usize) -> usize {
        let bound = self.positions();
        if n < bound {
            n
        } else {
            self.prefix_len + (n - self.prefix_len) % self.loop_len
        }
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

    pub fn props(&self) -> BTreeSet<String> {
        self.valuation.iter().flat_map(|ws| ws.iter().flat_map(|m| m.keys().cloned())).collect()
    }

    pub fn set_val(
        &mut self,
        time: usize,
        world: &str,
        prop: &str,
        d: Degree,
    ) -> Result<(), ModelError> {
        let w = self
            .worlds
            .iter()
            .position(|x| x == world)
            .ok_or_else(|| ModelError::UnknownWorld(world.to_string()))?;
        self.check_time(time)?;
        self.valuation[time][w].insert(prop.to_string(), d);
        Ok(())
    }

    pub fn set_val_idx(&mut self, time: usize, world: usize, prop: &str, d: Degree) {
        self.valuation[time][world].insert(prop.to_string(), d);
    }

    /// Sets a proposition at every stored position (constant trace entry).
    pub fn set_val_all_times(
        &mut self,
        world: &str,
        prop: &str,
        d: Degree,
    ) -> Result<(), ModelError> {
        for t in 0..self.positions() {
            self.set_val(t, world, prop, d)?;
        }
        Ok(())
    }

    pub fn val_at(&self, time: usize, world: usize, prop: &str) -> Option<Degree> {
        self.valuation.get(time).and_then(|ws| ws[world].get(prop).copied())
    }

    fn check_time(&self, time: usize) -> Result<(), ModelError> {
        if time >= self.positions() {
            Err(ModelError::TimeOutOfRange {
                time,
                prefix: self.prefix_len,
                loop_len: self.loop_len,
            })
        } else {
            Ok(())
        }
    }

    pub fn add_pref_pair(
        &mut self,
        time: usize,
        key: &str,
        lower: &str,
        upper: &str,
    ) -> Result<(), ModelError> {
        self.check_time(time)?;
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
        self.prefs.entry((time, key.to_string())).or_default().insert((lo, hi));
        Ok(())
    }

    pub fn install_pref_relation(
        &mut self,
        time: usize,
        key: String,
        rel: PrefRelation,
    ) -> Result<(), ModelError> {
        self.check_time(time)?;
        validate_strict_order(&key, &rel, |i| self.worlds[i].clone())?;
        self.prefs.insert((time, key), rel);
        Ok(())
    }

    /// Declares a (possibly empty) relation at `time`; see
    /// [`PreferentialInterpretation::ensure_pref_entry`].
    pub fn ensure_pref_entry(&mut self, time: usize, key: &str) -> Result<(), ModelError> {
        self.check_time(time)?;
        self.prefs.entry((time, key.to_string())).or_default();
        Ok(())
    }

    pub fn validate_prefs(&self) -> Result<(), ModelError> {
        for ((_, key), rel) in &self.prefs {
            validate_strict_order(key, rel, |i| self.worlds[i].clone())?;
        }
        Ok(())
    }

    pub fn stored_pref_at(&self, time: usize, key: &str) -> Option<&PrefRelation> {
        self.prefs.get(&(time, key.to_string()))
    }

    pub fn pref_entries(&self) -> impl Iterator<Item = (usize, &str, &PrefRelation)> {
        self.prefs.iter().map(|((t, k), rel)| (*t, k.as_str(), rel))
    }

    fn val(&self, n: usize, w: usize, prop: &str) -> Result<Degree, EvalError> {
        let pos = self.position(n);
        self.valuation[pos][w].get(prop).copied().ok_or_else(|| EvalError::MissingProp {
            prop: prop.to_string(),
            world: self.worlds[w].clone(),
            time: Some(pos),
        })
    }

    fn dominated_at(
        &self,
        n: usize,
        w: usize,
        key: &str,
        a: &Formula,
        alg: Algebra,
    ) -> Result<bool, EvalError> {
        let pos = self.position(n);
        if let Some(rel) = self.prefs.get(&(pos, key.to_string())) {
            return Ok(rel.iter().any(|&(_, y)| y == w));
        }
        match self.pref_mode {
            PrefMode::Coherent => {
                let va = self.teval_idx(n, w, a, alg)?;
                for other in 0..self.worlds.len() {
                    if other != w && self.teval_idx(n, other, a, alg)? > va {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            PrefMode::Explicit | PrefMode::Weighted => Err(EvalError::MissingPreference {
                key: key.to_string(),
                mode: self.pref_mode.name(),
                time: Some(pos),
            }),
        }
    }

    /// Exclusive upper bound of the window that visits every lasso
    /// position reachable from `n`.
    fn one_loop_horizon(&self, n: usize) -> usize {
        n.max(self.prefix_len) + self.loop_len
    }

    pub fn teval(
        &self,
        n: usize,
        world: &str,
        f: &Formula,
        alg: Algebra,
    ) -> Result<Degree, EvalError> {
        let w = self.world_index(world)?;
        self.teval_idx(n, w, f, alg)
    }

    pub fn teval_idx(
        &self,
        n: usize,
        w: usize,
        f: &Formula,
        alg: Algebra,
    ) -> Result<Degree, EvalError> {
        match f {
            Formula::Prop(p) => self.val(n, w, p),
            Formula::Top => Ok(Degree::one()),
            Formula::Bot => Ok(Degree::zero()),
            Formula::Not(a) => Ok(alg.negation(self.teval_idx(n, w, a, alg)?)),
            Formula::And(a, b) => {
                Ok(alg.tnorm(self.teval_idx(n, w, a, alg)?, self.teval_idx(n, w, b, alg)?))
            }
            Formula::Or(a, b) => {
                Ok(alg.snorm(self.teval_idx(n, w, a, alg)?, self.teval_idx(n, w, b, alg)?))
            }
            Formula::Implies(a, b) => {
                Ok(alg.implication(self.teval_idx(n, w, a, alg)?, self.teval_idx(n, w, b, alg)?))
            }
            Formula::Typ(a) => {
                let va = self.teval_idx(n, w, a, alg)?;
                if self.dominated_at(n, w, &a.key(), a, alg)? {
                    Ok(Degree::zero())
                } else {
                    Ok(va)
                }
            }
            Formula::Next(a) => self.teval_idx(n + 1, w, a, alg),
            Formula::Eventually(a) => {
                self.require_idempotent(alg, f)?;
                let mut acc = Degree::zero();
                for m in n..self.one_loop_horizon(n) {
                    acc = alg.snorm(acc, self.teval_idx(m, w, a, alg)?);
                }
                Ok(acc)
            }
            Formula::Always(a) => {
                self.require_idempotent(alg, f)?;
                let mut acc = Degree::one();
                for m in n..self.one_loop_horizon(n) {
                    acc = alg.tnorm(acc, self.teval_idx(m, w, a, alg)?);
                }
                Ok(acc)
            }
            Formula::Until(a, b) => {
                self.require_idempotent(alg, f)?;
                let horizon = n.max(self.prefix_len) + 2 * self.loop_len;
                self.until_fold(n, horizon, w, a, b, alg)
            }
            Formula::BoundedEventually(t, a) => {
                let mut acc = Degree::zero();
                for m in n..=n + *t as usize {
                    acc = alg.snorm(acc, self.teval_idx(m, w, a, alg)?);
                }
                Ok(acc)
            }
            Formula::BoundedAlways(t, a) => {
                let mut acc = Degree::one();
                for m in n..=n + *t as usize {
                    acc = alg.tnorm(acc, self.teval_idx(m, w, a, alg)?);
                }
                Ok(acc)
            }
            Formula::BoundedUntil(t, a, b) => self.until_fold(n, n + *t as usize, w, a, b, alg),
        }
    }

    /// `⊕_{m=n}^{hi} (v(m, B) ⊗ ⊗_{k=n}^{m-1} v(k, A))`, inclusive of `hi`.
    fn until_fold(
        &self,
        n: usize,
        hi: usize,
        w: usize,
        a: &Formula,
        b: &Formula,
        alg: Algebra,
    ) -> Result<Degree, EvalError> {
        let mut best = Degree::zero();
        let mut prefix = Degree::one();
        for m in n..=hi {
            let vb = self.teval_idx(m, w, b, alg)?;
            best = alg.snorm(best, alg.tnorm(vb, prefix));
            prefix = alg.tnorm(prefix, self.teval_idx(m, w, a, alg)?);
        }
        Ok(best)
    }

    fn require_idempotent(&self, alg: Algebra, f: &Formula) -> Result<(), EvalError> {
        if alg.idempotent() {
            Ok(())
        } else {
            Err(EvalError::NonIdempotentAlgebra { op: f.to_string() })
        }
    }

    /// Truth degree of `f -> g` at time point `n`: min over worlds of
    /// `v(n, w, f) ▷ v(n, w, g)`.
    pub fn implication_degree_at(
        &self,
        n: usize,
        f: &Formula,
        g: &Formula,
        alg: Algebra,
    ) -> Result<Degree, EvalError> {
        let mut best = Degree::one();
        for w in 0..self.worlds.len() {
            let d = alg.implication(self.teval_idx(n, w, f, alg)?, self.teval_idx(n, w, g, alg)?);
            best = best.min(d);
        }
        Ok(best)
    }

    pub fn sat_graded_at(
        &self,
        n: usize,
        gi: &GradedImplication,
        alg: Algebra,
    ) -> Result<bool, EvalError> {
        let d = self.implication_degree_at(n, &gi.lhs, &gi.rhs, alg)?;
        Ok(gi.cmp.holds(d, gi.threshold))
    }

    /// Two-valued satisfaction of a temporal graded formula at time `n`.
    /// Meta-level `◇`/`□`/`U` quantify over all `m ≥ n`, but satisfaction
    /// at `m` depends only on the lasso position of `m`, so checking
    /// `m ∈ [n, max(n, p) + ℓ)` is exact.
    pub fn msat(
        &self,
        n: usize,
        alpha: &TemporalGradedFormula,
        alg: Algebra,
    ) -> Result<bool, EvalError> {
        match alpha {
            TemporalGradedFormula::Atom(gi) => self.sat_graded_at(n, gi, alg),
            TemporalGradedFormula::And(a, b) => Ok(self.msat(n, a, alg)? && self.msat(n, b, alg)?),
            TemporalGradedFormula::Not(a) => Ok(!self.msat(n, a, alg)?),
            TemporalGradedFormula::Next(a) => self.msat(n + 1, a, alg),
            TemporalGradedFormula::Eventually(a) => {
                for m in n..self.one_loop_horizon(n) {
                    if self.msat(m, a, alg)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            TemporalGradedFormula::Always(a) => {
                for m in n..self.one_loop_horizon(n) {
                    if !self.msat(m, a, alg)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            TemporalGradedFormula::Until(a, b) => {
                // A minimal witness for B, if any, lies within one loop.
                for m in n..self.one_loop_horizon(n) {
                    if self.msat(m, b, alg)? {
                        return Ok(true);
                    }
                    if !self.msat(m, a, alg)? {
                        return Ok(false);
                    }
                }
                Ok(false)
            }
        }
    }

    /// Satisfaction per the temporal semantics: at time point 0.
    pub fn satisfies_temporal(
        &self,
        alpha: &TemporalGradedFormula,
        alg: Algebra,
    ) -> Result<bool, EvalError> {
        self.msat(0, alpha, alg)
    }

    /// The non-temporal interpretation at time point `n`: same worlds,
    /// the valuation and preference relations of `n`'s lasso position.
    pub fn slice(&self, n: usize) -> PreferentialInterpretation {
        let pos = self.position(n);
        let mut m = PreferentialInterpretation::new(self.worlds.clone(), self.pref_mode)
            .expect("worlds already validated");
        for w in 0..self.worlds.len() {
            for (prop, d) in &self.valuation[pos][w] {
                m.set_val_idx(w, prop, *d);
            }
        }
        for ((t, key), rel) in &self.prefs {
            if *t == pos {
                m.install_pref_relation(key.clone(), rel.clone())
                    .expect("relation already validated");
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_graded};

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    /// One world `w`, prefix 1, loop 2, `a` taking the given values.
    fn single_trace(values: &[&str]) -> TemporalInterpretation {
        let mut i =
            TemporalInterpretation::new(vec!["w".into()], 1, 2, PrefMode::Coherent).unwrap();
        assert_eq!(values.len(), 3);
        for (t, v) in values.iter().enumerate() {
            i.set_val(t, "w", "a", d(v)).unwrap();
        }
        i
    }

    #[test]
    fn lasso_addressing() {
        let i = single_trace(&["0", "1/2", "1/4"]);
        assert_eq!(i.position(0), 0);
        assert_eq!(i.position(2), 2);
        assert_eq!(i.position(3), 1);
        assert_eq!(i.position(4), 2);
        assert_eq!(i.position(7), 1);
    }

    #[test]
    fn eventually_and_always_on_lasso() {
        let i = single_trace(&["0", "1/2", "1/4"]);
        let ev = parse_formula("F a").unwrap();
        let al = parse_formula("G a").unwrap();
        assert_eq!(i.teval(0, "w", &ev, Algebra::Goedel).unwrap(), d("1/2"));
        assert_eq!(i.teval(0, "w", &al, Algebra::Goedel).unwrap(), Degree::zero());
        assert_eq!(i.teval(1, "w", &al, Algebra::Goedel).unwrap(), d("1/4"));
    }

    #[test]
    fn next_shifts_time() {
        let i = single_trace(&["0", "1/2", "1/4"]);
        let xa = parse_formula("X a").unwrap();
        let a = parse_formula("a").unwrap();
        for n in 0..8 {
            assert_eq!(
                i.teval(n, "w", &xa, Algebra::Goedel).unwrap(),
                i.teval(n + 1, "w", &a, Algebra::Goedel).unwrap()
            );
        }
    }

    #[test]
    fn bounded_operators() {
        let i = single_trace(&["0", "1/2", "1/4"]);
        let alg = Algebra::Goedel;
        assert_eq!(
            i.teval(0, "w", &parse_formula("F[0] a").unwrap(), alg).unwrap(),
            Degree::zero()
        );
        assert_eq!(i.teval(0, "w", &parse_formula("F[1] a").unwrap(), alg).unwrap(), d("1/2"));
        // Saturation: once t >= p + 2l the bounded operators agree with
        // the unbounded ones.
        for (bounded, unbounded) in [("F[5] a", "F a"), ("G[5] a", "G a"), ("a U[5] a", "a U a")] {
            assert_eq!(
                i.teval(0, "w", &parse_formula(bounded).unwrap(), alg).unwrap(),
                i.teval(0, "w", &parse_formula(unbounded).unwrap(), alg).unwrap()
            );
        }
    }

    #[test]
    fn until_needs_two_loops() {
        // b only scores after the prefix min of a has stabilized: values
        // chosen so the best witness lies in the second loop pass.
        let mut i =
            TemporalInterpretation::new(vec!["w".into()], 1, 2, PrefMode::Coherent).unwrap();
        for (t, (va, vb)) in [("1", "0"), ("1/2", "0"), ("1", "3/4")].iter().enumerate() {
            i.set_val(t, "w", "a", d(va)).unwrap();
            i.set_val(t, "w", "b", d(vb)).unwrap();
        }
        let u = parse_formula("a U b").unwrap();
        // witness at position 2: b = 3/4, prefix min(a) over [0, 2) = 1/2.
        assert_eq!(i.teval(0, "w", &u, Algebra::Goedel).unwrap(), d("1/2"));
        assert_eq!(i.teval(2, "w", &u, Algebra::Goedel).unwrap(), d("3/4"));
    }

    #[test]
    fn typicality_per_time_point() {
        let mut i =
            TemporalInterpretation::new(vec!["w1".into(), "w2".into()], 0, 2, PrefMode::Coherent)
                .unwrap();
        i.set_val(0, "w1", "a", d("1")).unwrap();
        i.set_val(0, "w2", "a", d("1/2")).unwrap();
        i.set_val(1, "w1", "a", d("1/4")).unwrap();
        i.set_val(1, "w2", "a", d("1")).unwrap();
        let ta = parse_formula("T(a)").unwrap();
        let alg = Algebra::Goedel;
        assert_eq!(i.teval(0, "w1", &ta, alg).unwrap(), Degree::one());
        assert_eq!(i.teval(0, "w2", &ta, alg).unwrap(), Degree::zero());
        assert_eq!(i.teval(1, "w1", &ta, alg).unwrap(), Degree::zero());
        assert_eq!(i.teval(1, "w2", &ta, alg).unwrap(), Degree::one());
    }

    #[test]
    fn implication_degree_at_examples() {
        let mut i =
            TemporalInterpretation::new(vec!["w".into()], 0, 1, PrefMode::Coherent).unwrap();
        i.set_val(0, "w", "a", d("1")).unwrap();
        i.set_val(0, "w", "b", d("4/5")).unwrap();
        let a = parse_formula("a").unwrap();
        let b = parse_formula("b").unwrap();
        assert_eq!(i.implication_degree_at(0, &a, &b, Algebra::Goedel).unwrap(), d("4/5"));
        for n in 0..4 {
            assert_eq!(i.implication_degree_at(n, &a, &a, Algebra::Goedel).unwrap(), Degree::one());
        }
    }

    #[test]
    fn msat_clauses() {
        let i = single_trace(&["0", "1/2", "1/4"]);
        let alg = Algebra::Goedel;
        let refl = parse_graded("(a -> a) >= 1").unwrap();
        assert!(i.satisfies_temporal(&refl, alg).unwrap());

        let alpha = parse_graded("X (a -> a) >= 1").unwrap();
        let beta = parse_graded("(a -> a) >= 1").unwrap();
        assert_eq!(i.msat(0, &alpha, alg).unwrap(), i.msat(1, &beta, alg).unwrap());

        // Meta negation is classical.
        let neg = parse_graded("~(a -> a) >= 1").unwrap();
        assert!(!i.satisfies_temporal(&neg, alg).unwrap());

        // G over the lasso: (top -> a) >= 1/4 holds from position 1 on.
        let g = parse_graded("G (top -> a) >= 1/4").unwrap();
        assert!(!i.satisfies_temporal(&g, alg).unwrap());
        assert!(i.msat(1, &g, alg).unwrap());

        // F finds the position where a reaches 1/2.
        let f = parse_graded("F (top -> a) >= 1/2").unwrap();
        assert!(i.satisfies_temporal(&f, alg).unwrap());
        let f_high = parse_graded("F (top -> a) >= 3/4").unwrap();
        assert!(!i.satisfies_temporal(&f_high, alg).unwrap());
    }

    #[test]
    fn slice_projects_time_point() {
        let i = single_trace(&["0", "1/2", "1/4"]);
        let a = parse_formula("a").unwrap();
        for n in 0..8 {
            let m = i.slice(n);
            assert_eq!(
                m.eval("w", &a, Algebra::Goedel).unwrap(),
                i.teval(n, "w", &a, Algebra::Goedel).unwrap()
            );
            assert_eq!(m.pref_mode(), i.pref_mode());
        }
        // Slices repeat with the loop beyond the prefix.
        assert_eq!(i.slice(1), i.slice(3));
        assert_eq!(i.slice(2), i.slice(4));
    }

    #[test]
    fn explicit_temporal_prefs() {
        let mut i =
            TemporalInterpretation::new(vec!["w1".into(), "w2".into()], 0, 1, PrefMode::Explicit)
                .unwrap();
        i.set_val_all_times("w1", "a", d("1")).unwrap();
        i.set_val_all_times("w2", "a", d("1")).unwrap();
        i.set_val_all_times("w1", "b", d("1")).unwrap();
        i.set_val_all_times("w2", "b", d("1")).unwrap();
        i.add_pref_pair(0, "a", "w1", "w2").unwrap();
        i.validate_prefs().unwrap();
        let ta = parse_formula("T(a)").unwrap();
        assert_eq!(i.teval(0, "w1", &ta, Algebra::Goedel).unwrap(), Degree::one());
        assert_eq!(i.teval(0, "w2", &ta, Algebra::Goedel).unwrap(), Degree::zero());
        assert!(matches!(
            i.teval(0, "w1", &parse_formula("T(b)").unwrap(), Algebra::Goedel),
            Err(EvalError::MissingPreference { .. })
        ));
    }

    #[test]
    fn time_out_of_range_rejected() {
        let mut i =
            TemporalInterpretation::new(vec!["w".into()], 1, 2, PrefMode::Explicit).unwrap();
        assert!(matches!(
            i.set_val(3, "w", "a", Degree::one()),
            Err(ModelError::TimeOutOfRange { .. })
        ));
        assert!(matches!(
            i.add_pref_pair(5, "a", "w", "w"),
            Err(ModelError::TimeOutOfRange { .. })
        ));
    }
}
