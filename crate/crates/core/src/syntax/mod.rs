//! Formula ASTs and the concrete text syntax.
//!
//! Object formulas use `~ & | ->` for the connectives, `T(...)` for
//! typicality, `X F G U` for the temporal operators and `F[t] G[t] U[t]`
//! for their bounded versions. Graded formulas close an object
//! implication into a two-valued leaf with `(A -> B) >= q` or
//! `(A -> B) <= q`, and combine leaves with `~ & X F G U` at the meta
//! level.
//!
//! The typicality operator cannot be nested; the parser rejects `T`
//! inside `T` and smart constructors enforce the same invariant for
//! programmatically built trees.

mod parser;
mod printer;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::{Degree, Rational};

pub use parser::{parse_formula, parse_graded};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("nested typicality operator at offset {pos}")]
    NestedTypicality { pos: usize },
    #[error("threshold `{value}` outside [0, 1] at offset {pos}")]
    ThresholdRange { pos: usize, value: String },
}

/// Construction-time violations for hand-built trees.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AstError {
    #[error("nested typicality operator in `{0}`")]
    NestedTypicality(String),
    #[error("typicality operator not allowed in `{0}`")]
    TypNotAllowed(String),
}

/// An object-level formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Prop(String),
    Top,
    Bot,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Typ(Box<Formula>),
    Next(Box<Formula>),
    Eventually(Box<Formula>),
    Always(Box<Formula>),
    Until(Box<Formula>, Box<Formula>),
    BoundedEventually(u32, Box<Formula>),
    BoundedAlways(u32, Box<Formula>),
    BoundedUntil(u32, Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn prop(name: impl Into<String>) -> Self {
        Formula::Prop(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(f: Formula, g: Formula) -> Self {
        Formula::And(Box::new(f), Box::new(g))
    }

    pub fn or(f: Formula, g: Formula) -> Self {
        Formula::Or(Box::new(f), Box::new(g))
    }

    pub fn implies(f: Formula, g: Formula) -> Self {
        Formula::Implies(Box::new(f), Box::new(g))
    }

    /// Typicality; fails if the argument already contains `T`.
    pub fn typ(f: Formula) -> Result<Self, AstError> {
        if f.contains_typ() {
            return Err(AstError::NestedTypicality(f.to_string()));
        }
        Ok(Formula::Typ(Box::new(f)))
    }

    pub fn next(f: Formula) -> Self {
        Formula::Next(Box::new(f))
    }

    pub fn eventually(f: Formula) -> Self {
        Formula::Eventually(Box::new(f))
    }

    pub fn always(f: Formula) -> Self {
        Formula::Always(Box::new(f))
    }

    pub fn until(f: Formula, g: Formula) -> Self {
        Formula::Until(Box::new(f), Box::new(g))
    }

    pub fn bounded_eventually(t: u32, f: Formula) -> Self {
        Formula::BoundedEventually(t, Box::new(f))
    }

    pub fn bounded_always(t: u32, f: Formula) -> Self {
        Formula::BoundedAlways(t, Box::new(f))
    }

    pub fn bounded_until(t: u32, f: Formula, g: Formula) -> Self {
        Formula::BoundedUntil(t, Box::new(f), Box::new(g))
    }

    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.walk(&mut |f| out.push(f));
        out
    }

    fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a Formula)) {
        visit(self);
        match self {
            Formula::Prop(_) | Formula::Top | Formula::Bot => {}
            Formula::Not(f)
            | Formula::Typ(f)
            | Formula::Next(f)
            | Formula::Eventually(f)
            | Formula::Always(f)
            | Formula::BoundedEventually(_, f)
            | Formula::BoundedAlways(_, f) => f.walk(visit),
            Formula::And(f, g)
            | Formula::Or(f, g)
            | Formula::Implies(f, g)
            | Formula::Until(f, g)
            | Formula::BoundedUntil(_, f, g) => {
                f.walk(visit);
                g.walk(visit);
            }
        }
    }

    pub fn contains_typ(&self) -> bool {
        self.subformulas().iter().any(|f| matches!(f, Formula::Typ(_)))
    }

    pub fn contains_temporal(&self) -> bool {
        self.subformulas().iter().any(|f| {
            matches!(
                f,
                Formula::Next(_)
                    | Formula::Eventually(_)
                    | Formula::Always(_)
                    | Formula::Until(_, _)
                    | Formula::BoundedEventually(_, _)
                    | Formula::BoundedAlways(_, _)
                    | Formula::BoundedUntil(_, _, _)
            )
        })
    }

    /// Collects the propositional variables.
    pub fn props(&self, out: &mut BTreeSet<String>) {
        for f in self.subformulas() {
            if let Formula::Prop(p) = f {
                out.insert(p.clone());
            }
        }
    }

    /// Collects the keys of all typicality subjects `A` in `T(A)`.
    pub fn typicality_subjects(&self, out: &mut BTreeSet<String>) {
        for f in self.subformulas() {
            if let Formula::Typ(a) = f {
                out.insert(a.key());
            }
        }
    }

    /// Canonical index for preference relations: the canonically printed
    /// form. Two formulas share a preference relation iff their keys are
    /// equal; there is no semantic normalization, so `a & b` and `b & a`
    /// index distinct relations.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

/// Comparison direction of a graded implication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cmp {
    Ge,
    Le,
}

impl Cmp {
    pub fn holds(self, degree: Degree, threshold: Degree) -> bool {
        match self {
            Cmp::Ge => degree >= threshold,
            Cmp::Le => degree <= threshold,
        }
    }
}

impl fmt::Display for Cmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cmp::Ge => ">=",
            Cmp::Le => "<=",
        })
    }
}

/// A graded implication `A -> B >= l` (or `<= u`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedImplication {
    pub lhs: Formula,
    pub rhs: Formula,
    pub cmp: Cmp,
    pub threshold: Degree,
}

impl GradedImplication {
    pub fn ge(lhs: Formula, rhs: Formula, threshold: Degree) -> Self {
        GradedImplication { lhs, rhs, cmp: Cmp::Ge, threshold }
    }

    pub fn le(lhs: Formula, rhs: Formula, threshold: Degree) -> Self {
        GradedImplication { lhs, rhs, cmp: Cmp::Le, threshold }
    }
}

impl fmt::Display for GradedImplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} -> {}) {} {}", self.lhs, self.rhs, self.cmp, self.threshold)
    }
}

/// A temporal graded formula: boolean/temporal combinations of graded
/// implications, evaluated two-valued at a time point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TemporalGradedFormula {
    Atom(GradedImplication),
    And(Box<TemporalGradedFormula>, Box<TemporalGradedFormula>),
    Not(Box<TemporalGradedFormula>),
    Next(Box<TemporalGradedFormula>),
    Eventually(Box<TemporalGradedFormula>),
    Always(Box<TemporalGradedFormula>),
    Until(Box<TemporalGradedFormula>, Box<TemporalGradedFormula>),
}

impl TemporalGradedFormula {
    pub fn atom(gi: GradedImplication) -> Self {
        TemporalGradedFormula::Atom(gi)
    }

    pub fn and(a: Self, b: Self) -> Self {
        TemporalGradedFormula::And(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Self) -> Self {
        TemporalGradedFormula::Not(Box::new(a))
    }

    pub fn next(a: Self) -> Self {
        TemporalGradedFormula::Next(Box::new(a))
    }

    pub fn eventually(a: Self) -> Self {
        TemporalGradedFormula::Eventually(Box::new(a))
    }

    pub fn always(a: Self) -> Self {
        TemporalGradedFormula::Always(Box::new(a))
    }

    pub fn until(a: Self, b: Self) -> Self {
        TemporalGradedFormula::Until(Box::new(a), Box::new(b))
    }

    pub fn atoms(&self) -> Vec<&GradedImplication> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a GradedImplication>) {
        match self {
            TemporalGradedFormula::Atom(gi) => out.push(gi),
            TemporalGradedFormula::Not(a)
            | TemporalGradedFormula::Next(a)
            | TemporalGradedFormula::Eventually(a)
            | TemporalGradedFormula::Always(a) => a.collect_atoms(out),
            TemporalGradedFormula::And(a, b) | TemporalGradedFormula::Until(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    pub fn props(&self, out: &mut BTreeSet<String>) {
        for gi in self.atoms() {
            gi.lhs.props(out);
            gi.rhs.props(out);
        }
    }

    pub fn typicality_subjects(&self, out: &mut BTreeSet<String>) {
        for gi in self.atoms() {
            gi.lhs.typicality_subjects(out);
            gi.rhs.typicality_subjects(out);
        }
    }
}

/// A weighted typicality conditional `(T(subject) -> consequent, weight)`.
/// Neither side may contain the typicality operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedConditional {
    subject: Formula,
    consequent: Formula,
    pub weight: Rational,
}

impl WeightedConditional {
    pub fn new(subject: Formula, consequent: Formula, weight: Rational) -> Result<Self, AstError> {
        if subject.contains_typ() {
            return Err(AstError::TypNotAllowed(subject.to_string()));
        }
        if consequent.contains_typ() {
            return Err(AstError::TypNotAllowed(consequent.to_string()));
        }
        Ok(WeightedConditional { subject, consequent, weight })
    }

    pub fn subject(&self) -> &Formula {
        &self.subject
    }

    pub fn consequent(&self) -> &Formula {
        &self.consequent
    }

    pub fn subject_key(&self) -> String {
        self.subject.key()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_syntactic() {
        let a = parse_formula("a&b").unwrap();
        let b = parse_formula("a & b").unwrap();
        let c = parse_formula("b&a").unwrap();
        assert_eq!(a.key(), b.key());
        assert_ne!(a.key(), c.key());
        assert_eq!(parse_formula("student").unwrap().key(), "student");
    }

    #[test]
    fn typ_constructor_rejects_nesting() {
        let t = Formula::typ(Formula::prop("a")).unwrap();
        assert!(Formula::typ(t).is_err());
    }

    #[test]
    fn weighted_conditional_rejects_typ() {
        let t = Formula::typ(Formula::prop("a")).unwrap();
        assert!(WeightedConditional::new(t, Formula::prop("b"), Rational::from_integer(1)).is_err());
        assert!(WeightedConditional::new(
            Formula::prop("a"),
            Formula::prop("b"),
            Rational::from_integer(-40)
        )
        .is_ok());
    }

    #[test]
    fn subject_collection() {
        let f = parse_formula("T(a) -> (b U T(a & c))").unwrap();
        let mut keys = BTreeSet::new();
        f.typicality_subjects(&mut keys);
        assert_eq!(keys.into_iter().collect::<Vec<_>>(), vec!["(a & c)", "a"]);
    }
}
