//! Canonical printing. Binary connectives are always parenthesized, so
//! the printed form re-parses to a structurally equal tree and doubles as
//! the index key for preference relations.

use std::fmt;

use super::{Formula, TemporalGradedFormula};

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Prop(p) => f.write_str(p),
            Formula::Top => f.write_str("top"),
            Formula::Bot => f.write_str("bot"),
            Formula::Not(a) => write!(f, "~{a}"),
            Formula::Typ(a) => write!(f, "T({a})"),
            Formula::Next(a) => write!(f, "X {a}"),
            Formula::Eventually(a) => write!(f, "F {a}"),
            Formula::Always(a) => write!(f, "G {a}"),
            Formula::BoundedEventually(t, a) => write!(f, "F[{t}] {a}"),
            Formula::BoundedAlways(t, a) => write!(f, "G[{t}] {a}"),
            Formula::And(a, b) => write!(f, "({a} & {b})"),
            Formula::Or(a, b) => write!(f, "({a} | {b})"),
            Formula::Implies(a, b) => write!(f, "({a} -> {b})"),
            Formula::Until(a, b) => write!(f, "({a} U {b})"),
            Formula::BoundedUntil(t, a, b) => write!(f, "({a} U[{t}] {b})"),
        }
    }
}

impl fmt::Display for TemporalGradedFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TemporalGradedFormula::Atom(gi) => write!(f, "{gi}"),
            TemporalGradedFormula::Not(a) => write!(f, "~{a}"),
            TemporalGradedFormula::Next(a) => write!(f, "X {a}"),
            TemporalGradedFormula::Eventually(a) => write!(f, "F {a}"),
            TemporalGradedFormula::Always(a) => write!(f, "G {a}"),
            TemporalGradedFormula::And(a, b) => write!(f, "({a} & {b})"),
            TemporalGradedFormula::Until(a, b) => write!(f, "({a} U {b})"),
        }
    }
}
