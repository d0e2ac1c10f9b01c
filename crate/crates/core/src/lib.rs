//! A reasoning engine for a many-valued temporal conditional logic with
//! typicality.
//!
//! The library evaluates formulas over finite multi-preferential
//! interpretations whose temporal dimension is presented as a lasso
//! (finite prefix plus repeating loop), derives preference relations from
//! weighted knowledge bases, decides entailment over declared finite
//! search spaces, verifies the KLM postulates of preferential consequence,
//! and instantiates the logic over edge-weighted gradual argumentation
//! graphs.
//!
//! Module map:
//!
//! - [`algebra`]: exact truth degrees, the scale `C_n`, and the Gödel /
//!   Zadeh combination functions;
//! - [`syntax`]: formula ASTs, the concrete text syntax, parser and
//!   printer;
//! - [`semantics`]: non-temporal preferential interpretations, typicality
//!   evaluation, implication degrees, coherence and faithfulness checks;
//! - [`temporal`]: lasso-shaped temporal interpretations and exact
//!   evaluation of the unbounded and bounded temporal operators;
//! - [`weighted`]: weighted knowledge bases, world weights, and derived
//!   preferences;
//! - [`entailment`]: finite-space entailment by model enumeration and the
//!   KLM postulate harness;
//! - [`argumentation`]: gradual argumentation graphs, labelling dynamics,
//!   and their mapping into (temporal) interpretations;
//! - [`files`]: the line-oriented interpretation, knowledge-base and
//!   graph file formats.

pub mod algebra;
pub mod argumentation;
pub mod entailment;
pub mod files;
pub mod semantics;
pub mod syntax;
pub mod temporal;
pub mod weighted;

pub use algebra::{Algebra, Degree, Rational, Scale};
pub use syntax::{Cmp, Formula, GradedImplication, TemporalGradedFormula, WeightedConditional};
