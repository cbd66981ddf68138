//! A workbench for a ZF-style set theory with physical things (PTs) and a
//! parthood relation.
//!
//! The crate parses the formula language, evaluates formulas in finite
//! two-sorted structures, checks axioms, enumerates small models, and
//! relates single-mode Fock states to structures whose whole PT has a
//! cardinal exactly when its particle number is definite.

pub mod finder;
pub mod fock;
pub mod formula;
pub mod mereology;
pub mod model;
pub mod semantics;

pub use formula::{parse, render, Axiom, Formula, MacroName, Predicate, Term};
pub use model::{load, save, validate, ModelError, ModelFile, Structure, Violation};
pub use mereology::{check_axioms, classify, AxiomReport, Cardinal, ClassVerdict, ClassificationReport};
pub use semantics::{eval, Environment};
pub use fock::{coherent, number_state, superpose, to_structure, Bridge, FockError, FockState};
