//! The formula language: AST, concrete syntax, macro expansion and axioms.

mod ast;
mod axioms;
mod expand;
mod parse;
mod render;

pub use ast::{Formula, MacroApp, MacroName, Predicate, Term};
pub use axioms::{axiom_sentence, instantiate_schema, Axiom, AxiomError, Schema};
pub use expand::expand_macros;
pub use parse::{parse, parse_predicate, ParseError};
pub use render::render;
