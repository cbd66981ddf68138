use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A term of the language: a variable, or a constant naming a model element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Term {
    Var(String),
    Const(String),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn constant(name: &str) -> Term {
        Term::Const(name.to_string())
    }

    pub fn as_var(&self) -> Option<&str> {
        match self {
            Term::Var(v) => Some(v),
            Term::Const(_) => None,
        }
    }
}

/// The defined predicates of the language. Each is shorthand for a core
/// formula; see [`crate::formula::expand_macros`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MacroName {
    /// `T(x)`: x is not a set.
    T,
    /// `Disj(a, b)`: a and b share no part.
    Disj,
    /// `Ind(a, b)`: mutual parthood.
    Ind,
    /// `Sum(x, a)`: a is a physical sum of the PTs in x.
    Sum,
    /// `Cant(a)`: the parts of a form a set.
    Cant,
    /// `Irr(a, b)`: a is an irreducible part of b.
    Irr,
    /// `CantF[b: φ](a)`: the parts of a satisfying φ form a set.
    CantF,
    /// `QP[b: φ](a)`: negation of `CantF`.
    QP,
    /// `CP[b: φ](a)`: same as `CantF`.
    CP,
    /// `SetOf[x: φ](y)`: y has exactly the members satisfying φ.
    SetOf,
}

impl MacroName {
    pub const ALL: [MacroName; 10] = [
        MacroName::T,
        MacroName::Disj,
        MacroName::Ind,
        MacroName::Sum,
        MacroName::Cant,
        MacroName::Irr,
        MacroName::CantF,
        MacroName::QP,
        MacroName::CP,
        MacroName::SetOf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MacroName::T => "T",
            MacroName::Disj => "Disj",
            MacroName::Ind => "Ind",
            MacroName::Sum => "Sum",
            MacroName::Cant => "Cant",
            MacroName::Irr => "Irr",
            MacroName::CantF => "CantF",
            MacroName::QP => "QP",
            MacroName::CP => "CP",
            MacroName::SetOf => "SetOf",
        }
    }

    /// Number of term arguments.
    pub fn arity(self) -> usize {
        match self {
            MacroName::T | MacroName::Cant => 1,
            MacroName::Disj | MacroName::Ind | MacroName::Sum | MacroName::Irr => 2,
            MacroName::CantF | MacroName::QP | MacroName::CP | MacroName::SetOf => 1,
        }
    }

    /// Whether the macro carries a formula parameter with a binder.
    pub fn takes_formula(self) -> bool {
        matches!(
            self,
            MacroName::CantF | MacroName::QP | MacroName::CP | MacroName::SetOf
        )
    }
}

impl fmt::Display for MacroName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MacroName {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MacroName::ALL
            .iter()
            .copied()
            .find(|m| m.as_str() == s)
            .ok_or(())
    }
}

/// A formula parameter `[b: φ]`: the binder names the variable that φ is
/// "about".
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Predicate {
    pub binder: String,
    pub body: Box<Formula>,
}

impl Predicate {
    pub fn new(binder: &str, body: Formula) -> Predicate {
        Predicate {
            binder: binder.to_string(),
            body: Box::new(body),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MacroApp {
    pub name: MacroName,
    pub args: Vec<Term>,
    pub predicate: Option<Predicate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Formula {
    Equal(Term, Term),
    Member(Term, Term),
    SetPred(Term),
    Part(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    ForAll(String, Box<Formula>),
    Exists(String, Box<Formula>),
    Macro(MacroApp),
}

#[allow(clippy::should_implement_trait)]
impl Formula {
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn forall(v: &str, body: Formula) -> Formula {
        Formula::ForAll(v.to_string(), Box::new(body))
    }

    pub fn exists(v: &str, body: Formula) -> Formula {
        Formula::Exists(v.to_string(), Box::new(body))
    }

    /// `all v:PT. body`
    pub fn forall_pt(v: &str, body: Formula) -> Formula {
        Formula::forall(v, Formula::implies(Formula::is_pt(Term::var(v)), body))
    }

    /// `ex v:PT. body`
    pub fn exists_pt(v: &str, body: Formula) -> Formula {
        Formula::exists(v, Formula::and(Formula::is_pt(Term::var(v)), body))
    }

    /// `all v:Set. body`
    pub fn forall_set(v: &str, body: Formula) -> Formula {
        Formula::forall(v, Formula::implies(Formula::SetPred(Term::var(v)), body))
    }

    /// `ex v:Set. body`
    pub fn exists_set(v: &str, body: Formula) -> Formula {
        Formula::exists(v, Formula::and(Formula::SetPred(Term::var(v)), body))
    }

    pub fn is_pt(t: Term) -> Formula {
        Formula::macro_app(MacroName::T, vec![t])
    }

    pub fn macro_app(name: MacroName, args: Vec<Term>) -> Formula {
        Formula::Macro(MacroApp {
            name,
            args,
            predicate: None,
        })
    }

    pub fn macro_with(name: MacroName, predicate: Predicate, arg: Term) -> Formula {
        Formula::Macro(MacroApp {
            name,
            args: vec![arg],
            predicate: Some(predicate),
        })
    }

    /// Variables with at least one unbound occurrence.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut bound = Vec::new();
        collect_free(self, &mut bound, &mut out);
        out
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        collect_all(self, &mut out);
        out
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn contains_macro(&self) -> bool {
        match self {
            Formula::Macro(_) => true,
            Formula::Equal(..) | Formula::Member(..) | Formula::SetPred(_) | Formula::Part(..) => {
                false
            }
            Formula::Not(f) | Formula::ForAll(_, f) | Formula::Exists(_, f) => f.contains_macro(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => a.contains_macro() || b.contains_macro(),
        }
    }

    /// Replaces free occurrences of variable `from` with `to`. The caller
    /// guarantees `to` is not captured (it must not be bound anywhere in
    /// `self`).
    pub(crate) fn rename_free(&self, from: &str, to: &Term) -> Formula {
        let t = |term: &Term| match term {
            Term::Var(v) if v == from => to.clone(),
            other => other.clone(),
        };
        match self {
            Formula::Equal(a, b) => Formula::Equal(t(a), t(b)),
            Formula::Member(a, b) => Formula::Member(t(a), t(b)),
            Formula::Part(a, b) => Formula::Part(t(a), t(b)),
            Formula::SetPred(a) => Formula::SetPred(t(a)),
            Formula::Not(f) => Formula::not(f.rename_free(from, to)),
            Formula::And(a, b) => Formula::and(a.rename_free(from, to), b.rename_free(from, to)),
            Formula::Or(a, b) => Formula::or(a.rename_free(from, to), b.rename_free(from, to)),
            Formula::Implies(a, b) => {
                Formula::implies(a.rename_free(from, to), b.rename_free(from, to))
            }
            Formula::Iff(a, b) => Formula::iff(a.rename_free(from, to), b.rename_free(from, to)),
            Formula::ForAll(v, _) | Formula::Exists(v, _) if v == from => self.clone(),
            Formula::ForAll(v, body) => Formula::forall(v, body.rename_free(from, to)),
            Formula::Exists(v, body) => Formula::exists(v, body.rename_free(from, to)),
            Formula::Macro(m) => Formula::Macro(MacroApp {
                name: m.name,
                args: m.args.iter().map(t).collect(),
                predicate: m.predicate.as_ref().map(|p| {
                    if p.binder == from {
                        p.clone()
                    } else {
                        Predicate {
                            binder: p.binder.clone(),
                            body: Box::new(p.body.rename_free(from, to)),
                        }
                    }
                }),
            }),
        }
    }
}

fn term_free(t: &Term, bound: &[String], out: &mut BTreeSet<String>) {
    if let Term::Var(v) = t {
        if !bound.iter().any(|b| b == v) {
            out.insert(v.clone());
        }
    }
}

fn collect_free(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
    match f {
        Formula::Equal(a, b) | Formula::Member(a, b) | Formula::Part(a, b) => {
            term_free(a, bound, out);
            term_free(b, bound, out);
        }
        Formula::SetPred(a) => term_free(a, bound, out),
        Formula::Not(g) => collect_free(g, bound, out),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            collect_free(a, bound, out);
            collect_free(b, bound, out);
        }
        Formula::ForAll(v, g) | Formula::Exists(v, g) => {
            bound.push(v.clone());
            collect_free(g, bound, out);
            bound.pop();
        }
        Formula::Macro(m) => {
            for a in &m.args {
                term_free(a, bound, out);
            }
            if let Some(p) = &m.predicate {
                bound.push(p.binder.clone());
                collect_free(&p.body, bound, out);
                bound.pop();
            }
        }
    }
}

fn collect_all(f: &Formula, out: &mut BTreeSet<String>) {
    let term = |t: &Term, out: &mut BTreeSet<String>| {
        if let Term::Var(v) = t {
            out.insert(v.clone());
        }
    };
    match f {
        Formula::Equal(a, b) | Formula::Member(a, b) | Formula::Part(a, b) => {
            term(a, out);
            term(b, out);
        }
        Formula::SetPred(a) => term(a, out),
        Formula::Not(g) => collect_all(g, out),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            collect_all(a, out);
            collect_all(b, out);
        }
        Formula::ForAll(v, g) | Formula::Exists(v, g) => {
            out.insert(v.clone());
            collect_all(g, out);
        }
        Formula::Macro(m) => {
            for a in &m.args {
                term(a, out);
            }
            if let Some(p) = &m.predicate {
                out.insert(p.binder.clone());
                collect_all(&p.body, out);
            }
        }
    }
}
