//! Tarskian satisfaction in finite structures.
//!
//! Quantifiers range over the whole domain. Atoms whose arguments have the
//! wrong sort (a set on either side of `<:`, a PT on the right of `in`) are
//! simply false. Defined predicates are evaluated directly from their
//! definitions rather than by expanding them first, so the expansion in
//! [`crate::formula::expand_macros`] can be checked against this route.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{Formula, MacroApp, MacroName, Term};
use crate::model::Structure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound free variable `{0}`")]
    UnboundVariable(String),
    #[error("undeclared constant `'{0}'`")]
    UndeclaredConstant(String),
    #[error("environment binds `{var}` to undeclared element `{element}`")]
    UndeclaredBinding { var: String, element: String },
    #[error("expected exactly the free variable `{expected}`, formula has {{{}}}", found.join(", "))]
    FreeVariables { expected: String, found: Vec<String> },
}

/// A partial assignment of variables to element names.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Environment {
    bindings: BTreeMap<String, String>,
}

impl Environment {
    pub fn new() -> Environment {
        Environment::default()
    }

    pub fn bind(mut self, var: &str, element: &str) -> Environment {
        self.bindings.insert(var.to_string(), element.to_string());
        self
    }

    pub fn insert(&mut self, var: &str, element: &str) {
        self.bindings.insert(var.to_string(), element.to_string());
    }

    pub fn get(&self, var: &str) -> Option<&str> {
        self.bindings.get(var).map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.bindings.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }
}

impl<'a> FromIterator<(&'a str, &'a str)> for Environment {
    fn from_iter<I: IntoIterator<Item = (&'a str, &'a str)>>(iter: I) -> Self {
        let mut env = Environment::new();
        for (k, v) in iter {
            env.insert(k, v);
        }
        env
    }
}

/// Variable bindings as element indices; innermost binding last.
#[derive(Debug, Clone, Default)]
pub(crate) struct Scope {
    slots: Vec<(String, usize)>,
}

impl Scope {
    fn lookup(&self, var: &str) -> usize {
        self.slots
            .iter()
            .rev()
            .find(|(v, _)| v == var)
            .map(|(_, d)| *d)
            .expect("free variables are checked before evaluation")
    }

    pub(crate) fn push(&mut self, var: &str, d: usize) {
        self.slots.push((var.to_string(), d));
    }

    pub(crate) fn set_top(&mut self, d: usize) {
        self.slots.last_mut().expect("scope is nonempty").1 = d;
    }

    pub(crate) fn pop(&mut self) {
        self.slots.pop();
    }
}

fn check_constants(s: &Structure, f: &Formula) -> Result<(), EvalError> {
    let term = |t: &Term| match t {
        Term::Const(c) if s.index_of(c).is_none() => {
            Err(EvalError::UndeclaredConstant(c.clone()))
        }
        _ => Ok(()),
    };
    match f {
        Formula::Equal(a, b) | Formula::Member(a, b) | Formula::Part(a, b) => {
            term(a)?;
            term(b)
        }
        Formula::SetPred(a) => term(a),
        Formula::Not(g) | Formula::ForAll(_, g) | Formula::Exists(_, g) => check_constants(s, g),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            check_constants(s, a)?;
            check_constants(s, b)
        }
        Formula::Macro(m) => {
            m.args.iter().try_for_each(term)?;
            match &m.predicate {
                Some(p) => check_constants(s, &p.body),
                None => Ok(()),
            }
        }
    }
}

pub(crate) fn resolve(s: &Structure, f: &Formula, env: &Environment) -> Result<Scope, EvalError> {
    check_constants(s, f)?;
    let mut scope = Scope::default();
    for var in f.free_vars() {
        let element = env
            .get(&var)
            .ok_or_else(|| EvalError::UnboundVariable(var.clone()))?;
        let d = s.index_of(element).ok_or_else(|| EvalError::UndeclaredBinding {
            var: var.clone(),
            element: element.to_string(),
        })?;
        scope.push(&var, d);
    }
    Ok(scope)
}

/// Evaluates `f` in `s` under `env`.
pub fn eval(s: &Structure, f: &Formula, env: &Environment) -> Result<bool, EvalError> {
    let mut scope = resolve(s, f, env)?;
    Ok(holds(s, f, &mut scope))
}

/// Every element `d` such that `f` holds with `v` bound to `d`.
pub fn satisfying_assignments<'s>(
    s: &'s Structure,
    f: &Formula,
    v: &str,
) -> Result<Vec<&'s str>, EvalError> {
    let free: Vec<String> = f.free_vars().into_iter().collect();
    if free.len() != 1 || free[0] != v {
        return Err(EvalError::FreeVariables {
            expected: v.to_string(),
            found: free,
        });
    }
    check_constants(s, f)?;
    let mut scope = Scope::default();
    scope.push(v, 0);
    let mut out = Vec::new();
    for d in 0..s.len() {
        scope.set_top(d);
        if holds(s, f, &mut scope) {
            out.push(s.name(d));
        }
    }
    Ok(out)
}

fn term(s: &Structure, t: &Term, scope: &Scope) -> usize {
    match t {
        Term::Var(v) => scope.lookup(v),
        Term::Const(c) => s.index_of(c).expect("constants are checked before evaluation"),
    }
}

fn quantify(s: &Structure, var: &str, body: &Formula, scope: &mut Scope, universal: bool) -> bool {
    scope.push(var, 0);
    let mut result = universal;
    for d in 0..s.len() {
        scope.set_top(d);
        if holds(s, body, scope) != universal {
            result = !universal;
            break;
        }
    }
    scope.pop();
    result
}

/// Evaluation over a scope that binds every free variable of `f`.
pub(crate) fn holds(s: &Structure, f: &Formula, scope: &mut Scope) -> bool {
    match f {
        Formula::Equal(a, b) => term(s, a, scope) == term(s, b, scope),
        Formula::Member(a, b) => s.member(term(s, a, scope), term(s, b, scope)),
        Formula::Part(a, b) => s.part(term(s, a, scope), term(s, b, scope)),
        Formula::SetPred(a) => s.is_set(term(s, a, scope)),
        Formula::Not(g) => !holds(s, g, scope),
        Formula::And(a, b) => holds(s, a, scope) && holds(s, b, scope),
        Formula::Or(a, b) => holds(s, a, scope) || holds(s, b, scope),
        Formula::Implies(a, b) => !holds(s, a, scope) || holds(s, b, scope),
        Formula::Iff(a, b) => holds(s, a, scope) == holds(s, b, scope),
        Formula::ForAll(v, body) => quantify(s, v, body, scope, true),
        Formula::Exists(v, body) => quantify(s, v, body, scope, false),
        Formula::Macro(m) => holds_macro(s, m, scope),
    }
}

pub(crate) fn disjoint_idx(s: &Structure, a: usize, b: usize) -> bool {
    !s.pts().any(|g| s.part(g, a) && s.part(g, b))
}

pub(crate) fn indiscernible_idx(s: &Structure, a: usize, b: usize) -> bool {
    s.part(a, b) && s.part(b, a)
}

pub(crate) fn sum_idx(s: &Structure, x: usize, a: usize) -> bool {
    let only_pts = s.is_set(x) && (0..s.len()).all(|y| !s.member(y, x) || s.is_pt(y));
    if !only_pts {
        return true;
    }
    s.pts().all(|g| {
        disjoint_idx(s, g, a)
            == s
                .pts()
                .all(|b| !s.member(b, x) || disjoint_idx(s, b, g))
    })
}

pub(crate) fn irreducible_idx(s: &Structure, a: usize, b: usize) -> bool {
    s.part(a, b) && s.pts().all(|g| !s.part(g, a) || indiscernible_idx(s, g, a))
}

/// Some element whose members are exactly the elements flagged in `wanted`.
fn collected(s: &Structure, wanted: &[bool]) -> bool {
    (0..s.len()).any(|y| (0..s.len()).all(|b| s.member(b, y) == wanted[b]))
}

fn holds_macro(s: &Structure, m: &MacroApp, scope: &mut Scope) -> bool {
    let arg = |i: usize, scope: &Scope| term(s, &m.args[i], scope);
    match m.name {
        MacroName::T => s.is_pt(arg(0, scope)),
        MacroName::Disj => disjoint_idx(s, arg(0, scope), arg(1, scope)),
        MacroName::Ind => indiscernible_idx(s, arg(0, scope), arg(1, scope)),
        MacroName::Sum => sum_idx(s, arg(0, scope), arg(1, scope)),
        MacroName::Irr => irreducible_idx(s, arg(0, scope), arg(1, scope)),
        MacroName::Cant => {
            let a = arg(0, scope);
            let wanted: Vec<bool> = (0..s.len()).map(|b| s.part(b, a)).collect();
            collected(s, &wanted)
        }
        MacroName::CantF | MacroName::CP | MacroName::QP => {
            let a = arg(0, scope);
            let p = m.predicate.as_ref().expect("parser enforces a predicate");
            scope.push(&p.binder, 0);
            let wanted: Vec<bool> = (0..s.len())
                .map(|b| {
                    scope.set_top(b);
                    s.part(b, a) && holds(s, &p.body, scope)
                })
                .collect();
            scope.pop();
            collected(s, &wanted) != (m.name == MacroName::QP)
        }
        MacroName::SetOf => {
            let y = arg(0, scope);
            let p = m.predicate.as_ref().expect("parser enforces a predicate");
            scope.push(&p.binder, 0);
            let mut result = true;
            for x in 0..s.len() {
                scope.set_top(x);
                if s.member(x, y) != holds(s, &p.body, scope) {
                    result = false;
                    break;
                }
            }
            scope.pop();
            result
        }
    }
}
