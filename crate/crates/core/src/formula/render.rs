use std::fmt::{self, Write};

use super::ast::{Formula, MacroApp, MacroName, Term};

// Binding strength, loosest first. Quantifier bodies extend maximally to the
// right, so a quantifier nested under any connective needs parentheses.
const QUANT: u8 = 0;
const IFF: u8 = 1;
const IMPL: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const UNARY: u8 = 5;

fn level(f: &Formula) -> u8 {
    match f {
        Formula::ForAll(..) | Formula::Exists(..) => QUANT,
        Formula::Iff(..) => IFF,
        Formula::Implies(..) => IMPL,
        Formula::Or(..) => OR,
        Formula::And(..) => AND,
        _ => UNARY,
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Const(c) => write!(f, "'{c}'"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_formula(&mut out, self);
        f.write_str(&out)
    }
}

/// Renders a formula in the concrete syntax accepted by [`super::parse`].
pub fn render(f: &Formula) -> String {
    f.to_string()
}

/// Recognises the desugared forms of `all v:PT.` / `ex v:Set.` etc.
fn sorted_binder(f: &Formula) -> Option<(&'static str, &Formula)> {
    let guard_sort = |guard: &Formula, v: &str| -> Option<&'static str> {
        match guard {
            Formula::Macro(MacroApp {
                name: MacroName::T,
                args,
                predicate: None,
            }) if args.len() == 1 && args[0].as_var() == Some(v) => Some("PT"),
            Formula::SetPred(Term::Var(x)) if x == v => Some("Set"),
            _ => None,
        }
    };
    match f {
        Formula::ForAll(v, body) => match body.as_ref() {
            Formula::Implies(g, rest) => guard_sort(g, v).map(|s| (s, rest.as_ref())),
            _ => None,
        },
        Formula::Exists(v, body) => match body.as_ref() {
            Formula::And(g, rest) => guard_sort(g, v).map(|s| (s, rest.as_ref())),
            _ => None,
        },
        _ => None,
    }
}

fn write_child(out: &mut String, f: &Formula, min: u8) {
    if level(f) < min {
        out.push('(');
        write_formula(out, f);
        out.push(')');
    } else {
        write_formula(out, f);
    }
}

fn write_binary(out: &mut String, a: &Formula, op: &str, b: &Formula, left: u8, right: u8) {
    write_child(out, a, left);
    let _ = write!(out, " {op} ");
    write_child(out, b, right);
}

fn write_formula(out: &mut String, f: &Formula) {
    match f {
        Formula::Equal(a, b) => {
            let _ = write!(out, "{a} = {b}");
        }
        Formula::Member(a, b) => {
            let _ = write!(out, "{a} in {b}");
        }
        Formula::Part(a, b) => {
            let _ = write!(out, "{a} <: {b}");
        }
        Formula::SetPred(a) => {
            let _ = write!(out, "Set({a})");
        }
        Formula::Not(g) => {
            out.push('~');
            match g.as_ref() {
                Formula::Equal(..) | Formula::Member(..) | Formula::Part(..) => {
                    out.push('(');
                    write_formula(out, g);
                    out.push(')');
                }
                _ => write_child(out, g, UNARY),
            }
        }
        Formula::And(a, b) => write_binary(out, a, "&", b, AND, UNARY),
        Formula::Or(a, b) => write_binary(out, a, "|", b, OR, AND),
        Formula::Implies(a, b) => write_binary(out, a, "->", b, OR, IMPL),
        Formula::Iff(a, b) => write_binary(out, a, "<->", b, IFF, IMPL),
        Formula::ForAll(v, body) | Formula::Exists(v, body) => {
            let kw = if matches!(f, Formula::ForAll(..)) {
                "all"
            } else {
                "ex"
            };
            match sorted_binder(f) {
                Some((sort, rest)) => {
                    let _ = write!(out, "{kw} {v}:{sort}. ");
                    write_formula(out, rest);
                }
                None => {
                    let _ = write!(out, "{kw} {v}. ");
                    write_formula(out, body);
                }
            }
        }
        Formula::Macro(m) => {
            out.push_str(m.name.as_str());
            if let Some(p) = &m.predicate {
                let _ = write!(out, "[{}: ", p.binder);
                write_formula(out, &p.body);
                out.push(']');
            }
            out.push('(');
            for (i, a) in m.args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                let _ = write!(out, "{a}");
            }
            out.push(')');
        }
    }
}
