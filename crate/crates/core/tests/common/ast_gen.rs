// Random formula ASTs for property tests. Shared with the cli acceptance target.

use proptest::prelude::*;
use zfstar_core::formula::{Formula, MacroName, Predicate, Term};

pub const VARS: [&str; 4] = ["x", "y", "z", "u"];
pub const CONSTS: [&str; 2] = ["c1", "c2"];

fn var() -> impl Strategy<Value = String> {
    proptest::sample::select(&VARS[..]).prop_map(str::to_string)
}

fn term(with_consts: bool) -> BoxedStrategy<Term> {
    let v = var().prop_map(Term::Var);
    if with_consts {
        prop_oneof![4 => v, 1 => proptest::sample::select(&CONSTS[..]).prop_map(Term::constant)].boxed()
    } else {
        v.boxed()
    }
}

fn atom(with_consts: bool) -> BoxedStrategy<Formula> {
    let t = || term(with_consts);
    let term_macros = [
        MacroName::T,
        MacroName::Disj,
        MacroName::Ind,
        MacroName::Sum,
        MacroName::Cant,
        MacroName::Irr,
    ];
    prop_oneof![
        (t(), t()).prop_map(|(a, b)| Formula::Equal(a, b)),
        (t(), t()).prop_map(|(a, b)| Formula::Member(a, b)),
        t().prop_map(Formula::SetPred),
        (t(), t()).prop_map(|(a, b)| Formula::Part(a, b)),
        (proptest::sample::select(term_macros.to_vec()), t(), t()).prop_map(|(m, a, b)| {
            let args = if m.arity() == 1 { vec![a] } else { vec![a, b] };
            Formula::macro_app(m, args)
        }),
    ]
    .boxed()
}

/// Formulas of depth at most `depth + 1`, with or without constants.
pub fn formula(depth: u32, with_consts: bool) -> BoxedStrategy<Formula> {
    let formula_macros = [MacroName::CantF, MacroName::QP, MacroName::CP, MacroName::SetOf];
    atom(with_consts)
        .prop_recursive(depth, 64, 2, move |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
                (var(), inner.clone()).prop_map(|(v, b)| Formula::forall(&v, b)),
                (var(), inner.clone()).prop_map(|(v, b)| Formula::exists(&v, b)),
                (var(), inner.clone()).prop_map(|(v, b)| Formula::forall_pt(&v, b)),
                (var(), inner.clone()).prop_map(|(v, b)| Formula::exists_set(&v, b)),
                (proptest::sample::select(formula_macros.to_vec()), var(), inner, term(with_consts))
                    .prop_map(|(m, v, body, arg)| Formula::macro_with(m, Predicate::new(&v, body), arg)),
            ]
        })
        .boxed()
}

/// Nesting depth: atoms count 1.
pub fn depth(f: &Formula) -> usize {
    match f {
        Formula::Not(a) | Formula::ForAll(_, a) | Formula::Exists(_, a) => 1 + depth(a),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            1 + depth(a).max(depth(b))
        }
        Formula::Macro(m) => 1 + m.predicate.as_ref().map_or(0, |p| depth(&p.body)),
        _ => 1,
    }
}

/// Formulas whose AST depth is at most `max`.
pub fn bounded(max: usize, with_consts: bool) -> BoxedStrategy<Formula> {
    formula(max as u32 - 1, with_consts)
        .prop_filter("too deep", move |f| depth(f) <= max)
        .boxed()
}
