use std::collections::BTreeSet;

use super::ast::{Formula, MacroApp, MacroName, Predicate, Term};

/// Rewrites every defined predicate into core connectives and atoms.
///
/// Bound variables introduced by the definitions are chosen fresh with
/// respect to every variable name in `f`, so no free occurrence is ever
/// captured. A formula parameter's own binder is reused when it cannot
/// clash with the macro argument.
pub fn expand_macros(f: &Formula) -> Formula {
    let mut ex = Expander {
        used: f.all_vars(),
    };
    ex.expand(f)
}

struct Expander {
    used: BTreeSet<String>,
}

impl Expander {
    fn fresh(&mut self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 1;
        while self.used.contains(&name) {
            name = format!("{base}{k}");
            k += 1;
        }
        self.used.insert(name.clone());
        name
    }

    fn expand(&mut self, f: &Formula) -> Formula {
        match f {
            Formula::Equal(..) | Formula::Member(..) | Formula::SetPred(_) | Formula::Part(..) => {
                f.clone()
            }
            Formula::Not(g) => Formula::not(self.expand(g)),
            Formula::And(a, b) => Formula::and(self.expand(a), self.expand(b)),
            Formula::Or(a, b) => Formula::or(self.expand(a), self.expand(b)),
            Formula::Implies(a, b) => Formula::implies(self.expand(a), self.expand(b)),
            Formula::Iff(a, b) => Formula::iff(self.expand(a), self.expand(b)),
            Formula::ForAll(v, g) => Formula::forall(v, self.expand(g)),
            Formula::Exists(v, g) => Formula::exists(v, self.expand(g)),
            Formula::Macro(m) => {
                let unfolded = self.unfold(m);
                self.expand(&unfolded)
            }
        }
    }

    /// One step of unfolding; the result may still contain macros.
    fn unfold(&mut self, m: &MacroApp) -> Formula {
        let arg = |i: usize| m.args[i].clone();
        match m.name {
            MacroName::T => Formula::not(Formula::SetPred(arg(0))),
            MacroName::Disj => {
                let g = self.fresh("g");
                Formula::not(Formula::exists_pt(
                    &g,
                    Formula::and(
                        Formula::Part(Term::var(&g), arg(0)),
                        Formula::Part(Term::var(&g), arg(1)),
                    ),
                ))
            }
            MacroName::Ind => Formula::and(
                Formula::Part(arg(0), arg(1)),
                Formula::Part(arg(1), arg(0)),
            ),
            MacroName::Sum => {
                let (x, a) = (arg(0), arg(1));
                let y = self.fresh("y");
                let g = self.fresh("g");
                let b = self.fresh("b");
                let all_pts = Formula::forall(
                    &y,
                    Formula::implies(
                        Formula::Member(Term::var(&y), x.clone()),
                        Formula::is_pt(Term::var(&y)),
                    ),
                );
                let disj = |p: Term, q: Term| Formula::macro_app(MacroName::Disj, vec![p, q]);
                Formula::implies(
                    Formula::and(Formula::SetPred(x.clone()), all_pts),
                    Formula::forall_pt(
                        &g,
                        Formula::iff(
                            disj(Term::var(&g), a),
                            Formula::forall_pt(
                                &b,
                                Formula::implies(
                                    Formula::Member(Term::var(&b), x),
                                    disj(Term::var(&b), Term::var(&g)),
                                ),
                            ),
                        ),
                    ),
                )
            }
            MacroName::Cant => {
                let y = self.fresh("y");
                let b = self.fresh("b");
                Formula::exists(
                    &y,
                    Formula::forall(
                        &b,
                        Formula::iff(
                            Formula::Member(Term::var(&b), Term::var(&y)),
                            Formula::Part(Term::var(&b), arg(0)),
                        ),
                    ),
                )
            }
            MacroName::Irr => {
                let g = self.fresh("g");
                Formula::and(
                    Formula::Part(arg(0), arg(1)),
                    Formula::forall_pt(
                        &g,
                        Formula::implies(
                            Formula::Part(Term::var(&g), arg(0)),
                            Formula::macro_app(MacroName::Ind, vec![Term::var(&g), arg(0)]),
                        ),
                    ),
                )
            }
            MacroName::SetOf => {
                let p = m.predicate.as_ref().expect("SetOf carries a predicate");
                let (x, body) = self.rebind(p, &m.args[0]);
                Formula::forall(
                    &x,
                    Formula::iff(Formula::Member(Term::var(&x), arg(0)), body),
                )
            }
            MacroName::CantF | MacroName::CP => {
                let p = m.predicate.as_ref().expect("CantF carries a predicate");
                let (b, body) = self.rebind(p, &m.args[0]);
                let y = self.fresh("y");
                Formula::exists(
                    &y,
                    Formula::forall(
                        &b,
                        Formula::iff(
                            Formula::Member(Term::var(&b), Term::var(&y)),
                            Formula::and(Formula::Part(Term::var(&b), arg(0)), body),
                        ),
                    ),
                )
            }
            MacroName::QP => Formula::not(self.unfold(&MacroApp {
                name: MacroName::CantF,
                args: m.args.clone(),
                predicate: m.predicate.clone(),
            })),
        }
    }

    /// Returns a binder name safe to quantify over `arg`, with the predicate
    /// body renamed accordingly.
    fn rebind(&mut self, p: &Predicate, arg: &Term) -> (String, Formula) {
        if arg.as_var() != Some(p.binder.as_str()) {
            return (p.binder.clone(), (*p.body).clone());
        }
        let fresh = self.fresh(&p.binder);
        let body = p.body.rename_free(&p.binder, &Term::var(&fresh));
        (fresh, body)
    }
}
