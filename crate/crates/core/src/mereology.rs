//! Parthood calculus over finite structures: axiom checking, disjointness,
//! indiscernibility, sums, irreducible parts, and the Cantorian / quantal /
//! classical classification of PTs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{Axiom, AxiomError, Formula, MacroName, Predicate, Schema, Term};
use crate::model::{ModelError, Structure};
use crate::semantics::{self, eval, holds, Environment, EvalError, Scope};

#[derive(Debug, Error)]
pub enum MereologyError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("precondition failed: structure violates {0}")]
    Precondition(Axiom),
    #[error("predicate must have exactly one free variable `{binder}`, found extra {{{}}}", extra.join(", "))]
    PredicateFreeVariables { binder: String, extra: Vec<String> },
}

/// An axiom named in a check request; schemas are accepted so they can be
/// reported as not finitely checkable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AxiomRequest {
    Closed(Axiom),
    Schema(Schema),
}

impl AxiomRequest {
    pub fn name(self) -> &'static str {
        match self {
            AxiomRequest::Closed(a) => a.name(),
            AxiomRequest::Schema(Schema::Separation) => "separation",
            AxiomRequest::Schema(Schema::Replacement) => "replacement",
        }
    }
}

impl FromStr for AxiomRequest {
    type Err = AxiomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "separation" => Ok(AxiomRequest::Schema(Schema::Separation)),
            "replacement" => Ok(AxiomRequest::Schema(Schema::Replacement)),
            _ => s.parse().map(AxiomRequest::Closed),
        }
    }
}

impl From<Axiom> for AxiomRequest {
    fn from(a: Axiom) -> Self {
        AxiomRequest::Closed(a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomVerdict {
    Pass,
    Fail,
    NotFinitelyCheckable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomEntry {
    pub axiom: String,
    pub verdict: AxiomVerdict,
    /// Assignment of the sentence's leading universal variables that makes
    /// it false. Empty when the sentence fails without a universal prefix.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Environment>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub entries: Vec<AxiomEntry>,
}

impl AxiomReport {
    /// True when no requested axiom failed.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict != AxiomVerdict::Fail)
    }

    pub fn entry(&self, axiom: &str) -> Option<&AxiomEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomEntry> {
        self.entries.iter().filter(|e| e.verdict == AxiomVerdict::Fail)
    }
}

/// Checks each requested axiom in order.
pub fn check_axioms<A: Into<AxiomRequest> + Copy>(s: &Structure, axioms: &[A]) -> AxiomReport {
    let entries = axioms
        .iter()
        .map(|&req| {
            let req = req.into();
            let (verdict, witness) = match req {
                AxiomRequest::Closed(a) if a.finitely_checkable() => {
                    match falsifier(s, &a.sentence()) {
                        None => (AxiomVerdict::Pass, None),
                        Some(w) => (AxiomVerdict::Fail, Some(w)),
                    }
                }
                _ => (AxiomVerdict::NotFinitelyCheckable, None),
            };
            AxiomEntry {
                axiom: req.name().to_string(),
                verdict,
                witness,
            }
        })
        .collect();
    AxiomReport { entries }
}

/// Whether every axiom in `axioms` holds; cheaper than building a report.
pub fn satisfies(s: &Structure, axioms: &[Axiom]) -> bool {
    axioms
        .iter()
        .all(|a| holds(s, &a.sentence(), &mut Scope::default()))
}

/// Whether every closed sentence in `sentences` holds.
pub(crate) fn satisfies_all(s: &Structure, sentences: &[Formula]) -> bool {
    sentences
        .iter()
        .all(|f| holds(s, f, &mut Scope::default()))
}

/// For a false sentence, descends through its universal prefix (and through
/// implications whose antecedent holds) and returns the assignment that
/// falsifies it. Returns `None` when the sentence is true.
pub fn falsifier(s: &Structure, sentence: &Formula) -> Option<Environment> {
    let mut scope = Scope::default();
    if holds(s, sentence, &mut scope) {
        return None;
    }
    let mut env = Environment::new();
    descend(s, sentence, &mut scope, &mut env);
    Some(env)
}

fn descend(s: &Structure, f: &Formula, scope: &mut Scope, env: &mut Environment) {
    match f {
        Formula::ForAll(v, body) => {
            scope.push(v, 0);
            for d in 0..s.len() {
                scope.set_top(d);
                if !holds(s, body, scope) {
                    env.insert(v, s.name(d));
                    descend(s, body, scope, env);
                    break;
                }
            }
            scope.pop();
        }
        Formula::Implies(_, consequent) => descend(s, consequent, scope, env),
        _ => {}
    }
}

/// The part of `sentence` that a witness claims is false: the witnessed
/// universal prefix is removed, implications along the way are kept.
fn instance(f: &Formula, witness: &Environment) -> Formula {
    match f {
        Formula::ForAll(v, body) if witness.get(v).is_some() => instance(body, witness),
        Formula::Implies(a, b) => Formula::implies((**a).clone(), instance(b, witness)),
        other => other.clone(),
    }
}

/// Checks that `witness` really falsifies `sentence` in `s`.
pub fn witness_falsifies(s: &Structure, sentence: &Formula, witness: &Environment) -> bool {
    matches!(eval(s, &instance(sentence, witness), witness), Ok(false))
}

fn require_pt(s: &Structure, name: &str) -> Result<usize, MereologyError> {
    let i = s.require(name)?;
    if s.is_set(i) {
        return Err(ModelError::NotAPt(name.to_string()).into());
    }
    Ok(i)
}

fn require_set(s: &Structure, name: &str) -> Result<usize, MereologyError> {
    let i = s.require(name)?;
    if !s.is_set(i) {
        return Err(ModelError::NotASet(name.to_string()).into());
    }
    Ok(i)
}

/// Sets whose members are exactly the flagged elements.
fn collecting_sets(s: &Structure, wanted: &[bool]) -> Vec<usize> {
    s.sets()
        .filter(|&y| (0..s.len()).all(|b| s.member(b, y) == wanted[b]))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CantorianVerdict {
    pub subject: String,
    /// Every set whose members are exactly the parts of the subject.
    pub witnesses: Vec<String>,
    /// For a positive verdict in a structure satisfying extensionality,
    /// whether the collecting set is unique (it must be). `None` otherwise.
    pub unique_under_extensionality: Option<bool>,
}

impl CantorianVerdict {
    pub fn is_cantorian(&self) -> bool {
        !self.witnesses.is_empty()
    }

    pub fn witness(&self) -> Option<&str> {
        self.witnesses.first().map(String::as_str)
    }
}

/// Whether the parts of `alpha` are collected by some set.
///
/// Only sets count as witnesses. The unsorted `Cant` formula would also
/// accept a PT (which has no members) when `alpha` has no parts at all.
pub fn is_cantorian(s: &Structure, alpha: &str) -> Result<CantorianVerdict, MereologyError> {
    let a = require_pt(s, alpha)?;
    let wanted: Vec<bool> = (0..s.len()).map(|b| s.part(b, a)).collect();
    let witnesses: Vec<String> = collecting_sets(s, &wanted)
        .into_iter()
        .map(|y| s.name(y).to_string())
        .collect();
    let unique_under_extensionality = if !witnesses.is_empty() && satisfies(s, &[Axiom::Extensionality])
    {
        Some(witnesses.len() == 1)
    } else {
        None
    };
    Ok(CantorianVerdict {
        subject: alpha.to_string(),
        witnesses,
        unique_under_extensionality,
    })
}

/// The cardinal of a PT: the member count of its collecting set, or
/// undefined for non-Cantorian PTs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cardinal {
    Defined(usize),
    Undefined,
}

impl Cardinal {
    pub fn value(self) -> Option<usize> {
        match self {
            Cardinal::Defined(n) => Some(n),
            Cardinal::Undefined => None,
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Defined(n) => write!(f, "{n}"),
            Cardinal::Undefined => f.write_str("undefined"),
        }
    }
}

pub fn cardinal(s: &Structure, alpha: &str) -> Result<Cardinal, MereologyError> {
    let verdict = is_cantorian(s, alpha)?;
    Ok(match verdict.witness() {
        Some(w) => Cardinal::Defined(s.members(w)?.len()),
        None => Cardinal::Undefined,
    })
}

fn eval_closed(s: &Structure, f: Formula) -> Result<bool, MereologyError> {
    Ok(eval(s, &f, &Environment::new())?)
}

pub fn disjoint(s: &Structure, a: &str, b: &str) -> Result<bool, MereologyError> {
    require_pt(s, a)?;
    require_pt(s, b)?;
    eval_closed(
        s,
        Formula::macro_app(MacroName::Disj, vec![Term::constant(a), Term::constant(b)]),
    )
}

pub fn indiscernible(s: &Structure, a: &str, b: &str) -> Result<bool, MereologyError> {
    require_pt(s, a)?;
    require_pt(s, b)?;
    eval_closed(
        s,
        Formula::macro_app(MacroName::Ind, vec![Term::constant(a), Term::constant(b)]),
    )
}

/// Partitions the PTs by mutual parthood. Requires reflexivity and
/// transitivity, which make mutual parthood an equivalence.
pub fn indiscernibility_classes(s: &Structure) -> Result<Vec<Vec<String>>, MereologyError> {
    for a in [Axiom::ReflexivityPart, Axiom::TransitivityPart] {
        if !satisfies(s, &[a]) {
            return Err(MereologyError::Precondition(a));
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for p in s.pts() {
        match classes
            .iter_mut()
            .find(|c| semantics::indiscernible_idx(s, c[0], p))
        {
            Some(c) => c.push(p),
            None => classes.push(vec![p]),
        }
    }
    Ok(classes
        .into_iter()
        .map(|c| c.into_iter().map(|i| s.name(i).to_string()).collect())
        .collect())
}

/// Every PT that is a sum of the members of `x`. When `x` has a non-PT
/// member the sum condition holds vacuously and every PT is returned.
pub fn sums(s: &Structure, x: &str) -> Result<Vec<String>, MereologyError> {
    require_set(s, x)?;
    let mut out = Vec::new();
    for a in s.pts() {
        let f = Formula::macro_app(
            MacroName::Sum,
            vec![Term::constant(x), Term::constant(s.name(a))],
        );
        if eval_closed(s, f)? {
            out.push(s.name(a).to_string());
        }
    }
    Ok(out)
}

/// The irreducible parts of `beta`; possibly empty.
pub fn irreducible_parts(s: &Structure, beta: &str) -> Result<Vec<String>, MereologyError> {
    require_pt(s, beta)?;
    let mut out = Vec::new();
    for a in s.pts() {
        let f = Formula::macro_app(
            MacroName::Irr,
            vec![Term::constant(s.name(a)), Term::constant(beta)],
        );
        if eval_closed(s, f)? {
            out.push(s.name(a).to_string());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassVerdict {
    Cantorian,
    NonCantorian,
    Classical,
    Quantal,
}

impl ClassVerdict {
    pub fn is_positive(self) -> bool {
        matches!(self, ClassVerdict::Cantorian | ClassVerdict::Classical)
    }
}

impl fmt::Display for ClassVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassVerdict::Cantorian => "cantorian",
            ClassVerdict::NonCantorian => "non-cantorian",
            ClassVerdict::Classical => "classical",
            ClassVerdict::Quantal => "quantal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub subject: String,
    /// Rendered as `b: φ`; absent for plain Cantorian classification.
    pub predicate: Option<String>,
    pub verdict: ClassVerdict,
    /// Parts of the subject selected by the predicate (all parts when absent).
    pub selected_parts: Vec<String>,
    pub witness: Option<String>,
    pub cardinal: Option<usize>,
}

impl ClassificationReport {
    pub fn cardinal(&self) -> Cardinal {
        match self.cardinal {
            Some(n) => Cardinal::Defined(n),
            None => Cardinal::Undefined,
        }
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.subject, self.verdict)?;
        match &self.predicate {
            Some(p) => write!(f, " with respect to [{p}]")?,
            None => write!(f, ", cardinal {}", self.cardinal())?,
        }
        match &self.witness {
            Some(w) => write!(f, " (witness {w})"),
            None => f.write_str(" (no collecting set)"),
        }
    }
}

/// Classifies `alpha` as Cantorian (no predicate) or classical/quantal with
/// respect to `predicate`.
pub fn classify(
    s: &Structure,
    alpha: &str,
    predicate: Option<&Predicate>,
) -> Result<ClassificationReport, MereologyError> {
    let a = require_pt(s, alpha)?;
    let mut wanted: Vec<bool> = (0..s.len()).map(|b| s.part(b, a)).collect();
    if let Some(p) = predicate {
        let extra: Vec<String> = p
            .body
            .free_vars()
            .into_iter()
            .filter(|v| *v != p.binder)
            .collect();
        if !extra.is_empty() {
            return Err(MereologyError::PredicateFreeVariables {
                binder: p.binder.clone(),
                extra,
            });
        }
        for (b, w) in wanted.iter_mut().enumerate() {
            if *w {
                let env = Environment::new().bind(&p.binder, s.name(b));
                *w = eval(s, &p.body, &env)?;
            }
        }
    }
    let witness = collecting_sets(s, &wanted).first().map(|&y| s.name(y).to_string());
    let positive = witness.is_some();
    let verdict = match (predicate.is_some(), positive) {
        (false, true) => ClassVerdict::Cantorian,
        (false, false) => ClassVerdict::NonCantorian,
        (true, true) => ClassVerdict::Classical,
        (true, false) => ClassVerdict::Quantal,
    };
    let cardinal = match (&witness, predicate) {
        (Some(w), None) => Some(s.members(w)?.len()),
        _ => None,
    };
    Ok(ClassificationReport {
        subject: alpha.to_string(),
        predicate: predicate.map(|p| format!("{}: {}", p.binder, p.body)),
        verdict,
        selected_parts: (0..s.len())
            .filter(|&b| wanted[b])
            .map(|b| s.name(b).to_string())
            .collect(),
        witness,
        cardinal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_predicate;

    fn photon(with_set: bool) -> Structure {
        let mut elements = vec!["alpha", "beta1", "beta2"];
        let mut sets = vec![];
        let mut membership = vec![];
        if with_set {
            elements.push("s1");
            sets.push("s1");
            membership = vec![("alpha", "s1"), ("beta1", "s1"), ("beta2", "s1")];
        }
        Structure::build(
            &elements,
            &sets,
            &membership,
            &[
                ("alpha", "alpha"),
                ("beta1", "beta1"),
                ("beta2", "beta2"),
                ("beta1", "alpha"),
                ("beta2", "alpha"),
            ],
        )
        .unwrap()
    }

    fn single_pt(parthood: &[(&str, &str)]) -> Structure {
        Structure::build(&["alpha"], &[], &[], parthood).unwrap()
    }

    #[test]
    fn pt_axioms_on_reflexive_singleton() {
        let report = check_axioms(&single_pt(&[("alpha", "alpha")]), &Axiom::PT);
        assert!(report.passed());
        assert!(report.entries.iter().all(|e| e.verdict == AxiomVerdict::Pass));
    }

    #[test]
    fn reflexivity_failure_has_witness() {
        let s = single_pt(&[]);
        let report = check_axioms(&s, &[Axiom::ReflexivityPart]);
        let e = &report.entries[0];
        assert_eq!(e.verdict, AxiomVerdict::Fail);
        let w = e.witness.as_ref().unwrap();
        assert_eq!(w.get("a"), Some("alpha"));
        assert!(witness_falsifies(&s, &Axiom::ReflexivityPart.sentence(), w));
    }

    #[test]
    fn extensionality_failure() {
        let s = Structure::build(&["a", "s1", "s2"], &["s1", "s2"], &[("a", "s1"), ("a", "s2")], &[("a", "a")]).unwrap();
        let report = check_axioms(&s, &[Axiom::Extensionality]);
        let e = &report.entries[0];
        assert_eq!(e.verdict, AxiomVerdict::Fail);
        let w = e.witness.as_ref().unwrap();
        assert_eq!((w.get("x"), w.get("y")), (Some("s1"), Some("s2")));
        assert!(witness_falsifies(&s, &Axiom::Extensionality.sentence(), w));
    }

    #[test]
    fn non_checkable_requests() {
        let s = single_pt(&[("alpha", "alpha")]);
        let reqs: Vec<AxiomRequest> = ["infinity", "separation", "choice", "reflexivity"]
            .iter()
            .map(|r| r.parse().unwrap())
            .collect();
        let report = check_axioms(&s, &reqs);
        let verdicts: Vec<_> = report.entries.iter().map(|e| e.verdict).collect();
        assert_eq!(
            verdicts,
            vec![
                AxiomVerdict::NotFinitelyCheckable,
                AxiomVerdict::NotFinitelyCheckable,
                AxiomVerdict::NotFinitelyCheckable,
                AxiomVerdict::Pass
            ]
        );
        assert!(report.passed());
    }

    #[test]
    fn empty_set_failure_has_empty_witness() {
        let s = single_pt(&[("alpha", "alpha")]);
        let report = check_axioms(&s, &[Axiom::EmptySet]);
        let w = report.entries[0].witness.as_ref().unwrap();
        assert!(w.is_empty());
        assert!(witness_falsifies(&s, &Axiom::EmptySet.sentence(), w));
    }

    #[test]
    fn cantorian_photon() {
        let s = photon(true);
        let v = is_cantorian(&s, "alpha").unwrap();
        assert!(v.is_cantorian());
        assert_eq!(v.witness(), Some("s1"));
        assert_eq!(v.unique_under_extensionality, Some(true));
        assert_eq!(cardinal(&s, "alpha").unwrap(), Cardinal::Defined(3));

        let s = photon(false);
        assert!(!is_cantorian(&s, "alpha").unwrap().is_cantorian());
        assert_eq!(cardinal(&s, "alpha").unwrap(), Cardinal::Undefined);

        let bare = single_pt(&[("alpha", "alpha")]);
        assert!(!is_cantorian(&bare, "alpha").unwrap().is_cantorian());
        assert!(is_cantorian(&photon(true), "s1").is_err());
    }

    #[test]
    fn singleton_cardinal() {
        let s = Structure::build(&["alpha", "s"], &["s"], &[("alpha", "s")], &[("alpha", "alpha")]).unwrap();
        assert_eq!(cardinal(&s, "alpha").unwrap(), Cardinal::Defined(1));
    }

    #[test]
    fn disjointness_and_indiscernibility() {
        let s = Structure::build(&["a", "b"], &[], &[], &[("a", "a"), ("b", "b")]).unwrap();
        assert!(disjoint(&s, "a", "b").unwrap());
        assert!(!disjoint(&s, "a", "a").unwrap());
        let s = Structure::build(&["a", "b"], &[], &[], &[("a", "b"), ("b", "a")]).unwrap();
        assert!(indiscernible(&s, "a", "b").unwrap());
        assert!(disjoint(&photon(true), "s1", "alpha").is_err());
    }

    #[test]
    fn classes() {
        let s = Structure::build(&["a", "b"], &[], &[], &[("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(indiscernibility_classes(&s).unwrap(), vec![vec!["a", "b"]]);
        assert_eq!(
            indiscernibility_classes(&photon(true)).unwrap(),
            vec![vec!["alpha"], vec!["beta1"], vec!["beta2"]]
        );
        let mut pairs = vec![];
        for x in ["a", "b", "c"] {
            for y in ["a", "b", "c"] {
                pairs.push((x, y));
            }
        }
        let s = Structure::build(&["a", "b", "c"], &[], &[], &pairs).unwrap();
        assert_eq!(indiscernibility_classes(&s).unwrap(), vec![vec!["a", "b", "c"]]);
        assert!(matches!(
            indiscernibility_classes(&single_pt(&[])),
            Err(MereologyError::Precondition(Axiom::ReflexivityPart))
        ));
    }

    #[test]
    fn sums_of_photons() {
        let s = Structure::build(
            &["alpha", "beta1", "beta2", "x"],
            &["x"],
            &[("beta1", "x"), ("beta2", "x")],
            &[
                ("alpha", "alpha"),
                ("beta1", "beta1"),
                ("beta2", "beta2"),
                ("beta1", "alpha"),
                ("beta2", "alpha"),
            ],
        )
        .unwrap();
        assert!(sums(&s, "x").unwrap().contains(&"alpha".to_string()));
        assert!(sums(&s, "alpha").is_err());

        let s = Structure::build(&["a", "x", "y"], &["x", "y"], &[("y", "x")], &[("a", "a")]).unwrap();
        assert_eq!(sums(&s, "x").unwrap(), vec!["a"]);
    }

    #[test]
    fn irreducibles() {
        assert_eq!(irreducible_parts(&photon(false), "alpha").unwrap(), vec!["beta1", "beta2"]);
        let s = Structure::build(&["a", "b"], &[], &[], &[("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(irreducible_parts(&s, "a").unwrap(), vec!["a", "b"]);
        // Non-transitive descent: every part of c has a strictly smaller part.
        let s = Structure::build(
            &["a", "b", "c"],
            &[],
            &[],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "c"), ("b", "a")],
        )
        .unwrap();
        assert!(irreducible_parts(&s, "c").unwrap().is_empty());
    }

    #[test]
    fn classification() {
        let trivial = parse_predicate("b: b = b").unwrap();
        let pts = parse_predicate("b: T(b)").unwrap();
        let with = photon(true);
        let without = photon(false);
        assert_eq!(classify(&with, "alpha", Some(&trivial)).unwrap().verdict, ClassVerdict::Classical);
        assert_eq!(classify(&without, "alpha", Some(&pts)).unwrap().verdict, ClassVerdict::Quantal);
        let plain = classify(&with, "alpha", None).unwrap();
        assert_eq!(plain.verdict, ClassVerdict::Cantorian);
        assert_eq!(plain.cardinal, Some(3));
        let r = classify(&without, "alpha", None).unwrap();
        assert_eq!((r.verdict, r.cardinal()), (ClassVerdict::NonCantorian, Cardinal::Undefined));

        let only_photons = parse_predicate("b: ~(b = 'alpha')").unwrap();
        let r = classify(&with, "alpha", Some(&only_photons)).unwrap();
        assert_eq!(r.verdict, ClassVerdict::Quantal);
        assert_eq!(r.selected_parts, vec!["beta1", "beta2"]);

        let open = parse_predicate("b: b = c").unwrap();
        assert!(matches!(
            classify(&with, "alpha", Some(&open)),
            Err(MereologyError::PredicateFreeVariables { .. })
        ));
    }
}
