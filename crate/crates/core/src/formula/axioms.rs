use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::ast::{Formula, Term};
use super::parse::parse;

/// The closed axioms of the theory. Separation and Replacement are schemas
/// and are produced by [`instantiate_schema`] instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Extensionality,
    Union,
    PowerSet,
    EmptySet,
    Amalgamation,
    Infinity,
    Choice,
    Foundation,
    ReflexivityPart,
    TransitivityPart,
    ExistenceOfSums,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::Extensionality,
        Axiom::Union,
        Axiom::PowerSet,
        Axiom::EmptySet,
        Axiom::Amalgamation,
        Axiom::Infinity,
        Axiom::Choice,
        Axiom::Foundation,
        Axiom::ReflexivityPart,
        Axiom::TransitivityPart,
        Axiom::ExistenceOfSums,
    ];

    /// Reflexivity, transitivity and existence of sums.
    pub const PT: [Axiom; 3] = [
        Axiom::ReflexivityPart,
        Axiom::TransitivityPart,
        Axiom::ExistenceOfSums,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Extensionality => "extensionality",
            Axiom::Union => "union",
            Axiom::PowerSet => "power_set",
            Axiom::EmptySet => "empty_set",
            Axiom::Amalgamation => "amalgamation",
            Axiom::Infinity => "infinity",
            Axiom::Choice => "choice",
            Axiom::Foundation => "foundation",
            Axiom::ReflexivityPart => "reflexivity_part",
            Axiom::TransitivityPart => "transitivity_part",
            Axiom::ExistenceOfSums => "existence_of_sums",
        }
    }

    /// Whether a finite structure can be meaningfully checked against the
    /// axiom. The remaining ones have no finite models together with the
    /// rest of the theory.
    pub fn finitely_checkable(self) -> bool {
        matches!(
            self,
            Axiom::Extensionality
                | Axiom::EmptySet
                | Axiom::Foundation
                | Axiom::ReflexivityPart
                | Axiom::TransitivityPart
                | Axiom::ExistenceOfSums
        )
    }

    fn source(self) -> &'static str {
        match self {
            Axiom::Extensionality => {
                "all x:Set. all y:Set. ((all z. (z in x <-> z in y)) -> x = y)"
            }
            Axiom::Union => "all x. all y. ex t:Set. all z. (z in t <-> z in x | z in y)",
            // t ⊆ x unfolded.
            Axiom::PowerSet => {
                "all x:Set. ex y:Set. all t:Set. (t in y <-> (all w. (w in t -> w in x)))"
            }
            Axiom::EmptySet => "ex t:Set. all x. ~(x in t)",
            Axiom::Amalgamation => {
                "all x:Set. ((all y. (y in x -> Set(y))) -> \
                 ex z:Set. all t. (t in z <-> (ex v. (v in x & t in v))))"
            }
            // ∅ ∈ z and x ∪ {x} ∈ z, with both witnesses required to be sets.
            Axiom::Infinity => {
                "ex z:Set. ((ex e. (e in z & Set(e) & all w. ~(w in e))) & \
                 all x. (x in z -> (ex s. (s in z & Set(s) & \
                 all w. (w in s <-> w in x | w = x)))))"
            }
            // Distinct members pairwise disjoint; y ∩ u = {v} unfolded.
            Axiom::Choice => {
                "all x:Set. ((all y. (y in x -> Set(y))) & \
                 (all y. all z. (y in x & z in x -> \
                 (~(y = z) -> ~(ex w. (w in y & w in z))) & (ex w. w in y))) -> \
                 ex u:Set. all y. ex v. (y in x -> \
                 (all w. (w in y & w in u <-> w = v))))"
            }
            Axiom::Foundation => {
                "all x:Set. ((ex w. w in x) & (all y. (y in x -> Set(y))) -> \
                 (ex z. (z in x & ~(ex w. (w in z & w in x)))))"
            }
            Axiom::ReflexivityPart => "all a:PT. a <: a",
            Axiom::TransitivityPart => {
                "all a:PT. all b:PT. all g:PT. (a <: b & b <: g -> a <: g)"
            }
            Axiom::ExistenceOfSums => "all x. ex a:PT. Sum(x, a)",
        }
    }

    /// The axiom as a closed sentence.
    pub fn sentence(self) -> Formula {
        parse(self.source()).expect("axiom sources are well formed")
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error("unknown axiom `{0}`")]
    Unknown(String),
    #[error("{0}")]
    Schema(String),
}

impl FromStr for Axiom {
    type Err = AxiomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let alias = match key.as_str() {
            "reflexivity" => Some(Axiom::ReflexivityPart),
            "transitivity" => Some(Axiom::TransitivityPart),
            "sums" => Some(Axiom::ExistenceOfSums),
            _ => None,
        };
        alias
            .or_else(|| Axiom::ALL.iter().copied().find(|a| a.name() == key))
            .ok_or_else(|| AxiomError::Unknown(s.to_string()))
    }
}

/// Looks up an axiom by name and returns its sentence.
pub fn axiom_sentence(name: &str) -> Result<Formula, AxiomError> {
    Ok(name.parse::<Axiom>()?.sentence())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Schema {
    Separation,
    Replacement,
}

fn var(s: &str) -> Term {
    Term::var(s)
}

/// Instantiates an axiom schema with `f`.
///
/// `vars` names the designated variables of `f`: one (`x`) for separation,
/// two (`x`, `y`) for replacement. Any other free variable of `f` is a
/// parameter and is universally closed, except that the schema's own set
/// variables (`y` for separation, `u`/`v` for replacement) must not occur
/// free in `f`.
pub fn instantiate_schema(schema: Schema, f: &Formula, vars: &[&str]) -> Result<Formula, AxiomError> {
    let err = |m: String| Err(AxiomError::Schema(m));
    let free = f.free_vars();
    let (designated, reserved): (&[&str], &[&str]) = match schema {
        Schema::Separation => (&vars[..vars.len().min(1)], &["y", "z"]),
        Schema::Replacement => (&vars[..vars.len().min(2)], &["u", "v", "w"]),
    };
    let expected = if schema == Schema::Separation { 1 } else { 2 };
    if vars.len() != expected {
        return err(format!("{schema:?} needs {expected} designated variable(s)"));
    }
    if designated.len() == 2 && designated[0] == designated[1] {
        return err("designated variables must be distinct".into());
    }
    for d in designated {
        if reserved.contains(d) {
            return err(format!("designated variable `{d}` clashes with a schema variable"));
        }
    }
    let sentence = match schema {
        Schema::Separation => {
            if free.contains("y") {
                return err("y must not occur free in F(x)".into());
            }
            let x = designated[0];
            // all z:Set. ex y:Set. all x. (x in y <-> F(x) & x in z)
            Formula::forall_set(
                "z",
                Formula::exists_set(
                    "y",
                    Formula::forall(
                        x,
                        Formula::iff(
                            Formula::Member(var(x), var("y")),
                            Formula::and(f.clone(), Formula::Member(var(x), var("z"))),
                        ),
                    ),
                ),
            )
        }
        Schema::Replacement => {
            for r in reserved {
                if free.contains(*r) {
                    return err(format!("{r} must not occur free in F(x, y)"));
                }
            }
            let (x, y) = (designated[0], designated[1]);
            // ∃!y F(x,y) := ex y. (F(x,y) & all w. (F(x,w) -> w = y))
            let unique = Formula::exists(
                y,
                Formula::and(
                    f.clone(),
                    Formula::forall(
                        "w",
                        Formula::implies(
                            f.rename_free(y, &var("w")),
                            Formula::Equal(var("w"), var(y)),
                        ),
                    ),
                ),
            );
            Formula::implies(
                Formula::forall(x, unique),
                Formula::forall_set(
                    "u",
                    Formula::exists_set(
                        "v",
                        Formula::forall(
                            y,
                            Formula::iff(
                                Formula::Member(var(y), var("v")),
                                Formula::exists(
                                    x,
                                    Formula::and(Formula::Member(var(x), var("u")), f.clone()),
                                ),
                            ),
                        ),
                    ),
                ),
            )
        }
    };
    let mut closed = sentence;
    for p in closed.free_vars().into_iter().rev() {
        closed = Formula::forall(&p, closed);
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_axioms_are_sentences() {
        for a in Axiom::ALL {
            let s = a.sentence();
            assert!(s.is_sentence(), "{a}: {s}");
        }
    }

    #[test]
    fn sentence_forms() {
        assert_eq!(
            axiom_sentence("reflexivity_part").unwrap(),
            parse("all a. (T(a) -> a <: a)").unwrap()
        );
        assert_eq!(
            axiom_sentence("existence_of_sums").unwrap(),
            parse("all x. ex a. (T(a) & Sum(x, a))").unwrap()
        );
        assert_eq!(
            axiom_sentence("empty_set").unwrap(),
            parse("ex t. (Set(t) & all x. ~(x in t))").unwrap()
        );
        assert_eq!(axiom_sentence("transitivity").unwrap(), Axiom::TransitivityPart.sentence());
        assert!(axiom_sentence("transitivity_part").unwrap().free_vars().is_empty());
        assert!(matches!(axiom_sentence("pairing"), Err(AxiomError::Unknown(_))));
    }

    #[test]
    fn separation_instance() {
        let f = parse("T(x)").unwrap();
        let inst = instantiate_schema(Schema::Separation, &f, &["x"]).unwrap();
        assert_eq!(
            inst,
            parse("all z:Set. ex y:Set. all x. (x in y <-> (T(x) & x in z))").unwrap()
        );
    }

    #[test]
    fn separation_rejects_free_y() {
        let f = parse("x in y").unwrap();
        assert!(instantiate_schema(Schema::Separation, &f, &["x"]).is_err());
    }

    #[test]
    fn separation_closes_parameters() {
        let f = parse("x <: p").unwrap();
        let inst = instantiate_schema(Schema::Separation, &f, &["x"]).unwrap();
        assert!(inst.is_sentence());
        assert!(matches!(inst, Formula::ForAll(ref v, _) if v == "p"));
    }

    #[test]
    fn replacement_identity_instance() {
        let f = parse("x = y").unwrap();
        let inst = instantiate_schema(Schema::Replacement, &f, &["x", "y"]).unwrap();
        let expected = parse(
            "(all x. ex y. (x = y & all w. (x = w -> w = y))) -> \
             all u:Set. ex v:Set. all y. (y in v <-> (ex x. (x in u & x = y)))",
        )
        .unwrap();
        assert_eq!(inst, expected);
        assert!(instantiate_schema(Schema::Replacement, &parse("x = u").unwrap(), &["x", "y"]).is_err());
        assert!(instantiate_schema(Schema::Replacement, &f, &["x"]).is_err());
    }
}
