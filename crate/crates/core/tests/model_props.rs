mod common;

use proptest::prelude::*;
use zfstar_core::{load, save, validate, ModelFile, Structure, Violation};

#[derive(Debug, Clone)]
enum Mutation {
    SetAsPart,
    MemberOfPt,
    DuplicateName,
    GhostSet,
    GhostPair,
}

fn mutation() -> impl Strategy<Value = Mutation> {
    prop_oneof![
        Just(Mutation::SetAsPart),
        Just(Mutation::MemberOfPt),
        Just(Mutation::DuplicateName),
        Just(Mutation::GhostSet),
        Just(Mutation::GhostPair),
    ]
}

/// Breaks one structural invariant. Returns None when the structure lacks
/// the element kinds the mutation needs.
fn mutate(s: &Structure, m: &Mutation) -> Option<ModelFile> {
    let mut file = s.to_file();
    let first_set = s.sets().next().map(|i| s.name(i).to_string());
    let first_pt = s.pts().next().map(|i| s.name(i).to_string());
    match m {
        Mutation::SetAsPart => {
            let y = first_set?;
            file.parthood.push((y.clone(), y));
        }
        Mutation::MemberOfPt => {
            let a = first_pt?;
            file.membership.push((a.clone(), a));
        }
        Mutation::DuplicateName => {
            let e = file.elements[0].clone();
            file.elements.push(e);
        }
        Mutation::GhostSet => file.sets.push("ghost".into()),
        Mutation::GhostPair => file.parthood.push(("ghost".into(), file.elements[0].clone())),
    }
    Some(file)
}

proptest! {
    #[test]
    fn save_load_round_trip(s in common::structure(4)) {
        let text = save(&s);
        prop_assert_eq!(load(&text).unwrap(), s.clone());
        prop_assert!(validate(&s.to_file()).is_ok());
    }

    #[test]
    fn every_mutation_is_rejected(s in common::structure(4), m in mutation()) {
        if let Some(file) = mutate(&s, &m) {
            let violations = validate(&file).expect_err("mutated file must be invalid");
            let expected = match m {
                Mutation::SetAsPart => matches!(violations[0], Violation::ParthoodEndpointIsSet { .. }),
                Mutation::MemberOfPt => matches!(violations[0], Violation::ContainerNotSet { .. }),
                Mutation::DuplicateName => matches!(violations[0], Violation::DuplicateElement { .. }),
                Mutation::GhostSet => matches!(violations[0], Violation::UndeclaredSet { .. }),
                Mutation::GhostPair => matches!(violations[0], Violation::UndeclaredElement { .. }),
            };
            prop_assert!(expected, "{:?} gave {:?}", m, violations);
            prop_assert!(Structure::from_file(file).is_err());
        }
    }
}

#[test]
fn unknown_fields_are_rejected() {
    let text = r#"{"elements":["a"],"sets":[],"membership":[],"parthood":[],"extra":1}"#;
    assert!(load(text).is_err());
}

#[test]
fn messages_name_the_broken_invariant() {
    let file = ModelFile {
        elements: vec!["a".into(), "y".into()],
        sets: vec!["y".into()],
        membership: vec![("y".into(), "a".into())],
        parthood: vec![("y".into(), "a".into())],
    };
    let text: Vec<String> = validate(&file).unwrap_err().iter().map(ToString::to_string).collect();
    assert!(text[0].contains("container not a set"));
    assert!(text[1].contains("parthood endpoint is a set"));
}
