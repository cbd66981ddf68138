#![allow(dead_code)]

pub mod ast_gen;

use proptest::prelude::*;
use zfstar_core::Structure;

/// Random valid structures with 1..=max elements named e1.., with `c1` and
/// `c2` always present so formulas with constants can be evaluated.
pub fn structure(max: usize) -> impl Strategy<Value = Structure> {
    (2..=max.max(2)).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n * n),
            proptest::collection::vec(any::<bool>(), n * n),
        )
            .prop_map(move |(tags, mem, part)| {
                let names: Vec<String> = (0..n)
                    .map(|i| match i {
                        0 => "c1".to_string(),
                        1 => "c2".to_string(),
                        _ => format!("e{}", i + 1),
                    })
                    .collect();
                let mut membership = Vec::new();
                let mut parthood = Vec::new();
                for a in 0..n {
                    for b in 0..n {
                        if mem[a * n + b] && tags[b] {
                            membership.push((names[a].as_str(), names[b].as_str()));
                        }
                        if part[a * n + b] && !tags[a] && !tags[b] {
                            parthood.push((names[a].as_str(), names[b].as_str()));
                        }
                    }
                }
                let elements: Vec<&str> = names.iter().map(String::as_str).collect();
                let sets: Vec<&str> = (0..n).filter(|&i| tags[i]).map(|i| names[i].as_str()).collect();
                Structure::build(&elements, &sets, &membership, &parthood).expect("generated structure is valid")
            })
    })
}

/// Every assignment of `vars` to elements of `s`.
pub fn assignments(s: &Structure, vars: &[String]) -> Vec<zfstar_core::Environment> {
    let mut out = vec![zfstar_core::Environment::new()];
    for v in vars {
        out = out
            .into_iter()
            .flat_map(|env| s.names().iter().map(move |e| env.clone().bind(v, e)))
            .collect();
    }
    out
}
