//! Inputs shared by the benchmarks.

use zfstar_core::{parse, Formula, Structure};

/// Formulas of increasing size in the surface syntax.
pub const FORMULAS: [&str; 4] = [
    "all a:PT. a <: a",
    "all a:PT. all b:PT. all g:PT. (a <: b & b <: g -> a <: g)",
    "all x. ex a:PT. Sum(x, a)",
    "ex a:PT. (QP[b: T(b) & ~(b = a)](a) & all g:PT. (Irr(g, a) -> ex y:Set. SetOf[x: x <: g](y)))",
];

/// A conjunction of `n` copies of the transitivity axiom over fresh names.
pub fn long_formula(n: usize) -> String {
    (0..n)
        .map(|i| format!("(all a{i}:PT. all b{i}:PT. (a{i} <: b{i} & b{i} <: a{i} -> Ind(a{i}, b{i})))"))
        .collect::<Vec<_>>()
        .join(" & ")
}

pub fn parsed() -> Vec<Formula> {
    FORMULAS.iter().map(|f| parse(f).expect("fixture parses")).collect()
}

/// A whole PT with `n` parts and a set collecting them.
pub fn photon_structure(n: usize) -> Structure {
    let names: Vec<String> = std::iter::once("alpha".to_string())
        .chain((1..=n).map(|i| format!("photon{i}")))
        .collect();
    let mut parthood: Vec<(&str, &str)> = names.iter().map(|p| (p.as_str(), p.as_str())).collect();
    parthood.extend(names[1..].iter().map(|p| (p.as_str(), "alpha")));
    let membership: Vec<(&str, &str)> = names.iter().map(|p| (p.as_str(), "parts")).collect();
    let mut elements: Vec<&str> = names.iter().map(String::as_str).collect();
    elements.push("parts");
    Structure::build(&elements, &["parts"], &membership, &parthood).expect("fixture is valid")
}
