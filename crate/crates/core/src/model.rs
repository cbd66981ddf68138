//! Finite two-sorted structures: sets and PTs, with membership and parthood.
//!
//! A structure is stored extensionally. Parthood is kept exactly as given;
//! reflexivity and transitivity are axioms to check, not closure rules.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The on-disk JSON form of a structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub elements: Vec<String>,
    pub sets: Vec<String>,
    pub membership: Vec<(String, String)>,
    pub parthood: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    EmptyName,
    DuplicateElement { name: String },
    UndeclaredSet { name: String },
    UndeclaredElement { relation: Relation, pair: (String, String) },
    ContainerNotSet { member: String, container: String },
    ParthoodEndpointIsSet { part: String, whole: String, endpoint: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Membership,
    Parthood,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyName => f.write_str("element name is empty"),
            Violation::DuplicateElement { name } => write!(f, "duplicate element `{name}`"),
            Violation::UndeclaredSet { name } => write!(f, "set tag on undeclared element `{name}`"),
            Violation::UndeclaredElement { relation, pair } => write!(
                f,
                "{relation:?} pair ({}, {}) names an undeclared element",
                pair.0, pair.1
            ),
            Violation::ContainerNotSet { member, container } => write!(
                f,
                "container not a set: membership pair ({member}, {container})"
            ),
            Violation::ParthoodEndpointIsSet {
                part,
                whole,
                endpoint,
            } => write!(
                f,
                "parthood endpoint is a set: `{endpoint}` in pair ({part}, {whole})"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("malformed model file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid structure: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("duplicate {relation:?} pair ({}, {})", pair.0, pair.1)]
    DuplicatePair { relation: Relation, pair: (String, String) },
    #[error("undeclared element `{0}`")]
    Undeclared(String),
    #[error("`{0}` is not a PT")]
    NotAPt(String),
    #[error("`{0}` is not a set")]
    NotASet(String),
}

/// Checks the structural invariants of a model file, returning every
/// violation found.
pub fn validate(file: &ModelFile) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for e in &file.elements {
        if e.is_empty() {
            out.push(Violation::EmptyName);
        } else if !seen.insert(e.as_str()) {
            out.push(Violation::DuplicateElement { name: e.clone() });
        }
    }
    let sets: HashSet<&str> = file.sets.iter().map(String::as_str).collect();
    for s in &file.sets {
        if !seen.contains(s.as_str()) {
            out.push(Violation::UndeclaredSet { name: s.clone() });
        }
    }
    for (m, c) in &file.membership {
        if !seen.contains(m.as_str()) || !seen.contains(c.as_str()) {
            out.push(Violation::UndeclaredElement {
                relation: Relation::Membership,
                pair: (m.clone(), c.clone()),
            });
        } else if !sets.contains(c.as_str()) {
            out.push(Violation::ContainerNotSet {
                member: m.clone(),
                container: c.clone(),
            });
        }
    }
    for (p, w) in &file.parthood {
        if !seen.contains(p.as_str()) || !seen.contains(w.as_str()) {
            out.push(Violation::UndeclaredElement {
                relation: Relation::Parthood,
                pair: (p.clone(), w.clone()),
            });
            continue;
        }
        for endpoint in [p, w] {
            if sets.contains(endpoint.as_str()) {
                out.push(Violation::ParthoodEndpointIsSet {
                    part: p.clone(),
                    whole: w.clone(),
                    endpoint: endpoint.clone(),
                });
                break;
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// A validated finite structure. Element order is the canonical iteration
/// order for every query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    names: Vec<String>,
    is_set: Vec<bool>,
    membership: Vec<(usize, usize)>,
    parthood: Vec<(usize, usize)>,
    member_matrix: Vec<bool>,
    part_matrix: Vec<bool>,
    index: HashMap<String, usize>,
}

impl Structure {
    /// Builds from already-indexed data. The caller guarantees the
    /// structural invariants and the absence of duplicate pairs.
    pub(crate) fn from_indices(
        names: Vec<String>,
        is_set: Vec<bool>,
        membership: Vec<(usize, usize)>,
        parthood: Vec<(usize, usize)>,
    ) -> Structure {
        let n = names.len();
        debug_assert!(membership.iter().all(|&(_, c)| is_set[c]));
        debug_assert!(parthood.iter().all(|&(p, w)| !is_set[p] && !is_set[w]));
        let mut member_matrix = vec![false; n * n];
        for &(m, c) in &membership {
            member_matrix[m * n + c] = true;
        }
        let mut part_matrix = vec![false; n * n];
        for &(p, w) in &parthood {
            part_matrix[p * n + w] = true;
        }
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Structure {
            names,
            is_set,
            membership,
            parthood,
            member_matrix,
            part_matrix,
            index,
        }
    }

    pub fn from_file(file: ModelFile) -> Result<Structure, ModelError> {
        validate(&file).map_err(ModelError::Invalid)?;
        let index: HashMap<&str, usize> = file
            .elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let sets: HashSet<&str> = file.sets.iter().map(String::as_str).collect();
        let is_set = file.elements.iter().map(|e| sets.contains(e.as_str())).collect();
        let pairs = |relation, list: &[(String, String)]| -> Result<Vec<(usize, usize)>, ModelError> {
            let mut seen = HashSet::new();
            let mut out = Vec::with_capacity(list.len());
            for (a, b) in list {
                let pair = (index[a.as_str()], index[b.as_str()]);
                if !seen.insert(pair) {
                    return Err(ModelError::DuplicatePair {
                        relation,
                        pair: (a.clone(), b.clone()),
                    });
                }
                out.push(pair);
            }
            Ok(out)
        };
        let membership = pairs(Relation::Membership, &file.membership)?;
        let parthood = pairs(Relation::Parthood, &file.parthood)?;
        Ok(Structure::from_indices(file.elements, is_set, membership, parthood))
    }

    /// Convenience constructor from borrowed names.
    pub fn build(
        elements: &[&str],
        sets: &[&str],
        membership: &[(&str, &str)],
        parthood: &[(&str, &str)],
    ) -> Result<Structure, ModelError> {
        let own = |v: &[(&str, &str)]| {
            v.iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect()
        };
        Structure::from_file(ModelFile {
            elements: elements.iter().map(|s| s.to_string()).collect(),
            sets: sets.iter().map(|s| s.to_string()).collect(),
            membership: own(membership),
            parthood: own(parthood),
        })
    }

    pub fn to_file(&self) -> ModelFile {
        let pair = |&(a, b): &(usize, usize)| (self.names[a].clone(), self.names[b].clone());
        ModelFile {
            elements: self.names.clone(),
            sets: self
                .names
                .iter()
                .zip(&self.is_set)
                .filter(|(_, s)| **s)
                .map(|(n, _)| n.clone())
                .collect(),
            membership: self.membership.iter().map(pair).collect(),
            parthood: self.parthood.iter().map(pair).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize, ModelError> {
        self.index_of(name)
            .ok_or_else(|| ModelError::Undeclared(name.to_string()))
    }

    pub fn is_set(&self, i: usize) -> bool {
        self.is_set[i]
    }

    pub fn is_pt(&self, i: usize) -> bool {
        !self.is_set[i]
    }

    #[inline]
    pub fn member(&self, m: usize, c: usize) -> bool {
        self.member_matrix[m * self.names.len() + c]
    }

    #[inline]
    pub fn part(&self, p: usize, w: usize) -> bool {
        self.part_matrix[p * self.names.len() + w]
    }

    pub fn membership_pairs(&self) -> &[(usize, usize)] {
        &self.membership
    }

    pub fn parthood_pairs(&self) -> &[(usize, usize)] {
        &self.parthood
    }

    pub fn pts(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.is_pt(i))
    }

    pub fn sets(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.is_set(i))
    }

    pub fn members_of(&self, c: usize) -> Vec<usize> {
        (0..self.len()).filter(|&m| self.member(m, c)).collect()
    }

    pub fn parts_of(&self, w: usize) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.part(p, w)).collect()
    }

    /// All parts of the PT `name`, in declaration order.
    pub fn parts(&self, name: &str) -> Result<Vec<&str>, ModelError> {
        let w = self.require(name)?;
        if self.is_set(w) {
            return Err(ModelError::NotAPt(name.to_string()));
        }
        Ok(self.parts_of(w).into_iter().map(|i| self.name(i)).collect())
    }

    /// All members of `name`; empty for PTs.
    pub fn members(&self, name: &str) -> Result<Vec<&str>, ModelError> {
        let c = self.require(name)?;
        Ok(self.members_of(c).into_iter().map(|i| self.name(i)).collect())
    }
}

/// Parses and validates a model file.
pub fn load(text: &str) -> Result<Structure, ModelError> {
    let file: ModelFile = serde_json::from_str(text)?;
    Structure::from_file(file)
}

/// Serialises a structure to the model file format.
pub fn save(s: &Structure) -> String {
    serde_json::to_string_pretty(&s.to_file()).expect("model files always serialise")
}
