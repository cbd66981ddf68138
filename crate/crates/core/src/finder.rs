//! Exhaustive enumeration of small structures, and model / countermodel
//! search over them.
//!
//! Structures of size `n` use the element names `e1..en`. They are produced
//! in a fixed order: set/PT taggings as a binary counter (bit `i` set means
//! element `i` is a set), then membership relations, then parthood
//! relations, each relation a binary counter over its legal pairs in
//! lexicographic order. The first model found is therefore reproducible.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{Axiom, Formula};
use crate::mereology::satisfies_all;
use crate::model::Structure;
use crate::semantics::{eval, Environment, EvalError};

/// Largest supported domain size.
pub const MAX_SIZE: usize = 5;
/// Sizes from here on print a cost warning.
pub const WARN_SIZE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinderError {
    #[error("domain size {0} outside 1..={MAX_SIZE}")]
    SizeOutOfRange(usize),
    #[error("target formula must be closed; free variables {{{}}}", .0.join(", "))]
    OpenFormula(Vec<String>),
    #[error("mode requires a target formula")]
    MissingTarget,
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    FindModel,
    FindCountermodel,
    Count,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpec {
    pub max_size: usize,
    pub axioms: Vec<Axiom>,
    pub target: Option<Formula>,
    pub mode: Mode,
    pub symmetry_reduction: bool,
}

impl SearchSpec {
    pub fn new(mode: Mode, target: Option<Formula>) -> SearchSpec {
        SearchSpec {
            max_size: MAX_SIZE,
            axioms: Axiom::PT.to_vec(),
            target,
            mode,
            symmetry_reduction: false,
        }
    }

    pub fn with_max_size(mut self, n: usize) -> SearchSpec {
        self.max_size = n;
        self
    }

    pub fn with_axioms(mut self, axioms: &[Axiom]) -> SearchSpec {
        self.axioms = axioms.to_vec();
        self
    }
}

/// A cost warning for sizes at or above [`WARN_SIZE`].
pub fn size_warning(size: usize) -> Option<String> {
    (size >= WARN_SIZE).then(|| {
        format!("size {size}: the search space grows as 2^(n^2) per relation; this may take a while")
    })
}

fn check_size(size: usize) -> Result<(), FinderError> {
    if size == 0 || size > MAX_SIZE {
        return Err(FinderError::SizeOutOfRange(size));
    }
    Ok(())
}

/// Iterator over every structure of a given size satisfying a set of
/// axioms, in canonical order.
pub struct Enumeration {
    n: usize,
    names: Vec<String>,
    sentences: Vec<Formula>,
    tagging: u64,
    member_pairs: Vec<(usize, usize)>,
    part_pairs: Vec<(usize, usize)>,
    member_mask: u64,
    part_mask: u64,
    done: bool,
}

impl Enumeration {
    fn new(n: usize, axioms: &[Axiom]) -> Enumeration {
        let mut e = Enumeration {
            n,
            names: (1..=n).map(|i| format!("e{i}")).collect(),
            sentences: axioms.iter().map(|a| a.sentence()).collect(),
            tagging: 0,
            member_pairs: Vec::new(),
            part_pairs: Vec::new(),
            member_mask: 0,
            part_mask: 0,
            done: false,
        };
        e.load_tagging();
        e
    }

    fn is_set(&self, i: usize) -> bool {
        self.tagging >> i & 1 == 1
    }

    fn load_tagging(&mut self) {
        let n = self.n;
        self.member_pairs = (0..n)
            .flat_map(|m| (0..n).map(move |c| (m, c)))
            .filter(|&(_, c)| self.is_set(c))
            .collect();
        self.part_pairs = (0..n)
            .flat_map(|p| (0..n).map(move |w| (p, w)))
            .filter(|&(p, w)| !self.is_set(p) && !self.is_set(w))
            .collect();
        self.member_mask = 0;
        self.part_mask = 0;
    }

    fn current(&self) -> Structure {
        let pick = |pairs: &[(usize, usize)], mask: u64| -> Vec<(usize, usize)> {
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, p)| *p)
                .collect()
        };
        Structure::from_indices(
            self.names.clone(),
            (0..self.n).map(|i| self.is_set(i)).collect(),
            pick(&self.member_pairs, self.member_mask),
            pick(&self.part_pairs, self.part_mask),
        )
    }

    fn advance(&mut self) {
        self.part_mask += 1;
        if self.part_mask < 1 << self.part_pairs.len() {
            return;
        }
        self.part_mask = 0;
        self.member_mask += 1;
        if self.member_mask < 1 << self.member_pairs.len() {
            return;
        }
        self.tagging += 1;
        if self.tagging < 1 << self.n {
            self.load_tagging();
        } else {
            self.done = true;
        }
    }
}

impl Iterator for Enumeration {
    type Item = Structure;

    fn next(&mut self) -> Option<Structure> {
        while !self.done {
            let s = self.current();
            self.advance();
            if satisfies_all(&s, &self.sentences) {
                return Some(s);
            }
        }
        None
    }
}

/// All structures of `size` elements satisfying `axioms`.
pub fn enumerate(size: usize, axioms: &[Axiom]) -> Result<Enumeration, FinderError> {
    check_size(size)?;
    Ok(Enumeration::new(size, axioms))
}

pub fn count_models(size: usize, axioms: &[Axiom]) -> Result<usize, FinderError> {
    Ok(enumerate(size, axioms)?.count())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub size: usize,
    pub raw: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub up_to_isomorphism: Option<usize>,
}

/// Counts structures of `size` satisfying `axioms` and, when given, the
/// closed `target`. With `symmetry_reduction` the count up to renaming of
/// elements is reported as well.
pub fn count(
    size: usize,
    axioms: &[Axiom],
    target: Option<&Formula>,
    symmetry_reduction: bool,
) -> Result<CountReport, FinderError> {
    if let Some(t) = target {
        require_closed(t)?;
    }
    let mut raw = 0;
    let mut classes = HashSet::new();
    for s in enumerate(size, axioms)? {
        if let Some(t) = target {
            if !eval(&s, t, &Environment::new())? {
                continue;
            }
        }
        raw += 1;
        if symmetry_reduction {
            classes.insert(canonical_key(&s));
        }
    }
    Ok(CountReport {
        size,
        raw,
        up_to_isomorphism: symmetry_reduction.then_some(classes.len()),
    })
}

fn encode(s: &Structure, perm: &[usize]) -> u64 {
    // perm[new] = old; layout: tags, then membership rows, then parthood rows.
    let n = perm.len();
    let mut key = 0u64;
    let mut push = |bit: bool| key = key << 1 | bit as u64;
    for &i in perm {
        push(s.is_set(i));
    }
    for a in 0..n {
        for b in 0..n {
            push(s.member(perm[a], perm[b]));
        }
    }
    for a in 0..n {
        for b in 0..n {
            push(s.part(perm[a], perm[b]));
        }
    }
    key
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A key equal for two structures exactly when they are isomorphic under a
/// renaming of elements: the least encoding over all permutations.
pub fn canonical_key(s: &Structure) -> u64 {
    permutations(s.len())
        .iter()
        .map(|p| encode(s, p))
        .min()
        .unwrap_or(0)
}

fn require_closed(f: &Formula) -> Result<(), FinderError> {
    let free = f.free_vars();
    if !free.is_empty() {
        return Err(FinderError::OpenFormula(free.into_iter().collect()));
    }
    Ok(())
}

fn search(spec: &SearchSpec, want: bool) -> Result<Option<Structure>, FinderError> {
    let target = spec.target.as_ref().ok_or(FinderError::MissingTarget)?;
    require_closed(target)?;
    check_size(spec.max_size)?;
    for size in 1..=spec.max_size {
        for s in enumerate(size, &spec.axioms)? {
            if eval(&s, target, &Environment::new())? == want {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

/// The smallest structure (by size, then enumeration order) satisfying the
/// axioms and the target.
pub fn find_model(spec: &SearchSpec) -> Result<Option<Structure>, FinderError> {
    search(spec, true)
}

/// The smallest structure satisfying the axioms in which the target fails.
pub fn find_countermodel(spec: &SearchSpec) -> Result<Option<Structure>, FinderError> {
    search(spec, false)
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Found(Structure),
    NotFound,
    Counts(Vec<CountReport>),
}

/// Runs a search according to its mode.
pub fn run(spec: &SearchSpec) -> Result<SearchOutcome, FinderError> {
    let found = |r: Option<Structure>| r.map_or(SearchOutcome::NotFound, SearchOutcome::Found);
    match spec.mode {
        Mode::FindModel => find_model(spec).map(found),
        Mode::FindCountermodel => find_countermodel(spec).map(found),
        Mode::Count => {
            check_size(spec.max_size)?;
            (1..=spec.max_size)
                .map(|n| count(n, &spec.axioms, spec.target.as_ref(), spec.symmetry_reduction))
                .collect::<Result<_, _>>()
                .map(SearchOutcome::Counts)
        }
    }
}
