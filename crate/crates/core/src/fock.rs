//! Single-mode truncated Fock space.
//!
//! States are amplitude vectors over the number basis |0⟩..|N_max⟩. Ladder
//! operators use a†|n⟩ = √(n+1)|n+1⟩ and a|n⟩ = √n|n−1⟩; energies are in
//! units of ħω with ħ = 1.
//!
//! [`to_structure`] renders a state as a finite structure: a whole PT
//! `alpha` with one photon PT per quantum. When the photon number is
//! definite a set collecting the parts of `alpha` is included, so `alpha` is
//! Cantorian with cardinal n + 1 (it is a part of itself). Otherwise no such
//! set exists and `alpha` has no cardinal.

use std::fmt::Write;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::mereology::{classify, ClassificationReport};
use crate::model::Structure;

/// Default tolerance for truncation deficit and normalization checks.
pub const DEFAULT_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FockError {
    #[error("number state |{n}⟩ exceeds truncation N_max = {nmax}")]
    OutOfRange { n: usize, nmax: usize },
    #[error("truncation at N_max = {nmax} loses {deficit:e} of the norm, above tolerance {eps:e}")]
    TruncationInsufficient { nmax: usize, deficit: f64, eps: f64 },
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("{states} states but {coefficients} coefficients")]
    LengthMismatch { states: usize, coefficients: usize },
    #[error("superposition of no states")]
    NoStates,
    #[error("zero vector cannot be normalized")]
    ZeroVector,
    #[error("state is not normalized: squared norm {norm_sqr} differs from 1 by more than {eps:e}")]
    Unnormalized { norm_sqr: f64, eps: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct FockState {
    amplitudes: Vec<Complex64>,
    label: String,
}

impl FockState {
    /// A state with the given amplitudes c_0..c_{N_max}. Not normalized.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>, label: impl Into<String>) -> FockState {
        assert!(!amplitudes.is_empty(), "a state needs at least the vacuum amplitude");
        FockState {
            amplitudes,
            label: label.into(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.amplitudes.len() - 1
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.iter().all(|c| *c == Complex64::new(0.0, 0.0))
    }

    pub fn renormalize(&self) -> Result<FockState, FockError> {
        let norm = self.norm_sqr().sqrt();
        if norm == 0.0 {
            return Err(FockError::ZeroVector);
        }
        Ok(FockState {
            amplitudes: self.amplitudes.iter().map(|c| c / norm).collect(),
            label: self.label.clone(),
        })
    }

    /// ⟨self|other⟩
    pub fn inner(&self, other: &FockState) -> Result<Complex64, FockError> {
        if self.truncation() != other.truncation() {
            return Err(FockError::TruncationMismatch(self.truncation(), other.truncation()));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    fn require_normalized(&self) -> Result<(), FockError> {
        let norm_sqr = self.norm_sqr();
        if (norm_sqr - 1.0).abs() > DEFAULT_EPS {
            return Err(FockError::Unnormalized {
                norm_sqr,
                eps: DEFAULT_EPS,
            });
        }
        Ok(())
    }
}

pub fn number_state(n: usize, nmax: usize) -> Result<FockState, FockError> {
    if n > nmax {
        return Err(FockError::OutOfRange { n, nmax });
    }
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); nmax + 1];
    amplitudes[n] = Complex64::new(1.0, 0.0);
    Ok(FockState::from_amplitudes(amplitudes, format!("|{n}⟩")))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Coherent {
    /// Truncated, not renormalized.
    pub state: FockState,
    /// 1 − Σ|c_n|² over the kept terms.
    pub deficit: f64,
}

/// The coherent state |z⟩ = e^{−|z|²/2} Σ zⁿ/√(n!) |n⟩ truncated at
/// `nmax`. Fails when the dropped tail carries more than `eps` of the norm.
pub fn coherent(z: Complex64, nmax: usize, eps: f64) -> Result<Coherent, FockError> {
    let mut amplitudes = Vec::with_capacity(nmax + 1);
    let mut c = Complex64::new((-0.5 * z.norm_sqr()).exp(), 0.0);
    amplitudes.push(c);
    for n in 1..=nmax {
        c = c * z / (n as f64).sqrt();
        amplitudes.push(c);
    }
    let state = FockState::from_amplitudes(amplitudes, format!("|z={z}⟩"));
    let deficit = 1.0 - state.norm_sqr();
    if deficit > eps {
        return Err(FockError::TruncationInsufficient { nmax, deficit, eps });
    }
    Ok(Coherent { state, deficit })
}

/// Normalized linear combination Σ cᵢ|ψᵢ⟩.
pub fn superpose(states: &[FockState], coefficients: &[Complex64]) -> Result<FockState, FockError> {
    if states.len() != coefficients.len() {
        return Err(FockError::LengthMismatch {
            states: states.len(),
            coefficients: coefficients.len(),
        });
    }
    let first = states.first().ok_or(FockError::NoStates)?;
    let dim = first.amplitudes.len();
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
    for (s, c) in states.iter().zip(coefficients) {
        if s.amplitudes.len() != dim {
            return Err(FockError::TruncationMismatch(first.truncation(), s.truncation()));
        }
        for (acc, a) in amplitudes.iter_mut().zip(&s.amplitudes) {
            *acc += c * a;
        }
    }
    let label = states
        .iter()
        .zip(coefficients)
        .map(|(s, c)| format!("({c}){}", s.label))
        .collect::<Vec<_>>()
        .join(" + ");
    FockState::from_amplitudes(amplitudes, label).renormalize()
}

#[derive(Debug, Clone, PartialEq)]
pub struct LadderResult {
    /// Unnormalized image of the input.
    pub state: FockState,
    /// Squared amplitude pushed past N_max and dropped (creation only).
    pub leakage: f64,
    pub is_zero: bool,
}

pub fn apply_creation(s: &FockState) -> LadderResult {
    let dim = s.amplitudes.len();
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for n in 0..dim - 1 {
        out[n + 1] = s.amplitudes[n] * ((n + 1) as f64).sqrt();
    }
    let top = dim - 1;
    let leakage = (s.amplitudes[top] * (dim as f64).sqrt()).norm_sqr();
    let state = FockState::from_amplitudes(out, format!("a†{}", s.label));
    LadderResult {
        is_zero: state.is_zero(),
        state,
        leakage,
    }
}

pub fn apply_annihilation(s: &FockState) -> LadderResult {
    let dim = s.amplitudes.len();
    let mut out = vec![Complex64::new(0.0, 0.0); dim];
    for n in 1..dim {
        out[n - 1] = s.amplitudes[n] * (n as f64).sqrt();
    }
    let state = FockState::from_amplitudes(out, format!("a{}", s.label));
    LadderResult {
        is_zero: state.is_zero(),
        state,
        leakage: 0.0,
    }
}

/// ⟨ψ|a†a|ψ⟩ through the ladder operators.
pub fn ladder_number_expectation(s: &FockState) -> f64 {
    let lowered = apply_annihilation(s).state;
    let raised = apply_creation(&lowered).state;
    s.inner(&raised).expect("same truncation").re
}

/// P(n) = |c_n|².
pub fn number_distribution(s: &FockState) -> Result<Vec<f64>, FockError> {
    s.require_normalized()?;
    Ok(s.amplitudes.iter().map(|c| c.norm_sqr()).collect())
}

pub fn expected_number(s: &FockState) -> Result<f64, FockError> {
    Ok(number_distribution(s)?
        .iter()
        .enumerate()
        .map(|(n, p)| n as f64 * p)
        .sum())
}

pub fn number_variance(s: &FockState) -> Result<f64, FockError> {
    let p = number_distribution(s)?;
    let mean: f64 = p.iter().enumerate().map(|(n, p)| n as f64 * p).sum();
    let second: f64 = p.iter().enumerate().map(|(n, p)| (n * n) as f64 * p).sum();
    Ok(second - mean * mean)
}

/// ⟨H⟩ = ω(⟨N⟩ + ½).
pub fn mode_energy(s: &FockState, omega: f64) -> Result<f64, FockError> {
    Ok(omega * (expected_number(s)? + 0.5))
}

/// The photon number n with P(n) ≥ 1 − tol, if any.
pub fn is_number_eigenstate(s: &FockState, tol: f64) -> Option<usize> {
    let norm = s.norm_sqr();
    if norm == 0.0 {
        return None;
    }
    s.amplitudes
        .iter()
        .position(|c| c.norm_sqr() / norm >= 1.0 - tol)
}

/// The distribution as CSV with header `n,probability`.
pub fn distribution_csv(s: &FockState) -> Result<String, FockError> {
    let mut out = String::from("n,probability\n");
    for (n, p) in number_distribution(s)?.iter().enumerate() {
        let _ = writeln!(out, "{n},{p:e}");
    }
    Ok(out)
}

/// Which reading of an indefinite-number state a bridge implements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// The state describes a definite but unknown number of photons.
    StatisticalMixture,
    /// The system has no definite number of photons at all.
    IndefiniteNumber,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bridge {
    #[serde(skip)]
    pub structure: Structure,
    pub label: String,
    /// Number of photon PTs placed under `alpha`.
    pub photons: usize,
    pub definite_number: Option<usize>,
    pub mean_number: f64,
    pub reading: Reading,
    pub classification: ClassificationReport,
}

pub const WHOLE: &str = "alpha";
pub const COLLECTING_SET: &str = "parts_of_alpha";

fn photon_structure(photons: usize, with_set: bool) -> Structure {
    let mut names = vec![WHOLE.to_string()];
    names.extend((1..=photons).map(|i| format!("photon{i}")));
    let mut is_set = vec![false; names.len()];
    let mut parthood = vec![(0, 0)];
    for i in 1..=photons {
        parthood.push((i, i));
        parthood.push((i, 0));
    }
    let mut membership = Vec::new();
    if with_set {
        let set = names.len();
        names.push(COLLECTING_SET.to_string());
        is_set.push(true);
        membership = (0..set).map(|m| (m, set)).collect();
    }
    Structure::from_indices(names, is_set, membership, parthood)
}

/// Renders a state as a structure and classifies its whole PT.
///
/// A state with definite number n yields `alpha`, n photons and a set
/// collecting `alpha`'s parts. Any other state yields round(⟨N⟩) photons
/// (ties to even) and no collecting set.
pub fn to_structure(s: &FockState, tol: f64) -> Result<Bridge, FockError> {
    let norm_sqr = s.norm_sqr();
    if norm_sqr == 0.0 {
        return Err(FockError::ZeroVector);
    }
    let mean_number: f64 = s
        .amplitudes
        .iter()
        .enumerate()
        .map(|(n, c)| n as f64 * c.norm_sqr())
        .sum::<f64>()
        / norm_sqr;
    let definite_number = is_number_eigenstate(s, tol);
    let photons = definite_number.unwrap_or_else(|| mean_number.round_ties_even() as usize);
    let structure = photon_structure(photons, definite_number.is_some());
    let classification = classify(&structure, WHOLE, None).expect("alpha is a PT of the bridge");
    Ok(Bridge {
        structure,
        label: s.label.clone(),
        photons,
        definite_number,
        mean_number,
        reading: Reading::IndefiniteNumber,
        classification,
    })
}
