use std::str::FromStr;

use anyhow::{anyhow, bail, Result};
use num_complex::Complex64;

use zfstar_core::fock::{self, FockState};

/// A Fock state named on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum StateSpec {
    Number(usize),
    Coherent(Complex64),
    /// Equal-weight superposition of number states.
    Superpose(Vec<usize>),
}

impl FromStr for StateSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| anyhow!("expected number:N, coherent:RE[,IM] or superpose:N,M,..."))?;
        let fields: Vec<&str> = rest.split(',').map(str::trim).collect();
        match kind.trim() {
            "number" => match fields.as_slice() {
                [n] => Ok(StateSpec::Number(n.parse()?)),
                _ => bail!("number takes one photon count"),
            },
            "coherent" => match fields.as_slice() {
                [re] => Ok(StateSpec::Coherent(Complex64::new(re.parse()?, 0.0))),
                [re, im] => Ok(StateSpec::Coherent(Complex64::new(re.parse()?, im.parse()?))),
                _ => bail!("coherent takes RE or RE,IM"),
            },
            "superpose" => {
                let ns = fields.iter().map(|f| f.parse()).collect::<Result<Vec<usize>, _>>()?;
                if ns.is_empty() {
                    bail!("superpose needs at least one photon count");
                }
                Ok(StateSpec::Superpose(ns))
            }
            other => bail!("unknown state kind `{other}`"),
        }
    }
}

impl StateSpec {
    pub fn build(&self, nmax: usize) -> Result<FockState> {
        Ok(match self {
            StateSpec::Number(n) => fock::number_state(*n, nmax)?,
            StateSpec::Coherent(z) => fock::coherent(*z, nmax, fock::DEFAULT_EPS)?.state,
            StateSpec::Superpose(ns) => {
                let basis = ns
                    .iter()
                    .map(|&n| fock::number_state(n, nmax))
                    .collect::<Result<Vec<_>, _>>()?;
                let weights = vec![Complex64::new(1.0, 0.0); basis.len()];
                fock::superpose(&basis, &weights)?
            }
        })
    }
}
