use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Periodic,
    Open,
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::Periodic => "periodic",
            Boundary::Open => "open",
        })
    }
}

impl FromStr for Boundary {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "periodic" | "pbc" | "cyclic" => Ok(Boundary::Periodic),
            "open" | "obc" => Ok(Boundary::Open),
            other => Err(Error::Parse(format!("unknown boundary '{other}'"))),
        }
    }
}

/// An XYZ chain in a uniform longitudinal field:
/// `H = Σ_bonds (jx σˣσˣ + jy σʸσʸ + jz σᶻσᶻ) + h Σ_j σᶻ_j`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainSpec {
    pub n: usize,
    pub jx: f64,
    pub jy: f64,
    pub jz: f64,
    pub h: f64,
    pub boundary: Boundary,
}

impl ChainSpec {
    /// Isotropic XX chain, `jx = jy = j`.
    pub fn xx(n: usize, j: f64, h: f64, boundary: Boundary) -> Self {
        Self::xy(n, j, 0.0, h, boundary)
    }

    /// XY chain with mean coupling `j` and anisotropy `gamma = (jx − jy)/(2j)`.
    pub fn xy(n: usize, j: f64, gamma: f64, h: f64, boundary: Boundary) -> Self {
        Self {
            n,
            jx: j * (1.0 + gamma),
            jy: j * (1.0 - gamma),
            jz: 0.0,
            h,
            boundary,
        }
    }

    pub fn xyz(n: usize, jx: f64, jy: f64, jz: f64, h: f64, boundary: Boundary) -> Self {
        Self {
            n,
            jx,
            jy,
            jz,
            h,
            boundary,
        }
    }

    pub fn with_field(mut self, h: f64) -> Self {
        self.h = h;
        self
    }

    /// `J = (jx + jy)/2`.
    pub fn j(&self) -> f64 {
        0.5 * (self.jx + self.jy)
    }

    /// `(jx − jy)/(2J)`, zero when `J = 0`.
    pub fn gamma(&self) -> f64 {
        let j = self.j();
        if j == 0.0 {
            0.0
        } else {
            (self.jx - self.jy) / (2.0 * j)
        }
    }

    pub fn dim(&self) -> usize {
        1usize << self.n
    }

    /// Bonds `(j, k)` as zero-based site pairs. A periodic chain of two sites
    /// carries the same bond twice.
    pub fn bonds(&self) -> Vec<(usize, usize)> {
        match self.boundary {
            Boundary::Periodic => (0..self.n).map(|l| (l, (l + 1) % self.n)).collect(),
            Boundary::Open => (0..self.n.saturating_sub(1)).map(|l| (l, l + 1)).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidChain(format!("need at least 2 sites, got {}", self.n)));
        }
        for (name, v) in [("jx", self.jx), ("jy", self.jy), ("jz", self.jz), ("h", self.h)] {
            if !v.is_finite() {
                return Err(Error::InvalidChain(format!("{name} is not finite")));
            }
        }
        Ok(())
    }

    /// Checks the preconditions of the free-fermion formulas: even `n` and no ZZ coupling.
    pub fn validate_analytic(&self) -> Result<()> {
        self.validate()?;
        if !self.n.is_multiple_of(2) {
            return Err(Error::InvalidChain(format!(
                "the free-fermion formulas need an even number of sites, got {}",
                self.n
            )));
        }
        if self.jz != 0.0 {
            return Err(Error::InvalidChain("the free-fermion formulas need jz = 0".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_round_trip() {
        let c = ChainSpec::xy(4, 1.5, 0.25, 0.0, Boundary::Open);
        assert!((c.j() - 1.5).abs() < 1e-15);
        assert!((c.gamma() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn bond_lists() {
        assert_eq!(
            ChainSpec::xx(3, 1.0, 0.0, Boundary::Periodic).bonds(),
            vec![(0, 1), (1, 2), (2, 0)]
        );
        assert_eq!(ChainSpec::xx(3, 1.0, 0.0, Boundary::Open).bonds(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn boundary_parses() {
        assert_eq!("Open".parse::<Boundary>().unwrap(), Boundary::Open);
        assert!("ring".parse::<Boundary>().is_err());
    }
}
