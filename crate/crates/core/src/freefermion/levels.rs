//! Analytic many-body spectra of XX/XY chains.
//!
//! Periodic chains split into the even and odd fermion-number sectors. The even
//! sector (`ν = +1`) uses the odd momenta `k = 1, 3, …, n−1`, each paired with
//! `2n − k`; the odd sector (`ν = −1`) uses the boundary modes `k = 0, n` and the
//! pairs `k = 2, 4, …, n−2`. A pair with single-mode energy `2ε_k` contributes
//! `−2ε_k` (empty), `+2ε_k` (both filled) or `0` (one filled); a boundary mode
//! contributes `∓ε_k`. Only patterns whose fermion number matches the sector
//! parity survive the projection.

use std::f64::consts::PI;

use super::modes::ModeData;
use crate::error::{Error, Result};
use crate::spin::Boundary;
use crate::tol::ENUMERATION_CAP;

#[derive(Clone, Debug, PartialEq)]
pub struct Level {
    pub energy: f64,
    /// Eigenvalue of `ν = ⊗σᶻ`: `+1` for an even number of fermions.
    pub parity: i8,
    /// `n − 2·N_f` when the total `S_z` is conserved.
    pub sz: Option<i32>,
    /// Occupied (quasi-)particle modes. Periodic: momenta `k ∈ [0, 2n)`; open: `k ∈ [1, n]`.
    pub occupation: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LevelSet {
    pub n: usize,
    pub levels: Vec<Level>,
}

impl LevelSet {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// All energies in ascending order.
    pub fn energies(&self) -> Vec<f64> {
        let mut e: Vec<f64> = self.levels.iter().map(|l| l.energy).collect();
        e.sort_by(f64::total_cmp);
        e
    }

    pub fn ground(&self) -> Option<&Level> {
        self.levels.iter().min_by(|a, b| a.energy.total_cmp(&b.energy))
    }

    pub fn count_in_sector(&self, parity: i8) -> usize {
        self.levels.iter().filter(|l| l.parity == parity).count()
    }

    /// Lowest energy among levels with the given `S_z`.
    pub fn lowest_with_sz(&self, sz: i32) -> Option<f64> {
        self.levels
            .iter()
            .filter(|l| l.sz == Some(sz))
            .map(|l| l.energy)
            .min_by(f64::total_cmp)
    }
}

fn check_even(n: usize) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidChain(format!(
            "the free-fermion spectrum needs an even number of sites ≥ 2, got {n}"
        )));
    }
    Ok(())
}

fn check_enumerable(n: usize) -> Result<()> {
    if n > ENUMERATION_CAP {
        return Err(Error::TooLargeForFullEnumeration {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// Every level of the periodic XX chain `J Σ(σˣσˣ + σʸσʸ) + h Σσᶻ`.
pub fn xx_levels_periodic(n: usize, j: f64, h: f64) -> Result<LevelSet> {
    periodic_levels(n, j, j, h, true)
}

/// Every level of the periodic XY chain. `S_z` labels are absent since the
/// pairing terms do not conserve it.
pub fn xy_levels_periodic(n: usize, jx: f64, jy: f64, h: f64) -> Result<LevelSet> {
    periodic_levels(n, jx, jy, h, jx == jy)
}

fn periodic_levels(n: usize, jx: f64, jy: f64, h: f64, conserves_sz: bool) -> Result<LevelSet> {
    check_even(n)?;
    check_enumerable(n)?;
    let mut levels = Vec::with_capacity(1 << n);
    let even_pairs: Vec<usize> = (1..n).step_by(2).collect();
    let odd_pairs: Vec<usize> = (2..n).step_by(2).collect();
    enumerate_sector(n, jx, jy, h, &even_pairs, &[], 0, conserves_sz, &mut levels);
    enumerate_sector(n, jx, jy, h, &odd_pairs, &[0, n], 1, conserves_sz, &mut levels);
    Ok(LevelSet { n, levels })
}

#[allow(clippy::too_many_arguments)]
fn enumerate_sector(
    n: usize,
    jx: f64,
    jy: f64,
    h: f64,
    pairs: &[usize],
    singles: &[usize],
    parity_bit: usize,
    conserves_sz: bool,
    out: &mut Vec<Level>,
) {
    let pair_modes: Vec<ModeData> = pairs.iter().map(|&k| ModeData::new(n, k, jx, jy, h)).collect();
    let single_modes: Vec<ModeData> = singles.iter().map(|&k| ModeData::new(n, k, jx, jy, h)).collect();
    let total = 4usize.pow(pairs.len() as u32) << singles.len();
    for code in 0..total {
        let mut energy = 0.0;
        let mut occupation = Vec::new();
        let mut rest = code;
        for (s, m) in single_modes.iter().enumerate() {
            if rest & 1 == 1 {
                energy += m.epsilon;
                occupation.push(singles[s]);
            } else {
                energy -= m.epsilon;
            }
            rest >>= 1;
        }
        for (p, m) in pair_modes.iter().enumerate() {
            let k = pairs[p];
            // without pairing the block is diagonal in the bare occupations
            let e = 2.0 * if m.delta == 0.0 { m.epsilon } else { m.quasi_energy() };
            match rest & 3 {
                0 => energy -= e,
                1 => occupation.push(k),
                2 => occupation.push(2 * n - k),
                _ => {
                    energy += e;
                    occupation.push(k);
                    occupation.push(2 * n - k);
                }
            }
            rest >>= 2;
        }
        if occupation.len() % 2 != parity_bit {
            continue;
        }
        occupation.sort_unstable();
        out.push(Level {
            energy,
            parity: if parity_bit == 0 { 1 } else { -1 },
            sz: conserves_sz.then(|| n as i32 - 2 * occupation.len() as i32),
            occupation,
        });
    }
}

/// Single-particle energies `λ_k = −2h − 4J cos(πk/(n+1))`, `k = 1..=n`, of the open XX chain.
pub fn open_mode_energies(n: usize, j: f64, h: f64) -> Vec<f64> {
    (1..=n)
        .map(|k| -2.0 * h - 4.0 * j * (PI * k as f64 / (n + 1) as f64).cos())
        .collect()
}

/// Every level of the open XX chain: `E = nh + Σ_occupied λ_k`.
pub fn xx_levels_open(n: usize, j: f64, h: f64) -> Result<LevelSet> {
    if n < 2 {
        return Err(Error::InvalidChain(format!("need at least 2 sites, got {n}")));
    }
    check_enumerable(n)?;
    let lam = open_mode_energies(n, j, h);
    let levels = (0..1usize << n)
        .map(|code| {
            let occupation: Vec<usize> = (0..n).filter(|b| code >> b & 1 == 1).map(|b| b + 1).collect();
            let energy = n as f64 * h + occupation.iter().map(|&k| lam[k - 1]).sum::<f64>();
            let nf = occupation.len();
            Level {
                energy,
                parity: if nf.is_multiple_of(2) { 1 } else { -1 },
                sz: Some(n as i32 - 2 * nf as i32),
                occupation,
            }
        })
        .collect();
    Ok(LevelSet { n, levels })
}

/// Ground and first excited level of every `S_z` sector of an XX chain, for
/// sizes beyond full enumeration.
pub fn xx_lowest_levels(n: usize, j: f64, h: f64, boundary: Boundary) -> Result<LevelSet> {
    let mut levels = Vec::with_capacity(2 * (n + 1));
    match boundary {
        Boundary::Periodic => {
            check_even(n)?;
            // momenta for even / odd fermion number
            let spectrum = |odd_nf: bool| -> Vec<(f64, usize)> {
                let mut v: Vec<(f64, usize)> = (0..2 * n)
                    .filter(|k| (k % 2 == 0) == odd_nf)
                    .map(|k| (2.0 * ModeData::new(n, k, j, j, h).epsilon, k))
                    .collect();
                v.sort_by(|a, b| a.0.total_cmp(&b.0));
                v
            };
            let (even, odd) = (spectrum(false), spectrum(true));
            for nf in 0..=n {
                let sp = if nf % 2 == 0 { &even } else { &odd };
                push_lowest(n, h, nf, sp, &mut levels);
            }
        }
        Boundary::Open => {
            if n < 2 {
                return Err(Error::InvalidChain(format!("need at least 2 sites, got {n}")));
            }
            let mut sp: Vec<(f64, usize)> = open_mode_energies(n, j, h)
                .into_iter()
                .enumerate()
                .map(|(i, e)| (e, i + 1))
                .collect();
            sp.sort_by(|a, b| a.0.total_cmp(&b.0));
            for nf in 0..=n {
                push_lowest(n, h, nf, &sp, &mut levels);
            }
        }
    }
    Ok(LevelSet { n, levels })
}

fn push_lowest(n: usize, h: f64, nf: usize, sp: &[(f64, usize)], out: &mut Vec<Level>) {
    let base = n as f64 * h;
    let parity = if nf.is_multiple_of(2) { 1 } else { -1 };
    let sz = Some(n as i32 - 2 * nf as i32);
    let mut occ: Vec<usize> = sp[..nf].iter().map(|p| p.1).collect();
    let e0 = base + sp[..nf].iter().map(|p| p.0).sum::<f64>();
    occ.sort_unstable();
    out.push(Level {
        energy: e0,
        parity,
        sz,
        occupation: occ.clone(),
    });
    if nf > 0 && nf < sp.len() {
        let mut ex: Vec<usize> = occ.into_iter().filter(|&k| k != sp[nf - 1].1).collect();
        ex.push(sp[nf].1);
        ex.sort_unstable();
        out.push(Level {
            energy: e0 - sp[nf - 1].0 + sp[nf].0,
            parity,
            sz,
            occupation: ex,
        });
    }
}
