//! Gate-level simulation of the ancilla interferometer that reads out `C_n`
//! of a real state.
//!
//! The ancilla (prepared in `|+⟩`) is an extra most-significant qubit. Each
//! system qubit receives a `−iσʸ` controlled on the ancilla, the ancilla is
//! then measured in the X basis, and `Prob(+) − Prob(−) = Re⟨ψ|ω|ψ⟩`.

use num_complex::Complex64;

use super::state::StateVector;
use crate::error::{Error, Result};

const REALITY_TOL: f64 = 1e-12;

pub fn measurement_protocol(psi: &StateVector) -> Result<f64> {
    let max_imag = psi.max_imag();
    if max_imag > REALITY_TOL {
        return Err(Error::NonRealState { max_imag });
    }
    let psi = psi.clone().normalized();
    let n = psi.n();
    let total = n + 1;
    let dim = 1usize << total;
    let s = std::f64::consts::FRAC_1_SQRT_2;

    // |+⟩ ⊗ ψ
    let mut reg = vec![Complex64::new(0.0, 0.0); dim];
    for (b, &a) in psi.amps().iter().enumerate() {
        reg[b] = a * s;
        reg[b | (1 << n)] = a * s;
    }
    let neg_i_sy = [[0.0, -1.0], [1.0, 0.0]];
    for q in 1..total {
        apply_controlled(&mut reg, total, 0, q, neg_i_sy);
    }
    apply_single(&mut reg, total, 0, [[s, s], [s, -s]]);

    let anc = 1usize << n;
    let p_plus: f64 = reg.iter().enumerate().filter(|(b, _)| b & anc == 0).map(|(_, z)| z.norm_sqr()).sum();
    let p_minus: f64 = reg.iter().enumerate().filter(|(b, _)| b & anc != 0).map(|(_, z)| z.norm_sqr()).sum();
    Ok(p_plus - p_minus)
}

fn bit(total: usize, q: usize) -> usize {
    1 << (total - 1 - q)
}

fn apply_single(reg: &mut [Complex64], total: usize, q: usize, g: [[f64; 2]; 2]) {
    let m = bit(total, q);
    for b in 0..reg.len() {
        if b & m == 0 {
            let (a0, a1) = (reg[b], reg[b | m]);
            reg[b] = a0 * g[0][0] + a1 * g[0][1];
            reg[b | m] = a0 * g[1][0] + a1 * g[1][1];
        }
    }
}

fn apply_controlled(reg: &mut [Complex64], total: usize, control: usize, q: usize, g: [[f64; 2]; 2]) {
    let c = bit(total, control);
    let m = bit(total, q);
    for b in 0..reg.len() {
        if b & c != 0 && b & m == 0 {
            let (a0, a1) = (reg[b], reg[b | m]);
            reg[b] = a0 * g[0][0] + a1 * g[0][1];
            reg[b | m] = a0 * g[1][0] + a1 * g[1][1];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ghz_and_product() {
        assert!((measurement_protocol(&StateVector::ghz(4)).unwrap().abs() - 1.0).abs() < 1e-14);
        assert!(measurement_protocol(&StateVector::basis(4, 0)).unwrap().abs() < 1e-14);
    }

    #[test]
    fn rejects_complex_state() {
        let psi = StateVector::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]).unwrap();
        assert!(matches!(measurement_protocol(&psi), Err(Error::NonRealState { .. })));
    }
}
