//! Fusion matrices from the ABRR equation.
//!
//! Writing `J^(lambda) = J(lambda - rho + (h^{(1)} + h^{(2)})/2)`, the ABRR
//! equation reads `J^ D = (D + N) J^` with the diagonal `D = lambda^{(2)} + Omega^0`
//! and `N = sum_{alpha > 0} e_{-alpha} ⊗ e_alpha`. With `J^ = 1 + L`, each entry
//! of `L` is `(N (1 + L))_{ab} / (d_b - d_a)`, solved in order of increasing
//! height of the weight drop in the first slot.

use std::ops::Range;

use num_traits::Zero;

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::linalg::rational::{as_i64, dot, fmt_vec, q, qf, Rational};
use crate::linalg::RationalMatrix;
use crate::repr::WeightModule;
use crate::roots::Vector;

use super::casimir::{omega_slots, slot_weight};

/// `rho` of sl_N in ambient coordinates.
pub fn rho_sl(n: usize) -> Vector {
    (0..n).map(|i| qf(n as i64 - 1 - 2 * i as i64, 2)).collect()
}

/// Height of `mu` if it lies in `Q^+`, via partial sums of its coordinates.
fn q_plus_height(mu: &[Rational]) -> Option<i64> {
    let mut partial = Rational::zero();
    let mut height = 0;
    for x in &mu[..mu.len() - 1] {
        partial += x;
        let c = as_i64(&partial)?;
        if c < 0 {
            return None;
        }
        height += c;
    }
    if !(partial + &mu[mu.len() - 1]).is_zero() {
        return None;
    }
    Some(height)
}

/// The pieces `D` (as a diagonal) and `N` of the ABRR equation between two slots.
pub fn abrr_pieces(
    v: &WeightModule,
    first: &Range<usize>,
    second: &Range<usize>,
    lambda: &[Rational],
) -> (Vec<Rational>, RationalMatrix) {
    let parts = omega_slots(v, first, second);
    let d: Vec<Rational> = (0..v.dim())
        .map(|b| dot(lambda, &slot_weight(v, second, b)) + &parts.zero[(b, b)])
        .collect();
    let n = &parts.minus - &parts.zero;
    (d, n)
}

/// `J^(lambda)` on the slots `first ⊗ second`.
pub fn fusion_hat(
    v: &WeightModule,
    first: &Range<usize>,
    second: &Range<usize>,
    lambda: &[Rational],
) -> Result<RationalMatrix> {
    let (d, nmat) = abrr_pieces(v, first, second, lambda);
    let dim = v.dim();
    let w1: Vec<Vector> = (0..dim).map(|b| slot_weight(v, first, b)).collect();
    let mut cells: Vec<(i64, usize, usize)> = Vec::new();
    for b in 0..dim {
        for a in 0..dim {
            if a == b || v.weight(a) != v.weight(b) {
                continue;
            }
            let drop: Vector = w1[b].iter().zip(&w1[a]).map(|(x, y)| x - y).collect();
            if let Some(h) = q_plus_height(&drop) {
                if h > 0 {
                    cells.push((h, a, b));
                }
            }
        }
    }
    cells.sort();
    let mut l = RationalMatrix::zeros(dim, dim);
    for (_, a, b) in cells {
        let mut rhs = nmat[(a, b)].clone();
        for c in 0..dim {
            let n_ac = &nmat[(a, c)];
            if !n_ac.is_zero() && !l[(c, b)].is_zero() {
                rhs += n_ac * &l[(c, b)];
            }
        }
        if rhs.is_zero() {
            continue;
        }
        let den = &d[b] - &d[a];
        if den.is_zero() {
            return Err(Error::ResonantLambda(format!(
                "lambda = {}, entry ({a}, {b})",
                fmt_vec(lambda)
            )));
        }
        l[(a, b)] = rhs / den;
    }
    Ok(&RationalMatrix::identity(dim) + &l)
}

/// `J^ D - (D + N) J^`, which must vanish.
pub fn abrr_residual(
    v: &WeightModule,
    first: &Range<usize>,
    second: &Range<usize>,
    lambda: &[Rational],
    jhat: &RationalMatrix,
) -> RationalMatrix {
    let (d, nmat) = abrr_pieces(v, first, second, lambda);
    let dm = RationalMatrix::diagonal(&d);
    &(jhat * &dm) - &(&(&dm + &nmat) * jhat)
}

/// Fusion matrix `J_{WV}(lambda)` on `v = W ⊗ V`, where `W` occupies the first `split` factors.
pub fn fusion_j(v: &WeightModule, split: usize, lambda: &[Rational]) -> Result<RationalMatrix> {
    let first = 0..split;
    let second = split..v.num_factors();
    let rho = rho_sl(v.n());
    let half = qf(1, 2);
    let mut out = RationalMatrix::zeros(v.dim(), v.dim());
    for (nu, idx) in v.weight_spaces() {
        // J(mu) on V[nu] is J^(mu + rho - nu/2)
        let arg: Vector = lambda
            .iter()
            .zip(&rho)
            .zip(&nu)
            .map(|((l, r), n)| l + r - &half * n)
            .collect();
        let jh = fusion_hat(v, &first, &second, &arg)?;
        for &b in &idx {
            for a in 0..v.dim() {
                out[(a, b)] = jh[(a, b)].clone();
            }
        }
    }
    Ok(out)
}

/// `J = 1 + L` with `L` lowering the first-slot weight and raising the second.
pub fn is_unipotent_lower(v: &WeightModule, split: usize, j: &RationalMatrix) -> bool {
    let first = 0..split;
    let second = split..v.num_factors();
    for a in 0..v.dim() {
        for b in 0..v.dim() {
            let x = &j[(a, b)];
            if a == b {
                if *x != q(1) {
                    return false;
                }
                continue;
            }
            if x.is_zero() {
                continue;
            }
            let drop: Vector = slot_weight(v, &first, b)
                .iter()
                .zip(&slot_weight(v, &first, a))
                .map(|(p, r)| p - r)
                .collect();
            let rise: Vector = slot_weight(v, &second, a)
                .iter()
                .zip(&slot_weight(v, &second, b))
                .map(|(p, r)| p - r)
                .collect();
            if !matches!(q_plus_height(&drop), Some(h) if h > 0)
                || !matches!(q_plus_height(&rise), Some(h) if h > 0)
            {
                return false;
            }
        }
    }
    true
}

/// Solve and verify the ABRR residual in one step.
pub fn fusion_checked(
    v: &WeightModule,
    split: usize,
    lambda: &[Rational],
) -> Result<(RationalMatrix, CheckReport)> {
    let first = 0..split;
    let second = split..v.num_factors();
    let jh = fusion_hat(v, &first, &second, lambda)?;
    let res = abrr_residual(v, &first, &second, lambda, &jh);
    let zero = RationalMatrix::zeros(v.dim(), v.dim());
    Ok((jh, CheckReport::compare(&res, &zero)))
}
