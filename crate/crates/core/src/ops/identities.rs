//! Exact verification of the structural identities satisfied by `B_{w,V}`.

use crate::check::CheckReport;
use crate::error::Result;
use crate::linalg::rational::{qf, Rational};
use crate::linalg::RationalMatrix;
use crate::repr::{GroupLift, WeightModule};
use crate::roots::{RootSystem, Vector, WeylElement};

use super::bbb::{bb_alpha, bb_w, inversion_scalar};
use super::casimir::{omega_slots, slot_h, slot_weight};
use super::fusion::fusion_hat;

/// `B_{w, W⊗V}(lambda)` against
/// `w^{-1}(J^(w lambda)) (B_{w,W}(lambda - h^{(2)}/2) ⊗ B_{w,V}(lambda + h^{(1)}/2)) J^(lambda)^{-1}`.
pub fn verify_property_vii(
    w_mod: &WeightModule,
    v_mod: &WeightModule,
    rs: &RootSystem,
    w: &WeylElement,
    lambda: &[Rational],
) -> Result<CheckReport> {
    let m = WeightModule::tensor(&[w_mod.clone(), v_mod.clone()])?;
    let split = w_mod.num_factors();
    let first = 0..split;
    let second = split..m.num_factors();
    let lhs = bb_w(&m, rs, w, lambda)?;

    let lift = GroupLift::new(&m, rs, w)?;
    let j_w = fusion_hat(&m, &first, &second, &w.apply(lambda))?;
    let j_l = fusion_hat(&m, &first, &second, lambda)?;
    let j_l_inv = j_l.inverse()?;

    let half = qf(1, 2);
    let dv = v_mod.dim();
    let mut middle = RationalMatrix::zeros(m.dim(), m.dim());
    let mut cache_w: Vec<(Vector, RationalMatrix)> = Vec::new();
    let mut cache_v: Vec<(Vector, RationalMatrix)> = Vec::new();
    for p in 0..w_mod.dim() {
        let nu1 = w_mod.weight(p).clone();
        let arg_v: Vector = lambda
            .iter()
            .zip(&nu1)
            .map(|(l, n)| l + &half * n)
            .collect();
        let bv = cached(&mut cache_v, &arg_v, |a| bb_w(v_mod, rs, w, a))?;
        for q in 0..dv {
            let nu2 = v_mod.weight(q).clone();
            let arg_w: Vector = lambda
                .iter()
                .zip(&nu2)
                .map(|(l, n)| l - &half * n)
                .collect();
            let bw = cached(&mut cache_w, &arg_w, |a| bb_w(w_mod, rs, w, a))?;
            let col = p * dv + q;
            for p2 in 0..w_mod.dim() {
                let x = &bw[(p2, p)];
                if num_traits::Zero::is_zero(x) {
                    continue;
                }
                for q2 in 0..dv {
                    let y = &bv[(q2, q)];
                    if !num_traits::Zero::is_zero(y) {
                        middle[(p2 * dv + q2, col)] = x * y;
                    }
                }
            }
        }
    }
    let rhs = &(&lift.act_inverse(&j_w) * &middle) * &j_l_inv;
    Ok(CheckReport::compare(&lhs, &rhs))
}

fn cached(
    cache: &mut Vec<(Vector, RationalMatrix)>,
    key: &Vector,
    make: impl FnOnce(&Vector) -> Result<RationalMatrix>,
) -> Result<RationalMatrix> {
    if let Some((_, m)) = cache.iter().find(|(k, _)| k == key) {
        return Ok(m.clone());
    }
    let m = make(key)?;
    cache.push((key.clone(), m.clone()));
    Ok(m)
}

/// `(w^{-1}(Omega^-) + lambda^{(2)}) B = B (Omega^- + lambda^{(2)})` and `Omega B = B Omega`
/// on `m = W ⊗ V`, where `W` is the first `split` factors.
pub fn verify_lemma_rb(
    m: &WeightModule,
    split: usize,
    rs: &RootSystem,
    w: &WeylElement,
    lambda: &[Rational],
) -> Result<CheckReport> {
    let first = 0..split;
    let second = split..m.num_factors();
    let b = bb_w(m, rs, w, lambda)?;
    let lift = GroupLift::new(m, rs, w)?;
    let parts = omega_slots(m, &first, &second);
    let lam2 = slot_h(m, &second, lambda);
    let left = &(&lift.act_inverse(&parts.minus) + &lam2) * &b;
    let right = &b * &(&parts.minus + &lam2);
    Ok(CheckReport::all([
        CheckReport::compare(&left, &right),
        CheckReport::compare(&(&parts.full * &b), &(&b * &parts.full)),
    ]))
}

/// `B^alpha(lambda) B^{-alpha}(lambda)` is the scalar `(lambda - nu/2, alpha^vee)/(lambda + nu/2, alpha^vee)` on `V[nu]`.
pub fn verify_inversion(
    v: &WeightModule,
    alpha: &[Rational],
    lambda: &[Rational],
) -> Result<CheckReport> {
    let neg: Vector = alpha.iter().map(|x| -x).collect();
    let prod = &bb_alpha(v, alpha, lambda)? * &bb_alpha(v, &neg, lambda)?;
    let mut d = Vec::with_capacity(v.dim());
    for b in 0..v.dim() {
        d.push(inversion_scalar(alpha, v.weight(b), lambda)?);
    }
    Ok(CheckReport::compare(&prod, &RationalMatrix::diagonal(&d)))
}

/// Every weight space of `v` is preserved by `b`.
pub fn preserves_weight_spaces(v: &WeightModule, b: &RationalMatrix) -> bool {
    (0..v.dim()).all(|r| {
        (0..v.dim()).all(|c| num_traits::Zero::is_zero(&b[(r, c)]) || v.weight(r) == v.weight(c))
    })
}

/// The weight of the first slot of `m` is unchanged by `b` (used for slot-diagonal operators).
pub fn preserves_slot_weights(
    m: &WeightModule,
    slot: &std::ops::Range<usize>,
    b: &RationalMatrix,
) -> bool {
    (0..m.dim()).all(|r| {
        (0..m.dim()).all(|c| {
            num_traits::Zero::is_zero(&b[(r, c)])
                || slot_weight(m, slot, r) == slot_weight(m, slot, c)
        })
    })
}

/// Eigenvalues of `B^alpha_{L_m}` on `v_0, ..., v_m` at `(lambda, alpha^vee) = a`:
/// `prod_{j<k} (a + m/2 - j)/(a - m/2 + j)`.
pub fn sl2_product_eigenvalues(m: usize, a: &Rational) -> Vec<Rational> {
    let half_m = qf(m as i64, 2);
    (0..=m)
        .map(|k| {
            (0..k as i64).fold(qf(1, 1), |acc, j| {
                acc * (a + &half_m - qf(j, 1)) / (a - &half_m + qf(j, 1))
            })
        })
        .collect()
}

/// `B^{alpha_1}_{L_m}(lambda)` is diagonal with the product eigenvalues.
pub fn verify_sl2_product(m: usize, a: &Rational) -> Result<CheckReport> {
    let l = WeightModule::sl2_irrep(m);
    let lambda = vec![a * qf(1, 2), -a * qf(1, 2)];
    let alpha = vec![qf(1, 1), qf(-1, 1)];
    let b = bb_alpha(&l, &alpha, &lambda)?;
    Ok(CheckReport::compare(
        &b,
        &RationalMatrix::diagonal(&sl2_product_eigenvalues(m, a)),
    ))
}

/// `B^a B^{a+b} B^b = B^b B^{a+b} B^a` for simple roots `a`, `b` joined in the Dynkin diagram.
pub fn verify_braid_a2(
    v: &WeightModule,
    a: &[Rational],
    b: &[Rational],
    lambda: &[Rational],
) -> Result<CheckReport> {
    let ab: Vector = a.iter().zip(b).map(|(x, y)| x + y).collect();
    let (ba, bab, bb) = (
        bb_alpha(v, a, lambda)?,
        bb_alpha(v, &ab, lambda)?,
        bb_alpha(v, b, lambda)?,
    );
    Ok(CheckReport::compare(
        &(&(&ba * &bab) * &bb),
        &(&(&bb * &bab) * &ba),
    ))
}

/// `B^a B^b = B^b B^a` for orthogonal roots.
pub fn verify_commuting(
    v: &WeightModule,
    a: &[Rational],
    b: &[Rational],
    lambda: &[Rational],
) -> Result<CheckReport> {
    let (ba, bb) = (bb_alpha(v, a, lambda)?, bb_alpha(v, b, lambda)?);
    Ok(CheckReport::compare(&(&ba * &bb), &(&bb * &ba)))
}
