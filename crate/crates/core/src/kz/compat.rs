//! Compatibility checks between the KZ operators and the dynamical operators.
//!
//! `K_i nabla_j(lambda) = nabla_j(lambda + kappa omega_i^vee) K_i` with
//! `nabla_j = kappa z_j d/dz_j - M_j` is equivalent to
//! `M_j(lambda + kappa omega) K_i - K_i M_j(lambda) = kappa (omega)^{(j)} K_i`,
//! because `z_j d/dz_j K_i = (omega)^{(j)} K_i`: the B-part does not depend on `z`.

use crate::check::CheckReport;
use crate::error::Result;
use crate::linalg::rational::{vadd, vscale, Rational};
use crate::linalg::RationalMatrix;
use crate::ops::bbb::{bb_alpha, bb_w, inversion_scalar};
use crate::repr::{GroupLift, WeightModule};
use crate::roots::{RootSystem, Vector, WeylElement};

use super::dynamical::{dyn_operator_sl, eval_at, z_power};
use super::system::{KzSystem, ZPoint};

fn shifted(lambda: &[Rational], kappa: &Rational, omega: &[Rational]) -> Vector {
    vadd(lambda, &vscale(kappa, omega))
}

/// Evaluated `K_i(z, lambda)`.
pub fn k_eval(
    v: &WeightModule,
    rs: &RootSystem,
    i: usize,
    pt: &ZPoint,
    lambda: &[Rational],
) -> Result<RationalMatrix> {
    dyn_operator_sl(v, rs, i, lambda)?.eval(pt)
}

pub fn check_kz_dyn_compat(
    v: &WeightModule,
    rs: &RootSystem,
    i: usize,
    j: usize,
    pt: &ZPoint,
    lambda: &[Rational],
    kappa: &Rational,
) -> Result<CheckReport> {
    let sys = KzSystem::new(v);
    let z = pt.z();
    let omega = rs.fundamental_coweight(i);
    let k = k_eval(v, rs, i, pt, lambda)?;
    let lhs =
        &(&sys.m(j, &z, &shifted(lambda, kappa, omega))? * &k) - &(&k * &sys.m(j, &z, lambda)?);
    let rhs = (&v.factor_h(j, omega) * &k).scale(kappa);
    Ok(CheckReport::compare(&lhs, &rhs))
}

/// `B_w (sum_k r^{(j,k)} + lambda^{(j)}) = (sum_k w^{-1}(r)^{(j,k)} + lambda^{(j)}) B_w`,
/// together with the residue identities `[B_w, Omega^{(j,k)}] = 0`.
pub fn check_lemma_nice(
    v: &WeightModule,
    rs: &RootSystem,
    j: usize,
    w: &WeylElement,
    z: &[Rational],
    lambda: &[Rational],
) -> Result<CheckReport> {
    let sys = KzSystem::new(v);
    let b = bb_w(v, rs, w, lambda)?;
    let lift = GroupLift::new(v, rs, w)?;
    let lam_j = v.factor_h(j, lambda);
    let mut rotated = lam_j.clone();
    let mut reports = Vec::new();
    for k in (0..sys.n_points()).filter(|&k| k != j) {
        rotated = &rotated + &lift.act_inverse(&sys.r(j, k, z)?);
        let om = &sys.omega(j, k).full;
        reports.push(CheckReport::compare(&(&b * om), &(om * &b)));
    }
    let lhs = &b * &sys.m(j, z, lambda)?;
    let rhs = &rotated * &b;
    reports.insert(0, CheckReport::compare(&lhs, &rhs));
    Ok(CheckReport::all(reports))
}

/// `K_i(lambda + kappa omega_j) K_j(lambda) = K_j(lambda + kappa omega_i) K_i(lambda)`.
pub fn check_dyn_dyn_compat(
    v: &WeightModule,
    rs: &RootSystem,
    i: usize,
    j: usize,
    pt: &ZPoint,
    lambda: &[Rational],
    kappa: &Rational,
) -> Result<CheckReport> {
    let wi = rs.fundamental_coweight(i);
    let wj = rs.fundamental_coweight(j);
    let lhs = &k_eval(v, rs, i, pt, &shifted(lambda, kappa, wj))? * &k_eval(v, rs, j, pt, lambda)?;
    let rhs = &k_eval(v, rs, j, pt, &shifted(lambda, kappa, wi))? * &k_eval(v, rs, i, pt, lambda)?;
    Ok(CheckReport::compare(&lhs, &rhs))
}

/// `z^{-omega_i} r(z_j/z_k)^{(j,k)} z^{omega_i} = w_[i]^{-1}(r(z_j/z_k))^{(j,k)}` for every pair.
pub fn check_r_conjugation(
    v: &WeightModule,
    rs: &RootSystem,
    i: usize,
    pt: &ZPoint,
) -> Result<CheckReport> {
    let sys = KzSystem::new(v);
    let z = pt.z();
    let zp = eval_at(&z_power(v, rs.fundamental_coweight(i)), pt)?;
    let zp_inv = zp.inverse()?;
    let lift = GroupLift::new(v, rs, &rs.w_bracket(i)?)?;
    let mut reports = Vec::new();
    for j in 0..sys.n_points() {
        for k in (0..sys.n_points()).filter(|&k| k != j) {
            let r = sys.r(j, k, &z)?;
            reports.push(CheckReport::compare(
                &(&(&zp_inv * &r) * &zp),
                &lift.act_inverse(&r),
            ));
        }
    }
    Ok(CheckReport::all(reports))
}

/// The `pi_i`-twisted KZ matrix equals `M_j`.
pub fn check_pi_invariance(
    v: &WeightModule,
    rs: &RootSystem,
    i: usize,
    j: usize,
    pt: &ZPoint,
    lambda: &[Rational],
) -> Result<CheckReport> {
    let sys = KzSystem::new(v);
    let z = pt.z();
    let zp = eval_at(&z_power(v, rs.fundamental_coweight(i)), pt)?;
    let zp_inv = zp.inverse()?;
    let lift = GroupLift::new(v, rs, &rs.w_bracket(i)?)?;
    let mut rotated = RationalMatrix::zeros(v.dim(), v.dim());
    for k in (0..sys.n_points()).filter(|&k| k != j) {
        rotated = &rotated + &lift.act_inverse(&sys.r(j, k, &z)?);
    }
    let twisted = &(&(&zp * &rotated) * &zp_inv) + &v.factor_h(j, lambda);
    Ok(CheckReport::compare(&twisted, &sys.m(j, &z, lambda)?))
}

/// `e_a - e_b` in `Q^N` (0-based).
fn type_a_root(n: usize, a: usize, b: usize) -> Vector {
    (0..n)
        .map(|k| {
            if k == a {
                Rational::from_integer(1.into())
            } else if k == b {
                Rational::from_integer((-1).into())
            } else {
                Rational::from_integer(0.into())
            }
        })
        .collect()
}

/// `delta_i = omega_i - omega_{i-1}` with `omega_0 = omega_N = 0`, `1 <= i <= N`.
pub fn delta(rs: &RootSystem, i: usize) -> Vector {
    let n = rs.rank() + 1;
    let zero = vec![Rational::from_integer(0.into()); n];
    let w = |k: usize| {
        if k == 0 || k == n {
            zero.clone()
        } else {
            rs.fundamental_coweight(k).clone()
        }
    };
    w(i).iter().zip(&w(i - 1)).map(|(a, b)| a - b).collect()
}

/// Inverse of `B^alpha(lambda)`, either by elimination or through `B^{-alpha}` and the scalar of
/// the inversion identity.
fn bb_inverse(
    v: &WeightModule,
    alpha: &[Rational],
    lambda: &[Rational],
    via_scalar: bool,
) -> Result<RationalMatrix> {
    if !via_scalar {
        return bb_alpha(v, alpha, lambda)?.inverse();
    }
    let neg: Vector = alpha.iter().map(|x| -x).collect();
    let mut d = Vec::with_capacity(v.dim());
    for b in 0..v.dim() {
        d.push(inversion_scalar(alpha, v.weight(b), lambda)?.recip());
    }
    Ok(bb_alpha(v, &neg, lambda)?.scale_columns(&d))
}

/// The `delta_i`-step operator built directly from root factors.
pub fn delta_step_operator(
    v: &WeightModule,
    rs: &RootSystem,
    i: usize,
    pt: &ZPoint,
    lambda: &[Rational],
    kappa: &Rational,
    via_scalar: bool,
) -> Result<RationalMatrix> {
    let n = rs.rank() + 1;
    let d = delta(rs, i);
    let up = shifted(lambda, kappa, &d);
    let mut out = RationalMatrix::identity(v.dim());
    // [B^{e_{i-1}-e_i}]^{-1} ... [B^{e_1-e_i}]^{-1}, leftmost factor first
    for a in (1..i).rev() {
        out = &out * &bb_inverse(v, &type_a_root(n, a - 1, i - 1), &up, via_scalar)?;
    }
    out = &out * &eval_at(&z_power(v, &d), pt)?;
    // B^{e_i-e_N} ... B^{e_i-e_{i+1}}
    for b in (i + 1..=n).rev() {
        out = &out * &bb_alpha(v, &type_a_root(n, i - 1, b - 1), lambda)?;
    }
    Ok(out)
}

/// `K_i(mu) K_{i-1}(mu)^{-1}` with `mu = lambda - kappa omega_{i-1}`, `K_0 = K_N = 1`.
pub fn delta_step_from_k(
    v: &WeightModule,
    rs: &RootSystem,
    i: usize,
    pt: &ZPoint,
    lambda: &[Rational],
    kappa: &Rational,
) -> Result<RationalMatrix> {
    let n = rs.rank() + 1;
    let mu = if i == 1 {
        lambda.to_vec()
    } else {
        let w = rs.fundamental_coweight(i - 1);
        lambda.iter().zip(w).map(|(l, x)| l - kappa * x).collect()
    };
    let ki = if i == n {
        RationalMatrix::identity(v.dim())
    } else {
        k_eval(v, rs, i, pt, &mu)?
    };
    let kprev = if i == 1 {
        RationalMatrix::identity(v.dim())
    } else {
        k_eval(v, rs, i - 1, pt, &mu)?
    };
    Ok(&ki * &kprev.inverse()?)
}

/// Both evaluations of the `delta_i` step agree, with and without the scalar elimination of inverses.
pub fn equivalent_form_check(
    v: &WeightModule,
    rs: &RootSystem,
    i: usize,
    pt: &ZPoint,
    lambda: &[Rational],
    kappa: &Rational,
) -> Result<CheckReport> {
    let from_k = delta_step_from_k(v, rs, i, pt, lambda, kappa)?;
    let direct = delta_step_operator(v, rs, i, pt, lambda, kappa, false)?;
    let scalar = delta_step_operator(v, rs, i, pt, lambda, kappa, true)?;
    Ok(CheckReport::all([
        CheckReport::compare(&direct, &from_k),
        CheckReport::compare(&scalar, &direct),
    ]))
}
