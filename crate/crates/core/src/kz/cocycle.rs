//! The 1-cocycle `G~_w` on the extended affine Weyl group built from the affine
//! completion `G~^{[alpha,j]} = z^{omega} B^alpha(lambda - kappa omega) z^{-omega}`, `(omega, alpha) = -j`.

use num_integer::Integer;

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::linalg::rational::{q, vscale, Rational};
use crate::linalg::PuiseuxMatrix;
use crate::ops::bbb::bb_alpha;
use crate::repr::WeightModule;
use crate::roots::affine::a_tilde_of_word;
use crate::roots::{AffineRoot, AffineWeylElement, RootSystem, Vector};

use super::dynamical::coweight_exponents;

fn combine(rs: &RootSystem, x: &[i64]) -> Vector {
    let mut out = vec![q(0); rs.ambient_dim()];
    for (i, &c) in x.iter().enumerate() {
        if c != 0 {
            for (o, w) in out.iter_mut().zip(rs.fundamental_coweight(i + 1)) {
                *o += q(c) * w;
            }
        }
    }
    out
}

/// Some `omega` in `P^vee` with `(omega, alpha) = -j`, from the extended gcd of the simple-root
/// coefficients of `alpha`.
pub fn choose_omega(rs: &RootSystem, root: &AffineRoot) -> Result<Vector> {
    let c = rs
        .integer_coords(&root.root)
        .ok_or_else(|| Error::NoIntegerSolution(format!("{root} is not in the root lattice")))?;
    let mut g = 0i64;
    let mut x = vec![0i64; c.len()];
    for (i, &ci) in c.iter().enumerate() {
        if ci == 0 {
            continue;
        }
        let e = g.extended_gcd(&ci);
        for xk in x.iter_mut() {
            *xk *= e.x;
        }
        x[i] = e.y;
        g = e.gcd;
    }
    if g.abs() != 1 {
        return Err(Error::NoIntegerSolution(format!(
            "coefficients of {root} have gcd {g}"
        )));
    }
    let scale = -root.level * g;
    let x: Vec<i64> = x.iter().map(|v| v * scale).collect();
    Ok(combine(rs, &x))
}

/// A second valid choice `omega + y` with `(y, alpha) = 0`, `y != 0`; `None` in rank one.
pub fn alternate_omega(rs: &RootSystem, root: &AffineRoot, omega: &[Rational]) -> Option<Vector> {
    let c = rs.integer_coords(&root.root)?;
    let r = c.len();
    if r < 2 {
        return None;
    }
    let mut y = vec![0i64; r];
    if let Some(i) = c.iter().position(|&v| v == 0) {
        y[i] = 1;
    } else {
        y[0] = c[1];
        y[1] = -c[0];
    }
    let shift = combine(rs, &y);
    Some(omega.iter().zip(&shift).map(|(a, b)| a + b).collect())
}

/// `z^{omega} B^alpha(lambda - kappa omega) z^{-omega}`.
pub fn cocycle_factor(
    v: &WeightModule,
    root: &AffineRoot,
    omega: &[Rational],
    lambda: &[Rational],
    kappa: &Rational,
) -> Result<PuiseuxMatrix> {
    let arg: Vector = lambda
        .iter()
        .zip(&vscale(kappa, omega))
        .map(|(l, s)| l - s)
        .collect();
    let b = bb_alpha(v, &root.root, &arg)?;
    let ex = coweight_exponents(v, omega);
    Ok(PuiseuxMatrix::constant(&b, v.num_factors()).conjugate_monomial(&ex, &ex))
}

/// Product of the affine factors, the first root acting first.
pub fn cocycle_of_roots(
    v: &WeightModule,
    rs: &RootSystem,
    roots: &[AffineRoot],
    lambda: &[Rational],
    kappa: &Rational,
) -> Result<PuiseuxMatrix> {
    let mut out = PuiseuxMatrix::identity(v.dim(), v.num_factors());
    for root in roots {
        let omega = choose_omega(rs, root)?;
        out = &cocycle_factor(v, root, &omega, lambda, kappa)? * &out;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CocycleElement {
    pub element: AffineWeylElement,
    pub factors: Vec<(AffineRoot, Vector)>,
    pub matrix: PuiseuxMatrix,
}

/// `G~_el = G~^{alpha~^l} ... G~^{alpha~^1}` along the reduced word; `pi` contributes nothing.
pub fn cocycle_value(
    v: &WeightModule,
    rs: &RootSystem,
    el: &AffineWeylElement,
    lambda: &[Rational],
    kappa: &Rational,
) -> Result<CocycleElement> {
    let roots = el.a_tilde_sequence(rs);
    let factors = roots
        .iter()
        .map(|r| Ok((r.clone(), choose_omega(rs, r)?)))
        .collect::<Result<Vec<_>>>()?;
    let matrix = cocycle_of_roots(v, rs, &roots, lambda, kappa)?;
    Ok(CocycleElement {
        element: el.clone(),
        factors,
        matrix,
    })
}

/// Every factor of `el` is unchanged under a second valid choice of `omega`.
pub fn check_factor_choices(
    v: &WeightModule,
    rs: &RootSystem,
    el: &AffineWeylElement,
    lambda: &[Rational],
    kappa: &Rational,
) -> Result<bool> {
    for root in el.a_tilde_sequence(rs) {
        let omega = choose_omega(rs, &root)?;
        if let Some(other) = alternate_omega(rs, &root, &omega) {
            if rs.form(&other, &root.root) != q(-root.level) {
                return Ok(false);
            }
            let a = cocycle_factor(v, &root, &omega, lambda, kappa)?;
            let b = cocycle_factor(v, &root, &other, lambda, kappa)?;
            if a != b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `G~_{xy} = ^{y^{-1}}G~_x G~_y` for a length-additive pair, compared after evaluation at `z = t^power`.
pub fn check_cocycle_identity(
    v: &WeightModule,
    rs: &RootSystem,
    x: &AffineWeylElement,
    y: &AffineWeylElement,
    lambda: &[Rational],
    kappa: &Rational,
    pt: &super::system::ZPoint,
) -> Result<CheckReport> {
    let xy = x.compose(y);
    assert_eq!(
        xy.length(rs),
        x.length(rs) + y.length(rs),
        "pair is not length-additive"
    );
    let y_inv = y.inverse();
    let moved: Vec<AffineRoot> = x
        .a_tilde_sequence(rs)
        .iter()
        .map(|r| y_inv.apply_root(rs, r))
        .collect();
    let lhs = cocycle_value(v, rs, &xy, lambda, kappa)?.matrix;
    let rhs = &cocycle_of_roots(v, rs, &moved, lambda, kappa)?
        * &cocycle_value(v, rs, y, lambda, kappa)?.matrix;
    let le = super::dynamical::eval_at(&lhs, pt)?;
    let re = super::dynamical::eval_at(&rhs, pt)?;
    Ok(CheckReport::compare(&le, &re))
}

/// `A~` sequence of `pi_i s_{j_l} ... s_{j_1}`, built from an explicit word.
pub fn a_tilde_from_word(rs: &RootSystem, word: &[usize]) -> Vec<AffineRoot> {
    a_tilde_of_word(rs, word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CartanType;

    #[test]
    fn omega_pairs_to_minus_level() {
        for (k, r) in [
            (CartanType::A, 3),
            (CartanType::B, 3),
            (CartanType::G, 2),
            (CartanType::C, 3),
        ] {
            let rs = RootSystem::build(k, r).unwrap();
            for alpha in rs.all_roots() {
                for j in -3..=3 {
                    let root = AffineRoot::new(alpha.clone(), j);
                    let omega = choose_omega(&rs, &root).unwrap();
                    assert_eq!(rs.form(&omega, &alpha), q(-j));
                    if let Some(other) = alternate_omega(&rs, &root, &omega) {
                        assert_eq!(rs.form(&other, &alpha), q(-j));
                        assert_ne!(other, omega);
                    }
                }
            }
        }
    }
}
