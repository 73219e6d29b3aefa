//! Dynamical Weyl group operators `B^alpha_V(lambda)` and their products `B_{w,V}(lambda)`.

use crate::error::{Error, Result};
use crate::linalg::rational::{dot, q, qf, Rational};
use crate::linalg::RationalMatrix;
use crate::repr::WeightModule;
use crate::roots::weyl::inversion_sequence_of;
use crate::roots::{CartanType, RootSystem, Vector, WeylElement};

use super::pseries::p_series_columns;

/// Evaluation point: dynamical variable and step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalContext {
    pub lambda: Vector,
    pub kappa: Rational,
}

impl EvalContext {
    pub fn new(lambda: Vector, kappa: Rational) -> Self {
        Self { lambda, kappa }
    }
}

fn require_type_a(v: &WeightModule, rs: &RootSystem) -> Result<()> {
    if rs.kind() != CartanType::A || rs.rank() + 1 != v.n() {
        return Err(Error::NotTypeA);
    }
    Ok(())
}

/// `B^alpha_V(lambda) v = p((lambda + nu/2, alpha^vee) - 1; H_alpha, E_alpha, F_alpha) v` for `v` in `V[nu]`.
pub fn bb_alpha(
    v: &WeightModule,
    alpha: &[Rational],
    lambda: &[Rational],
) -> Result<RationalMatrix> {
    // type A: alpha^vee = alpha
    let half = qf(1, 2);
    let mut t = Vec::with_capacity(v.dim());
    let mut h = Vec::with_capacity(v.dim());
    for b in 0..v.dim() {
        let nu = v.weight(b);
        let shifted: Vector = lambda.iter().zip(nu).map(|(l, n)| l + &half * n).collect();
        t.push(dot(&shifted, alpha) - q(1));
        h.push(dot(nu, alpha));
    }
    let neg: Vector = alpha.iter().map(|x| -x).collect();
    p_series_columns(&t, &h, v.root_op(alpha), v.root_op(&neg))
}

/// `B^{alpha^k}(lambda) ... B^{alpha^1}(lambda)` along the inversion sequence of `word`.
pub fn bb_word(
    v: &WeightModule,
    rs: &RootSystem,
    word: &[usize],
    lambda: &[Rational],
) -> Result<RationalMatrix> {
    require_type_a(v, rs)?;
    let mut out = RationalMatrix::identity(v.dim());
    for alpha in inversion_sequence_of(rs, word) {
        out = &bb_alpha(v, &alpha, lambda)? * &out;
    }
    Ok(out)
}

/// `B_{w,V}(lambda)` using the cached reduced word of `w`.
pub fn bb_w(
    v: &WeightModule,
    rs: &RootSystem,
    w: &WeylElement,
    lambda: &[Rational],
) -> Result<RationalMatrix> {
    bb_word(v, rs, w.word(), lambda)
}

/// The scalar by which `B^alpha B^{-alpha}` acts on `V[nu]`.
pub fn inversion_scalar(
    alpha: &[Rational],
    nu: &[Rational],
    lambda: &[Rational],
) -> Result<Rational> {
    let half = qf(1, 2);
    let minus: Vector = lambda.iter().zip(nu).map(|(l, n)| l - &half * n).collect();
    let plus: Vector = lambda.iter().zip(nu).map(|(l, n)| l + &half * n).collect();
    let den = dot(&plus, alpha);
    if num_traits::Zero::is_zero(&den) {
        return Err(Error::Pole(format!(
            "(lambda + nu/2, alpha^vee) = 0 for nu = {}",
            crate::linalg::rational::fmt_vec(nu)
        )));
    }
    Ok(dot(&minus, alpha) / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::qf;

    fn lam2(a: Rational) -> Vector {
        // (lambda, alpha^vee) = a for sl_2
        vec![&a / q(2), -&a / q(2)]
    }

    #[test]
    fn product_formula_on_lm() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let alpha = rs.simple_root(1).clone();
        for m in 0..=5usize {
            let l = WeightModule::sl2_irrep(m);
            let a = qf(17, 5);
            let b = bb_alpha(&l, &alpha, &lam2(a.clone())).unwrap();
            let mq = q(m as i64);
            for k in 0..=m {
                let mut expect = q(1);
                for j in 0..k as i64 {
                    expect *= (&a + &mq / q(2) - q(j)) / (&a - &mq / q(2) + q(j));
                }
                assert_eq!(b[(k, k)], expect, "m={m} k={k}");
            }
            assert!(b.is_diagonal());
        }
    }

    #[test]
    fn identity_word() {
        let rs = RootSystem::build(CartanType::A, 2).unwrap();
        let v = WeightModule::from_descriptor("3:1,1").unwrap();
        let lam = vec![qf(1, 3), qf(2, 7), -qf(1, 3) - qf(2, 7)];
        assert!(bb_w(&v, &rs, &rs.identity(), &lam).unwrap().is_identity());
    }

    #[test]
    fn rejects_other_types() {
        let rs = RootSystem::build(CartanType::B, 2).unwrap();
        let v = WeightModule::vector_rep(3);
        assert_eq!(
            bb_word(&v, &rs, &[1], &[q(0), q(0), q(0)]),
            Err(Error::NotTypeA)
        );
    }
}
