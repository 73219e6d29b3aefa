//! Lifts `x_w` of Weyl group elements to operators on a module.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rational::{factorial, Rational};
use crate::linalg::RationalMatrix;
use crate::roots::{CartanType, RootSystem, WeylElement};

use super::module::WeightModule;

/// `exp(m)` for a nilpotent matrix, as a finite sum.
pub fn exp_nilpotent(m: &RationalMatrix) -> RationalMatrix {
    let n = m.rows();
    let mut out = RationalMatrix::identity(n);
    let mut power = RationalMatrix::identity(n);
    for k in 1..=n as u64 {
        power = &power * m;
        if power.is_zero() {
            return out;
        }
        let c = Rational::from_integer(factorial(k)).recip();
        out = &out + &power.scale(&c);
    }
    assert!((&power * m).is_zero(), "exp of a non-nilpotent matrix");
    out
}

/// `x_i = exp(-E_i) exp(F_i) exp(-E_i)` for the simple root `alpha_i` (1-based).
pub fn simple_lift(v: &WeightModule, i: usize) -> RationalMatrix {
    let e = v.e(i - 1, i);
    let f = v.e(i, i - 1);
    let a = exp_nilpotent(&e.scale(&Rational::from_integer((-1).into())));
    let b = exp_nilpotent(f);
    &(&a * &b) * &a
}

/// `x_{i_k} ... x_{i_1}` for a word `[i_1, ..., i_k]`.
pub fn lift_word(v: &WeightModule, word: &[usize]) -> RationalMatrix {
    word.iter()
        .fold(RationalMatrix::identity(v.dim()), |acc, &i| {
            &simple_lift(v, i) * &acc
        })
}

#[derive(Clone, Debug)]
pub struct GroupLift {
    w: WeylElement,
    matrix: RationalMatrix,
    inverse: RationalMatrix,
}

fn check_type_a(v: &WeightModule, rs: &RootSystem) -> Result<()> {
    if rs.kind() != CartanType::A || rs.rank() + 1 != v.n() {
        return Err(Error::NotTypeA);
    }
    Ok(())
}

impl GroupLift {
    pub fn new(v: &WeightModule, rs: &RootSystem, w: &WeylElement) -> Result<Self> {
        check_type_a(v, rs)?;
        Ok(Self::from_word(v, w.clone(), w.word()))
    }

    /// Lift along an explicit reduced word of `w`.
    pub fn from_word(v: &WeightModule, w: WeylElement, word: &[usize]) -> Self {
        let matrix = lift_word(v, word);
        let inverse = matrix.inverse().expect("lifts are invertible");
        Self { w, matrix, inverse }
    }

    pub fn element(&self) -> &WeylElement {
        &self.w
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &RationalMatrix {
        &self.inverse
    }

    /// `w(X) = x_w X x_w^{-1}`.
    pub fn act(&self, x: &RationalMatrix) -> RationalMatrix {
        &(&self.matrix * x) * &self.inverse
    }

    /// `w^{-1}(X) = x_w^{-1} X x_w`.
    pub fn act_inverse(&self, x: &RationalMatrix) -> RationalMatrix {
        &(&self.inverse * x) * &self.matrix
    }
}

/// Restriction of `x_w` to the zero weight space.
pub fn weyl_action_weight_zero(
    v: &WeightModule,
    rs: &RootSystem,
    w: &WeylElement,
) -> Result<RationalMatrix> {
    check_type_a(v, rs)?;
    let zero = vec![Rational::zero(); v.n()];
    let idx = v.weight_space(&zero);
    if idx.is_empty() {
        return Err(Error::EmptyWeightSpace);
    }
    let lift = GroupLift::new(v, rs, w)?;
    Ok(lift.matrix().submatrix(&idx, &idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;

    #[test]
    fn sl3_simple_lift_block() {
        let v = WeightModule::vector_rep(3);
        let x = simple_lift(&v, 1);
        let expect = RationalMatrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(x, expect);
    }

    #[test]
    fn sl2_lift_on_lm() {
        for m in 0..=5usize {
            let l = WeightModule::sl2_irrep(m);
            let x = simple_lift(&l, 1);
            for k in 0..=m {
                for r in 0..=m {
                    let expect = if r == m - k {
                        q(if k % 2 == 0 { 1 } else { -1 })
                    } else {
                        q(0)
                    };
                    assert_eq!(x[(r, k)], expect, "m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn identity_lift() {
        let rs = RootSystem::build(CartanType::A, 2).unwrap();
        let v = WeightModule::from_descriptor("3:1,2").unwrap();
        let g = GroupLift::new(&v, &rs, &rs.identity()).unwrap();
        assert!(g.matrix().is_identity());
    }

    #[test]
    fn weight_zero_action_is_involution() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let v = WeightModule::from_descriptor("2:1,1").unwrap();
        let m = weyl_action_weight_zero(&v, &rs, &rs.simple_reflection(1)).unwrap();
        assert_eq!(m.rows(), 2);
        assert!((&m * &m).is_identity());
        let empty = WeightModule::vector_rep(2);
        assert_eq!(
            weyl_action_weight_zero(&empty, &rs, &rs.identity()),
            Err(Error::EmptyWeightSpace)
        );
    }
}
