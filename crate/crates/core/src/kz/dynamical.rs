//! Dynamical difference operators `K_i(z, lambda) = prod_k z_k^{(omega_i^vee)^{(k)}} B_{w_[i],V}(lambda)`.

use crate::error::Result;
use crate::linalg::rational::{dot, Rational};
use crate::linalg::{ExponentVector, PuiseuxMatrix, RationalMatrix};
use crate::ops::bbb::bb_w;
use crate::repr::WeightModule;
use crate::roots::RootSystem;

use super::system::ZPoint;

/// Exponents of `prod_k z_k^{omega^{(k)}}` on each basis vector: `((omega, mu_k))_k`.
pub fn coweight_exponents(v: &WeightModule, omega: &[Rational]) -> Vec<ExponentVector> {
    (0..v.dim())
        .map(|b| {
            ExponentVector(
                (0..v.num_factors())
                    .map(|k| dot(omega, v.factor_weight(b, k)))
                    .collect(),
            )
        })
        .collect()
}

/// `prod_k z_k^{omega^{(k)}}` as a diagonal Puiseux matrix.
pub fn z_power(v: &WeightModule, omega: &[Rational]) -> PuiseuxMatrix {
    PuiseuxMatrix::monomial_diagonal(&coweight_exponents(v, omega))
}

/// Evaluate a Puiseux matrix at `z = t^power`.
pub fn eval_at(m: &PuiseuxMatrix, pt: &ZPoint) -> Result<RationalMatrix> {
    m.substitute_power(pt.power)?.eval(&pt.t)
}

#[derive(Clone, Debug)]
pub struct DynOperator {
    pub index: usize,
    pub exponents: Vec<ExponentVector>,
    pub bpart: RationalMatrix,
    pub matrix: PuiseuxMatrix,
}

impl DynOperator {
    pub fn eval(&self, pt: &ZPoint) -> Result<RationalMatrix> {
        eval_at(&self.matrix, pt)
    }
}

/// `K_i` for sl_N.
pub fn dyn_operator_sl(
    v: &WeightModule,
    rs: &RootSystem,
    i: usize,
    lambda: &[Rational],
) -> Result<DynOperator> {
    let w = rs.w_bracket(i)?;
    let bpart = bb_w(v, rs, &w, lambda)?;
    let exponents = coweight_exponents(v, rs.fundamental_coweight(i));
    let matrix = &PuiseuxMatrix::monomial_diagonal(&exponents)
        * &PuiseuxMatrix::constant(&bpart, v.num_factors());
    Ok(DynOperator {
        index: i,
        exponents,
        bpart,
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{q, qf};
    use crate::roots::CartanType;

    #[test]
    fn sl3_prefactor_exponents() {
        let rs = RootSystem::build(CartanType::A, 2).unwrap();
        let v = WeightModule::vector_rep(3);
        let ex = coweight_exponents(&v, rs.fundamental_coweight(1));
        let got: Vec<Rational> = ex.iter().map(|e| e.0[0].clone()).collect();
        assert_eq!(got, vec![qf(2, 3), qf(-1, 3), qf(-1, 3)]);
    }

    #[test]
    fn sl2_bpart_det_on_zero_weight() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let v = WeightModule::from_descriptor("2:1,1").unwrap();
        let a = qf(9, 4);
        let lam = vec![&a / q(2), -&a / q(2)];
        let k = dyn_operator_sl(&v, &rs, 1, &lam).unwrap();
        let idx = v.weight_space(&[q(0), q(0)]);
        assert_eq!(k.bpart.principal(&idx).det(), (&a + q(1)) / (&a - q(1)));
    }
}
