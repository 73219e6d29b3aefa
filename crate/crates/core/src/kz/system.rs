//! KZ operator matrices `M_j = sum_{k != j} r(z_j/z_k)^{(j,k)} + lambda^{(j)}` and their
//! logarithmic derivatives, from `dr/du = -Omega/(u - 1)^2`.

use num_traits::Zero;

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::linalg::rational::{pow_i64, q, Rational};
use crate::linalg::RationalMatrix;
use crate::ops::casimir::{omega_matrices, r_from_parts, OmegaParts};
use crate::repr::WeightModule;

/// A sample point `z_k = t_k^power` with exact rational `t_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoint {
    pub t: Vec<Rational>,
    pub power: u32,
}

impl ZPoint {
    pub fn new(t: Vec<Rational>, power: u32) -> Self {
        Self { t, power }
    }

    pub fn z(&self) -> Vec<Rational> {
        self.t
            .iter()
            .map(|x| pow_i64(x, i64::from(self.power)))
            .collect()
    }
}

/// Points must be nonzero and pairwise distinct.
pub fn validate_points(z: &[Rational]) -> Result<()> {
    for i in 0..z.len() {
        if z[i].is_zero() {
            return Err(Error::CoincidingPoints(i, i));
        }
        for k in i + 1..z.len() {
            if z[i] == z[k] {
                return Err(Error::CoincidingPoints(i, k));
            }
        }
    }
    Ok(())
}

/// Casimir data for every ordered pair of factors, computed once per module.
pub struct KzSystem<'a> {
    v: &'a WeightModule,
    parts: Vec<Vec<Option<OmegaParts>>>,
}

impl<'a> KzSystem<'a> {
    pub fn new(v: &'a WeightModule) -> Self {
        let n = v.num_factors();
        let parts = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| (j != k).then(|| omega_matrices(v, j, k)))
                    .collect()
            })
            .collect();
        Self { v, parts }
    }

    pub fn module(&self) -> &WeightModule {
        self.v
    }

    pub fn n_points(&self) -> usize {
        self.v.num_factors()
    }

    pub fn omega(&self, j: usize, k: usize) -> &OmegaParts {
        self.parts[j][k].as_ref().expect("distinct factors")
    }

    /// `r(z_j/z_k)^{(j,k)}`.
    pub fn r(&self, j: usize, k: usize, z: &[Rational]) -> Result<RationalMatrix> {
        r_from_parts(self.omega(j, k), &(&z[j] / &z[k]))
    }

    /// `sum_{k != j} r(z_j/z_k)^{(j,k)}`.
    pub fn r_sum(&self, j: usize, z: &[Rational]) -> Result<RationalMatrix> {
        validate_points(z)?;
        let mut out = RationalMatrix::zeros(self.v.dim(), self.v.dim());
        for k in (0..self.n_points()).filter(|&k| k != j) {
            out = &out + &self.r(j, k, z)?;
        }
        Ok(out)
    }

    /// `M_j(z, lambda)`.
    pub fn m(&self, j: usize, z: &[Rational], lambda: &[Rational]) -> Result<RationalMatrix> {
        Ok(&self.r_sum(j, z)? + &self.v.factor_h(j, lambda))
    }

    /// `z_i d/dz_i M_j`.
    pub fn zdz(&self, i: usize, j: usize, z: &[Rational]) -> Result<RationalMatrix> {
        validate_points(z)?;
        let dim = self.v.dim();
        let bump = |k: usize| -> RationalMatrix {
            let u = &z[j] / &z[k];
            let d = &u - q(1);
            self.omega(j, k).full.scale(&(&u / (&d * &d)))
        };
        if i != j {
            return Ok(bump(i));
        }
        let mut out = RationalMatrix::zeros(dim, dim);
        for k in (0..self.n_points()).filter(|&k| k != j) {
            out = &out - &bump(k);
        }
        Ok(out)
    }
}

/// `kappa z_i d_i M_j - kappa z_j d_j M_i = [M_i, M_j]` for all pairs.
pub fn check_kz_flatness(
    v: &WeightModule,
    z: &[Rational],
    lambda: &[Rational],
    kappa: &Rational,
) -> Result<CheckReport> {
    let sys = KzSystem::new(v);
    let n = sys.n_points();
    let ms: Vec<RationalMatrix> = (0..n).map(|j| sys.m(j, z, lambda)).collect::<Result<_>>()?;
    let mut reports = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = &sys.zdz(i, j, z)?.scale(kappa) - &sys.zdz(j, i, z)?.scale(kappa);
            let rhs = ms[i].commutator(&ms[j]);
            reports.push(CheckReport::compare(&lhs, &rhs));
        }
    }
    Ok(CheckReport::all(reports))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::qf;

    #[test]
    fn single_point_is_lambda() {
        let v = WeightModule::from_descriptor("3:2").unwrap();
        let sys = KzSystem::new(&v);
        let lam = vec![qf(1, 3), qf(1, 5), -qf(8, 15)];
        assert_eq!(sys.m(0, &[q(2)], &lam).unwrap(), v.h_action(&lam));
    }

    #[test]
    fn coinciding_points_rejected() {
        let v = WeightModule::from_descriptor("2:1,1").unwrap();
        let sys = KzSystem::new(&v);
        let lam = vec![q(1), q(-1)];
        assert_eq!(
            sys.m(0, &[q(2), q(2)], &lam),
            Err(Error::CoincidingPoints(0, 1))
        );
    }

    #[test]
    fn derivative_matches_difference_quotient_structure() {
        // r(u) - r(u') = -(u - u') Omega / ((u-1)(u'-1)), the exact secant of dr/du
        let v = WeightModule::from_descriptor("2:1,1").unwrap();
        let sys = KzSystem::new(&v);
        let om = sys.omega(0, 1);
        let (u, w) = (qf(3, 2), qf(7, 4));
        let lhs = &r_from_parts(om, &u).unwrap() - &r_from_parts(om, &w).unwrap();
        let rhs = om.full.scale(&(-(&u - &w) / ((&u - q(1)) * (&w - q(1)))));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn m_preserves_total_weight() {
        let v = WeightModule::from_descriptor("3:1,1,1").unwrap();
        let sys = KzSystem::new(&v);
        let lam = vec![qf(2, 7), qf(-1, 3), qf(2, 7) * q(-1) + qf(1, 3)];
        let z = [q(2), q(5), qf(1, 3)];
        for j in 0..3 {
            let m = sys.m(j, &z, &lam).unwrap();
            for a in 0..v.dim() {
                for b in 0..v.dim() {
                    if !m[(a, b)].is_zero() {
                        assert_eq!(v.weight(a), v.weight(b));
                    }
                }
            }
        }
    }
}
