//! Truncated sl_2 Verma modules and an intertwiner-based oracle for `A_{s_1, L_m}(lambda)`.
//!
//! For each `v_k` in `L_m` the intertwiner `Phi: M_lambda -> M_{lambda - nu} ⊗ L_m`
//! with `Phi(v_lambda) = v_{lambda-nu} ⊗ v_k + lower` is solved from
//! `Delta(E) Phi(v_lambda) = 0`. Its value on the singular vector
//! `F^{lambda+1} v_lambda / (lambda+1)!` has leading term
//! `v_{s.(lambda-nu)} ⊗ A(v_k)`.

use num_traits::Zero;

use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::linalg::rational::{factorial, q, Rational};
use crate::linalg::RationalMatrix;
use crate::repr::{simple_lift, WeightModule};

use super::pseries::p_series;

/// `M_lambda` truncated to `F^k v_lambda`, `0 <= k <= depth`.
#[derive(Clone, Debug)]
pub struct TruncatedVerma {
    pub lambda: i64,
    pub depth: usize,
}

impl TruncatedVerma {
    pub fn new(lambda: i64, depth: usize) -> Self {
        Self { lambda, depth }
    }

    pub fn dim(&self) -> usize {
        self.depth + 1
    }

    pub fn h(&self, k: usize) -> i64 {
        self.lambda - 2 * k as i64
    }

    /// `E F^k v = k (lambda - k + 1) F^{k-1} v`.
    pub fn e_coeff(&self, k: usize) -> Rational {
        let k = k as i64;
        q(k * (self.lambda - k + 1))
    }

    /// Matrices `(H, E, F)`; `F` drops the top basis vector.
    pub fn matrices(&self) -> (RationalMatrix, RationalMatrix, RationalMatrix) {
        let d = self.dim();
        let h = RationalMatrix::diagonal(&(0..d).map(|k| q(self.h(k))).collect::<Vec<_>>());
        let mut e = RationalMatrix::zeros(d, d);
        let mut f = RationalMatrix::zeros(d, d);
        for k in 0..d {
            if k >= 1 {
                e[(k - 1, k)] = self.e_coeff(k);
            }
            if k + 1 < d {
                f[(k + 1, k)] = q(1);
            }
        }
        (h, e, f)
    }
}

/// Elements of `M_mu ⊗ L_m` as dense coefficient vectors indexed by `j * (m+1) + i`.
struct TensorSpace {
    verma: TruncatedVerma,
    m: usize,
}

impl TensorSpace {
    fn idx(&self, j: usize, i: usize) -> usize {
        j * (self.m + 1) + i
    }

    fn zero(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.verma.dim() * (self.m + 1)]
    }

    /// `Delta(F) = F ⊗ 1 + 1 ⊗ F` with `F v_i = (i+1) v_{i+1}`.
    fn apply_f(&self, x: &[Rational]) -> Vec<Rational> {
        let mut out = self.zero();
        for j in 0..self.verma.dim() {
            for i in 0..=self.m {
                let c = &x[self.idx(j, i)];
                if c.is_zero() {
                    continue;
                }
                if j < self.verma.depth {
                    out[self.idx(j + 1, i)] += c;
                }
                if i < self.m {
                    out[self.idx(j, i + 1)] += c * q(i as i64 + 1);
                }
            }
        }
        out
    }

    /// `Delta(E)` with `E v_i = (m - i + 1) v_{i-1}`.
    fn apply_e(&self, x: &[Rational]) -> Vec<Rational> {
        let mut out = self.zero();
        for j in 0..self.verma.dim() {
            for i in 0..=self.m {
                let c = &x[self.idx(j, i)];
                if c.is_zero() {
                    continue;
                }
                if j >= 1 {
                    out[self.idx(j - 1, i)] += c * self.verma.e_coeff(j);
                }
                if i >= 1 {
                    out[self.idx(j, i - 1)] += c * q((self.m - i + 1) as i64);
                }
            }
        }
        out
    }
}

/// Condition II of genericity: `w.lambda - w'.(lambda - nu)` avoids `P(L_m)` for `w != w'`.
fn check_generic(lambda: i64, m: usize) -> Result<()> {
    let dot = |w: bool, x: i64| if w { -x - 2 } else { x };
    let weights: Vec<i64> = (0..=m as i64).map(|k| m as i64 - 2 * k).collect();
    for &nu in &weights {
        for (w, w2) in [(false, true), (true, false)] {
            let d = dot(w, lambda) - dot(w2, lambda - nu);
            if weights.contains(&d) {
                return Err(Error::NonGenericWeight(format!(
                    "lambda = {lambda}, nu = {nu}, difference {d} is a weight of L_{m}"
                )));
            }
        }
    }
    Ok(())
}

/// `A_{s_1, L_m}(lambda)` extracted from intertwiners, for integral `lambda >= m`.
pub fn verma_a_matrix(m: usize, lambda: i64, depth: usize) -> Result<RationalMatrix> {
    let need = (lambda + 1) as usize + m;
    if lambda < m as i64 {
        return Err(Error::NonGenericWeight(format!(
            "lambda = {lambda} < m = {m}"
        )));
    }
    if depth < need {
        return Err(Error::TruncationTooShallow { have: depth, need });
    }
    check_generic(lambda, m)?;
    let lfact = Rational::from_integer(factorial((lambda + 1) as u64));
    let mut a = RationalMatrix::zeros(m + 1, m + 1);
    for k in 0..=m {
        let mu = lambda - (m as i64 - 2 * k as i64);
        let space = TensorSpace {
            verma: TruncatedVerma::new(mu, depth),
            m,
        };
        // Phi(v_lambda) = sum_{j <= k} c_j f_j ⊗ v_{k-j}, c_0 = 1, annihilated by Delta(E)
        let unknowns = k;
        let mut phi = space.zero();
        phi[space.idx(0, k)] = q(1);
        if unknowns > 0 {
            let cols: Vec<Vec<Rational>> = (1..=k)
                .map(|j| {
                    let mut basis = space.zero();
                    basis[space.idx(j, k - j)] = q(1);
                    space.apply_e(&basis)
                })
                .collect();
            let rhs: Vec<Rational> = space.apply_e(&phi).into_iter().map(|x| -x).collect();
            let rows = rhs.len();
            let mut sys = RationalMatrix::zeros(rows, unknowns);
            for (c, col) in cols.iter().enumerate() {
                for r in 0..rows {
                    sys[(r, c)] = col[r].clone();
                }
            }
            let sol = sys
                .solve(&rhs)
                .ok_or_else(|| Error::NonGenericWeight(format!("no intertwiner for k = {k}")))?;
            for (j, c) in sol.into_iter().enumerate() {
                phi[space.idx(j + 1, k - j - 1)] = c;
            }
        }
        debug_assert!(space.apply_e(&phi).iter().all(Zero::is_zero));
        let mut img = phi;
        for _ in 0..=lambda {
            img = space.apply_f(&img);
        }
        let top = (mu + 1) as usize;
        let coeff = &img[space.idx(top, m - k)] / &lfact;
        let mu_fact = Rational::from_integer(factorial(top as u64));
        a[(m - k, k)] = coeff * mu_fact;
    }
    Ok(a)
}

/// `x p((lambda, alpha^vee); H, E, F)` on `L_m`.
pub fn sl2_formula(m: usize, lambda: i64) -> Result<RationalMatrix> {
    let l = WeightModule::sl2_irrep(m);
    let h = l.e(0, 0) - l.e(1, 1);
    let p = p_series(&q(lambda), &h, l.e(0, 1), l.e(1, 0))?;
    Ok(&simple_lift(&l, 1) * &p)
}

/// Compare the intertwiner extraction with the closed formula.
pub fn sl2_verma_oracle(m: usize, lambda: i64, depth: usize) -> Result<CheckReport> {
    let a = verma_a_matrix(m, lambda, depth)?;
    Ok(CheckReport::compare(&a, &sl2_formula(m, lambda)?))
}

/// Default truncation depth `(lambda, alpha) + 1 + m + 2`.
pub fn default_depth(m: usize, lambda: i64) -> usize {
    (lambda + 1) as usize + m + 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verma_brackets() {
        let v = TruncatedVerma::new(5, 12);
        let (h, e, f) = v.matrices();
        let c = e.commutator(&f);
        // [E, F] = H away from the truncation edge
        for k in 0..12 {
            assert_eq!(c[(k, k)], h[(k, k)]);
        }
    }

    #[test]
    fn trivial_module() {
        let a = verma_a_matrix(0, 3, default_depth(0, 3)).unwrap();
        assert!(a.is_identity());
    }

    #[test]
    fn l2_at_six() {
        assert!(sl2_verma_oracle(2, 6, default_depth(2, 6))
            .unwrap()
            .passed());
        let a = verma_a_matrix(2, 6, default_depth(2, 6)).unwrap();
        // |A v_k| = prod_{s=2}^{k+1}(a+s) / prod_{s=1}^k (a-m+k+s), up to the sign of x
        for k in 0..=2usize {
            let mut expect = q(1);
            for s in 2..=k as i64 + 1 {
                expect *= q(6 + s);
            }
            for s in 1..=k as i64 {
                expect /= q(6 - 2 + k as i64 + s);
            }
            if k % 2 == 1 {
                expect = -expect;
            }
            assert_eq!(a[(2 - k, k)], expect);
        }
    }

    #[test]
    fn l4_at_ten() {
        assert!(sl2_verma_oracle(4, 10, default_depth(4, 10))
            .unwrap()
            .passed());
    }

    #[test]
    fn shallow_truncation() {
        assert_eq!(
            verma_a_matrix(2, 6, 5),
            Err(Error::TruncationTooShallow { have: 5, need: 9 })
        );
    }
}
