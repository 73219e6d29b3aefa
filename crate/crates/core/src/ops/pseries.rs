//! The series `p(t; H, E, F) = sum_k F^k E^k (1/k!) prod_{j<k} 1/(t - H - j)`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational::{factorial, q, Rational};
use crate::linalg::RationalMatrix;

/// Evaluate `p` column by column: column `b` uses argument `t[b]` and the
/// `H`-eigenvalue `h[b]` of basis vector `b`.
pub fn p_series_columns(
    t: &[Rational],
    h: &[Rational],
    e: &RationalMatrix,
    f: &RationalMatrix,
) -> Result<RationalMatrix> {
    let n = e.rows();
    let mut out = RationalMatrix::identity(n);
    let mut ek = RationalMatrix::identity(n);
    let mut fk = RationalMatrix::identity(n);
    let mut k = 0u64;
    loop {
        ek = &ek * e;
        if ek.is_zero() {
            return Ok(out);
        }
        fk = &fk * f;
        k += 1;
        let term = &fk * &ek;
        let kfact = Rational::from_integer(factorial(k));
        for b in 0..n {
            if (0..n).all(|a| term[(a, b)].is_zero()) {
                continue;
            }
            let mut c = Rational::one();
            for j in 0..k as i64 {
                let d = &t[b] - &h[b] - q(j);
                if d.is_zero() {
                    return Err(Error::Pole(format!("weight {} at j = {}", h[b], j)));
                }
                c /= d;
            }
            c /= &kfact;
            for a in 0..n {
                if !term[(a, b)].is_zero() {
                    out[(a, b)] += &term[(a, b)] * &c;
                }
            }
        }
    }
}

/// `p(t; H, E, F)` with a diagonal `H`.
pub fn p_series(
    t: &Rational,
    h: &RationalMatrix,
    e: &RationalMatrix,
    f: &RationalMatrix,
) -> Result<RationalMatrix> {
    let n = h.rows();
    let ts = vec![t.clone(); n];
    let hs: Vec<Rational> = (0..n).map(|i| h[(i, i)].clone()).collect();
    p_series_columns(&ts, &hs, e, f)
}
