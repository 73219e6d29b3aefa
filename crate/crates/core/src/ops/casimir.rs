//! Split Casimir pieces and the trigonometric R-matrix acting in two tensor slots.
//!
//! A slot is a contiguous range of atomic factors, so `W ⊗ V` with composite
//! `W` and `V` is handled by passing the two ranges.

use std::ops::Range;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rational::{dot, q, qf, Rational};
use crate::linalg::RationalMatrix;
use crate::repr::WeightModule;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaParts {
    pub zero: RationalMatrix,
    pub plus: RationalMatrix,
    pub minus: RationalMatrix,
    pub full: RationalMatrix,
}

/// Sum of the weights of the factors in `slot` for basis vector `b`.
pub fn slot_weight(v: &WeightModule, slot: &Range<usize>, b: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); v.n()];
    for k in slot.clone() {
        for (a, x) in acc.iter_mut().zip(v.factor_weight(b, k)) {
            *a += x;
        }
    }
    acc
}

/// `e_{i,j}` acting diagonally on the factors of `slot`.
pub fn slot_e(v: &WeightModule, slot: &Range<usize>, i: usize, j: usize) -> RationalMatrix {
    let mut out = RationalMatrix::zeros(v.dim(), v.dim());
    for k in slot.clone() {
        out = &out + &v.factor_e(k, i, j);
    }
    out
}

/// `h` acting on the factors of `slot`.
pub fn slot_h(v: &WeightModule, slot: &Range<usize>, h: &[Rational]) -> RationalMatrix {
    let d: Vec<Rational> = (0..v.dim())
        .map(|b| dot(h, &slot_weight(v, slot, b)))
        .collect();
    RationalMatrix::diagonal(&d)
}

pub fn factor_slot(k: usize) -> Range<usize> {
    k..k + 1
}

/// `Omega^0`, `Omega^+`, `Omega^-` and `Omega` between two disjoint slots.
pub fn omega_slots(v: &WeightModule, si: &Range<usize>, sj: &Range<usize>) -> OmegaParts {
    let n = v.n();
    let half = qf(1, 2);
    let d: Vec<Rational> = (0..v.dim())
        .map(|b| &half * dot(&slot_weight(v, si, b), &slot_weight(v, sj, b)))
        .collect();
    let zero = RationalMatrix::diagonal(&d);
    let mut plus = zero.clone();
    let mut minus = zero.clone();
    for a in 0..n {
        for b in a + 1..n {
            plus = &plus + &(&slot_e(v, si, a, b) * &slot_e(v, sj, b, a));
            minus = &minus + &(&slot_e(v, si, b, a) * &slot_e(v, sj, a, b));
        }
    }
    let full = &plus + &minus;
    OmegaParts {
        zero,
        plus,
        minus,
        full,
    }
}

/// Casimir pieces between atomic factors `i` and `j`.
pub fn omega_matrices(v: &WeightModule, i: usize, j: usize) -> OmegaParts {
    assert_ne!(i, j, "Omega needs two distinct factors");
    omega_slots(v, &factor_slot(i), &factor_slot(j))
}

/// `r(z) = (Omega^+ z + Omega^-)/(z - 1)` from precomputed parts.
pub fn r_from_parts(parts: &OmegaParts, z: &Rational) -> Result<RationalMatrix> {
    if *z == q(1) {
        return Err(Error::PoleAtOne);
    }
    let c = (z - q(1)).recip();
    Ok((&parts.plus.scale(z) + &parts.minus).scale(&c))
}

/// `r^{(i,j)}(z)` on atomic factors `i`, `j`; `i` is the first slot.
pub fn r_matrix(v: &WeightModule, i: usize, j: usize, z: &Rational) -> Result<RationalMatrix> {
    r_from_parts(&omega_matrices(v, i, j), z)
}
