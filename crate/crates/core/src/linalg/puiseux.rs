//! Matrices whose entries are finite sums of monomials `c * z_1^{q_1} ... z_n^{q_n}`
//! with rational exponents `q_k`.
//!
//! Fractional exponents are cleared by substituting `z_k = t_k^d` before any
//! evaluation, which keeps everything exact.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use super::rational::{as_i64, fmt_vec, pow_i64, Rational};
use crate::error::{Error, Result};

/// Exponents of `z_1..z_n` in one monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<Rational>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![Rational::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Monomial product.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|a| -a).collect())
    }
}

type Entry = BTreeMap<ExponentVector, Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuiseuxMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Entry>,
}

fn accumulate(entry: &mut Entry, exp: ExponentVector, c: Rational) {
    if c.is_zero() {
        return;
    }
    match entry.get_mut(&exp) {
        Some(v) => {
            *v += c;
            if v.is_zero() {
                entry.remove(&exp);
            }
        }
        None => {
            entry.insert(exp, c);
        }
    }
}

impl PuiseuxMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        Self {
            rows,
            cols,
            nvars,
            entries: vec![Entry::new(); rows * cols],
        }
    }

    pub fn constant(m: &RationalMatrix, nvars: usize) -> Self {
        let mut p = Self::zeros(m.rows(), m.cols(), nvars);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                p.add_term(i, j, ExponentVector::zero(nvars), m[(i, j)].clone());
            }
        }
        p
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        Self::constant(&RationalMatrix::identity(n), nvars)
    }

    /// Diagonal matrix with a single monomial `z^{exps[i]}` in cell `(i, i)`.
    pub fn monomial_diagonal(exps: &[ExponentVector]) -> Self {
        let nvars = exps.first().map_or(0, ExponentVector::len);
        let mut p = Self::zeros(exps.len(), exps.len(), nvars);
        for (i, e) in exps.iter().enumerate() {
            p.add_term(i, i, e.clone(), Rational::one());
        }
        p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &BTreeMap<ExponentVector, Rational> {
        &self.entries[i * self.cols + j]
    }

    pub fn add_term(&mut self, i: usize, j: usize, exp: ExponentVector, c: Rational) {
        assert_eq!(exp.len(), self.nvars);
        let cols = self.cols;
        accumulate(&mut self.entries[i * cols + j], exp, c);
    }

    /// No stored coefficient is zero.
    pub fn is_normalized(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.values().all(|c| !c.is_zero()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zeros(self.rows, self.cols, self.nvars);
        for (idx, e) in self.entries.iter().enumerate() {
            for (exp, v) in e {
                accumulate(&mut out.entries[idx], exp.clone(), v * c);
            }
        }
        out
    }

    /// Substitute `z_k = t_k^d`, multiplying every exponent by `d`.
    pub fn substitute_power(&self, d: u32) -> Result<Self> {
        let dq = Rational::from_integer(d.into());
        let mut out = Self::zeros(self.rows, self.cols, self.nvars);
        for (idx, e) in self.entries.iter().enumerate() {
            for (exp, v) in e {
                let mut scaled = Vec::with_capacity(exp.len());
                for x in &exp.0 {
                    let y = x * &dq;
                    if !y.is_integer() {
                        return Err(Error::NonClearingDenominator {
                            exponent: x.to_string(),
                            power: d,
                        });
                    }
                    scaled.push(y);
                }
                accumulate(&mut out.entries[idx], ExponentVector(scaled), v.clone());
            }
        }
        Ok(out)
    }

    /// Exact evaluation; every exponent must already be an integer.
    pub fn eval(&self, z: &[Rational]) -> Result<RationalMatrix> {
        assert_eq!(z.len(), self.nvars);
        let mut out = RationalMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let mut acc = Rational::zero();
                for (exp, c) in self.entry(i, j) {
                    let mut term = c.clone();
                    for (zk, e) in z.iter().zip(&exp.0) {
                        let e =
                            as_i64(e).ok_or_else(|| Error::FractionalExponent(fmt_vec(&exp.0)))?;
                        if e < 0 && zk.is_zero() {
                            return Err(Error::ZeroBase);
                        }
                        if e != 0 {
                            term *= pow_i64(zk, e);
                        }
                    }
                    acc += term;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    /// Conjugate by monomial diagonals: `diag(z^{left}) * self * diag(z^{-right})`
    /// where `left` and `right` are per-row and per-column exponents.
    pub fn conjugate_monomial(&self, left: &[ExponentVector], right: &[ExponentVector]) -> Self {
        let mut out = Self::zeros(self.rows, self.cols, self.nvars);
        for (i, l) in left.iter().enumerate().take(self.rows) {
            for (j, r) in right.iter().enumerate().take(self.cols) {
                let shift = l.add(&r.neg());
                for (exp, c) in self.entry(i, j) {
                    out.add_term(i, j, exp.add(&shift), c.clone());
                }
            }
        }
        out
    }
}

impl Add for &PuiseuxMatrix {
    type Output = PuiseuxMatrix;
    fn add(self, rhs: &PuiseuxMatrix) -> PuiseuxMatrix {
        assert_eq!(
            (self.rows, self.cols, self.nvars),
            (rhs.rows, rhs.cols, rhs.nvars)
        );
        let mut out = self.clone();
        for (idx, e) in rhs.entries.iter().enumerate() {
            for (exp, v) in e {
                accumulate(&mut out.entries[idx], exp.clone(), v.clone());
            }
        }
        out
    }
}

impl Mul for &PuiseuxMatrix {
    type Output = PuiseuxMatrix;
    fn mul(self, rhs: &PuiseuxMatrix) -> PuiseuxMatrix {
        assert_eq!(self.cols, rhs.rows);
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = PuiseuxMatrix::zeros(self.rows, rhs.cols, self.nvars);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_empty() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.entry(k, j);
                    for (ea, ca) in a {
                        for (eb, cb) in b {
                            let idx = i * rhs.cols + j;
                            accumulate(&mut out.entries[idx], ea.add(eb), ca * cb);
                        }
                    }
                }
            }
        }
        out
    }
}
