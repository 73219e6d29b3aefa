//! Finite-dimensional gl_N-modules with explicit matrices for every `e_{i,j}`.
//!
//! Weights are stored twice: the integral gl_N weight of each basis vector and
//! its orthogonal projection to the trace-zero Cartan of sl_N.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rational::{dot, q, qf, Rational};
use crate::linalg::RationalMatrix;
use crate::roots::Vector;

#[derive(Clone, PartialEq, Eq)]
pub struct WeightModule {
    n: usize,
    labels: Vec<String>,
    gl_weights: Vec<Vec<i64>>,
    weights: Vec<Vector>,
    /// `e_{i,j}` stored at `i * n + j`, diagonal entries included.
    ops: Vec<RationalMatrix>,
    /// Tensor factors (atomic modules); empty for an atomic module.
    factors: Vec<WeightModule>,
    /// For each basis vector, its basis index in every factor.
    factor_index: Vec<Vec<usize>>,
    descriptor: String,
}

/// Project an integral gl_N weight to the trace-zero hyperplane.
pub fn project_weight(gl: &[i64]) -> Vector {
    let n = gl.len() as i64;
    let total: i64 = gl.iter().sum();
    gl.iter().map(|&x| q(x) - qf(total, n)).collect()
}

/// `(a, b)` with `alpha = e_a - e_b`, if `alpha` has that shape.
pub fn root_indices(alpha: &[Rational]) -> Option<(usize, usize)> {
    let mut pos = None;
    let mut neg = None;
    for (k, x) in alpha.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if *x == q(1) && pos.is_none() {
            pos = Some(k);
        } else if *x == q(-1) && neg.is_none() {
            neg = Some(k);
        } else {
            return None;
        }
    }
    Some((pos?, neg?))
}

fn sort_with_sign(mut v: Vec<usize>) -> (Vec<usize>, i64) {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (v, sign)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out.sort();
    out
}

impl WeightModule {
    fn atomic(
        n: usize,
        labels: Vec<String>,
        gl_weights: Vec<Vec<i64>>,
        ops: Vec<RationalMatrix>,
        descriptor: String,
    ) -> Self {
        let weights = gl_weights.iter().map(|g| project_weight(g)).collect();
        let dim = labels.len();
        Self {
            n,
            labels,
            gl_weights,
            weights,
            ops,
            factors: Vec::new(),
            factor_index: (0..dim).map(|b| vec![b]).collect(),
            descriptor,
        }
    }

    /// The defining representation `C^N`.
    pub fn vector_rep(n: usize) -> Self {
        assert!(n >= 2, "sl_N needs N >= 2");
        let mut ops = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut m = RationalMatrix::zeros(n, n);
                m[(i, j)] = q(1);
                ops.push(m);
            }
        }
        let gl = (0..n)
            .map(|i| (0..n).map(|k| i64::from(k == i)).collect())
            .collect();
        let labels = (1..=n).map(|i| format!("v{i}")).collect();
        Self::atomic(n, labels, gl, ops, format!("{n}:1"))
    }

    /// `Lambda^k` of this module with the derivation action.
    pub fn exterior_power(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.dim(), "wedge degree out of range");
        let basis = subsets(self.dim(), k);
        let index: BTreeMap<Vec<usize>, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let d = basis.len();
        let mut ops = Vec::with_capacity(self.n * self.n);
        for x in &self.ops {
            let mut m = RationalMatrix::zeros(d, d);
            for (col, s) in basis.iter().enumerate() {
                for p in 0..k {
                    for t in 0..self.dim() {
                        let c = &x[(t, s[p])];
                        if c.is_zero() || (t != s[p] && s.contains(&t)) {
                            continue;
                        }
                        let mut img = s.clone();
                        img[p] = t;
                        let (sorted, sign) = sort_with_sign(img);
                        m[(index[&sorted], col)] += c * q(sign);
                    }
                }
            }
            ops.push(m);
        }
        let gl = basis
            .iter()
            .map(|s| {
                (0..self.n)
                    .map(|a| s.iter().map(|&b| self.gl_weights[b][a]).sum())
                    .collect()
            })
            .collect();
        let labels = basis
            .iter()
            .map(|s| {
                s.iter()
                    .map(|&b| self.labels[b].as_str())
                    .collect::<Vec<_>>()
                    .join("^")
            })
            .collect();
        let descriptor = if self.descriptor == format!("{}:1", self.n) {
            format!("{}:{k}", self.n)
        } else {
            format!("wedge{k}({})", self.descriptor)
        };
        Self::atomic(self.n, labels, gl, ops, descriptor)
    }

    /// `L_m` for sl_2 realized as `Sym^m C^2`:
    /// `H v_k = (m-2k) v_k`, `F v_k = (k+1) v_{k+1}`, `E v_k = (m-k+1) v_{k-1}`.
    pub fn sl2_irrep(m: usize) -> Self {
        let d = m + 1;
        let mut e = RationalMatrix::zeros(d, d);
        let mut f = RationalMatrix::zeros(d, d);
        for k in 0..d {
            if k >= 1 {
                e[(k - 1, k)] = q((m - k + 1) as i64);
            }
            if k + 1 < d {
                f[(k + 1, k)] = q(k as i64 + 1);
            }
        }
        let gl: Vec<Vec<i64>> = (0..d).map(|k| vec![(m - k) as i64, k as i64]).collect();
        let diag =
            |a: usize| RationalMatrix::diagonal(&gl.iter().map(|g| q(g[a])).collect::<Vec<_>>());
        let ops = vec![diag(0), e, f, diag(1)];
        let labels = (0..d).map(|k| format!("v{k}")).collect();
        Self::atomic(2, labels, gl, ops, format!("2:L{m}"))
    }

    /// Tensor product; the last factor varies fastest.
    pub fn tensor(modules: &[WeightModule]) -> Result<Self> {
        let first = modules
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty tensor product".into()))?;
        if let Some(m) = modules.iter().find(|m| m.n != first.n) {
            return Err(Error::MixedRank(first.n, m.n));
        }
        let atoms: Vec<WeightModule> = modules.iter().flat_map(|m| m.atoms()).collect();
        if atoms.len() == 1 {
            return Ok(atoms[0].clone());
        }
        let n = first.n;
        let mut acc = atoms[0].clone();
        for b in &atoms[1..] {
            acc = acc.binary_tensor(b);
        }
        let mut descriptor = format!("{n}:");
        let parts: Vec<String> = atoms
            .iter()
            .map(|a| {
                a.descriptor
                    .split_once(':')
                    .map_or(a.descriptor.clone(), |(_, t)| t.to_string())
            })
            .collect();
        descriptor.push_str(&parts.join(","));
        acc.descriptor = descriptor;
        acc.factors = atoms;
        Ok(acc)
    }

    fn binary_tensor(&self, other: &WeightModule) -> Self {
        let (da, db) = (self.dim(), other.dim());
        let ia = RationalMatrix::identity(da);
        let ib = RationalMatrix::identity(db);
        let ops = self
            .ops
            .iter()
            .zip(&other.ops)
            .map(|(x, y)| &x.kron(&ib) + &ia.kron(y))
            .collect();
        let mut labels = Vec::with_capacity(da * db);
        let mut gl = Vec::with_capacity(da * db);
        let mut weights = Vec::with_capacity(da * db);
        let mut factor_index = Vec::with_capacity(da * db);
        for a in 0..da {
            for b in 0..db {
                labels.push(format!("{}⊗{}", self.labels[a], other.labels[b]));
                gl.push(
                    self.gl_weights[a]
                        .iter()
                        .zip(&other.gl_weights[b])
                        .map(|(x, y)| x + y)
                        .collect(),
                );
                weights.push(
                    self.weights[a]
                        .iter()
                        .zip(&other.weights[b])
                        .map(|(x, y)| x + y)
                        .collect(),
                );
                let mut fi = self.factor_index[a].clone();
                fi.extend(&other.factor_index[b]);
                factor_index.push(fi);
            }
        }
        Self {
            n: self.n,
            labels,
            gl_weights: gl,
            weights,
            ops,
            factors: Vec::new(),
            factor_index,
            descriptor: String::new(),
        }
    }

    /// Parse `"N:t1,t2,..."` where each token is a wedge degree `k` or `L<m>` (sl_2 only).
    pub fn from_descriptor(text: &str) -> Result<Self> {
        let bad = || Error::DimensionMismatch(format!("bad module descriptor '{text}'"));
        let (n, rest) = text.trim().split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        if n < 2 {
            return Err(bad());
        }
        let mut factors = Vec::new();
        for tok in rest.split(',') {
            let tok = tok.trim();
            if let Some(m) = tok.strip_prefix('L') {
                let m: usize = m.parse().map_err(|_| bad())?;
                if n != 2 {
                    return Err(bad());
                }
                factors.push(Self::sl2_irrep(m));
            } else {
                let k: usize = tok.parse().map_err(|_| bad())?;
                if k == 0 || k > n {
                    return Err(bad());
                }
                factors.push(Self::vector_rep(n).exterior_power(k));
            }
        }
        Self::tensor(&factors)
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weight(&self, b: usize) -> &Vector {
        &self.weights[b]
    }

    pub fn weights(&self) -> &[Vector] {
        &self.weights
    }

    pub fn gl_weight(&self, b: usize) -> &[i64] {
        &self.gl_weights[b]
    }

    /// `e_{i,j}` with 0-based indices.
    pub fn e(&self, i: usize, j: usize) -> &RationalMatrix {
        &self.ops[i * self.n + j]
    }

    /// `E_alpha` for a root `alpha = e_a - e_b`, i.e. `e_{a,b}`.
    pub fn root_op(&self, alpha: &[Rational]) -> &RationalMatrix {
        let (a, b) = root_indices(alpha).expect("type A root");
        self.e(a, b)
    }

    /// Diagonal action of `h` in the Cartan subalgebra.
    pub fn h_action(&self, h: &[Rational]) -> RationalMatrix {
        let d: Vec<Rational> = self.weights.iter().map(|w| dot(h, w)).collect();
        RationalMatrix::diagonal(&d)
    }

    /// `(H_alpha, E_alpha, F_alpha)` for a type A root.
    pub fn sl2_triple(
        &self,
        alpha: &[Rational],
    ) -> (RationalMatrix, &RationalMatrix, &RationalMatrix) {
        let neg: Vector = alpha.iter().map(|x| -x).collect();
        (
            self.h_action(alpha),
            self.root_op(alpha),
            self.root_op(&neg),
        )
    }

    /// Distinct weights in first-appearance order with their basis indices.
    pub fn weight_spaces(&self) -> Vec<(Vector, Vec<usize>)> {
        let mut out: Vec<(Vector, Vec<usize>)> = Vec::new();
        for (b, w) in self.weights.iter().enumerate() {
            match out.iter_mut().find(|(v, _)| v == w) {
                Some((_, idx)) => idx.push(b),
                None => out.push((w.clone(), vec![b])),
            }
        }
        out
    }

    pub fn weight_space(&self, nu: &[Rational]) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.weights[b] == nu).collect()
    }

    fn atoms(&self) -> Vec<WeightModule> {
        if self.factors.is_empty() {
            vec![self.clone()]
        } else {
            self.factors.clone()
        }
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len().max(1)
    }

    pub fn factor(&self, k: usize) -> &WeightModule {
        if self.factors.is_empty() {
            assert_eq!(k, 0);
            self
        } else {
            &self.factors[k]
        }
    }

    /// Basis index of factor `k` in basis vector `b`.
    pub fn factor_basis(&self, b: usize, k: usize) -> usize {
        self.factor_index[b][k]
    }

    /// Weight of the `k`-th tensor component of basis vector `b`.
    pub fn factor_weight(&self, b: usize, k: usize) -> &Vector {
        self.factor(k).weight(self.factor_index[b][k])
    }

    /// `x^{(k)}`: a factor-level matrix acting in slot `k`.
    pub fn embed(&self, k: usize, x: &RationalMatrix) -> RationalMatrix {
        if self.factors.is_empty() {
            return x.clone();
        }
        let before: usize = self.factors[..k].iter().map(WeightModule::dim).product();
        let after: usize = self.factors[k + 1..]
            .iter()
            .map(WeightModule::dim)
            .product();
        RationalMatrix::identity(before)
            .kron(x)
            .kron(&RationalMatrix::identity(after))
    }

    /// `e_{i,j}^{(k)}`.
    pub fn factor_e(&self, k: usize, i: usize, j: usize) -> RationalMatrix {
        self.embed(k, self.factor(k).e(i, j))
    }

    /// `h^{(k)}` as a diagonal matrix.
    pub fn factor_h(&self, k: usize, h: &[Rational]) -> RationalMatrix {
        let d: Vec<Rational> = (0..self.dim())
            .map(|b| dot(h, self.factor_weight(b, k)))
            .collect();
        RationalMatrix::diagonal(&d)
    }
}

impl fmt::Debug for WeightModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightModule({}, dim {})", self.descriptor, self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_brackets(m: &WeightModule) {
        let n = m.n();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let lhs = m.e(i, j).commutator(m.e(k, l));
                        let mut rhs = RationalMatrix::zeros(m.dim(), m.dim());
                        if j == k {
                            rhs = &rhs + m.e(i, l);
                        }
                        if i == l {
                            rhs = &rhs - m.e(k, j);
                        }
                        assert_eq!(lhs, rhs, "[e{i}{j}, e{k}{l}] on {m:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn vector_rep_brackets_and_trace() {
        for n in 2..=4 {
            let v = WeightModule::vector_rep(n);
            check_brackets(&v);
            let total = v.weights().iter().fold(vec![q(0); n], |acc, w| {
                acc.iter().zip(w).map(|(a, b)| a + b).collect()
            });
            assert!(total.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn sl2_vector_is_l1() {
        let v = WeightModule::vector_rep(2);
        let l1 = WeightModule::sl2_irrep(1);
        assert_eq!(v.e(0, 1), l1.e(0, 1));
        assert_eq!(v.e(1, 0), l1.e(1, 0));
        assert_eq!(v.weights(), l1.weights());
    }

    #[test]
    fn sl2_irreps_satisfy_brackets() {
        for m in 0..=5 {
            check_brackets(&WeightModule::sl2_irrep(m));
        }
    }

    #[test]
    fn wedge_dimensions_and_weights() {
        let v3 = WeightModule::vector_rep(3);
        assert_eq!(v3.exterior_power(1).e(0, 1), v3.e(0, 1));
        let w = v3.exterior_power(2);
        assert_eq!(w.dim(), 3);
        let mut expect: Vec<Vec<i64>> = vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        let mut got: Vec<Vec<i64>> = (0..3).map(|b| w.gl_weight(b).to_vec()).collect();
        expect.sort();
        got.sort();
        assert_eq!(got, expect);
        check_brackets(&w);
        let w42 = WeightModule::vector_rep(4).exterior_power(2);
        assert_eq!(w42.dim(), 6);
        check_brackets(&w42);
    }

    #[test]
    fn tensor_structure() {
        let v = WeightModule::vector_rep(2);
        let single = WeightModule::tensor(std::slice::from_ref(&v)).unwrap();
        assert_eq!(single, v);
        let vv = WeightModule::tensor(&[v.clone(), v.clone()]).unwrap();
        assert_eq!(vv.weight_space(&[q(0), q(0)]).len(), 2);
        assert_eq!(vv.num_factors(), 2);
        check_brackets(&vv);
        for k in 0..2 {
            for b in 0..vv.dim() {
                let _ = vv.factor_weight(b, k);
            }
        }
        // weights of a tensor product add
        for b in 0..vv.dim() {
            let s: Vector = vv
                .factor_weight(b, 0)
                .iter()
                .zip(vv.factor_weight(b, 1))
                .map(|(x, y)| x + y)
                .collect();
            assert_eq!(&s, vv.weight(b));
        }
        let mixed = WeightModule::tensor(&[v, WeightModule::vector_rep(3)]);
        assert_eq!(mixed, Err(Error::MixedRank(2, 3)));
    }

    #[test]
    fn descriptors_roundtrip() {
        let m = WeightModule::from_descriptor("3:1,2").unwrap();
        assert_eq!(m.dim(), 9);
        assert_eq!(m.descriptor(), "3:1,2");
        assert_eq!(WeightModule::from_descriptor(m.descriptor()).unwrap(), m);
        assert!(WeightModule::from_descriptor("3:4").is_err());
        assert!(WeightModule::from_descriptor("x").is_err());
        assert_eq!(WeightModule::from_descriptor("2:L3").unwrap().dim(), 4);
    }

    #[test]
    fn root_ops_shift_weights() {
        let m = WeightModule::from_descriptor("3:1,2").unwrap();
        for a in 0..3 {
            for c in 0..3 {
                if a == c {
                    continue;
                }
                let mut alpha = vec![q(0); 3];
                alpha[a] = q(1);
                alpha[c] = q(-1);
                let e = m.root_op(&alpha);
                for col in 0..m.dim() {
                    for row in 0..m.dim() {
                        if !e[(row, col)].is_zero() {
                            let shifted: Vector = m
                                .weight(col)
                                .iter()
                                .zip(&alpha)
                                .map(|(x, y)| x + y)
                                .collect();
                            assert_eq!(m.weight(row), &shifted);
                        }
                    }
                }
            }
        }
    }
}
