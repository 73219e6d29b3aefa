//! The extended affine Weyl group `W^ = W x| P^vee` acting on affine roots.
//!
//! An element `(w, omega)` acts by `[z, xi] -> [w z, xi - (z, omega)]`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::rational::{as_i64, fmt_vec, vadd, vscale, Rational};
use crate::linalg::RationalMatrix;

use super::system::{RootSystem, Vector};
use super::weyl::WeylElement;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineRoot {
    pub root: Vector,
    pub level: i64,
}

impl AffineRoot {
    pub fn new(root: Vector, level: i64) -> Self {
        Self { root, level }
    }

    pub fn neg(&self) -> Self {
        Self::new(self.root.iter().map(|x| -x).collect(), -self.level)
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", fmt_vec(&self.root), self.level)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    finite: RationalMatrix,
    translation: Vector,
}

impl RootSystem {
    /// Affine simple root `alpha_k`; `alpha_0 = [-theta, 1]`.
    pub fn affine_simple_root(&self, k: usize) -> AffineRoot {
        if k == 0 {
            AffineRoot::new(self.theta().iter().map(|x| -x).collect(), 1)
        } else {
            AffineRoot::new(self.simple_root(k).clone(), 0)
        }
    }

    pub fn is_positive_affine(&self, a: &AffineRoot) -> bool {
        a.level > 0 || (a.level == 0 && self.is_positive_root(&a.root))
    }

    /// `(x, alpha)` for `x` in `P^vee` and a root `alpha`, as an integer.
    fn coweight_pairing(&self, x: &[Rational], alpha: &[Rational]) -> i64 {
        let p = self.form(x, alpha);
        as_i64(&p).unwrap_or_else(|| panic!("{} is not in P^vee", fmt_vec(x)))
    }
}

impl AffineWeylElement {
    pub fn new(finite: RationalMatrix, translation: Vector) -> Self {
        Self {
            finite,
            translation,
        }
    }

    pub fn identity(rs: &RootSystem) -> Self {
        Self::new(
            RationalMatrix::identity(rs.ambient_dim()),
            vec![Rational::zero(); rs.ambient_dim()],
        )
    }

    pub fn from_finite(rs: &RootSystem, w: &WeylElement) -> Self {
        Self::new(w.matrix().clone(), vec![Rational::zero(); rs.ambient_dim()])
    }

    /// Translation `t_omega = (1, omega)`.
    pub fn translation(rs: &RootSystem, omega: &[Rational]) -> Self {
        Self::new(RationalMatrix::identity(rs.ambient_dim()), omega.to_vec())
    }

    /// Reflection in the affine root `[alpha, j]`: `(s_alpha, j alpha^vee)`.
    pub fn reflection(rs: &RootSystem, a: &AffineRoot) -> Self {
        let coroot = rs.coroot(&a.root);
        Self::new(
            rs.reflection_matrix(&a.root),
            vscale(&Rational::from_integer(a.level.into()), &coroot),
        )
    }

    /// Simple affine reflection `s_k`, `0 <= k <= rank`.
    pub fn simple_reflection(rs: &RootSystem, k: usize) -> Self {
        Self::reflection(rs, &rs.affine_simple_root(k))
    }

    /// `pi_i = t_{omega_i} w_[i]^{-1}`; `pi_0` is the identity.
    pub fn pi(rs: &RootSystem, i: usize) -> Result<Self> {
        if i == 0 {
            return Ok(Self::identity(rs));
        }
        if !rs.o_star().contains(&i) {
            return Err(Error::NotInOStar(i));
        }
        let wb = rs.w_bracket(i)?;
        let t = Self::translation(rs, rs.fundamental_coweight(i));
        Ok(t.compose(&Self::from_finite(rs, &wb.inverse(rs))))
    }

    /// `pi_i s_{j_l} ... s_{j_1}` for `word = [j_1, ..., j_l]`.
    pub fn from_word(rs: &RootSystem, pi_index: usize, word: &[usize]) -> Result<Self> {
        let mut x = Self::identity(rs);
        for &j in word {
            x = Self::simple_reflection(rs, j).compose(&x);
        }
        Ok(Self::pi(rs, pi_index)?.compose(&x))
    }

    pub fn finite_matrix(&self) -> &RationalMatrix {
        &self.finite
    }

    pub fn finite_part(&self, rs: &RootSystem) -> WeylElement {
        WeylElement::from_matrix(rs, self.finite.clone())
    }

    pub fn translation_part(&self) -> &Vector {
        &self.translation
    }

    /// `(w1, o1)(w2, o2) = (w1 w2, o2 + w2^{-1} o1)`.
    pub fn compose(&self, other: &Self) -> Self {
        let w2_inv = other.finite.inverse().expect("invertible");
        let t = vadd(&other.translation, &w2_inv.mul_vec(&self.translation));
        Self::new(&self.finite * &other.finite, t)
    }

    /// `(w, o)^{-1} = (w^{-1}, -w o)`.
    pub fn inverse(&self) -> Self {
        let w_inv = self.finite.inverse().expect("invertible");
        let t = self
            .finite
            .mul_vec(&self.translation)
            .into_iter()
            .map(|x| -x)
            .collect();
        Self::new(w_inv, t)
    }

    /// Action on `[z, xi]`.
    pub fn apply(&self, z: &[Rational], xi: &Rational) -> (Vector, Rational) {
        let shift = crate::linalg::rational::dot(z, &self.translation);
        (self.finite.mul_vec(z), xi - shift)
    }

    pub fn apply_root(&self, rs: &RootSystem, a: &AffineRoot) -> AffineRoot {
        let c = rs.coweight_pairing(&self.translation, &a.root);
        AffineRoot::new(self.finite.mul_vec(&a.root), a.level - c)
    }

    /// Number of positive affine roots sent to negative ones.
    pub fn length(&self, rs: &RootSystem) -> usize {
        let mut total = 0i64;
        for alpha in rs.all_roots() {
            let c = rs.coweight_pairing(&self.translation, &alpha);
            let j_min = if rs.is_positive_root(&alpha) { 0 } else { 1 };
            let wneg = i64::from(!rs.is_positive_root(&self.finite.mul_vec(&alpha)));
            total += (c + wneg - j_min).max(0);
        }
        total as usize
    }

    /// The positive affine roots sent to negative ones, sorted.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<AffineRoot> {
        let mut out = Vec::new();
        for alpha in rs.all_roots() {
            let c = rs.coweight_pairing(&self.translation, &alpha);
            let j_min = if rs.is_positive_root(&alpha) { 0 } else { 1 };
            let wneg = i64::from(!rs.is_positive_root(&self.finite.mul_vec(&alpha)));
            for j in j_min..c + wneg {
                out.push(AffineRoot::new(alpha.clone(), j));
            }
        }
        out.sort();
        out
    }

    /// Decompose as `pi_i s_{j_l} ... s_{j_1}` with `l` equal to the length.
    /// Returns `(i, [j_1, ..., j_l])`.
    pub fn reduced_word(&self, rs: &RootSystem) -> (usize, Vec<usize>) {
        let mut x = self.clone();
        let mut word = Vec::new();
        loop {
            let descent = (0..=rs.rank()).find(|&k| {
                let img = x.apply_root(rs, &rs.affine_simple_root(k));
                !rs.is_positive_affine(&img)
            });
            match descent {
                Some(k) => {
                    word.push(k);
                    x = x.compose(&Self::simple_reflection(rs, k));
                }
                None => break,
            }
        }
        let pi_index = std::iter::once(0)
            .chain(rs.o_star())
            .find(|&i| Self::pi(rs, i).map(|p| p == x).unwrap_or(false))
            .expect("length-zero elements are the pi_i");
        (pi_index, word)
    }

    /// `A~` sequence: `alpha_{j_1}, s_{j_1}(alpha_{j_2}), ...` along the reduced word.
    pub fn a_tilde_sequence(&self, rs: &RootSystem) -> Vec<AffineRoot> {
        let (_, word) = self.reduced_word(rs);
        a_tilde_of_word(rs, &word)
    }

    /// Permutation of the affine simple roots induced by `pi_i`.
    pub fn pi_action_on_simple(rs: &RootSystem, i: usize) -> Result<Vec<usize>> {
        let p = Self::pi(rs, i)?;
        let mut perm = Vec::with_capacity(rs.rank() + 1);
        for k in 0..=rs.rank() {
            let img = p.apply_root(rs, &rs.affine_simple_root(k));
            let target = (0..=rs.rank())
                .find(|&m| rs.affine_simple_root(m) == img)
                .ok_or(Error::NotInOStar(i))?;
            perm.push(target);
        }
        Ok(perm)
    }

    pub fn is_identity(&self) -> bool {
        self.finite.is_identity() && self.translation.iter().all(Zero::is_zero)
    }
}

/// `A~` sequence of an affine word `[j_1, ..., j_l]`.
pub fn a_tilde_of_word(rs: &RootSystem, word: &[usize]) -> Vec<AffineRoot> {
    let mut prefix = AffineWeylElement::identity(rs);
    let mut out = Vec::with_capacity(word.len());
    for &j in word {
        out.push(prefix.apply_root(rs, &rs.affine_simple_root(j)));
        prefix = prefix.compose(&AffineWeylElement::simple_reflection(rs, j));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;
    use crate::roots::system::CartanType;

    fn coeff_root(rs: &RootSystem, c: &[i64]) -> Vector {
        let cq: Vec<Rational> = c.iter().map(|&x| q(x)).collect();
        rs.from_coords(&cq)
    }

    #[test]
    fn sl2_translation_is_pi_s1() {
        let rs = RootSystem::build(CartanType::A, 1).unwrap();
        let t = AffineWeylElement::translation(&rs, rs.fundamental_coweight(1));
        assert_eq!(t.length(&rs), 1);
        assert_eq!(t.reduced_word(&rs), (1, vec![1]));
    }

    #[test]
    fn g2_translation_inversions() {
        let rs = RootSystem::build(CartanType::G, 2).unwrap();
        let t = AffineWeylElement::translation(&rs, rs.fundamental_coweight(1));
        assert_eq!(t.length(&rs), 10);
        let mut expect = Vec::new();
        for (c, levels) in [
            (vec![1, 0], 0..1),
            (vec![1, 1], 0..1),
            (vec![2, 1], 0..2),
            (vec![3, 1], 0..3),
            (vec![3, 2], 0..3),
        ] {
            for j in levels {
                expect.push(AffineRoot::new(coeff_root(&rs, &c), j));
            }
        }
        expect.sort();
        assert_eq!(t.inversion_set(&rs), expect);
        let mut seq = t.a_tilde_sequence(&rs);
        seq.sort();
        assert_eq!(seq, expect);
    }

    #[test]
    fn b2_translation_inversions() {
        // alpha long, beta short
        let rs = RootSystem::build(CartanType::B, 2).unwrap();
        let t = AffineWeylElement::translation(&rs, rs.fundamental_coweight(2));
        let mut expect: Vec<AffineRoot> = [
            (vec![1, 2], 1),
            (vec![1, 1], 0),
            (vec![1, 2], 0),
            (vec![0, 1], 0),
        ]
        .into_iter()
        .map(|(c, j)| AffineRoot::new(coeff_root(&rs, &c), j))
        .collect();
        expect.sort();
        assert_eq!(t.inversion_set(&rs), expect);
    }

    #[test]
    fn pi_has_length_zero_and_permutes() {
        for (k, r) in [
            (CartanType::A, 3),
            (CartanType::B, 3),
            (CartanType::C, 3),
            (CartanType::D, 4),
            (CartanType::E, 6),
        ] {
            let rs = RootSystem::build(k, r).unwrap();
            for i in rs.o_star() {
                let p = AffineWeylElement::pi(&rs, i).unwrap();
                assert_eq!(p.length(&rs), 0);
                let perm = AffineWeylElement::pi_action_on_simple(&rs, i).unwrap();
                assert_eq!(perm[0], i);
                let mut sorted = perm.clone();
                sorted.sort();
                assert_eq!(sorted, (0..=r).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn reduced_word_roundtrip() {
        let rs = RootSystem::build(CartanType::A, 2).unwrap();
        for i in 1..=2 {
            let t = AffineWeylElement::translation(&rs, rs.fundamental_coweight(i));
            let (p, word) = t.reduced_word(&rs);
            assert_eq!(word.len(), t.length(&rs));
            assert_eq!(AffineWeylElement::from_word(&rs, p, &word).unwrap(), t);
        }
    }

    #[test]
    fn not_in_o_star() {
        let rs = RootSystem::build(CartanType::G, 2).unwrap();
        assert_eq!(AffineWeylElement::pi(&rs, 1), Err(Error::NotInOStar(1)));
    }
}
