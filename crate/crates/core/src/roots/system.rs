//! Cartan data for the simple types A-G.
//!
//! Every vector lives in an ambient rational space with a rational Gram
//! matrix. Simple roots are numbered `1..=rank`; index `0` is reserved for
//! the affine root `alpha_0 = [-theta, 1]`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::rational::{dot, q, qf, vscale, vsub, Rational};
use crate::linalg::RationalMatrix;

use super::weyl::WeylElement;

pub type Vector = Vec<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'D' => CartanType::D,
            'E' => CartanType::E,
            'F' => CartanType::F,
            'G' => CartanType::G,
            _ => return None,
        })
    }

    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 3,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }
}

#[derive(Clone)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    gram: RationalMatrix,
    simple: Vec<Vector>,
    /// Inverse Gram matrix of the simple roots; converts pairings into coordinates.
    simple_gram_inv: RationalMatrix,
    positive: Vec<Vector>,
    positive_coeffs: Vec<Vec<i64>>,
    root_lookup: HashMap<Vector, (usize, bool)>,
    theta: Vector,
    fundamental: Vec<Vector>,
    fundamental_dual: Vec<Vector>,
    rho: Vector,
}

fn unit(n: usize, i: usize) -> Vector {
    (0..n).map(|k| if k == i { q(1) } else { q(0) }).collect()
}

fn diff(n: usize, i: usize, j: usize) -> Vector {
    vsub(&unit(n, i), &unit(n, j))
}

/// Bourbaki-labelled Cartan matrix of E_r.
fn e_cartan(rank: usize) -> RationalMatrix {
    let mut c = RationalMatrix::identity(rank).scale(&q(2));
    let mut link = |a: usize, b: usize| {
        c[(a - 1, b - 1)] = q(-1);
        c[(b - 1, a - 1)] = q(-1);
    };
    link(1, 3);
    link(3, 4);
    link(2, 4);
    for k in 4..rank {
        link(k, k + 1);
    }
    c
}

impl RootSystem {
    pub fn build(kind: CartanType, rank: usize) -> Result<Self> {
        if !kind.valid_rank(rank) {
            return Err(Error::InvalidCartanType {
                letter: kind.letter(),
                rank,
            });
        }
        let (gram, simple) = match kind {
            CartanType::A => {
                let n = rank + 1;
                (
                    RationalMatrix::identity(n),
                    (0..rank).map(|i| diff(n, i, i + 1)).collect(),
                )
            }
            CartanType::B => {
                let mut s: Vec<Vector> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
                s.push(unit(rank, rank - 1));
                (RationalMatrix::identity(rank), s)
            }
            CartanType::C => {
                let mut s: Vec<Vector> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
                s.push(vscale(&q(2), &unit(rank, rank - 1)));
                (RationalMatrix::identity(rank).scale(&qf(1, 2)), s)
            }
            CartanType::D => {
                let mut s: Vec<Vector> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
                let mut last = unit(rank, rank - 2);
                last[rank - 1] = q(1);
                s.push(last);
                (RationalMatrix::identity(rank), s)
            }
            CartanType::E => (e_cartan(rank), (0..rank).map(|i| unit(rank, i)).collect()),
            CartanType::F => {
                let h = qf(1, 2);
                let s = vec![
                    diff(4, 1, 2),
                    diff(4, 2, 3),
                    unit(4, 3),
                    vec![h.clone(), -h.clone(), -h.clone(), -h],
                ];
                (RationalMatrix::identity(4), s)
            }
            CartanType::G => {
                let s = vec![diff(3, 0, 1), vec![q(-2), q(1), q(1)]];
                (RationalMatrix::identity(3).scale(&qf(1, 3)), s)
            }
        };
        Ok(Self::from_simple_roots(kind, gram, simple))
    }

    fn from_simple_roots(kind: CartanType, gram: RationalMatrix, simple: Vec<Vector>) -> Self {
        let rank = simple.len();
        let form = |a: &[Rational], b: &[Rational]| dot(a, &gram.mul_vec(b));
        let mut b = RationalMatrix::zeros(rank, rank);
        for i in 0..rank {
            for j in 0..rank {
                b[(i, j)] = form(&simple[i], &simple[j]);
            }
        }
        let simple_gram_inv = b.inverse().expect("simple roots are independent");

        let mut rs = Self {
            kind,
            rank,
            gram,
            simple,
            simple_gram_inv,
            positive: Vec::new(),
            positive_coeffs: Vec::new(),
            root_lookup: HashMap::new(),
            theta: Vec::new(),
            fundamental: Vec::new(),
            fundamental_dual: Vec::new(),
            rho: Vec::new(),
        };

        // Orbit of the simple roots under the simple reflections is all of Sigma.
        let mut seen: HashMap<Vector, ()> = HashMap::new();
        let mut queue: VecDeque<Vector> = rs.simple.iter().cloned().collect();
        let mut all = Vec::new();
        while let Some(r) = queue.pop_front() {
            if seen.contains_key(&r) {
                continue;
            }
            seen.insert(r.clone(), ());
            for i in 1..=rank {
                let s = rs.reflect(rs.simple_root(i), &r);
                if !seen.contains_key(&s) {
                    queue.push_back(s);
                }
            }
            all.push(r);
        }
        let mut pos: Vec<(Vec<i64>, Vector)> = all
            .into_iter()
            .map(|r| (rs.integer_coords(&r).expect("roots lie in Q"), r))
            .filter(|(c, _)| c.iter().all(|&x| x >= 0))
            .collect();
        pos.sort_by(|(a, _), (b, _)| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        for (idx, (c, r)) in pos.into_iter().enumerate() {
            rs.root_lookup
                .insert(r.iter().map(|x| -x).collect(), (idx, false));
            rs.root_lookup.insert(r.clone(), (idx, true));
            rs.positive.push(r);
            rs.positive_coeffs.push(c);
        }
        rs.theta = rs.positive.last().expect("nonempty root system").clone();

        for i in 1..=rank {
            let a = rs.simple_root(i).clone();
            let half_len = rs.form(&a, &a) / q(2);
            let mut e = vec![q(0); rank];
            e[i - 1] = q(1);
            let dual = rs.from_coords(&rs.simple_gram_inv.mul_vec(&e));
            rs.fundamental.push(vscale(&half_len, &dual));
            rs.fundamental_dual.push(dual);
        }
        let amb = rs.ambient_dim();
        rs.rho = rs.fundamental.iter().fold(vec![q(0); amb], |acc, w| {
            acc.iter().zip(w).map(|(a, b)| a + b).collect()
        });
        rs
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind.letter(), self.rank)
    }

    pub fn gram(&self) -> &RationalMatrix {
        &self.gram
    }

    /// The invariant form `(a, b)`.
    pub fn form(&self, a: &[Rational], b: &[Rational]) -> Rational {
        dot(a, &self.gram.mul_vec(b))
    }

    pub fn coroot(&self, alpha: &[Rational]) -> Vector {
        let c = q(2) / self.form(alpha, alpha);
        vscale(&c, alpha)
    }

    /// `s_alpha(x) = x - (x, alpha^vee) alpha`.
    pub fn reflect(&self, alpha: &[Rational], x: &[Rational]) -> Vector {
        let c = self.form(x, &self.coroot(alpha));
        vsub(x, &vscale(&c, alpha))
    }

    /// Simple root `alpha_i`, `1 <= i <= rank`.
    pub fn simple_root(&self, i: usize) -> &Vector {
        &self.simple[i - 1]
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive
    }

    /// Simple-root coefficients of the `k`-th positive root.
    pub fn positive_coeffs(&self, k: usize) -> &[i64] {
        &self.positive_coeffs[k]
    }

    pub fn all_roots(&self) -> Vec<Vector> {
        let mut v: Vec<Vector> = self.positive.clone();
        v.extend(self.positive.iter().map(|r| r.iter().map(|x| -x).collect()));
        v
    }

    pub fn theta(&self) -> &Vector {
        &self.theta
    }

    /// Fundamental weight `omega_i`.
    pub fn fundamental_weight(&self, i: usize) -> &Vector {
        &self.fundamental[i - 1]
    }

    /// Dual fundamental weight `omega_i^vee`.
    pub fn fundamental_coweight(&self, i: usize) -> &Vector {
        &self.fundamental_dual[i - 1]
    }

    pub fn rho(&self) -> &Vector {
        &self.rho
    }

    pub fn is_root(&self, v: &[Rational]) -> bool {
        self.root_lookup.contains_key(v)
    }

    pub fn is_positive_root(&self, v: &[Rational]) -> bool {
        matches!(self.root_lookup.get(v), Some((_, true)))
    }

    /// Coordinates of `v` in the basis of simple roots (assumes `v` lies in their span).
    pub fn coords(&self, v: &[Rational]) -> Vector {
        let pairings: Vector = self.simple.iter().map(|a| self.form(v, a)).collect();
        self.simple_gram_inv.mul_vec(&pairings)
    }

    /// Integer coordinates when `v` lies in the root lattice.
    pub fn integer_coords(&self, v: &[Rational]) -> Option<Vec<i64>> {
        self.coords(v)
            .iter()
            .map(|c| {
                if c.is_integer() {
                    c.numer().to_i64()
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn from_coords(&self, c: &[Rational]) -> Vector {
        let amb = self.ambient_dim();
        c.iter()
            .zip(&self.simple)
            .fold(vec![q(0); amb], |acc, (ci, a)| {
                acc.iter().zip(a).map(|(x, y)| x + ci * y).collect()
            })
    }

    pub fn height(&self, v: &[Rational]) -> Rational {
        self.coords(v).into_iter().fold(q(0), |a, b| a + b)
    }

    /// Is `v` a nonzero element of `Q^+`?
    pub fn is_strictly_positive_in_q(&self, v: &[Rational]) -> bool {
        match self.integer_coords(v) {
            Some(c) => c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0),
            None => false,
        }
    }

    /// `(omega_i^vee, alpha) in {0, 1}` for every positive root.
    pub fn is_minuscule(&self, i: usize) -> bool {
        let w = self.fundamental_coweight(i);
        self.positive.iter().all(|a| {
            let p = self.form(w, a);
            p.is_zero() || p.is_one()
        })
    }

    /// Indices `i != 0` whose simple root has coefficient 1 in `theta`; these are
    /// the images of `alpha_0` under automorphisms of the affine diagram.
    pub fn o_star(&self) -> Vec<usize> {
        let c = self.integer_coords(&self.theta).expect("theta in Q");
        (1..=self.rank).filter(|&i| c[i - 1] == 1).collect()
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::from_matrix(self, RationalMatrix::identity(self.ambient_dim()))
    }

    pub fn reflection_matrix(&self, alpha: &[Rational]) -> RationalMatrix {
        let n = self.ambient_dim();
        let g_coroot = self.gram.mul_vec(&self.coroot(alpha));
        let mut m = RationalMatrix::identity(n);
        for a in 0..n {
            for b in 0..n {
                let d = &alpha[a] * &g_coroot[b];
                if !d.is_zero() {
                    m[(a, b)] -= d;
                }
            }
        }
        m
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        WeylElement::from_matrix(self, self.reflection_matrix(self.simple_root(i)))
    }

    /// `s_{i_k} ... s_{i_1}` for `word = [i_1, ..., i_k]`.
    pub fn weyl_from_word(&self, word: &[usize]) -> WeylElement {
        let m = word
            .iter()
            .fold(RationalMatrix::identity(self.ambient_dim()), |acc, &i| {
                &self.reflection_matrix(self.simple_root(i)) * &acc
            });
        WeylElement::from_matrix(self, m)
    }

    /// Longest element of the subgroup generated by `s_j`, `j` in `gens`.
    pub fn longest_in(&self, gens: &[usize]) -> WeylElement {
        let mut m = RationalMatrix::identity(self.ambient_dim());
        loop {
            let next = gens.iter().copied().find(|&j| {
                let image = m.mul_vec(self.simple_root(j));
                self.is_positive_root(&image)
            });
            match next {
                Some(j) => m = &m * &self.reflection_matrix(self.simple_root(j)),
                None => return WeylElement::from_matrix(self, m),
            }
        }
    }

    /// Longest element `w_0`.
    pub fn longest(&self) -> WeylElement {
        let all: Vec<usize> = (1..=self.rank).collect();
        self.longest_in(&all)
    }

    /// `w_[i] = w_0 w_0^i`, with `w_0^i` longest in the stabilizer of `omega_i^vee`.
    pub fn w_bracket(&self, i: usize) -> Result<WeylElement> {
        if !self.is_minuscule(i) {
            return Err(Error::NotMinuscule(i));
        }
        let others: Vec<usize> = (1..=self.rank).filter(|&j| j != i).collect();
        Ok(self.longest().compose(self, &self.longest_in(&others)))
    }

    /// `w . lambda = w(lambda + rho) - rho`.
    pub fn dot_action(&self, w: &WeylElement, lambda: &[Rational]) -> Vector {
        let shifted: Vector = lambda.iter().zip(&self.rho).map(|(a, b)| a + b).collect();
        vsub(&w.apply(&shifted), &self.rho)
    }

    /// All elements of the finite Weyl group (breadth-first; only sensible for small groups).
    pub fn weyl_group_elements(&self) -> Vec<WeylElement> {
        let mut seen: HashMap<RationalMatrix, ()> = HashMap::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([RationalMatrix::identity(self.ambient_dim())]);
        while let Some(m) = queue.pop_front() {
            if seen.contains_key(&m) {
                continue;
            }
            seen.insert(m.clone(), ());
            for i in 1..=self.rank {
                let n = &self.reflection_matrix(self.simple_root(i)) * &m;
                if !seen.contains_key(&n) {
                    queue.push_back(n);
                }
            }
            out.push(WeylElement::from_matrix(self, m));
        }
        out
    }

    /// Coxeter exponent `m_ij` read off the Cartan integers.
    pub fn coxeter_m(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        let (a, b) = (self.simple_root(i), self.simple_root(j));
        let aij = self.form(a, &self.coroot(b));
        let aji = self.form(b, &self.coroot(a));
        match (aij * aji).to_integer().abs().to_u32().unwrap_or(0) {
            0 => 2,
            1 => 3,
            2 => 4,
            _ => 6,
        }
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(kind: CartanType, rank: usize) -> RootSystem {
        RootSystem::build(kind, rank).unwrap()
    }

    #[test]
    fn a1_data() {
        let a1 = rs(CartanType::A, 1);
        assert_eq!(a1.positive_roots().len(), 1);
        let alpha = a1.simple_root(1).clone();
        assert_eq!(a1.fundamental_coweight(1), &vscale(&qf(1, 2), &alpha));
        assert_eq!(a1.rho(), a1.fundamental_weight(1));
    }

    #[test]
    fn a2_theta() {
        let a2 = rs(CartanType::A, 2);
        assert_eq!(a2.positive_roots().len(), 3);
        let sum: Vector = a2
            .simple_root(1)
            .iter()
            .zip(a2.simple_root(2))
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(a2.theta(), &sum);
    }

    #[test]
    fn g2_positive_roots() {
        let g2 = rs(CartanType::G, 2);
        let mut coeffs: Vec<Vec<i64>> = (0..6).map(|k| g2.positive_coeffs(k).to_vec()).collect();
        coeffs.sort();
        let mut expect = vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ];
        expect.sort();
        assert_eq!(coeffs, expect);
        // long roots have squared length 2
        assert_eq!(g2.form(g2.theta(), g2.theta()), q(2));
    }

    #[test]
    fn root_counts() {
        for (k, r, n) in [
            (CartanType::A, 3, 6),
            (CartanType::B, 3, 9),
            (CartanType::C, 3, 9),
            (CartanType::D, 4, 12),
            (CartanType::E, 6, 36),
            (CartanType::E, 7, 63),
            (CartanType::E, 8, 120),
            (CartanType::F, 4, 24),
        ] {
            assert_eq!(rs(k, r).positive_roots().len(), n, "{k:?}{r}");
        }
    }

    #[test]
    fn invalid_rank() {
        assert!(matches!(
            RootSystem::build(CartanType::G, 3),
            Err(Error::InvalidCartanType {
                letter: 'G',
                rank: 3
            })
        ));
        assert!(RootSystem::build(CartanType::A, 0).is_err());
    }

    #[test]
    fn lattice_invariants() {
        for (k, r) in [
            (CartanType::A, 3),
            (CartanType::B, 3),
            (CartanType::C, 3),
            (CartanType::D, 4),
            (CartanType::F, 4),
            (CartanType::G, 2),
            (CartanType::E, 6),
        ] {
            let s = rs(k, r);
            for i in 1..=r {
                for j in 1..=r {
                    let p = s.form(s.fundamental_coweight(i), s.simple_root(j));
                    assert_eq!(p, if i == j { q(1) } else { q(0) });
                    let p = s.form(s.fundamental_weight(i), &s.coroot(s.simple_root(j)));
                    assert_eq!(p, if i == j { q(1) } else { q(0) });
                }
            }
            for a in s.all_roots() {
                assert_eq!(s.form(&a, &s.coroot(&a)), q(2));
            }
            let half_sum = s
                .positive_roots()
                .iter()
                .fold(vec![q(0); s.ambient_dim()], |acc, a| {
                    acc.iter().zip(a).map(|(x, y)| x + y).collect::<Vec<_>>()
                });
            assert_eq!(vscale(&qf(1, 2), &half_sum), *s.rho());
            // theta dominates every positive root
            for a in s.positive_roots() {
                let d = vsub(s.theta(), a);
                assert!(d.iter().all(Zero::is_zero) || s.is_strictly_positive_in_q(&d));
            }
        }
    }

    #[test]
    fn minuscule_matches_o_star() {
        for (k, r) in [
            (CartanType::A, 3),
            (CartanType::B, 2),
            (CartanType::B, 4),
            (CartanType::C, 3),
            (CartanType::D, 4),
            (CartanType::D, 5),
            (CartanType::E, 6),
            (CartanType::E, 7),
            (CartanType::E, 8),
            (CartanType::F, 4),
            (CartanType::G, 2),
        ] {
            let s = rs(k, r);
            let mins: Vec<usize> = (1..=r).filter(|&i| s.is_minuscule(i)).collect();
            assert_eq!(mins, s.o_star(), "{k:?}{r}");
        }
        assert!(rs(CartanType::E, 8).o_star().is_empty());
        assert!(rs(CartanType::F, 4).o_star().is_empty());
        assert!(rs(CartanType::G, 2).o_star().is_empty());
    }

    #[test]
    fn b2_has_one_minuscule() {
        // (omega_i^vee, alpha) over the four positive roots, enumerated directly
        let b2 = rs(CartanType::B, 2);
        let count = (1..=2)
            .filter(|&i| {
                b2.positive_roots()
                    .iter()
                    .all(|a| b2.form(b2.fundamental_coweight(i), a) <= q(1))
            })
            .count();
        assert_eq!(count, 1);
        assert_eq!(b2.o_star(), vec![1]);
    }
}
