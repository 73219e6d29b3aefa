//! Finite Weyl group elements as exact matrices on the ambient space.

use crate::linalg::rational::Rational;
use crate::linalg::RationalMatrix;

use super::system::{RootSystem, Vector};

/// Which descent the greedy reduced-word search takes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    Smallest,
    Largest,
}

/// An element `w` together with a cached reduced word.
///
/// The word `[i_1, ..., i_k]` is listed in order of application, so
/// `w = s_{i_k} ... s_{i_1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: RationalMatrix,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn from_matrix(rs: &RootSystem, matrix: RationalMatrix) -> Self {
        let word = reduced_word_of(rs, &matrix, TieBreak::Smallest);
        Self { matrix, word }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, x: &[Rational]) -> Vector {
        self.matrix.mul_vec(x)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        Self::from_matrix(rs, &self.matrix * &other.matrix)
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let m = self
            .matrix
            .inverse()
            .expect("Weyl group elements are invertible");
        Self::from_matrix(rs, m)
    }

    /// Reduced word under a chosen tie-breaking rule.
    pub fn reduced_word(&self, rs: &RootSystem, tie: TieBreak) -> Vec<usize> {
        reduced_word_of(rs, &self.matrix, tie)
    }

    /// Positive roots sent to negative roots.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<Vector> {
        rs.positive_roots()
            .iter()
            .filter(|a| !rs.is_positive_root(&self.apply(a)))
            .cloned()
            .collect()
    }

    /// `alpha^j = s_{i_1} ... s_{i_{j-1}} (alpha_{i_j})` for the cached word.
    pub fn inversion_sequence(&self, rs: &RootSystem) -> Vec<Vector> {
        inversion_sequence_of(rs, &self.word)
    }
}

/// Inversion sequence of an arbitrary word (reduced or not).
pub fn inversion_sequence_of(rs: &RootSystem, word: &[usize]) -> Vec<Vector> {
    let mut prefix = RationalMatrix::identity(rs.ambient_dim());
    let mut out = Vec::with_capacity(word.len());
    for &i in word {
        out.push(prefix.mul_vec(rs.simple_root(i)));
        prefix = &prefix * &rs.reflection_matrix(rs.simple_root(i));
    }
    out
}

fn reduced_word_of(rs: &RootSystem, matrix: &RationalMatrix, tie: TieBreak) -> Vec<usize> {
    let mut w = matrix.clone();
    let mut word = Vec::new();
    let order: Vec<usize> = match tie {
        TieBreak::Smallest => (1..=rs.rank()).collect(),
        TieBreak::Largest => (1..=rs.rank()).rev().collect(),
    };
    loop {
        let descent = order
            .iter()
            .copied()
            .find(|&i| !rs.is_positive_root(&w.mul_vec(rs.simple_root(i))));
        match descent {
            Some(i) => {
                word.push(i);
                w = &w * &rs.reflection_matrix(rs.simple_root(i));
            }
            None => {
                debug_assert!(w.is_identity());
                return word;
            }
        }
    }
}
