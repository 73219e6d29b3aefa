//! Exact comparison of matrix identities with a first-mismatch witness.

use serde::Serialize;

use crate::linalg::RationalMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub witness: Option<Witness>,
}

impl CheckReport {
    pub fn pass() -> Self {
        Self { witness: None }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// Exact equality; shape mismatches are reported at `(rows, cols)`.
    pub fn compare(lhs: &RationalMatrix, rhs: &RationalMatrix) -> Self {
        if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
            return Self {
                witness: Some(Witness {
                    row: lhs.rows(),
                    col: lhs.cols(),
                    lhs: format!("{}x{}", lhs.rows(), lhs.cols()),
                    rhs: format!("{}x{}", rhs.rows(), rhs.cols()),
                }),
            };
        }
        let witness = lhs.first_difference(rhs).map(|(row, col)| Witness {
            row,
            col,
            lhs: lhs[(row, col)].to_string(),
            rhs: rhs[(row, col)].to_string(),
        });
        Self { witness }
    }

    /// Combine several reports, keeping the first failure.
    pub fn all(reports: impl IntoIterator<Item = CheckReport>) -> Self {
        for r in reports {
            if !r.passed() {
                return r;
            }
        }
        Self::pass()
    }
}
