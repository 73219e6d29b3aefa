//! Operators built from the representation data: the `p`-series, `B` operators,
//! Casimir and R-matrices, fusion matrices, and the sl_2 Verma oracle.

pub mod bbb;
pub mod casimir;
pub mod fusion;
pub mod identities;
pub mod pseries;
pub mod verma;

pub use bbb::{bb_alpha, bb_w, bb_word, EvalContext};
pub use casimir::{omega_matrices, r_matrix, OmegaParts};
pub use fusion::{fusion_hat, fusion_j};
pub use pseries::p_series;
