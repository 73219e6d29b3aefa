//! Explicit sl_N modules and lifts of Weyl group elements.

pub mod lift;
pub mod module;

pub use lift::{exp_nilpotent, lift_word, simple_lift, weyl_action_weight_zero, GroupLift};
pub use module::{project_weight, root_indices, WeightModule};
