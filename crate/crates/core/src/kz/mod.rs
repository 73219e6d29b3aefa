pub mod cocycle;
pub mod compat;
pub mod det;
pub mod dynamical;
pub mod system;

pub use cocycle::{choose_omega, cocycle_value, CocycleElement};
pub use compat::{check_dyn_dyn_compat, check_kz_dyn_compat, k_eval};
pub use det::det_formula_check;
pub use dynamical::{dyn_operator_sl, DynOperator};
pub use system::{check_kz_flatness, KzSystem, ZPoint};
