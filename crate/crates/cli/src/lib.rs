//! Configuration, suite execution and reporting for the `kzdyn` command.

pub mod config;
pub mod report;
pub mod run;

pub use config::{ConfigError, Format, Overrides, Suite, SuiteConfig};
pub use report::{emit_report, render};
pub use run::{run_suite, CheckRecord, Status, SuiteResult};
