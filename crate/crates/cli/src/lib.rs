//! Instance files, analysis reports, seeded fuzzing and theorem suites.

pub mod commands;
pub mod instance;
pub mod suites;
pub mod text;

pub use commands::{Outcome, Report, SCHEMA_VERSION};
pub use instance::{build, load, parse, BuildError, Instance, InstanceFile, ParseError};
pub use suites::{Check, Settings, Status};
