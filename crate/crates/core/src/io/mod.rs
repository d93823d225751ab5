//! Definition files, the command dispatcher and report serialization.

pub mod fixtures;
mod json;
mod report;
mod run;
mod spec;

pub use report::{check_json, Format, Report};
pub use run::{run, Command, Options};
pub use spec::{parse_spec, parse_spec_as, serialize_spec, serialize_spec_string, GlobalSpec, SpecFile};

#[cfg(test)]
mod tests;
