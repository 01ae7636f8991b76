//! Reports, sweeps and exports behind the `znhg` command.

pub mod export;
pub mod group;
pub mod report;
pub mod sweep;

/// Version tag carried by every JSON document this crate emits.
pub const SCHEMA: &str = "znhg/1";

pub fn schema_tag() -> String {
    SCHEMA.to_string()
}
