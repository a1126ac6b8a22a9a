//! Command implementations behind the `flatfocal` binary, and the report
//! types its JSON output follows.

pub mod args;
pub mod commands;
pub mod report;
pub mod svg;
