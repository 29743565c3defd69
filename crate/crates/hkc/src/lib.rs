//! Parsing, report rendering and command dispatch for the `hkc` tool.

pub mod parse;
pub mod report;
pub mod run;

pub use parse::{parse_generators, parse_series, parse_series_list, InputError, ParseError};
pub use run::{run_command, Command, Options, Output, OutputMode, RunError};
