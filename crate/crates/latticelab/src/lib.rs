//! Command-line workbench over `latticelab-core`: configuration, parsers for
//! eta expressions and radical recipes, a parallel verification runner and
//! report formats.

pub mod cli;
pub mod config;
pub mod parse;
pub mod report;
pub mod runner;
pub mod series_json;
