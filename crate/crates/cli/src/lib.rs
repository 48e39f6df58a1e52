//! Command-line front end for `hilden-core`: word parsing, reports and SVG rendering.

pub mod commands;
pub mod grammar;
pub mod render;
