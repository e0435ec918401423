//! File formats, renderers and subcommands behind the `orbitposet` binary.

pub mod commands;
pub mod modelfile;
pub mod render;
