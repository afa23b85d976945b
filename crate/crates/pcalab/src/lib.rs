//! Text formats, the command line and the property probes for
//! `pcalab-core`.

pub mod cli;
pub mod probes;
pub mod text;
