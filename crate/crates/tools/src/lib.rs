//! File formats, seeded verification suites and the command-line front end
//! for `concave-fs-core`.

pub mod cli;
pub mod format;
pub mod sampling;
pub mod verify;
