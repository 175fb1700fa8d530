//! File formats, JSON documents, multi-threaded surveys and the command-line
//! front end for [`orbitcalc_core`].

pub mod cli;
pub mod format;
pub mod json;
pub mod parallel;
