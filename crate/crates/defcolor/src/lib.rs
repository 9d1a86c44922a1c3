//! File formats, JSON reports and the command line front end for
//! [`defcolor_core`].

pub mod cli;
pub mod format;
pub mod report;
