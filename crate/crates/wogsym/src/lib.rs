//! File formats, reports, worked-example replay and fuzzing on top of
//! `wogsym-core`. The `wogsym` binary is a thin clap layer over
//! [`commands`].

#![forbid(unsafe_code)]

pub mod catalog;
pub mod commands;
pub mod format;
pub mod fuzz;
pub mod report;
